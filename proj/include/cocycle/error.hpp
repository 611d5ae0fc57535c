#pragma once

#include <stdexcept>
#include <string>

namespace cocycle {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input failed a structural check (bad Cayley table, bad function file, ...).
/// The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

#define COCYCLE_DEFINE_ERROR(Name, Base)                                       \
    class Name : public Base {                                                 \
    public:                                                                    \
        explicit Name(const std::string& what) : Base(#Name ": " + what) {}    \
    }

// group_core
COCYCLE_DEFINE_ERROR(InvalidTable, ValidationError);
COCYCLE_DEFINE_ERROR(NotAPermutationRow, ValidationError);
COCYCLE_DEFINE_ERROR(NoIdentity, ValidationError);
COCYCLE_DEFINE_ERROR(MissingInverse, ValidationError);
COCYCLE_DEFINE_ERROR(NotAssociative, ValidationError);
COCYCLE_DEFINE_ERROR(SizeLimit, ValidationError);
COCYCLE_DEFINE_ERROR(UnsupportedParams, ValidationError);

// matrix_kernel
COCYCLE_DEFINE_ERROR(NotHermitian, Error);
COCYCLE_DEFINE_ERROR(NoConvergence, Error);

// repr / fourier
COCYCLE_DEFINE_ERROR(GroupMismatch, ValidationError);
COCYCLE_DEFINE_ERROR(InvalidRepresentation, ValidationError);
COCYCLE_DEFINE_ERROR(DecompositionFailed, Error);
COCYCLE_DEFINE_ERROR(WrongDimension, ValidationError);

// equations
COCYCLE_DEFINE_ERROR(NotRealValued, ValidationError);
COCYCLE_DEFINE_ERROR(SquareIdentityFails, ValidationError);

// lemma
COCYCLE_DEFINE_ERROR(NotIrreducible, ValidationError);
COCYCLE_DEFINE_ERROR(LemmaViolated, Error);

// io
COCYCLE_DEFINE_ERROR(FileNotFound, Error);
COCYCLE_DEFINE_ERROR(BadFormat, ValidationError);

#undef COCYCLE_DEFINE_ERROR

}  // namespace cocycle
