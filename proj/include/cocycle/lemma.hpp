#pragma once

#include <vector>

#include "cocycle/linalg.hpp"
#include "cocycle/repr.hpp"

namespace cocycle {

enum class LemmaConclusion { dim1_character, dim2_su2, not_applicable };

const char* to_string(LemmaConclusion c);

struct LemmaReport {
    std::vector<std::vector<Complex>> witnesses;
    bool hypothesis_holds = false;
    LemmaConclusion conclusion = LemmaConclusion::not_applicable;
};

/// Maximal subspaces W such that every S(x) = π(x) + π(x)† acts on W as a
/// scalar (the scalar may depend on x). Each is returned as a matrix with
/// orthonormal columns.
std::vector<CMatrix> common_quasi_eigenspaces(const UnitaryRep& rep, double tol = kDefaultTol);

/// Unit vectors v with S(x)v ∈ ℂv for all x: an orthonormal basis of each
/// common quasi-eigenspace, concatenated.
std::vector<std::vector<Complex>> common_quasi_eigenvectors(const UnitaryRep& rep,
                                                            double tol = kDefaultTol);

/// Runs the search on an irreducible π and checks the dichotomy: a witness
/// forces dim 1, or dim 2 with trivial determinant. Throws NotIrreducible
/// for reducible input and LemmaViolated if the dichotomy fails.
LemmaReport verify_small_dimension_lemma(const UnitaryRep& rep, double tol = kDefaultTol);

}  // namespace cocycle
