#pragma once

#include <cstdint>
#include <vector>

#include "cocycle/group.hpp"
#include "cocycle/linalg.hpp"

namespace cocycle {

/// A unitary representation x ↦ π(x) ∈ U(d) of a finite group.
class UnitaryRep {
public:
    UnitaryRep() = default;

    /// Checks identity, unitarity and the homomorphism law to `tol`;
    /// throws InvalidRepresentation naming the first failure.
    static UnitaryRep make(GroupPtr group, std::vector<CMatrix> matrices, double tol = kDefaultTol);
    /// Skips validation. For callers that construct representations by
    /// a procedure that preserves the invariants.
    static UnitaryRep make_unchecked(GroupPtr group, std::vector<CMatrix> matrices);

    const GroupPtr& group() const { return group_; }
    std::size_t dim() const { return dim_; }
    const CMatrix& operator()(Element x) const { return matrices_[x]; }
    const std::vector<CMatrix>& matrices() const { return matrices_; }
    /// π(x)⁻¹, computed as the adjoint.
    CMatrix inverse_at(Element x) const { return matrices_[x].adjoint(); }

    /// Largest violation among the three invariants (identity, unitarity,
    /// homomorphism), in Frobenius norm.
    double invariant_error() const;

private:
    GroupPtr group_;
    std::size_t dim_ = 0;
    std::vector<CMatrix> matrices_;
};

/// Pairwise inequivalent irreducible unitary representations, one concrete
/// representative per equivalence class. Ordered by dimension; among equal
/// dimensions by character values (trivial representation first).
struct IrrepBasis {
    GroupPtr group;
    std::vector<UnitaryRep> irreps;

    std::size_t size() const { return irreps.size(); }
    const UnitaryRep& operator[](std::size_t k) const { return irreps[k]; }
};

/// Right regular representation: R(y)e_z = e_{z·y⁻¹}, i.e. (R_y f)(x) = f(xy).
UnitaryRep regular_representation(const GroupPtr& g);

struct DecomposeOptions {
    double cluster_gap = 1e-6;  // relative eigenvalue gap separating T-eigenspaces
    int retries = 5;
};

/// Splits the regular representation into irreducible blocks by repeatedly
/// diagonalizing group-averaged random Hermitian matrices, then keeps one
/// block per character. Deterministic given `seed`. Throws
/// DecompositionFailed once the retry budget is exhausted.
IrrepBasis decompose_irreps(const GroupPtr& g, std::uint64_t seed, DecomposeOptions opts = {});

GroupFunction character(const UnitaryRep& rep);

/// (1/n) Σ |χ(x)|² = 1 to tol.
bool is_irreducible(const UnitaryRep& rep, double tol = 1e-8);
/// Characters agree pointwise to tol. Throws GroupMismatch.
bool are_equivalent(const UnitaryRep& a, const UnitaryRep& b, double tol = 1e-8);

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b);
UnitaryRep conjugate_rep(const UnitaryRep& rep);
/// x ↦ U†·π(x)·U for a unitary U.
UnitaryRep conjugate_by(const UnitaryRep& rep, const CMatrix& u);

/// A 2-dimensional unitary representation is conjugate into SU(2) iff its
/// determinant character is trivial. Throws WrongDimension unless dim = 2.
bool su2_eligible(const UnitaryRep& rep, double tol = 1e-8);

/// Multiplies each π(x) by the phase det(π(x))^{-1/2} so every matrix has
/// determinant exactly 1. Requires su2_eligible; throws InvalidRepresentation
/// if the result stops being a homomorphism to tol.
UnitaryRep su2_normalize(const UnitaryRep& rep, double tol = 1e-8);

/// max over all pairs of matrix coefficients of
/// |⟨π_ij, ρ_kl⟩ − δ_πρ δ_ik δ_jl / d_π| with ⟨a,b⟩ = (1/n) Σ a(x)·conj(b(x)).
double schur_orthogonality_error(const IrrepBasis& basis);

/// Matrix-coefficient function x ↦ π(x)_{ij}.
GroupFunction matrix_coefficient(const UnitaryRep& rep, std::size_t i, std::size_t j);

}  // namespace cocycle
