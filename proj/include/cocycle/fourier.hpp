#pragma once

#include <vector>

#include "cocycle/group.hpp"
#include "cocycle/linalg.hpp"
#include "cocycle/repr.hpp"

namespace cocycle {

/// f̂(π_k) for every irrep π_k of a basis; blocks[k] is d_k × d_k.
struct FourierCoefficients {
    const IrrepBasis* basis = nullptr;
    std::vector<CMatrix> blocks;
};

/// f̂(π) = d_π · (1/n) Σ_x f(x)·π(x)⁻¹, with π(x)⁻¹ taken as π(x)†.
/// Throws GroupMismatch. The basis must outlive the result.
FourierCoefficients transform(const GroupFunction& f, const IrrepBasis& basis);

/// Single block f̂(π) for an arbitrary unitary representation.
CMatrix transform_block(const GroupFunction& f, const UnitaryRep& rep);

/// f(x) = Σ_π tr(f̂(π)·π(x)).
GroupFunction inverse(const FourierCoefficients& coeffs);

enum class Side { left, right };

/// Left: (L_y f)(x) = f(y⁻¹x). Right: (R_y f)(x) = f(xy).
GroupFunction translate(const GroupFunction& f, Element y, Side side);

}  // namespace cocycle
