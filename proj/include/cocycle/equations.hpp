#pragma once

#include <utility>

#include "cocycle/group.hpp"
#include "cocycle/linalg.hpp"
#include "cocycle/repr.hpp"

namespace cocycle {

enum class Equation { dalembert, wilson, long_form };

const char* to_string(Equation e);
/// "dalembert", "wilson", "long". Throws ValidationError otherwise.
Equation parse_equation(const std::string& name);

/// Exhaustive residual scan. For single-variable identities the pair is
/// (y, y). Ties keep the lexicographically smallest pair.
struct ResidualReport {
    double max_residual = 0.0;
    std::pair<Element, Element> argmax{0, 0};
    bool satisfied = true;
    double tol = kDefaultTol;
    /// Set when f carried an imaginary part below tol that was dropped.
    bool projected_to_real = false;
};

/// max |f(xy) + f(xy⁻¹) − 2f(x)f(y)|
ResidualReport dalembert_residual(const GroupFunction& f, double tol = kDefaultTol);
/// max |f(xy) + f(xy⁻¹) − 2f(x)g(y)|. Throws GroupMismatch.
ResidualReport wilson_residual(const GroupFunction& f, const GroupFunction& g,
                               double tol = kDefaultTol);
/// max |f(xy) + f(yx) + f(xy⁻¹) + f(y⁻¹x) − 4f(x)f(y)|
ResidualReport long_residual(const GroupFunction& f, double tol = kDefaultTol);

bool is_central(const GroupFunction& f, double tol = kDefaultTol);

/// max_y |2f(y)² − f(y²) − 1|
ResidualReport check_square_identity(const GroupFunction& f, double tol = kDefaultTol);

/// δ_π(y) = π(y) + π(y)⁻¹ − 2f(y)·I. f must be real to tol (NotRealValued);
/// an imaginary part below tol is dropped.
CMatrix delta_operator(const UnitaryRep& rep, const GroupFunction& f, Element y,
                       double tol = kDefaultTol);

/// max_y ‖δ(y)² − δ(y²) + 4f(y)·δ(y)‖_F. Requires check_square_identity(f)
/// to pass at tol, otherwise throws SquareIdentityFails.
ResidualReport verify_delta_square(const UnitaryRep& rep, const GroupFunction& f,
                                   double tol = kDefaultTol);

/// The three annihilation statements for one irrep and its Fourier block,
/// each maximized over y in Frobenius norm:
///   anticommutator  ‖δ(y)·B + B·δ(y)‖
///   square_kills    ‖δ(y)²·B‖
///   delta_kills     ‖δ(y)·B‖
struct AnnihilationReport {
    double anticommutator = 0.0;
    double square_kills = 0.0;
    double delta_kills = 0.0;
    double self_adjointness = 0.0;  // max_y ‖δ(y) − δ(y)†‖
};
AnnihilationReport annihilation_chain(const UnitaryRep& rep, const GroupFunction& f,
                                      const CMatrix& fourier_block, double tol = kDefaultTol);

}  // namespace cocycle
