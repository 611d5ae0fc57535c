#pragma once

#include <cstdint>
#include <vector>

#include "cocycle/equations.hpp"
#include "cocycle/group.hpp"
#include "cocycle/repr.hpp"

namespace cocycle {

/// The representation φ: G → SU(2) behind a solution f = χ_φ/2.
struct Witness {
    enum class Kind {
        character_pair,  // φ = χ ⊕ conj(χ) for a 1-dim irrep χ
        su2_irrep,       // φ = π for a 2-dim irrep with trivial determinant
    };
    Kind kind = Kind::character_pair;
    std::size_t irrep_index = 0;
};

const char* to_string(Witness::Kind k);

struct SolutionCertificate {
    GroupFunction f;
    Witness witness;
    Equation equation = Equation::dalembert;
    double residual = 0.0;
};

/// All f with (f, g) solving the Wilson equation, for one nonzero g.
struct WilsonSolutionSpace {
    SolutionCertificate g;
    std::size_t g_index = 0;
    std::vector<GroupFunction> f_basis;  // orthonormal in ℂⁿ
    std::size_t dimension = 0;
    /// dim span{x ↦ φ(x)_ij}; equals `dimension` by the Wilson structure theorem.
    std::size_t coefficient_span_dimension = 0;
};

/// φ for a witness, as a 2-dim unitary representation.
UnitaryRep witness_representation(const Witness& w, const IrrepBasis& basis);
/// χ_φ/2.
GroupFunction witness_function(const Witness& w, const IrrepBasis& basis);
std::size_t coefficient_span_dimension(const UnitaryRep& phi, double tol = kDefaultTol);

/// Every nonzero solution of f(xy) + f(xy⁻¹) = 2f(x)f(y): (χ + conj χ)/2 for
/// each 1-dim irrep χ and χ_π/2 for each 2-dim irrep with trivial
/// determinant, deduplicated by values (first witness kept).
std::vector<SolutionCertificate> solve_dalembert(const IrrepBasis& basis);

/// Same function set as solve_dalembert, checked against the long equation.
std::vector<SolutionCertificate> solve_long(const IrrepBasis& basis);

/// One space per d'Alembert solution g, from the null space of the linear
/// system f(xy) + f(xy⁻¹) − 2f(x)g(y) = 0 over all pairs. The f ≡ 0 case
/// (g arbitrary) is not enumerated.
std::vector<WilsonSolutionSpace> solve_wilson(const IrrepBasis& basis);

struct OracleOptions {
    std::size_t starts = 500;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    int max_iterations = 60;
    /// Adds starts/2 complex-parametrized starts.
    bool complex_sweep = true;
};

struct OracleResult {
    /// Cluster representatives, sorted lexicographically on rounded values.
    std::vector<GroupFunction> solutions;
    std::size_t real_starts = 0;
    std::size_t complex_starts = 0;
    /// Counted per Gauss-Newton run, so a start can contribute twice.
    std::size_t converged = 0;
    std::size_t dropped = 0;
    /// Reruns with the zero root deflated (one per start that hit f = 0).
    std::size_t deflated_runs = 0;
};

/// Damped Gauss–Newton on the exhaustive residual system from seeded random
/// starts in [-2, 2]ⁿ. A start that converges to f = 0 is rerun with the zero
/// root deflated, since on larger groups zero attracts nearly every start.
/// Output is independent of `threads`. Only the d'Alembert and long
/// equations are supported.
OracleResult gauss_newton_oracle(const GroupPtr& g, Equation eq, const OracleOptions& opts = {});

struct MatchReport {
    struct Match {
        std::size_t found_index;
        std::size_t constructed_index;
        double distance;
    };
    std::vector<Match> matches;
    std::vector<std::size_t> trivial_found;  // sup-norm ≤ tol
    std::vector<std::size_t> unmatched_found;
    std::vector<std::size_t> unmatched_constructed;

    bool complete() const { return unmatched_found.empty() && unmatched_constructed.empty(); }
};

MatchReport match_solutions(const std::vector<GroupFunction>& found,
                            const std::vector<SolutionCertificate>& constructed,
                            double tol = 1e-6);

}  // namespace cocycle
