#include "cocycle/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <thread>

#include "cocycle/error.hpp"

namespace cocycle {

const char* to_string(Witness::Kind k) {
    return k == Witness::Kind::character_pair ? "character_pair" : "su2_irrep";
}

UnitaryRep witness_representation(const Witness& w, const IrrepBasis& basis) {
    const UnitaryRep& pi = basis.irreps.at(w.irrep_index);
    if (w.kind == Witness::Kind::character_pair) return direct_sum(pi, conjugate_rep(pi));
    return pi;
}

GroupFunction witness_function(const Witness& w, const IrrepBasis& basis) {
    return 0.5 * character(witness_representation(w, basis));
}

std::size_t coefficient_span_dimension(const UnitaryRep& phi, double tol) {
    const std::size_t n = phi.group()->order(), d = phi.dim();
    CMatrix coeffs(n, d * d);
    for (Element x = 0; x < n; ++x)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) coeffs(x, i * d + j) = phi(x)(i, j);
    return numerical_rank(coeffs, tol);
}

namespace {

constexpr double kDedupTol = 1e-9;

std::vector<SolutionCertificate> constructive_solutions(const IrrepBasis& basis, Equation eq) {
    std::vector<Witness> witnesses;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k].dim() == 1) witnesses.push_back({Witness::Kind::character_pair, k});
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis[k].dim() == 2 && su2_eligible(basis[k]))
            witnesses.push_back({Witness::Kind::su2_irrep, k});

    std::vector<SolutionCertificate> out;
    for (const Witness& w : witnesses) {
        GroupFunction f = witness_function(w, basis);
        // χ_φ is real for φ in SU(2); drop rounding residue.
        if (f.max_imag() <= kDedupTol) f = f.real_part();
        const bool dup = std::any_of(out.begin(), out.end(), [&](const SolutionCertificate& c) {
            return sup_distance(c.f, f) <= kDedupTol;
        });
        if (dup) continue;
        const double residual = eq == Equation::long_form ? long_residual(f).max_residual
                                                          : dalembert_residual(f).max_residual;
        out.push_back({std::move(f), w, eq, residual});
    }
    return out;
}

}  // namespace

std::vector<SolutionCertificate> solve_dalembert(const IrrepBasis& basis) {
    return constructive_solutions(basis, Equation::dalembert);
}

std::vector<SolutionCertificate> solve_long(const IrrepBasis& basis) {
    return constructive_solutions(basis, Equation::long_form);
}

std::vector<WilsonSolutionSpace> solve_wilson(const IrrepBasis& basis) {
    const Group& grp = *basis.group;
    const std::size_t n = grp.order();
    std::vector<WilsonSolutionSpace> out;
    auto gs = solve_dalembert(basis);
    for (std::size_t gi = 0; gi < gs.size(); ++gi) {
        const GroupFunction& g = gs[gi].f;
        CMatrix system(n * n, n);
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
                const std::size_t row = x * n + y;
                system(row, grp.mul(x, y)) += 1.0;
                system(row, grp.mul(x, grp.inv(y))) += 1.0;
                system(row, x) -= 2.0 * g[y];
            }
        }
        const CMatrix kernel = null_space(system);

        WilsonSolutionSpace space;
        space.g = gs[gi];
        space.g.equation = Equation::wilson;
        space.g_index = gi;
        space.dimension = kernel.cols();
        for (std::size_t c = 0; c < kernel.cols(); ++c)
            space.f_basis.emplace_back(basis.group, kernel.column(c));
        space.coefficient_span_dimension =
            coefficient_span_dimension(witness_representation(gs[gi].witness, basis));
        out.push_back(std::move(space));
    }
    return out;
}

namespace {

// One real row of the residual system: value and sparse gradient.
struct Row {
    double value;
    std::vector<std::pair<std::size_t, double>> grad;
};

struct Term {
    Element z;
    Complex c;
};

// Complex residual at pair (x, y) and its holomorphic gradient terms.
Complex pair_residual(const Group& g, Equation eq, std::span<const Complex> f, Element x,
                      Element y, std::vector<Term>& terms) {
    terms.clear();
    const Element yi = g.inv(y);
    if (eq == Equation::dalembert) {
        const Element a = g.mul(x, y), b = g.mul(x, yi);
        terms.push_back({a, 1.0});
        terms.push_back({b, 1.0});
        terms.push_back({x, -2.0 * f[y]});
        terms.push_back({y, -2.0 * f[x]});
        return f[a] + f[b] - 2.0 * f[x] * f[y];
    }
    const Element a = g.mul(x, y), b = g.mul(y, x), c = g.mul(x, yi), d = g.mul(yi, x);
    terms.push_back({a, 1.0});
    terms.push_back({b, 1.0});
    terms.push_back({c, 1.0});
    terms.push_back({d, 1.0});
    terms.push_back({x, -4.0 * f[y]});
    terms.push_back({y, -4.0 * f[x]});
    return f[a] + f[b] + f[c] + f[d] - 4.0 * f[x] * f[y];
}

// Parameter vector u holds Re f (real mode) or [Re f; Im f] (complex mode).
std::vector<Complex> unpack(std::span<const double> u, std::size_t n, bool complex_mode) {
    std::vector<Complex> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = complex_mode ? Complex(u[i], u[n + i]) : u[i];
    return f;
}

std::vector<Row> build_rows(const Group& g, Equation eq, std::span<const double> u,
                            bool complex_mode) {
    const std::size_t n = g.order();
    const std::vector<Complex> f = unpack(u, n, complex_mode);
    std::vector<Row> rows;
    rows.reserve(complex_mode ? 2 * n * n : n * n);
    std::vector<Term> terms;
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            const Complex r = pair_residual(g, eq, f, x, y, terms);
            Row re{r.real(), {}};
            for (const auto& t : terms) re.grad.emplace_back(t.z, t.c.real());
            if (complex_mode) {
                for (const auto& t : terms) re.grad.emplace_back(n + t.z, -t.c.imag());
                Row im{r.imag(), {}};
                for (const auto& t : terms) im.grad.emplace_back(t.z, t.c.imag());
                for (const auto& t : terms) im.grad.emplace_back(n + t.z, t.c.real());
                rows.push_back(std::move(re));
                rows.push_back(std::move(im));
            } else {
                rows.push_back(std::move(re));
            }
        }
    }
    return rows;
}

double residual_sq(const std::vector<Row>& rows) {
    double s = 0.0;
    for (const auto& r : rows) s += r.value * r.value;
    return s;
}

double residual_max(const std::vector<Row>& rows) {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, std::abs(r.value));
    return m;
}

// Solves (A + mu·I)x = b for symmetric positive semidefinite A, raising mu
// until the Cholesky factorization succeeds.
std::vector<double> regularized_solve(std::vector<double> a, std::vector<double> b,
                                      std::size_t p) {
    double diag_max = 0.0;
    for (std::size_t i = 0; i < p; ++i) diag_max = std::max(diag_max, a[i * p + i]);
    double mu = 1e-14 * std::max(1.0, diag_max);
    for (int attempt = 0; attempt < 12; ++attempt, mu *= 100.0) {
        std::vector<double> l(a);
        for (std::size_t i = 0; i < p; ++i) l[i * p + i] += mu;
        bool ok = true;
        for (std::size_t j = 0; j < p && ok; ++j) {
            double s = l[j * p + j];
            for (std::size_t k = 0; k < j; ++k) s -= l[j * p + k] * l[j * p + k];
            if (s <= 0.0) {
                ok = false;
                break;
            }
            const double ljj = std::sqrt(s);
            l[j * p + j] = ljj;
            for (std::size_t i = j + 1; i < p; ++i) {
                double t = l[i * p + j];
                for (std::size_t k = 0; k < j; ++k) t -= l[i * p + k] * l[j * p + k];
                l[i * p + j] = t / ljj;
            }
        }
        if (!ok) continue;
        std::vector<double> x(b);
        for (std::size_t i = 0; i < p; ++i) {
            for (std::size_t k = 0; k < i; ++k) x[i] -= l[i * p + k] * x[k];
            x[i] /= l[i * p + i];
        }
        for (std::size_t i = p; i-- > 0;) {
            for (std::size_t k = i + 1; k < p; ++k) x[i] -= l[k * p + i] * x[k];
            x[i] /= l[i * p + i];
        }
        return x;
    }
    return std::vector<double>(p, 0.0);
}

constexpr double kResidualConverged = 1e-12;
constexpr double kStepConverged = 1e-13;
constexpr double kAccept = 1e-10;
constexpr double kClusterRadius = 1e-6;

constexpr double kDeflationShift = 0.1;

// Deflation of the zero root: the iteration runs on m(u)·r(u) with
// m = 1/|u|² + shift. Nonzero roots are unchanged; near u = 0 the scaled
// residual blows up, so starts that plain Gauss-Newton pulls into the (very
// wide) basin of zero are pushed toward the nonzero solutions instead.
struct Deflation {
    double m = 1.0;
    std::vector<double> grad;  // ∇m

    static Deflation at(std::span<const double> u, bool on) {
        Deflation d;
        if (!on) return d;
        double q = 0.0;
        for (double v : u) q += v * v;
        q = std::max(q, 1e-300);
        d.m = 1.0 / q + kDeflationShift;
        d.grad.resize(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) d.grad[i] = -2.0 * u[i] / (q * q);
        return d;
    }
};

double objective(const std::vector<Row>& rows, const Deflation& d) {
    return d.m * d.m * residual_sq(rows);
}

struct StartOutcome {
    std::vector<double> u;
    double residual;  // max |r|, undeflated
};

StartOutcome gauss_newton(const Group& g, Equation eq, std::vector<double> u, bool complex_mode,
                          bool deflate, int max_iterations) {
    const std::size_t p = u.size();
    std::vector<Row> rows = build_rows(g, eq, u, complex_mode);
    Deflation defl = Deflation::at(u, deflate);
    double current = objective(rows, defl);
    for (int iter = 0; iter < max_iterations; ++iter) {
        if (residual_max(rows) < kResidualConverged) break;
        // J^T J and J^T r for the undeflated system, then the rank-one
        // corrections for J_d = m·J + r·∇mᵀ.
        std::vector<double> jtj(p * p, 0.0), jtr(p, 0.0);
        for (const auto& r : rows) {
            for (const auto& [i, gi] : r.grad) {
                jtr[i] += gi * r.value;
                for (const auto& [j, gj] : r.grad) jtj[i * p + j] += gi * gj;
            }
        }
        std::vector<double> rhs(p);
        if (deflate) {
            const double m = defl.m, rr = residual_sq(rows);
            const auto& dm = defl.grad;
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t j = 0; j < p; ++j) {
                    jtj[i * p + j] = m * m * jtj[i * p + j] + m * (jtr[i] * dm[j] + dm[i] * jtr[j]) +
                                     rr * dm[i] * dm[j];
                }
            }
            for (std::size_t i = 0; i < p; ++i) rhs[i] = -m * (m * jtr[i] + dm[i] * rr);
        } else {
            for (std::size_t i = 0; i < p; ++i) rhs[i] = -jtr[i];
        }
        const std::vector<double> step = regularized_solve(std::move(jtj), std::move(rhs), p);

        double alpha = 1.0;
        bool improved = false;
        std::vector<double> trial(p);
        std::vector<Row> trial_rows;
        Deflation trial_defl;
        for (int halving = 0; halving < 40; ++halving, alpha *= 0.5) {
            for (std::size_t i = 0; i < p; ++i) trial[i] = u[i] + alpha * step[i];
            trial_rows = build_rows(g, eq, trial, complex_mode);
            trial_defl = Deflation::at(trial, deflate);
            if (objective(trial_rows, trial_defl) < current) {
                improved = true;
                break;
            }
        }
        if (!improved) break;
        double step_max = 0.0;
        for (std::size_t i = 0; i < p; ++i) step_max = std::max(step_max, std::abs(alpha * step[i]));
        u = trial;
        rows = std::move(trial_rows);
        defl = std::move(trial_defl);
        current = objective(rows, defl);
        if (step_max < kStepConverged) break;
    }
    return {std::move(u), residual_max(rows)};
}

struct StartResult {
    std::optional<std::vector<Complex>> f;
    bool deflated = false;
};

// Plain Gauss-Newton first; a start that lands on f = 0 is rerun from the
// same point with the zero root deflated. Both runs are kept if they
// converge, so the zero solution is still reported.
std::vector<StartResult> run_start(const Group& g, Equation eq, const std::vector<double>& u0,
                                   bool complex_mode, int max_iterations) {
    std::vector<StartResult> out;
    const StartOutcome plain = gauss_newton(g, eq, u0, complex_mode, false, max_iterations);
    if (plain.residual >= kAccept) {
        out.push_back({std::nullopt, false});
        return out;
    }
    out.push_back({unpack(plain.u, g.order(), complex_mode), false});
    double size = 0.0;
    for (double v : plain.u) size = std::max(size, std::abs(v));
    if (size > kClusterRadius) return out;

    const StartOutcome defl = gauss_newton(g, eq, u0, complex_mode, true, max_iterations);
    if (defl.residual < kAccept) out.push_back({unpack(defl.u, g.order(), complex_mode), true});
    else out.push_back({std::nullopt, true});
    return out;
}

std::vector<double> random_start(std::size_t p, std::uint64_t seed, std::size_t index,
                                 std::uint32_t sweep) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                      sweep};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> u(p);
    for (auto& v : u) v = dist(rng);
    return u;
}

// Lexicographic on values rounded to the clustering grid.
bool rounded_less(const GroupFunction& a, const GroupFunction& b) {
    auto key = [](double v) { return std::llround(v / kClusterRadius); };
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto ar = key(a[i].real()), br = key(b[i].real());
        if (ar != br) return ar < br;
        const auto ai = key(a[i].imag()), bi = key(b[i].imag());
        if (ai != bi) return ai < bi;
    }
    return false;
}

}  // namespace

OracleResult gauss_newton_oracle(const GroupPtr& g, Equation eq, const OracleOptions& opts) {
    if (eq == Equation::wilson) {
        throw ValidationError("gauss_newton_oracle supports the dalembert and long equations");
    }
    if (opts.starts < 1) throw ValidationError("gauss_newton_oracle needs starts >= 1");
    const std::size_t n = g->order();

    struct Job {
        bool complex_mode;
        std::size_t index;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < opts.starts; ++i) jobs.push_back({false, i});
    const std::size_t complex_starts = opts.complex_sweep ? opts.starts / 2 : 0;
    for (std::size_t i = 0; i < complex_starts; ++i) jobs.push_back({true, i});

    std::vector<std::vector<StartResult>> results(jobs.size());
    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t j = begin; j < jobs.size(); j += stride) {
            const Job& job = jobs[j];
            const std::size_t p = job.complex_mode ? 2 * n : n;
            results[j] = run_start(*g, eq, random_start(p, opts.seed, job.index, job.complex_mode),
                                   job.complex_mode, opts.max_iterations);
        }
    };
    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }

    OracleResult out;
    out.real_starts = opts.starts;
    out.complex_starts = complex_starts;
    for (auto& job_results : results) {
        for (auto& r : job_results) {
            if (r.deflated) ++out.deflated_runs;
            if (!r.f) {
                ++out.dropped;
                continue;
            }
            ++out.converged;
            GroupFunction f(g, std::move(*r.f));
            const bool seen = std::any_of(out.solutions.begin(), out.solutions.end(),
                                          [&](const GroupFunction& s) {
                                              return sup_distance(s, f) <= kClusterRadius;
                                          });
            if (!seen) out.solutions.push_back(std::move(f));
        }
    }
    std::stable_sort(out.solutions.begin(), out.solutions.end(), rounded_less);
    return out;
}

MatchReport match_solutions(const std::vector<GroupFunction>& found,
                            const std::vector<SolutionCertificate>& constructed, double tol) {
    MatchReport report;
    std::vector<bool> hit(constructed.size(), false);
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (found[i].sup_norm() <= tol) {
            report.trivial_found.push_back(i);
            continue;
        }
        std::size_t best = constructed.size();
        double best_dist = 0.0;
        for (std::size_t k = 0; k < constructed.size(); ++k) {
            const double d = sup_distance(found[i], constructed[k].f);
            if (best == constructed.size() || d < best_dist) {
                best = k;
                best_dist = d;
            }
        }
        if (best < constructed.size() && best_dist <= tol) {
            report.matches.push_back({i, best, best_dist});
            hit[best] = true;
        } else {
            report.unmatched_found.push_back(i);
        }
    }
    for (std::size_t k = 0; k < constructed.size(); ++k)
        if (!hit[k]) report.unmatched_constructed.push_back(k);
    return report;
}

}  // namespace cocycle
