#include "cocycle/repr.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "cocycle/error.hpp"

namespace cocycle {

UnitaryRep UnitaryRep::make(GroupPtr group, std::vector<CMatrix> matrices, double tol) {
    if (!group) throw InvalidRepresentation("null group");
    if (matrices.size() != group->order()) {
        throw InvalidRepresentation("expected " + std::to_string(group->order()) +
                                    " matrices, got " + std::to_string(matrices.size()));
    }
    const std::size_t d = matrices.empty() ? 0 : matrices[0].rows();
    if (d == 0) throw InvalidRepresentation("zero-dimensional representation");
    for (std::size_t x = 0; x < matrices.size(); ++x) {
        if (matrices[x].rows() != d || matrices[x].cols() != d) {
            throw InvalidRepresentation("matrix " + std::to_string(x) + " is not " +
                                        std::to_string(d) + "x" + std::to_string(d));
        }
    }
    UnitaryRep rep = make_unchecked(std::move(group), std::move(matrices));
    const Group& g = *rep.group_;
    if (frobenius_distance(rep(g.identity()), CMatrix::identity(d)) > tol) {
        throw InvalidRepresentation("identity does not map to I");
    }
    for (Element x = 0; x < g.order(); ++x) {
        if (!is_unitary(rep(x), tol)) {
            throw InvalidRepresentation("matrix for element " + std::to_string(x) +
                                        " is not unitary");
        }
    }
    for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) {
            if (frobenius_distance(rep(x) * rep(y), rep(g.mul(x, y))) > tol) {
                throw InvalidRepresentation("homomorphism law fails at (" + std::to_string(x) +
                                            "," + std::to_string(y) + ")");
            }
        }
    }
    return rep;
}

UnitaryRep UnitaryRep::make_unchecked(GroupPtr group, std::vector<CMatrix> matrices) {
    UnitaryRep rep;
    rep.group_ = std::move(group);
    rep.dim_ = matrices.empty() ? 0 : matrices[0].rows();
    rep.matrices_ = std::move(matrices);
    return rep;
}

double UnitaryRep::invariant_error() const {
    const Group& g = *group_;
    double err = frobenius_distance(matrices_[g.identity()], CMatrix::identity(dim_));
    for (Element x = 0; x < g.order(); ++x) {
        err = std::max(err, frobenius_distance(matrices_[x].adjoint() * matrices_[x],
                                               CMatrix::identity(dim_)));
        for (Element y = 0; y < g.order(); ++y) {
            err = std::max(err, frobenius_distance(matrices_[x] * matrices_[y],
                                                   matrices_[g.mul(x, y)]));
        }
    }
    return err;
}

UnitaryRep regular_representation(const GroupPtr& g) {
    const std::size_t n = g->order();
    std::vector<CMatrix> mats;
    mats.reserve(n);
    for (Element y = 0; y < n; ++y) {
        CMatrix m(n, n);
        for (Element z = 0; z < n; ++z) m(g->mul(z, g->inv(y)), z) = 1.0;
        mats.push_back(std::move(m));
    }
    return UnitaryRep::make_unchecked(g, std::move(mats));
}

namespace {

// Restriction of the right regular representation to span(q):
// ρ(y) = q†·R(y)·q, using that row w of R(y)·q is row w·y of q.
std::vector<CMatrix> restrict_regular(const Group& g, const CMatrix& q) {
    const std::size_t n = g.order(), k = q.cols();
    std::vector<CMatrix> out;
    out.reserve(n);
    for (Element y = 0; y < n; ++y) {
        CMatrix m(k, k);
        for (std::size_t w = 0; w < n; ++w) {
            const std::size_t src = g.mul(w, y);
            for (std::size_t i = 0; i < k; ++i) {
                const Complex a = std::conj(q(w, i));
                if (a == Complex{}) continue;
                for (std::size_t j = 0; j < k; ++j) m(i, j) += a * q(src, j);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

double character_norm_sq(const std::vector<CMatrix>& mats) {
    double s = 0.0;
    for (const auto& m : mats) s += std::norm(m.trace());
    return s / static_cast<double>(mats.size());
}

CMatrix random_hermitian(std::size_t k, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix h(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        h(i, i) = normal(rng);
        for (std::size_t j = i + 1; j < k; ++j) {
            const double re = normal(rng), im = normal(rng);
            h(i, j) = Complex(re, im);
            h(j, i) = Complex(re, -im);
        }
    }
    return h;
}

// Lexicographic order on character values: larger real part first, then
// larger imaginary part, with differences under 1e-6 treated as ties.
bool character_before(const GroupFunction& a, const GroupFunction& b) {
    constexpr double eps = 1e-6;
    for (std::size_t x = 0; x < a.size(); ++x) {
        const double dr = a[x].real() - b[x].real();
        if (std::abs(dr) > eps) return dr > 0;
        const double di = a[x].imag() - b[x].imag();
        if (std::abs(di) > eps) return di > 0;
    }
    return false;
}

std::optional<IrrepBasis> try_decompose(const GroupPtr& g, std::mt19937_64& rng,
                                        const DecomposeOptions& opts) {
    const std::size_t n = g->order();
    constexpr int kSplitAttempts = 8;

    std::vector<CMatrix> pending{CMatrix::identity(n)};
    std::vector<std::vector<CMatrix>> blocks;
    while (!pending.empty()) {
        CMatrix q = std::move(pending.back());
        pending.pop_back();
        std::vector<CMatrix> rho = restrict_regular(*g, q);
        if (std::abs(character_norm_sq(rho) - 1.0) <= 1e-8) {
            blocks.push_back(std::move(rho));
            continue;
        }

        const std::size_t k = q.cols();
        bool split = false;
        for (int attempt = 0; attempt < kSplitAttempts && !split; ++attempt) {
            const CMatrix h = random_hermitian(k, rng);
            CMatrix t(k, k);
            for (const auto& r : rho) t += r * h * r.adjoint();
            t *= 1.0 / static_cast<double>(n);
            const EigenResult eig = hermitian_eig(t);
            double scale = 1.0;
            for (double v : eig.values) scale = std::max(scale, std::abs(v));
            const auto runs = cluster_sorted(eig.values, opts.cluster_gap * scale);
            if (runs.size() < 2) continue;
            split = true;
            for (const auto& [b, e] : runs) {
                pending.push_back(orthonormalize_columns(q * eig.vectors.columns(b, e - b)));
            }
        }
        if (!split) return std::nullopt;
    }

    IrrepBasis basis{g, {}};
    std::vector<GroupFunction> chars;
    for (auto& mats : blocks) {
        UnitaryRep rep = UnitaryRep::make_unchecked(g, std::move(mats));
        GroupFunction chi = character(rep);
        const bool seen = std::any_of(chars.begin(), chars.end(), [&](const GroupFunction& c) {
            return sup_distance(c, chi) <= 1e-8;
        });
        if (seen) continue;
        chars.push_back(std::move(chi));
        basis.irreps.push_back(std::move(rep));
    }

    std::vector<std::size_t> order(basis.irreps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const std::size_t da = basis.irreps[a].dim(), db = basis.irreps[b].dim();
        if (da != db) return da < db;
        return character_before(chars[a], chars[b]);
    });
    std::vector<UnitaryRep> sorted;
    for (std::size_t i : order) sorted.push_back(std::move(basis.irreps[i]));
    basis.irreps = std::move(sorted);

    std::size_t dim_sq = 0;
    for (const auto& rep : basis.irreps) dim_sq += rep.dim() * rep.dim();
    if (dim_sq != n) return std::nullopt;
    if (basis.irreps.size() != conjugacy_classes(*g).size()) return std::nullopt;
    for (const auto& rep : basis.irreps) {
        if (rep.invariant_error() > 1e-9) return std::nullopt;
    }
    if (schur_orthogonality_error(basis) > 1e-8) return std::nullopt;
    return basis;
}

}  // namespace

IrrepBasis decompose_irreps(const GroupPtr& g, std::uint64_t seed, DecomposeOptions opts) {
    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(attempt)};
        std::mt19937_64 rng(seq);
        try {
            if (auto basis = try_decompose(g, rng, opts)) return std::move(*basis);
        } catch (const NoConvergence&) {
            // reseed
        }
    }
    throw DecompositionFailed("invariant checks failed after " + std::to_string(opts.retries) +
                              " reseeds");
}

GroupFunction character(const UnitaryRep& rep) {
    std::vector<Complex> v(rep.group()->order());
    for (Element x = 0; x < v.size(); ++x) v[x] = rep(x).trace();
    return {rep.group(), std::move(v)};
}

bool is_irreducible(const UnitaryRep& rep, double tol) {
    return std::abs(character_norm_sq(rep.matrices()) - 1.0) <= tol;
}

bool are_equivalent(const UnitaryRep& a, const UnitaryRep& b, double tol) {
    require_same_group(a.group(), b.group(), "are_equivalent");
    if (a.dim() != b.dim()) return false;
    return sup_distance(character(a), character(b)) <= tol;
}

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
    require_same_group(a.group(), b.group(), "direct_sum");
    std::vector<CMatrix> mats;
    for (Element x = 0; x < a.group()->order(); ++x) mats.push_back(block_diagonal(a(x), b(x)));
    return UnitaryRep::make_unchecked(a.group(), std::move(mats));
}

UnitaryRep conjugate_rep(const UnitaryRep& rep) {
    std::vector<CMatrix> mats;
    for (const auto& m : rep.matrices()) mats.push_back(m.conj());
    return UnitaryRep::make_unchecked(rep.group(), std::move(mats));
}

UnitaryRep conjugate_by(const UnitaryRep& rep, const CMatrix& u) {
    const CMatrix ua = u.adjoint();
    std::vector<CMatrix> mats;
    for (const auto& m : rep.matrices()) mats.push_back(ua * m * u);
    return UnitaryRep::make_unchecked(rep.group(), std::move(mats));
}

bool su2_eligible(const UnitaryRep& rep, double tol) {
    if (rep.dim() != 2) {
        throw WrongDimension("SU(2) criterion needs dim 2, got " + std::to_string(rep.dim()));
    }
    return std::all_of(rep.matrices().begin(), rep.matrices().end(), [&](const CMatrix& m) {
        return std::abs(m.determinant() - 1.0) <= tol;
    });
}

UnitaryRep su2_normalize(const UnitaryRep& rep, double tol) {
    if (!su2_eligible(rep, tol)) {
        throw InvalidRepresentation("determinant character is not trivial");
    }
    std::vector<CMatrix> mats;
    for (const auto& m : rep.matrices()) {
        const Complex det = m.determinant();
        mats.push_back(std::sqrt(std::conj(det) / std::abs(det)) * m);
    }
    return UnitaryRep::make(rep.group(), std::move(mats), tol);
}

double schur_orthogonality_error(const IrrepBasis& basis) {
    const std::size_t n = basis.group->order();
    double err = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const UnitaryRep& pa = basis[a];
        for (std::size_t b = a; b < basis.size(); ++b) {
            const UnitaryRep& pb = basis[b];
            for (std::size_t i = 0; i < pa.dim(); ++i)
                for (std::size_t j = 0; j < pa.dim(); ++j)
                    for (std::size_t k = 0; k < pb.dim(); ++k)
                        for (std::size_t l = 0; l < pb.dim(); ++l) {
                            Complex s = 0.0;
                            for (Element x = 0; x < n; ++x) s += pa(x)(i, j) * std::conj(pb(x)(k, l));
                            s /= static_cast<double>(n);
                            const double expected =
                                (a == b && i == k && j == l) ? 1.0 / static_cast<double>(pa.dim())
                                                             : 0.0;
                            err = std::max(err, std::abs(s - expected));
                        }
        }
    }
    return err;
}

GroupFunction matrix_coefficient(const UnitaryRep& rep, std::size_t i, std::size_t j) {
    std::vector<Complex> v(rep.group()->order());
    for (Element x = 0; x < v.size(); ++x) v[x] = rep(x)(i, j);
    return {rep.group(), std::move(v)};
}

}  // namespace cocycle
