#include "cocycle/lemma.hpp"

#include <algorithm>

#include "cocycle/error.hpp"

namespace cocycle {

const char* to_string(LemmaConclusion c) {
    switch (c) {
        case LemmaConclusion::dim1_character: return "dim1_character";
        case LemmaConclusion::dim2_su2: return "dim2_su2";
        case LemmaConclusion::not_applicable: return "not_applicable";
    }
    return "?";
}

namespace {

// Spectrum of S(x) lies in [-2, 2], so an absolute gap separates eigenvalues.
constexpr double kEigenGap = 1e-7;
// Rank threshold when intersecting two subspaces.
constexpr double kIntersectTol = 1e-8;

std::vector<CMatrix> eigenspaces(const CMatrix& s) {
    const EigenResult eig = hermitian_eig(s);
    std::vector<CMatrix> out;
    for (const auto& [b, e] : cluster_sorted(eig.values, kEigenGap)) {
        out.push_back(eig.vectors.columns(b, e - b));
    }
    return out;
}

// W ∩ E for matrices with orthonormal columns.
CMatrix intersect(const CMatrix& w, const CMatrix& e) {
    const CMatrix residual = w - e * (e.adjoint() * w);
    const CMatrix coords = null_space(residual, kIntersectTol);
    if (coords.cols() == 0) return coords;
    return orthonormalize_columns(w * coords);
}

double quasi_eigen_defect(const CMatrix& s, std::span<const Complex> v) {
    std::vector<Complex> sv = s * v;
    const Complex lambda = dot(v, sv);
    for (std::size_t i = 0; i < sv.size(); ++i) sv[i] -= lambda * v[i];
    return norm2(sv);
}

}  // namespace

std::vector<CMatrix> common_quasi_eigenspaces(const UnitaryRep& rep, double tol) {
    const std::size_t n = rep.group()->order(), d = rep.dim();
    if (d == 1) return {CMatrix::identity(1)};

    std::vector<CMatrix> s(n);
    std::vector<std::vector<CMatrix>> spaces(n);
    std::size_t start = 0, best = d + 1;
    for (Element x = 0; x < n; ++x) {
        s[x] = rep(x) + rep.inverse_at(x);
        spaces[x] = eigenspaces(s[x]);
        std::size_t widest = 0;
        for (const auto& sp : spaces[x]) widest = std::max(widest, sp.cols());
        if (widest < best) {
            best = widest;
            start = x;
        }
    }

    std::vector<CMatrix> candidates = spaces[start];
    for (Element x = 0; x < n && !candidates.empty(); ++x) {
        if (x == start) continue;
        std::vector<CMatrix> refined;
        for (const auto& w : candidates) {
            for (const auto& e : spaces[x]) {
                CMatrix both = intersect(w, e);
                if (both.cols() > 0) refined.push_back(std::move(both));
            }
        }
        candidates = std::move(refined);
    }

    // Re-check every surviving direction against all S(x).
    std::vector<CMatrix> sound;
    for (auto& w : candidates) {
        bool ok = true;
        for (std::size_t c = 0; c < w.cols() && ok; ++c) {
            const std::vector<Complex> v = w.column(c);
            for (Element x = 0; x < n && ok; ++x) ok = quasi_eigen_defect(s[x], v) <= tol;
        }
        if (ok) sound.push_back(std::move(w));
    }
    return sound;
}

std::vector<std::vector<Complex>> common_quasi_eigenvectors(const UnitaryRep& rep, double tol) {
    std::vector<std::vector<Complex>> out;
    for (const auto& w : common_quasi_eigenspaces(rep, tol)) {
        for (std::size_t c = 0; c < w.cols(); ++c) {
            std::vector<Complex> v = w.column(c);
            // Fix the phase so the first largest entry is real positive.
            std::size_t k = 0;
            for (std::size_t i = 1; i < v.size(); ++i)
                if (std::abs(v[i]) > std::abs(v[k]) * (1.0 + 1e-12)) k = i;
            const Complex u = std::conj(v[k]) / std::abs(v[k]);
            for (auto& z : v) z *= u;
            out.push_back(std::move(v));
        }
    }
    return out;
}

LemmaReport verify_small_dimension_lemma(const UnitaryRep& rep, double tol) {
    if (!is_irreducible(rep)) throw NotIrreducible("lemma applies to irreducible representations");
    LemmaReport report;
    report.witnesses = common_quasi_eigenvectors(rep, tol);
    report.hypothesis_holds = !report.witnesses.empty();
    if (!report.hypothesis_holds) return report;

    if (rep.dim() == 1) {
        report.conclusion = LemmaConclusion::dim1_character;
    } else if (rep.dim() == 2 && su2_eligible(rep)) {
        report.conclusion = LemmaConclusion::dim2_su2;
    } else {
        throw LemmaViolated("common quasi-eigenvector found for an irrep of dim " +
                            std::to_string(rep.dim()) +
                            (rep.dim() == 2 ? " with nontrivial determinant" : ""));
    }
    return report;
}

}  // namespace cocycle
