#pragma once

// Shared fixtures for the unit and acceptance suites. Everything here is
// built independently of the library's decomposition path (explicit
// matrices, brute-force enumerations) so it can serve as an oracle.

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cocycle/group.hpp"
#include "cocycle/repr.hpp"

namespace support {

using cocycle::CMatrix;
using cocycle::Complex;
using cocycle::Element;
using cocycle::GroupFunction;
using cocycle::GroupPtr;
using cocycle::IrrepBasis;
using cocycle::UnitaryRep;

inline const std::vector<std::string>& test_groups() {
    static const std::vector<std::string> names = {"z6", "z12", "s3", "d4", "d5", "q8", "a4", "s4"};
    return names;
}

inline GroupPtr group(const std::string& name) {
    static std::map<std::string, GroupPtr> cache;
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, cocycle::builtin::by_name(name)).first;
    return it->second;
}

inline const IrrepBasis& basis(const std::string& name, std::uint64_t seed = 42) {
    static std::map<std::pair<std::string, std::uint64_t>, IrrepBasis> cache;
    const auto key = std::make_pair(name, seed);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, cocycle::decompose_irreps(group(name), seed)).first;
    return it->second;
}

inline GroupFunction random_function(const GroupPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> v(g->order());
    for (auto& z : v) z = Complex(normal(rng), normal(rng));
    return {g, std::move(v)};
}

inline GroupFunction real_function(const GroupPtr& g, std::vector<double> v) {
    return {g, std::vector<Complex>(v.begin(), v.end())};
}

/// S3 from explicit composition of permutations of {0,1,2}, (p·q)(i) = p(q(i)),
/// elements in lexicographic order. Independent of builtin::symmetric.
inline std::pair<std::vector<std::vector<int>>, std::vector<std::vector<std::size_t>>>
s3_by_composition() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p = {0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::vector<int> r(3);
            for (int i = 0; i < 3; ++i) r[i] = perms[a][perms[b][i]];
            table[a][b] = std::find(perms.begin(), perms.end(), r) - perms.begin();
        }
    return {perms, table};
}

/// The standard 2-dim irrep of S3 (builtin element order): the permutation
/// representation restricted to the sum-zero plane, in the orthonormal basis
/// (1,-1,0)/√2, (1,1,-2)/√6.
inline UnitaryRep s3_standard_irrep(const GroupPtr& s3) {
    const auto [perms, table] = s3_by_composition();
    const double a = 1.0 / std::sqrt(2.0), b = 1.0 / std::sqrt(6.0);
    const double u[2][3] = {{a, -a, 0.0}, {b, b, -2.0 * b}};
    std::vector<CMatrix> mats;
    for (const auto& p : perms) {
        // P e_i = e_{p(i)}
        CMatrix m(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                double s = 0.0;
                for (int i = 0; i < 3; ++i) s += u[r][p[i]] * u[c][i];
                m(r, c) = s;
            }
        mats.push_back(m);
    }
    return UnitaryRep::make(s3, std::move(mats));
}

/// Quaternion matrices on builtin::quaternion8's order (e,-e,i,-i,j,-j,k,-k):
/// i ↦ [[i,0],[0,-i]], j ↦ [[0,1],[-1,0]], k ↦ [[0,i],[i,0]].
inline UnitaryRep q8_quaternion_irrep(const GroupPtr& q8) {
    const Complex I(0.0, 1.0);
    const CMatrix e = CMatrix::identity(2);
    const CMatrix qi{{I, 0.0}, {0.0, -I}};
    const CMatrix qj{{0.0, 1.0}, {-1.0, 0.0}};
    const CMatrix qk{{0.0, I}, {I, 0.0}};
    std::vector<CMatrix> mats = {e, -1.0 * e, qi, -1.0 * qi, qj, -1.0 * qj, qk, -1.0 * qk};
    return UnitaryRep::make(q8, std::move(mats));
}

/// One-dimensional rep from a unit-modulus character table.
inline UnitaryRep one_dim(const GroupPtr& g, const std::vector<Complex>& chi) {
    std::vector<CMatrix> mats;
    for (const auto& z : chi) mats.push_back(CMatrix{{z}});
    return UnitaryRep::make(g, std::move(mats));
}

/// Conjugacy class sizes by brute-force orbit enumeration with std::set.
inline std::multiset<std::size_t> brute_class_sizes(const cocycle::Group& g) {
    std::set<std::set<Element>> classes;
    for (Element x = 0; x < g.order(); ++x) {
        std::set<Element> orbit;
        for (Element h = 0; h < g.order(); ++h) orbit.insert(g.mul(g.mul(h, x), g.inv(h)));
        classes.insert(orbit);
    }
    std::multiset<std::size_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    return sizes;
}

inline std::multiset<std::size_t> dims(const IrrepBasis& b) {
    std::multiset<std::size_t> d;
    for (const auto& r : b.irreps) d.insert(r.dim());
    return d;
}

/// Seeded random unitary via Gram–Schmidt on a Gaussian matrix.
inline CMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(n, n);
    for (auto& z : m.data()) z = Complex(normal(rng), normal(rng));
    return cocycle::orthonormalize_columns(m);
}

inline CMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(n, n);
    for (auto& z : m.data()) z = Complex(normal(rng), normal(rng));
    return 0.5 * (m + m.adjoint());
}

}  // namespace support
