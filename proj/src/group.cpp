#include "cocycle/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "cocycle/error.hpp"

namespace cocycle {

std::shared_ptr<const Group> Group::from_cayley_table(
    std::vector<std::string> names, std::vector<std::vector<std::size_t>> table,
    std::size_t max_order) {
    const std::size_t n = table.size();
    if (n == 0) throw InvalidTable("empty table");
    if (n > max_order) {
        throw SizeLimit("order " + std::to_string(n) + " exceeds limit " +
                        std::to_string(max_order));
    }
    if (names.size() != n) {
        throw InvalidTable("expected " + std::to_string(n) + " names, got " +
                           std::to_string(names.size()));
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (table[x].size() != n) {
            throw InvalidTable("table is not square: row " + std::to_string(x) +
                               " has length " + std::to_string(table[x].size()));
        }
        for (std::size_t y = 0; y < n; ++y) {
            if (table[x][y] >= n) {
                throw InvalidTable("entry (" + std::to_string(x) + "," +
                                   std::to_string(y) + ") = " +
                                   std::to_string(table[x][y]) + " out of range");
            }
        }
    }

    std::vector<std::size_t> seen(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), n);
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t z = table[x][y];
            if (seen[z] != n) {
                throw NotAPermutationRow("row " + std::to_string(x) + " repeats element " +
                                         std::to_string(z) + " at columns " +
                                         std::to_string(seen[z]) + " and " +
                                         std::to_string(y));
            }
            seen[z] = y;
        }
    }
    for (std::size_t y = 0; y < n; ++y) {
        std::fill(seen.begin(), seen.end(), n);
        for (std::size_t x = 0; x < n; ++x) {
            const std::size_t z = table[x][y];
            if (seen[z] != n) {
                throw NotAPermutationRow("column " + std::to_string(y) +
                                         " repeats element " + std::to_string(z) +
                                         " at rows " + std::to_string(seen[z]) + " and " +
                                         std::to_string(x));
            }
            seen[z] = x;
        }
    }

    std::size_t identity = n;
    for (std::size_t e = 0; e < n && identity == n; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
        if (ok) identity = e;
    }
    if (identity == n) throw NoIdentity("no element acts as a two-sided identity");

    std::vector<Element> inverse(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (table[x][y] == identity && table[y][x] == identity) {
                inverse[x] = y;
                break;
            }
        }
        if (inverse[x] == n) {
            throw MissingInverse("element " + std::to_string(x) + " has no two-sided inverse");
        }
    }

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t xy = table[x][y];
            for (std::size_t z = 0; z < n; ++z) {
                if (table[xy][z] != table[x][table[y][z]]) {
                    throw NotAssociative("(x,y,z) = (" + std::to_string(x) + "," +
                                         std::to_string(y) + "," + std::to_string(z) + ")");
                }
            }
        }
    }

    std::shared_ptr<Group> g(new Group());
    g->names_ = std::move(names);
    g->table_ = std::move(table);
    g->identity_ = identity;
    g->inverse_ = std::move(inverse);
    return g;
}

bool Group::is_abelian() const {
    const std::size_t n = order();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (table_[x][y] != table_[y][x]) return false;
    return true;
}

std::size_t Group::element_order(Element x) const {
    std::size_t k = 1;
    for (Element p = x; p != identity_; p = mul(p, x)) ++k;
    return k;
}

bool Group::same_as(const Group& other) const {
    return this == &other || (table_ == other.table_ && names_ == other.names_);
}

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* context) {
    if (!a || !b || !a->same_as(*b)) {
        throw GroupMismatch(std::string(context) + ": operands live on different groups");
    }
}

std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
    const std::size_t n = g.order();
    std::vector<bool> assigned(n, false);
    std::vector<std::vector<Element>> classes;
    // Visit the identity first so its singleton class leads.
    std::vector<Element> visit(n);
    std::iota(visit.begin(), visit.end(), Element{0});
    std::stable_partition(visit.begin(), visit.end(),
                          [&](Element x) { return x == g.identity(); });
    for (Element x : visit) {
        if (assigned[x]) continue;
        std::vector<Element> cls;
        for (Element h = 0; h < n; ++h) {
            const Element c = g.mul(g.mul(h, x), g.inv(h));
            if (!assigned[c]) {
                assigned[c] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

namespace builtin {
namespace {

using Table = std::vector<std::vector<std::size_t>>;

std::string power_name(const char* base, std::size_t k) {
    if (k == 1) return base;
    return std::string(base) + "^" + std::to_string(k);
}

std::string one_line(const std::vector<int>& p) {
    std::string s;
    for (int v : p) s += static_cast<char>('1' + v);
    return s;
}

GroupPtr permutation_group(std::size_t n, bool even_only) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        if (!even_only || inversions % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const std::size_t m = perms.size();
    std::vector<std::string> names;
    for (const auto& q : perms) names.push_back(one_line(q));
    Table table(m, std::vector<std::size_t>(m));
    std::vector<int> r(n);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            for (std::size_t i = 0; i < n; ++i) r[i] = perms[a][perms[b][i]];
            table[a][b] = static_cast<std::size_t>(
                std::lower_bound(perms.begin(), perms.end(), r) - perms.begin());
        }
    }
    return Group::from_cayley_table(std::move(names), std::move(table));
}

}  // namespace

GroupPtr cyclic(std::size_t n) {
    if (n < 1 || n > kDefaultMaxOrder) {
        throw UnsupportedParams("cyclic group needs 1 <= n <= " +
                                std::to_string(kDefaultMaxOrder));
    }
    std::vector<std::string> names;
    Table table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "e" : power_name("a", a));
        for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return Group::from_cayley_table(std::move(names), std::move(table));
}

GroupPtr dihedral(std::size_t n) {
    if (n < 2 || 2 * n > kDefaultMaxOrder) {
        throw UnsupportedParams("dihedral group needs 2 <= n <= " +
                                std::to_string(kDefaultMaxOrder / 2));
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : power_name("r", k));
    for (std::size_t k = 0; k < n; ++k) names.push_back(k == 0 ? "s" : power_name("sr", k));
    Table table(2 * n, std::vector<std::size_t>(2 * n));
    for (std::size_t x = 0; x < 2 * n; ++x) {
        for (std::size_t y = 0; y < 2 * n; ++y) {
            const std::size_t a = x % n, b = y % n;
            const bool sx = x >= n, sy = y >= n;
            // r^a s = s r^{-a}
            const std::size_t k = sy ? (b + n - a) % n : (a + b) % n;
            table[x][y] = ((sx != sy) ? n : 0) + k;
        }
    }
    return Group::from_cayley_table(std::move(names), std::move(table));
}

GroupPtr quaternion8() {
    // unit index 0..3 = 1, i, j, k; unit_mul gives (sign, unit).
    static constexpr int unit_sign[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static constexpr int unit_prod[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::vector<std::string> names = {"e", "-e", "i", "-i", "j", "-j", "k", "-k"};
    Table table(8, std::vector<std::size_t>(8));
    for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = 0; y < 8; ++y) {
            const std::size_t ux = x / 2, uy = y / 2;
            int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * unit_sign[ux][uy];
            table[x][y] = 2 * static_cast<std::size_t>(unit_prod[ux][uy]) + (sign < 0 ? 1 : 0);
        }
    }
    return Group::from_cayley_table(std::move(names), std::move(table));
}

GroupPtr symmetric(std::size_t n) {
    if (n < 1 || n > 5) throw UnsupportedParams("symmetric group needs 1 <= n <= 5");
    return permutation_group(n, false);
}

GroupPtr alternating(std::size_t n) {
    if (n < 1 || n > 5) throw UnsupportedParams("alternating group needs 1 <= n <= 5");
    return permutation_group(n, true);
}

GroupPtr product(const Group& a, const Group& b) {
    const std::size_t na = a.order(), nb = b.order();
    if (na * nb > kDefaultMaxOrder) {
        throw UnsupportedParams("product order " + std::to_string(na * nb) +
                                " exceeds limit " + std::to_string(kDefaultMaxOrder));
    }
    std::vector<std::string> names;
    for (std::size_t x = 0; x < na; ++x)
        for (std::size_t y = 0; y < nb; ++y)
            names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
    Table table(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t p = 0; p < na * nb; ++p)
        for (std::size_t q = 0; q < na * nb; ++q)
            table[p][q] = a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb);
    return Group::from_cayley_table(std::move(names), std::move(table));
}

GroupPtr by_name(const std::string& spec) {
    std::string s;
    for (char c : spec) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, 'x');) parts.push_back(tok);
    if (parts.empty()) throw UnsupportedParams("empty group name");

    auto single = [&](const std::string& tok) -> GroupPtr {
        if (tok.size() < 2 || !std::isalpha(static_cast<unsigned char>(tok[0])) ||
            !std::all_of(tok.begin() + 1, tok.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            tok.size() > 5) {
            throw UnsupportedParams("unrecognized group '" + tok + "'");
        }
        const std::size_t n = std::stoul(tok.substr(1));
        switch (tok[0]) {
            case 'z':
            case 'c': return cyclic(n);
            case 'd': return dihedral(n);
            case 's': return symmetric(n);
            case 'a': return alternating(n);
            case 'q':
                if (n == 8) return quaternion8();
                break;
        }
        throw UnsupportedParams("unrecognized group '" + tok + "'");
    };

    GroupPtr g = single(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = product(*g, *single(parts[i]));
    return g;
}

}  // namespace builtin

GroupFunction::GroupFunction(GroupPtr g, std::vector<Complex> v)
    : group(std::move(g)), values(std::move(v)) {
    if (!group) throw ValidationError("GroupFunction: null group");
    if (values.size() != group->order()) {
        throw ValidationError("GroupFunction: expected " + std::to_string(group->order()) +
                              " values, got " + std::to_string(values.size()));
    }
}

GroupFunction GroupFunction::zeros(GroupPtr g) {
    const std::size_t n = g->order();
    return {std::move(g), std::vector<Complex>(n)};
}

GroupFunction GroupFunction::constant(GroupPtr g, Complex c) {
    const std::size_t n = g->order();
    return {std::move(g), std::vector<Complex>(n, c)};
}

GroupFunction GroupFunction::indicator(GroupPtr g, Element x) {
    GroupFunction f = zeros(std::move(g));
    f.values.at(x) = 1.0;
    return f;
}

double GroupFunction::sup_norm() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

double GroupFunction::max_imag() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v.imag()));
    return m;
}

GroupFunction GroupFunction::real_part() const {
    GroupFunction r = *this;
    for (auto& v : r.values) v = v.real();
    return r;
}

GroupFunction GroupFunction::conj() const {
    GroupFunction r = *this;
    for (auto& v : r.values) v = std::conj(v);
    return r;
}

GroupFunction operator+(const GroupFunction& a, const GroupFunction& b) {
    require_same_group(a.group, b.group, "GroupFunction +");
    GroupFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] += b.values[i];
    return r;
}

GroupFunction operator-(const GroupFunction& a, const GroupFunction& b) {
    require_same_group(a.group, b.group, "GroupFunction -");
    GroupFunction r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] -= b.values[i];
    return r;
}

GroupFunction operator*(Complex s, const GroupFunction& f) {
    GroupFunction r = f;
    for (auto& v : r.values) v *= s;
    return r;
}

double sup_distance(const GroupFunction& a, const GroupFunction& b) {
    require_same_group(a.group, b.group, "sup_distance");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

Complex haar_inner(const GroupFunction& a, const GroupFunction& b) {
    require_same_group(a.group, b.group, "haar_inner");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.values[i] * std::conj(b.values[i]);
    return s / static_cast<double>(a.size());
}

}  // namespace cocycle
