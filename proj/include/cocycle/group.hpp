#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace cocycle {

using Element = std::size_t;
using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultMaxOrder = 200;

/// A finite group stored as a validated Cayley table over dense indices
/// 0..n-1. Immutable once built; share it through GroupPtr.
class Group {
public:
    /// Validates closure, Latin-square rows/columns, identity, inverses and
    /// associativity (exhaustively). Throws the matching ValidationError
    /// naming the first violation.
    static std::shared_ptr<const Group> from_cayley_table(
        std::vector<std::string> names,
        std::vector<std::vector<std::size_t>> table,
        std::size_t max_order = kDefaultMaxOrder);

    std::size_t order() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Element x) const { return names_[x]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    Element mul(Element x, Element y) const { return table_[x][y]; }
    Element inv(Element x) const { return inverse_[x]; }
    Element identity() const { return identity_; }
    const std::vector<Element>& inverse_table() const { return inverse_; }

    bool is_abelian() const;
    std::size_t element_order(Element x) const;

    /// Same table and names (the names are metadata, but they are part of
    /// what a caller sees, so mismatched names count as a different group).
    bool same_as(const Group& other) const;

private:
    Group() = default;

    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Throws GroupMismatch unless both refer to the same group.
void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* context);

/// Partition into conjugacy classes. Classes are ordered by their smallest
/// member, members ascending; the identity's class comes first.
std::vector<std::vector<Element>> conjugacy_classes(const Group& g);

namespace builtin {

GroupPtr cyclic(std::size_t n);
/// Symmetries of the regular n-gon, order 2n. Index k is r^k, index n+k is s·r^k.
GroupPtr dihedral(std::size_t n);
/// Elements e, -e, i, -i, j, -j, k, -k in that order.
GroupPtr quaternion8();
/// Permutations of {1..n} in lexicographic one-line order, composed as
/// (p·q)(i) = p(q(i)).
GroupPtr symmetric(std::size_t n);
/// Even permutations of {1..n}, same conventions as symmetric().
GroupPtr alternating(std::size_t n);
/// Direct product; element (a, b) has index a·|B| + b.
GroupPtr product(const Group& a, const Group& b);

/// Parses names like "z6", "c6", "d4", "q8", "s3", "a4" and products joined
/// by 'x' ("z2xq8"). Throws UnsupportedParams.
GroupPtr by_name(const std::string& spec);

}  // namespace builtin

/// A complex-valued function on the elements of a group.
struct GroupFunction {
    GroupPtr group;
    std::vector<Complex> values;

    GroupFunction() = default;
    GroupFunction(GroupPtr g, std::vector<Complex> v);
    static GroupFunction zeros(GroupPtr g);
    static GroupFunction constant(GroupPtr g, Complex c);
    static GroupFunction indicator(GroupPtr g, Element x);

    std::size_t size() const { return values.size(); }
    Complex operator()(Element x) const { return values[x]; }
    Complex& operator[](Element x) { return values[x]; }
    Complex operator[](Element x) const { return values[x]; }

    double sup_norm() const;
    double max_imag() const;
    GroupFunction real_part() const;
    GroupFunction conj() const;
};

GroupFunction operator+(const GroupFunction& a, const GroupFunction& b);
GroupFunction operator-(const GroupFunction& a, const GroupFunction& b);
GroupFunction operator*(Complex s, const GroupFunction& f);

/// max_x |a(x) - b(x)|.
double sup_distance(const GroupFunction& a, const GroupFunction& b);

/// Normalized Haar inner product (1/n) Σ_x a(x)·conj(b(x)).
Complex haar_inner(const GroupFunction& a, const GroupFunction& b);

}  // namespace cocycle
