#include <doctest.h>

#include "cocycle/error.hpp"
#include "cocycle/group.hpp"
#include "support.hpp"

using namespace cocycle;

TEST_CASE("from_cayley_table: Z2 is forced") {
    auto g = Group::from_cayley_table({"e", "a"}, {{0, 1}, {1, 0}});
    CHECK(g->order() == 2);
    CHECK(g->identity() == 0);
    CHECK(g->inverse_table() == std::vector<Element>{0, 1});
}

TEST_CASE("from_cayley_table: error paths name the violation") {
    CHECK_THROWS_AS(Group::from_cayley_table({"e", "a"}, {{0, 1}, {1, 1}}), NotAPermutationRow);
    CHECK_THROWS_AS(Group::from_cayley_table({"e", "a"}, {{0, 1}, {1}}), InvalidTable);
    CHECK_THROWS_AS(Group::from_cayley_table({"e", "a"}, {{0, 2}, {1, 0}}), InvalidTable);
    CHECK_THROWS_AS(Group::from_cayley_table({"e"}, {{0, 1}, {1, 0}}), InvalidTable);
    // Latin square without identity: x·y = -x-y mod 3.
    CHECK_THROWS_AS(Group::from_cayley_table({"0", "1", "2"}, {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}),
                    NoIdentity);
    // Loop of order 5 with identity and inverses that is not associative.
    const std::vector<std::vector<std::size_t>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    try {
        Group::from_cayley_table({"e", "a", "b", "c", "d"}, loop);
        FAIL("expected NotAssociative");
    } catch (const NotAssociative& e) {
        CHECK(std::string(e.what()).find("(x,y,z)") != std::string::npos);
    }
    CHECK_THROWS_AS(Group::from_cayley_table({"e", "a"}, {{0, 1}, {1, 0}}, 1), SizeLimit);
}

TEST_CASE("S3 from explicit permutation composition is a valid group") {
    const auto [perms, table] = support::s3_by_composition();
    std::vector<std::string> names(6, "");
    for (std::size_t i = 0; i < 6; ++i) names[i] = std::to_string(i);
    auto g = Group::from_cayley_table(names, table);
    CHECK(g->order() == 6);
    CHECK_FALSE(g->is_abelian());
    // all 216 triples associate
    int ok = 0;
    for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = 0; y < 6; ++y)
            for (std::size_t z = 0; z < 6; ++z) ok += table[table[x][y]][z] == table[x][table[y][z]];
    CHECK(ok == 216);
    CHECK(builtin::symmetric(3)->table() == table);
}

TEST_CASE("builtin families") {
    auto z4 = builtin::cyclic(4);
    CHECK(z4->order() == 4);
    CHECK(z4->inv(1) == 3);

    auto q8 = builtin::quaternion8();
    CHECK(q8->order() == 8);
    int order_two = 0;
    for (Element x = 0; x < 8; ++x) order_two += q8->element_order(x) == 2;
    CHECK(order_two == 1);
    CHECK(q8->name(1) == "-e");

    auto s3 = builtin::symmetric(3);
    CHECK(s3->order() == 6);
    CHECK_FALSE(s3->is_abelian());
    CHECK(s3->name(0) == "123");

    auto d5 = builtin::dihedral(5);
    CHECK(d5->order() == 10);
    CHECK(d5->name(1) == "r");
    CHECK(d5->name(6) == "sr");
    for (Element k = 5; k < 10; ++k) CHECK(d5->element_order(k) == 2);

    CHECK(builtin::alternating(4)->order() == 12);
    CHECK(builtin::symmetric(4)->order() == 24);

    auto prod = builtin::product(*builtin::cyclic(2), *q8);
    CHECK(prod->order() == 16);
    CHECK(builtin::by_name("z2xq8")->table() == prod->table());

    CHECK_THROWS_AS(builtin::cyclic(0), UnsupportedParams);
    CHECK_THROWS_AS(builtin::dihedral(1), UnsupportedParams);
    CHECK_THROWS_AS(builtin::symmetric(6), UnsupportedParams);
    CHECK_THROWS_AS(builtin::by_name("q9"), UnsupportedParams);
    CHECK_THROWS_AS(builtin::by_name("hello"), UnsupportedParams);
}

TEST_CASE("every builtin satisfies the group axioms exhaustively") {
    for (const auto& name : {"z1", "z7", "d3", "d6", "q8", "s4", "a4", "a5", "z2xz3", "z2xq8"}) {
        CAPTURE(name);
        auto g = builtin::by_name(name);
        const auto n = g->order();
        // re-validate through the checked constructor
        CHECK_NOTHROW(Group::from_cayley_table(g->names(), g->table()));
        for (Element x = 0; x < n; ++x) {
            CHECK(g->mul(x, g->inv(x)) == g->identity());
            CHECK(g->mul(g->identity(), x) == x);
        }
    }
    CHECK(builtin::by_name("a5")->order() == 60);
}

TEST_CASE("conjugacy classes") {
    SUBCASE("abelian groups have singleton classes") {
        for (const auto& name : {"z1", "z6", "z12", "z2xz3"}) {
            auto g = builtin::by_name(name);
            CHECK(conjugacy_classes(*g).size() == g->order());
        }
    }
    SUBCASE("sizes match brute-force orbits") {
        auto s3 = builtin::symmetric(3);
        auto cls = conjugacy_classes(*s3);
        CHECK(cls.size() == 3);
        CHECK(support::brute_class_sizes(*s3) == std::multiset<std::size_t>{1, 2, 3});
        auto q8 = builtin::quaternion8();
        CHECK(support::brute_class_sizes(*q8) == std::multiset<std::size_t>{1, 1, 2, 2, 2});
        for (const auto& name : {"s3", "q8", "d4", "d5", "a4", "s4", "z2xq8"}) {
            auto g = builtin::by_name(name);
            std::multiset<std::size_t> sizes;
            for (const auto& c : conjugacy_classes(*g)) sizes.insert(c.size());
            CHECK(sizes == support::brute_class_sizes(*g));
        }
    }
    SUBCASE("partition invariants") {
        auto g = builtin::symmetric(4);
        auto cls = conjugacy_classes(*g);
        CHECK(cls.front() == std::vector<Element>{g->identity()});
        std::vector<int> seen(g->order(), 0);
        for (const auto& c : cls) {
            for (Element x : c) {
                ++seen[x];
                for (Element h = 0; h < g->order(); ++h) {
                    const Element conj = g->mul(g->mul(h, x), g->inv(h));
                    CHECK(std::find(c.begin(), c.end(), conj) != c.end());
                }
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
}

TEST_CASE("GroupFunction basics") {
    auto g = builtin::cyclic(3);
    auto f = GroupFunction::constant(g, 2.0);
    CHECK(f.sup_norm() == doctest::Approx(2.0));
    CHECK(haar_inner(f, f) == Complex(4.0));
    CHECK_THROWS_AS(GroupFunction(g, {1.0, 2.0}), ValidationError);
    // separately built but identical tables count as the same group
    CHECK_NOTHROW(sup_distance(f, GroupFunction::zeros(builtin::cyclic(3))));
    CHECK_NOTHROW(require_same_group(g, g, "self"));
    CHECK_THROWS_AS(require_same_group(g, builtin::cyclic(4), "z3 vs z4"), GroupMismatch);
}
