#include <doctest.h>

#include <random>

#include "cocycle/error.hpp"
#include "cocycle/equations.hpp"
#include "cocycle/fourier.hpp"
#include "support.hpp"

using namespace cocycle;

namespace {

GroupFunction q8_half_character() {
    auto q8 = support::group("q8");
    return support::real_function(q8, {1, -1, 0, 0, 0, 0, 0, 0});
}

}  // namespace

TEST_CASE("parse_equation") {
    CHECK(parse_equation("dalembert") == Equation::dalembert);
    CHECK(parse_equation("wilson") == Equation::wilson);
    CHECK(parse_equation("long") == Equation::long_form);
    CHECK(std::string(to_string(Equation::long_form)) == "long");
    CHECK_THROWS_AS(parse_equation("cauchy"), ValidationError);
}

TEST_CASE("dalembert_residual") {
    auto z6 = support::group("z6");
    CHECK(dalembert_residual(GroupFunction::constant(z6, 1.0)).max_residual == 0.0);
    auto zero = dalembert_residual(GroupFunction::zeros(z6));
    CHECK(zero.max_residual == 0.0);
    CHECK(zero.satisfied);

    for (std::size_t n : {5u, 7u, 12u}) {
        auto g = builtin::cyclic(n);
        std::vector<double> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = std::cos(2.0 * M_PI * j / n);
        CHECK(dalembert_residual(support::real_function(g, v)).max_residual < 1e-12);
    }

    // f ≡ 2: 2 + 2 − 8 = −4 everywhere; argmax ties resolve to (0,0)
    auto bad = dalembert_residual(GroupFunction::constant(z6, 2.0));
    CHECK(bad.max_residual == doctest::Approx(4.0));
    CHECK_FALSE(bad.satisfied);
    CHECK(bad.argmax == std::pair<Element, Element>{0, 0});

    // a single bad value is located
    auto f = GroupFunction::constant(z6, 1.0);
    f[3] = 1.5;
    auto r = dalembert_residual(f);
    CHECK_FALSE(r.satisfied);
    CHECK((r.argmax.first == 3 || r.argmax.second == 3 || z6->mul(r.argmax.first, r.argmax.second) == 3 ||
           z6->mul(r.argmax.first, z6->inv(r.argmax.second)) == 3));
}

TEST_CASE("wilson_residual") {
    auto z2 = support::group("z2");
    auto sign = support::real_function(z2, {1, -1});
    CHECK(wilson_residual(GroupFunction::zeros(z2), sign).max_residual == 0.0);
    CHECK(wilson_residual(sign, sign).max_residual == 0.0);
    auto q = q8_half_character();
    CHECK(wilson_residual(q, q).max_residual == 0.0);
    // f = indicator-free combination of matrix coefficients of the quaternion irrep
    auto quat = support::q8_quaternion_irrep(support::group("q8"));
    auto coeff = matrix_coefficient(quat, 0, 1);
    CHECK(wilson_residual(coeff, q).max_residual < 1e-12);
    CHECK_FALSE(wilson_residual(coeff, GroupFunction::constant(support::group("q8"), 1.0)).satisfied);
    CHECK_THROWS_AS(wilson_residual(sign, q), GroupMismatch);
}

TEST_CASE("long_residual") {
    auto q8 = support::group("q8");
    CHECK(long_residual(GroupFunction::constant(q8, 1.0)).max_residual == 0.0);
    CHECK(long_residual(q8_half_character()).max_residual == 0.0);
    // the sign character of S3 is central and solves both equations
    auto s3 = support::group("s3");
    auto sign = support::real_function(s3, {1, -1, -1, 1, 1, -1});
    CHECK(dalembert_residual(sign).max_residual == 0.0);
    CHECK(long_residual(sign).max_residual == 0.0);
}

TEST_CASE("is_central") {
    std::mt19937_64 rng(1);
    CHECK(is_central(support::random_function(support::group("z12"), rng)));
    for (const auto& name : {"s3", "q8", "s4"}) {
        const auto& b = support::basis(name);
        for (const auto& rep : b.irreps) CHECK(is_central(character(rep)));
    }
    auto s3 = support::group("s3");
    CHECK_FALSE(is_central(GroupFunction::indicator(s3, 1)));  // transposition 132
}

TEST_CASE("check_square_identity") {
    auto z2 = support::group("z2");
    CHECK(check_square_identity(GroupFunction::constant(z2, 1.0)).max_residual == 0.0);
    CHECK(check_square_identity(support::real_function(z2, {1, -1})).max_residual == 0.0);
    CHECK(check_square_identity(q8_half_character()).max_residual < 1e-9);
    auto r = check_square_identity(GroupFunction::zeros(z2));
    CHECK(r.max_residual == doctest::Approx(1.0));
    CHECK_FALSE(r.satisfied);
}

TEST_CASE("delta_operator") {
    auto q8 = support::group("q8");
    auto quat = support::q8_quaternion_irrep(q8);
    auto f = q8_half_character();
    for (Element y = 0; y < 8; ++y) CHECK(delta_operator(quat, f, y).frobenius_norm() <= 1e-14);

    auto trivial = support::one_dim(q8, std::vector<Complex>(8, 1.0));
    auto one = GroupFunction::constant(q8, 1.0);
    for (Element y = 0; y < 8; ++y) CHECK(delta_operator(trivial, one, y).frobenius_norm() == 0.0);
    CHECK(delta_operator(quat, one, q8->identity()).frobenius_norm() == 0.0);

    auto complex_f = GroupFunction::constant(q8, Complex(1.0, 0.5));
    CHECK_THROWS_AS(delta_operator(quat, complex_f, 0), NotRealValued);
    auto tiny_imag = GroupFunction::constant(q8, Complex(1.0, 1e-12));
    CHECK_NOTHROW(delta_operator(quat, tiny_imag, 0));
}

TEST_CASE("verify_delta_square") {
    auto s3 = support::group("s3");
    auto sign = support::real_function(s3, {1, -1, -1, 1, 1, -1});
    auto one = GroupFunction::constant(s3, 1.0);
    const auto& b = support::basis("s3");
    for (const auto& f : {one, sign})
        for (const auto& rep : b.irreps) CHECK(verify_delta_square(rep, f).max_residual < 1e-8);
    auto trivial = support::one_dim(s3, std::vector<Complex>(6, 1.0));
    CHECK(verify_delta_square(trivial, one).max_residual == 0.0);

    const auto& bq = support::basis("q8");
    for (const auto& rep : bq.irreps)
        if (rep.dim() == 2) CHECK(verify_delta_square(rep, q8_half_character()).max_residual < 1e-8);

    CHECK_THROWS_AS(verify_delta_square(trivial, GroupFunction::zeros(s3)), SquareIdentityFails);
}

TEST_CASE("annihilation chain for constructed solutions") {
    auto q8 = support::group("q8");
    const auto& b = support::basis("q8");
    auto f = q8_half_character();
    auto c = transform(f, b);
    for (std::size_t k = 0; k < b.size(); ++k) {
        auto rep = annihilation_chain(b[k], f, c.blocks[k]);
        CHECK(rep.anticommutator <= 1e-8);
        CHECK(rep.square_kills <= 1e-8);
        CHECK(rep.delta_kills <= 1e-8);
        CHECK(rep.self_adjointness <= 1e-12);
    }
    // a block that is not annihilated: constant 1 against the 2-dim irrep with B = I
    auto one = GroupFunction::constant(q8, 1.0);
    auto quat = support::q8_quaternion_irrep(q8);
    auto r = annihilation_chain(quat, one, CMatrix::identity(2));
    CHECK(r.delta_kills > 1.0);
}
