#include <doctest.h>

#include "radial_yamabe/polynomial.hpp"

#include <cmath>

using namespace radial_yamabe;

namespace {

Polynomial poly(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (long long x : c) v.emplace_back(x);
    return Polynomial(std::move(v));
}

}  // namespace

TEST_CASE("evaluation, derivative and trimming") {
    const Polynomial p = poly({-1, 0, 3, 0, 0});  // 3x^2 - 1
    CHECK(p.degree() == 2);
    CHECK(p(Rational(2)) == 11);
    CHECK(p(0.5) == doctest::Approx(-0.25));
    CHECK(p.derivative() == poly({0, 6}));
    CHECK(Polynomial(std::vector<Rational>{0, 0}).is_zero());
}

TEST_CASE("remainder and deflation") {
    const Polynomial p = poly({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    CHECK(p.remainder(poly({-1, 1})).is_zero());
    CHECK(p.deflate(Rational(2)) == poly({3, -4, 1}));
    CHECK_THROWS_AS(p.deflate(Rational(5)), std::domain_error);
    CHECK_THROWS_AS(p.remainder(Polynomial{}), std::domain_error);
    CHECK(p.remainder(poly({0, 0, 1})) == poly({-6, 11}));
}

TEST_CASE("Sturm counts agree with known roots") {
    const Polynomial p = poly({-6, 11, -6, 1});
    const auto seq = sturm_sequence(p);
    CHECK(count_roots(seq, Rational(0), Rational(4)) == 3);
    CHECK(count_roots(seq, Rational(1), Rational(2)) == 1);  // (1, 2] holds 2 only
    CHECK(count_roots(seq, Rational(3, 2), Rational(5, 2)) == 1);
    CHECK(count_roots(seq, Rational(4), Rational(9)) == 0);
    CHECK_THROWS_AS(count_roots(seq, Rational(2), Rational(1)), std::invalid_argument);

    // x^2 + 1 has no real roots; x^2 - 2 has two
    CHECK(count_roots(sturm_sequence(poly({1, 0, 1})), Rational(-100), Rational(100)) == 0);
    CHECK(count_roots(sturm_sequence(poly({-2, 0, 1})), Rational(-100), Rational(100)) == 2);
}

TEST_CASE("repeated roots count once") {
    const Polynomial p = poly({1, -2, 1});  // (x-1)^2
    CHECK(count_roots(sturm_sequence(p), Rational(0), Rational(2)) == 1);
    const auto r = isolate_roots(p, Rational(0), Rational(3));
    REQUIRE(r.size() == 1);
    CHECK(r[0].value == 1.0);
}

TEST_CASE("isolate_roots finds irrational and exact rational roots") {
    const auto r = isolate_roots(poly({-2, 0, 1}), Rational(-2), Rational(2));
    REQUIRE(r.size() == 2);
    CHECK(r[0].value == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r[1].value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    for (const auto& root : r) CHECK(root.hi - root.lo <= Rational(1, 1LL << 60));

    // x (x - 1/2) (x + 1/2): the root at 0 sits on the first bisection cut
    const Polynomial q({Rational(0), Rational(-1, 4), Rational(0), Rational(1)});
    const auto z = isolate_roots(q, Rational(-1), Rational(1));
    REQUIRE(z.size() == 3);
    CHECK(z[0].value == -0.5);
    CHECK(z[1].value == 0.0);
    CHECK(z[1].exact);
    CHECK(z[2].value == 0.5);
}

TEST_CASE("isolate_roots excludes interval endpoints") {
    const Polynomial p = poly({-1, 0, 1});  // roots +-1
    CHECK(isolate_roots(p, Rational(-1), Rational(1)).empty());
    CHECK(isolate_roots(p, Rational(-1), Rational(2)).size() == 1);
}

TEST_CASE("roots are sorted and distinct for a dense Chebyshev-like polynomial") {
    // T_8(x) = 128x^8 - 256x^6 + 160x^4 - 32x^2 + 1, roots cos((2j-1) pi / 16)
    const Polynomial t8 = poly({1, 0, -32, 0, 160, 0, -256, 0, 128});
    const auto r = isolate_roots(t8, Rational(-1), Rational(1));
    REQUIRE(r.size() == 8);
    for (int j = 0; j < 8; ++j)
        CHECK(r[j].value == doctest::Approx(-std::cos((2 * j + 1) * M_PI / 16)).epsilon(1e-14));
    for (std::size_t j = 1; j < r.size(); ++j) CHECK(r[j - 1].value < r[j].value);
}
