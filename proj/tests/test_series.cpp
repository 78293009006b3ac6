#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "harmap/errors.hpp"
#include "harmap/series.hpp"

using namespace harmap;

namespace {

AnalyticSeries sample(std::size_t order) {
    return AnalyticSeries::from_rule(order, [](std::size_t n) {
        return cplx(1.0 / double(n * n), std::sin(double(n)) / double(n * n * n));
    });
}

cplx naive(const AnalyticSeries& s, cplx z) {
    cplx out = s.constant(), p = 1.0;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        p *= z;
        out += s.coeff(n) * p;
    }
    return out;
}

} // namespace

TEST_CASE("Horner evaluation matches the power sum") {
    const AnalyticSeries s = sample(40);
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.7, 0.2), cplx(0.0, 0.95)})
        CHECK(std::abs(eval(s, z) - naive(s, z)) < 1e-14);
}

TEST_CASE("evaluation outside the open disk is refused") {
    const AnalyticSeries s = sample(8);
    CHECK_THROWS_AS(eval(s, cplx(1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(eval_jet(s, cplx(0.0, -1.2)), DomainError);
}

TEST_CASE("jet derivatives match central differences") {
    const AnalyticSeries s = sample(30);
    const cplx z(0.4, -0.3);
    const double h = 1e-5;
    const Jet j = eval_jet(s, z);
    CHECK(std::abs(j.value - eval(s, z)) < 1e-15);
    CHECK(std::abs(j.d1 - (eval(s, z + h) - eval(s, z - h)) / (2 * h)) < 1e-8);
    CHECK(std::abs(j.d2 - (eval(s, z + h) - 2.0 * eval(s, z) + eval(s, z - h)) / (h * h)) < 1e-4);
}

TEST_CASE("derivative keeps a_1 as its constant term and antiderivative inverts it") {
    const AnalyticSeries s = sample(20);
    const AnalyticSeries d = derivative(s);
    CHECK(d.order() == 19);
    CHECK(d.constant() == s.coeff(1));
    CHECK(d.coeff(3) == 4.0 * s.coeff(4));
    const AnalyticSeries back = antiderivative(d);
    REQUIRE(back.order() == 20);
    for (std::size_t n = 1; n <= 20; ++n)
        CHECK(std::abs(back.coeff(n) - s.coeff(n)) < 1e-15);
    CHECK_THROWS_AS(derivative(AnalyticSeries::identity(1)), ArgumentError);
}

TEST_CASE("Hadamard product is coefficientwise and truncates to the shorter order") {
    const AnalyticSeries a = sample(10), b = AnalyticSeries::from_rule(6, [](std::size_t n) { return double(n); });
    const AnalyticSeries c = convolve(a, b);
    CHECK(c.order() == 6);
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(c.coeff(n) == a.coeff(n) * double(n));
}

TEST_CASE("Cauchy product of z/(1-z) with itself gives (n-1) z^n") {
    const AnalyticSeries hp = AnalyticSeries::from_rule(12, [](std::size_t) { return 1.0; });
    const AnalyticSeries sq = multiply(hp, hp);
    for (std::size_t n = 1; n <= 12; ++n)
        CHECK(sq.coeff(n) == cplx(double(n) - 1.0));
}

TEST_CASE("Alexander transform divides by n") {
    const AnalyticSeries koebe = AnalyticSeries::from_rule(64, [](std::size_t n) { return double(n); });
    const AnalyticSeries l = alexander(koebe);
    for (std::size_t n = 1; n <= 64; ++n)
        CHECK(l.coeff(n) == cplx(1.0));
}

TEST_CASE("linear combinations and operators") {
    const AnalyticSeries a = sample(5), b = AnalyticSeries::identity(5);
    const std::vector<std::pair<cplx, AnalyticSeries>> terms{{2.0, a}, {cplx(0, 1), b}};
    const AnalyticSeries c = linear_combine(terms);
    CHECK(c.coeff(1) == 2.0 * a.coeff(1) + cplx(0, 1));
    CHECK(c.coeff(3) == 2.0 * a.coeff(3));
    CHECK((a - a).is_zero());
    CHECK((a + b).coeff(1) == a.coeff(1) + 1.0);
    CHECK_THROWS_AS(linear_combine({}), ArgumentError);
}

TEST_CASE("normalization and truncation") {
    CHECK(AnalyticSeries::identity(4).is_normalized());
    CHECK_FALSE(sample(4).truncated(4).is_zero());
    const AnalyticSeries s = sample(4).truncated(9);
    CHECK(s.order() == 9);
    CHECK(s.coeff(7) == cplx(0.0));
    CHECK(s.coeff(200) == cplx(0.0));
    CHECK(sample(9).truncated(4) == sample(4));
}
