#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "harmap/catalog.hpp"
#include "harmap/errors.hpp"

using namespace harmap;

namespace {

// Taylor coefficients of num(z) / (1 - z)^k by long division in exact
// rational arithmetic (numerators over a common denominator of 6).
std::vector<double> long_division(std::vector<long long> num6, int k, std::size_t order) {
    std::vector<long long> q(order + 1, 0);
    num6.resize(order + 1, 0);
    // (1 - z)^k q = num  =>  q_n = num_n - sum_{j>=1} binom(k, j) (-1)^j q_{n-j}
    std::vector<long long> binom(k + 1, 1);
    for (int j = 1; j <= k; ++j)
        binom[j] = binom[j - 1] * (k - j + 1) / j;
    for (std::size_t n = 0; n <= order; ++n) {
        long long v = num6[n];
        for (int j = 1; j <= k && j <= int(n); ++j)
            v -= (j % 2 ? -1 : 1) * binom[j] * q[n - j];
        q[n] = v;
    }
    std::vector<double> out(order);
    for (std::size_t n = 1; n <= order; ++n)
        out[n - 1] = double(q[n]) / 6.0;
    return out;
}

void check_coeffs(const AnalyticSeries& s, const std::vector<double>& expect) {
    for (std::size_t n = 1; n <= expect.size(); ++n)
        CHECK(std::abs(s.coeff(n) - expect[n - 1]) < 1e-12 * std::max(1.0, std::abs(expect[n - 1])));
}

} // namespace

TEST_CASE("harmonic Koebe coefficients by long division") {
    // H = (z - z^2/2 + z^3/6)/(1-z)^3, G = (z^2/2 + z^3/6)/(1-z)^3
    check_coeffs(catalog_h(CatalogTag::harmonic_koebe, 40), long_division({0, 6, -3, 1}, 3, 40));
    check_coeffs(catalog_g(CatalogTag::harmonic_koebe, 40), long_division({0, 0, 3, 1}, 3, 40));
    CHECK(std::abs(catalog_h(CatalogTag::harmonic_koebe, 3).coeff(3) - 14.0 / 3.0) < 1e-15);
    CHECK(std::abs(catalog_g(CatalogTag::harmonic_koebe, 3).coeff(3) - 5.0 / 3.0) < 1e-15);
}

TEST_CASE("harmonic half-plane coefficients by long division") {
    // M = (z - z^2/2)/(1-z)^2, N = -(z^2/2)/(1-z)^2
    check_coeffs(catalog_h(CatalogTag::harmonic_half_plane, 40), long_division({0, 6, -3}, 2, 40));
    check_coeffs(catalog_g(CatalogTag::harmonic_half_plane, 40), long_division({0, 0, -3}, 2, 40));
}

TEST_CASE("Koebe and half-plane coefficients") {
    check_coeffs(catalog_h(CatalogTag::koebe, 30), long_division({0, 6}, 2, 30));
    check_coeffs(catalog_h(CatalogTag::half_plane, 30), long_division({0, 6}, 1, 30));
}

TEST_CASE("every tag: closed form matches its own Taylor coefficients and the series") {
    for (CatalogTag tag : kAllTags) {
        CAPTURE(tag_name(tag));
        const ClosedPair c = closed_form(tag);
        const AnalyticSeries th = c.h.taylor(60), tg = c.g.taylor(60);
        const AnalyticSeries h = catalog_h(tag, 60), g = catalog_g(tag, 60);
        CHECK(std::abs(th.constant()) < 1e-12);
        CHECK(std::abs(tg.constant()) < 1e-12);
        for (std::size_t n = 1; n <= 60; ++n) {
            CHECK(std::abs(th.coeff(n) - h.coeff(n)) < 1e-9 * std::max(1.0, std::abs(h.coeff(n))));
            CHECK(std::abs(tg.coeff(n) - g.coeff(n)) < 1e-9 * std::max(1.0, std::abs(g.coeff(n))));
        }
        // coefficients grow at most like n^2/3, so at N = 400 the tail at |z| = 0.9 is below 1e-12
        const HarmonicMap f = make(tag, 400).without_closed_form();
        for (cplx z : {cplx(0.5, 0.0), cplx(-0.3, 0.4), cplx(0.0, -0.5), std::polar(0.9, 0.0),
                       std::polar(0.9, 2.0)})
            CHECK(std::abs(eval_map(f, z) - eval_closed(tag, z)) < 1e-6);
        CHECK(make(tag).is_normalized());
    }
}

TEST_CASE("Alexander images of K and L") {
    const HarmonicMap ak = make(CatalogTag::alexander_plus_K, 50);
    const HarmonicMap k = make(CatalogTag::harmonic_koebe, 50);
    const HarmonicMap al = make(CatalogTag::alexander_plus_L, 50);
    const HarmonicMap l = make(CatalogTag::harmonic_half_plane, 50);
    for (std::size_t n = 1; n <= 50; ++n) {
        CHECK(std::abs(ak.h().coeff(n) - k.h().coeff(n) / double(n)) < 1e-13);
        CHECK(std::abs(ak.g().coeff(n) - k.g().coeff(n) / double(n)) < 1e-13);
        CHECK(std::abs(al.g().coeff(n) - l.g().coeff(n) / double(n)) < 1e-15);
    }
}

TEST_CASE("tag names") {
    for (CatalogTag tag : kAllTags)
        CHECK(parse_tag(tag_name(tag)) == tag);
    CHECK_FALSE(find_tag("nope").has_value());
    CHECK_THROWS_AS(parse_tag("nope"), ArgumentError);
    CHECK_THROWS_AS(make(CatalogTag::koebe, 1), ArgumentError);
}

TEST_CASE("log map") {
    const HarmonicMap f = log_map(50);
    CHECK(std::abs(f.h().coeff(7) - 1.0 / 7.0) < 1e-16);
    const cplx z(0.6, 0.2);
    CHECK(std::abs(eval_map(f, z) + std::log(1.0 - z)) < 1e-14);
}
