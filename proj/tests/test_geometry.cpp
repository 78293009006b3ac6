#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "harmap/catalog.hpp"
#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"

using namespace harmap;

TEST_CASE("sampling grids") {
    const SamplingGrid g = SamplingGrid::standard();
    CHECK(g.radii.size() == 11);
    CHECK(g.size() == 11 * 256);
    CHECK_NOTHROW(g.validate());
    CHECK(std::abs(g.point(256) - cplx(0.2, 0.0)) < 1e-15);
    CHECK(SamplingGrid::up_to(0.8).radii.back() == 0.8);
    CHECK(SamplingGrid::up_to(0.85).radii.back() == 0.85);
    CHECK_THROWS_AS((SamplingGrid{{0.5, 0.4}, 256}.validate()), ArgumentError);
    CHECK_THROWS_AS((SamplingGrid{{0.5}, 32}.validate()), ArgumentError);
    CHECK_THROWS_AS((SamplingGrid{{1.0}, 256}.validate()), ArgumentError);
}

TEST_CASE("Koebe margins have closed forms") {
    const HarmonicMap k = make(CatalogTag::koebe);
    for (double r : {0.2, 0.5, 0.8}) {
        CHECK(std::abs(starlike_margin(k, r).min_margin - (1 - r) / (1 + r)) < 1e-12);
        // 1 + Re z h''/h' is least at z = -r
        CHECK(std::abs(convex_margin(k, r).min_margin - (1 - 4 * r + r * r) / (1 - r * r)) < 1e-12);
    }
    const HarmonicMap hp = make(CatalogTag::half_plane);
    CHECK(std::abs(convex_margin(hp, 0.7).min_margin - 0.3 / 1.7) < 1e-12);
    CHECK_THROWS_AS(starlike_margin(k, 1.0), DomainError);
    CHECK_THROWS_AS(convex_margin(k, 0.0), DomainError);
}

TEST_CASE("margins are rotation invariant for rotated maps") {
    // f(e^{i a} z) rotates the sampled circle; with a a multiple of 2 pi / M the samples coincide
    const HarmonicMap K = make(CatalogTag::harmonic_koebe, 64).without_closed_form();
    const std::size_t shift = 37;
    const cplx w = std::polar(1.0, 2 * std::numbers::pi * double(shift) / double(kMarginAngles));
    std::vector<cplx> h(64), g(64);
    for (std::size_t n = 1; n <= 64; ++n) {
        h[n - 1] = K.h().coeff(n) * std::pow(w, double(n)) / w;
        g[n - 1] = K.g().coeff(n) * std::pow(w, double(n)) * w;
    }
    // e^{-ia} f(e^{ia} z): h picks up w^(n-1), g picks up w^(n+1)
    const HarmonicMap R{AnalyticSeries(h), AnalyticSeries(g)};
    for (double r : {0.3, 0.6}) {
        CHECK(std::abs(starlike_margin(R, r).min_margin - starlike_margin(K, r).min_margin) < 1e-10);
        CHECK(std::abs(convex_margin(R, r).min_margin - convex_margin(K, r).min_margin) < 1e-10);
    }
}

TEST_CASE("polygon predicates") {
    const std::vector<cplx> square{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    const std::vector<cplx> bowtie{{1, 1}, {-1, -1}, {-1, 1}, {1, -1}};
    CHECK_FALSE(polygon_self_intersects(square));
    CHECK(polygon_self_intersects(bowtie));
    CHECK(winding_number(square, 0.0) == 1);
    CHECK(winding_number(square, cplx(3, 0)) == 0);
    const std::vector<cplx> cw{{1, -1}, {-1, -1}, {-1, 1}, {1, 1}};
    CHECK(winding_number(cw, 0.0) == -1);
    CHECK_THROWS_AS(winding_number(square, cplx(1, 1)), DegenerateError);
}

TEST_CASE("univalence on circles") {
    CHECK(univalent_on_circle(make(CatalogTag::u_sharp), 0.99));
    CHECK(univalent_on_circle(make(CatalogTag::harmonic_koebe), 0.9));
    // z + z^2 folds at z = -1/2: the image of |z| = 0.9 has a loop
    const HarmonicMap fold = HarmonicMap::analytic(AnalyticSeries(std::vector<cplx>{1.0, 1.0}));
    CHECK_FALSE(univalent_on_circle(fold, 0.9));
    CHECK(univalent_on_circle(fold, 0.4));
    // z + conj(z): Jacobian vanishes everywhere
    const HarmonicMap flat(AnalyticSeries::identity(2), AnalyticSeries::identity(2));
    CHECK_FALSE(univalent_on_circle(flat, 0.5));
    CHECK(circle_image(fold, 0.5, 300).size() == 300);
}

TEST_CASE("radius estimation brackets the Koebe convexity radius") {
    const RadiusEstimate e = radius_estimate(make(CatalogTag::koebe), Functional::convex, 1e-6);
    const double exact = 2 - std::sqrt(3.0);
    CHECK(e.lo <= exact + 1e-9);
    CHECK(e.hi >= exact - 1e-9);
    CHECK(e.hi - e.lo <= 1e-6);
    CHECK(std::abs(e.value - exact) < 1e-5);
    CHECK(radius_estimate(make(CatalogTag::koebe), Functional::starlike, 1e-4).value == 1.0);
    CHECK_THROWS_AS(radius_estimate(make(CatalogTag::koebe), Functional::convex, 0.0), ArgumentError);
    CHECK(margin_at(make(CatalogTag::u_sharp), Functional::univalent, 0.9) == 1.0);
}

TEST_CASE("polynomial roots") {
    const std::vector<double> p{-1, 2, 1}; // r^2 + 2r - 1
    CHECK(poly_eval(p, 0.5) == 0.25);
    CHECK(std::abs(smallest_positive_root(p) - (std::sqrt(2.0) - 1)) < 1e-11);
    const std::vector<double> none{1, 0, 1};
    CHECK_THROWS_AS(smallest_positive_root(none), NotFoundError);
}

TEST_CASE("order coupling and functional names") {
    CHECK(required_order(0.9) == 64);
    CHECK(required_order(0.99) == 200);
    CHECK(parse_functional("convex") == Functional::convex);
    CHECK(functional_name(Functional::univalent) == "univalent");
    CHECK_THROWS_AS(parse_functional("round"), ArgumentError);
}
