#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "harmap/catalog.hpp"
#include "harmap/classes.hpp"
#include "harmap/errors.hpp"

using namespace harmap;

namespace {

double li2_series(double x) {
    double s = 0.0, p = 1.0;
    for (int n = 1; n < 4000; ++n) {
        p *= x;
        s += p / (double(n) * n);
    }
    return s;
}

HarmonicMap with_g(CatalogTag tag, std::vector<cplx> g) {
    const HarmonicMap f = make(tag);
    return HarmonicMap(f.h(), AnalyticSeries(std::move(g)).truncated(f.order()));
}

} // namespace

TEST_CASE("class names") {
    for (ClassKind k : kAllClasses)
        CHECK(parse_class(class_name(k)) == k);
    CHECK(parse_class("r_h0") == ClassKind::R_H0);
    CHECK_THROWS_AS(parse_class("X"), ArgumentError);
    CHECK(is_relative(ClassKind::F_H0_G));
    CHECK(is_coefficient_class(ClassKind::S_R));
    CHECK_FALSE(is_coefficient_class(ClassKind::W_H0));
}

TEST_CASE("relative classes need a reference map and absolute ones refuse it") {
    CHECK_THROWS_AS(ClassId(ClassKind::R_H0_G), ArgumentError);
    CHECK_THROWS_AS(ClassId(ClassKind::R_H0, make(CatalogTag::koebe)), ArgumentError);
    CHECK_THROWS_AS(ClassId(ClassKind::R_H0_G, make(CatalogTag::harmonic_koebe)), ArgumentError);
    CHECK_NOTHROW(ClassId(ClassKind::R_H0_G, make(CatalogTag::koebe)));
}

TEST_CASE("catalog extremals") {
    CHECK(membership(make(CatalogTag::macgregor_r), ClassId(ClassKind::R_H0)).member());
    CHECK(membership(make(CatalogTag::chichra_w), ClassId(ClassKind::W_H0)).member());
    const Membership u = membership(make(CatalogTag::u_sharp), ClassId(ClassKind::U_H0));
    CHECK(u.status == MembershipStatus::boundary);
    CHECK(u.margin == 0.0);
    CHECK(u.witness_index == 2);
    CHECK_FALSE(u.witness_point.has_value());
    CHECK(membership(make(CatalogTag::v_sharp_conj), ClassId(ClassKind::V_H0)).member());
    CHECK_FALSE(membership(make(CatalogTag::u_sharp), ClassId(ClassKind::V_H0)).member());
    CHECK_FALSE(membership(make(CatalogTag::koebe), ClassId(ClassKind::R_H0)).member());
}

TEST_CASE("perturbing an extremal breaks the class") {
    const Membership m = membership(with_g(CatalogTag::macgregor_r, {0.0, 0.05}), ClassId(ClassKind::R_H0));
    CHECK(m.status == MembershipStatus::non_member);
    REQUIRE(m.witness_point.has_value());
    CHECK(std::abs(*m.witness_point) == doctest::Approx(0.99));
    CHECK(class_slack(make(CatalogTag::macgregor_r), ClassId(ClassKind::R_H0), *m.witness_point) > m.margin);
}

TEST_CASE("S_R is exact about real coefficients and g = 0") {
    CHECK(membership(make(CatalogTag::koebe), ClassId(ClassKind::S_R)).member());
    CHECK_FALSE(membership(make(CatalogTag::u_sharp_conj), ClassId(ClassKind::S_R)).member());
    HarmonicMap tilted = HarmonicMap::analytic(AnalyticSeries(std::vector<cplx>{1.0, cplx(0.0, 1e-14)}));
    CHECK_FALSE(membership(tilted, ClassId(ClassKind::S_R)).member());
}

TEST_CASE("membership requires normalization") {
    const HarmonicMap f = HarmonicMap::analytic(AnalyticSeries(std::vector<cplx>{2.0, 0.1}));
    CHECK_THROWS_AS(membership(f, ClassId(ClassKind::F_H0)), ArgumentError);
}

TEST_CASE("relative class: G vanishing derivative is reported") {
    // G = z - z^2 has G'(1/2) = 0 on the grid radius 0.5
    const HarmonicMap G = HarmonicMap::analytic(AnalyticSeries(std::vector<cplx>{1.0, -1.0}));
    CHECK_THROWS_AS(membership(G, ClassId(ClassKind::R_H0_G, G)), SingularReferenceError);
    CHECK(std::isnan(class_slack(G, ClassId(ClassKind::R_H0_G, G), 0.5)));
}

TEST_CASE("epsilon sweep") {
    auto starlike = [](const HarmonicMap& s) { return starlike_margin(s, 0.5).min_margin > 0; };
    CHECK(epsilon_sweep_membership(make(CatalogTag::koebe), starlike));
    int calls = 0;
    auto count = [&](const HarmonicMap&) { ++calls; return true; };
    CHECK(epsilon_sweep_membership(make(CatalogTag::koebe), count));
    CHECK(calls == 1);
    calls = 0;
    CHECK(epsilon_sweep_membership(make(CatalogTag::harmonic_koebe), count, 16));
    CHECK(calls == 16);
    CHECK_THROWS_AS(epsilon_sweep_membership(make(CatalogTag::koebe), count, 4), ArgumentError);
}

TEST_CASE("growth envelopes against series oracles") {
    for (double r : {0.2, 0.5, 0.9}) {
        const auto R = growth_envelope(ClassKind::R_H0, r);
        CHECK(std::abs(R.first - (-r + 2 * std::log(1 + r))) < 1e-14);
        const auto W = growth_envelope(ClassKind::W_H0, r);
        // -r + 2 int_0^r log(1 +- t)/t dt = -r -+ 2 Li2(-+r)
        CHECK(std::abs(W.first - (-r - 2 * li2_series(-r))) < 1e-12);
        CHECK(std::abs(W.second - (-r + 2 * li2_series(r))) < 1e-12);
        CHECK(growth_envelope(ClassKind::V_H0, r).second == r + r * r / 4);
    }
    CHECK(std::abs(covering_constant(ClassKind::R_H0) - (2 * std::numbers::ln2 - 1)) < 1e-15);
    CHECK(std::abs(covering_constant(ClassKind::W_H0) - (std::numbers::pi * std::numbers::pi / 6 - 1)) < 1e-12);
    CHECK(covering_constant(ClassKind::U_H0) == 0.5);
    CHECK(covering_constant(ClassKind::V_H0) == 0.75);
    CHECK_THROWS_AS(growth_envelope(ClassKind::S_R, 0.5), ArgumentError);
    CHECK_THROWS_AS(growth_envelope(ClassKind::R_H0, 1.0), DomainError);
}

TEST_CASE("coefficient bound checks") {
    const BoundReport rep = coefficient_bound_check(make(CatalogTag::macgregor_r), bound_table(ClassKind::R_H0), 32);
    CHECK(rep.ok());
    CHECK(rep.tight.size() == 31);
    const BoundReport bad = coefficient_bound_check(make(CatalogTag::koebe), bound_table(ClassKind::R_H0), 10);
    CHECK_FALSE(bad.ok());
    CHECK(bad.violations.front() == 2);
    CHECK_THROWS_AS(coefficient_bound_check(make(CatalogTag::koebe, 8), bound_table(ClassKind::U_H0), 9),
                    ArgumentError);
    CHECK_THROWS_AS(bound_table(ClassKind::F_H0), ArgumentError);
}

TEST_CASE("samplers are deterministic and land in their class") {
    for (ClassKind k : {ClassKind::R_H0, ClassKind::W_H0, ClassKind::F_H0, ClassKind::U_H0, ClassKind::V_H0,
                        ClassKind::S_R}) {
        CAPTURE(class_name(k));
        const HarmonicMap a = sample_member(k, 11), b = sample_member(k, 11);
        CHECK(a.h() == b.h());
        CHECK(a.g() == b.g());
        CHECK(membership(a, ClassId(k)).member());
    }
    const HarmonicMap G = make(CatalogTag::half_plane, 200);
    const HarmonicMap f = sample_relative_member(ClassKind::F_H0_G, G, 3);
    CHECK(membership(f, ClassId(ClassKind::F_H0_G, G), relative_grid()).member());
}

TEST_CASE("epsilon sweep examples") {
    // z + conj(z^2)/2: Re(1 + eps z) > 0 on every slice
    auto re_positive = [](const HarmonicMap& s) {
        const SamplingGrid grid = SamplingGrid::standard();
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (eval_jet(s.h(), grid.point(i)).d1.real() <= 0)
                return false;
        return true;
    };
    CHECK(epsilon_sweep_membership(make(CatalogTag::u_sharp_conj), re_positive));
    // the slice eps = 1 of the harmonic Koebe map is not univalent
    auto univalent = [](const HarmonicMap& s) { return univalent_on_circle(s, 0.95); };
    CHECK_FALSE(epsilon_sweep_membership(make(CatalogTag::harmonic_koebe), univalent));
}
