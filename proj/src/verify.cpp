#include "harmap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "harmap/catalog.hpp"
#include "harmap/classes.hpp"
#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"
#include "harmap/render.hpp"

namespace harmap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr int kClassSamples = 500;
constexpr int kPairs = 200;
constexpr int kRadiusMembers = 50;
constexpr int kLambdas = 16;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream per (suite seed, purpose, sample index).
std::uint64_t stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t k) {
    return splitmix(splitmix(seed ^ (salt * 0x100000001b3ULL)) + k);
}

std::uint64_t salt_of(ClassKind k) {
    return 100 + static_cast<std::uint64_t>(k);
}

bool holds(Relation rel, double expected, double measured, double tol) {
    switch (rel) {
    case Relation::near:
        return std::abs(measured - expected) <= tol;
    case Relation::at_most:
        return measured <= expected + tol;
    case Relation::at_least:
        return measured >= expected - tol;
    case Relation::below:
        return measured < expected;
    case Relation::above:
        return measured > expected;
    }
    return false;
}

const char* relation_prefix(Relation rel) {
    switch (rel) {
    case Relation::near:
        return "";
    case Relation::at_most:
        return "<= ";
    case Relation::at_least:
        return ">= ";
    case Relation::below:
        return "< ";
    case Relation::above:
        return "> ";
    }
    return "";
}

std::string cnum(cplx c) {
    return "(" + format_number(c.real()) + "," + format_number(c.imag()) + ")";
}

std::string describe(const HarmonicMap& f, std::size_t terms = 6) {
    std::string s = "h=[";
    for (std::size_t n = 1; n <= std::min(terms, f.order()); ++n)
        s += (n > 1 ? "," : "") + cnum(f.h().coeff(n));
    s += "] g=[";
    for (std::size_t n = 1; n <= std::min(terms, f.order()); ++n)
        s += (n > 1 ? "," : "") + cnum(f.g().coeff(n));
    return s + "]";
}

class Recorder {
public:
    explicit Recorder(SuiteReport& r) : r_(r) {}

    void add(std::string description, const char* provenance, Relation rel, double expected,
             double measured, double tol, std::string witness = {}) {
        const bool ok = holds(rel, expected, measured, tol);
        r_.checks.push_back({std::move(description), provenance, rel, expected, measured, tol, ok,
                             ok ? std::string{} : std::move(witness)});
    }

private:
    SuiteReport& r_;
};

// Worst value of a per-sample quantity with the first offending sample kept as witness.
struct Tally {
    double worst;
    bool lower_is_worse;
    std::string witness;
    int failures = 0;

    static Tally min() { return {kInf, true, {}}; }
    static Tally max() { return {-kInf, false, {}}; }

    void see(double v, bool failed, const std::function<std::string()>& why) {
        if (lower_is_worse ? v < worst : v > worst)
            worst = v;
        if (failed && failures++ == 0)
            witness = why();
    }
};

cplx unimodular(int k, int M) {
    return std::polar(1.0, 2.0 * kPi * double(k) / double(M));
}

HarmonicMap random_map(std::uint64_t seed, std::size_t order) {
    std::mt19937_64 eng(seed);
    auto u = [&] { return double(eng() >> 11) * 0x1.0p-53; };
    auto coeffs = [&](bool lead) {
        return AnalyticSeries::from_rule(order, [&](std::size_t n) {
            if (n == 1)
                return cplx(lead ? 1.0 : 0.0);
            return std::polar(u() / double(n), 2.0 * kPi * u());
        });
    };
    AnalyticSeries h = coeffs(true);
    AnalyticSeries g = coeffs(false);
    return HarmonicMap(std::move(h), std::move(g));
}

double max_coeff_diff(const AnalyticSeries& a, const AnalyticSeries& b) {
    double d = 0.0;
    for (std::size_t n = 0; n <= std::max(a.order(), b.order()); ++n)
        d = std::max(d, std::abs(a.coeff(n) - b.coeff(n)));
    return d;
}

const char* name_of(ClassKind k) {
    return class_name(k).data();
}

std::vector<double> fractions_of(double bound, int count) {
    std::vector<double> r;
    for (int k = 1; k <= count; ++k)
        r.push_back(bound * double(k) / double(count));
    return r;
}

std::vector<double> standard_radii_upto(double r_max) {
    std::vector<double> r;
    for (double x : SamplingGrid::standard().radii)
        if (x <= r_max + 1e-12)
            r.push_back(x);
    return r;
}

// Lowest margin of `property` over the radii for one map.
double min_margin(const HarmonicMap& f, Functional property, const std::vector<double>& radii,
                  double* at = nullptr) {
    double worst = kInf;
    for (double r : radii) {
        const double m = margin_at(f, property, r);
        if (m < worst) {
            worst = m;
            if (at)
                *at = r;
        }
    }
    return worst;
}

// membership of each sampled member for a derived map stays true.
void closure_check(Recorder& rec, const std::string& what, ClassKind target, int count,
                   const std::function<HarmonicMap(int)>& build) {
    Tally t = Tally::min();
    for (int k = 0; k < count; ++k) {
        const HarmonicMap f = build(k);
        const Membership m = membership(f, ClassId(target));
        t.see(m.margin, !m.member(), [&] {
            return "sample " + std::to_string(k) + " margin " + format_number(m.margin) + " " +
                   describe(f);
        });
    }
    rec.add(what + " (non-members found)", "published", Relation::near, 0.0, t.failures, 0.0,
            t.witness);
}

// --- suites -----------------------------------------------------------------

void coefficient_gap(Recorder& rec, const SuiteOptions& o) {
    for (ClassKind kind : {ClassKind::R_H0, ClassKind::W_H0, ClassKind::U_H0, ClassKind::V_H0}) {
        const BoundTable table = bound_table(kind);
        int violations = 0;
        double worst = -kInf;
        std::string witness;
        for (int k = 0; k < kClassSamples; ++k) {
            const std::uint64_t s = stream(o.seed, salt_of(kind), k);
            const HarmonicMap f = sample_member(kind, s);
            const BoundReport rep = coefficient_bound_check(f, table, 32);
            worst = std::max(worst, rep.worst_excess);
            if (!rep.ok() && violations++ == 0)
                witness = "seed " + std::to_string(s) + " n=" + std::to_string(rep.violations[0]);
        }
        rec.add(std::to_string(kClassSamples) + " sampled " + name_of(kind) +
                    " members, coefficient gap bound violations for n <= 32",
                "published", Relation::near, 0.0, violations, 0.0, witness);
        rec.add(std::string("largest excess of the gap over p(n), ") + name_of(kind), "published",
                Relation::at_most, 0.0, worst, 1e-12);
    }

    struct Extremal {
        CatalogTag tag;
        ClassKind kind;
        std::size_t n_max;
    };
    for (const Extremal& e : {Extremal{CatalogTag::macgregor_r, ClassKind::R_H0, 32},
                              Extremal{CatalogTag::chichra_w, ClassKind::W_H0, 32},
                              Extremal{CatalogTag::u_sharp, ClassKind::U_H0, 2},
                              Extremal{CatalogTag::u_sharp_conj, ClassKind::U_H0, 2},
                              Extremal{CatalogTag::v_sharp, ClassKind::V_H0, 2},
                              Extremal{CatalogTag::v_sharp_conj, ClassKind::V_H0, 2}}) {
        const HarmonicMap f = make(e.tag, 64);
        const BoundTable table = bound_table(e.kind);
        double dev = 0.0;
        for (std::size_t n = 2; n <= e.n_max; ++n)
            dev = std::max(dev, std::abs(std::abs(std::abs(f.h().coeff(n)) - std::abs(f.g().coeff(n))) -
                                         table.p(n)));
        rec.add(std::string(tag_name(e.tag)) + " attains p(n) of " + name_of(e.kind) + " for n <= " +
                    std::to_string(e.n_max),
                "published", Relation::near, 0.0, dev, 1e-12);
    }

    // gap n for the stable univalent family, gap 1 for the stable convex one
    for (CatalogTag tag : {CatalogTag::koebe, CatalogTag::harmonic_koebe}) {
        const HarmonicMap f = make(tag, 32);
        double dev = 0.0;
        for (std::size_t n = 2; n <= 32; ++n)
            dev = std::max(dev, std::abs(std::abs(f.h().coeff(n)) - std::abs(f.g().coeff(n)) - double(n)) /
                                    double(n));
        rec.add(std::string(tag_name(tag)) + " coefficient gap equals n (relative)", "published",
                Relation::near, 0.0, dev, 1e-14);
    }
    for (CatalogTag tag : {CatalogTag::half_plane, CatalogTag::harmonic_half_plane}) {
        const HarmonicMap f = make(tag, 32);
        double dev = 0.0;
        for (std::size_t n = 2; n <= 32; ++n)
            dev = std::max(dev, std::abs(std::abs(f.h().coeff(n)) - std::abs(f.g().coeff(n)) - 1.0));
        rec.add(std::string(tag_name(tag)) + " coefficient gap equals 1", "published", Relation::near,
                0.0, dev, 1e-13);
    }

    // an extremal h with a nonzero co-analytic part leaves the class
    const HarmonicMap ext = make(CatalogTag::macgregor_r, 64);
    const HarmonicMap perturbed(
        ext.h(), AnalyticSeries::from_rule(64, [](std::size_t n) { return n == 2 ? 0.05 : 0.0; }));
    rec.add("macgregor_r h with g = 0.05 z^2: R_H0 margin", "published", Relation::below, 0.0,
            membership(perturbed, ClassId(ClassKind::R_H0)).margin, 0.0);
}

void growth_transfer(Recorder& rec, const SuiteOptions& o) {
    const double radii[] = {0.25, 0.5, 0.75};
    constexpr int kAngles = 32;
    for (ClassKind kind : {ClassKind::R_H0, ClassKind::W_H0, ClassKind::U_H0, ClassKind::V_H0}) {
        std::pair<double, double> env[3];
        for (int i = 0; i < 3; ++i)
            env[i] = growth_envelope(kind, radii[i]);
        Tally t = Tally::min();
        for (int k = 0; k < kClassSamples; ++k) {
            const std::uint64_t s = stream(o.seed, salt_of(kind), k);
            const HarmonicMap f = sample_member(kind, s);
            double slack = kInf;
            cplx where{};
            for (int i = 0; i < 3; ++i)
                for (int a = 0; a < kAngles; ++a) {
                    const cplx z = radii[i] * unimodular(a, kAngles);
                    const double m = std::abs(eval_map(f, z));
                    const double v = std::min(m - env[i].first, env[i].second - m);
                    if (v < slack)
                        slack = v, where = z;
                }
            t.see(slack, slack < -1e-12,
                  [&] { return "seed " + std::to_string(s) + " z=" + cnum(where); });
        }
        rec.add(std::to_string(kClassSamples) + " sampled " + name_of(kind) +
                    " members inside the growth envelope at r = 0.25, 0.5, 0.75 (least slack)",
                "published", Relation::at_least, 0.0, t.worst, 1e-12, t.witness);
    }

    // derivative-side bounds for R_H0: (1-r)/(1+r) <= |h'| - |g'|, |h'| + |g'| <= (1+r)/(1-r)
    Tally t = Tally::min();
    for (int k = 0; k < kClassSamples; ++k) {
        const std::uint64_t s = stream(o.seed, salt_of(ClassKind::R_H0), k);
        const HarmonicMap f = sample_member(ClassKind::R_H0, s);
        double slack = kInf;
        for (double r : radii)
            for (int a = 0; a < kAngles; ++a) {
                const MapJet j = map_jet(f, r * unimodular(a, kAngles));
                const double lo = std::abs(j.h.d1) - std::abs(j.g.d1);
                const double hi = std::abs(j.h.d1) + std::abs(j.g.d1);
                slack = std::min({slack, lo - (1 - r) / (1 + r), (1 + r) / (1 - r) - hi});
            }
        t.see(slack, slack < -1e-12, [&] { return "seed " + std::to_string(s); });
    }
    rec.add("R_H0 samples: |h'| - |g'| and |h'| + |g'| inside the derivative bounds (least slack)",
            "published", Relation::at_least, 0.0, t.worst, 1e-12, t.witness);
}

void convolution_square(Recorder& rec, const SuiteOptions& o) {
    double worst = 0.0, worst_lin = 0.0, worst_pair = 0.0;
    for (int k = 0; k < 100; ++k) {
        const HarmonicMap f = random_map(stream(o.seed, 1, k), 32);
        const HarmonicMap F = random_map(stream(o.seed, 2, k), 32);
        const HarmonicMap fF = harmonic_convolve(f, F);
        for (int e = 0; e < kLambdas; ++e) {
            const cplx eps = unimodular(e, kLambdas);
            const cplx nu = std::sqrt(eps);
            const cplx i(0.0, 1.0);
            const AnalyticSeries lhs = convolve(f.h() + (i * nu) * f.g(), f.h() - (i * nu) * f.g());
            const AnalyticSeries rhs = convolve(f.h(), f.h()) + eps * convolve(f.g(), f.g());
            worst = std::max(worst, max_coeff_diff(lhs, rhs));

            const AnalyticSeries lin = convolve(f.h(), F.h()) + eps * convolve(f.g(), F.g());
            worst_lin = std::max(worst_lin, max_coeff_diff(slice(fF, SliceParam(eps)), lin));

            const AnalyticSeries F1 = convolve(f.h() - f.g(), F.h() - eps * F.g());
            const AnalyticSeries F2 = convolve(f.h() + f.g(), F.h() + eps * F.g());
            worst_pair = std::max(worst_pair, max_coeff_diff(0.5 * (F1 + F2), lin));
        }
    }
    rec.add("(h + i nu g) * (h - i nu g) = h*h + eps g*g, 100 maps x 16 eps", "identity",
            Relation::near, 0.0, worst, 1e-12);
    rec.add("slice of f*F equals h*H + eps g*G, 100 pairs x 16 eps", "identity", Relation::near, 0.0,
            worst_lin, 1e-13);
    rec.add("(F1 + F2)/2 = h1*h2 + eps g1*g2, 100 pairs x 16 eps", "identity", Relation::near, 0.0,
            worst_pair, 1e-12);

    closure_check(rec, "W_H0 pairs convolved stay in W_H0, 200 pairs", ClassKind::W_H0, kPairs,
                  [&](int k) {
                      return harmonic_convolve(
                          sample_member(ClassKind::W_H0, stream(o.seed, 3, k)),
                          sample_member(ClassKind::W_H0, stream(o.seed, 4, k)));
                  });
    closure_check(rec, "W_H0 members convolved with themselves stay in W_H0", ClassKind::W_H0, kPairs,
                  [&](int k) {
                      const HarmonicMap f = sample_member(ClassKind::W_H0, stream(o.seed, 3, k));
                      return harmonic_convolve(f, f);
                  });
    const HarmonicMap m = make(CatalogTag::macgregor_r, 64).without_closed_form();
    rec.add("macgregor_r convolved with itself leaves R_H0 (margin)", "published", Relation::below, 0.0,
            membership(harmonic_convolve(m, m), ClassId(ClassKind::R_H0)).margin, 0.0);
}

void tilde_product(Recorder& rec, const SuiteOptions& o) {
    const AnalyticSeries log_phi = log_map(64).h();
    const AnalyticSeries quarter = make(CatalogTag::v_sharp, 64).h();
    const AnalyticSeries half = make(CatalogTag::u_sharp, 64).h();
    struct Phi {
        const char* name;
        const AnalyticSeries* phi;
    };
    const Phi convex[] = {{"-log(1-z)", &log_phi}, {"z + z^2/4", &quarter}};
    const Phi half_plane_ratio[] = {{"z + z^2/2", &half}};

    auto run = [&](ClassKind kind, const Phi& p, std::uint64_t salt) {
        closure_check(rec, std::string(name_of(kind)) + " tilde " + p.name + ", 200 members", kind,
                      kPairs, [&](int k) {
                          return tilde_convolve(*p.phi, sample_member(kind, stream(o.seed, salt, k)));
                      });
    };
    for (const Phi& p : convex)
        for (ClassKind kind : {ClassKind::R_H0, ClassKind::W_H0, ClassKind::U_H0, ClassKind::V_H0})
            run(kind, p, salt_of(kind));
    for (const Phi& p : half_plane_ratio)
        for (ClassKind kind : {ClassKind::R_H0, ClassKind::W_H0})
            run(kind, p, salt_of(kind));

    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const HarmonicMap f = random_map(stream(o.seed, 5, k), 32);
        for (int e = 0; e < kLambdas; ++e) {
            const SliceParam eps(unimodular(e, kLambdas));
            worst = std::max(worst, max_coeff_diff(slice(tilde_convolve(log_phi, f), eps),
                                                   convolve(log_phi, slice(f, eps))));
        }
    }
    rec.add("slice of phi ~* f equals phi * slice, 100 maps x 16 eps", "identity", Relation::near, 0.0,
            worst, 1e-15);
}

void convex_combination_suite(Recorder& rec, const SuiteOptions& o) {
    for (ClassKind kind : {ClassKind::R_H0, ClassKind::W_H0, ClassKind::U_H0, ClassKind::V_H0}) {
        closure_check(rec, std::string("convex combinations of three ") + name_of(kind) +
                               " members, 200 draws",
                      kind, kPairs, [&](int k) {
                          std::mt19937_64 eng(stream(o.seed, 6, k));
                          double w[3], total = 0.0;
                          for (double& x : w)
                              total += (x = 0.05 + double(eng() >> 11) * 0x1.0p-53);
                          for (double& x : w)
                              x /= total;
                          w[2] = 1.0 - w[0] - w[1];
                          const HarmonicMap maps[] = {
                              sample_member(kind, stream(o.seed, salt_of(kind), 3 * k)),
                              sample_member(kind, stream(o.seed, salt_of(kind), 3 * k + 1)),
                              sample_member(kind, stream(o.seed, salt_of(kind), 3 * k + 2))};
                          return convex_combination(w, maps);
                      });
    }
    const double w[] = {0.5, 0.5};
    const HarmonicMap maps[] = {make(CatalogTag::u_sharp), make(CatalogTag::u_sharp_conj)};
    const HarmonicMap mix = convex_combination(w, maps);
    const Membership m = membership(mix, ClassId(ClassKind::U_H0));
    rec.add("half u_sharp + half u_sharp_conj: U_H0 coefficient sum", "oracle", Relation::near, 1.0,
            1.0 - m.margin, 1e-15);
    rec.add("half u_sharp + half u_sharp_conj: a_2 and b_2 equal 1/4", "oracle", Relation::near, 0.0,
            std::max(std::abs(mix.h().coeff(2) - 0.25), std::abs(mix.g().coeff(2) - 0.25)), 1e-15);
}

void koebe_slice_collision(Recorder& rec, const SuiteOptions&) {
    const HarmonicMap K = make(CatalogTag::harmonic_koebe, 64);
    const HarmonicMap HG = slice_map(K, SliceParam(1.0));
    const cplx p(0.0, 1.0 / std::sqrt(3.0));
    rec.add("|(H+G)(i/sqrt3) - (H+G)(-i/sqrt3)|", "published", Relation::near, 0.0,
            std::abs(eval_closed(HG, p) - eval_closed(HG, -p)), 1e-9);

    double dev = 0.0;
    for (cplx z : {cplx(0.3, 0.1), cplx(-0.5, 0.4), cplx(0.0, 0.8), cplx(0.85, -0.2)}) {
        const cplx u = 1.0 - z;
        dev = std::max(dev, std::abs(eval_closed(HG, z) - (z + z * z * z / 3.0) / (u * u * u)));
    }
    rec.add("H+G agrees with (z + z^3/3)/(1-z)^3", "published", Relation::near, 0.0, dev, 1e-12);
    rec.add("slice eps = 1 univalent on |z| = 0.99 (1 = yes)", "published", Relation::near, 0.0,
            univalent_on_circle(HG, 0.99) ? 1.0 : 0.0, 0.0);
    const bool swept = epsilon_sweep_membership(
        K, [](const HarmonicMap& s) { return univalent_on_circle(s, 0.95); }, 16);
    rec.add("every slice of K univalent on |z| = 0.95 (1 = yes)", "published", Relation::near, 0.0,
            swept ? 1.0 : 0.0, 0.0);
    rec.add("K itself univalent on |z| = 0.9 (1 = yes)", "oracle", Relation::near, 1.0,
            univalent_on_circle(K, 0.9) ? 1.0 : 0.0, 0.0);

    const HarmonicMap L = make(CatalogTag::harmonic_half_plane, 64);
    double least_re = kInf;
    for (double r : SamplingGrid::standard().radii)
        for (int a = 0; a < 256; ++a)
            least_re = std::min(least_re, eval_map(L, r * unimodular(a, 256)).real());
    rec.add("harmonic half-plane L stays in Re w > -1/2 on the sampling grid (least Re)", "oracle",
            Relation::above, -0.5, least_re, 0.0);
    // L(D) is convex but L is not fully convex: small circles only
    rec.add("harmonic half-plane L convex margin at r = 0.3", "oracle", Relation::above, 0.0,
            convex_margin(L, 0.3).min_margin, 0.0);
    rec.add("harmonic half-plane L convex margin at r = 0.9", "oracle", Relation::below, 0.0,
            convex_margin(L, 0.9).min_margin, 0.0);
    rec.add("M - N (the Koebe function) convex margin at r = 0.5", "published", Relation::below, 0.0,
            convex_margin(slice_map(L, SliceParam(-1.0)), 0.5).min_margin, 0.0);
}

void stable_class_constants(Recorder& rec, const SuiteOptions& o) {
    const HarmonicMap k = make(CatalogTag::koebe, 64);
    const RadiusEstimate rc = radius_estimate(k, Functional::convex, 1e-4);
    rec.add("Koebe radius of convexity", "published", Relation::near, 2.0 - std::sqrt(3.0), rc.value,
            1e-3);
    double dev = 0.0;
    for (double r : {0.25, 0.5, 0.75}) {
        dev = std::max(dev, std::abs(std::abs(eval_map(k, r)) - r / ((1 - r) * (1 - r))) / r);
        dev = std::max(dev, std::abs(std::abs(eval_map(k, -r)) - r / ((1 + r) * (1 + r))) / r);
    }
    rec.add("Koebe attains r/(1-r)^2 and r/(1+r)^2 at r = 0.25, 0.5, 0.75 (relative)", "published",
            Relation::near, 0.0, dev, 1e-15);
    const HarmonicMap l = make(CatalogTag::half_plane, 64);
    dev = 0.0;
    for (double r : {0.25, 0.5, 0.75}) {
        dev = std::max(dev, std::abs(std::abs(eval_map(l, r)) - r / (1 - r)) / r);
        dev = std::max(dev, std::abs(std::abs(eval_map(l, -r)) - r / (1 + r)) / r);
    }
    rec.add("half-plane map attains r/(1-r) and r/(1+r) (relative)", "published", Relation::near, 0.0,
            dev, 1e-15);
    rec.add("half-plane map convex margin at r = 0.99", "published", Relation::above, 0.0,
            convex_margin(l, 0.99).min_margin, 0.0);
    rec.add("Koebe starlike margin at r = 0.99", "published", Relation::above, 0.0,
            starlike_margin(k, 0.99).min_margin, 0.0);

    // slices h + mu g with |mu| <= 1 of stable members stay univalent
    Tally t = Tally::min();
    for (int s = 0; s < 10; ++s) {
        const HarmonicMap f = sample_member(ClassKind::R_H0, stream(o.seed, 7, s));
        for (double rho : {0.0, 0.5, 1.0})
            for (int a = 0; a < (rho == 0.0 ? 1 : 4); ++a) {
                const cplx mu = rho * unimodular(a, 4);
                const bool ok = univalent_on_circle(slice_map(f, SliceParam(mu)), 0.9);
                t.see(ok ? 1.0 : 0.0, !ok,
                      [&] { return "sample " + std::to_string(s) + " mu=" + cnum(mu); });
            }
    }
    rec.add("slices h + mu g, |mu| <= 1, of 10 R_H0 members univalent on |z| = 0.9 (failures)",
            "published", Relation::near, 0.0, t.failures, 0.0, t.witness);

    Tally ts = Tally::min(), tc = Tally::min();
    for (int s = 0; s < 20; ++s) {
        const HarmonicMap w = sample_member(ClassKind::W_H0, stream(o.seed, 8, s));
        const HarmonicMap v = sample_member(ClassKind::V_H0, stream(o.seed, 9, s));
        const double ms = min_margin(w, Functional::starlike, {0.3, 0.6, 0.9});
        const double mc = min_margin(v, Functional::convex, {0.3, 0.6, 0.9});
        ts.see(ms, !(ms > 0.0), [&] { return describe(w); });
        tc.see(mc, !(mc > 0.0), [&] { return describe(v); });
    }
    rec.add("20 W_H0 members fully starlike at r = 0.3, 0.6, 0.9 (least margin)", "published",
            Relation::above, 0.0, ts.worst, 0.0, ts.witness);
    rec.add("20 V_H0 members fully convex at r = 0.3, 0.6, 0.9 (least margin)", "published",
            Relation::above, 0.0, tc.worst, 0.0, tc.witness);
}

// sampled members rotated by 16 unimodular lambdas stay in the class
void slice_closure(Recorder& rec, const SuiteOptions& o, ClassKind kind, int count) {
    closure_check(rec, std::string(name_of(kind)) + " members with g rotated by 16 lambdas, " +
                           std::to_string(count) + " members",
                  kind, count * kLambdas, [&](int k) {
                      return rotate_co_analytic(
                          sample_member(kind, stream(o.seed, salt_of(kind), k / kLambdas)),
                          unimodular(k % kLambdas, kLambdas));
                  });
}

void one_sided_radius(Recorder& rec, const std::string& what, double bound, int count,
                      const std::function<HarmonicMap(int)>& member) {
    const std::vector<double> radii = fractions_of(bound - 1e-3, 4);
    Tally t = Tally::min();
    for (int k = 0; k < count; ++k) {
        const HarmonicMap f = member(k);
        double at = 0.0;
        const double m = min_margin(f, Functional::convex, radii, &at);
        t.see(m, m < -1e-6, [&] {
            return "sample " + std::to_string(k) + " r=" + format_number(at) + " " + describe(f);
        });
    }
    rec.add(what + ": least convex margin for r <= bound - 1e-3", "published", Relation::at_least, 0.0,
            t.worst, 1e-6, t.witness);
}

void re_derivative_class(Recorder& rec, const SuiteOptions& o) {
    const HarmonicMap m = make(CatalogTag::macgregor_r, 64);
    double dev = 0.0;
    for (double r : {0.25, 0.5, 0.75, 0.9}) {
        const auto [lo, hi] = growth_envelope(ClassKind::R_H0, r);
        dev = std::max({dev, std::abs(std::abs(eval_map(m, r)) - hi), std::abs(std::abs(eval_map(m, -r)) - lo)});
    }
    rec.add("macgregor_r attains both growth bounds at r = 0.25 .. 0.9", "published", Relation::near,
            0.0, dev, 1e-12);
    rec.add("R_H0 covering radius", "published", Relation::near, 2.0 * std::log(2.0) - 1.0,
            covering_constant(ClassKind::R_H0), 1e-9);
    rec.add("R_H0 lower envelope at r = 1 - 1e-9", "published", Relation::near,
            2.0 * std::log(2.0) - 1.0, growth_envelope(ClassKind::R_H0, 1.0 - 1e-9).first, 1e-8);

    const RadiusEstimate est = radius_estimate(m, Functional::convex, 1e-5);
    rec.add("macgregor_r radius of convexity (class bound sqrt2 - 1, one-sided)", "published",
            Relation::at_least, std::sqrt(2.0) - 1.0, est.value, 1e-3);
    rec.add("macgregor_r radius of convexity against the root of r^2 + 2r - 1", "oracle",
            Relation::near, std::sqrt(2.0) - 1.0, est.value, 1e-4);
    one_sided_radius(rec, "50 R_H0 members, bound sqrt2 - 1", std::sqrt(2.0) - 1.0, kRadiusMembers,
                     [&](int k) { return sample_member(ClassKind::R_H0, stream(o.seed, 10, k)); });
    slice_closure(rec, o, ClassKind::R_H0, 100);
}

void chichra_class(Recorder& rec, const SuiteOptions& o) {
    rec.add("W_H0 covering radius by quadrature", "published", Relation::near, kPi * kPi / 6.0 - 1.0,
            covering_constant(ClassKind::W_H0), 1e-6);
    const HarmonicMap w = make(CatalogTag::chichra_w, 64);
    double dev = 0.0;
    for (double r : {0.25, 0.5, 0.75, 0.9}) {
        const auto [lo, hi] = growth_envelope(ClassKind::W_H0, r);
        dev = std::max({dev, std::abs(std::abs(eval_map(w, r)) - hi), std::abs(std::abs(eval_map(w, -r)) - lo)});
    }
    rec.add("chichra_w attains both growth bounds (closed form vs quadrature)", "published",
            Relation::near, 0.0, dev, 1e-10);

    Tally t = Tally::min();
    const std::vector<double> radii = standard_radii_upto(0.95);
    for (int k = 0; k < kRadiusMembers; ++k) {
        const HarmonicMap f = sample_member(ClassKind::W_H0, stream(o.seed, 11, k));
        const double m = min_margin(f, Functional::starlike, radii);
        t.see(m, !(m > 0.0), [&] { return describe(f); });
    }
    rec.add("50 W_H0 members starlike on every sampled circle up to 0.95 (least margin)", "published",
            Relation::above, 0.0, t.worst, 0.0, t.witness);
    slice_closure(rec, o, ClassKind::W_H0, 100);
}

void coefficient_sum_classes(Recorder& rec, const SuiteOptions& o) {
    const Membership us = membership(make(CatalogTag::u_sharp), ClassId(ClassKind::U_H0));
    rec.add("u_sharp U_H0 margin", "published", Relation::near, 0.0, us.margin, 1e-15);
    rec.add("u_sharp reported as boundary member (1 = yes)", "published", Relation::near, 1.0,
            us.status == MembershipStatus::boundary ? 1.0 : 0.0, 0.0);
    rec.add("u_sharp V_H0 margin", "oracle", Relation::near, -1.0,
            membership(make(CatalogTag::u_sharp), ClassId(ClassKind::V_H0)).margin, 1e-15);
    for (CatalogTag tag : {CatalogTag::v_sharp, CatalogTag::v_sharp_conj})
        rec.add(std::string(tag_name(tag)) + " V_H0 margin", "published", Relation::near, 0.0,
                membership(make(tag), ClassId(ClassKind::V_H0)).margin, 1e-15);

    for (ClassKind kind : {ClassKind::U_H0, ClassKind::V_H0}) {
        const int power = kind == ClassKind::U_H0 ? 1 : 2;
        int bad = 0;
        std::string witness;
        for (int k = 0; k < kClassSamples; ++k) {
            const std::uint64_t s = stream(o.seed, salt_of(kind), k);
            const HarmonicMap f = sample_member(kind, s);
            for (std::size_t n = 2; n <= f.order(); ++n) {
                const double p = 1.0 / std::pow(double(n), power);
                if (std::abs(f.h().coeff(n)) > p + 1e-15 || std::abs(f.g().coeff(n)) > p + 1e-15) {
                    if (bad++ == 0)
                        witness = "seed " + std::to_string(s) + " n=" + std::to_string(n);
                    break;
                }
            }
        }
        rec.add(std::to_string(kClassSamples) + " " + name_of(kind) +
                    " members with |a_n| or |b_n| above the bound",
                "published", Relation::near, 0.0, bad, 0.0, witness);
    }
    rec.add("U_H0 covering radius", "published", Relation::near, 0.5,
            covering_constant(ClassKind::U_H0), 0.0);
    rec.add("V_H0 covering radius", "published", Relation::near, 0.75,
            covering_constant(ClassKind::V_H0), 0.0);

    const RadiusEstimate est = radius_estimate(make(CatalogTag::u_sharp), Functional::convex, 1e-5);
    rec.add("u_sharp radius of convexity", "published", Relation::near, 0.5, est.value, 1e-4);
    one_sided_radius(rec, "50 U_H0 members, bound 1/2", 0.5, kRadiusMembers,
                     [&](int k) { return sample_member(ClassKind::U_H0, stream(o.seed, 12, k)); });

    Tally t = Tally::min();
    const std::vector<double> radii = SamplingGrid::standard().radii;
    for (int k = 0; k < kRadiusMembers; ++k) {
        const HarmonicMap f = sample_member(ClassKind::V_H0, stream(o.seed, 13, k));
        const double m = min_margin(f, Functional::convex, radii);
        t.see(m, !(m > 0.0), [&] { return describe(f); });
    }
    rec.add("50 V_H0 members convex on every sampled circle (least margin)", "published",
            Relation::above, 0.0, t.worst, 0.0, t.witness);
    slice_closure(rec, o, ClassKind::U_H0, 100);
    slice_closure(rec, o, ClassKind::V_H0, 100);
}

void coefficient_sum_convolution(Recorder& rec, const SuiteOptions& o) {
    auto upair = [&](int k) {
        return harmonic_convolve(sample_member(ClassKind::U_H0, stream(o.seed, 14, k)),
                                 sample_member(ClassKind::U_H0, stream(o.seed, 15, k)));
    };
    closure_check(rec, "U_H0 pairs convolved stay in U_H0, 200 pairs", ClassKind::U_H0, kPairs, upair);
    closure_check(rec, "U_H0 pairs convolved land in V_H0, 200 pairs", ClassKind::V_H0, kPairs, upair);
    closure_check(rec, "V_H0 pairs convolved stay in V_H0, 200 pairs", ClassKind::V_H0, kPairs,
                  [&](int k) {
                      return harmonic_convolve(sample_member(ClassKind::V_H0, stream(o.seed, 16, k)),
                                               sample_member(ClassKind::V_H0, stream(o.seed, 17, k)));
                  });

    Tally q = Tally::max();
    for (int k = 0; k < kPairs; ++k) {
        const HarmonicMap f = sample_member(ClassKind::V_H0, stream(o.seed, 16, k));
        for (int e = 0; e < kLambdas; ++e) {
            const AnalyticSeries s = slice(f, SliceParam(unimodular(e, kLambdas)));
            double sum = 0.0;
            for (std::size_t n = 2; n <= s.order(); ++n)
                sum += double(n * n) * std::norm(s.coeff(n));
            q.see(sum, sum > 1.0 + 1e-12, [&] { return describe(f); });
        }
    }
    rec.add("sum n^2 |a_n + eps b_n|^2 on slices of 200 V_H0 members x 16 eps (largest)", "published",
            Relation::at_most, 1.0, q.worst, 1e-12, q.witness);

    Tally c = Tally::min();
    for (int k = 0; k < kRadiusMembers; ++k) {
        const HarmonicMap f = upair(k);
        const double m = min_margin(f, Functional::convex, {0.5, 0.9, 0.99});
        c.see(m, !(m > 0.0), [&] { return describe(f); });
    }
    rec.add("50 convolved U_H0 pairs convex at r = 0.5, 0.9, 0.99 (least margin)", "published",
            Relation::above, 0.0, c.worst, 0.0, c.witness);
}

void real_coefficient_class(Recorder& rec, const SuiteOptions& o) {
    closure_check(rec, "500 real-coefficient analytic maps accepted by S_R", ClassKind::S_R,
                  kClassSamples,
                  [&](int k) { return sample_member(ClassKind::S_R, stream(o.seed, 18, k)); });
    rec.add("u_sharp_conj rejected by S_R (1 = accepted)", "published", Relation::near, 0.0,
            membership(make(CatalogTag::u_sharp_conj), ClassId(ClassKind::S_R)).member() ? 1.0 : 0.0,
            0.0);
    const HarmonicMap complex_a = HarmonicMap::analytic(
        AnalyticSeries::from_rule(8, [](std::size_t n) { return n == 1 ? cplx(1.0) : n == 2 ? cplx(0, 0.25) : cplx(0); }));
    rec.add("z + i z^2/4 rejected by S_R (1 = accepted)", "published", Relation::near, 0.0,
            membership(complex_a, ClassId(ClassKind::S_R)).member() ? 1.0 : 0.0, 0.0);

    auto real_slice = [](const HarmonicMap& s) {
        return membership(s, ClassId(ClassKind::S_R)).member();
    };
    int wrong = 0;
    for (int k = 0; k < 100; ++k) {
        const HarmonicMap f = sample_member(ClassKind::S_R, stream(o.seed, 19, k));
        const HarmonicMap with_g(f.h(), AnalyticSeries::from_rule(f.order(), [k](std::size_t n) {
                                     return n == 2 + std::size_t(k % 5) ? 1e-3 : 0.0;
                                 }));
        wrong += epsilon_sweep_membership(f, real_slice, 16) ? 0 : 1;
        wrong += epsilon_sweep_membership(with_g, real_slice, 16) ? 1 : 0;
    }
    rec.add("slice sweep accepts g = 0 and rejects g != 0 for 100 real maps (mistakes)", "published",
            Relation::near, 0.0, wrong, 0.0);
}

void alexander_operators(Recorder& rec, const SuiteOptions& o) {
    const AnalyticSeries lk = alexander(make(CatalogTag::koebe, 64).h());
    rec.add("Lambda[Koebe] = half-plane map, N = 64", "identity", Relation::near, 0.0,
            max_coeff_diff(lk, make(CatalogTag::half_plane, 64).h()), 1e-14);
    const AnalyticSeries lm = alexander(make(CatalogTag::macgregor_r, 64).h());
    rec.add("Lambda[macgregor_r] = chichra_w, N = 64", "published", Relation::near, 0.0,
            max_coeff_diff(lm, make(CatalogTag::chichra_w, 64).h()), 1e-14);

    for (auto [src, dst] : {std::pair{CatalogTag::harmonic_koebe, CatalogTag::alexander_plus_K},
                            std::pair{CatalogTag::harmonic_half_plane, CatalogTag::alexander_plus_L}}) {
        const HarmonicMap series = alexander_plus(make(src, 200).without_closed_form());
        double dev = 0.0;
        for (int a = 0; a < 64; ++a)
            for (double r : {0.3, 0.6, 0.9}) {
                const cplx z = r * unimodular(a, 64);
                dev = std::max(dev, std::abs(eval_map(series, z) - eval_closed(dst, z)));
            }
        rec.add("series of alexander_plus(" + std::string(tag_name(src)) + ") vs " +
                    std::string(tag_name(dst)) + " closed form, N = 200, |z| <= 0.9",
                "published", Relation::near, 0.0, dev, 1e-6);
    }

    double comm = 0.0, minus = 0.0;
    for (int k = 0; k < 100; ++k) {
        const HarmonicMap f = random_map(stream(o.seed, 20, k), 32);
        for (int e = 0; e < kLambdas; ++e) {
            const SliceParam eps(unimodular(e, kLambdas));
            comm = std::max(comm, max_coeff_diff(slice(alexander_plus(f), eps), alexander(slice(f, eps))));
        }
        const HarmonicMap mm = alexander_minus(alexander_minus(f));
        const HarmonicMap pp = alexander_plus(alexander_plus(f));
        minus = std::max({minus, max_coeff_diff(mm.h(), pp.h()), max_coeff_diff(mm.g(), pp.g())});
    }
    rec.add("slice of Lambda+[f] equals Lambda of the slice, 100 maps x 16 eps", "identity",
            Relation::near, 0.0, comm, 1e-15);
    rec.add("Lambda- applied twice equals Lambda+ applied twice", "identity", Relation::near, 0.0,
            minus, 0.0);

    // -Lambda[N](1/2) with N_n = -(n-1)/2, summed term by term
    double oracle = 0.0, zn = 1.0;
    for (int n = 1; n <= 200; ++n, zn *= 0.5)
        oracle += (n - 1) / (2.0 * n) * zn * 0.5;
    const HarmonicMap lm_L = alexander_minus(make(CatalogTag::harmonic_half_plane, 200));
    rec.add("g-part of Lambda-[L] at 1/2 against the term-by-term sum", "oracle", Relation::near,
            oracle, eval(lm_L.g(), 0.5).real(), 1e-12);

    // image of R_H0 is stable starlike, image of U_H0 stable convex
    const std::vector<double> radii = standard_radii_upto(0.95);
    struct Image {
        ClassKind source;
        Functional property;
        const char* label;
    };
    for (const Image& im : {Image{ClassKind::R_H0, Functional::starlike, "Lambda+ of 50 R_H0 members starlike"},
                            Image{ClassKind::U_H0, Functional::convex, "Lambda+ of 50 U_H0 members convex"},
                            Image{ClassKind::W_H0, Functional::convex, "Lambda+ of 50 W_H0 members convex"}}) {
        Tally t = Tally::min();
        for (int k = 0; k < kRadiusMembers; ++k) {
            const HarmonicMap f = alexander_plus(sample_member(im.source, stream(o.seed, 21, k)));
            const double m = min_margin(f, im.property, radii);
            t.see(m, !(m > 0.0), [&] { return describe(f); });
        }
        rec.add(std::string(im.label) + " on every sampled circle up to 0.95 (least margin)", "published",
                Relation::above, 0.0, t.worst, 0.0, t.witness);
    }

    for (ClassKind kind : {ClassKind::R_H0, ClassKind::W_H0, ClassKind::U_H0, ClassKind::V_H0}) {
        closure_check(rec, std::string("Lambda+ keeps 100 ") + name_of(kind) + " members", kind, 100,
                      [&](int k) { return alexander_plus(sample_member(kind, stream(o.seed, salt_of(kind), k))); });
        closure_check(rec, std::string("Lambda- keeps 100 ") + name_of(kind) + " members", kind, 100,
                      [&](int k) { return alexander_minus(sample_member(kind, stream(o.seed, salt_of(kind), k))); });
    }
}

void figure_suite(Recorder& rec, const SuiteOptions& o, CatalogTag tag, Functional property,
                  const char* file) {
    const HarmonicMap f = make(tag, 200);
    double at = 0.0;
    const double m = min_margin(f, property, {0.9, 0.95, 0.99}, &at);
    rec.add(std::string(tag_name(tag)) + " least " + std::string(functional_name(property)) +
                " margin over r = 0.9, 0.95, 0.99",
            "published", Relation::below, 0.0, m, 0.0, "r=" + format_number(at));

    const std::vector<double> radii = {0.3, 0.5, 0.7, 0.8, 0.9, 0.95};
    const std::string a = render_svg(f, radii, 512);
    const std::string b = render_svg(f, radii, 512);
    rec.add("rendered SVG identical across two runs (1 = yes)", "identity", Relation::near, 1.0,
            a == b ? 1.0 : 0.0, 0.0);
    if (!o.figure_dir.empty())
        render_image(f, radii, 512, o.figure_dir + "/" + file);
}

void alexander_koebe_figure(Recorder& rec, const SuiteOptions& o) {
    figure_suite(rec, o, CatalogTag::alexander_plus_K, Functional::starlike, "alexander_plus_K.svg");
    const HarmonicMap f = make(CatalogTag::alexander_plus_K, 200);
    rec.add("alexander_plus_K univalent on |z| = 0.95 (1 = yes)", "oracle", Relation::near, 1.0,
            univalent_on_circle(f, 0.95) ? 1.0 : 0.0, 0.0);
}

void alexander_half_plane_figure(Recorder& rec, const SuiteOptions& o) {
    figure_suite(rec, o, CatalogTag::alexander_plus_L, Functional::convex, "alexander_plus_L.svg");
    rec.add("alexander_plus_L at z = 1/2 equals -log(1/2)", "oracle", Relation::near, std::log(2.0),
            eval_closed(CatalogTag::alexander_plus_L, 0.5).real(), 1e-12);
}

struct Reference {
    const char* label;
    HarmonicMap G;
};

std::vector<Reference> references() {
    return {{"G = Koebe (starlike)", make(CatalogTag::koebe, 200)},
            {"G = half-plane (convex)", make(CatalogTag::half_plane, 200)},
            {"G = macgregor_r (Re G' > 0)", make(CatalogTag::macgregor_r, 200)},
            {"G = -log(1-z) (Re G' > 1/2)", log_map(200)}};
}

void relative_radius(Recorder& rec, const SuiteOptions& o, ClassKind kind, const double bounds[4]) {
    const std::vector<Reference> refs = references();
    for (std::size_t i = 0; i < refs.size(); ++i)
        one_sided_radius(rec, std::string("50 ") + name_of(kind) + " members, " + refs[i].label +
                                  ", bound " + format_number(bounds[i]),
                         bounds[i], kRadiusMembers, [&](int k) {
                             return sample_relative_member(kind, refs[i].G,
                                                           stream(o.seed, 30 + i, k));
                         });
}

void relative_re_radius(Recorder& rec, const SuiteOptions& o) {
    const double bounds[4] = {3.0 - 2.0 * std::sqrt(2.0), 2.0 - std::sqrt(3.0), std::sqrt(5.0) - 2.0,
                              3.0 - 2.0 * std::sqrt(2.0)};
    relative_radius(rec, o, ClassKind::R_H0_G, bounds);
}

void relative_macgregor_radius(Recorder& rec, const SuiteOptions& o) {
    const double quartic[] = {-4.0, 4.0, 13.0, 2.0, 1.0};
    const double root = smallest_positive_root(quartic);
    rec.add("smallest positive root of r^4 + 2r^3 + 13r^2 + 4r - 4 above 0.40", "oracle",
            Relation::above, 0.40, root, 0.0);
    rec.add("smallest positive root of r^4 + 2r^3 + 13r^2 + 4r - 4 below 0.42", "oracle",
            Relation::below, 0.42, root, 0.0);
    rec.add("quartic residual at the root", "oracle", Relation::at_most, 0.0,
            std::abs(poly_eval(quartic, root)), 1e-10);
    const double bounds[4] = {0.2, 1.0 / 3.0, (std::sqrt(17.0) - 3.0) / 4.0, root};
    relative_radius(rec, o, ClassKind::F_H0_G, bounds);
}

using SuiteFn = void (*)(Recorder&, const SuiteOptions&);

struct SuiteEntry {
    std::string_view id;
    SuiteFn fn;
};

const SuiteEntry kSuites[] = {
    {"coefficient-gap", coefficient_gap},
    {"growth-transfer", growth_transfer},
    {"convolution-square", convolution_square},
    {"tilde-product", tilde_product},
    {"convex-combination", convex_combination_suite},
    {"koebe-slice-collision", koebe_slice_collision},
    {"stable-class-constants", stable_class_constants},
    {"re-derivative-class", re_derivative_class},
    {"chichra-class", chichra_class},
    {"coefficient-sum-classes", coefficient_sum_classes},
    {"coefficient-sum-convolution", coefficient_sum_convolution},
    {"real-coefficient-class", real_coefficient_class},
    {"alexander-operators", alexander_operators},
    {"alexander-koebe-figure", alexander_koebe_figure},
    {"alexander-half-plane-figure", alexander_half_plane_figure},
    {"relative-re-radius", relative_re_radius},
    {"relative-macgregor-radius", relative_macgregor_radius},
};

} // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string SuiteReport::to_text() const {
    std::string out;
    for (const Check& c : checks) {
        out += suite_id + "\t" + c.description + " [" + c.provenance + "]\t" +
               relation_prefix(c.relation) + format_number(c.expected) + "\t" +
               format_number(c.measured) + "\t" + format_number(c.tolerance) + "\t" +
               (c.pass ? "PASS" : "FAIL");
        if (!c.pass && !c.witness.empty())
            out += "\t" + c.witness;
        out += "\n";
    }
    return out;
}

const std::vector<std::string_view>& suite_ids() {
    static const std::vector<std::string_view> ids = [] {
        std::vector<std::string_view> v;
        for (const auto& s : kSuites)
            v.push_back(s.id);
        return v;
    }();
    return ids;
}

SuiteReport run_suite(std::string_view id, const SuiteOptions& opts) {
    for (const auto& s : kSuites) {
        if (s.id != id)
            continue;
        SuiteReport report{std::string(id), {}, 0.0};
        Recorder rec(report);
        const auto t0 = std::chrono::steady_clock::now();
        s.fn(rec, opts);
        report.elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    }
    throw ArgumentError("unknown suite '" + std::string(id) + "'");
}

} // namespace harmap
