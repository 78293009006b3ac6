#include "harmap/classes.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "harmap/errors.hpp"

namespace harmap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct NameEntry {
    ClassKind kind;
    std::string_view name;
};

constexpr NameEntry kNames[] = {
    {ClassKind::R_H0, "R_H0"}, {ClassKind::W_H0, "W_H0"},     {ClassKind::F_H0, "F_H0"},
    {ClassKind::U_H0, "U_H0"}, {ClassKind::V_H0, "V_H0"},     {ClassKind::S_R, "S_R"},
    {ClassKind::R_H0_G, "R_H0_G"}, {ClassKind::F_H0_G, "F_H0_G"},
};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

MembershipStatus classify_margin(double margin) {
    if (margin > kStrictTol)
        return MembershipStatus::member;
    if (margin >= -kBoundarySlack)
        return MembershipStatus::boundary;
    return MembershipStatus::non_member;
}

// int_0^r log(1 + s t) / t dt for s = +1 or -1.
double log_integral(double r, double s) {
    auto f = [s](double t) { return s > 0 ? std::log1p(t) / t : std::log1p(-t) / t; };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, r, 15, 1e-14);
}

// Membership by coefficient sums: weight(n) (|a_n| + |b_n|) summed from n = 2.
Membership coefficient_sum(const HarmonicMap& f, int power) {
    double sum = 0.0, largest = -1.0;
    std::size_t arg = 1;
    for (std::size_t n = 2; n <= f.order(); ++n) {
        const double w = power == 1 ? double(n) : double(n) * double(n);
        const double term = w * (std::abs(f.h().coeff(n)) + std::abs(f.g().coeff(n)));
        sum += term;
        if (term > largest) {
            largest = term;
            arg = n;
        }
    }
    const double margin = 1.0 - sum;
    return {classify_margin(margin), margin, std::nullopt, arg};
}

Membership real_coefficients(const HarmonicMap& f) {
    double worst = 0.0;
    std::size_t arg = 1;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        const double v = std::max(std::abs(f.h().coeff(n).imag()), std::abs(f.g().coeff(n)));
        if (v > worst) {
            worst = v;
            arg = n;
        }
    }
    return {worst == 0.0 ? MembershipStatus::member : MembershipStatus::non_member, -worst,
            std::nullopt, arg};
}

// --- sampling -------------------------------------------------------------

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(u01() * double(n)) % n; }
    cplx unit() { return std::polar(1.0, kTwoPi * u01()); }

private:
    std::mt19937_64 eng_;
};

// Coefficients p_0 = 1, p_1, ... of a convex mix of (1 + x z)/(1 - x z),
// |x| <= 0.8, together with the lower bound of Re p on the disk.
struct Caratheodory {
    std::vector<cplx> p;
    double min_re;
};

Caratheodory caratheodory(Rng& rng, std::size_t len) {
    const std::size_t J = 1 + rng.below(4);
    std::vector<double> t(J);
    double total = 0.0;
    for (double& x : t)
        total += (x = 0.05 + rng.u01());
    Caratheodory c{std::vector<cplx>(len), 0.0};
    c.p[0] = 1.0;
    for (std::size_t j = 0; j < J; ++j) {
        const double w = t[j] / total;
        const double rho = 0.8 * rng.u01();
        const cplx x = rho * rng.unit();
        cplx xm = 1.0;
        for (std::size_t m = 1; m < len; ++m) {
            xm *= x;
            c.p[m] += 2.0 * w * xm;
        }
        c.min_re += w * (1.0 - rho) / (1.0 + rho);
    }
    return c;
}

// Few nonzero entries at the front, sum of moduli 1.
std::vector<cplx> unit_l1(Rng& rng, std::size_t len) {
    std::vector<cplx> b(len);
    const std::size_t support = std::min<std::size_t>(len, 8);
    const std::size_t count = 1 + rng.below(4);
    double total = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double m = 0.05 + rng.u01();
        b[rng.below(support)] += m * rng.unit();
    }
    for (const cplx& v : b)
        total += std::abs(v);
    for (cplx& v : b)
        v /= total;
    return b;
}

// Derivative-side data (h' = 1 + sum P_m z^m, g' = sum Q_m z^m), index
// m = 0..len-1, and a shrink factor s such that 1 + s(P - 1), sQ keep the
// defining slack above the sample margin on the whole disk.
struct DerivativePair {
    std::vector<cplx> P;
    std::vector<cplx> Q;
    double s = 1.0;
};

DerivativePair draw_re_pair(Rng& rng, std::size_t len) {
    Caratheodory c = caratheodory(rng, len);
    const std::vector<cplx> B = unit_l1(rng, len);
    const double scale = 0.9 * rng.u01() * c.min_re;
    std::vector<cplx> Q(len);
    for (std::size_t m = 1; m < len; ++m)
        Q[m] = scale * B[m - 1];
    // Re(1 + s(P - 1)) - s|Q| >= 1 - s(1 - min_re + scale)
    const double s = std::min(1.0, (1.0 - 0.06) / (1.0 - c.min_re + scale));
    return {std::move(c.p), std::move(Q), s};
}

DerivativePair draw_disk_pair(Rng& rng, std::size_t len) {
    const double alpha = 0.95 * rng.u01();
    const double beta = (0.95 - alpha) * rng.u01();
    const std::vector<cplx> B1 = unit_l1(rng, len), B2 = unit_l1(rng, len);
    DerivativePair d{std::vector<cplx>(len), std::vector<cplx>(len)};
    d.P[0] = 1.0;
    for (std::size_t m = 1; m < len; ++m) {
        d.P[m] = alpha * B1[m - 1];
        d.Q[m] = beta * B2[m - 1];
    }
    return d;
}

DerivativePair shrink(const DerivativePair& d, double s) {
    DerivativePair out = d;
    out.s = 1.0;
    for (std::size_t m = 1; m < out.P.size(); ++m)
        out.P[m] *= s;
    for (cplx& q : out.Q)
        q *= s;
    return out;
}

// Integrates h' = P (power 1) or (z h')' = P (power 2).
HarmonicMap integrate_pair(const DerivativePair& d, int power) {
    const std::size_t order = d.P.size();
    auto coeff = [&](const std::vector<cplx>& v) {
        return AnalyticSeries::from_rule(order, [&](std::size_t n) {
            return v[n - 1] / (power == 1 ? double(n) : double(n) * double(n));
        });
    };
    return HarmonicMap(coeff(d.P), coeff(d.Q));
}

HarmonicMap integrate_relative(const DerivativePair& d, const AnalyticSeries& Gp) {
    auto as_series = [&](const std::vector<cplx>& v) {
        return AnalyticSeries(std::vector<cplx>(v.begin() + 1, v.end()), v[0]);
    };
    return HarmonicMap(antiderivative(multiply(Gp, as_series(d.P))),
                       antiderivative(multiply(Gp, as_series(d.Q))));
}

constexpr double kSampleMargin = 0.05;
constexpr int kMaxShrink = 200;

template <class Build>
HarmonicMap shrink_until_margin(const DerivativePair& d, const ClassId& c, const SamplingGrid& grid,
                                Build&& build) {
    double s = d.s;
    for (int k = 0; k < kMaxShrink; ++k, s *= 0.8) {
        HarmonicMap f = build(shrink(d, s));
        if (membership(f, c, grid).margin >= kSampleMargin)
            return f;
    }
    throw NotFoundError("sampler could not reach the target margin");
}

HarmonicMap coefficient_member(Rng& rng, std::size_t order, int power, bool real_only) {
    const std::size_t top = std::min<std::size_t>(order, 24);
    std::vector<cplx> a(order), b(order);
    a[0] = 1.0;
    const std::size_t count = 1 + rng.below(6);
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t n = 2 + rng.below(top - 1);
        const double m = rng.u01() / double(n);
        if (real_only) {
            a[n - 1] += rng.u01() < 0.5 ? m : -m;
        } else if (rng.u01() < 0.5) {
            a[n - 1] += m * rng.unit();
        } else {
            b[n - 1] += m * rng.unit();
        }
    }
    double sum = 0.0;
    for (std::size_t n = 2; n <= order; ++n)
        sum += std::pow(double(n), power) * (std::abs(a[n - 1]) + std::abs(b[n - 1]));
    const double target = 0.3 + 0.7 * rng.u01();
    if (sum > 0.0)
        for (std::size_t n = 2; n <= order; ++n) {
            a[n - 1] *= target / sum;
            b[n - 1] *= target / sum;
        }
    return HarmonicMap(AnalyticSeries(std::move(a)), AnalyticSeries(std::move(b)));
}

} // namespace

std::string_view class_name(ClassKind kind) {
    for (const auto& e : kNames)
        if (e.kind == kind)
            return e.name;
    return "?";
}

ClassKind parse_class(std::string_view name) {
    for (const auto& e : kNames)
        if (iequals(e.name, name))
            return e.kind;
    throw ArgumentError("unknown class '" + std::string(name) + "'");
}

bool is_relative(ClassKind kind) {
    return kind == ClassKind::R_H0_G || kind == ClassKind::F_H0_G;
}

bool is_coefficient_class(ClassKind kind) {
    return kind == ClassKind::U_H0 || kind == ClassKind::V_H0 || kind == ClassKind::S_R;
}

ClassId::ClassId(ClassKind kind, std::optional<HarmonicMap> reference)
    : kind_(kind), reference_(std::move(reference)) {
    if (is_relative(kind) && !reference_)
        throw ArgumentError(std::string(class_name(kind)) + " needs a reference map G");
    if (!is_relative(kind) && reference_)
        throw ArgumentError(std::string(class_name(kind)) + " takes no reference map");
    if (reference_ && !reference_->g().is_zero())
        throw ArgumentError("reference map G must be analytic");
}

std::string_view status_name(MembershipStatus s) {
    switch (s) {
    case MembershipStatus::member:
        return "member";
    case MembershipStatus::boundary:
        return "boundary";
    case MembershipStatus::non_member:
        return "non-member";
    }
    return "?";
}

double class_slack(const HarmonicMap& f, const ClassId& c, cplx z) {
    const MapJet j = map_jet(f, z);
    switch (c.kind()) {
    case ClassKind::R_H0:
        return j.h.d1.real() - std::abs(j.g.d1);
    case ClassKind::W_H0:
        return (j.h.d1 + z * j.h.d2).real() - std::abs(j.g.d1 + z * j.g.d2);
    case ClassKind::F_H0:
        return 1.0 - std::abs(j.h.d1 - 1.0) - std::abs(j.g.d1);
    case ClassKind::R_H0_G:
    case ClassKind::F_H0_G: {
        const cplx Gp = map_jet(*c.reference(), z).h.d1;
        if (std::abs(Gp) < 1e-12)
            return kNaN;
        const cplx p = j.h.d1 / Gp, q = j.g.d1 / Gp;
        return c.kind() == ClassKind::R_H0_G ? p.real() - std::abs(q)
                                             : 1.0 - std::abs(p - 1.0) - std::abs(q);
    }
    default:
        throw ArgumentError(std::string(class_name(c.kind())) + " is not a sampled class");
    }
}

Membership membership(const HarmonicMap& f, const ClassId& c, const SamplingGrid& grid, Exec exec) {
    if (!f.is_normalized())
        throw ArgumentError("membership needs a normalized map (h_1 = 1, g_1 = 0)");
    switch (c.kind()) {
    case ClassKind::U_H0:
        return coefficient_sum(f, 1);
    case ClassKind::V_H0:
        return coefficient_sum(f, 2);
    case ClassKind::S_R:
        return real_coefficients(f);
    default:
        break;
    }
    if (grid.radii.empty())
        throw ArgumentError("sampling grid is empty");
    grid.validate();
    const auto m = kernels::argmin(
        grid.size(), [&](std::size_t i) { return class_slack(f, c, grid.point(i)); }, exec);
    if (m.degenerate())
        throw SingularReferenceError("G' vanishes at grid point " +
                                     std::to_string(m.first_degenerate));
    return {classify_margin(m.value), m.value, grid.point(m.index), m.index};
}

bool epsilon_sweep_membership(const HarmonicMap& f,
                              const std::function<bool(const HarmonicMap&)>& analytic_test,
                              std::size_t M) {
    if (M < 8)
        throw ArgumentError("epsilon sweep needs M >= 8");
    if (f.g().is_zero())
        return analytic_test(slice_map(f, SliceParam(1.0)));
    for (std::size_t k = 0; k < M; ++k)
        if (!analytic_test(slice_map(f, SliceParam::unimodular(kTwoPi * double(k) / double(M)))))
            return false;
    return true;
}

BoundTable bound_table(ClassKind kind) {
    auto lower = [kind](double r) { return growth_envelope(kind, r).first; };
    auto upper = [kind](double r) { return growth_envelope(kind, r).second; };
    switch (kind) {
    case ClassKind::R_H0:
        return {kind, [](std::size_t n) { return 2.0 / double(n); }, lower, upper};
    case ClassKind::W_H0:
        return {kind, [](std::size_t n) { return 2.0 / (double(n) * double(n)); }, lower, upper};
    case ClassKind::U_H0:
        return {kind, [](std::size_t n) { return 1.0 / double(n); }, lower, upper};
    case ClassKind::V_H0:
        return {kind, [](std::size_t n) { return 1.0 / (double(n) * double(n)); }, lower, upper};
    default:
        throw ArgumentError("no bound table for " + std::string(class_name(kind)));
    }
}

BoundReport coefficient_bound_check(const HarmonicMap& f, const BoundTable& table, std::size_t n_max) {
    if (n_max > f.order())
        throw ArgumentError("n_max exceeds the truncation order");
    BoundReport rep{n_max, {}, {}, -std::numeric_limits<double>::infinity()};
    for (std::size_t n = 2; n <= n_max; ++n) {
        const double gap = std::abs(std::abs(f.h().coeff(n)) - std::abs(f.g().coeff(n)));
        const double excess = gap - table.p(n);
        rep.worst_excess = std::max(rep.worst_excess, excess);
        if (excess > 1e-12)
            rep.violations.push_back(n);
        else if (excess >= -1e-12)
            rep.tight.push_back(n);
    }
    return rep;
}

std::pair<double, double> growth_envelope(ClassKind kind, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("growth envelope needs 0 < r < 1");
    switch (kind) {
    case ClassKind::R_H0:
        return {-r + 2.0 * std::log1p(r), -r - 2.0 * std::log1p(-r)};
    case ClassKind::W_H0:
        return {-r + 2.0 * log_integral(r, 1.0), -r - 2.0 * log_integral(r, -1.0)};
    case ClassKind::U_H0:
        return {r - 0.5 * r * r, r + 0.5 * r * r};
    case ClassKind::V_H0:
        return {r - 0.25 * r * r, r + 0.25 * r * r};
    default:
        throw ArgumentError("no growth envelope for " + std::string(class_name(kind)));
    }
}

double covering_constant(ClassKind kind) {
    switch (kind) {
    case ClassKind::R_H0:
        return 2.0 * std::numbers::ln2 - 1.0;
    case ClassKind::W_H0:
        return -1.0 + 2.0 * log_integral(1.0, 1.0);
    case ClassKind::U_H0:
        return 0.5;
    case ClassKind::V_H0:
        return 0.75;
    default:
        throw ArgumentError("no covering constant for " + std::string(class_name(kind)));
    }
}

HarmonicMap sample_member(ClassKind kind, std::uint64_t seed, std::size_t order) {
    if (order < 2)
        throw ArgumentError("sample order must be at least 2");
    Rng rng(seed);
    switch (kind) {
    case ClassKind::U_H0:
        return coefficient_member(rng, order, 1, false);
    case ClassKind::V_H0:
        return coefficient_member(rng, order, 2, false);
    case ClassKind::S_R:
        return coefficient_member(rng, order, 1, true);
    case ClassKind::R_H0:
    case ClassKind::W_H0: {
        const int power = kind == ClassKind::R_H0 ? 1 : 2;
        return shrink_until_margin(draw_re_pair(rng, order), ClassId(kind), SamplingGrid::standard(),
                                   [&](const DerivativePair& d) { return integrate_pair(d, power); });
    }
    case ClassKind::F_H0:
        return shrink_until_margin(draw_disk_pair(rng, order), ClassId(kind), SamplingGrid::standard(),
                                   [&](const DerivativePair& d) { return integrate_pair(d, 1); });
    default:
        throw ArgumentError("sample_member does not support " + std::string(class_name(kind)));
    }
}

SamplingGrid relative_grid() {
    return SamplingGrid::up_to(0.8);
}

HarmonicMap sample_relative_member(ClassKind kind, const HarmonicMap& G, std::uint64_t seed,
                                   std::size_t order) {
    if (!is_relative(kind))
        throw ArgumentError("sample_relative_member needs R_H0_G or F_H0_G");
    if (order < 3)
        throw ArgumentError("sample order must be at least 3");
    const ClassId c(kind, G.truncated(order).without_closed_form());
    const AnalyticSeries Gp = derivative(G.h().truncated(order));
    Rng rng(seed);
    const DerivativePair d = kind == ClassKind::R_H0_G ? draw_re_pair(rng, order - 1)
                                                       : draw_disk_pair(rng, order - 1);
    return shrink_until_margin(d, c, relative_grid(),
                               [&](const DerivativePair& e) { return integrate_relative(e, Gp); });
}

} // namespace harmap
