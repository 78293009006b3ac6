#include "harmap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "harmap/errors.hpp"

namespace harmap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDegenerate = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_radius(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("radius must lie in (0, 1), got " + std::to_string(r));
}

cplx on_circle(double r, std::size_t k, std::size_t M) {
    return std::polar(r, kTwoPi * static_cast<double>(k) / static_cast<double>(M));
}

double cross(cplx a, cplx b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

int orientation(cplx a, cplx b, cplx c) {
    const double v = cross(b - a, c - a);
    return (v > 0.0) - (v < 0.0);
}

bool within_box(cplx a, cplx b, cplx p) {
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(cplx p1, cplx p2, cplx p3, cplx p4) {
    const int d1 = orientation(p3, p4, p1);
    const int d2 = orientation(p3, p4, p2);
    const int d3 = orientation(p1, p2, p3);
    const int d4 = orientation(p1, p2, p4);
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return true;
    return (d1 == 0 && within_box(p3, p4, p1)) || (d2 == 0 && within_box(p3, p4, p2)) ||
           (d3 == 0 && within_box(p1, p2, p3)) || (d4 == 0 && within_box(p1, p2, p4));
}

GeometryReport finish(Functional functional, double r, std::size_t M, const kernels::ArgMin& m,
                      const char* what) {
    if (m.degenerate())
        throw DegenerateError(std::string(what) + " vanishes at r = " + std::to_string(r) +
                              ", theta = " +
                              std::to_string(kTwoPi * double(m.first_degenerate) / double(M)));
    return {functional, r, m.value, kTwoPi * static_cast<double>(m.index) / static_cast<double>(M)};
}

} // namespace

SamplingGrid SamplingGrid::standard() {
    return {{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}, 256};
}

SamplingGrid SamplingGrid::up_to(double r_max, std::size_t angles) {
    SamplingGrid g{{}, angles};
    for (double r : standard().radii)
        if (r <= r_max + 1e-15)
            g.radii.push_back(r);
    if (g.radii.empty() || g.radii.back() < r_max)
        g.radii.push_back(r_max);
    return g;
}

void SamplingGrid::validate() const {
    if (radii.empty())
        throw ArgumentError("sampling grid has no radii");
    if (angles < 64)
        throw ArgumentError("sampling grid needs at least 64 angles");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0))
            throw ArgumentError("sampling grid radii must lie in (0, 1)");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw ArgumentError("sampling grid radii must be strictly ascending");
    }
}

cplx SamplingGrid::point(std::size_t flat_index) const {
    return on_circle(radii[flat_index / angles], flat_index % angles, angles);
}

std::string_view functional_name(Functional f) {
    switch (f) {
    case Functional::starlike:
        return "starlike";
    case Functional::convex:
        return "convex";
    case Functional::univalent:
        return "univalent";
    }
    return "?";
}

Functional parse_functional(std::string_view name) {
    for (Functional f : {Functional::starlike, Functional::convex, Functional::univalent})
        if (functional_name(f) == name)
            return f;
    throw ArgumentError("unknown property '" + std::string(name) + "'");
}

std::size_t required_order(double r_max) {
    return r_max >= 0.99 - 1e-12 ? 200 : kDefaultOrder;
}

GeometryReport starlike_margin(const HarmonicMap& f, double r, std::size_t M, Exec exec) {
    require_radius(r);
    const auto m = kernels::argmin(
        M,
        [&](std::size_t k) {
            const cplx z = on_circle(r, k, M);
            const MapJet j = map_jet(f, z);
            const cplx w = j.h.value + std::conj(j.g.value);
            if (std::abs(w) < kDegenerate)
                return kNaN;
            return ((z * j.h.d1 - std::conj(z * j.g.d1)) / w).real();
        },
        exec);
    return finish(Functional::starlike, r, M, m, "f(z)");
}

GeometryReport convex_margin(const HarmonicMap& f, double r, std::size_t M, Exec exec) {
    require_radius(r);
    const auto m = kernels::argmin(
        M,
        [&](std::size_t k) {
            const cplx z = on_circle(r, k, M);
            const MapJet j = map_jet(f, z);
            const cplx zh = z * j.h.d1, zg = z * j.g.d1;
            const cplx T = cplx(0.0, 1.0) * (zh - std::conj(zg));
            if (std::abs(T) < kDegenerate)
                return kNaN;
            const cplx dT = -(zh + z * z * j.h.d2 + std::conj(zg + z * z * j.g.d2));
            return (dT / T).imag();
        },
        exec);
    return finish(Functional::convex, r, M, m, "tangent");
}

std::vector<cplx> circle_image(const HarmonicMap& f, double r, std::size_t M, Exec exec) {
    require_radius(r);
    std::vector<cplx> pts(M);
    kernels::transform(M, [&](std::size_t k) { return eval_map(f, on_circle(r, k, M)); }, pts.data(),
                       exec);
    return pts;
}

bool polygon_self_intersects(std::span<const cplx> pts, Exec exec) {
    const std::size_t M = pts.size();
    if (M < 4)
        return false;
    const auto m = kernels::argmin(
        M,
        [&](std::size_t i) {
            const cplx a = pts[i], b = pts[(i + 1) % M];
            const double lo_x = std::min(a.real(), b.real()), hi_x = std::max(a.real(), b.real());
            const double lo_y = std::min(a.imag(), b.imag()), hi_y = std::max(a.imag(), b.imag());
            for (std::size_t j = i + 2; j < M; ++j) {
                if (i == 0 && j == M - 1)
                    continue;
                const cplx c = pts[j], d = pts[(j + 1) % M];
                if (std::max(c.real(), d.real()) < lo_x || std::min(c.real(), d.real()) > hi_x ||
                    std::max(c.imag(), d.imag()) < lo_y || std::min(c.imag(), d.imag()) > hi_y)
                    continue;
                if (segments_intersect(a, b, c, d))
                    return 0.0;
            }
            return 1.0;
        },
        exec);
    return m.value == 0.0;
}

int winding_number(std::span<const cplx> pts, cplx c) {
    double turn = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const cplx a = pts[k] - c, b = pts[(k + 1) % pts.size()] - c;
        if (std::abs(a) < kDegenerate)
            throw DegenerateError("winding centre lies on the polygon");
        turn += std::arg(b / a);
    }
    return static_cast<int>(std::lround(turn / kTwoPi));
}

bool univalent_on_circle(const HarmonicMap& f, double r, std::size_t M, Exec exec) {
    require_radius(r);
    const auto jac = kernels::argmin(M, [&](std::size_t k) { return jacobian(f, on_circle(r, k, M)); },
                                     exec);
    if (!(jac.value > 0.0) || jac.degenerate())
        return false;
    const std::vector<cplx> pts = circle_image(f, r, M, exec);
    const cplx centre = eval_map(f, 0.0);
    for (const cplx& p : pts)
        if (std::abs(p - centre) < kDegenerate)
            return false;
    if (winding_number(pts, centre) != 1)
        return false;
    return !polygon_self_intersects(pts, exec);
}

double margin_at(const HarmonicMap& f, Functional property, double r, Exec exec) {
    switch (property) {
    case Functional::starlike:
        return starlike_margin(f, r, kMarginAngles, exec).min_margin;
    case Functional::convex:
        return convex_margin(f, r, kMarginAngles, exec).min_margin;
    case Functional::univalent:
        return univalent_on_circle(f, r, kUnivalenceAngles, exec) ? 1.0 : -1.0;
    }
    throw ArgumentError("unknown property");
}

RadiusEstimate radius_estimate(const HarmonicMap& f, Functional property, double tol,
                               const SamplingGrid& grid) {
    if (!(tol > 0.0))
        throw ArgumentError("radius tolerance must be positive");
    grid.validate();
    auto holds = [&](double r) { return margin_at(f, property, r) > 0.0; };

    double lo = 0.0, hi = 1.0;
    bool failed = false;
    for (double r : grid.radii) {
        if (!holds(r)) {
            hi = r;
            failed = true;
            break;
        }
        lo = r;
    }
    if (!failed)
        return {property, 1.0, 1.0, 1.0, tol};
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? lo : hi) = mid;
    }
    return {property, lo, hi, 0.5 * (lo + hi), tol};
}

double poly_eval(std::span<const double> ascending, double x) {
    double acc = 0.0;
    for (std::size_t k = ascending.size(); k-- > 0;)
        acc = acc * x + ascending[k];
    return acc;
}

double smallest_positive_root(std::span<const double> ascending) {
    if (ascending.empty())
        throw ArgumentError("polynomial has no coefficients");
    constexpr int kSteps = 1000;
    double prev_x = 0.0;
    double prev = poly_eval(ascending, 0.0);
    for (int k = 1; k <= kSteps; ++k) {
        const double x = static_cast<double>(k) / kSteps;
        const double v = poly_eval(ascending, x);
        if (k < kSteps && v == 0.0)
            return x;
        if ((prev < 0.0 && v > 0.0) || (prev > 0.0 && v < 0.0)) {
            double lo = prev_x, hi = x;
            const bool rising = v > 0.0;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                const double pm = poly_eval(ascending, mid);
                if (pm == 0.0)
                    return mid;
                ((pm > 0.0) == rising ? hi : lo) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_x = x;
        prev = v;
    }
    throw NotFoundError("no sign change of the polynomial inside (0, 1)");
}

} // namespace harmap
