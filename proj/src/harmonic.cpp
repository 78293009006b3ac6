#include "harmap/harmonic.hpp"

#include <cmath>
#include <numeric>

#include "harmap/errors.hpp"

namespace harmap {

HarmonicMap::HarmonicMap(AnalyticSeries h, AnalyticSeries g, std::optional<ClosedPair> closed)
    : closed_(std::move(closed)) {
    const std::size_t n = std::max(h.order(), g.order());
    h_ = h.order() == n ? std::move(h) : h.truncated(n);
    g_ = g.order() == n ? std::move(g) : g.truncated(n);
}

HarmonicMap HarmonicMap::analytic(AnalyticSeries h, std::optional<ClosedForm> closed) {
    const std::size_t n = h.order();
    std::optional<ClosedPair> pair;
    if (closed)
        pair = ClosedPair{*closed, ClosedForm{}, "analytic"};
    return HarmonicMap(std::move(h), AnalyticSeries::zero(n), std::move(pair));
}

bool HarmonicMap::is_normalized(double tol) const {
    return h_.is_normalized(tol) && std::abs(g_.coeff(1)) <= tol && std::abs(g_.constant()) <= tol;
}

HarmonicMap HarmonicMap::truncated(std::size_t order) const {
    return HarmonicMap(h_.truncated(order), g_.truncated(order), closed_);
}

SliceParam::SliceParam(cplx epsilon) : epsilon_(epsilon) {
    if (!(std::abs(epsilon) <= 1.0 + 1e-12))
        throw ArgumentError("slice parameter must satisfy |epsilon| <= 1");
}

SliceParam SliceParam::unimodular(double theta) {
    return SliceParam(std::polar(1.0, theta));
}

MapJet map_jet(const HarmonicMap& f, cplx z) {
    if (const auto& c = f.closed())
        return {c->h.jet(z), c->g.jet(z)};
    return {eval_jet(f.h(), z), eval_jet(f.g(), z)};
}

cplx eval_map(const HarmonicMap& f, cplx z) {
    if (const auto& c = f.closed())
        return c->h(z) + std::conj(c->g(z));
    return eval(f.h(), z) + std::conj(eval(f.g(), z));
}

cplx eval_closed(const HarmonicMap& f, cplx z) {
    const auto& c = f.closed();
    if (!c)
        throw UnsupportedError("map has no closed-form evaluator");
    return c->h(z) + std::conj(c->g(z));
}

double jacobian(const HarmonicMap& f, cplx z) {
    const MapJet j = map_jet(f, z);
    return std::norm(j.h.d1) - std::norm(j.g.d1);
}

cplx dilatation(const HarmonicMap& f, cplx z) {
    const MapJet j = map_jet(f, z);
    return j.g.d1 / j.h.d1;
}

AnalyticSeries slice(const HarmonicMap& f, SliceParam e) {
    const std::pair<cplx, AnalyticSeries> t[] = {{1.0, f.h()}, {e.value(), f.g()}};
    return linear_combine(t);
}

HarmonicMap slice_map(const HarmonicMap& f, SliceParam e) {
    std::optional<ClosedForm> closed;
    if (const auto& c = f.closed())
        closed = c->h + e.value() * c->g;
    return HarmonicMap::analytic(slice(f, e), std::move(closed));
}

HarmonicMap rotate_co_analytic(const HarmonicMap& f, cplx lambda) {
    std::optional<ClosedPair> closed;
    if (const auto& c = f.closed())
        closed = ClosedPair{c->h, std::conj(lambda) * c->g, c->label};
    return HarmonicMap(f.h(), std::conj(lambda) * f.g(), std::move(closed));
}

HarmonicMap harmonic_convolve(const HarmonicMap& f, const HarmonicMap& F) {
    return HarmonicMap(convolve(f.h(), F.h()), convolve(f.g(), F.g()));
}

HarmonicMap tilde_convolve(const AnalyticSeries& phi, const HarmonicMap& f) {
    return HarmonicMap(convolve(phi, f.h()), convolve(phi, f.g()));
}

HarmonicMap convex_combination(std::span<const double> weights, std::span<const HarmonicMap> maps) {
    if (weights.empty() || weights.size() != maps.size())
        throw ArgumentError("convex_combination needs equally many weights and maps, at least one");
    for (double w : weights)
        if (!(w >= 0.0))
            throw ArgumentError("convex_combination weights must be non-negative");
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12)
        throw ArgumentError("convex_combination weights must sum to 1");

    std::vector<std::pair<cplx, AnalyticSeries>> hs, gs;
    bool all_closed = true;
    ClosedForm ch, cg;
    for (std::size_t i = 0; i < maps.size(); ++i) {
        hs.emplace_back(weights[i], maps[i].h());
        gs.emplace_back(weights[i], maps[i].g());
        if (const auto& c = maps[i].closed()) {
            ch = ch + weights[i] * c->h;
            cg = cg + weights[i] * c->g;
        } else {
            all_closed = false;
        }
    }
    std::optional<ClosedPair> closed;
    if (all_closed)
        closed = ClosedPair{ch, cg, "convex_combination"};
    return HarmonicMap(linear_combine(hs), linear_combine(gs), std::move(closed));
}

namespace {

HarmonicMap alexander_signed(const HarmonicMap& f, double sign, const char* name) {
    std::optional<ClosedPair> closed;
    if (const auto& c = f.closed()) {
        auto h = c->h.alexander();
        auto g = c->g.alexander();
        if (h && g)
            closed = ClosedPair{*h, sign * *g, std::string(name) + "(" + c->label + ")"};
    }
    return HarmonicMap(alexander(f.h()), sign * alexander(f.g()), std::move(closed));
}

} // namespace

HarmonicMap alexander_plus(const HarmonicMap& f) {
    return alexander_signed(f, 1.0, "alexander_plus");
}

HarmonicMap alexander_minus(const HarmonicMap& f) {
    return alexander_signed(f, -1.0, "alexander_minus");
}

} // namespace harmap
