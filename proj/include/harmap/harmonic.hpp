#pragma once

#include <optional>
#include <span>

#include "harmap/closed_form.hpp"
#include "harmap/series.hpp"

namespace harmap {

/// f = h + conj(g) on the unit disk, stored as truncated series with an
/// optional exact evaluator. When the closed form is present it is used for
/// every evaluation; the series is kept for coefficient work.
class HarmonicMap {
public:
    HarmonicMap() = default;
    /// Pads the shorter of h, g with zeros so both share one order.
    HarmonicMap(AnalyticSeries h, AnalyticSeries g, std::optional<ClosedPair> closed = std::nullopt);

    /// (h, 0).
    static HarmonicMap analytic(AnalyticSeries h, std::optional<ClosedForm> closed = std::nullopt);

    const AnalyticSeries& h() const { return h_; }
    const AnalyticSeries& g() const { return g_; }
    std::size_t order() const { return h_.order(); }
    const std::optional<ClosedPair>& closed() const { return closed_; }
    bool has_closed_form() const { return closed_.has_value(); }

    /// h_1 = 1, g_1 = 0 and no constant terms.
    bool is_normalized(double tol = 1e-12) const;

    HarmonicMap without_closed_form() const { return {h_, g_}; }
    HarmonicMap truncated(std::size_t order) const;

private:
    AnalyticSeries h_;
    AnalyticSeries g_;
    std::optional<ClosedPair> closed_;
};

/// Slice parameter, |epsilon| <= 1 (up to 1e-12).
class SliceParam {
public:
    explicit SliceParam(cplx epsilon);
    /// e^{i theta}
    static SliceParam unimodular(double theta);
    cplx value() const { return epsilon_; }

private:
    cplx epsilon_;
};

/// Jets of both analytic parts at one point.
struct MapJet {
    Jet h;
    Jet g;
};

MapJet map_jet(const HarmonicMap& f, cplx z);

cplx eval_map(const HarmonicMap& f, cplx z);
/// Closed-form evaluation only; UnsupportedError when f carries no closed form.
cplx eval_closed(const HarmonicMap& f, cplx z);
/// |h'|^2 - |g'|^2
double jacobian(const HarmonicMap& f, cplx z);
/// g'/h'
cplx dilatation(const HarmonicMap& f, cplx z);

/// h + epsilon g as a series.
AnalyticSeries slice(const HarmonicMap& f, SliceParam e);
/// The analytic map (h + epsilon g, 0), keeping the closed form when there is one.
HarmonicMap slice_map(const HarmonicMap& f, SliceParam e);
/// h + lambda conj(g), i.e. g rotated by conj(lambda).
HarmonicMap rotate_co_analytic(const HarmonicMap& f, cplx lambda);

HarmonicMap harmonic_convolve(const HarmonicMap& f, const HarmonicMap& F);
/// (phi * h, phi * g)
HarmonicMap tilde_convolve(const AnalyticSeries& phi, const HarmonicMap& f);
/// Weights must be non-negative and sum to 1 within 1e-12.
HarmonicMap convex_combination(std::span<const double> weights, std::span<const HarmonicMap> maps);

/// (Lambda[h], Lambda[g])
HarmonicMap alexander_plus(const HarmonicMap& f);
/// (Lambda[h], -Lambda[g])
HarmonicMap alexander_minus(const HarmonicMap& f);

} // namespace harmap
