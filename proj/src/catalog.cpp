#include "harmap/catalog.hpp"

#include <string>

#include "harmap/errors.hpp"

namespace harmap {

namespace {

struct Entry {
    CatalogTag tag;
    std::string_view name;
};

constexpr Entry kEntries[] = {
    {CatalogTag::koebe, "koebe"},
    {CatalogTag::half_plane, "half_plane"},
    {CatalogTag::harmonic_koebe, "harmonic_koebe"},
    {CatalogTag::harmonic_half_plane, "harmonic_half_plane"},
    {CatalogTag::macgregor_r, "macgregor_r"},
    {CatalogTag::chichra_w, "chichra_w"},
    {CatalogTag::u_sharp, "u_sharp"},
    {CatalogTag::u_sharp_conj, "u_sharp_conj"},
    {CatalogTag::v_sharp, "v_sharp"},
    {CatalogTag::v_sharp_conj, "v_sharp_conj"},
    {CatalogTag::alexander_plus_K, "alexander_plus_K"},
    {CatalogTag::alexander_plus_L, "alexander_plus_L"},
};

// z^k written in u = 1 - z, for k = 1, 2.
ClosedForm z_power(int k, double scale) {
    ClosedForm f;
    if (k == 1) {
        f.add_power(0, scale).add_power(1, -scale);
    } else {
        f.add_power(0, scale).add_power(1, -2.0 * scale).add_power(2, scale);
    }
    return f;
}

ClosedForm closed_h(CatalogTag tag) {
    ClosedForm f;
    switch (tag) {
    case CatalogTag::koebe:
        return f.add_power(-2, 1.0).add_power(-1, -1.0);
    case CatalogTag::half_plane:
        return f.add_power(-1, 1.0).add_power(0, -1.0);
    case CatalogTag::harmonic_koebe:
        // (z - z^2/2 + z^3/6)/(1-z)^3 = (2/3)u^-3 - (1/2)u^-2 - 1/6
        return f.add_power(-3, 2.0 / 3.0).add_power(-2, -0.5).add_power(0, -1.0 / 6.0);
    case CatalogTag::harmonic_half_plane:
        // (z - z^2/2)/(1-z)^2 = (1/2)u^-2 - 1/2
        return f.add_power(-2, 0.5).add_power(0, -0.5);
    case CatalogTag::macgregor_r:
        return f.add_power(0, -1.0).add_power(1, 1.0).add_log(-2.0);
    case CatalogTag::chichra_w:
        return f.add_power(0, -1.0).add_power(1, 1.0).add_dilog(2.0);
    case CatalogTag::u_sharp:
        return z_power(1, 1.0) + z_power(2, 0.5);
    case CatalogTag::v_sharp:
        return z_power(1, 1.0) + z_power(2, 0.25);
    case CatalogTag::u_sharp_conj:
    case CatalogTag::v_sharp_conj:
        return z_power(1, 1.0);
    case CatalogTag::alexander_plus_K:
        // (1/6)[z(5-3z)/(1-z)^2 - log(1-z)],  z(5-3z) = 2 + u - 3u^2
        return f.add_power(-2, 2.0 / 6.0).add_power(-1, 1.0 / 6.0).add_power(0, -3.0 / 6.0)
            .add_log(-1.0 / 6.0);
    case CatalogTag::alexander_plus_L:
        // (1/2)[-log(1-z) + z/(1-z)]
        return f.add_power(-1, 0.5).add_power(0, -0.5).add_log(-0.5);
    }
    throw ArgumentError("unknown catalog tag");
}

ClosedForm closed_g(CatalogTag tag) {
    ClosedForm f;
    switch (tag) {
    case CatalogTag::harmonic_koebe:
        // (z^2/2 + z^3/6)/(1-z)^3 = (2/3)u^-3 - (3/2)u^-2 + u^-1 - 1/6
        return f.add_power(-3, 2.0 / 3.0).add_power(-2, -1.5).add_power(-1, 1.0)
            .add_power(0, -1.0 / 6.0);
    case CatalogTag::harmonic_half_plane:
        // (-z^2/2)/(1-z)^2 = -(1/2)u^-2 + u^-1 - 1/2
        return f.add_power(-2, -0.5).add_power(-1, 1.0).add_power(0, -0.5);
    case CatalogTag::u_sharp_conj:
        return z_power(2, 0.5);
    case CatalogTag::v_sharp_conj:
        return z_power(2, 0.25);
    case CatalogTag::alexander_plus_K:
        // (1/6)[z(3z-1)/(1-z)^2 - log(1-z)],  z(3z-1) = 2 - 5u + 3u^2
        return f.add_power(-2, 2.0 / 6.0).add_power(-1, -5.0 / 6.0).add_power(0, 3.0 / 6.0)
            .add_log(-1.0 / 6.0);
    case CatalogTag::alexander_plus_L:
        // (1/2)[-log(1-z) - z/(1-z)]
        return f.add_power(-1, -0.5).add_power(0, 0.5).add_log(-0.5);
    default:
        return f;
    }
}

} // namespace

std::string_view tag_name(CatalogTag tag) {
    for (const auto& e : kEntries)
        if (e.tag == tag)
            return e.name;
    throw ArgumentError("unknown catalog tag");
}

std::optional<CatalogTag> find_tag(std::string_view name) {
    for (const auto& e : kEntries)
        if (e.name == name)
            return e.tag;
    return std::nullopt;
}

CatalogTag parse_tag(std::string_view name) {
    if (auto t = find_tag(name))
        return *t;
    throw ArgumentError("unknown catalog tag '" + std::string(name) + "'");
}

AnalyticSeries catalog_h(CatalogTag tag, std::size_t order) {
    switch (tag) {
    case CatalogTag::koebe:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return double(n); });
    case CatalogTag::half_plane:
        return AnalyticSeries::from_rule(order, [](std::size_t) { return 1.0; });
    case CatalogTag::harmonic_koebe:
        return AnalyticSeries::from_rule(order, [](std::size_t n) {
            const double m = double(n);
            return (2.0 * m + 1.0) * (m + 1.0) / 6.0;
        });
    case CatalogTag::harmonic_half_plane:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return (double(n) + 1.0) / 2.0; });
    case CatalogTag::macgregor_r:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return n == 1 ? 1.0 : 2.0 / double(n); });
    case CatalogTag::chichra_w:
        return AnalyticSeries::from_rule(order, [](std::size_t n) {
            return n == 1 ? 1.0 : 2.0 / (double(n) * double(n));
        });
    case CatalogTag::u_sharp:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return n == 1 ? 1.0 : n == 2 ? 0.5 : 0.0; });
    case CatalogTag::v_sharp:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return n == 1 ? 1.0 : n == 2 ? 0.25 : 0.0; });
    case CatalogTag::u_sharp_conj:
    case CatalogTag::v_sharp_conj:
        return AnalyticSeries::identity(order);
    case CatalogTag::alexander_plus_K:
        return AnalyticSeries::from_rule(order, [](std::size_t n) {
            const double m = double(n);
            return (2.0 * m + 1.0) * (m + 1.0) / (6.0 * m);
        });
    case CatalogTag::alexander_plus_L:
        return AnalyticSeries::from_rule(order, [](std::size_t n) {
            const double m = double(n);
            return (m + 1.0) / (2.0 * m);
        });
    }
    throw ArgumentError("unknown catalog tag");
}

AnalyticSeries catalog_g(CatalogTag tag, std::size_t order) {
    switch (tag) {
    case CatalogTag::harmonic_koebe:
        return AnalyticSeries::from_rule(order, [](std::size_t n) {
            const double m = double(n);
            return (2.0 * m - 1.0) * (m - 1.0) / 6.0;
        });
    case CatalogTag::harmonic_half_plane:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return -(double(n) - 1.0) / 2.0; });
    case CatalogTag::u_sharp_conj:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return n == 2 ? 0.5 : 0.0; });
    case CatalogTag::v_sharp_conj:
        return AnalyticSeries::from_rule(order, [](std::size_t n) { return n == 2 ? 0.25 : 0.0; });
    case CatalogTag::alexander_plus_K:
        return AnalyticSeries::from_rule(order, [](std::size_t n) {
            const double m = double(n);
            return (2.0 * m - 1.0) * (m - 1.0) / (6.0 * m);
        });
    case CatalogTag::alexander_plus_L:
        return AnalyticSeries::from_rule(order, [](std::size_t n) {
            const double m = double(n);
            return -(m - 1.0) / (2.0 * m);
        });
    default:
        return AnalyticSeries::zero(order);
    }
}

ClosedPair closed_form(CatalogTag tag) {
    return {closed_h(tag), closed_g(tag), std::string(tag_name(tag))};
}

HarmonicMap make(CatalogTag tag, std::size_t order) {
    if (order < 2)
        throw ArgumentError("catalog maps need truncation order >= 2");
    return HarmonicMap(catalog_h(tag, order), catalog_g(tag, order), closed_form(tag));
}

cplx eval_closed(CatalogTag tag, cplx z) {
    const ClosedPair c = closed_form(tag);
    return c.h(z) + std::conj(c.g(z));
}

HarmonicMap log_map(std::size_t order) {
    ClosedForm f;
    f.add_log(-1.0);
    return HarmonicMap::analytic(
        AnalyticSeries::from_rule(order, [](std::size_t n) { return 1.0 / double(n); }), f);
}

} // namespace harmap
