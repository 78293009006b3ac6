#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "harmap/harmonic.hpp"

namespace harmap {

/// Named functions with known coefficients and closed forms.
enum class CatalogTag {
    koebe,               // z/(1-z)^2
    half_plane,          // z/(1-z)
    harmonic_koebe,      // K = H + conj(G)
    harmonic_half_plane, // L = M + conj(N)
    macgregor_r,         // -z - 2 log(1-z)
    chichra_w,           // -z + 2 Li2(z)
    u_sharp,             // z + z^2/2
    u_sharp_conj,        // z + conj(z^2)/2
    v_sharp,             // z + z^2/4
    v_sharp_conj,        // z + conj(z^2)/4
    alexander_plus_K,
    alexander_plus_L,
};

inline constexpr std::array kAllTags = {
    CatalogTag::koebe,          CatalogTag::half_plane,      CatalogTag::harmonic_koebe,
    CatalogTag::harmonic_half_plane, CatalogTag::macgregor_r, CatalogTag::chichra_w,
    CatalogTag::u_sharp,        CatalogTag::u_sharp_conj,    CatalogTag::v_sharp,
    CatalogTag::v_sharp_conj,   CatalogTag::alexander_plus_K, CatalogTag::alexander_plus_L,
};

std::string_view tag_name(CatalogTag tag);
/// Throws ArgumentError for an unknown name.
CatalogTag parse_tag(std::string_view name);
std::optional<CatalogTag> find_tag(std::string_view name);

/// Coefficients of h and g from the closed-form coefficient rules.
AnalyticSeries catalog_h(CatalogTag tag, std::size_t order);
AnalyticSeries catalog_g(CatalogTag tag, std::size_t order);

/// Closed forms of the two analytic parts. Every tag has one.
ClosedPair closed_form(CatalogTag tag);

/// The named map truncated to `order` (>= 2) with its closed form attached.
HarmonicMap make(CatalogTag tag, std::size_t order = kDefaultOrder);

/// Exact h(z) + conj(g(z)).
cplx eval_closed(CatalogTag tag, cplx z);

/// -log(1 - z); Re of its derivative exceeds 1/2 on the disk.
HarmonicMap log_map(std::size_t order = kDefaultOrder);

} // namespace harmap
