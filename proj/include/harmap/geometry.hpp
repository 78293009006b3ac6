#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "harmap/harmonic.hpp"
#include "harmap/kernels.hpp"

namespace harmap {

using kernels::Exec;

/// Concentric circles r_i e^{2 pi i k / M}.
struct SamplingGrid {
    std::vector<double> radii; // ascending, inside (0, 1)
    std::size_t angles = 256;  // M >= 64

    /// radii {0.1, ..., 0.9, 0.95, 0.99} x 256 angles
    static SamplingGrid standard();
    static SamplingGrid up_to(double r_max, std::size_t angles = 256);

    /// Throws ArgumentError when the invariants fail.
    void validate() const;
    std::size_t size() const { return radii.size() * angles; }
    cplx point(std::size_t flat_index) const;
};

enum class Functional { starlike, convex, univalent };

std::string_view functional_name(Functional f);
Functional parse_functional(std::string_view name);

struct GeometryReport {
    Functional functional;
    double r;
    double min_margin;
    double witness_angle;
};

/// Bracketed radius: the property holds at the lo side and fails at the hi side.
struct RadiusEstimate {
    Functional property;
    double lo;
    double hi;
    double value;
    double tol;
};

inline constexpr std::size_t kMarginAngles = 1024;
inline constexpr std::size_t kUnivalenceAngles = 2048;

/// Truncation order needed to evaluate a series-only map out to radius r.
std::size_t required_order(double r_max);

/// min over theta of d/dtheta arg f(r e^{i theta}) = Re[(z h' - conj(z g')) / f].
GeometryReport starlike_margin(const HarmonicMap& f, double r, std::size_t M = kMarginAngles,
                               Exec exec = Exec::parallel);

/// min over theta of Im[T'/T], with T = i(z h' - conj(z g')) the tangent of the
/// image curve and T' = -[z h' + z^2 h'' + conj(z g' + z^2 g'')].
GeometryReport convex_margin(const HarmonicMap& f, double r, std::size_t M = kMarginAngles,
                             Exec exec = Exec::parallel);

/// Image polygon is simple, winds once around f(0), and J_f > 0 at every sample.
bool univalent_on_circle(const HarmonicMap& f, double r, std::size_t M = kUnivalenceAngles,
                         Exec exec = Exec::parallel);

/// Sampled image of the circle |z| = r.
std::vector<cplx> circle_image(const HarmonicMap& f, double r, std::size_t M,
                               Exec exec = Exec::parallel);

/// True when some pair of non-adjacent edges of the closed polygon meet.
bool polygon_self_intersects(std::span<const cplx> pts, Exec exec = Exec::parallel);
/// Winding number of the closed polygon about c; throws DegenerateError if c lies on a vertex.
int winding_number(std::span<const cplx> pts, cplx c);

/// Margin of `property` at radius r; univalence reports +1 or -1.
double margin_at(const HarmonicMap& f, Functional property, double r, Exec exec = Exec::parallel);

/// Scans grid.radii in ascending order for the first radius where the margin
/// is not positive, then bisects between it and the previous passing radius
/// (0 when the very first one fails). Margins are not assumed monotone in r;
/// the result is the first crossing below the first sampled failure. When no
/// sampled radius fails the full-disk value 1 is returned.
RadiusEstimate radius_estimate(const HarmonicMap& f, Functional property, double tol,
                               const SamplingGrid& grid = SamplingGrid::standard());

double poly_eval(std::span<const double> ascending, double x);

/// Smallest root in the open interval (0, 1): a 1e-3 step scan for the first
/// sign change, then bisection to 1e-12. Throws NotFoundError.
double smallest_positive_root(std::span<const double> ascending);

} // namespace harmap
