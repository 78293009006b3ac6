#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "harmap/geometry.hpp"
#include "harmap/harmonic.hpp"

namespace harmap {

enum class ClassKind {
    R_H0,   // Re h' > |g'|
    W_H0,   // Re(h' + z h'') > |g' + z g''|
    F_H0,   // |h' - 1| < 1 - |g'|
    U_H0,   // sum n (|a_n| + |b_n|) <= 1
    V_H0,   // sum n^2 (|a_n| + |b_n|) <= 1
    S_R,    // g = 0 and every a_n real
    R_H0_G, // Re h'/G' > |g'/G'|
    F_H0_G, // |h'/G' - 1| < 1 - |g'/G'|
};

inline constexpr ClassKind kAllClasses[] = {
    ClassKind::R_H0, ClassKind::W_H0, ClassKind::F_H0,   ClassKind::U_H0,
    ClassKind::V_H0, ClassKind::S_R,  ClassKind::R_H0_G, ClassKind::F_H0_G,
};

std::string_view class_name(ClassKind kind);
/// Case-insensitive; throws ArgumentError.
ClassKind parse_class(std::string_view name);
bool is_relative(ClassKind kind);
/// Classes decided from the coefficients alone (U, V, S_R).
bool is_coefficient_class(ClassKind kind);

/// A class, together with its reference map G for the relative variants.
class ClassId {
public:
    /// Throws ArgumentError when a relative class lacks G or an absolute one is given one.
    ClassId(ClassKind kind, std::optional<HarmonicMap> reference = std::nullopt);

    ClassKind kind() const { return kind_; }
    const std::optional<HarmonicMap>& reference() const { return reference_; }

private:
    ClassKind kind_;
    std::optional<HarmonicMap> reference_;
};

/// Strictness tolerance: a margin above it certifies membership.
inline constexpr double kStrictTol = 1e-9;
/// Rounding slack below zero still reported as a boundary member.
inline constexpr double kBoundarySlack = 1e-12;

enum class MembershipStatus { member, boundary, non_member };

std::string_view status_name(MembershipStatus s);

struct Membership {
    MembershipStatus status;
    double margin;
    /// Grid point for the sampled classes; nullopt for coefficient classes.
    std::optional<cplx> witness_point;
    /// Flat grid index, or the coefficient index n.
    std::size_t witness_index;

    bool member() const { return status != MembershipStatus::non_member; }
};

/// Pointwise slack of the defining inequality of a sampled class at z.
/// NaN when the reference derivative vanishes.
double class_slack(const HarmonicMap& f, const ClassId& c, cplx z);

/// Sampled classes report the grid infimum of the slack; coefficient classes
/// report 1 - sum (U, V) or -max(|Im a_n|, |b_n|) (S_R). f must be normalized.
Membership membership(const HarmonicMap& f, const ClassId& c,
                      const SamplingGrid& grid = SamplingGrid::standard(),
                      Exec exec = Exec::parallel);

/// Tests the analytic slices (h + eps g, 0) at the M roots of unity.
/// Necessary-condition sampler: sound for rejection only. g = 0 runs one test.
bool epsilon_sweep_membership(const HarmonicMap& f,
                              const std::function<bool(const HarmonicMap&)>& analytic_test,
                              std::size_t M = 64);

/// Coefficient bound p(n) and growth envelope for one class.
struct BoundTable {
    ClassKind kind;
    std::function<double(std::size_t)> p;
    std::function<double(double)> growth_lower;
    std::function<double(double)> growth_upper;
};

/// Available for R_H0, W_H0, U_H0, V_H0.
BoundTable bound_table(ClassKind kind);

struct BoundReport {
    std::size_t n_max;
    std::vector<std::size_t> violations; // n with ||a_n| - |b_n|| > p(n) + 1e-12
    std::vector<std::size_t> tight;      // n with equality within 1e-12
    double worst_excess;                 // max over n of ||a_n| - |b_n|| - p(n)

    bool ok() const { return violations.empty(); }
};

BoundReport coefficient_bound_check(const HarmonicMap& f, const BoundTable& table, std::size_t n_max);

/// (lower, upper) bounds on |f(z)| at |z| = r.
std::pair<double, double> growth_envelope(ClassKind kind, double r);
/// Limit of the lower envelope as r -> 1.
double covering_constant(ClassKind kind);

/// Deterministic pseudo-random member of an absolute class (not S_R's
/// relatives). Sampled classes are built with grid margin >= 0.05.
HarmonicMap sample_member(ClassKind kind, std::uint64_t seed, std::size_t order = kDefaultOrder);

/// Member of R_H0_G or F_H0_G: h' = G' P and g' = G' Q with (P, Q) drawn as
/// for the absolute class. Certify on radii well inside the disk; the
/// truncated quotient loses accuracy near |z| = 1.
HarmonicMap sample_relative_member(ClassKind kind, const HarmonicMap& G, std::uint64_t seed,
                                   std::size_t order = 200);

/// Radii up to 0.8 for certifying relative members.
SamplingGrid relative_grid();

} // namespace harmap
