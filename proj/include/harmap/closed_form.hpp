#pragma once

#include <map>
#include <string>
#include <optional>

#include "harmap/series.hpp"

namespace harmap {

/// Principal-branch dilogarithm Li2(z) = sum z^n / n^2 for |z| < 1.
cplx dilog(cplx z);
Jet dilog_jet(cplx z);

/// Exact evaluator for the analytic functions that occur in the catalog.
///
/// Every such function is a finite combination, in the variable u = 1 - z,
///
///     f(z) = sum_k c_k u^k  +  L log(u)  +  D Li2(z),      k in Z,
///
/// with the principal logarithm; for |z| < 1 the point u stays in the right
/// half-plane, away from the branch cut. The family is closed under linear
/// combination and, when D = 0 and f(0) = 0, under the Alexander transform.
class ClosedForm {
public:
    ClosedForm() = default;

    ClosedForm& add_power(int k, cplx c);
    ClosedForm& add_log(cplx c);
    ClosedForm& add_dilog(cplx c);

    const std::map<int, cplx>& powers() const { return powers_; }
    cplx log_coeff() const { return log_; }
    cplx dilog_coeff() const { return dilog_; }

    cplx operator()(cplx z) const { return jet(z).value; }
    Jet jet(cplx z) const;

    /// Taylor coefficients about z = 0, constant term included.
    AnalyticSeries taylor(std::size_t order) const;

    /// Closed form of the integral of f(t)/t from 0 to z, or nullopt when it
    /// leaves the family (a dilogarithm term) or f(0) != 0.
    std::optional<ClosedForm> alexander() const;

    friend ClosedForm operator+(const ClosedForm& a, const ClosedForm& b);
    friend ClosedForm operator*(cplx w, const ClosedForm& f);

private:
    void prune();

    std::map<int, cplx> powers_;
    cplx log_{};
    cplx dilog_{};
};

/// Closed forms of both analytic parts of f = h + conj(g), with a display label.
struct ClosedPair {
    ClosedForm h;
    ClosedForm g;
    std::string label;
};

} // namespace harmap
