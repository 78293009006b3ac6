#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace harmap {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;

/// Value and first two derivatives of an analytic function at a point.
struct Jet {
    cplx value{};
    cplx d1{};
    cplx d2{};
};

/// Truncated Taylor series  c + a_1 z + a_2 z^2 + ... + a_N z^N  on the unit disk.
///
/// Coefficients are indexed from n = 1. The constant term c is zero for
/// every normalized function; it is only populated by `derivative`, whose
/// result keeps a_1 as its constant term so that evaluation stays exact.
///
/// Mixed truncation orders are resolved by the binary operations below by
/// truncating to the shorter operand. Tail information of the longer
/// operand is dropped silently.
class AnalyticSeries {
public:
    AnalyticSeries() = default;
    explicit AnalyticSeries(std::vector<cplx> coeffs, cplx constant = {});

    /// a_n = rule(n) for n = 1..order.
    template <class Rule>
    static AnalyticSeries from_rule(std::size_t order, Rule&& rule) {
        std::vector<cplx> c(order);
        for (std::size_t n = 1; n <= order; ++n)
            c[n - 1] = cplx(rule(n));
        return AnalyticSeries(std::move(c));
    }

    /// f(z) = z.
    static AnalyticSeries identity(std::size_t order);
    static AnalyticSeries zero(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    /// Coefficient of z^n; n = 0 gives the constant term, n > order gives 0.
    cplx coeff(std::size_t n) const;
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx constant() const { return constant_; }

    /// a_1 = 1 and no constant term, within `tol`.
    bool is_normalized(double tol = 1e-12) const;
    bool is_zero() const;

    /// Shortens, or pads with zero coefficients, to the requested order.
    AnalyticSeries truncated(std::size_t order) const;

    friend bool operator==(const AnalyticSeries&, const AnalyticSeries&) = default;

private:
    std::vector<cplx> coeffs_;
    cplx constant_{};
};

/// Nested multiplication from the top coefficient down. Throws DomainError for |z| >= 1.
cplx eval(const AnalyticSeries& s, cplx z);

/// Value, first and second derivative in one Horner pass.
Jet eval_jet(const AnalyticSeries& s, cplx z);

/// Series of s'. Requires order >= 2; the result has order N - 1 and
/// constant term a_1.
AnalyticSeries derivative(const AnalyticSeries& s);

/// Inverse of `derivative`: the series F with F(0) = 0 and F' = d.
/// Coefficient n + 1 of the result is d_n / (n + 1), with d_0 the constant term.
AnalyticSeries antiderivative(const AnalyticSeries& d);

/// Hadamard product: coefficient n is s_n t_n.
AnalyticSeries convolve(const AnalyticSeries& s, const AnalyticSeries& t);

/// Cauchy (ordinary) product, constant terms included, truncated to the shorter order.
AnalyticSeries multiply(const AnalyticSeries& s, const AnalyticSeries& t);

/// Taylor form of the integral of f(t)/t from 0 to z: coefficient n becomes a_n / n.
AnalyticSeries alexander(const AnalyticSeries& s);

/// Coefficientwise weighted sum. Throws ArgumentError on an empty list.
AnalyticSeries linear_combine(std::span<const std::pair<cplx, AnalyticSeries>> terms);

AnalyticSeries operator+(const AnalyticSeries& a, const AnalyticSeries& b);
AnalyticSeries operator-(const AnalyticSeries& a, const AnalyticSeries& b);
AnalyticSeries operator*(cplx w, const AnalyticSeries& s);

void require_in_disk(cplx z);

} // namespace harmap
