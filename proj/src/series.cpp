#include "harmap/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "harmap/errors.hpp"

namespace harmap {

AnalyticSeries::AnalyticSeries(std::vector<cplx> coeffs, cplx constant)
    : coeffs_(std::move(coeffs)), constant_(constant) {}

AnalyticSeries AnalyticSeries::identity(std::size_t order) {
    std::vector<cplx> c(order);
    if (order > 0)
        c[0] = 1.0;
    return AnalyticSeries(std::move(c));
}

AnalyticSeries AnalyticSeries::zero(std::size_t order) {
    return AnalyticSeries(std::vector<cplx>(order));
}

cplx AnalyticSeries::coeff(std::size_t n) const {
    if (n == 0)
        return constant_;
    return n <= coeffs_.size() ? coeffs_[n - 1] : cplx{};
}

bool AnalyticSeries::is_normalized(double tol) const {
    return !coeffs_.empty() && std::abs(coeffs_[0] - 1.0) <= tol && std::abs(constant_) <= tol;
}

bool AnalyticSeries::is_zero() const {
    return constant_ == cplx{} &&
           std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{}; });
}

AnalyticSeries AnalyticSeries::truncated(std::size_t order) const {
    std::vector<cplx> c(order);
    std::copy_n(coeffs_.begin(), std::min(order, coeffs_.size()), c.begin());
    return AnalyticSeries(std::move(c), constant_);
}

void require_in_disk(cplx z) {
    if (!(std::abs(z) < 1.0))
        throw DomainError("evaluation point " + std::to_string(z.real()) + "+" +
                          std::to_string(z.imag()) + "i lies outside the open unit disk");
}

cplx eval(const AnalyticSeries& s, cplx z) {
    require_in_disk(z);
    const auto c = s.coeffs();
    cplx acc{};
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * z + c[k];
    return acc * z + s.constant();
}

Jet eval_jet(const AnalyticSeries& s, cplx z) {
    require_in_disk(z);
    const auto c = s.coeffs();
    // Horner over c_N..c_1 then the constant; d2 accumulates p''/2.
    cplx v{}, d1{}, d2{};
    for (std::size_t k = c.size(); k-- > 0;) {
        d2 = d2 * z + d1;
        d1 = d1 * z + v;
        v = v * z + c[k];
    }
    d2 = d2 * z + d1;
    d1 = d1 * z + v;
    v = v * z + s.constant();
    return {v, d1, 2.0 * d2};
}

AnalyticSeries derivative(const AnalyticSeries& s) {
    if (s.order() < 2)
        throw ArgumentError("derivative needs a series of order >= 2");
    const auto c = s.coeffs();
    std::vector<cplx> d(c.size() - 1);
    for (std::size_t n = 1; n < c.size(); ++n)
        d[n - 1] = static_cast<double>(n + 1) * c[n];
    return AnalyticSeries(std::move(d), c[0]);
}

AnalyticSeries antiderivative(const AnalyticSeries& d) {
    const auto c = d.coeffs();
    std::vector<cplx> out(c.size() + 1);
    out[0] = d.constant();
    for (std::size_t n = 1; n <= c.size(); ++n)
        out[n] = c[n - 1] / static_cast<double>(n + 1);
    return AnalyticSeries(std::move(out));
}

AnalyticSeries convolve(const AnalyticSeries& s, const AnalyticSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    std::vector<cplx> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = s.coeffs()[k] * t.coeffs()[k];
    return AnalyticSeries(std::move(c));
}

AnalyticSeries multiply(const AnalyticSeries& s, const AnalyticSeries& t) {
    const std::size_t n = std::min(s.order(), t.order());
    std::vector<cplx> c(n);
    for (std::size_t k = 1; k <= n; ++k) {
        cplx acc{};
        for (std::size_t i = 0; i <= k; ++i)
            acc += s.coeff(i) * t.coeff(k - i);
        c[k - 1] = acc;
    }
    return AnalyticSeries(std::move(c), s.constant() * t.constant());
}

AnalyticSeries alexander(const AnalyticSeries& s) {
    std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
    for (std::size_t n = 1; n <= c.size(); ++n)
        c[n - 1] /= static_cast<double>(n);
    return AnalyticSeries(std::move(c));
}

AnalyticSeries linear_combine(std::span<const std::pair<cplx, AnalyticSeries>> terms) {
    if (terms.empty())
        throw ArgumentError("linear_combine needs at least one term");
    std::size_t n = terms.front().second.order();
    for (const auto& [w, s] : terms)
        n = std::min(n, s.order());
    std::vector<cplx> c(n);
    cplx constant{};
    for (const auto& [w, s] : terms) {
        for (std::size_t k = 0; k < n; ++k)
            c[k] += w * s.coeffs()[k];
        constant += w * s.constant();
    }
    return AnalyticSeries(std::move(c), constant);
}

AnalyticSeries operator+(const AnalyticSeries& a, const AnalyticSeries& b) {
    const std::pair<cplx, AnalyticSeries> t[] = {{1.0, a}, {1.0, b}};
    return linear_combine(t);
}

AnalyticSeries operator-(const AnalyticSeries& a, const AnalyticSeries& b) {
    const std::pair<cplx, AnalyticSeries> t[] = {{1.0, a}, {-1.0, b}};
    return linear_combine(t);
}

AnalyticSeries operator*(cplx w, const AnalyticSeries& s) {
    const std::pair<cplx, AnalyticSeries> t[] = {{w, s}};
    return linear_combine(t);
}

} // namespace harmap
