#include "harmap/closed_form.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>

#include "harmap/errors.hpp"

namespace harmap {

namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

cplx dilog_direct(cplx z) {
    cplx term = z, sum{};
    for (int n = 1; n < 200; ++n) {
        const cplx add = term / static_cast<double>(n * n);
        sum += add;
        if (std::abs(add) < 1e-18 * std::max(1.0, std::abs(sum)))
            break;
        term *= z;
    }
    return sum;
}

// Li2(z) = sum_{n>=0} B_n w^(n+1) / (n+1)!,  w = -log(1 - z),  valid for |w| < 2 pi.
cplx dilog_bernoulli(cplx z) {
    const cplx w = -std::log(1.0 - z);
    const cplx w2 = w * w;
    cplx sum = w - 0.25 * w2;
    cplx power = w;         // w^(2k+1) / (2k+1)!
    for (int k = 1; k < 30; ++k) {
        power *= w2 / static_cast<double>((2 * k) * (2 * k + 1));
        const cplx add = boost::math::bernoulli_b2n<double>(k) * power;
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum))
            break;
    }
    return sum;
}

} // namespace

cplx dilog(cplx z) {
    require_in_disk(z);
    if (std::abs(z) <= 0.5)
        return dilog_direct(z);
    if (std::abs(1.0 - z) <= 0.5)
        return kPi2Over6 - std::log(z) * std::log(1.0 - z) - dilog_direct(1.0 - z);
    return dilog_bernoulli(z);
}

Jet dilog_jet(cplx z) {
    Jet j;
    j.value = dilog(z);
    if (std::abs(z) < 0.25) {
        // Li2' = sum z^(n-1)/n,  Li2'' = sum (n-1) z^(n-2)/n
        cplx p = 1.0, q = 1.0;
        for (int n = 1; n <= 48; ++n) {
            j.d1 += p / static_cast<double>(n);
            if (n >= 2) {
                j.d2 += static_cast<double>(n - 1) * q / static_cast<double>(n);
                q *= z;
            }
            p *= z;
        }
        return j;
    }
    const cplx l = std::log(1.0 - z);
    j.d1 = -l / z;
    j.d2 = 1.0 / (z * (1.0 - z)) + l / (z * z);
    return j;
}

ClosedForm& ClosedForm::add_power(int k, cplx c) {
    powers_[k] += c;
    prune();
    return *this;
}

ClosedForm& ClosedForm::add_log(cplx c) {
    log_ += c;
    return *this;
}

ClosedForm& ClosedForm::add_dilog(cplx c) {
    dilog_ += c;
    return *this;
}

void ClosedForm::prune() {
    std::erase_if(powers_, [](const auto& kv) { return kv.second == cplx{}; });
}

Jet ClosedForm::jet(cplx z) const {
    require_in_disk(z);
    const cplx u = 1.0 - z;
    Jet j;
    for (const auto& [k, c] : powers_) {
        const double kd = k;
        const cplx uk2 = std::pow(u, k - 2);
        j.value += c * uk2 * u * u;
        j.d1 += -kd * c * uk2 * u;
        j.d2 += kd * (kd - 1.0) * c * uk2;
    }
    if (log_ != cplx{}) {
        j.value += log_ * std::log(u);
        j.d1 += -log_ / u;
        j.d2 += -log_ / (u * u);
    }
    if (dilog_ != cplx{}) {
        const Jet d = dilog_jet(z);
        j.value += dilog_ * d.value;
        j.d1 += dilog_ * d.d1;
        j.d2 += dilog_ * d.d2;
    }
    return j;
}

AnalyticSeries ClosedForm::taylor(std::size_t order) const {
    std::vector<cplx> c(order);
    cplx constant{};
    for (const auto& [k, ck] : powers_) {
        // (1 - z)^k = sum t_n z^n,  t_n = t_{n-1} (n - 1 - k) / n
        double t = 1.0;
        constant += ck;
        for (std::size_t n = 1; n <= order; ++n) {
            t *= (static_cast<double>(n) - 1.0 - k) / static_cast<double>(n);
            c[n - 1] += ck * t;
        }
    }
    for (std::size_t n = 1; n <= order; ++n) {
        const double nd = static_cast<double>(n);
        c[n - 1] += -log_ / nd + dilog_ / (nd * nd);
    }
    return AnalyticSeries(std::move(c), constant);
}

std::optional<ClosedForm> ClosedForm::alexander() const {
    if (dilog_ != cplx{})
        return std::nullopt;
    cplx at_zero{};
    double scale = 0.0;
    for (const auto& [k, c] : powers_) {
        at_zero += c;
        scale = std::max(scale, std::abs(c));
    }
    if (std::abs(at_zero) > 1e-12 * std::max(1.0, scale))
        return std::nullopt;

    // With sum c_k = 0:  f(t)/t = sum c_k (u^k - 1)/t + L log(u)/t, and
    //   (u^k - 1)/t = -(1 + u + ... + u^(k-1))    for k > 0,
    //   (u^-m - 1)/t = u^-1 + ... + u^-m          for m > 0.
    // Term by term, with dt = -du:
    //   int_0^z u^j dt = (1 - u^(j+1)) / (j + 1)   for j != -1,
    //   int_0^z u^-1 dt = -log u,
    //   int_0^z log(1 - t)/t dt = -Li2(z).
    ClosedForm out;
    auto integrate_power = [&out](int j, cplx c) {
        if (j == -1) {
            out.log_ -= c;
            return;
        }
        const double jp1 = j + 1;
        out.powers_[0] += c / jp1;
        out.powers_[j + 1] -= c / jp1;
    };
    for (const auto& [k, c] : powers_) {
        if (k > 0) {
            for (int j = 0; j < k; ++j)
                integrate_power(j, -c);
        } else if (k < 0) {
            for (int j = 1; j <= -k; ++j)
                integrate_power(-j, c);
        }
    }
    out.dilog_ = -log_;
    out.prune();
    return out;
}

ClosedForm operator+(const ClosedForm& a, const ClosedForm& b) {
    ClosedForm out = a;
    for (const auto& [k, c] : b.powers_)
        out.powers_[k] += c;
    out.log_ += b.log_;
    out.dilog_ += b.dilog_;
    out.prune();
    return out;
}

ClosedForm operator*(cplx w, const ClosedForm& f) {
    ClosedForm out;
    for (const auto& [k, c] : f.powers_)
        out.powers_[k] = w * c;
    out.log_ = w * f.log_;
    out.dilog_ = w * f.dilog_;
    out.prune();
    return out;
}

} // namespace harmap
