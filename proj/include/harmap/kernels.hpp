#pragma once

// Data-parallel sampling kernels. Every margin in the library is the minimum
// of a pointwise functional over a finite sample set; these kernels compute
// that minimum together with the first index that attains it.
//
// The serial versions are the reference implementations used by the tests.
// The OpenMP versions must agree with them bit for bit: each sample is
// evaluated by the same code, and the (value, index) minimum with lowest-index
// tie-break is associative and commutative, so the reduction order does not
// change the result.

#include <cmath>
#include <cstddef>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace harmap::kernels {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

enum class Exec { serial, parallel };

/// Minimum of a sampled functional. A NaN sample marks a degenerate point;
/// it is excluded from the minimum and the first such index is recorded.
struct ArgMin {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = npos;
    std::size_t first_degenerate = npos;

    bool degenerate() const { return first_degenerate != npos; }
};

inline ArgMin combine(const ArgMin& a, const ArgMin& b) {
    ArgMin out = (b.value < a.value || (b.value == a.value && b.index < a.index)) ? b : a;
    out.first_degenerate = a.first_degenerate < b.first_degenerate ? a.first_degenerate
                                                                   : b.first_degenerate;
    return out;
}

inline void accumulate(ArgMin& acc, std::size_t i, double v) {
    if (std::isnan(v)) {
        if (i < acc.first_degenerate)
            acc.first_degenerate = i;
        return;
    }
    if (v < acc.value || (v == acc.value && i < acc.index)) {
        acc.value = v;
        acc.index = i;
    }
}

} // namespace harmap::kernels

#pragma omp declare reduction(harmap_argmin : harmap::kernels::ArgMin : \
        omp_out = harmap::kernels::combine(omp_out, omp_in))             \
    initializer(omp_priv = harmap::kernels::ArgMin{})

namespace harmap::kernels {

namespace serial {

template <class Fn>
ArgMin argmin(std::size_t n, Fn&& fn) {
    ArgMin acc;
    for (std::size_t i = 0; i < n; ++i)
        accumulate(acc, i, fn(i));
    return acc;
}

template <class Fn, class Out>
void transform(std::size_t n, Fn&& fn, Out* out) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = fn(i);
}

} // namespace serial

namespace parallel {

template <class Fn>
ArgMin argmin(std::size_t n, Fn&& fn) {
    ArgMin acc;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(harmap_argmin : acc)
    for (long long i = 0; i < count; ++i)
        accumulate(acc, static_cast<std::size_t>(i), fn(static_cast<std::size_t>(i)));
    return acc;
}

template <class Fn, class Out>
void transform(std::size_t n, Fn&& fn, Out* out) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < count; ++i)
        out[i] = fn(static_cast<std::size_t>(i));
}

} // namespace parallel

template <class Fn>
ArgMin argmin(std::size_t n, Fn&& fn, Exec exec = Exec::parallel) {
    return exec == Exec::parallel ? parallel::argmin(n, fn) : serial::argmin(n, fn);
}

template <class Fn, class Out>
void transform(std::size_t n, Fn&& fn, Out* out, Exec exec = Exec::parallel) {
    if (exec == Exec::parallel)
        parallel::transform(n, fn, out);
    else
        serial::transform(n, fn, out);
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace harmap::kernels
