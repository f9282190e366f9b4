#pragma once

#include <stdexcept>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/mpfr.hpp>

namespace reunion {

namespace bmp = boost::multiprecision;

// Fixed-precision tiers.  Requests for `digits` working digits run in the
// first tier with at least 15 guard digits on top.
using real50 = bmp::number<bmp::mpfr_float_backend<50>, bmp::et_off>;
using real100 = bmp::number<bmp::mpfr_float_backend<100>, bmp::et_off>;
using real200 = bmp::number<bmp::mpfr_float_backend<200>, bmp::et_off>;
using real400 = bmp::number<bmp::mpfr_float_backend<400>, bmp::et_off>;

constexpr int kMinDigits = 15;
constexpr int kMaxDigits = 385;

template <class Real>
struct real_tag {
    using type = Real;
};

// Calls f(real_tag<TierType>{}) for the smallest tier covering `digits`.
template <class F>
decltype(auto) with_digits(int digits, F&& f) {
    if (digits < kMinDigits)
        throw std::invalid_argument("digits below the supported floor of 15");
    if (digits <= 35) return std::forward<F>(f)(real_tag<real50>{});
    if (digits <= 85) return std::forward<F>(f)(real_tag<real100>{});
    if (digits <= 185) return std::forward<F>(f)(real_tag<real200>{});
    if (digits <= kMaxDigits) return std::forward<F>(f)(real_tag<real400>{});
    throw std::invalid_argument("digits above the supported cap of 385");
}

template <class Real>
constexpr int working_digits() {
    return std::numeric_limits<Real>::digits10;
}

}  // namespace reunion
