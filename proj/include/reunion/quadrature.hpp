#pragma once

#include <cmath>
#include <stdexcept>

namespace reunion {

namespace detail {

template <class Real, class F>
Real simpson_rec(F& f, Real a, Real b, Real fa, Real fm, Real fb, Real whole,
                 Real tol, int depth) {
    using std::abs;
    const Real m = (a + b) / 2;
    const Real lm = (a + m) / 2, rm = (m + b) / 2;
    const Real flm = f(lm), frm = f(rm);
    const Real left = (m - a) / 6 * (fa + 4 * flm + fm);
    const Real right = (b - m) / 6 * (fm + 4 * frm + fb);
    const Real delta = left + right - whole;
    if (depth <= 0 || abs(delta) <= 15 * tol) return left + right + delta / 15;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson end correction.
template <class Real, class F>
Real integrate(F&& f, Real a, Real b, Real tol, int max_depth = 40) {
    using std::abs;
    if (!(b >= a)) throw std::invalid_argument("integrate: b < a");
    if (a == b) return Real(0);
    const Real fa = f(a), fb = f(b), fm = f((a + b) / 2);
    const Real whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace reunion
