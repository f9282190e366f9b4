#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "reunion/real.hpp"

namespace reunion {

template <class Real>
Real pi_v() {
    return boost::math::constants::pi<Real>();
}

template <class Real>
Real log_gamma(const Real& x) {
    return boost::math::lgamma(x);
}

// Ai and Ai' from the Maclaurin series.  Converges everywhere; cancellation
// costs about |t|^(3/2) digits, so callers use a wide-enough Real tier
// (real50 keeps 12+ digits over |t| <= 12).
template <class Real>
std::pair<Real, Real> airy_ai_series(const Real& t) {
    const Real z3 = t * t * t;
    const Real alpha = pow(Real(3), Real(-2) / 3) / boost::math::tgamma(Real(2) / 3);
    const Real beta = pow(Real(3), Real(-1) / 3) / boost::math::tgamma(Real(1) / 3);
    Real f = 1, fp = t * t / 2, g = t, gp = 1;
    Real af = 1, afp = fp, ag = t, agp = 1;
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (int k = 0; k < 400; ++k) {
        af *= z3 / ((3 * k + 2) * (3 * k + 3));
        afp *= z3 / ((3 * k + 3) * (3 * k + 5));
        ag *= z3 / ((3 * k + 3) * (3 * k + 4));
        agp *= z3 / ((3 * k + 1) * (3 * k + 3));
        f += af;
        fp += afp;
        g += ag;
        gp += agp;
        if (abs(af) < eps && abs(ag) < eps && abs(afp) < eps && abs(agp) < eps)
            break;
    }
    return {alpha * f - beta * g, alpha * fp - beta * gp};
}

namespace detail {

// Asymptotic expansions for |t| > ~10, summed to the smallest term.
inline std::pair<double, double> airy_asymptotic_pos(double t) {
    const double xi = 2.0 / 3.0 * t * std::sqrt(t);
    double u = 1, v = 1, su = 1, sv = 1, sign = -1;
    double prev_u = 1;
    for (int k = 0; k < 40; ++k) {
        u *= (6.0 * k + 5) * (6.0 * k + 1) / (72.0 * (k + 1));
        v = u * (6.0 * (k + 1) + 1) / (1.0 - 6.0 * (k + 1));
        const double tu = u / std::pow(xi, k + 1);
        if (std::abs(tu) > prev_u) break;
        prev_u = std::abs(tu);
        su += sign * tu;
        sv += sign * v / std::pow(xi, k + 1);
        sign = -sign;
    }
    const double sp = std::sqrt(boost::math::constants::pi<double>());
    const double pre = std::exp(-xi) / (2 * sp * std::pow(t, 0.25));
    return {pre * su, -std::pow(t, 0.25) * std::exp(-xi) / (2 * sp) * sv};
}

inline std::pair<double, double> airy_asymptotic_neg(double t) {
    const double z = -t;
    const double zeta = 2.0 / 3.0 * z * std::sqrt(z);
    const double w = zeta + boost::math::constants::pi<double>() / 4;
    double u[40], v[40];
    u[0] = v[0] = 1;
    for (int k = 1; k < 40; ++k) {
        u[k] = u[k - 1] * (6.0 * k - 1) * (6.0 * k - 5) / (72.0 * k);
        v[k] = u[k] * (6.0 * k + 1) / (1.0 - 6.0 * k);
    }
    double se = 0, so = 0, pe = 0, po = 0;
    double sign = 1;
    for (int k = 0; 2 * k + 1 < 40; ++k) {
        const double te = u[2 * k] / std::pow(zeta, 2 * k);
        if (2 * k > 0 && std::abs(te) > std::abs(u[2 * k - 2] / std::pow(zeta, 2 * k - 2)))
            break;
        se += sign * te;
        so += sign * u[2 * k + 1] / std::pow(zeta, 2 * k + 1);
        pe += sign * v[2 * k] / std::pow(zeta, 2 * k);
        po += sign * v[2 * k + 1] / std::pow(zeta, 2 * k + 1);
        sign = -sign;
    }
    const double sp = std::sqrt(boost::math::constants::pi<double>());
    const double ai = (std::sin(w) * se - std::cos(w) * so) / (sp * std::pow(z, 0.25));
    const double aip = -std::pow(z, 0.25) / sp * (std::cos(w) * pe + std::sin(w) * po);
    return {ai, aip};
}

}  // namespace detail

// Ai(t) to ~1e-12 absolute on [-10, 12]; asymptotic branches beyond.
inline double airy_ai(double t) {
    if (std::abs(t) <= 12) return static_cast<double>(airy_ai_series(real50(t)).first);
    return t > 0 ? detail::airy_asymptotic_pos(t).first : detail::airy_asymptotic_neg(t).first;
}

inline double airy_ai_prime(double t) {
    if (std::abs(t) <= 12) return static_cast<double>(airy_ai_series(real50(t)).second);
    return t > 0 ? detail::airy_asymptotic_pos(t).second : detail::airy_asymptotic_neg(t).second;
}

}  // namespace reunion
