#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "reunion/hankel.hpp"
#include "reunion/moments.hpp"
#include "reunion/real.hpp"
#include "reunion/special.hpp"
#include "reunion/types.hpp"

namespace reunion {

struct ReunionQuery {
    ModelKind model = ModelKind::Periodic;
    int num_walkers = 1;
    double length = 1.0;
    int n_max = 0;   // 0: pick by the relative-tail rule
    int digits = 0;  // 0: max(30, 2N + 15)
};

struct ReunionResult {
    double value = 0;      // may underflow to 0 deep in the left tail
    double log_value = 0;  // always finite
    double truncation_error_estimate = 0;  // relative
    Method method = Method::HankelDeterminant;
};

inline int default_digits(int n_walkers) {
    return std::max(30, 2 * n_walkers + 15);
}

// Power of L dividing the lattice sum for each model.
inline int length_power(ModelKind model, int n) {
    switch (model) {
        case ModelKind::Periodic: return n * n;
        case ModelKind::Absorbing: return 2 * n * n + n;
        case ModelKind::Reflecting: return 2 * n * n - n;
    }
    throw std::logic_error("bad model");
}

// log of the normalization constant making the ratio tend to 1 as L grows.
template <class Real>
Real log_model_constant(ModelKind model, int n) {
    const Real lp = log(pi_v<Real>());
    const Real l2 = log(Real(2));
    Real s(0);
    switch (model) {
        case ModelKind::Periodic:
            s = (Real(n) * n - Real(n) / 2) * (l2 + lp);
            for (int j = 0; j < n; ++j) s -= log_gamma(Real(j + 2));
            return s;
        case ModelKind::Absorbing:
            s = (2 * Real(n) * n + n) * lp - (Real(n) * n - Real(n) / 2) * l2;
            for (int j = 0; j < n; ++j)
                s -= log_gamma(Real(j + 2)) + log_gamma(Real(j) + Real(3) / 2);
            return s;
        case ModelKind::Reflecting:
            s = (2 * Real(n) * n - n) * lp + (Real(n) / 2 - Real(n) * n) * l2;
            for (int j = 0; j < n; ++j)
                s -= log_gamma(Real(j + 2)) + log_gamma(Real(j) + Real(1) / 2);
            return s;
    }
    throw std::logic_error("bad model");
}

namespace detail {

template <class Real>
Real log_ratio_from_moments(ModelKind model, int n, const Real& length,
                            int n_max, int requested_digits) {
    const Real c = moment_decay(model, length);
    const auto table = build_moment_table(model, n, c, n_max);
    const auto det = hankel_log_det(table.moments, n);
    const int spare = working_digits<Real>() - static_cast<int>(det.digits_lost + 1);
    if (spare < (requested_digits + 1) / 2)
        throw precision_loss_error(
            "hankel determinant lost " + std::to_string((int)det.digits_lost) +
            " of " + std::to_string(working_digits<Real>()) +
            " working digits; below half of the requested " +
            std::to_string(requested_digits));
    return log_model_constant<Real>(model, n) -
           length_power(model, n) * log(length) + log_gamma(Real(n + 1)) +
           det.log_det;
}

inline void validate(const ReunionQuery& q) {
    if (q.num_walkers < 1) throw std::invalid_argument("num_walkers must be >= 1");
    if (!(q.length > 0)) throw std::invalid_argument("length must be positive");
    if (q.digits != 0 && q.digits < kMinDigits)
        throw std::invalid_argument("digits below the supported floor of 15");
    if (q.n_max != 0 && q.n_max < q.num_walkers)
        throw std::invalid_argument("n_max must be at least num_walkers");
}

}  // namespace detail

// Normalized reunion probability via the Hankel-determinant reduction of the
// lattice sum: the symmetric multi-sum with squared Vandermonde weight equals
// N! det[ sum_n f(n)^(i+j) w(n) ].
inline ReunionResult hankel_reunion(const ReunionQuery& query) {
    detail::validate(query);
    const int digits = query.digits ? query.digits : default_digits(query.num_walkers);
    return with_digits(digits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const Real length(query.length);
        const double c = static_cast<double>(moment_decay(ModelKind(query.model), Real(query.length)));
        const int n_auto = default_moment_truncation(query.model, query.num_walkers,
                                                     c, digits);
        const int n_max = query.n_max ? query.n_max : n_auto;
        const Real lo = detail::log_ratio_from_moments<Real>(
            query.model, query.num_walkers, length, n_max, digits);
        // sensitivity of the result to the cutoff, plus headroom
        const int n_hi = std::max(n_max + 8, n_max + n_max / 2);
        const Real hi = detail::log_ratio_from_moments<Real>(
            query.model, query.num_walkers, length, n_hi, digits);
        const double rel =
            std::abs(static_cast<double>(expm1(hi - lo))) + 1e-300;
        if (rel > 1e-3)
            throw truncation_error(
                "lattice cutoff n_max=" + std::to_string(n_max) +
                " leaves a relative truncation error of about " + std::to_string(rel));
        ReunionResult r;
        r.log_value = static_cast<double>(hi);
        r.value = std::exp(r.log_value);
        r.truncation_error_estimate = rel;
        r.method = Method::HankelDeterminant;
        return r;
    });
}

// Literal nested-sum evaluation, kept independent of the determinant path.
inline ReunionResult brute_force_reunion(const ReunionQuery& query) {
    detail::validate(query);
    if (query.num_walkers > 4)
        throw std::invalid_argument("brute force is capped at 4 walkers");
    const int digits = query.digits ? query.digits : default_digits(query.num_walkers);
    const int n = query.num_walkers;
    return with_digits(digits, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        const Real length(query.length);
        const double c_d = static_cast<double>(moment_decay(query.model, Real(query.length)));
        const int n_max = query.n_max
                              ? query.n_max
                              : std::min(80, default_moment_truncation(
                                                 query.model, n, c_d, digits));
        if (n_max > 80)
            throw std::invalid_argument("brute force is capped at n_max = 80");
        const Real c = moment_decay(query.model, length);
        const bool half_line = query.model == ModelKind::Absorbing;
        const int lo = half_line ? 1 : -n_max;
        const bool squared_index = query.model != ModelKind::Periodic;

        std::vector<Real> idx(n);
        std::vector<Real> weight_cache;
        for (int v = lo; v <= n_max; ++v) {
            Real w = exp(-c * v * v);
            if (query.model == ModelKind::Absorbing) w *= Real(v) * v;
            weight_cache.push_back(w);
        }
        Real total(0);
        // depth-first over the full index hypercube
        std::vector<int> pos(n, lo);
        std::vector<Real> partial(n + 1);
        partial[0] = 1;
        int depth = 0;
        while (depth >= 0) {
            if (pos[depth] > n_max) {
                pos[depth] = lo;
                --depth;
                if (depth >= 0) ++pos[depth];
                continue;
            }
            const int v = pos[depth];
            const Real fv = squared_index ? Real(v) * v : Real(v);
            Real contrib = partial[depth] * weight_cache[v - lo];
            for (int m = 0; m < depth; ++m) {
                const Real d = idx[m] - fv;
                contrib *= d * d;
            }
            idx[depth] = fv;
            if (depth + 1 == n) {
                total += contrib;
                ++pos[depth];
            } else {
                partial[depth + 1] = contrib;
                ++depth;
            }
        }
        ReunionResult r;
        if (!(total > 0)) {
            r.value = 0;
            r.log_value = -std::numeric_limits<double>::max();
        } else {
            const Real lv = log_model_constant<Real>(query.model, n) -
                            length_power(query.model, n) * log(length) + log(total);
            r.log_value = static_cast<double>(lv);
            r.value = std::exp(r.log_value);
        }
        r.truncation_error_estimate = 0;
        r.method = Method::BruteForce;
        return r;
    });
}

// N = 1 periodic ratio in its dual form: sum over windings of the free
// return weight exp(-L^2 n^2 / 2).
inline ReunionResult g1_poisson_dual(double length) {
    if (!(length > 0)) throw std::invalid_argument("length must be positive");
    const real50 L(length);
    real50 total(1), term;
    const real50 eps = std::numeric_limits<real50>::epsilon();
    for (int n = 1; n < 100000; ++n) {
        term = 2 * exp(-L * L * n * n / 2);
        total += term;
        if (term < eps * total) break;
    }
    ReunionResult r;
    r.value = static_cast<double>(total);
    r.log_value = static_cast<double>(log(total));
    r.truncation_error_estimate = static_cast<double>(term / total);
    r.method = Method::PoissonDual;
    return r;
}

}  // namespace reunion
