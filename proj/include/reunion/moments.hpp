#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "reunion/real.hpp"
#include "reunion/special.hpp"
#include "reunion/types.hpp"

namespace reunion {

// Gaussian decay rate of the lattice sums at system size L.
//
// Periodic uses the circle spectrum 2 pi^2 n^2 / L^2.  Absorbing and
// reflecting share the interval spectrum pi^2 n^2 / (2 L^2): sine and cosine
// modes of the same Laplacian, so the same rate.
template <class Real>
Real moment_decay(ModelKind model, const Real& length) {
    const Real p = pi_v<Real>();
    switch (model) {
        case ModelKind::Periodic: return 2 * p * p / (length * length);
        case ModelKind::Absorbing:
        case ModelKind::Reflecting: return p * p / (2 * length * length);
    }
    throw std::logic_error("bad model");
}

// Largest monomial power appearing in the moment sums for N walkers.
inline int max_summand_power(ModelKind model, int n_walkers) {
    switch (model) {
        case ModelKind::Periodic: return 2 * n_walkers - 2;
        case ModelKind::Absorbing: return 2 * (2 * n_walkers - 2) + 2;
        case ModelKind::Reflecting: return 2 * (2 * n_walkers - 2);
    }
    throw std::logic_error("bad model");
}

// One-dimensional moment sums feeding the Hankel determinants.
//
//   Periodic:   mu_k = sum_{|n| <= n_max} n^k exp(-c n^2)   (odd k vanish)
//   Absorbing:  mu_k = sum_{1 <= n <= n_max} n^(2k+2) exp(-c n^2)
//   Reflecting: mu_k = [k==0] + 2 sum_{1 <= n <= n_max} n^(2k) exp(-c n^2)
template <class Real>
struct MomentTable {
    ModelKind model{};
    Real decay{};
    int n_max = 0;
    std::vector<Real> moments;  // k = 0 .. 2N-2
    Real tail_bound{};          // bound on the omitted tail of any stored moment
};

namespace detail {

// Geometric majorization of sum_{n > n_max} n^p exp(-c n^2): once past the
// summand peak the term ratio is below one and the tail is dominated by a
// geometric series.
template <class Real>
Real gaussian_tail_bound(const Real& c, int p, int n_max) {
    using std::exp;
    using std::log;
    const Real n1 = Real(n_max + 1);
    const Real t1 = exp(p * log(n1) - c * n1 * n1);
    const Real ratio = exp(p * (log(n1 + 1) - log(n1)) - c * (2 * n1 + 1));
    if (ratio >= 1) return Real(-1);  // cutoff before the peak: bound invalid
    return t1 / (1 - ratio);
}

}  // namespace detail

// Smallest cutoff such that the first omitted term of the highest-power
// moment is below 10^-(digits+5) relative to the largest retained term.
inline int default_moment_truncation(ModelKind model, int n_walkers, double c,
                                     int digits) {
    const int p = max_summand_power(model, n_walkers);
    const auto log_term = [&](double n) { return p * std::log(n) - c * n * n; };
    const double n_peak = std::sqrt(std::max(p, 1) / (2 * c));
    const double log_max = log_term(std::max(n_peak, 1.0));
    const double target = log_max - (digits + 5) * std::log(10.0);
    int n = std::max<int>(n_walkers, static_cast<int>(n_peak) + 1);
    while (log_term(n + 1) > target) {
        ++n;
        if (n > 50'000'000)
            throw std::invalid_argument("moment truncation rule exceeds 5e7 terms");
    }
    return n;
}

template <class Real>
MomentTable<Real> build_moment_table(ModelKind model, int n_walkers,
                                     const Real& decay, int n_max) {
    if (n_walkers < 1) throw std::invalid_argument("need at least one walker");
    if (!(decay > 0)) throw std::invalid_argument("decay rate must be positive");
    if (n_max < n_walkers)
        throw std::invalid_argument("n_max below N makes the truncated sum vanish");

    MomentTable<Real> table;
    table.model = model;
    table.decay = decay;
    table.n_max = n_max;
    const int n_moments = 2 * n_walkers - 1;
    table.moments.assign(n_moments, Real(0));

    // weights exp(-c n^2) for n = 1..n_max, then powers accumulated per k
    for (int n = 1; n <= n_max; ++n) {
        const Real w = exp(-decay * n * n);
        const Real n2 = Real(n) * n;
        Real p = model == ModelKind::Absorbing ? n2 : Real(1);
        for (int k = 0; k < n_moments; ++k) {
            switch (model) {
                case ModelKind::Periodic:
                    // odd moments vanish by symmetry; even ones count both signs
                    if (k % 2 == 0) table.moments[k] += 2 * p * w;
                    p *= n;
                    break;
                case ModelKind::Absorbing:
                    table.moments[k] += p * w;  // half-line sum
                    p *= n2;
                    break;
                case ModelKind::Reflecting:
                    table.moments[k] += 2 * p * w;
                    p *= n2;
                    break;
            }
        }
    }
    if (model != ModelKind::Absorbing) table.moments[0] += 1;  // n = 0 term

    table.tail_bound =
        detail::gaussian_tail_bound(decay, max_summand_power(model, n_walkers), n_max);
    if (model != ModelKind::Absorbing && table.tail_bound > 0)
        table.tail_bound *= 2;  // both signs of n
    return table;
}

}  // namespace reunion
