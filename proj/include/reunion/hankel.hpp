#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "reunion/types.hpp"

namespace reunion {

template <class Real>
struct HankelLogDet {
    Real log_det{};        // log det of the (N x N) moment matrix
    double digits_lost{};  // log10(max pivot / min pivot), cancellation proxy
};

// log det[mu_{i+j}]_{i,j=0..N-1} by LDL^T.  Moment matrices of positive
// measures with at least N support points are positive definite, so the
// pivots stay positive; a non-positive pivot means the working precision was
// exhausted.
template <class Real>
HankelLogDet<Real> hankel_log_det(const std::vector<Real>& mu, int n) {
    using std::log;
    if (static_cast<int>(mu.size()) < 2 * n - 1)
        throw std::invalid_argument("hankel_log_det: need 2N-1 moments");
    std::vector<Real> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = mu[i + j];

    HankelLogDet<Real> out;
    Real max_entry(0);
    for (int k = 0; k < n; ++k)
        if (a[k * n + k] > max_entry) max_entry = a[k * n + k];

    Real min_pivot(0);
    for (int k = 0; k < n; ++k) {
        Real pivot = a[k * n + k];
        if (!(pivot > 0))
            throw precision_loss_error(
                "hankel determinant: non-positive pivot at step " + std::to_string(k) +
                "; raise the working precision");
        out.log_det += log(pivot);
        if (k == 0 || pivot < min_pivot) min_pivot = pivot;
        for (int i = k + 1; i < n; ++i) {
            const Real f = a[i * n + k] / pivot;
            for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    out.digits_lost =
        n > 0 ? static_cast<double>(log(max_entry / min_pivot)) / std::log(10.0) : 0.0;
    return out;
}

}  // namespace reunion
