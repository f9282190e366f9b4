#pragma once

#include <stdexcept>
#include <string>

namespace reunion {

// Boundary condition of the walker system on [0, L].
enum class ModelKind { Periodic, Absorbing, Reflecting };

// Gauge group selecting the character-sum family in partition_function.
enum class GaugeGroup { U, Sp2N, SO2N };

// Which evaluation route produced a ReunionResult.
enum class Method { HankelDeterminant, BruteForce, PoissonDual };

inline const char* to_string(ModelKind m) {
    switch (m) {
        case ModelKind::Periodic: return "periodic";
        case ModelKind::Absorbing: return "absorbing";
        case ModelKind::Reflecting: return "reflecting";
    }
    return "?";
}

inline const char* to_string(GaugeGroup g) {
    switch (g) {
        case GaugeGroup::U: return "U";
        case GaugeGroup::Sp2N: return "Sp2N";
        case GaugeGroup::SO2N: return "SO2N";
    }
    return "?";
}

inline const char* to_string(Method m) {
    switch (m) {
        case Method::HankelDeterminant: return "hankel";
        case Method::BruteForce: return "brute_force";
        case Method::PoissonDual: return "poisson_dual";
    }
    return "?";
}

// Requested working precision cannot be honored: the determinant lost more
// than half the requested digits to cancellation.
class precision_loss_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The lattice-index cutoff n_max is too small for the requested accuracy.
class truncation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An ODE integration left the expected solution branch.
class divergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace reunion
