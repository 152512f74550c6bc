#pragma once

#include "svmaj/precision.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace svmaj {

/// x^p for x >= 0.
///
/// Throws DomainError for x < 0, SingularityError for x = 0 with p < 0. The
/// value 0^0 is rejected unless `allow_zero_zero` is set, in which case it is 1.
Real real_power(const Real& x, const Real& p, bool allow_zero_zero = false);

using Integrand = std::function<Real(const Real&)>;

/// Gauss-Legendre nodes and weights on [0, 1], computed by Newton iteration on
/// the Legendre recurrence at the requested precision.
class GaussLegendreRule {
public:
    GaussLegendreRule(int nodes, const PrecisionConfig& prec);
    /// Shared rule for (nodes, bits); built once per process, safe to call concurrently.
    static std::shared_ptr<const GaussLegendreRule> cached(int nodes, const PrecisionConfig& prec);

    [[nodiscard]] int size() const { return static_cast<int>(nodes_.size()); }
    [[nodiscard]] const std::vector<Real>& nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<Real>& weights() const { return weights_; }

    /// Estimate of the integral of f over [a, b].
    [[nodiscard]] Real integrate(const Integrand& f, const Real& a, const Real& b) const;
    [[nodiscard]] Real integrate(const Integrand& f) const;

private:
    std::vector<Real> nodes_;
    std::vector<Real> weights_;
};

/// One Gauss-Legendre estimate of the integral of f over [0, 1] with `nodes` points (>= 2).
Real gauss_legendre(const Integrand& f, int nodes, const PrecisionConfig& prec);

/// Doubles the node count from `start_nodes` until two successive estimates of
/// the integral over [a, b] agree within `tolerance`; throws NumericError once
/// `max_nodes` is exceeded.
Real gauss_legendre_converged(const Integrand& f, const Real& a, const Real& b, const Real& tolerance,
                              const PrecisionConfig& prec, int start_nodes = 16, int max_nodes = 1024);

}  // namespace svmaj
