#include "svmaj/numerics.hpp"

#include "svmaj/errors.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace svmaj {

Real real_power(const Real& x, const Real& p, bool allow_zero_zero) {
    if (x.sign() < 0) throw DomainError("real_power: negative base " + x.to_string(12));
    if (x.is_zero()) {
        if (p.sign() > 0) return Real(std::max(x.precision(), p.precision()));
        if (p.sign() < 0) throw SingularityError("real_power: zero raised to a negative power");
        if (!allow_zero_zero) throw DomainError("real_power: 0^0 requested without opt-in");
        return Real(1L, std::max(x.precision(), p.precision()));
    }
    return pow(x, p);
}

namespace {

// Legendre P_n(x) and P_{n-1}(x) by the three-term recurrence.
std::pair<Real, Real> legendre_pair(int n, const Real& x) {
    Real prev(1L, x.precision());
    Real cur = x;
    for (int k = 1; k < n; ++k) {
        Real next = x * cur;
        next *= static_cast<long>(2 * k + 1);
        next -= prev * static_cast<long>(k);
        next /= static_cast<long>(k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {std::move(cur), std::move(prev)};
}

}  // namespace

GaussLegendreRule::GaussLegendreRule(int nodes, const PrecisionConfig& prec) {
    if (nodes < 2) throw DomainError("gauss_legendre: need at least 2 nodes");
    const Bits out_bits = prec.bits();
    const Bits work_bits = out_bits + 32;
    const Real eps = ldexp(Real(1L, work_bits), -(static_cast<long>(work_bits) - 8));
    const Real pi = Real::pi(work_bits);
    const Real one(1L, work_bits);

    nodes_.resize(static_cast<std::size_t>(nodes));
    weights_.resize(static_cast<std::size_t>(nodes));
    const int half = (nodes + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess for the i-th root (descending order on [-1, 1]).
        Real x = cos(pi * Real(4.0 * i + 3.0, work_bits) / Real(4.0 * nodes + 2.0, work_bits));
        Real derivative(work_bits);
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            auto [pn, pn1] = legendre_pair(nodes, x);
            derivative = (x * pn - pn1) * static_cast<long>(nodes) / (x * x - one);
            const Real step = pn / derivative;
            x -= step;
            if (abs(step) <= eps) {
                auto [pn_final, pn1_final] = legendre_pair(nodes, x);
                derivative = (x * pn_final - pn1_final) * static_cast<long>(nodes) / (x * x - one);
                converged = true;
                break;
            }
        }
        if (!converged) throw NumericError("gauss_legendre: Newton iteration failed for node " + std::to_string(i));
        const Real w = Real(1L, work_bits) / ((one - x * x) * derivative * derivative);
        // Map [-1, 1] -> [0, 1]: t = (1 + x) / 2, weight 2/(...) halves to 1/(...).
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(nodes - 1 - i);
        nodes_[hi] = ((one + x) / 2L).with_precision(out_bits);
        nodes_[lo] = ((one - x) / 2L).with_precision(out_bits);
        weights_[hi] = w.with_precision(out_bits);
        weights_[lo] = w.with_precision(out_bits);
    }
}

std::shared_ptr<const GaussLegendreRule> GaussLegendreRule::cached(int nodes, const PrecisionConfig& prec) {
    static std::mutex mutex;
    static std::map<std::pair<int, Bits>, std::shared_ptr<const GaussLegendreRule>> rules;
    const std::lock_guard lock(mutex);
    auto& slot = rules[{nodes, prec.bits()}];
    if (!slot) slot = std::make_shared<const GaussLegendreRule>(nodes, prec);
    return slot;
}

Real GaussLegendreRule::integrate(const Integrand& f) const {
    Real sum(nodes_.front().precision());
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(nodes_[i]);
    return sum;
}

Real GaussLegendreRule::integrate(const Integrand& f, const Real& a, const Real& b) const {
    const Real width = b - a;
    Real sum(nodes_.front().precision());
    for (std::size_t i = 0; i < nodes_.size(); ++i) sum += weights_[i] * f(a + width * nodes_[i]);
    return sum * width;
}

Real gauss_legendre(const Integrand& f, int nodes, const PrecisionConfig& prec) {
    return GaussLegendreRule::cached(nodes, prec)->integrate(f);
}

Real gauss_legendre_converged(const Integrand& f, const Real& a, const Real& b, const Real& tolerance,
                              const PrecisionConfig& prec, int start_nodes, int max_nodes) {
    int n = std::max(2, start_nodes);
    Real previous = GaussLegendreRule::cached(n, prec)->integrate(f, a, b);
    while (2 * n <= max_nodes) {
        n *= 2;
        Real current = GaussLegendreRule::cached(n, prec)->integrate(f, a, b);
        if (abs(current - previous) <= tolerance) return current;
        previous = std::move(current);
    }
    throw NumericError("gauss_legendre: no agreement within tolerance up to " + std::to_string(max_nodes) + " nodes");
}

}  // namespace svmaj
