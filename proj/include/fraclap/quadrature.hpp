#ifndef FRACLAP_QUADRATURE_HPP
#define FRACLAP_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "fraclap/common.hpp"

namespace fraclap::quadrature {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 4000;

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !std::isfinite(rel_tol) ||
            !std::isfinite(abs_tol) || max_subdivisions < 1)
            throw DomainError("QuadratureSpec: tolerances must be positive and finite");
    }
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;

    IntegralResult& operator+=(const IntegralResult& o) {
        value += o.value;
        error_estimate += o.error_estimate;
        evaluations += o.evaluations;
        return *this;
    }
};

using Fn = std::function<double(double)>;

/// Gauss-Kronrod 15 on a single panel; error from |K15 - G7|.
IntegralResult gk15(const Fn& f, double a, double b);

/// Adaptive integration on [a,b]: worst-panel bisection until the summed
/// error meets max(abs_tol, rel_tol * |value|).  Throws ToleranceError
/// (carrying the best value) if the subdivision budget runs out.
IntegralResult integrate_adaptive(const Fn& f, double a, double b,
                                  const QuadratureSpec& spec = {});

/// As integrate_adaptive but with forced initial panel boundaries
/// (breakpoints where the integrand has kinks).
IntegralResult integrate_adaptive(const Fn& f, double a, double b,
                                  const std::vector<double>& breakpoints,
                                  const QuadratureSpec& spec = {});

/// int_0^delta g(z) z^{-1-2s} dz where g(z) = O(z^2) near 0 (caller certifies;
/// checked at three samples).  Geometric mesh (ratio 1/2) toward 0 down to
/// z0, plus a Taylor sliver g''(0)/2 * z0^{2-2s}/(2-2s) estimated from
/// g(z0)/z0^2, or from g2 = g''(0)/2 when the caller supplies it exactly.
IntegralResult integrate_singular_symmetric(const Fn& g, double delta, double s,
                                            const QuadratureSpec& spec = {},
                                            const double* half_g2 = nullptr);

struct DecayHint {
    enum Kind { Algebraic, Exponential } kind;
    double rate;  // |f| <~ x^{-rate} resp. e^{-rate x}
    static DecayHint algebraic(double p) { return {Algebraic, p}; }
    static DecayHint exponential(double c) { return {Exponential, c}; }
};

/// int_0^inf f, truncated at a cutoff chosen from the declared decay; the
/// analytic tail bound is folded into the error estimate.  Tail samples that
/// contradict the hint raise an error.
IntegralResult integrate_semi_infinite(const Fn& f, DecayHint decay,
                                       const QuadratureSpec& spec = {});

/// Fixed-order Gauss-Legendre panels of length <= max_len over [a,b]
/// (oscillatory integrands: cap max_len at half the oscillation period).
IntegralResult integrate_panels(const Fn& f, double a, double b, double max_len,
                                int gauss_order = 16);

/// Nodes/weights of the n-point Gauss-Legendre rule on [-1,1] (n in {8,16,32}).
void gauss_rule(int n, const double** nodes, const double** weights);

}  // namespace fraclap::quadrature

#endif
