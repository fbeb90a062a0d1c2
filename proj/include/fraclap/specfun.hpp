#ifndef FRACLAP_SPECFUN_HPP
#define FRACLAP_SPECFUN_HPP

#include "fraclap/common.hpp"

namespace fraclap::specfun {

/// Order of a modified Bessel function; primary use is nu in (0,1).
struct BesselOrder {
    double nu;
    explicit BesselOrder(double v) : nu(v) {
        if (!std::isfinite(v) || v < 0.0)
            throw DomainError("BesselOrder: nu must be finite and >= 0");
    }
};

/// Gamma function, Lanczos approximation with reflection for x < 0.5.
/// Relative accuracy ~1e-13 for |x| <= 30 away from the poles.
double gamma_fn(double x);

/// log |Gamma(x)| for x > 0.
double log_gamma(double x);

/// Modified Bessel function of the second kind K_nu(tau), tau > 0,
/// by trapezoidal quadrature of int_0^inf exp(-tau cosh t) cosh(nu t) dt.
EvalResult bessel_k(BesselOrder order, double tau);

/// Q_sigma(tau) = 2^{1-sigma} tau^sigma K_sigma(tau) / Gamma(sigma).
/// Q_sigma(0) = 1 (analytic limit); positive and decreasing on [0, inf).
EvalResult q_kernel(double sigma, double tau);

/// d/dtau Q_sigma(tau) = -2^{1-sigma} tau^sigma K_{1-sigma}(tau) / Gamma(sigma).
EvalResult q_kernel_deriv(double sigma, double tau);

/// c_{n,s} = 2^{2s-1} pi^{-n/2} Gamma((n+2s)/2) / |Gamma(-s)|.
double gagliardo_constant(int n, double s);

/// C_sigma = 4^sigma Gamma(1+sigma) / Gamma(1-sigma).
double extension_constant(double sigma);

/// C_sigma / (2 sigma) = 2^{2 sigma - 1} Gamma(sigma) / Gamma(1 - sigma):
/// the constant relating the weighted normal trace of the extension to the
/// operator, consistent with the energy identities Q = (C_sigma/2sigma) E.
double trace_constant(double sigma);

/// kappa with kappa * int u(y)|x-y|^{2 sigma - n} dy having Fourier symbol
/// |xi|^{-2 sigma}: kappa = Gamma(n/2 - sigma) / (4^sigma pi^{n/2} Gamma(sigma)).
double riesz_constant(int n, double sigma);

/// Unit-mass Poisson constant p_{n,sigma} = Gamma((n+2s)/2)/(pi^{n/2} Gamma(s)).
double poisson_constant(int n, double sigma);

}  // namespace fraclap::specfun

#endif
