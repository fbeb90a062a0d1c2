#ifndef FRACLAP_FOURIER_HPP
#define FRACLAP_FOURIER_HPP

#include <complex>

#include "fraclap/quadrature.hpp"
#include "fraclap/test_function.hpp"

namespace fraclap::fourier {

/// F u(xi) with the (2 pi)^{-n/2} e^{-i<xi,x>} convention: closed form per
/// piece where available, oscillatory panel quadrature otherwise.
std::complex<double> fourier_transform(const TestFunction& u, double xi);
std::complex<double> fourier_transform(const TestFunction2D& u, double xi1, double xi2);

/// int_R |xi|^{2s} |F u|^2 dxi for s in (-1, 1) u (1, 3), s not an integer.
/// Mean-zero u is required for s <= -1/2 (integrability at xi = 0).
quadrature::IntegralResult xi_weighted_energy(const TestFunction& u, double s);

/// 2D version over R^2 (tensor-product test functions, s in (0,1)).
quadrature::IntegralResult xi_weighted_energy2d(const TestFunction2D& u, double s);

}  // namespace fraclap::fourier

#endif
