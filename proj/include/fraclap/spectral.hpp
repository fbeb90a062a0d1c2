#ifndef FRACLAP_SPECTRAL_HPP
#define FRACLAP_SPECTRAL_HPP

#include "fraclap/domain.hpp"
#include "fraclap/test_function.hpp"

namespace fraclap {

/// One eigenpair of the Dirichlet or Neumann Laplacian with a closed-form
/// normalized eigenfunction evaluator.
struct Mode {
    double eigenvalue;
    BasisKind kind;
    int component;  // 1D: owning interval; 2D: -1
    int j;          // index within the component (0 = Neumann constant mode)
    int jx = 0, jy = 0;  // 2D tensor indices
};

/// Enumerated eigenbasis of an interval, a disjoint union, or a rectangle.
class SpectralBasis {
public:
    SpectralBasis(Domain domain, BasisKind kind, std::vector<Mode> modes, int requested);

    const Domain& domain() const { return domain_; }
    BasisKind kind() const { return kind_; }
    const std::vector<Mode>& modes() const { return modes_; }
    size_t size() const { return modes_.size(); }
    int requested_truncation() const { return requested_; }

    double eval(size_t mode_idx, double x) const;
    double eval2d(size_t mode_idx, double x1, double x2) const;
    /// d/dx of the eigenfunction (1D).
    double eval_deriv(size_t mode_idx, double x) const;

private:
    Domain domain_;
    BasisKind kind_;
    std::vector<Mode> modes_;
    int requested_;
};

/// First modes of the Dirichlet (j>=1) or Neumann (j>=0) Laplacian eigenbasis,
/// sorted by eigenvalue.  Disjoint unions merge the component spectra; the
/// Neumann kernel gets one constant mode per component.
SpectralBasis build_basis(const Domain& domain, BasisKind kind, int n);

struct CoefficientSet {
    std::vector<double> values;   // (u, mode_i) in basis order
    double tail_sq_estimate;      // bound on sum of squared coefficients beyond
    double fit_amplitude;         // |c_j| <= C j^{-decay} within each component
    int decay;
};

/// Inner products of u against every basis mode: closed form where the piece
/// provides one, adaptive quadrature otherwise.
CoefficientSet coefficients(const TestFunction& u, const SpectralBasis& basis);

/// |int u| <= tol * ||u||_{L2} |Omega|^{1/2} ?
bool check_mean_zero(const TestFunction& u, const Domain& domain, double tol = 1e-10);

/// v = (-Delta)^k u as a closed form.
TestFunction laplacian_power(const TestFunction& u, int k);

}  // namespace fraclap

#endif
