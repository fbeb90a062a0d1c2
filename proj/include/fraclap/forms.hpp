#ifndef FRACLAP_FORMS_HPP
#define FRACLAP_FORMS_HPP

#include <string>

#include "fraclap/quadrature.hpp"
#include "fraclap/spectral.hpp"

namespace fraclap::forms {

/// Fractional order s > -1, s not a nonnegative integer, with the parity
/// decomposition s = 2k + sigma', k = floor((s+1)/2), sigma' in (-1,0)u(0,1).
struct FractionalOrder {
    double s;
    int k;
    double residual;

    explicit FractionalOrder(double order) : s(order) {
        if (!(s > -1.0)) throw DomainError("FractionalOrder: s > -1 required");
        if (s >= 0.0 && s == std::floor(s))
            throw DomainError("FractionalOrder: s must not be a nonnegative integer");
        k = static_cast<int>(std::floor(0.5 * (s + 1.0)));
        residual = s - 2.0 * k;
    }
};

enum class Method { SpectralSeries, Fourier, Gagliardo, Reduced };

struct FormValue {
    double value = 0.0;
    double error = 0.0;
    Method method = Method::SpectralSeries;
    double s = 0.0;
    int reduction_k = 0;
};

enum class FormPair { DR_vs_NSp, DSp_vs_DR, DSp_vs_NSp, DR_vs_NR };

enum class PredictedSign { LeftGreater, RightGreater };

struct ComparisonRecord {
    double s;
    std::string left_label, right_label;
    FormValue left, right;
    PredictedSign predicted;
    double margin;      // |left - right|
    bool conclusive;    // margin > 3 (left.error + right.error)
};

/// Q_s^{DSp}[u] = sum lambda_j^s (u, phi_j)^2 over the basis, with a decay-fit
/// tail bound folded into the error.
FormValue q_dsp(const TestFunction& u, const FractionalOrder& order,
                const SpectralBasis& basis);

/// Q_s^{NSp}[u] = sum mu_j^s (u, psi_j)^2; for s < 0 requires (u,1) = 0 and
/// omits the kernel modes.
FormValue q_nsp(const TestFunction& u, const FractionalOrder& order,
                const SpectralBasis& basis);

/// Q_s^{DR}[u] = int |xi|^{2s} |Fu|^2 dxi.
FormValue q_dr_fourier(const TestFunction& u, const FractionalOrder& order);

/// Gagliardo route for s in (0,1):
/// c_{1,s} [ iint_{Omega x Omega} + 2 int u^2 rho_s ].
FormValue q_dr_gagliardo(const TestFunction& u, const Domain& domain, double s,
                         const quadrature::QuadratureSpec& spec = {});

/// Regional form: c_{1,s} iint_{Omega x Omega} |u(x)-u(y)|^2 / |x-y|^{1+2s}.
FormValue q_nr(const TestFunction& u, const Domain& domain, double s,
               const quadrature::QuadratureSpec& spec = {});

enum class WhichForm { DR, NSp, DSp };

/// Higher-order reduction Q_s[u] = Q_{s-2k}[(-Delta)^k u], k >= 1.
FormValue q_higher(const TestFunction& u, const FractionalOrder& order, WhichForm which,
                   const Domain& domain, int truncation);

/// The raw double integral iint_{Omega x Omega} (u(x)-u(y))^2/|x-y|^{1+2s}
/// (no Gagliardo constant), reduced to correlation form in z = y - x.
quadrature::IntegralResult double_integral_gagliardo(const TestFunction& u,
                                                     const Domain& domain, double s,
                                                     const quadrature::QuadratureSpec& spec = {});

/// Exterior density term int_Omega u(x)^2 rho_s(x) dx with
/// rho_s(x) = int_{R \ Omega} |x-y|^{-1-2s} dy in closed form per gap.
quadrature::IntegralResult exterior_density_integral(const TestFunction& u,
                                                     const Domain& domain, double s);

/// Evaluates both forms of the pair and the theorem's predicted sign.
ComparisonRecord compare_forms(const TestFunction& u, const Domain& domain, double s,
                               FormPair pair, int truncation = 200);

// ---- 2D rectangle forms, s in (0,1) ----
FormValue q_dsp2d(const TestFunction2D& u, double s, const Domain& rect, int per_axis);
FormValue q_nsp2d(const TestFunction2D& u, double s, const Domain& rect, int per_axis);
FormValue q_dr_fourier2d(const TestFunction2D& u, double s);
FormValue q_nr2d(const TestFunction2D& u, const Domain& rect, double s);
FormValue q_dr_gagliardo2d(const TestFunction2D& u, const Domain& rect, double s);

}  // namespace fraclap::forms

#endif
