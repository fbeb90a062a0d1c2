#include "fraclap/forms.hpp"

#include <algorithm>
#include <cmath>

#include "fraclap/fourier.hpp"
#include "fraclap/series.hpp"
#include "fraclap/specfun.hpp"

namespace fraclap::forms {

using quadrature::IntegralResult;
using quadrature::QuadratureSpec;

namespace {

// spectral series head + tail from the coefficient decay fit
FormValue spectral_series(const TestFunction& u, const FractionalOrder& order,
                          const SpectralBasis& basis, bool neumann) {
    const double s = order.s;
    if (neumann && s < 0.0 && !check_mean_zero(u, basis.domain()))
        throw MeanNotZeroError("q_nsp: s < 0 requires (u,1) = 0");

    const CoefficientSet cs = coefficients(u, basis);
    double head = 0.0;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Mode& m = basis.modes()[i];
        if (m.j == 0) continue;  // mu_0^s c^2: 0 for s > 0, omitted for s < 0
        head += std::pow(m.eigenvalue, s) * cs.values[i] * cs.values[i];
    }

    // tail: sum_{j > jmin} lambda_j^s C^2 j^{-2 decay} per component
    const double theta = 2.0 * cs.decay - 2.0 * s;
    if (!(theta > 1.0))
        throw SmoothnessError("spectral form: coefficient decay too slow for this order");
    double tail = 0.0;
    for (size_t ci = 0; ci < basis.domain().components().size(); ++ci) {
        int top = 0;
        for (const Mode& m : basis.modes())
            if (m.component == static_cast<int>(ci)) top = std::max(top, m.j);
        if (top < 4) continue;
        const double L = basis.domain().components()[ci].length();
        tail += std::pow(PI / L, 2.0 * s) * cs.fit_amplitude * cs.fit_amplitude *
                series::zeta_tail(theta, double(top));
    }

    FormValue out;
    out.value = head;
    out.error = tail + 1e-14 * std::abs(head);
    out.method = Method::SpectralSeries;
    out.s = s;
    return out;
}

bool left_greater_predicted(double s, FormPair pair) {
    if (pair == FormPair::DSp_vs_NSp || pair == FormPair::DR_vs_NR) return true;
    // DR vs NSp and DSp vs DR share the parity rule: left wins on (2k, 2k+1)
    const int m = static_cast<int>(std::floor(s));
    return (m % 2) == 0;  // floor(s) even (m = -1 gives odd -> right)
}

}  // namespace

FormValue q_dsp(const TestFunction& u, const FractionalOrder& order,
                const SpectralBasis& basis) {
    if (basis.kind() != BasisKind::Dirichlet)
        throw DomainError("q_dsp: Dirichlet basis required");
    return spectral_series(u, order, basis, false);
}

FormValue q_nsp(const TestFunction& u, const FractionalOrder& order,
                const SpectralBasis& basis) {
    if (basis.kind() != BasisKind::Neumann)
        throw DomainError("q_nsp: Neumann basis required");
    return spectral_series(u, order, basis, true);
}

FormValue q_dr_fourier(const TestFunction& u, const FractionalOrder& order) {
    if (u.sobolev_limit() <= order.s)
        throw SmoothnessError("q_dr_fourier: u is not in the H~^s class for this s");
    IntegralResult r = fourier::xi_weighted_energy(u, order.s);
    FormValue out;
    out.value = r.value / PI;  // 2 half-lines / (2 pi) normalization
    out.error = r.error_estimate / PI;
    out.method = Method::Fourier;
    out.s = order.s;
    return out;
}

IntegralResult double_integral_gagliardo(const TestFunction& u, const Domain& domain,
                                         double s, const QuadratureSpec& spec) {
    if (domain.dim() != 1)
        throw DomainError("double_integral_gagliardo: 1D domains here (2D via q_nr2d)");
    const auto& comps = domain.components();
    const std::vector<double> kinks = u.kinks();

    // F(z) = int (u(x+z) - u(x))^2 dx over {x in Ci, x+z in Cj}
    auto correlation = [&](double z, const Interval& ci, const Interval& cj) {
        const double lo = std::max(ci.a, cj.a - z);
        const double hi = std::min(ci.b, cj.b - z);
        if (!(hi > lo)) return IntegralResult{};
        std::vector<double> brk;
        for (double t : kinks) {
            brk.push_back(t);
            brk.push_back(t - z);
        }
        QuadratureSpec inner = spec;
        inner.rel_tol = std::max(1e-12, 0.1 * spec.rel_tol);
        inner.abs_tol = 1e-16;
        auto f = [&](double x) {
            const double d = u(x + z) - u(x);
            return d * d;
        };
        return quadrature::integrate_adaptive(f, lo, hi, brk, inner);
    };

    IntegralResult total;
    for (size_t i = 0; i < comps.size(); ++i) {
        for (size_t j = 0; j < comps.size(); ++j) {
            const Interval& ci = comps[i];
            const Interval& cj = comps[j];
            const double zlo = cj.a - ci.b;
            const double zhi = cj.b - ci.a;
            if (i == j) {
                // singular diagonal: 2 int_0^L F(z) z^{-1-2s} dz
                const double L = ci.length();
                // exact curvature at z -> 0: F ~ z^2 int u'^2 over the component
                auto g = [&](double z) { return correlation(z, ci, ci).value; };
                double du2 = 0.0;
                {
                    auto f = [&](double x) {
                        const double d = u.derivative(x, 1);
                        return d * d;
                    };
                    QuadratureSpec dspec;
                    dspec.rel_tol = 1e-12;
                    du2 = quadrature::integrate_adaptive(f, ci.a, ci.b, kinks, dspec).value;
                }
                IntegralResult r =
                    quadrature::integrate_singular_symmetric(g, std::min(0.25, L), s, spec, &du2);
                if (L > 0.25) {
                    auto h = [&](double z) {
                        return correlation(z, ci, ci).value * std::pow(z, -1.0 - 2.0 * s);
                    };
                    r += quadrature::integrate_adaptive(h, 0.25, L, spec);
                }
                total.value += 2.0 * r.value;
                total.error_estimate += 2.0 * r.error_estimate;
                total.evaluations += r.evaluations;
            } else if (zhi > zlo && zlo > 0.0) {
                auto h = [&](double z) {
                    return correlation(z, ci, cj).value * std::pow(z, -1.0 - 2.0 * s);
                };
                IntegralResult r = quadrature::integrate_adaptive(h, zlo, zhi, spec);
                total.value += 2.0 * r.value;  // (i,j) and (j,i)
                total.error_estimate += 2.0 * r.error_estimate;
                total.evaluations += r.evaluations;
            }
        }
    }
    // the (i,j) loop with i != j double-counts ordered pairs; keep only j > i
    // handled above by zlo > 0 (j right of i), factor 2 covers the mirror.
    return total;
}

IntegralResult exterior_density_integral(const TestFunction& u, const Domain& domain,
                                         double s) {
    const auto gaps = domain.complement();
    auto rho = [&](double x) {
        double r = 0.0;
        for (const auto& g : gaps) {
            if (std::isinf(g.a)) {
                r += std::pow(x - g.b, -2.0 * s);
            } else if (std::isinf(g.b)) {
                r += std::pow(g.a - x, -2.0 * s);
            } else {
                // bounded gap fully on one side of x
                if (x <= g.a)
                    r += std::pow(g.a - x, -2.0 * s) - std::pow(g.b - x, -2.0 * s);
                else
                    r += std::pow(x - g.b, -2.0 * s) - std::pow(x - g.a, -2.0 * s);
            }
        }
        return r / (2.0 * s);
    };

    IntegralResult total;
    for (const auto& c : domain.components()) {
        // divergence guard: u not vanishing at an endpoint makes the term
        // nonintegrable for s >= 1/2
        const double ua = u(c.a + 1e-13);
        const double ub = u(c.b - 1e-13);
        if (s >= 0.5 && (std::abs(ua) > 1e-9 || std::abs(ub) > 1e-9))
            throw ToleranceError("exterior term divergent: u does not vanish on the boundary",
                                 std::numeric_limits<double>::infinity(), 0.0);
        auto f = [&](double x) {
            const double v = u(x);
            return v * v * rho(x);
        };
        // dyadic meshes toward both endpoints
        const double mid = 0.5 * (c.a + c.b);
        double hi = mid;
        QuadratureSpec spec;
        spec.rel_tol = 1e-11;
        spec.abs_tol = 1e-15;
        for (int side = 0; side < 2; ++side) {
            double width = 0.5 * c.length();
            for (int l = 0; l < 50; ++l) {
                const double w2 = 0.5 * width;
                const double lo = (side == 0) ? c.a + w2 : c.b - width;
                const double up = (side == 0) ? c.a + width : c.b - w2;
                total += quadrature::gk15(f, lo, up);
                width = w2;
            }
            // sliver: with u(a)=0, u^2 rho ~ u'(a)^2 (x-a)^{2-2s}/(2s)
            const double e = (side == 0) ? c.a : c.b;
            const double probe = e + ((side == 0) ? width : -width);
            const double model = f(probe) / std::pow(width, 2.0 - 2.0 * s);
            const double sliver = model * std::pow(width, 3.0 - 2.0 * s) / (3.0 - 2.0 * s);
            total.value += sliver;
            total.error_estimate += std::abs(sliver);
        }
        (void)hi;
    }
    return total;
}

FormValue q_dr_gagliardo(const TestFunction& u, const Domain& domain, double s,
                         const QuadratureSpec& spec) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("q_dr_gagliardo: s in (0,1) required");
    const double c = specfun::gagliardo_constant(1, s);
    IntegralResult inner = double_integral_gagliardo(u, domain, s, spec);
    IntegralResult outer = exterior_density_integral(u, domain, s);
    FormValue out;
    out.value = c * (inner.value + 2.0 * outer.value);
    out.error = c * (inner.error_estimate + 2.0 * outer.error_estimate);
    out.method = Method::Gagliardo;
    out.s = s;
    return out;
}

FormValue q_nr(const TestFunction& u, const Domain& domain, double s,
               const QuadratureSpec& spec) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("q_nr: s in (0,1) required");
    const double c = specfun::gagliardo_constant(1, s);
    IntegralResult inner = double_integral_gagliardo(u, domain, s, spec);
    FormValue out;
    out.value = c * inner.value;
    out.error = c * inner.error_estimate;
    out.method = Method::Gagliardo;
    out.s = s;
    return out;
}

FormValue q_higher(const TestFunction& u, const FractionalOrder& order, WhichForm which,
                   const Domain& domain, int truncation) {
    if (order.k < 1) throw DomainError("q_higher: k >= 1 required (use the direct form)");
    const TestFunction v = laplacian_power(u, order.k);
    const FractionalOrder res(order.residual);
    FormValue out;
    switch (which) {
        case WhichForm::DR:
            out = q_dr_fourier(v, res);
            break;
        case WhichForm::NSp:
            out = q_nsp(v, res, build_basis(domain, BasisKind::Neumann, truncation));
            break;
        case WhichForm::DSp:
            out = q_dsp(v, res, build_basis(domain, BasisKind::Dirichlet, truncation));
            break;
    }
    out.method = Method::Reduced;
    out.reduction_k = order.k;
    out.s = order.s;
    return out;
}

ComparisonRecord compare_forms(const TestFunction& u, const Domain& domain, double s,
                               FormPair pair, int truncation) {
    const FractionalOrder order(s);
    ComparisonRecord rec;
    rec.s = s;
    rec.predicted = left_greater_predicted(s, pair) ? PredictedSign::LeftGreater
                                                    : PredictedSign::RightGreater;
    switch (pair) {
        case FormPair::DR_vs_NSp:
            rec.left_label = "Q_DR";
            rec.right_label = "Q_NSp";
            rec.left = q_dr_fourier(u, order);
            rec.right = q_nsp(u, order, build_basis(domain, BasisKind::Neumann, truncation));
            break;
        case FormPair::DSp_vs_DR:
            rec.left_label = "Q_DSp";
            rec.right_label = "Q_DR";
            rec.left = q_dsp(u, order, build_basis(domain, BasisKind::Dirichlet, truncation));
            rec.right = q_dr_fourier(u, order);
            break;
        case FormPair::DSp_vs_NSp:
            if (!(s > 0.0 && s < 1.0))
                throw DomainError("DSp_vs_NSp comparison stated for s in (0,1)");
            rec.left_label = "Q_DSp";
            rec.right_label = "Q_NSp";
            rec.left = q_dsp(u, order, build_basis(domain, BasisKind::Dirichlet, truncation));
            rec.right = q_nsp(u, order, build_basis(domain, BasisKind::Neumann, truncation));
            break;
        case FormPair::DR_vs_NR:
            if (!(s > 0.0 && s < 1.0))
                throw DomainError("DR_vs_NR comparison stated for s in (0,1)");
            rec.left_label = "Q_DR";
            rec.right_label = "Q_NR";
            rec.left = q_dr_fourier(u, order);
            rec.right = q_nr(u, domain, s);
            break;
    }
    rec.margin = std::abs(rec.left.value - rec.right.value);
    rec.conclusive = rec.margin > 3.0 * (rec.left.error + rec.right.error);
    return rec;
}

// --------------------------------------------------------------- 2D variants

namespace {

FormValue spectral_series2d(const TestFunction2D& u, double s, const Domain& rect,
                            int per_axis, BasisKind kind) {
    if (rect.dim() != 2) throw DomainError("2D form: rectangle domain required");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("2D forms support s in (0,1)");
    // tensor coefficients from the 1D closed forms
    const Domain d1 = Domain::interval(rect.side(0).a, rect.side(0).b);
    const Domain d2 = Domain::interval(rect.side(1).a, rect.side(1).b);
    const SpectralBasis b1 = build_basis(d1, kind, per_axis);
    const SpectralBasis b2 = build_basis(d2, kind, per_axis);
    const CoefficientSet c1 = coefficients(u.factor(0), b1);
    const CoefficientSet c2 = coefficients(u.factor(1), b2);

    double head = 0.0;
    for (size_t i = 0; i < b1.size(); ++i) {
        const double mu1 = b1.modes()[i].eigenvalue;
        for (size_t j = 0; j < b2.size(); ++j) {
            const double mu = mu1 + b2.modes()[j].eigenvalue;
            if (mu == 0.0) continue;
            const double c = c1.values[i] * c2.values[j];
            head += std::pow(mu, s) * c * c;
        }
    }
    // tail: coefficients factorize; bound the missing tensor blocks by
    // (sum_i mu_i^s ci^2)(sum_j cj^2)-type cross terms with decay-fit tails
    double l2sq1 = 0.0, l2sq2 = 0.0, en1 = 0.0, en2 = 0.0;
    for (size_t i = 0; i < b1.size(); ++i) {
        l2sq1 += c1.values[i] * c1.values[i];
        en1 += std::pow(std::max(b1.modes()[i].eigenvalue, 0.0), s) * c1.values[i] * c1.values[i];
    }
    for (size_t j = 0; j < b2.size(); ++j) {
        l2sq2 += c2.values[j] * c2.values[j];
        en2 += std::pow(std::max(b2.modes()[j].eigenvalue, 0.0), s) * c2.values[j] * c2.values[j];
    }
    const double t1 = c1.tail_sq_estimate;
    const double t2 = c2.tail_sq_estimate;
    const double jt1 = double(per_axis);
    const double L1 = rect.side(0).length();
    // energy-weighted coefficient tails: sum_{i>N} mu_i^s c_i^2
    const double th1 = 2.0 * c1.decay - 2.0 * s;
    const double th2 = 2.0 * c2.decay - 2.0 * s;
    const double et1 = std::pow(PI / L1, 2.0 * s) * c1.fit_amplitude * c1.fit_amplitude *
                       series::zeta_tail(th1, jt1);
    const double L2 = rect.side(1).length();
    const double et2 = std::pow(PI / L2, 2.0 * s) * c2.fit_amplitude * c2.fit_amplitude *
                       series::zeta_tail(th2, double(per_axis));
    // (mu1 + mu2)^s <= mu1^s + mu2^s for s in (0,1)
    const double tail = et1 * l2sq2 + t1 * en2 + et2 * l2sq1 + t2 * en1;

    FormValue out;
    out.value = head;
    out.error = tail + 1e-13 * head;
    out.method = Method::SpectralSeries;
    out.s = s;
    return out;
}

}  // namespace

FormValue q_dsp2d(const TestFunction2D& u, double s, const Domain& rect, int per_axis) {
    return spectral_series2d(u, s, rect, per_axis, BasisKind::Dirichlet);
}

FormValue q_nsp2d(const TestFunction2D& u, double s, const Domain& rect, int per_axis) {
    return spectral_series2d(u, s, rect, per_axis, BasisKind::Neumann);
}

FormValue q_dr_fourier2d(const TestFunction2D& u, double s) {
    IntegralResult r = fourier::xi_weighted_energy2d(u, s);
    FormValue out;
    out.value = r.value / (4.0 * PI * PI);
    out.error = r.error_estimate / (4.0 * PI * PI);
    out.method = Method::Fourier;
    out.s = s;
    return out;
}

namespace {

IntegralResult interior_gagliardo2d(const TestFunction2D& u, const Domain& rect, double s) {
    // iint (u(x)-u(y))^2 |x-y|^{-2-2s} = 2 int_0^pi int_0^inf F(r,w) r^{-1-2s} dr dw
    const Interval sx = rect.side(0);
    const Interval sy = rect.side(1);
    const double *gn, *gw;
    quadrature::gauss_rule(16, &gn, &gw);

    auto correlation = [&](double r, double th) {
        const double zx = r * std::cos(th);
        const double zy = r * std::sin(th);
        const double lox = std::max(sx.a, sx.a - zx), hix = std::min(sx.b, sx.b - zx);
        const double loy = std::max(sy.a, sy.a - zy), hiy = std::min(sy.b, sy.b - zy);
        if (!(hix > lox) || !(hiy > loy)) return 0.0;
        // tensor panels; integrand is C^{p-1}-smooth, modest panel count
        const int nx = 12, ny = 12;
        const double hx = (hix - lox) / nx, hy = (hiy - loy) / ny;
        double acc = 0.0;
        for (int i = 0; i < nx; ++i) {
            const double cx = lox + (i + 0.5) * hx;
            for (int a = 0; a < 8; ++a) {
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    const double x = cx + sgn * 0.5 * hx * gn[a];
                    const double wx = 0.5 * hx * gw[a];
                    double rowacc = 0.0;
                    for (int j = 0; j < ny; ++j) {
                        const double cy = loy + (j + 0.5) * hy;
                        for (int b = 0; b < 8; ++b) {
                            for (int sg2 = -1; sg2 <= 1; sg2 += 2) {
                                const double y = cy + sg2 * 0.5 * hy * gn[b];
                                const double wy = 0.5 * hy * gw[b];
                                const double d = u(x + zx, y + zy) - u(x, y);
                                rowacc += wy * d * d;
                            }
                        }
                    }
                    acc += wx * rowacc;
                }
            }
        }
        return acc;
    };

    const double rmax = rect.diameter();
    IntegralResult out;
    // directional curvature int |d_w u|^2 = cos^2 D1 M2 + sin^2 M1 D2 for
    // products vanishing on the boundary (the cross term integrates to zero)
    quadrature::QuadratureSpec dspec;
    dspec.rel_tol = 1e-12;
    auto seminorm = [&](const TestFunction& f, const Interval& iv) {
        return quadrature::integrate_adaptive(
                   [&](double x) {
                       const double d = f.derivative(x, 1);
                       return d * d;
                   },
                   iv.a, iv.b, f.kinks(), dspec)
            .value;
    };
    const double D1 = seminorm(u.factor(0), sx);
    const double D2 = seminorm(u.factor(1), sy);
    const double M1 = u.factor(0).l2_norm_sq();
    const double M2 = u.factor(1).l2_norm_sq();

    // theta panels (integrand smooth in theta away from corner directions)
    const int nth = 24;
    for (int t = 0; t < nth; ++t) {
        const double tl = PI * t / nth, tu = PI * (t + 1) / nth;
        for (int a = 0; a < 8; ++a) {
            for (int sgn = -1; sgn <= 1; sgn += 2) {
                const double th = 0.5 * (tl + tu) + sgn * 0.5 * (tu - tl) * gn[a];
                const double wth = 0.5 * (tu - tl) * gw[a];
                // radial: graded toward 0 with exact curvature sliver
                auto g = [&](double r) { return correlation(r, th); };
                const double cw = std::cos(th), swt = std::sin(th);
                const double du2 = cw * cw * D1 * M2 + swt * swt * M1 * D2;
                quadrature::QuadratureSpec spec;
                spec.rel_tol = 1e-8;
                spec.abs_tol = 1e-12;
                spec.max_subdivisions = 600;
                IntegralResult rin = quadrature::integrate_singular_symmetric(
                    g, std::min(0.25, rmax), s, spec, &du2);
                if (rmax > 0.25) {
                    auto h = [&](double r) {
                        return correlation(r, th) * std::pow(r, -1.0 - 2.0 * s);
                    };
                    rin += quadrature::integrate_panels(h, 0.25, rmax, 0.1, 16);
                }
                out.value += 2.0 * wth * rin.value;
                out.error_estimate += 2.0 * wth * rin.error_estimate;
                out.evaluations += rin.evaluations;
            }
        }
    }
    return out;
}

// rho_s(x) = (1/2s) int_0^{2pi} R(w,x)^{-2s} dw, R = distance to the boundary
// of the rectangle along direction w from the interior point x.
double rect_exterior_density(const Domain& rect, double s, double x, double y) {
    const Interval sx = rect.side(0);
    const Interval sy = rect.side(1);
    auto ray = [&](double w) {
        const double cw = std::cos(w), sw = std::sin(w);
        double r = std::numeric_limits<double>::infinity();
        if (cw > 1e-15) r = std::min(r, (sx.b - x) / cw);
        if (cw < -1e-15) r = std::min(r, (sx.a - x) / cw);
        if (sw > 1e-15) r = std::min(r, (sy.b - y) / sw);
        if (sw < -1e-15) r = std::min(r, (sy.a - y) / sw);
        return std::pow(r, -2.0 * s);
    };
    // kinks at the four corner directions
    std::vector<double> brk;
    for (double cx : {sx.a, sx.b})
        for (double cy : {sy.a, sy.b}) {
            double a = std::atan2(cy - y, cx - x);
            if (a < 0.0) a += 2.0 * PI;
            brk.push_back(a);
        }
    quadrature::QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    spec.abs_tol = 1e-14;
    return quadrature::integrate_adaptive(ray, 0.0, 2.0 * PI, brk, spec).value / (2.0 * s);
}

IntegralResult exterior_integral2d(const TestFunction2D& u, const Domain& rect, double s) {
    // int_Omega u^2 rho_s: edge-singular weight, graded tensor mesh
    const Interval sx = rect.side(0);
    const Interval sy = rect.side(1);
    auto edges_for = [](const Interval& iv) {
        std::vector<double> e;
        const double mid = 0.5 * (iv.a + iv.b);
        double w = 0.5 * iv.length();
        const int lev = 20;
        for (int l = 0; l <= lev; ++l) {
            e.push_back(iv.a + w);
            e.push_back(iv.b - w);
            w *= 0.5;
        }
        e.push_back(iv.a + w);
        e.push_back(iv.b - w);
        e.push_back(mid);
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        return e;
    };
    const auto ex = edges_for(sx);
    const auto ey = edges_for(sy);
    const double *gn, *gw;
    quadrature::gauss_rule(8, &gn, &gw);
    IntegralResult out;
    for (size_t i = 0; i + 1 < ex.size(); ++i) {
        for (size_t j = 0; j + 1 < ey.size(); ++j) {
            const double cx = 0.5 * (ex[i] + ex[i + 1]), hx = 0.5 * (ex[i + 1] - ex[i]);
            const double cy = 0.5 * (ey[j] + ey[j + 1]), hy = 0.5 * (ey[j + 1] - ey[j]);
            double acc = 0.0;
            for (int a = 0; a < 4; ++a)
                for (int sa = -1; sa <= 1; sa += 2)
                    for (int b = 0; b < 4; ++b)
                        for (int sb = -1; sb <= 1; sb += 2) {
                            const double x = cx + sa * hx * gn[a];
                            const double y = cy + sb * hy * gn[b];
                            const double uv = u(x, y);
                            acc += gw[a] * gw[b] * uv * uv *
                                   rect_exterior_density(rect, s, x, y);
                        }
            out.value += hx * hy * acc;
            out.evaluations += 64;
        }
    }
    out.error_estimate = 1e-5 * out.value;  // graded-mesh truncation at 2^-21 edges
    return out;
}

}  // namespace

FormValue q_nr2d(const TestFunction2D& u, const Domain& rect, double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("q_nr2d: s in (0,1) required");
    const double c = specfun::gagliardo_constant(2, s);
    IntegralResult inner = interior_gagliardo2d(u, rect, s);
    FormValue out;
    out.value = c * inner.value;
    out.error = c * inner.error_estimate;
    out.method = Method::Gagliardo;
    out.s = s;
    return out;
}

FormValue q_dr_gagliardo2d(const TestFunction2D& u, const Domain& rect, double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("q_dr_gagliardo2d: s in (0,1) required");
    const double c = specfun::gagliardo_constant(2, s);
    IntegralResult inner = interior_gagliardo2d(u, rect, s);
    IntegralResult outer = exterior_integral2d(u, rect, s);
    FormValue out;
    out.value = c * (inner.value + 2.0 * outer.value);
    out.error = c * (inner.error_estimate + 2.0 * outer.error_estimate);
    out.method = Method::Gagliardo;
    out.s = s;
    return out;
}

}  // namespace fraclap::forms
