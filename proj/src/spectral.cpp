#include "fraclap/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "fraclap/quadrature.hpp"

namespace fraclap {

SpectralBasis::SpectralBasis(Domain domain, BasisKind kind, std::vector<Mode> modes,
                             int requested)
    : domain_(std::move(domain)), kind_(kind), modes_(std::move(modes)),
      requested_(requested) {}

double SpectralBasis::eval(size_t idx, double x) const {
    const Mode& m = modes_[idx];
    const Interval& c = domain_.components()[m.component];
    if (x < c.a || x > c.b) return 0.0;
    const double L = c.length();
    if (m.kind == BasisKind::Dirichlet)
        return std::sqrt(2.0 / L) * std::sin(m.j * PI * (x - c.a) / L);
    if (m.j == 0) return 1.0 / std::sqrt(L);
    return std::sqrt(2.0 / L) * std::cos(m.j * PI * (x - c.a) / L);
}

double SpectralBasis::eval_deriv(size_t idx, double x) const {
    const Mode& m = modes_[idx];
    const Interval& c = domain_.components()[m.component];
    if (x < c.a || x > c.b) return 0.0;
    const double L = c.length();
    const double w = m.j * PI / L;
    if (m.kind == BasisKind::Dirichlet)
        return std::sqrt(2.0 / L) * w * std::cos(m.j * PI * (x - c.a) / L);
    if (m.j == 0) return 0.0;
    return -std::sqrt(2.0 / L) * w * std::sin(m.j * PI * (x - c.a) / L);
}

double SpectralBasis::eval2d(size_t idx, double x1, double x2) const {
    const Mode& m = modes_[idx];
    const Interval& s1 = domain_.side(0);
    const Interval& s2 = domain_.side(1);
    auto mode1d = [this](const Interval& c, int j, double x) {
        const double L = c.length();
        if (kind_ == BasisKind::Dirichlet)
            return std::sqrt(2.0 / L) * std::sin(j * PI * (x - c.a) / L);
        if (j == 0) return 1.0 / std::sqrt(L);
        return std::sqrt(2.0 / L) * std::cos(j * PI * (x - c.a) / L);
    };
    if (!domain_.contains2d(x1, x2)) return 0.0;
    return mode1d(s1, m.jx, x1) * mode1d(s2, m.jy, x2);
}

SpectralBasis build_basis(const Domain& domain, BasisKind kind, int n) {
    if (n < 1) throw DomainError("build_basis: N >= 1 required");
    std::vector<Mode> modes;

    if (domain.dim() == 2) {
        // tensor modes, eigenvalue = mu_{jx} + mu_{jy}
        const double L1 = domain.side(0).length();
        const double L2 = domain.side(1).length();
        const int base = (kind == BasisKind::Dirichlet) ? 1 : 0;
        const int per_axis = std::max(2, static_cast<int>(std::ceil(std::sqrt(double(n)))));
        for (int jx = base; jx < base + per_axis; ++jx)
            for (int jy = base; jy < base + per_axis; ++jy) {
                const double ev = std::pow(jx * PI / L1, 2) + std::pow(jy * PI / L2, 2);
                Mode m{ev, kind, -1, 0, jx, jy};
                modes.push_back(m);
            }
        std::stable_sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
            if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
            if (a.jx != b.jx) return a.jx < b.jx;
            return a.jy < b.jy;
        });
        return SpectralBasis(domain, kind, std::move(modes), n);
    }

    const auto& comps = domain.components();
    const double total_len = domain.measure();
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        const double L = comps[ci].length();
        // eigenvalue density is proportional to length; pad for safe merging
        const int per = static_cast<int>(std::ceil(n * L / total_len)) + 2;
        const int j0 = (kind == BasisKind::Dirichlet) ? 1 : 0;
        for (int j = j0; j <= per; ++j) {
            const double ev = std::pow(j * PI / L, 2);
            modes.push_back({ev, kind, static_cast<int>(ci), j});
        }
    }
    std::stable_sort(modes.begin(), modes.end(), [](const Mode& a, const Mode& b) {
        if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
        if (a.component != b.component) return a.component < b.component;
        return a.j < b.j;
    });
    const size_t keep = (kind == BasisKind::Dirichlet)
                            ? static_cast<size_t>(n)
                            : static_cast<size_t>(n) + comps.size();
    if (modes.size() > keep) modes.resize(keep);
    return SpectralBasis(domain, kind, std::move(modes), n);
}

CoefficientSet coefficients(const TestFunction& u, const SpectralBasis& basis) {
    if (basis.domain().dim() != 1)
        throw DomainError("coefficients: use the tensor routines for 2D");
    CoefficientSet out;
    out.values.resize(basis.size(), 0.0);
    const auto& comps = basis.domain().components();

    quadrature::QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    spec.abs_tol = 1e-14;

    for (size_t i = 0; i < basis.size(); ++i) {
        const Mode& m = basis.modes()[i];
        const Interval& c = comps[m.component];
        double acc = 0.0;
        for (const auto& [w, p] : u.parts()) {
            if (p.b <= c.a || p.a >= c.b) continue;  // disjoint: exact zero
            if (p.a == c.a && p.b == c.b && p.kind != Piece::SmoothBump) {
                acc += w * p.mode_coefficient(basis.kind(), m.j);
            } else {
                // quadrature fallback (smooth bump or partial support)
                auto f = [&](double x) { return w * p.eval(x) * basis.eval(i, x); };
                const double per_panel = c.length() / std::max(1, m.j);
                acc += quadrature::integrate_panels(f, std::max(p.a, c.a),
                                                    std::min(p.b, c.b),
                                                    0.25 * per_panel, 16)
                           .value;
            }
        }
        out.values[i] = acc;
    }

    // decay fit |c_j| <= C j^{-decay} from the last computed coefficients
    out.decay = u.coef_decay(basis.kind());
    double cfit = 0.0;
    const size_t look = std::min<size_t>(basis.size(), 16);
    for (size_t i = basis.size() - look; i < basis.size(); ++i) {
        const Mode& m = basis.modes()[i];
        if (m.j == 0) continue;
        cfit = std::max(cfit, std::abs(out.values[i]) * std::pow(double(m.j), out.decay));
    }
    out.fit_amplitude = cfit;
    // per-component minimum cutoff index
    int jmin = 1 << 28;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
        int top = 0;
        for (const Mode& m : basis.modes())
            if (m.component == static_cast<int>(ci)) top = std::max(top, m.j);
        jmin = std::min(jmin, top);
    }
    const double theta = 2.0 * out.decay;
    out.tail_sq_estimate = comps.size() * cfit * cfit *
                           (std::pow(double(jmin), 1.0 - theta) / (theta - 1.0) +
                            0.5 * std::pow(double(jmin), -theta));
    return out;
}

bool check_mean_zero(const TestFunction& u, const Domain& domain, double tol) {
    const double scale = std::sqrt(u.l2_norm_sq() * domain.measure());
    return std::abs(u.mean()) <= tol * std::max(scale, 1e-300);
}

TestFunction laplacian_power(const TestFunction& u, int k) {
    return u.laplacian_power(k);
}

}  // namespace fraclap
