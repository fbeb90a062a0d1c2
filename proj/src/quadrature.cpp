#include "fraclap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace fraclap::quadrature {

namespace {

// Kronrod-15 abscissae on [-1,1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// Gauss-Legendre rules.
constexpr double kG8x[4] = {0.1834346424956498, 0.5255324099163290,
                            0.7966664774136267, 0.9602898564975363};
constexpr double kG8w[4] = {0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};
constexpr double kG16x[8] = {0.0950125098376374, 0.2816035507792589,
                             0.4580167776572274, 0.6178762444026438,
                             0.7554044083550030, 0.8656312023878318,
                             0.9445750230732326, 0.9894009349916499};
constexpr double kG16w[8] = {0.1894506104550685, 0.1826034150449236,
                             0.1691565193950025, 0.1495959888165767,
                             0.1246289712555339, 0.0951585116824928,
                             0.0622535239386479, 0.0271524594117541};
constexpr double kG32x[16] = {
    0.0483076656877383, 0.1444719615827965, 0.2392873622521371,
    0.3318686022821277, 0.4213512761306353, 0.5068999089322294,
    0.5877157572407623, 0.6630442669302152, 0.7321821187402897,
    0.7944837959679424, 0.8493676137325700, 0.8963211557660521,
    0.9349060759377397, 0.9647622555875064, 0.9856115115452684,
    0.9972638618494816};
constexpr double kG32w[16] = {
    0.0965400885147278, 0.0956387200792749, 0.0938443990808046,
    0.0911738786957639, 0.0876520930044038, 0.0833119242269467,
    0.0781938957870703, 0.0723457941088485, 0.0658222227763618,
    0.0586840934785355, 0.0509980592623762, 0.0428358980222267,
    0.0342738629130214, 0.0253920653092621, 0.0162743947309057,
    0.0068108163917569};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace

void gauss_rule(int n, const double** nodes, const double** weights) {
    switch (n) {
        case 8: *nodes = kG8x; *weights = kG8w; return;
        case 16: *nodes = kG16x; *weights = kG16w; return;
        case 32: *nodes = kG32x; *weights = kG32w; return;
        default: throw DomainError("gauss_rule: order must be 8, 16 or 32");
    }
}

IntegralResult gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kron *= h;
    gauss *= h;
    const double diff = std::abs(kron - gauss);
    // QUADPACK-style sharpened estimate
    double resabs = 0.0;
    for (int i = 0; i < 7; ++i) resabs += kWgk[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    resabs = (resabs + kWgk[7] * std::abs(fv[7])) * std::abs(h);
    double err = diff;
    if (resabs > 0.0 && diff > 0.0)
        err = resabs * std::min(1.0, std::pow(200.0 * diff / resabs, 1.5));
    return {kron, err, 15};
}

IntegralResult integrate_adaptive(const Fn& f, double a, double b,
                                  const QuadratureSpec& spec) {
    return integrate_adaptive(f, a, b, {}, spec);
}

IntegralResult integrate_adaptive(const Fn& f, double a, double b,
                                  const std::vector<double>& breakpoints,
                                  const QuadratureSpec& spec) {
    spec.validate();
    if (!(b > a)) return {0.0, 0.0, 0};

    std::vector<double> edges{a, b};
    for (double t : breakpoints)
        if (t > a && t < b) edges.push_back(t);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel> heap;
    double value = 0.0, error = 0.0;
    long evals = 0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        IntegralResult r = gk15(f, edges[i], edges[i + 1]);
        heap.push({edges[i], edges[i + 1], r.value, r.error_estimate});
        value += r.value;
        error += r.error_estimate;
        evals += r.evaluations;
    }

    int splits = 0;
    while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
        if (splits >= spec.max_subdivisions || heap.empty())
            throw ToleranceError("integrate_adaptive: tolerance not reached", value, error);
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            throw ToleranceError("integrate_adaptive: panel below machine width", value, error);
        IntegralResult rl = gk15(f, worst.a, mid);
        IntegralResult rr = gk15(f, mid, worst.b);
        value += rl.value + rr.value - worst.value;
        error += rl.error_estimate + rr.error_estimate - worst.error;
        evals += 30;
        heap.push({worst.a, mid, rl.value, rl.error_estimate});
        heap.push({mid, worst.b, rr.value, rr.error_estimate});
        ++splits;
    }
    return {value, error, evals};
}

IntegralResult integrate_singular_symmetric(const Fn& g, double delta, double s,
                                            const QuadratureSpec& spec,
                                            const double* half_g2) {
    spec.validate();
    if (!(delta > 0.0)) throw DomainError("integrate_singular_symmetric: delta must be > 0");
    if (!(s > 0.0 && s < 1.0))
        throw DomainError("integrate_singular_symmetric: s must be in (0,1)");

    // certify g = O(z^2): g(z)/z^2 bounded at three shrinking samples
    const double probe[3] = {delta * 1e-2, delta * 1e-3, delta * 1e-4};
    double ratio0 = std::abs(g(probe[0])) / (probe[0] * probe[0]);
    for (int i = 1; i < 3; ++i) {
        const double r = std::abs(g(probe[i])) / (probe[i] * probe[i]);
        if (r > 64.0 * (ratio0 + 1.0) && r > 1e4)
            throw DomainError("integrate_singular_symmetric: g(z)/z^2 appears unbounded");
    }

    const double z0 = std::min(1e-5, delta * 0.5);
    IntegralResult out;
    // Taylor sliver on [0, z0]
    const double curv = half_g2 ? *half_g2 : g(z0) / (z0 * z0);
    const double sliver = curv * std::pow(z0, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
    out.value += sliver;
    out.error_estimate += std::abs(sliver) * (half_g2 ? 1e-10 : 1e-4);

    auto integrand = [&](double z) { return g(z) * std::pow(z, -1.0 - 2.0 * s); };
    const int levels = std::max(1, static_cast<int>(std::ceil(std::log2(delta / z0))));
    double hi = delta;
    for (int l = 0; l < levels; ++l) {
        double lo = std::max(z0, hi * 0.5);
        out += integrate_adaptive(integrand, lo, hi, spec);
        hi = lo;
        if (lo <= z0) break;
    }
    return out;
}

IntegralResult integrate_semi_infinite(const Fn& f, DecayHint decay,
                                       const QuadratureSpec& spec) {
    spec.validate();
    double cutoff;
    double tail_bound;
    if (decay.kind == DecayHint::Exponential) {
        if (!(decay.rate > 0.0)) throw DomainError("integrate_semi_infinite: bad exponential rate");
        cutoff = 50.0 / decay.rate;
        tail_bound = std::abs(f(cutoff)) / decay.rate;
    } else {
        if (!(decay.rate > 1.0))
            throw DomainError("integrate_semi_infinite: algebraic decay needs rate > 1");
        // pick cutoff so C x^{-p} tail is below tolerance; C probed with margin
        const double c10 = std::abs(f(10.0)) * std::pow(10.0, decay.rate);
        double c = std::max(c10, 1e-30);
        cutoff = std::pow(c / (spec.abs_tol * (decay.rate - 1.0)), 1.0 / (decay.rate - 1.0));
        cutoff = std::clamp(cutoff, 50.0, 2e6);
        c = 2.0 * std::max(c, std::abs(f(0.5 * cutoff)) * std::pow(0.5 * cutoff, decay.rate));
        tail_bound = c * std::pow(cutoff, 1.0 - decay.rate) / (decay.rate - 1.0);
    }
    // verify the hint on tail samples
    for (double x : {cutoff * 0.5, cutoff * 0.75, cutoff}) {
        const double bound = (decay.kind == DecayHint::Exponential)
                                 ? 1e3 * std::exp(-decay.rate * x * 0.9)
                                 : 1e3 * std::max(std::abs(f(10.0)), spec.abs_tol) *
                                       std::pow(x / 10.0, -decay.rate * 0.9);
        if (std::abs(f(x)) > bound + 1e3 * spec.abs_tol)
            throw DomainError("integrate_semi_infinite: samples contradict declared decay");
    }
    // split [0, cutoff] logarithmically so adaptive panels start well-scaled
    std::vector<double> brk;
    for (double t = 1.0; t < cutoff; t *= 8.0) brk.push_back(t);
    IntegralResult r = integrate_adaptive(f, 0.0, cutoff, brk, spec);
    r.error_estimate += tail_bound;
    return r;
}

IntegralResult integrate_panels(const Fn& f, double a, double b, double max_len,
                                int gauss_order) {
    const double *x, *w;
    gauss_rule(gauss_order, &x, &w);
    const int half = gauss_order / 2;
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / max_len)));
    const double h = (b - a) / n;
    IntegralResult out;
    for (int i = 0; i < n; ++i) {
        const double c = a + (i + 0.5) * h;
        double s = 0.0;
        for (int k = 0; k < half; ++k)
            s += w[k] * (f(c - 0.5 * h * x[k]) + f(c + 0.5 * h * x[k]));
        out.value += 0.5 * h * s;
        out.evaluations += gauss_order;
    }
    out.error_estimate = 1e-15 * std::abs(out.value) * n;
    return out;
}

}  // namespace fraclap::quadrature
