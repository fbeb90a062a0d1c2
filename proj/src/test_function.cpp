#include "fraclap/test_function.hpp"

#include <algorithm>
#include <cmath>

namespace fraclap {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

long double binomial(int n, int k) {
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

// ---------------------------------------------------------------- Polynomial

bool Polynomial::is_zero() const {
    for (double c : c_)
        if (c != 0.0) return false;
    return true;
}

Polynomial Polynomial::derivative(int m) const {
    Polynomial p = *this;
    for (int r = 0; r < m; ++r) {
        if (p.c_.size() <= 1) return Polynomial({0.0});
        std::vector<double> d(p.c_.size() - 1);
        for (size_t i = 1; i < p.c_.size(); ++i) d[i - 1] = p.c_[i] * static_cast<double>(i);
        p.c_ = std::move(d);
    }
    return p;
}

Polynomial Polynomial::antiderivative() const {
    std::vector<double> d(c_.size() + 1, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) d[i + 1] = c_[i] / static_cast<double>(i + 1);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<double> d(c_.size() + o.c_.size() - 1, 0.0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t k = 0; k < o.c_.size(); ++k) d[i + k] += c_[i] * o.c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<double> d(std::max(c_.size(), o.c_.size()), 0.0);
    for (size_t i = 0; i < c_.size(); ++i) d[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) d[i] += o.c_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::scaled(double w) const {
    std::vector<double> d = c_;
    for (double& x : d) x *= w;
    return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(double shift) const {
    const int n = degree();
    std::vector<double> d(n + 1, 0.0);
    for (int m = 0; m <= n; ++m) {
        if (c_[m] == 0.0) continue;
        long double pw = 1.0L;
        for (int k = m; k >= 0; --k) {
            d[k] += static_cast<double>(c_[m] * binomial(m, k) * pw);
            pw *= shift;
        }
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(int p) const {
    Polynomial r({1.0});
    for (int i = 0; i < p; ++i) r = r * (*this);
    return r;
}

double Polynomial::integral(double a, double b) const {
    Polynomial f = antiderivative();
    return f(b) - f(a);
}

// ------------------------------------------------------- Fourier closed forms

std::complex<double> poly_interval_fourier(const Polynomial& p, double a, double b,
                                           double xi) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    // re-expand around the midpoint: q(tau) = p(tau + h), tau in [-h, h]
    const Polynomial q = p.shifted(h);
    const int deg = q.degree();
    std::vector<std::complex<double>> I(deg + 1);
    const double z = xi * h;
    if (std::abs(z) <= 8.0) {
        // Taylor in xi: I(m) = sum_k (-i xi)^k / k! * mom_{m+k}, mom odd = 0
        for (int m = 0; m <= deg; ++m) {
            std::complex<double> acc = 0.0, term = 1.0;
            for (int k = 0; k < 64; ++k) {
                const int mk = m + k;
                if (mk % 2 == 0) acc += term * (2.0 * std::pow(h, mk + 1) / (mk + 1));
                term *= (-kI * xi) / static_cast<double>(k + 1);
                if (k > 6 && std::abs(term) * 2.0 * std::pow(h, m + k + 2) <
                                 1e-20 * (std::abs(acc) + 1e-300))
                    break;
            }
            I[m] = acc;
        }
    } else {
        const std::complex<double> ixi = kI * xi;
        const std::complex<double> ep = std::exp(-kI * z);   // e^{-i xi h}
        const std::complex<double> em = std::exp(kI * z);    // e^{+i xi h}
        I[0] = 2.0 * std::sin(z) / xi;
        double hp = 1.0;  // h^m
        for (int m = 1; m <= deg; ++m) {
            hp *= h;
            const double hm_minus = (m % 2 == 0) ? hp : -hp;  // (-h)^m
            I[m] = (-hp * ep + hm_minus * em) / ixi + (static_cast<double>(m) / ixi) * I[m - 1];
        }
    }
    std::complex<double> val = 0.0;
    for (int m = 0; m <= deg; ++m) val += q.coefs()[m] * I[m];
    return std::exp(-kI * xi * c) * val;
}

std::complex<double> sine_interval_fourier(int j, double a, double b, double xi) {
    const double L = b - a;
    const double nu = j * PI / L;
    auto E = [L](double th) {  // int_0^L e^{i th t} dt
        const double z = 0.5 * th * L;
        const double sc = (std::abs(z) > 1e-8) ? std::sin(z) / z : 1.0 - z * z / 6.0;
        return L * std::exp(kI * z) * sc;
    };
    return std::exp(-kI * xi * a) * (E(nu - xi) - E(-nu - xi)) / (2.0 * kI);
}

// --------------------------------------------------------------------- Piece

namespace {

// smooth bump profile on t in (-1,1): exp(-1/(1-t^2)), else 0
double bump0(double t) {
    const double w = 1.0 - t * t;
    return w > 0.0 ? std::exp(-1.0 / w) : 0.0;
}
double bump1(double t) {
    const double w = 1.0 - t * t;
    return w > 0.0 ? bump0(t) * (-2.0 * t / (w * w)) : 0.0;
}
double bump2(double t) {
    const double w = 1.0 - t * t;
    if (!(w > 0.0)) return 0.0;
    const double g = -2.0 * t / (w * w);
    const double gp = (-2.0 * w - 8.0 * t * t) / (w * w * w);
    return bump0(t) * (g * g + gp);
}

}  // namespace

double Piece::eval(double x) const {
    if (x <= a || x >= b) return 0.0;
    switch (kind) {
        case Sine: return std::sin(j * PI * (x - a) / length());
        case Poly: return poly(x - a);
        case SmoothBump: return bump0((2.0 * x - a - b) / length());
    }
    return 0.0;
}

double Piece::deriv(double x, int m) const {
    if (x < a || x > b) return 0.0;
    switch (kind) {
        case Sine: {
            const double w = j * PI / length();
            const double ph = w * (x - a) + 0.5 * PI * m;
            return std::pow(w, m) * std::sin(ph);
        }
        case Poly:
            return poly.derivative(m)(x - a);
        case SmoothBump: {
            const double t = (2.0 * x - a - b) / length();
            const double sc = std::pow(2.0 / length(), m);
            if (m == 0) return bump0(t);
            if (m == 1) return sc * bump1(t);
            if (m == 2) return sc * bump2(t);
            throw SmoothnessError("smooth bump: analytic derivatives only to order 2");
        }
    }
    return 0.0;
}

std::optional<std::complex<double>> Piece::fourier(double xi) const {
    switch (kind) {
        case Sine: return sine_interval_fourier(j, a, b, xi);
        case Poly: return poly_interval_fourier(poly, a, b, xi);
        case SmoothBump: return std::nullopt;
    }
    return std::nullopt;
}

double Piece::mean() const {
    switch (kind) {
        case Sine: return (1.0 - ((j % 2 == 0) ? 1.0 : -1.0)) * length() / (j * PI);
        case Poly: return poly.integral(0.0, length());
        case SmoothBump: {
            // int_{-1}^{1} e^{-1/(1-t^2)} dt * (L/2), fixed profile constant
            constexpr double kBumpMass = 0.443993816168079437820;
            return kBumpMass * 0.5 * length();
        }
    }
    return 0.0;
}

double Piece::mode_coefficient(BasisKind basis, int m) const {
    const double L = length();
    if (basis == BasisKind::Neumann && m == 0) return mean() / std::sqrt(L);
    const double norm = std::sqrt(2.0 / L);
    const double om = m * PI / L;
    switch (kind) {
        case Sine: {
            if (basis == BasisKind::Dirichlet)
                return (m == j) ? std::sqrt(0.5 * L) : 0.0;
            if (m == j) return 0.0;
            // int_0^L sin(j pi t/L) cos(m pi t/L) dt = (L/pi) j (1-(-1)^{j+m})/(j^2-m^2)
            const double par = ((j + m) % 2 == 0) ? 0.0 : 2.0;
            return norm * (L / PI) * j * par / (static_cast<double>(j) * j - static_cast<double>(m) * m);
        }
        case Poly: {
            // int_0^L P(t) trig(m pi t / L) dt from the complex closed form
            const std::complex<double> J = poly_interval_fourier(poly, 0.0, L, om);
            return basis == BasisKind::Dirichlet ? norm * (-J.imag()) : norm * J.real();
        }
        case SmoothBump:
            throw SmoothnessError("smooth bump: no closed-form coefficients (use quadrature)");
    }
    return 0.0;
}

double Piece::sobolev_limit() const {
    switch (kind) {
        case Sine: return 1.5;
        case Poly: {
            // vanishing order at the endpoints decides the zero-extension class
            int p = 0;
            while (p <= poly.degree()) {
                const Polynomial d = poly.derivative(p);
                if (d(0.0) != 0.0 || d(length()) != 0.0) break;
                ++p;
            }
            return p + 0.5;
        }
        case SmoothBump: return 1e30;
    }
    return 0.0;
}

int Piece::coef_decay(BasisKind basis) const {
    switch (kind) {
        case Sine: return 2;  // Neumann cross-coefficients ~ m^{-2}; Dirichlet exact
        case Poly: {
            const double L = length();
            if (basis == BasisKind::Dirichlet) {
                for (int m = 0; m <= poly.degree(); m += 2) {
                    const Polynomial d = poly.derivative(m);
                    if (d(0.0) != 0.0 || d(L) != 0.0) return m + 1;
                }
            } else {
                for (int m = 1; m <= poly.degree(); m += 2) {
                    const Polynomial d = poly.derivative(m);
                    if (d(0.0) != 0.0 || d(L) != 0.0) return m + 1;
                }
            }
            return poly.degree() + 3;
        }
        case SmoothBump: return 8;  // super-polynomial; conservative stand-in
    }
    return 2;
}

int Piece::fourier_decay() const {
    switch (kind) {
        case Sine: return 2;
        case Poly: {
            for (int m = 0; m <= poly.degree(); ++m) {
                const Polynomial d = poly.derivative(m);
                if (d(0.0) != 0.0 || d(length()) != 0.0) return m + 1;
            }
            return poly.degree() + 2;
        }
        case SmoothBump: return 8;
    }
    return 2;
}

int Piece::max_derivative_order() const {
    return kind == SmoothBump ? 2 : 1000;
}

// -------------------------------------------------------------- TestFunction

TestFunction::TestFunction(std::string id, std::vector<std::pair<double, Piece>> parts)
    : id_(std::move(id)), parts_(std::move(parts)) {
    classify();
}

void TestFunction::classify() {
    // conservative positivity flag: single nonnegative shapes with positive weights
    nonnegative_ = !parts_.empty();
    for (const auto& [w, p] : parts_) {
        const bool shape_nonneg =
            (p.kind == Piece::Poly && [&] {
                // poly bumps are nonneg by construction; test a sample grid
                for (int i = 1; i < 32; ++i)
                    if (p.poly(p.length() * i / 32.0) < 0.0) return false;
                return true;
            }()) ||
            (p.kind == Piece::Sine && p.j == 1) || p.kind == Piece::SmoothBump;
        if (!(w > 0.0) || !shape_nonneg) nonnegative_ = false;
    }
    // overlapping parts may cancel; only disjoint supports keep the flag
    if (nonnegative_ && parts_.size() > 1) {
        for (size_t i = 0; i + 1 < parts_.size(); ++i)
            for (size_t k = i + 1; k < parts_.size(); ++k) {
                const Piece& p = parts_[i].second;
                const Piece& q = parts_[k].second;
                if (std::max(p.a, q.a) < std::min(p.b, q.b)) nonnegative_ = false;
            }
    }
}

TestFunction TestFunction::sine_mode(int j, const Interval& support, double weight) {
    if (j < 1) throw DomainError("sine_mode: j >= 1 required");
    Piece p{Piece::Sine, support.a, support.b, j, Polynomial()};
    return TestFunction("sine" + std::to_string(j), {{weight, p}});
}

TestFunction TestFunction::poly_bump(int p, const Interval& support, double weight) {
    if (p < 1) throw DomainError("poly_bump: p >= 1 required");
    const double L = support.length();
    const double h = 0.5 * L;
    // ((t)(L-t)/h^2)^p as a polynomial in t
    Polynomial base({0.0, L / (h * h), -1.0 / (h * h)});
    Piece piece{Piece::Poly, support.a, support.b, 0, base.pow(p)};
    return TestFunction("bump" + std::to_string(p), {{weight, piece}});
}

TestFunction TestFunction::smooth_bump(const Interval& support, double weight) {
    Piece p{Piece::SmoothBump, support.a, support.b, 0, Polynomial()};
    return TestFunction("smoothbump", {{weight, p}});
}

TestFunction TestFunction::combination(
    const std::vector<std::pair<double, TestFunction>>& terms, const std::string& id) {
    std::vector<std::pair<double, Piece>> parts;
    std::string name = id;
    for (const auto& [w, f] : terms) {
        for (const auto& [wi, p] : f.parts_) parts.emplace_back(w * wi, p);
        if (id.empty()) name += (name.empty() ? "" : "+") + f.id_;
    }
    return TestFunction(name.empty() ? "combo" : name, std::move(parts));
}

TestFunction TestFunction::mean_zero_bumps(int p, int q, const Interval& support) {
    TestFunction fp = poly_bump(p, support);
    TestFunction fq = poly_bump(q, support);
    const double mp = fp.mean();
    const double mq = fq.mean();
    TestFunction r = combination({{1.0 / mp, fp}, {-1.0 / mq, fq}},
                                 "mz_bump" + std::to_string(p) + std::to_string(q));
    return r;
}

double TestFunction::operator()(double x) const {
    double v = 0.0;
    for (const auto& [w, p] : parts_) v += w * p.eval(x);
    return v;
}

double TestFunction::derivative(double x, int m) const {
    double v = 0.0;
    for (const auto& [w, p] : parts_) v += w * p.deriv(x, m);
    return v;
}

std::complex<double> TestFunction::fourier(double xi) const {
    std::complex<double> v = 0.0;
    for (const auto& [w, p] : parts_) {
        auto f = p.fourier(xi);
        if (!f) throw SmoothnessError("fourier: piece without closed form");
        v += w * *f;
    }
    return v / std::sqrt(2.0 * PI);
}

bool TestFunction::has_closed_fourier() const {
    for (const auto& [w, p] : parts_)
        if (p.kind == Piece::SmoothBump) return false;
    return true;
}

double TestFunction::mean() const {
    double v = 0.0;
    for (const auto& [w, p] : parts_) v += w * p.mean();
    return v;
}

double TestFunction::l2_norm_sq() const {
    // pairwise products of pieces over overlapping supports
    double v = 0.0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        for (size_t k = 0; k < parts_.size(); ++k) {
            const auto& [wi, p] = parts_[i];
            const auto& [wk, q] = parts_[k];
            const double lo = std::max(p.a, q.a), hi = std::min(p.b, q.b);
            if (lo >= hi) continue;
            if (p.kind == Piece::Poly && q.kind == Piece::Poly && p.a == q.a && p.b == q.b) {
                v += wi * wk * (p.poly * q.poly).integral(0.0, p.length());
            } else if (p.kind == Piece::Sine && q.kind == Piece::Sine && p.a == q.a &&
                       p.b == q.b) {
                v += (p.j == q.j) ? wi * wk * 0.5 * p.length() : 0.0;
            } else if (p.a == q.a && p.b == q.b &&
                       (p.kind != Piece::SmoothBump && q.kind != Piece::SmoothBump)) {
                // sine x poly cross term via the Dirichlet coefficient closed form
                const Piece& sp = (p.kind == Piece::Sine) ? p : q;
                const Piece& pp = (p.kind == Piece::Sine) ? q : p;
                const double c = pp.mode_coefficient(BasisKind::Dirichlet, sp.j);
                v += wi * wk * c * std::sqrt(0.5 * p.length());
            } else {
                // numeric fallback (smooth bump)
                const int n = 4096;
                double acc = 0.0;
                const double h = (hi - lo) / n;
                for (int t = 0; t < n; ++t) {
                    const double x = lo + (t + 0.5) * h;
                    acc += p.eval(x) * q.eval(x);
                }
                v += wi * wk * acc * h;
            }
        }
    }
    return v;
}

bool TestFunction::mean_zero(double tol) const {
    const double scale = std::sqrt(l2_norm_sq());
    double len = 0.0;
    for (const auto& [w, p] : parts_) len = std::max(len, p.length());
    return std::abs(mean()) <= tol * std::max(scale * std::sqrt(len), 1e-300);
}

double TestFunction::sobolev_limit() const {
    double s = 1e30;
    for (const auto& [w, p] : parts_) s = std::min(s, p.sobolev_limit());
    return s;
}

int TestFunction::coef_decay(BasisKind basis) const {
    int d = 1000;
    for (const auto& [w, p] : parts_) d = std::min(d, p.coef_decay(basis));
    return d;
}

int TestFunction::fourier_decay() const {
    int d = 1000;
    for (const auto& [w, p] : parts_) d = std::min(d, p.fourier_decay());
    return d;
}

int TestFunction::max_laplacian_power() const {
    int m = 1000;
    for (const auto& [w, p] : parts_) m = std::min(m, p.max_derivative_order() / 2);
    return m;
}

TestFunction TestFunction::laplacian_power(int k) const {
    if (k < 0) throw DomainError("laplacian_power: k >= 0 required");
    if (k == 0) return *this;
    if (k > max_laplacian_power())
        throw SmoothnessError("laplacian_power: insufficient analytic derivatives");
    std::vector<std::pair<double, Piece>> parts;
    for (const auto& [w, p] : parts_) {
        if (p.kind == Piece::Sine) {
            const double lam = std::pow(p.j * PI / p.length(), 2.0 * k);
            parts.emplace_back(w * lam, p);
        } else if (p.kind == Piece::Poly) {
            Piece q = p;
            q.poly = p.poly.derivative(2 * k).scaled((k % 2 == 0) ? 1.0 : -1.0);
            parts.emplace_back(w, q);
        } else {
            throw SmoothnessError("laplacian_power: smooth bump unsupported");
        }
    }
    TestFunction r("lap" + std::to_string(k) + "_" + id_, std::move(parts));
    return r;
}

std::vector<double> TestFunction::kinks() const {
    std::vector<double> k;
    for (const auto& [w, p] : parts_) {
        k.push_back(p.a);
        k.push_back(p.b);
    }
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
    return k;
}

std::vector<std::pair<double, std::vector<double>>> TestFunction::endpoint_data(
    int max_order) const {
    std::vector<std::pair<double, std::vector<double>>> out;
    for (double e : kinks()) {
        std::vector<double> d(max_order + 1, 0.0);
        for (const auto& [w, p] : parts_) {
            for (int m = 0; m <= max_order; ++m) {
                if (e == p.a)
                    d[m] += w * p.deriv(p.a, m);
                else if (e == p.b)
                    d[m] -= w * p.deriv(p.b, m);  // jump from inside to outside
            }
        }
        out.emplace_back(e, std::move(d));
    }
    return out;
}

// ------------------------------------------------------------ TestFunction2D

TestFunction2D::TestFunction2D(TestFunction f1, TestFunction f2)
    : f1_(std::move(f1)), f2_(std::move(f2)) {
    id_ = f1_.id() + "x" + f2_.id();
}

}  // namespace fraclap
