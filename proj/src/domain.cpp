#include "fraclap/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fraclap {

Domain Domain::interval(double a, double b) {
    return intervals({{a, b}});
}

Domain Domain::intervals(std::vector<Interval> comps) {
    if (comps.empty()) throw DomainError("Domain: no components");
    std::sort(comps.begin(), comps.end(),
              [](const Interval& p, const Interval& q) { return p.a < q.a; });
    for (size_t i = 0; i < comps.size(); ++i) {
        if (!(comps[i].a < comps[i].b))
            throw DomainError("Domain: interval with a >= b");
        if (i > 0 && !(comps[i - 1].b < comps[i].a))
            throw DomainError("Domain: intervals must be pairwise disjoint");
    }
    Domain d;
    d.dim_ = 1;
    d.comps_ = std::move(comps);
    return d;
}

Domain Domain::rectangle(double a1, double b1, double a2, double b2) {
    if (!(a1 < b1 && a2 < b2)) throw DomainError("Domain: degenerate rectangle");
    Domain d;
    d.dim_ = 2;
    d.sides_[0] = {a1, b1};
    d.sides_[1] = {a2, b2};
    return d;
}

double Domain::measure() const {
    if (dim_ == 2) return sides_[0].length() * sides_[1].length();
    double m = 0.0;
    for (const auto& c : comps_) m += c.length();
    return m;
}

double Domain::diameter() const {
    if (dim_ == 2) return std::hypot(sides_[0].length(), sides_[1].length());
    return comps_.back().b - comps_.front().a;
}

bool Domain::convex() const {
    return dim_ == 2 || comps_.size() == 1;
}

bool Domain::contains(double x) const {
    for (const auto& c : comps_)
        if (x > c.a && x < c.b) return true;
    return false;
}

double Domain::dist_to_boundary(double x) const {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& c : comps_) {
        d = std::min(d, std::abs(x - c.a));
        d = std::min(d, std::abs(x - c.b));
    }
    return d;
}

std::vector<double> Domain::endpoints() const {
    std::vector<double> e;
    for (const auto& c : comps_) {
        e.push_back(c.a);
        e.push_back(c.b);
    }
    return e;
}

std::vector<Interval> Domain::complement() const {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Interval> gaps;
    gaps.push_back({-inf, comps_.front().a});
    for (size_t i = 0; i + 1 < comps_.size(); ++i)
        gaps.push_back({comps_[i].b, comps_[i + 1].a});
    gaps.push_back({comps_.back().b, inf});
    return gaps;
}

bool Domain::contains2d(double x1, double x2) const {
    return x1 > sides_[0].a && x1 < sides_[0].b && x2 > sides_[1].a && x2 < sides_[1].b;
}

double Domain::dist_to_boundary2d(double x1, double x2) const {
    const double d1 = std::min(x1 - sides_[0].a, sides_[0].b - x1);
    const double d2 = std::min(x2 - sides_[1].a, sides_[1].b - x2);
    return std::min(d1, d2);
}

}  // namespace fraclap
