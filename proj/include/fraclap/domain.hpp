#ifndef FRACLAP_DOMAIN_HPP
#define FRACLAP_DOMAIN_HPP

#include <vector>

#include "fraclap/common.hpp"

namespace fraclap {

struct Interval {
    double a, b;
    double length() const { return b - a; }
};

/// A 1D finite union of disjoint intervals, or a 2D axis-aligned rectangle.
class Domain {
public:
    static Domain interval(double a, double b);
    static Domain intervals(std::vector<Interval> comps);
    static Domain rectangle(double a1, double b1, double a2, double b2);

    int dim() const { return dim_; }
    const std::vector<Interval>& components() const { return comps_; }
    const Interval& side(int axis) const { return sides_[axis]; }

    double measure() const;
    double diameter() const;
    bool convex() const;

    // 1D helpers
    bool contains(double x) const;
    double dist_to_boundary(double x) const;
    std::vector<double> endpoints() const;
    /// Complement of the union within the line: bounded gaps plus two rays
    /// (rays encoded with infinite endpoint).
    std::vector<Interval> complement() const;

    // 2D helpers
    bool contains2d(double x1, double x2) const;
    double dist_to_boundary2d(double x1, double x2) const;

private:
    int dim_ = 1;
    std::vector<Interval> comps_;  // 1D components, sorted
    Interval sides_[2] = {{0, 0}, {0, 0}};  // 2D rectangle sides
};

}  // namespace fraclap

#endif
