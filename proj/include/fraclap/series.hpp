#ifndef FRACLAP_SERIES_HPP
#define FRACLAP_SERIES_HPP

#include <complex>
#include <functional>

#include "fraclap/common.hpp"

namespace fraclap::series {

/// sum_{j > N} j^{-theta} for theta > 1 (Euler-Maclaurin, three terms).
inline double zeta_tail(double theta, double n) {
    if (!(theta > 1.0)) throw DomainError("zeta_tail: needs theta > 1");
    return std::pow(n, 1.0 - theta) / (theta - 1.0) + 0.5 * std::pow(n, -theta) +
           theta * std::pow(n, -theta - 1.0) / 12.0;
}

/// Tail of an oscillatory series sum_{j >= m} b_j q^j with |q| = 1, q != 1 and
/// slowly varying b_j -> 0, by iterated summation by parts:
///   S = q^m/(1-q) * sum_{k<M} (q/(1-q))^k (D^k b)_m + R,
/// (D b)_j = b_{j+1} - b_j.  Returns the sum and a remainder bound.
struct OscTail {
    std::complex<double> value;
    double error;
};
OscTail tail_by_parts(const std::function<double(long)>& b, long m,
                      std::complex<double> q, int levels = 10);

}  // namespace fraclap::series

#endif
