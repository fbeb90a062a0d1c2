#include "fraclap/series.hpp"

#include <cmath>
#include <vector>

namespace fraclap::series {

OscTail tail_by_parts(const std::function<double(long)>& b, long m,
                      std::complex<double> q, int levels) {
    if (std::abs(q - 1.0) < 1e-8)
        throw DomainError("tail_by_parts: q too close to 1 (grid point at a period)");
    // S(m;b) = q^m b_m/(1-q) + (q/(1-q)) S(m;Db), unrolled `levels` times.
    std::vector<double> row(levels + 1);
    for (int i = 0; i <= levels; ++i) row[i] = b(m + i);

    const std::complex<double> A = q / (1.0 - q);
    const double ph = std::arg(q) * static_cast<double>(m);
    const std::complex<double> fac =
        std::complex<double>(std::cos(ph), std::sin(ph)) / (1.0 - q);

    std::complex<double> acc = 0.0;
    std::complex<double> ak = fac;
    double prev_head = std::abs(row[0]);
    for (int k = 0; k < levels; ++k) {
        acc += ak * row[0];
        prev_head = std::abs(row[0]);
        for (size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
        ak *= A;
    }
    // |R| = |A^levels S(m; D^levels b)| <= |A|^levels |D^{levels-1} b_m|
    const double rem = 2.0 * (std::abs(ak) / std::abs(fac)) * prev_head + 1e-15 * std::abs(acc);
    return {acc, rem};
}

}  // namespace fraclap::series
