/// @file test_helpers.hpp
/// @brief Shared generators and comparison helpers for the test suites.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "pnpch/grid.hpp"

namespace pnpch::test {

inline std::mt19937_64 rng(std::uint64_t seed = 0x5eed) { return std::mt19937_64(seed); }

inline CellField random_field(const PeriodicGrid& g, std::mt19937_64& eng,
                              double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    CellField f(g);
    for (double& v : f.values()) v = dist(eng);
    return f;
}

inline EdgeField random_edge_field(const PeriodicGrid& g, std::mt19937_64& eng,
                                   double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    EdgeField f(g);
    for (int a = 0; a < g.dim(); ++a)
        for (double& v : f.axis(a)) v = dist(eng);
    return f;
}

inline double max_abs_diff(const CellField& a, const CellField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Cyclic index shift of a field by (si, sj, sk); used for translation
/// equivariance checks.
inline CellField shifted(const CellField& u, int si, int sj = 0, int sk = 0) {
    const PeriodicGrid& g = u.grid();
    CellField out(g);
    for_each_cell(g, [&](int i, int j, int k, std::size_t flat) {
        out[flat] = u(i + si, g.dim() > 1 ? j + sj : 0, g.dim() > 2 ? k + sk : 0);
    });
    return out;
}

} // namespace pnpch::test
