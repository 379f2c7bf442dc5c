/// @file operators.hpp
/// @brief Stencil operators, inner products and norms on periodic grids.
///
/// All operators are the standard second-order staggered-mesh stencils:
/// cell-to-face differences and averages, their face-to-cell adjoints, and
/// the variable-coefficient divergence form built from them. Discrete means
/// of every divergence-form output vanish by telescoping.

#pragma once

#include <cassert>
#include <cmath>

#include "pnpch/grid.hpp"
#include "pnpch/summation.hpp"

namespace pnpch {

namespace detail {

/// Flat index of the +1 / -1 neighbor of (i,j,k) along an axis, wrapped.
inline std::size_t shift_index(const PeriodicGrid& g, int i, int j, int k, int axis, int off) {
    switch (axis) {
        case 0: return g.index(i + off, j, k);
        case 1: return g.index(i, j + off, k);
        default: return g.index(i, j, k + off);
    }
}

} // namespace detail

/// Cell-to-face forward difference per axis: out_a(i+1/2) = (u(i+1) - u(i)) / h.
inline EdgeField grad_h(const CellField& u) {
    const PeriodicGrid& g = u.grid();
    EdgeField out(g);
    const double inv_h = 1.0 / g.h();
    for (int a = 0; a < g.dim(); ++a) {
        auto& e = out.axis(a);
        for_each_cell(g, [&](int i, int j, int k, std::size_t flat) {
            e[flat] = (u[detail::shift_index(g, i, j, k, a, +1)] - u[flat]) * inv_h;
        });
    }
    return out;
}

/// Face-to-cell difference: out(i) = sum_a (f_a(i+1/2) - f_a(i-1/2)) / h.
inline CellField div_h(const EdgeField& f) {
    const PeriodicGrid& g = f.grid();
    CellField out(g);
    const double inv_h = 1.0 / g.h();
    for (int a = 0; a < g.dim(); ++a) {
        const auto& e = f.axis(a);
        for_each_cell(g, [&](int i, int j, int k, std::size_t flat) {
            out[flat] += (e[flat] - e[detail::shift_index(g, i, j, k, a, -1)]) * inv_h;
        });
    }
    return out;
}

/// Compact 2*dim+1 point Laplacian (equals div_h of grad_h).
inline CellField laplace_h(const CellField& u) {
    const PeriodicGrid& g = u.grid();
    CellField out(g);
    const double inv_h2 = 1.0 / (g.h() * g.h());
    for (int a = 0; a < g.dim(); ++a) {
        for_each_cell(g, [&](int i, int j, int k, std::size_t flat) {
            out[flat] += (u[detail::shift_index(g, i, j, k, a, +1)] - 2.0 * u[flat] +
                          u[detail::shift_index(g, i, j, k, a, -1)]) * inv_h2;
        });
    }
    return out;
}

/// Cell-to-face arithmetic average: out_a(i+1/2) = (c(i+1) + c(i)) / 2.
/// Strictly positive input gives strictly positive faces.
inline EdgeField edge_average(const CellField& c) {
    const PeriodicGrid& g = c.grid();
    EdgeField out(g);
    for (int a = 0; a < g.dim(); ++a) {
        auto& e = out.axis(a);
        for_each_cell(g, [&](int i, int j, int k, std::size_t flat) {
            e[flat] = 0.5 * (c[detail::shift_index(g, i, j, k, a, +1)] + c[flat]);
        });
    }
    return out;
}

/// Variable-coefficient divergence form sum_a d_a(D_a D_a u); with D == 1 this
/// reduces to laplace_h. Self-adjoint and negative semi-definite for D > 0.
inline CellField div_coeff_grad(const EdgeField& D, const CellField& u) {
    const PeriodicGrid& g = u.grid();
    assert(D.grid() == g);
    CellField out(g);
    const double inv_h2 = 1.0 / (g.h() * g.h());
    for (int a = 0; a < g.dim(); ++a) {
        const auto& d = D.axis(a);
        for_each_cell(g, [&](int i, int j, int k, std::size_t flat) {
            const std::size_t up = detail::shift_index(g, i, j, k, a, +1);
            const std::size_t dn = detail::shift_index(g, i, j, k, a, -1);
            out[flat] += (d[flat] * (u[up] - u[flat]) - d[dn] * (u[flat] - u[dn])) * inv_h2;
        });
    }
    return out;
}

/// Cell inner product h^dim * sum u w.
inline double inner(const CellField& u, const CellField& w) {
    assert(u.grid() == w.grid());
    return u.grid().cell_volume() * compensated_dot(u.values(), w.values());
}

/// Face inner product: per-axis sums of face products, h^dim weighted
/// (the cell-averaged product form collapses to this by periodicity).
inline double edge_inner(const EdgeField& f, const EdgeField& g) {
    assert(f.grid() == g.grid());
    CompensatedSum s;
    for (int a = 0; a < f.grid().dim(); ++a) {
        const auto& fa = f.axis(a);
        const auto& ga = g.axis(a);
        for (std::size_t idx = 0; idx < fa.size(); ++idx) s.add(fa[idx] * ga[idx]);
    }
    return f.grid().cell_volume() * s.value();
}

/// Weighted face inner product [D f, g] with a face-valued weight.
inline double edge_weighted_inner(const EdgeField& D, const EdgeField& f, const EdgeField& g) {
    assert(D.grid() == f.grid() && f.grid() == g.grid());
    CompensatedSum s;
    for (int a = 0; a < f.grid().dim(); ++a) {
        const auto& da = D.axis(a);
        const auto& fa = f.axis(a);
        const auto& ga = g.axis(a);
        for (std::size_t idx = 0; idx < fa.size(); ++idx) s.add(da[idx] * fa[idx] * ga[idx]);
    }
    return f.grid().cell_volume() * s.value();
}

inline double norm_l2(const CellField& u) { return std::sqrt(inner(u, u)); }

inline double norm_linf(const CellField& u) {
    double m = 0.0;
    for (double v : u.values()) m = std::max(m, std::abs(v));
    return m;
}

inline double norm_l1(const CellField& u) {
    CompensatedSum s;
    for (double v : u.values()) s.add(std::abs(v));
    return u.grid().cell_volume() * s.value();
}

/// || grad_h u ||_2^2 summed over axes.
inline double grad_norm_l2_sq(const CellField& u) {
    const EdgeField gu = grad_h(u);
    return edge_inner(gu, gu);
}

struct FieldNorms {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
    double h1 = 0.0; ///< sqrt(||u||^2 + ||grad u||^2)
    double h2 = 0.0; ///< sqrt(||u||^2 + ||grad u||^2 + ||lap u||^2)
};

inline FieldNorms norms(const CellField& u) {
    FieldNorms n;
    n.l1 = norm_l1(u);
    n.l2 = norm_l2(u);
    n.linf = norm_linf(u);
    const double g2 = grad_norm_l2_sq(u);
    const CellField lap = laplace_h(u);
    const double l2sq = n.l2 * n.l2;
    n.h1 = std::sqrt(l2sq + g2);
    n.h2 = std::sqrt(l2sq + g2 + inner(lap, lap));
    return n;
}

} // namespace pnpch
