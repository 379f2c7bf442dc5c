/// @file grid.hpp
/// @brief Periodic cell-centered grids and grid functions in 1-3 dimensions.
///
/// Storage is a flat array with x fastest; periodic wrap is done by explicit
/// index arithmetic, no ghost layers. Degenerate axes (dim < 3) are absent:
/// a 1D grid of N cells stores exactly N values.

#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "pnpch/summation.hpp"

namespace pnpch {

/// Uniform periodic grid covering the cuboid [lo, hi]^dim with N cells per
/// axis. Cell centers sit at lo + (i + 1/2) h for i = 0..N-1.
class PeriodicGrid {
public:
    PeriodicGrid(int dim, int n, double lo, double hi)
        : dim_(dim), n_(n), lo_(lo), hi_(hi), h_((hi - lo) / n) {
        assert(dim_ >= 1 && dim_ <= 3);
        assert(n_ >= 1);
        assert(hi_ > lo_);
    }

    int dim() const { return dim_; }
    int n() const { return n_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double h() const { return h_; }

    /// Cells along axis a (1 for absent axes), so loop bounds collapse.
    int extent(int axis) const { return axis < dim_ ? n_ : 1; }

    std::size_t cell_count() const {
        std::size_t c = 1;
        for (int d = 0; d < dim_; ++d) c *= static_cast<std::size_t>(n_);
        return c;
    }

    double volume() const { return std::pow(hi_ - lo_, dim_); }
    double cell_volume() const { return std::pow(h_, dim_); }

    double center(int i) const { return lo_ + (i + 0.5) * h_; }

    int wrap(int i) const {
        int r = i % n_;
        return r < 0 ? r + n_ : r;
    }

    /// Flat index of cell (i, j, k); coordinates are wrapped periodically.
    /// Coordinates beyond dim must be 0.
    std::size_t index(int i, int j = 0, int k = 0) const {
        assert(dim_ >= 2 || j == 0);
        assert(dim_ >= 3 || k == 0);
        const std::size_t ii = static_cast<std::size_t>(wrap(i));
        const std::size_t jj = dim_ >= 2 ? static_cast<std::size_t>(wrap(j)) : 0;
        const std::size_t kk = dim_ >= 3 ? static_cast<std::size_t>(wrap(k)) : 0;
        return (kk * extent(1) + jj) * static_cast<std::size_t>(n_) + ii;
    }

    friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

private:
    int dim_;
    int n_;
    double lo_, hi_;
    double h_;
};

/// Scalar grid function on cell centers (concentrations, potentials, ...).
class CellField {
public:
    explicit CellField(const PeriodicGrid& grid, double fill = 0.0)
        : grid_(grid), values_(grid.cell_count(), fill) {}

    CellField(const PeriodicGrid& grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        assert(values_.size() == grid_.cell_count());
    }

    const PeriodicGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    double& operator()(int i, int j = 0, int k = 0) { return values_[grid_.index(i, j, k)]; }
    double operator()(int i, int j = 0, int k = 0) const { return values_[grid_.index(i, j, k)]; }

    double& operator[](std::size_t flat) { return values_[flat]; }
    double operator[](std::size_t flat) const { return values_[flat]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    /// Discrete average h^dim / |Omega| * sum = sum / N^dim, compensated.
    double mean() const {
        return compensated_sum(values_) / static_cast<double>(values_.size());
    }

    double min() const {
        double m = values_[0];
        for (double v : values_) m = v < m ? v : m;
        return m;
    }

    double max() const {
        double m = values_[0];
        for (double v : values_) m = v > m ? v : m;
        return m;
    }

    void fill(double v) { values_.assign(values_.size(), v); }

    void add_scalar(double s) {
        for (double& v : values_) v += s;
    }

    /// Subtracts the compensated mean; afterwards mean() is 0 to rounding.
    void project_mean_zero() { add_scalar(-mean()); }

private:
    PeriodicGrid grid_;
    std::vector<double> values_;
};

/// Face-centered vector field: one array per axis, the axis-a entry at flat
/// index of cell (i,j,k) holds the value on the face between that cell and
/// its +1 neighbor along a (index i+1/2 in stencil notation).
class EdgeField {
public:
    explicit EdgeField(const PeriodicGrid& grid, double fill = 0.0) : grid_(grid) {
        for (int a = 0; a < grid_.dim(); ++a)
            axes_[a].assign(grid_.cell_count(), fill);
    }

    const PeriodicGrid& grid() const { return grid_; }

    std::vector<double>& axis(int a) { return axes_[a]; }
    const std::vector<double>& axis(int a) const { return axes_[a]; }

    double& at(int a, int i, int j = 0, int k = 0) { return axes_[a][grid_.index(i, j, k)]; }
    double at(int a, int i, int j = 0, int k = 0) const { return axes_[a][grid_.index(i, j, k)]; }

    double min() const {
        double m = axes_[0][0];
        for (int a = 0; a < grid_.dim(); ++a)
            for (double v : axes_[a]) m = v < m ? v : m;
        return m;
    }

private:
    PeriodicGrid grid_;
    std::array<std::vector<double>, 3> axes_;
};

/// Visits every cell as (i, j, k, flat) with absent axes pinned at 0.
template <typename Fn>
void for_each_cell(const PeriodicGrid& g, Fn&& fn) {
    const int ni = g.extent(0), nj = g.extent(1), nk = g.extent(2);
    std::size_t flat = 0;
    for (int k = 0; k < nk; ++k)
        for (int j = 0; j < nj; ++j)
            for (int i = 0; i < ni; ++i, ++flat)
                fn(i, j, k, flat);
}

/// Samples f(x), f(x,y) or f(x,y,z) at cell centers, by grid dimension.
/// The callable receives the coordinates that exist; extra ones are ignored
/// via the array argument.
inline CellField sample_cells(const PeriodicGrid& g,
                              const std::function<double(std::array<double, 3>)>& f) {
    CellField out(g);
    for_each_cell(g, [&](int i, int j, int k, std::size_t flat) {
        out[flat] = f({g.center(i), g.center(j), g.center(k)});
    });
    return out;
}

} // namespace pnpch
