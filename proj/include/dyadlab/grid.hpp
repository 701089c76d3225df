#pragma once

// Dyadic geometry on the unit interval: grids, cubes, piecewise-constant
// grid functions, Lebesgue averages, medians and cube-indexed sum tables.
// Everything downstream (weights, BMO, sparse operators, kernels) computes
// on these types.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dyadlab {

inline constexpr double kThirdShift = 1.0 / 3.0;
inline constexpr int kMaxDepth = 24;

// Depth-L binary subdivision of [shift, shift+1) into 2^L half-open cells.
// Every dyadic cube at level l in [0, L] is a contiguous run of 2^(L-l)
// cells, so integrals against piecewise-constant data are finite sums.
class DyadicGrid {
public:
    explicit DyadicGrid(int depth, double shift = 0.0)
        : depth_(depth), shift_(shift) {
        if (depth < 1 || depth > kMaxDepth)
            throw std::invalid_argument("DyadicGrid: depth must be in [1, 24]");
        if (shift != 0.0 && shift != kThirdShift)
            throw std::invalid_argument("DyadicGrid: shift must be 0 or 1/3");
    }

    int depth() const { return depth_; }
    double shift() const { return shift_; }
    std::size_t cells() const { return std::size_t{1} << depth_; }
    double cell_width() const { return std::ldexp(1.0, -depth_); }

    double cell_left(std::size_t j) const { return shift_ + double(j) * cell_width(); }
    double cell_right(std::size_t j) const { return shift_ + double(j + 1) * cell_width(); }
    double cell_mid(std::size_t j) const { return shift_ + (double(j) + 0.5) * cell_width(); }

    friend bool operator==(const DyadicGrid&, const DyadicGrid&) = default;

private:
    int depth_;
    double shift_;
};

// Cube [index*2^-level, (index+1)*2^-level) in grid coordinates.
struct DyadicCube {
    int level = 0;
    std::uint64_t index = 0;

    double measure() const { return std::ldexp(1.0, -level); }
    DyadicCube parent() const { return {level - 1, index >> 1}; }
    DyadicCube child(int side) const { return {level + 1, 2 * index + std::uint64_t(side)}; }

    bool contains(const DyadicCube& q) const {
        return q.level >= level && (q.index >> (q.level - level)) == index;
    }
    bool strictly_contains(const DyadicCube& q) const {
        return q.level > level && (q.index >> (q.level - level)) == index;
    }

    friend auto operator<=>(const DyadicCube&, const DyadicCube&) = default;
};

inline DyadicCube root_cube() { return {0, 0}; }

inline void check_cube(const DyadicGrid& g, const DyadicCube& q) {
    if (q.level < 0 || q.level > g.depth() || q.index >= (std::uint64_t{1} << q.level))
        throw std::invalid_argument("cube outside grid");
}

// First finest cell covered by q, and the number of cells it spans.
inline std::size_t cube_first_cell(const DyadicGrid& g, const DyadicCube& q) {
    return std::size_t(q.index) << (g.depth() - q.level);
}
inline std::size_t cube_cell_count(const DyadicGrid& g, const DyadicCube& q) {
    return std::size_t{1} << (g.depth() - q.level);
}
inline double cube_left(const DyadicGrid& g, const DyadicCube& q) {
    return g.shift() + double(q.index) * q.measure();
}

// Real-valued function that is constant on each finest cell.
class GridFunction {
public:
    explicit GridFunction(const DyadicGrid& grid, double value = 0.0)
        : grid_(grid), values_(grid.cells(), value) {}

    GridFunction(const DyadicGrid& grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.cells())
            throw std::invalid_argument("GridFunction: value count != cell count");
    }

    template <class Fn>
    static GridFunction sample_midpoints(const DyadicGrid& grid, Fn&& fn) {
        GridFunction f(grid);
        for (std::size_t j = 0; j < grid.cells(); ++j) f[j] = fn(grid.cell_mid(j));
        return f;
    }

    const DyadicGrid& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }
    double& operator[](std::size_t j) { return values_[j]; }
    double operator[](std::size_t j) const { return values_[j]; }
    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool may_diverge() const { return may_diverge_; }
    void set_may_diverge(bool b) { may_diverge_ = b; }

private:
    DyadicGrid grid_;
    std::vector<double> values_;
    bool may_diverge_ = false;
};

inline void check_same_grid(const DyadicGrid& a, const DyadicGrid& b) {
    if (!(a == b)) throw std::invalid_argument("grid mismatch");
}

// Sums of cell data over every dyadic cube, built bottom-up so that
// sum(Q) == sum(left child) + sum(right child) bitwise.
class CubeSumTable {
public:
    explicit CubeSumTable(const std::vector<double>& cell_values) {
        std::size_t n = cell_values.size();
        int depth = 0;
        while ((std::size_t{1} << depth) < n) ++depth;
        if ((std::size_t{1} << depth) != n)
            throw std::invalid_argument("CubeSumTable: size must be a power of two");
        rows_.resize(depth + 1);
        rows_[depth] = cell_values;
        for (int l = depth - 1; l >= 0; --l) {
            rows_[l].resize(std::size_t{1} << l);
            for (std::size_t j = 0; j < rows_[l].size(); ++j)
                rows_[l][j] = rows_[l + 1][2 * j] + rows_[l + 1][2 * j + 1];
        }
    }

    int depth() const { return int(rows_.size()) - 1; }
    double sum(const DyadicCube& q) const { return rows_[q.level][q.index]; }
    double sum(int level, std::uint64_t index) const { return rows_[level][index]; }
    const std::vector<double>& row(int level) const { return rows_[level]; }

private:
    std::vector<std::vector<double>> rows_;
};

// Lebesgue average over a cube.
inline double cube_average(const GridFunction& f, const DyadicCube& q) {
    check_cube(f.grid(), q);
    std::size_t j0 = cube_first_cell(f.grid(), q);
    std::size_t cnt = cube_cell_count(f.grid(), q);
    double s = 0.0;
    for (std::size_t j = j0; j < j0 + cnt; ++j) s += f[j];
    return s / double(cnt);
}

// Lower median of b over the cells of Q: the ceil(N/2)-th smallest cell
// value. Satisfies |{b >= m}| >= |Q|/2 and |{b <= m}| >= |Q|/2, and ties
// resolve downward (two equal halves give the smaller value).
inline double median(const GridFunction& b, const DyadicCube& q) {
    check_cube(b.grid(), q);
    std::size_t j0 = cube_first_cell(b.grid(), q);
    std::size_t cnt = cube_cell_count(b.grid(), q);
    std::vector<double> vals(b.values().begin() + j0, b.values().begin() + j0 + cnt);
    std::size_t k = (cnt - 1) / 2;
    std::nth_element(vals.begin(), vals.begin() + k, vals.end());
    return vals[k];
}

inline GridFunction operator+(const GridFunction& a, const GridFunction& b) {
    check_same_grid(a.grid(), b.grid());
    GridFunction r = a;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += b[j];
    return r;
}
inline GridFunction operator-(const GridFunction& a, const GridFunction& b) {
    check_same_grid(a.grid(), b.grid());
    GridFunction r = a;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
    return r;
}
inline GridFunction operator*(const GridFunction& a, const GridFunction& b) {
    check_same_grid(a.grid(), b.grid());
    GridFunction r = a;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] *= b[j];
    return r;
}
inline GridFunction operator*(double c, const GridFunction& a) {
    GridFunction r = a;
    for (auto& v : r.values()) v *= c;
    return r;
}

inline GridFunction abs(const GridFunction& a) {
    GridFunction r = a;
    for (auto& v : r.values()) v = std::fabs(v);
    return r;
}

// Indicator of a cube as a grid function.
inline GridFunction indicator(const DyadicGrid& g, const DyadicCube& q) {
    check_cube(g, q);
    GridFunction f(g);
    std::size_t j0 = cube_first_cell(g, q);
    std::size_t cnt = cube_cell_count(g, q);
    for (std::size_t j = j0; j < j0 + cnt; ++j) f[j] = 1.0;
    return f;
}

}  // namespace dyadlab
