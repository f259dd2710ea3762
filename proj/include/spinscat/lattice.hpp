#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace spinscat {

using cplx = std::complex<double>;

/// Dense 3D array, row-major with z contiguous: idx = (i*ny + j)*nz + k.
template <typename T>
struct Lattice3 {
    std::array<int, 3> n{0, 0, 0};
    std::vector<T> data;

    Lattice3() = default;
    explicit Lattice3(const std::array<int, 3>& shape, T fill = T{})
        : n(shape), data(static_cast<std::size_t>(shape[0]) * shape[1] * shape[2], fill) {}

    std::size_t size() const { return data.size(); }
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n[1] + j) * n[2] + k;
    }
    T& operator()(int i, int j, int k) { return data[index(i, j, k)]; }
    const T& operator()(int i, int j, int k) const { return data[index(i, j, k)]; }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }
};

using ComplexLattice = Lattice3<cplx>;
using RealLattice = Lattice3<double>;

/// Two-component spinor field: one complex lattice per spin projection.
struct SpinorLattice {
    ComplexLattice up, down;

    SpinorLattice() = default;
    explicit SpinorLattice(const std::array<int, 3>& shape) : up(shape), down(shape) {}

    const std::array<int, 3>& shape() const { return up.n; }
    std::size_t size() const { return up.size(); }

    bool all_finite() const {
        for (const auto& v : up.data)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        for (const auto& v : down.data)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
        return true;
    }

    double max_abs2() const {
        double m = 0.0;
        for (const auto& v : up.data) m = std::max(m, std::norm(v));
        for (const auto& v : down.data) m = std::max(m, std::norm(v));
        return m;
    }
};

/// Sums `terms` in a fixed pairwise tree so the result does not depend on how
/// the terms were produced (thread counts, slab partitions).
inline double pairwise_sum(std::vector<double> terms) {
    if (terms.empty()) return 0.0;
    std::size_t m = terms.size();
    while (m > 1) {
        std::size_t h = 0;
        for (std::size_t i = 0; i + 1 < m; i += 2) terms[h++] = terms[i] + terms[i + 1];
        if (m % 2) terms[h++] = terms[m - 1];
        m = h;
    }
    return terms[0];
}

}  // namespace spinscat
