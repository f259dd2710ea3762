#pragma once

#include <array>
#include <memory>
#include <vector>

#include "spinscat/lattice.hpp"

namespace spinscat {

/// FFT-backed spectral operators on one lattice shape. Wavenumbers are the
/// periodic set 2*pi*m/(n*d) with m folded to (-n/2, n/2]; anything beyond
/// Nyquist aliases onto that set.
class SpectralField {
public:
    SpectralField(const std::array<int, 3>& n, const std::array<double, 3>& d);
    ~SpectralField();
    SpectralField(const SpectralField&) = delete;
    SpectralField& operator=(const SpectralField&) = delete;

    /// out = InverseFT[ (kx^2+ky^2+kz^2) * FT[in] ], normalized.
    void apply_ksq(const ComplexLattice& in, ComplexLattice& out);

    /// out = InverseFT[ i*k_axis * FT[in] ], normalized. The Nyquist mode's
    /// first-derivative multiplier is zero (its sign is ambiguous).
    void apply_derivative(const ComplexLattice& in, ComplexLattice& out, int axis);

    const std::array<int, 3>& shape() const { return n_; }
    double ksq_max() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    std::array<int, 3> n_;
    std::array<double, 3> d_;
    std::array<std::vector<double>, 3> k_;  // folded wavenumber per axis index
};

}  // namespace spinscat
