#include "spinscat/magnetics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <memory>

namespace spinscat {

void SphereFieldSpec::validate() const {
    if (!(strength_ratio > 0.0)) throw ConfigError("sphere field: strength_ratio must be > 0");
    if (!(radius > 0.0)) throw ConfigError("sphere field: radius must be > 0");
    if (!(cutoff_ratio >= 1.0)) throw ConfigError("sphere field: cutoff_ratio must be >= 1");
    if (std::abs(norm(axis) - 1.0) > 1e-12)
        throw ConfigError("sphere field: magnetization axis must be a unit vector");
}

Vec3 sphere_field(const Vec3& r, const SphereFieldSpec& spec) {
    const double rr = norm(r);
    const double b = spec.cutoff_radius();
    if (rr > b) return {0.0, 0.0, 0.0};
    if (rr < spec.radius) return spec.axis * (2.0 / 3.0 * spec.strength_ratio);
    // Dipole pattern of the uniformly magnetized sphere, units of V0/E0:
    // (a^3/r^3) [ (m.rhat) rhat - m/3 ].
    const Vec3 rhat = {r.x / rr, r.y / rr, r.z / rr};
    const double a3r3 = (spec.radius * spec.radius * spec.radius) / (rr * rr * rr);
    const double mr = dot(spec.axis, rhat);
    return (rhat * mr - spec.axis * (1.0 / 3.0)) * (a3r3 * spec.strength_ratio);
}

PauliEigen pauli_eigenbasis(const Vec3& u) {
    PauliEigen out;
    const double B = norm(u);
    out.eigenvalue_plus = B;
    if (B == 0.0) {
        out.a = {{{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(1, 0)}}};
        return out;
    }
    const cplx uxy_m(u.x, -u.y), uxy_p(u.x, u.y);
    cplx vp0, vp1;
    // Two algebraically equivalent eigenvector forms; pick the well-conditioned
    // one depending on the sign of uz.
    if (u.z >= 0.0) {
        vp0 = cplx(B + u.z, 0.0);
        vp1 = uxy_p;
    } else {
        vp0 = uxy_m;
        vp1 = cplx(B - u.z, 0.0);
    }
    const double nrm = std::sqrt(std::norm(vp0) + std::norm(vp1));
    vp0 /= nrm;
    vp1 /= nrm;
    // Orthogonal partner spans the -|u| eigenspace.
    out.a = {{{vp0, -std::conj(vp1)}, {vp1, std::conj(vp0)}}};
    return out;
}

DimensionlessPotential bake_potential(const FieldSampler& sampler, const GridSpec& grid,
                                      const RegionLayout& layout) {
    DimensionlessPotential pot;
    pot.ux = RealLattice(grid.n);
    pot.uy = RealLattice(grid.n);
    pot.uz = RealLattice(grid.n);
    pot.support = {AxisRange{grid.n[0], -1}, AxisRange{grid.n[1], -1}, AxisRange{grid.n[2], -1}};

    // Every cell outside the TF box must sample to zero: the interaction and
    // its range cutoff have to fit inside the total-field region.
    for (int i = 0; i < grid.n[0]; ++i)
        for (int j = 0; j < grid.n[1]; ++j)
            for (int k = 0; k < grid.n[2]; ++k) {
                if (layout.in_tf(i, j, k)) continue;
                Vec3 v = sampler(grid.cell_center(i, j, k));
                if (v.x != 0.0 || v.y != 0.0 || v.z != 0.0)
                    throw ConfigError(
                        "bake_potential: interaction field is nonzero outside the TF box at "
                        "cell (" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + "); the field and its range cutoff must fit inside "
                        "the total-field region -- enlarge the grid or reduce the cutoff radius");
            }

    double umax2 = 0.0;
    const auto& tf = layout.tf_box;
    for (int i = tf[0].lo; i <= tf[0].hi; ++i)
        for (int j = tf[1].lo; j <= tf[1].hi; ++j)
            for (int k = tf[2].lo; k <= tf[2].hi; ++k) {
                Vec3 v = sampler(grid.cell_center(i, j, k));
                if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
                    throw NumericError("bake_potential: non-finite field sample");
                if (v.x == 0.0 && v.y == 0.0 && v.z == 0.0) continue;
                pot.ux(i, j, k) = v.x;
                pot.uy(i, j, k) = v.y;
                pot.uz(i, j, k) = v.z;
                umax2 = std::max(umax2, dot(v, v));
                pot.support[0].lo = std::min(pot.support[0].lo, i);
                pot.support[0].hi = std::max(pot.support[0].hi, i);
                pot.support[1].lo = std::min(pot.support[1].lo, j);
                pot.support[1].hi = std::max(pot.support[1].hi, j);
                pot.support[2].lo = std::min(pot.support[2].lo, k);
                pot.support[2].hi = std::max(pot.support[2].hi, k);
            }
    pot.umax = std::sqrt(umax2);
    pot.empty = pot.support[0].hi < pot.support[0].lo;
    if (pot.empty)
        pot.support = {AxisRange{0, -1}, AxisRange{0, -1}, AxisRange{0, -1}};
    return pot;
}

namespace {

constexpr char kMagic[8] = {'M', 'A', 'G', 'V', 'O', 'X', '0', '1'};
constexpr std::size_t kHeaderBytes = 72;

template <typename T>
T read_le(const unsigned char* p) {
    T v;
    std::memcpy(&v, p, sizeof(T));  // little-endian host assumed (x86/aarch64)
    return v;
}

}  // namespace

VoxelField read_voxel_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("voxel file: cannot open '" + path + "'", 0);
    std::vector<unsigned char> header(kHeaderBytes);
    in.read(reinterpret_cast<char*>(header.data()), kHeaderBytes);
    if (static_cast<std::size_t>(in.gcount()) != kHeaderBytes)
        throw IngestError("voxel file: truncated header", static_cast<std::size_t>(in.gcount()));
    if (std::memcmp(header.data(), kMagic, 8) != 0)
        throw IngestError("voxel file: bad magic", 0);

    VoxelField f;
    for (int a = 0; a < 3; ++a) {
        std::uint32_t dim = read_le<std::uint32_t>(header.data() + 8 + 4 * a);
        if (dim == 0 || dim > (1u << 24)) throw IngestError("voxel file: bad dimension", 8 + 4 * a);
        f.n[a] = static_cast<int>(dim);
    }
    for (int a = 0; a < 3; ++a) {
        f.d[a] = read_le<double>(header.data() + 20 + 8 * a);
        if (!(f.d[a] > 0.0) || !std::isfinite(f.d[a]))
            throw IngestError("voxel file: bad spacing", 20 + 8 * a);
    }
    for (int a = 0; a < 3; ++a) {
        f.origin[a] = read_le<double>(header.data() + 44 + 8 * a);
        if (!std::isfinite(f.origin[a])) throw IngestError("voxel file: bad origin", 44 + 8 * a);
    }

    const std::size_t count = static_cast<std::size_t>(f.n[0]) * f.n[1] * f.n[2] * 3;
    f.samples.resize(count);
    in.read(reinterpret_cast<char*>(f.samples.data()),
            static_cast<std::streamsize>(count * sizeof(double)));
    const std::size_t got = static_cast<std::size_t>(in.gcount());
    if (got != count * sizeof(double))
        throw IngestError("voxel file: truncated payload", kHeaderBytes + got);
    for (std::size_t i = 0; i < count; ++i)
        if (!std::isfinite(f.samples[i]))
            throw IngestError("voxel file: non-finite value", kHeaderBytes + i * sizeof(double));
    return f;
}

void write_voxel_file(const std::string& path, const VoxelField& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IngestError("voxel file: cannot create '" + path + "'", 0);
    unsigned char header[kHeaderBytes] = {};
    std::memcpy(header, kMagic, 8);
    for (int a = 0; a < 3; ++a) {
        std::uint32_t dim = static_cast<std::uint32_t>(field.n[a]);
        std::memcpy(header + 8 + 4 * a, &dim, 4);
    }
    for (int a = 0; a < 3; ++a) std::memcpy(header + 20 + 8 * a, &field.d[a], 8);
    for (int a = 0; a < 3; ++a) std::memcpy(header + 44 + 8 * a, &field.origin[a], 8);
    out.write(reinterpret_cast<const char*>(header), kHeaderBytes);
    out.write(reinterpret_cast<const char*>(field.samples.data()),
              static_cast<std::streamsize>(field.samples.size() * sizeof(double)));
    if (!out) throw IngestError("voxel file: write failed", kHeaderBytes);
}

FieldSampler make_voxel_sampler(VoxelField field) {
    auto f = std::make_shared<VoxelField>(std::move(field));
    return [f](const Vec3& r) -> Vec3 {
        double t[3];
        for (int a = 0; a < 3; ++a) {
            t[a] = ((a == 0 ? r.x : (a == 1 ? r.y : r.z)) - f->origin[a]) / f->d[a];
            if (t[a] < 0.0 || t[a] > f->n[a] - 1) return {0.0, 0.0, 0.0};
        }
        int i0[3];
        double w[3];
        for (int a = 0; a < 3; ++a) {
            i0[a] = std::min(static_cast<int>(t[a]), f->n[a] - 2);
            if (f->n[a] == 1) i0[a] = 0;
            w[a] = t[a] - i0[a];
        }
        Vec3 acc{0, 0, 0};
        for (int ci = 0; ci < 2; ++ci)
            for (int cj = 0; cj < 2; ++cj)
                for (int ck = 0; ck < 2; ++ck) {
                    int ii = std::min(i0[0] + ci, f->n[0] - 1);
                    int jj = std::min(i0[1] + cj, f->n[1] - 1);
                    int kk = std::min(i0[2] + ck, f->n[2] - 1);
                    double ww = (ci ? w[0] : 1 - w[0]) * (cj ? w[1] : 1 - w[1]) *
                                (ck ? w[2] : 1 - w[2]);
                    if (ww == 0.0) continue;
                    acc = acc + f->sample(ii, jj, kk) * ww;
                }
        return acc;
    };
}

FieldSampler load_voxel_field(const std::string& path) {
    return make_voxel_sampler(read_voxel_file(path));
}

}  // namespace spinscat
