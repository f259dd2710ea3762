#include "spinscat/farfield.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>

#include "spinscat/errors.hpp"
#include "json.hpp"

namespace spinscat {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cplx kI{0.0, 1.0};
}  // namespace

Vec3 PlaneRecord::point(int a, int b) const {
    Vec3 p;
    p[axis] = coord;
    p[t1] = o1 + a * d1;
    p[t2] = o2 + b * d2;
    return p;
}

Vec3 PlaneRecord::outward_normal() const {
    Vec3 n{0, 0, 0};
    n[axis] = side == 0 ? -1.0 : 1.0;
    return n;
}

bool SurfacePhasorRecord::complete() const {
    if (periods < 1) return false;
    for (const auto& p : planes) {
        const std::size_t want = static_cast<std::size_t>(p.n1) * p.n2;
        if (want == 0) return false;
        if (p.psi_u.size() != want || p.psi_d.size() != want || p.dn_u.size() != want ||
            p.dn_d.size() != want)
            return false;
    }
    return true;
}

PhasorAccumulator::PhasorAccumulator(const std::array<int, 3>& shape, int periods,
                                     int steps_per_period, double dtau)
    : acc_up_(shape), acc_down_(shape), periods_(periods),
      total_steps_(periods * steps_per_period), weight_(dtau / (periods * kTwoPi)) {
    if (periods < 2) throw ConfigError("phasor accumulation needs at least 2 periods");
    if (steps_per_period < 2 ||
        std::abs(steps_per_period * dtau - kTwoPi) > 1e-9 * kTwoPi)
        throw ConfigError("phasor accumulation needs an integer number of steps per period");
}

void PhasorAccumulator::add_step(const SpinorLattice& psi, double tau) {
    const cplx w = std::exp(kI * tau) * weight_;
    const std::size_t N = psi.size();
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(N); ++c) {
        acc_up_.data[c] += w * psi.up.data[c];
        acc_down_.data[c] += w * psi.down.data[c];
    }
    ++added_;
}

SurfacePhasorRecord make_record(const ComplexLattice& phasor_up, const ComplexLattice& phasor_down,
                                const GridSpec& grid, const RegionLayout& layout,
                                SpectralField& spectral, int periods) {
    SurfacePhasorRecord rec;
    rec.periods = periods;
    rec.box_lo = {grid.coord(0, layout.vs_lo[0]), grid.coord(1, layout.vs_lo[1]),
                  grid.coord(2, layout.vs_lo[2])};
    rec.box_hi = {grid.coord(0, layout.vs_hi[0]), grid.coord(1, layout.vs_hi[1]),
                  grid.coord(2, layout.vs_hi[2])};

    // One spectral derivative per axis per spin; restrict to the two planes.
    std::array<ComplexLattice, 3> du, dd;
    for (int a = 0; a < 3; ++a) {
        spectral.apply_derivative(phasor_up, du[a], a);
        spectral.apply_derivative(phasor_down, dd[a], a);
    }

    int slot = 0;
    for (int axis = 0; axis < 3; ++axis) {
        for (int side = 0; side < 2; ++side) {
            PlaneRecord& pl = rec.planes[slot++];
            pl.axis = axis;
            pl.side = side;
            pl.plane_index = side == 0 ? layout.vs_lo[axis] : layout.vs_hi[axis];
            pl.coord = grid.coord(axis, pl.plane_index);
            pl.t1 = (axis + 1) % 3;
            pl.t2 = (axis + 2) % 3;
            pl.lo1 = layout.vs_lo[pl.t1];
            pl.lo2 = layout.vs_lo[pl.t2];
            pl.n1 = layout.vs_hi[pl.t1] - pl.lo1 + 1;
            pl.n2 = layout.vs_hi[pl.t2] - pl.lo2 + 1;
            pl.d1 = grid.d[pl.t1];
            pl.d2 = grid.d[pl.t2];
            pl.o1 = grid.coord(pl.t1, pl.lo1);
            pl.o2 = grid.coord(pl.t2, pl.lo2);
            const std::size_t count = static_cast<std::size_t>(pl.n1) * pl.n2;
            pl.psi_u.resize(count);
            pl.psi_d.resize(count);
            pl.dn_u.resize(count);
            pl.dn_d.resize(count);
            const double sign = side == 0 ? -1.0 : 1.0;  // outward normal
            for (int a = 0; a < pl.n1; ++a)
                for (int b = 0; b < pl.n2; ++b) {
                    int ijk[3];
                    ijk[axis] = pl.plane_index;
                    ijk[pl.t1] = pl.lo1 + a;
                    ijk[pl.t2] = pl.lo2 + b;
                    const std::size_t src = phasor_up.index(ijk[0], ijk[1], ijk[2]);
                    const std::size_t dst = pl.idx(a, b);
                    pl.psi_u[dst] = phasor_up.data[src];
                    pl.psi_d[dst] = phasor_down.data[src];
                    pl.dn_u[dst] = sign * du[axis].data[src];
                    pl.dn_d[dst] = sign * dd[axis].data[src];
                }
        }
    }
    return rec;
}

namespace {

double quad_weight(const PlaneRecord& pl, int a, int b) {
    double w = pl.d1 * pl.d2;
    if (a == 0 || a == pl.n1 - 1) w *= 0.5;
    if (b == 0 || b == pl.n2 - 1) w *= 0.5;
    return w;
}

void require_complete(const SurfacePhasorRecord& rec, const char* who) {
    if (!rec.complete())
        throw std::invalid_argument(std::string(who) + ": incomplete surface record");
}

}  // namespace

std::pair<cplx, cplx> exterior_field(const SurfacePhasorRecord& record, const Vec3& point) {
    require_complete(record, "exterior_field");
    if (record.inside_box(point))
        throw std::domain_error("exterior_field: evaluation point lies inside the virtual box");
    cplx fu{0, 0}, fd{0, 0};
    for (const auto& pl : record.planes) {
        const Vec3 nrm = pl.outward_normal();
        for (int a = 0; a < pl.n1; ++a)
            for (int b = 0; b < pl.n2; ++b) {
                const Vec3 rp = pl.point(a, b);
                const Vec3 diff = point - rp;
                const double R = norm(diff);
                const cplx G = std::exp(kI * R) / (4.0 * std::numbers::pi * R);
                // dG/dn' with grad'R = -(diff)/R
                const double dRdn = -dot(nrm, diff) / R;
                const cplx dGdn = G * (kI - 1.0 / R) * dRdn;
                const double w = quad_weight(pl, a, b);
                const std::size_t c = pl.idx(a, b);
                fu += w * (pl.psi_u[c] * dGdn - G * pl.dn_u[c]);
                fd += w * (pl.psi_d[c] * dGdn - G * pl.dn_d[c]);
            }
    }
    return {fu, fd};
}

std::pair<cplx, cplx> far_amplitude(const SurfacePhasorRecord& record, const Vec3& khat) {
    require_complete(record, "far_amplitude");
    if (std::abs(norm(khat) - 1.0) > 1e-12)
        throw std::invalid_argument("far_amplitude: direction must be a unit vector");
    // Asymptotic limit of the exterior integral; overall sign pinned by the
    // point-source oracle in the test suite.
    cplx fu{0, 0}, fd{0, 0};
    for (const auto& pl : record.planes) {
        const Vec3 nrm = pl.outward_normal();
        const double kn = dot(khat, nrm);
        for (int a = 0; a < pl.n1; ++a)
            for (int b = 0; b < pl.n2; ++b) {
                const Vec3 rp = pl.point(a, b);
                const cplx phase = std::exp(-kI * dot(khat, rp));
                const double w = quad_weight(pl, a, b);
                const std::size_t c = pl.idx(a, b);
                fu -= w * phase * (kI * kn * pl.psi_u[c] + pl.dn_u[c]);
                fd -= w * phase * (kI * kn * pl.psi_d[c] + pl.dn_d[c]);
            }
    }
    const double inv4pi = 1.0 / (4.0 * std::numbers::pi);
    return {fu * inv4pi, fd * inv4pi};
}

void save_record(const SurfacePhasorRecord& record, const std::string& basename) {
    require_complete(record, "save_record");
    nlohmann::json manifest;
    manifest["schema"] = "spinscat-record-1";
    manifest["periods"] = record.periods;
    manifest["omega"] = record.omega;
    manifest["box_lo"] = {record.box_lo.x, record.box_lo.y, record.box_lo.z};
    manifest["box_hi"] = {record.box_hi.x, record.box_hi.y, record.box_hi.z};
    nlohmann::json planes = nlohmann::json::array();
    for (const auto& pl : record.planes) {
        planes.push_back({{"axis", pl.axis},
                          {"side", pl.side},
                          {"plane_index", pl.plane_index},
                          {"coord", pl.coord},
                          {"n1", pl.n1},
                          {"n2", pl.n2},
                          {"lo1", pl.lo1},
                          {"lo2", pl.lo2},
                          {"d1", pl.d1},
                          {"d2", pl.d2},
                          {"o1", pl.o1},
                          {"o2", pl.o2}});
    }
    manifest["planes"] = planes;

    std::ofstream mj(basename + ".json");
    if (!mj) throw IngestError("save_record: cannot create manifest", 0);
    mj << manifest.dump(2) << "\n";

    std::ofstream bin(basename + ".bin", std::ios::binary);
    if (!bin) throw IngestError("save_record: cannot create data file", 0);
    auto dump = [&bin](const std::vector<cplx>& v) {
        bin.write(reinterpret_cast<const char*>(v.data()),
                  static_cast<std::streamsize>(v.size() * sizeof(cplx)));
    };
    for (const auto& pl : record.planes) {
        dump(pl.psi_u);
        dump(pl.psi_d);
        dump(pl.dn_u);
        dump(pl.dn_d);
    }
    if (!bin) throw IngestError("save_record: write failed", 0);
}

SurfacePhasorRecord load_record(const std::string& basename) {
    std::ifstream mj(basename + ".json");
    if (!mj) throw IngestError("load_record: cannot open manifest '" + basename + ".json'", 0);
    nlohmann::json manifest = nlohmann::json::parse(mj, nullptr, true);
    if (manifest.value("schema", "") != "spinscat-record-1")
        throw IngestError("load_record: unknown schema", 0);

    SurfacePhasorRecord rec;
    rec.periods = manifest.at("periods").get<int>();
    rec.omega = manifest.at("omega").get<double>();
    auto bl = manifest.at("box_lo");
    auto bh = manifest.at("box_hi");
    rec.box_lo = {bl[0].get<double>(), bl[1].get<double>(), bl[2].get<double>()};
    rec.box_hi = {bh[0].get<double>(), bh[1].get<double>(), bh[2].get<double>()};

    const auto& planes = manifest.at("planes");
    if (planes.size() != 6) throw IngestError("load_record: expected 6 planes", 0);

    std::ifstream bin(basename + ".bin", std::ios::binary);
    if (!bin) throw IngestError("load_record: cannot open data file", 0);
    std::size_t offset = 0;
    for (int p = 0; p < 6; ++p) {
        PlaneRecord& pl = rec.planes[p];
        const auto& jp = planes[p];
        pl.axis = jp.at("axis").get<int>();
        pl.side = jp.at("side").get<int>();
        pl.plane_index = jp.at("plane_index").get<int>();
        pl.coord = jp.at("coord").get<double>();
        pl.t1 = (pl.axis + 1) % 3;
        pl.t2 = (pl.axis + 2) % 3;
        pl.n1 = jp.at("n1").get<int>();
        pl.n2 = jp.at("n2").get<int>();
        pl.lo1 = jp.at("lo1").get<int>();
        pl.lo2 = jp.at("lo2").get<int>();
        pl.d1 = jp.at("d1").get<double>();
        pl.d2 = jp.at("d2").get<double>();
        pl.o1 = jp.at("o1").get<double>();
        pl.o2 = jp.at("o2").get<double>();
        const std::size_t count = static_cast<std::size_t>(pl.n1) * pl.n2;
        auto slurp = [&](std::vector<cplx>& v) {
            v.resize(count);
            bin.read(reinterpret_cast<char*>(v.data()),
                     static_cast<std::streamsize>(count * sizeof(cplx)));
            if (static_cast<std::size_t>(bin.gcount()) != count * sizeof(cplx))
                throw IngestError("load_record: truncated data file", offset);
            offset += count * sizeof(cplx);
        };
        slurp(pl.psi_u);
        slurp(pl.psi_d);
        slurp(pl.dn_u);
        slurp(pl.dn_d);
    }
    return rec;
}

}  // namespace spinscat
