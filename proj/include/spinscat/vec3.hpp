#pragma once

#include <array>
#include <cmath>

namespace spinscat {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return {v.x / n, v.y / n, v.z / n};
}

/// Column-major-free tiny 3x3 rotation matrix (row i, col j).
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    static Mat3 identity() {
        Mat3 r;
        r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
        return r;
    }
    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }
    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
        return r;
    }
};

/// Rodrigues rotation about unit axis n by angle chi (radians).
inline Mat3 axis_angle(const Vec3& n, double chi) {
    const double c = std::cos(chi), s = std::sin(chi), t = 1.0 - c;
    Mat3 r;
    r.m[0][0] = c + n.x * n.x * t;
    r.m[0][1] = n.x * n.y * t - n.z * s;
    r.m[0][2] = n.x * n.z * t + n.y * s;
    r.m[1][0] = n.y * n.x * t + n.z * s;
    r.m[1][1] = c + n.y * n.y * t;
    r.m[1][2] = n.y * n.z * t - n.x * s;
    r.m[2][0] = n.z * n.x * t - n.y * s;
    r.m[2][1] = n.z * n.y * t + n.x * s;
    r.m[2][2] = c + n.z * n.z * t;
    return r;
}

inline Mat3 rot_x(double a) { return axis_angle({1, 0, 0}, a); }
inline Mat3 rot_y(double a) { return axis_angle({0, 1, 0}, a); }
inline Mat3 rot_z(double a) { return axis_angle({0, 0, 1}, a); }

}  // namespace spinscat
