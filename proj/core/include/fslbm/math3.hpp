#pragma once

#include <array>
#include <cmath>

namespace fslbm {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    constexpr bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    constexpr double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec3 normalized() const {
        const double n = norm();
        return n > 0.0 ? *this / n : Vec3{};
    }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> a{};

    static constexpr Mat3 zero() { return Mat3{}; }
    static constexpr Mat3 identity() {
        Mat3 m;
        m.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return m;
    }
    static constexpr Mat3 diagonal(double dx, double dy, double dz) {
        Mat3 m;
        m.a = {dx, 0, 0, 0, dy, 0, 0, 0, dz};
        return m;
    }

    constexpr double& operator()(int r, int c) { return a[3 * r + c]; }
    constexpr double operator()(int r, int c) const { return a[3 * r + c]; }

    constexpr Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    constexpr Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    constexpr Mat3 operator*(double s) const {
        Mat3 r;
        for (int i = 0; i < 9; ++i) r.a[i] = a[i] * s;
        return r;
    }
    constexpr Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }
    constexpr Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    constexpr Mat3 transposed() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }
    constexpr double max_abs() const {
        double m = 0.0;
        for (double v : a) m = std::max(m, v < 0 ? -v : v);
        return m;
    }
};

/// Unit quaternion (w, x, y, z) representing a rotation.
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    constexpr Quat() = default;
    constexpr Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static Quat from_axis_angle(const Vec3& axis, double angle) {
        const Vec3 u = axis.normalized();
        const double h = 0.5 * angle;
        const double s = std::sin(h);
        return {std::cos(h), s * u.x, s * u.y, s * u.z};
    }

    /// exp(v/2) as a rotation by |v| about v; stable for small |v|.
    static Quat exp_rotation(const Vec3& v) {
        const double a = v.norm();
        if (a < 1e-12) {
            Quat q{1.0, 0.5 * v.x, 0.5 * v.y, 0.5 * v.z};
            return q.normalized();
        }
        const double s = std::sin(0.5 * a) / a;
        return {std::cos(0.5 * a), s * v.x, s * v.y, s * v.z};
    }

    constexpr Quat operator*(const Quat& q) const {
        return {w * q.w - x * q.x - y * q.y - z * q.z,
                w * q.x + x * q.w + y * q.z - z * q.y,
                w * q.y - x * q.z + y * q.w + z * q.x,
                w * q.z + x * q.y - y * q.x + z * q.w};
    }

    constexpr Quat conjugate() const { return {w, -x, -y, -z}; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quat normalized() const {
        const double n = norm();
        return {w / n, x / n, y / n, z / n};
    }

    Vec3 rotate(const Vec3& v) const {
        // q v q*, expanded
        const Vec3 u{x, y, z};
        const Vec3 t = 2.0 * u.cross(v);
        return v + w * t + u.cross(t);
    }
    Vec3 rotate_inverse(const Vec3& v) const { return conjugate().rotate(v); }

    constexpr Mat3 to_matrix() const {
        Mat3 m;
        m.a = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z),     2 * (x * z + w * y),
               2 * (x * y + w * z),     1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
               2 * (x * z - w * y),     2 * (y * z + w * x),     1 - 2 * (x * x + y * y)};
        return m;
    }

    /// Rotation angle about the +x axis (roll), in radians.
    double roll() const { return std::atan2(2.0 * (w * x + y * z), 1.0 - 2.0 * (x * x + y * y)); }
};

constexpr double deg_to_rad(double d) { return d * M_PI / 180.0; }
constexpr double rad_to_deg(double r) { return r * 180.0 / M_PI; }

} // namespace fslbm
