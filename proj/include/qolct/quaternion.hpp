/******************************************************************************
 * Copyright 2026 The qolct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/

#ifndef QOLCT_QUATERNION_HPP
#define QOLCT_QUATERNION_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace qolct {

/// An element of the plane span{1, e2}. The transform kernels live here,
/// so the whole scalar engine runs on std::complex with e2 as the
/// imaginary unit.
using ComplexE2 = std::complex<double>;

/// Hamilton quaternion w + e1*x + e2*y + e3*z with
/// e1*e2 = -e2*e1 = e3, e2*e3 = -e3*e2 = e1, e3*e1 = -e1*e3 = e2 and
/// e1^2 = e2^2 = e3^2 = -1.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    explicit constexpr Quaternion(double real) : w(real) {}

    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(Quaternion a, double s) { return a *= s; }
    friend Quaternion operator*(double s, Quaternion a) { return a *= s; }
    friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline constexpr Quaternion kE1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kE2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kE3{0.0, 0.0, 0.0, 1.0};

/// Hamilton product. Noncommutative.
inline Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

/// Quaternion conjugate: negates the e1, e2, e3 parts. (ab)^c = b^c a^c.
inline Quaternion qconj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Multiplicative inverse a^c / |a|^2. Throws std::domain_error on zero.
inline Quaternion qinv(const Quaternion& a) {
    const double n2 = a.norm_sq();
    if (n2 == 0.0) throw std::domain_error("qinv: zero quaternion has no inverse");
    return qconj(a) * (1.0 / n2);
}

/// Embeds z = re + e2*im into the quaternions.
inline Quaternion to_quaternion(ComplexE2 z) { return {z.real(), 0.0, z.imag(), 0.0}; }

/// True when the e1 and e3 components vanish (within tol), i.e. the value
/// lies in span{1, e2} and commutes with the transform kernels.
inline bool is_e2_complex(const Quaternion& a, double tol = 0.0) {
    return std::abs(a.x) <= tol && std::abs(a.z) <= tol;
}

/// Symplectic split a = u + e1*v with u, v in span{1, e2}:
/// u = w + e2*y, v = x + e2*z. Exact (component shuffling only).
inline std::pair<ComplexE2, ComplexE2> symplectic_split(const Quaternion& a) {
    return {ComplexE2{a.w, a.y}, ComplexE2{a.x, a.z}};
}

/// Inverse of symplectic_split: u + e1*v.
inline Quaternion symplectic_join(ComplexE2 u, ComplexE2 v) {
    return {u.real(), v.real(), u.imag(), v.imag()};
}

/// Right-multiplies a general quaternion by an element of span{1, e2}.
/// Used for kernel application; cheaper than a full qmul.
inline Quaternion qmul_e2(const Quaternion& a, ComplexE2 k) {
    const double kr = k.real(), ki = k.imag();
    return {a.w * kr - a.y * ki,
            a.x * kr - a.z * ki,
            a.w * ki + a.y * kr,
            a.x * ki + a.z * kr};
}

}  // namespace qolct

#endif  // QOLCT_QUATERNION_HPP
