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

#ifndef QOLCT_PARAMS_HPP
#define QOLCT_PARAMS_HPP

#include <cmath>
#include <string>

#include "qolct/errors.hpp"

namespace qolct {

inline constexpr double kDetTolerance = 1e-12;
inline constexpr double kMinB = 1e-12;

/// The six-parameter matrix (A, B | p; C, D | q) with AD - BC = 1.
///
/// The determinant is validated on construction. B = 0 parameter sets are
/// representable (they arise as composition operands and as composition
/// results) but are rejected by every transform entry point, which calls
/// require_transformable().
struct OlctParams {
    double A = 0.0, B = 1.0, C = -1.0, D = 0.0;
    double p = 0.0, q = 0.0;

    OlctParams() = default;
    OlctParams(double A_, double B_, double C_, double D_, double p_ = 0.0, double q_ = 0.0)
        : A(A_), B(B_), C(C_), D(D_), p(p_), q(q_) {
        const double det = A * D - B * C;
        if (std::abs(det - 1.0) > kDetTolerance)
            throw invalid_params("OlctParams: AD - BC must equal 1 (got " +
                                 std::to_string(det) + ")");
    }

    bool is_transformable() const { return std::abs(B) > kMinB; }

    void require_transformable() const {
        if (!is_transformable())
            throw invalid_params("OlctParams: B must be nonzero for the transform");
    }
};

/// Parameters of the inverse transform:
/// (D, -B | Bq - Dp; -C, A | Cp - Aq).
inline OlctParams inverse_params(const OlctParams& m) {
    return {m.D, -m.B, -m.C, m.A, m.B * m.q - m.D * m.p, m.C * m.p - m.A * m.q};
}

/// Conjugate-companion parameters (A, -B | p; -C, D | -q): the parameter set
/// whose kernel is the pointwise complex conjugate of this one's,
/// K_params(t, w) = conj(K_conjugate_companion_params(t, w)).
inline OlctParams conjugate_companion_params(const OlctParams& m) {
    return {m.A, -m.B, -m.C, m.D, m.p, -m.q};
}

/// Composition: applying `inner` first and `outer` second corresponds to the
/// augmented-matrix product (matrix part outer*inner, offsets
/// M_outer*(p_inner, q_inner) + (p_outer, q_outer)).
///
/// Throws when the composed matrix has B = 0: the composition exists but
/// leaves the class of transforms implemented here.
inline OlctParams compose_params(const OlctParams& outer, const OlctParams& inner) {
    OlctParams r{outer.A * inner.A + outer.B * inner.C,
                 outer.A * inner.B + outer.B * inner.D,
                 outer.C * inner.A + outer.D * inner.C,
                 outer.C * inner.B + outer.D * inner.D,
                 outer.A * inner.p + outer.B * inner.q + outer.p,
                 outer.C * inner.p + outer.D * inner.q + outer.q};
    return r;
}

/// Fourier preset (0, 1, -1, 0 | 0, 0).
inline OlctParams qft_params() { return {0.0, 1.0, -1.0, 0.0, 0.0, 0.0}; }

/// Linear canonical preset (A, B, C, D | 0, 0). Validates AD - BC = 1, B != 0.
inline OlctParams qlct_params(double A, double B, double C, double D) {
    OlctParams r{A, B, C, D, 0.0, 0.0};
    r.require_transformable();
    return r;
}

/// Fractional Fourier preset (cos t, sin t, -sin t, cos t | 0, 0).
/// Entries within 1e-15 of zero are snapped so that e.g. theta = pi/2
/// yields the Fourier preset bit-exactly; theta a multiple of pi (B = 0)
/// is rejected.
inline OlctParams qfrft_params(double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    if (std::abs(c) < 1e-15) c = 0.0;
    if (std::abs(s) < 1e-15) s = 0.0;
    OlctParams r{c, s, -s, c, 0.0, 0.0};
    r.require_transformable();
    return r;
}

}  // namespace qolct

#endif  // QOLCT_PARAMS_HPP
