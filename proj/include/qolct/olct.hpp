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

// Scalar (one complex plane) offset linear canonical transform
//
//   X(w) = integral f(t) K(t, w) dt,
//   K(t, w) = exp( i (A t^2 - 2 t (w - p) - 2 w (D p - B q) + D (w^2 + p^2))
//                  / (2B) ) / sqrt(i 2 pi B),
//
// discretized with rectangle weights on uniform grids. Two evaluation
// paths: direct O(N*M) quadrature, and a chirp/FFT factorization costing
// O(L log L) that evaluates the same sums on arbitrary uniform w grids.

#ifndef QOLCT_OLCT_HPP
#define QOLCT_OLCT_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qolct/fft.hpp"
#include "qolct/grid.hpp"
#include "qolct/params.hpp"

namespace qolct {

enum class Method { direct, fast };

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// 1 / sqrt(i 2 pi B), principal square root. For B < 0 the argument
/// i 2 pi B lies on the negative imaginary axis and the principal branch
/// gives arg = -pi/4.
inline ComplexE2 kernel_constant(double B) {
    return 1.0 / std::sqrt(ComplexE2(0.0, kTwoPi * B));
}

/// Kernel phase (the exponent divided by i).
inline double kernel_phase(const OlctParams& m, double t, double w) {
    return (m.A * t * t - 2.0 * t * (w - m.p) - 2.0 * w * (m.D * m.p - m.B * m.q) +
            m.D * (w * w + m.p * m.p)) /
           (2.0 * m.B);
}

/// Kernel value K(t, w). |K| = 1 / sqrt(2 pi |B|) everywhere.
inline ComplexE2 kernel_eval(const OlctParams& m, double t, double w) {
    m.require_transformable();
    return kernel_constant(m.B) * std::polar(1.0, kernel_phase(m, t, w));
}

/// Default w grid for a transform from `tgrid`: M = N points at spacing
/// dw = 2 pi |B| / (N dt), centered on zero. Under this contract
/// (dt * dw * N = 2 pi |B|) the discrete transform is exactly invertible
/// and energy preserving, independent of the signal.
inline Grid contract_spectrum_grid(const Grid& tgrid, const OlctParams& m) {
    m.require_transformable();
    const double dw = kTwoPi * std::abs(m.B) / (tgrid.span());
    return Grid::centered(tgrid.count, dw);
}

/// Default t grid for an inverse transform from `wgrid`; same contract.
inline Grid contract_signal_grid(const Grid& wgrid, const OlctParams& m) {
    m.require_transformable();
    const double dt = kTwoPi * std::abs(m.B) / (wgrid.span());
    return Grid::centered(wgrid.count, dt);
}

/// True when the grid pair satisfies the sampling contract to 1e-6.
inline bool satisfies_sampling_contract(const Grid& tgrid, const Grid& wgrid,
                                        const OlctParams& m) {
    if (tgrid.count != wgrid.count) return false;
    const double product = tgrid.step * wgrid.step * static_cast<double>(tgrid.count);
    return std::abs(product / (kTwoPi * std::abs(m.B)) - 1.0) <= 1e-6;
}

/// Direct quadrature: X_m = dt * sum_n f_n K(t_n, w_m). The O(N*M)
/// reference path.
inline ComplexSpectrum olct_direct(const ComplexSignal& f, const OlctParams& m,
                                   const Grid& wgrid) {
    m.require_transformable();
    ComplexSpectrum out = ComplexSpectrum::zeros(wgrid);
    for (std::size_t mi = 0; mi < wgrid.count; ++mi) {
        const double w = wgrid[mi];
        ComplexE2 acc{0.0, 0.0};
        for (std::size_t n = 0; n < f.grid.count; ++n)
            acc += f.samples[n] * std::polar(1.0, kernel_phase(m, f.grid[n], w));
        out.samples[mi] = acc * f.grid.step * kernel_constant(m.B);
    }
    return out;
}

/// Chirp-factorized path. The kernel exponent splits into a t-only chirp,
/// a w-only chirp, and the cross term -t w / B; with t = t0 + n dt,
/// w = w0 + m dw the cross term reduces to a fractional-frequency DFT
/// evaluated by chirp_dft. Matches olct_direct to rounding on any grids.
inline ComplexSpectrum olct_fast(const ComplexSignal& f, const OlctParams& m,
                                 const Grid& wgrid) {
    m.require_transformable();
    const Grid& tg = f.grid;
    const std::size_t N = tg.count, M = wgrid.count;
    const double alpha = tg.step * wgrid.step / m.B;
    const double inv2B = 1.0 / (2.0 * m.B);

    std::vector<ComplexE2> a(N);
    for (std::size_t n = 0; n < N; ++n) {
        const double t = tg[n];
        const double phase =
            (m.A * t * t + 2.0 * m.p * t) * inv2B - static_cast<double>(n) * tg.step * wgrid.start / m.B;
        a[n] = f.samples[n] * std::polar(1.0, phase);
    }

    std::vector<ComplexE2> conv = detail::chirp_dft(a, M, alpha);

    const ComplexE2 S = kernel_constant(m.B);
    ComplexSpectrum out = ComplexSpectrum::zeros(wgrid);
    for (std::size_t mi = 0; mi < M; ++mi) {
        const double w = wgrid[mi];
        const double phase = (m.D * w * w - 2.0 * w * (m.D * m.p - m.B * m.q) + m.D * m.p * m.p) * inv2B -
                             tg.start * w / m.B;
        out.samples[mi] = S * std::polar(tg.step, phase) * conv[mi];
    }
    return out;
}

inline ComplexSpectrum olct_forward(const ComplexSignal& f, const OlctParams& m,
                                    const Grid& wgrid, Method method) {
    return method == Method::direct ? olct_direct(f, m, wgrid) : olct_fast(f, m, wgrid);
}

/// Constant phase relating the inverse-parameter kernel to the true
/// (conjugate) inverse kernel:
///   conj(K_m(t, w)) = inverse_phase(m) * K_{inverse_params(m)}(w, t).
/// It is 1 whenever p = q = 0.
inline ComplexE2 inverse_phase(const OlctParams& m) {
    const double pp = m.B * m.q - m.D * m.p;
    return std::polar(1.0, (m.A * pp * pp - m.D * m.p * m.p) / (2.0 * m.B));
}

/// Inverse transform f(t) = integral X(w) conj(K(t, w)) dw, computed as the
/// forward transform with inverse parameters times inverse_phase. With
/// contract grids the round trip is exact up to rounding.
inline ComplexSignal olct_inverse(const ComplexSpectrum& X, const OlctParams& m,
                                  const Grid& tgrid, Method method = Method::fast) {
    const ComplexSpectrum back =
        olct_forward(as_signal(X), inverse_params(m), tgrid, method);
    const ComplexE2 kappa = inverse_phase(m);
    ComplexSignal out = ComplexSignal::zeros(tgrid);
    for (std::size_t n = 0; n < tgrid.count; ++n) out.samples[n] = back.samples[n] * kappa;
    return out;
}

/// Chirp-weighted convolution
///   (f (*) g)(t) = 1/sqrt(i 2 pi B) * integral f(s) g(t - s)
///                  exp(i A s (s - t) / B) ds,
/// the time-domain operation satisfying
///   X_{f(*)g}(w) = X_f(w) X_g(w) exp(i (2 w (D p - B q) - D (w^2 + p^2)) / (2B)).
/// Direct O(N^2) evaluation; the shared grid must contain t = 0 as a sample
/// so that t - s lands on the grid.
inline ComplexSignal olct_convolve(const ComplexSignal& f, const ComplexSignal& g,
                                   const OlctParams& m) {
    m.require_transformable();
    detail::require_shared_grid(f.grid, g.grid, "olct_convolve");
    const Grid& tg = f.grid;
    const double n0_real = -tg.start / tg.step;
    const double n0_rounded = std::round(n0_real);
    if (std::abs(n0_real - n0_rounded) > 1e-9 * std::max(1.0, std::abs(n0_real)))
        throw grid_mismatch("olct_convolve: grid must contain t = 0 as a sample");
    const std::ptrdiff_t n0 = static_cast<std::ptrdiff_t>(n0_rounded);
    const std::ptrdiff_t N = static_cast<std::ptrdiff_t>(tg.count);

    const double rate = m.A / m.B;
    ComplexSignal out = ComplexSignal::zeros(tg);
    for (std::ptrdiff_t mi = 0; mi < N; ++mi) {
        const double t = tg[static_cast<std::size_t>(mi)];
        ComplexE2 acc{0.0, 0.0};
        for (std::ptrdiff_t n = 0; n < N; ++n) {
            const std::ptrdiff_t k = mi - n + n0;
            if (k < 0 || k >= N) continue;
            const double s = tg[static_cast<std::size_t>(n)];
            acc += f.samples[static_cast<std::size_t>(n)] *
                   g.samples[static_cast<std::size_t>(k)] *
                   std::polar(1.0, rate * s * (s - t));
        }
        out.samples[static_cast<std::size_t>(mi)] = acc;
    }
    const ComplexE2 S = kernel_constant(m.B) * tg.step;
    for (auto& v : out.samples) v *= S;
    return out;
}

/// The transform-domain factor of the convolution identity,
/// exp(i (2 w (D p - B q) - D (w^2 + p^2)) / (2B)), sampled on `wgrid`.
/// Set `w2_only` to drop the constant D p^2 term (the truncated variant;
/// the two coincide when p = 0).
inline std::vector<ComplexE2> convolution_phase(const OlctParams& m, const Grid& wgrid,
                                                bool w2_only = false) {
    std::vector<ComplexE2> out(wgrid.count);
    const double inv2B = 1.0 / (2.0 * m.B);
    for (std::size_t mi = 0; mi < wgrid.count; ++mi) {
        const double w = wgrid[mi];
        double phase = (2.0 * w * (m.D * m.p - m.B * m.q) - m.D * w * w) * inv2B;
        if (!w2_only) phase -= m.D * m.p * m.p * inv2B;
        out[mi] = std::polar(1.0, phase);
    }
    return out;
}

}  // namespace qolct

#endif  // QOLCT_OLCT_HPP
