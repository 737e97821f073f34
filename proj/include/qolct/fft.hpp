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

#ifndef QOLCT_FFT_HPP
#define QOLCT_FFT_HPP

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <vector>

namespace qolct::detail {

inline fftw_complex* as_fftw(std::vector<std::complex<double>>& v) {
    return reinterpret_cast<fftw_complex*>(v.data());
}

/// In-place complex DFT, sign -1 forward / +1 backward, unnormalized.
inline void fft_inplace(std::vector<std::complex<double>>& data, int sign) {
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(data.size()), as_fftw(data),
                                      as_fftw(data), sign, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

/// Evaluates G_m = sum_n a_n exp(-i alpha n m) for m = 0..M-1 in
/// O(L log L), L = next_pow2(N + M - 1), via the Bluestein identity
/// nm = (n^2 + m^2 - (m - n)^2) / 2. Any real alpha (not just 2*pi/N),
/// so arbitrary uniform output grids are supported.
inline std::vector<std::complex<double>> chirp_dft(
    const std::vector<std::complex<double>>& a, std::size_t M, double alpha) {
    using Cx = std::complex<double>;
    const std::size_t N = a.size();
    const std::size_t L = next_pow2(N + M - 1);
    const double half = alpha / 2.0;

    std::vector<Cx> u(L), v(L);
    for (std::size_t n = 0; n < N; ++n) {
        const double nn = static_cast<double>(n) * static_cast<double>(n);
        u[n] = a[n] * std::polar(1.0, -half * nn);
    }
    for (std::size_t m = 0; m < M; ++m) {
        const double mm = static_cast<double>(m) * static_cast<double>(m);
        v[m] = std::polar(1.0, half * mm);
    }
    for (std::size_t k = 1; k < N; ++k) {
        const double kk = static_cast<double>(k) * static_cast<double>(k);
        v[L - k] = std::polar(1.0, half * kk);
    }

    fft_inplace(u, FFTW_FORWARD);
    fft_inplace(v, FFTW_FORWARD);
    const double scale = 1.0 / static_cast<double>(L);
    for (std::size_t j = 0; j < L; ++j) u[j] *= v[j] * scale;
    fft_inplace(u, FFTW_BACKWARD);

    std::vector<Cx> out(M);
    for (std::size_t m = 0; m < M; ++m) {
        const double mm = static_cast<double>(m) * static_cast<double>(m);
        out[m] = u[m] * std::polar(1.0, -half * mm);
    }
    return out;
}

}  // namespace qolct::detail

#endif  // QOLCT_FFT_HPP
