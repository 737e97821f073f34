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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qolct/olct.hpp"

using namespace qolct;

namespace {

constexpr double kPi = std::numbers::pi;

OlctParams random_valid_params(std::mt19937_64& rng, bool offsets = true) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::uniform_real_distribution<double> babs(0.5, 2.0);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    const double A = d(rng);
    const double B = babs(rng) * (rng() % 2 ? 1.0 : -1.0);
    const double p = offsets ? off(rng) : 0.0;
    const double q = offsets ? off(rng) : 0.0;
    if (std::abs(A) > 0.1) {
        const double C = d(rng);
        return {A, B, C, (1.0 + B * C) / A, p, q};
    }
    const double D = d(rng);
    return {A, B, (A * D - 1.0) / B, D, p, q};
}

/// Gaussian-enveloped tone, well contained in [-8, 8).
ComplexSignal smooth_signal(std::mt19937_64& rng, const Grid& g) {
    std::uniform_real_distribution<double> c(-0.5, 0.5), s(0.6, 1.1), fr(-2.0, 2.0);
    const double c0 = c(rng), s0 = s(rng), f0 = fr(rng);
    ComplexSignal out = ComplexSignal::zeros(g);
    for (std::size_t n = 0; n < g.count; ++n) {
        const double t = g[n];
        const double env = std::exp(-(t - c0) * (t - c0) / (2.0 * s0 * s0));
        out.samples[n] = std::polar(env, f0 * t);
    }
    return out;
}

double rel_err(const ComplexSpectrum& got, const ComplexSpectrum& want) {
    return rel_l2_error(got, want);
}

}  // namespace

TEST_CASE("kernel values for the Fourier parameter set") {
    const OlctParams ft = qft_params();
    const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * kPi);

    // K(0,0) = exp(-e2 pi/4)/sqrt(2 pi)
    const ComplexE2 k00 = kernel_eval(ft, 0.0, 0.0);
    CHECK(std::abs(k00.real() - 0.28209479177387814) <= 1e-15);
    CHECK(std::abs(k00.imag() + 0.28209479177387814) <= 1e-15);

    // general point: exp(-e2 pi/4) exp(-e2 t w)/sqrt(2 pi)
    const double t = 0.7, w = -1.3;
    const ComplexE2 want =
        inv_sqrt_2pi * std::polar(1.0, -kPi / 4.0) * std::polar(1.0, -t * w);
    CHECK(std::abs(kernel_eval(ft, t, w) - want) <= 1e-15);
}

TEST_CASE("kernel modulus") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const OlctParams m = random_valid_params(rng);
        const double want = 1.0 / std::sqrt(2.0 * kPi * std::abs(m.B));
        CHECK(std::abs(std::abs(kernel_eval(m, d(rng), d(rng))) - want) <= 1e-14);
    }
}

TEST_CASE("kernel conjugation against inverse parameters") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> d(-4.0, 4.0);

    // with zero offsets the relation is exact as stated
    for (int i = 0; i < 200; ++i) {
        const OlctParams m = random_valid_params(rng, /*offsets=*/false);
        const double t = d(rng), w = d(rng);
        const ComplexE2 lhs = kernel_eval(inverse_params(m), w, t);
        const ComplexE2 rhs = std::conj(kernel_eval(m, t, w));
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }

    // with offsets it holds after the constant inverse_phase factor
    double raw_dev = 0.0;
    for (int i = 0; i < 200; ++i) {
        const OlctParams m = random_valid_params(rng, /*offsets=*/true);
        const double t = d(rng), w = d(rng);
        const ComplexE2 lhs = kernel_eval(inverse_params(m), w, t);
        const ComplexE2 rhs = std::conj(kernel_eval(m, t, w));
        CHECK(std::abs(lhs * inverse_phase(m) - rhs) <= 1e-12);
        raw_dev = std::max(raw_dev, std::abs(lhs - rhs));
    }
    // the raw relation genuinely fails off the p = q = 0 family
    CHECK(raw_dev > 1e-3);

    // conjugate companion parameters give the conjugate kernel with no
    // constant at all
    for (int i = 0; i < 200; ++i) {
        const OlctParams m = random_valid_params(rng, /*offsets=*/true);
        const double t = d(rng), w = d(rng);
        const ComplexE2 lhs = kernel_eval(m, t, w);
        const ComplexE2 rhs = std::conj(kernel_eval(conjugate_companion_params(m), t, w));
        CHECK(std::abs(lhs - rhs) <= 1e-14);
    }
}

TEST_CASE("direct transform basics") {
    const Grid tg(-8.0, 16.0 / 256, 256);
    const OlctParams m(0.6, 1.1, -0.4, (1.0 + 1.1 * -0.4) / 0.6, 0.2, -0.3);
    const Grid wg = contract_spectrum_grid(tg, m);

    SECTION("zero maps to zero") {
        const ComplexSpectrum X = olct_direct(ComplexSignal::zeros(tg), m, wg);
        for (const auto& s : X.samples) CHECK(std::abs(s) == 0.0);
    }

    SECTION("unit sample picks out one kernel row") {
        ComplexSignal f = ComplexSignal::zeros(tg);
        f.samples[100] = 1.0;
        const ComplexSpectrum X = olct_direct(f, m, wg);
        for (std::size_t mi = 0; mi < wg.count; mi += 17) {
            const ComplexE2 want = tg.step * kernel_eval(m, tg[100], wg[mi]);
            CHECK(std::abs(X.samples[mi] - want) <= 1e-15);
        }
    }
}

TEST_CASE("Gaussian under the Fourier parameter set") {
    // f(t) = exp(-t^2/2) transforms to exp(-e2 pi/4) exp(-w^2/2)
    const Grid tg(-8.0, 16.0 / 1024, 1024);
    ComplexSignal f = ComplexSignal::zeros(tg);
    for (std::size_t n = 0; n < tg.count; ++n)
        f.samples[n] = std::exp(-tg[n] * tg[n] / 2.0);
    const OlctParams ft = qft_params();
    const Grid wg = contract_spectrum_grid(tg, ft);
    const ComplexSpectrum X = olct_direct(f, ft, wg);
    const ComplexE2 rot = std::polar(1.0, -kPi / 4.0);
    for (std::size_t mi = 0; mi < wg.count; ++mi) {
        const double w = wg[mi];
        if (std::abs(w) > 4.0) continue;
        CHECK(std::abs(X.samples[mi] - rot * std::exp(-w * w / 2.0)) <= 1e-8);
    }
    const ComplexSpectrum Xf = olct_fast(f, ft, wg);
    CHECK(rel_err(Xf, X) <= 1e-9);
}

TEST_CASE("fast path equals direct path on arbitrary grids") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (const std::size_t N : {97u, 128u, 255u, 512u}) {
        const Grid tg(-5.0 - d(rng), 11.0 / static_cast<double>(N), N);
        ComplexSignal f = ComplexSignal::zeros(tg);
        for (auto& s : f.samples) s = {d(rng), d(rng)};
        const OlctParams m = random_valid_params(rng);

        const Grid contract = contract_spectrum_grid(tg, m);
        CHECK(rel_err(olct_fast(f, m, contract), olct_direct(f, m, contract)) <= 1e-9);

        const Grid odd(-7.3, 0.11, N + 31);
        CHECK(rel_err(olct_fast(f, m, odd), olct_direct(f, m, odd)) <= 1e-9);
    }
}

TEST_CASE("transform is linear in the signal") {
    std::mt19937_64 rng(24);
    const Grid tg(-8.0, 16.0 / 512, 512);
    const OlctParams m = random_valid_params(rng);
    const Grid wg = contract_spectrum_grid(tg, m);
    const ComplexSignal f = smooth_signal(rng, tg);
    const ComplexSignal g = smooth_signal(rng, tg);
    const ComplexE2 a{0.7, -1.2}, b{-0.3, 0.4};

    ComplexSignal combo = ComplexSignal::zeros(tg);
    for (std::size_t n = 0; n < tg.count; ++n)
        combo.samples[n] = a * f.samples[n] + b * g.samples[n];

    const ComplexSpectrum L = olct_fast(combo, m, wg);
    const ComplexSpectrum F = olct_fast(f, m, wg);
    const ComplexSpectrum G = olct_fast(g, m, wg);
    ComplexSpectrum R = ComplexSpectrum::zeros(wg);
    for (std::size_t n = 0; n < wg.count; ++n)
        R.samples[n] = a * F.samples[n] + b * G.samples[n];
    CHECK(rel_err(L, R) <= 1e-12);
}

TEST_CASE("round trips") {
    std::mt19937_64 rng(25);
    const Grid tg(-8.0, 16.0 / 1024, 1024);

    SECTION("zero spectrum inverts to zero") {
        const OlctParams m = random_valid_params(rng);
        const Grid wg = contract_spectrum_grid(tg, m);
        const ComplexSignal f = olct_inverse(ComplexSpectrum::zeros(wg), m, tg);
        for (const auto& s : f.samples) CHECK(std::abs(s) == 0.0);
    }

    SECTION("Gaussian under the Fourier preset") {
        ComplexSignal f = ComplexSignal::zeros(tg);
        for (std::size_t n = 0; n < tg.count; ++n)
            f.samples[n] = std::exp(-tg[n] * tg[n] / 2.0);
        const OlctParams ft = qft_params();
        const Grid wg = contract_spectrum_grid(tg, ft);
        const ComplexSignal back = olct_inverse(olct_fast(f, ft, wg), ft, tg);
        CHECK(rel_l2_error(back, f) <= 1e-6);
    }

    SECTION("random parameters, both methods") {
        for (int i = 0; i < 10; ++i) {
            const OlctParams m = random_valid_params(rng);
            const ComplexSignal f = smooth_signal(rng, tg);
            const Grid wg = contract_spectrum_grid(tg, m);
            const ComplexSignal back = olct_inverse(olct_fast(f, m, wg), m, tg);
            CHECK(rel_l2_error(back, f) <= 1e-6);
        }
        const OlctParams m = random_valid_params(rng);
        const ComplexSignal f = smooth_signal(rng, tg);
        const Grid wg = contract_spectrum_grid(tg, m);
        const ComplexSignal back =
            olct_inverse(olct_direct(f, m, wg), m, tg, Method::direct);
        CHECK(rel_l2_error(back, f) <= 1e-6);
    }
}

TEST_CASE("Parseval on contract grids") {
    std::mt19937_64 rng(26);
    const Grid tg(-8.0, 16.0 / 512, 512);
    for (int i = 0; i < 5; ++i) {
        const OlctParams m = random_valid_params(rng);
        const ComplexSignal f = smooth_signal(rng, tg);
        const ComplexSpectrum X = olct_fast(f, m, contract_spectrum_grid(tg, m));
        const double et = l2_norm(f), ew = l2_norm(X);
        CHECK(std::abs(et - ew) <= 1e-6 * et);
    }
}

TEST_CASE("chirp-weighted convolution") {
    const Grid tg(-8.0, 16.0 / 512, 512);

    SECTION("sifting against a scaled unit sample, A = 0") {
        std::mt19937_64 rng(27);
        const OlctParams m(0.0, 1.3, -1.0 / 1.3, 0.0, 0.4, -0.2);
        const ComplexSignal f = smooth_signal(rng, tg);
        ComplexSignal delta = ComplexSignal::zeros(tg);
        const std::size_t zero_idx = tg.count / 2;
        REQUIRE(tg[zero_idx] == 0.0);
        delta.samples[zero_idx] = {2.0, -1.0};
        const ComplexSignal c = olct_convolve(f, delta, m);
        const ComplexE2 scale = kernel_constant(m.B) * tg.step * ComplexE2{2.0, -1.0};
        for (std::size_t n = 0; n < tg.count; n += 13)
            CHECK(std::abs(c.samples[n] - scale * f.samples[n]) <= 1e-14);
    }

    SECTION("transform-domain identity, Gaussians under the Fourier preset") {
        const OlctParams ft = qft_params();
        ComplexSignal f = ComplexSignal::zeros(tg);
        for (std::size_t n = 0; n < tg.count; ++n)
            f.samples[n] = std::exp(-tg[n] * tg[n]);
        const ComplexSignal g = f;
        const Grid wg = contract_spectrum_grid(tg, ft);
        const ComplexSpectrum lhs = olct_direct(olct_convolve(f, g, ft), ft, wg);
        const ComplexSpectrum F = olct_direct(f, ft, wg);
        const ComplexSpectrum G = olct_direct(g, ft, wg);
        const auto E = convolution_phase(ft, wg);
        ComplexSpectrum rhs = ComplexSpectrum::zeros(wg);
        for (std::size_t n = 0; n < wg.count; ++n)
            rhs.samples[n] = F.samples[n] * G.samples[n] * E[n];
        CHECK(rel_err(lhs, rhs) <= 1e-7);
    }

    SECTION("transform-domain identity with offsets needs the full phase") {
        std::mt19937_64 rng(28);
        const OlctParams m(1.0, 1.0, 0.0, 1.0, 0.3, -0.7);
        ComplexSignal f = ComplexSignal::zeros(tg);
        ComplexSignal g = ComplexSignal::zeros(tg);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (std::size_t n = 0; n < tg.count; ++n) {
            const double t = tg[n];
            const double env = std::exp(-t * t / 1.4);
            f.samples[n] = env * ComplexE2{d(rng), d(rng)};
            g.samples[n] = env * ComplexE2{d(rng), d(rng)};
        }
        const Grid wg = contract_spectrum_grid(tg, m);
        const ComplexSpectrum lhs = olct_fast(olct_convolve(f, g, m), m, wg);
        const ComplexSpectrum F = olct_fast(f, m, wg);
        const ComplexSpectrum G = olct_fast(g, m, wg);
        const auto E = convolution_phase(m, wg);
        const auto Ew2 = convolution_phase(m, wg, /*w2_only=*/true);
        ComplexSpectrum rhs = ComplexSpectrum::zeros(wg);
        ComplexSpectrum rhs_w2 = ComplexSpectrum::zeros(wg);
        for (std::size_t n = 0; n < wg.count; ++n) {
            rhs.samples[n] = F.samples[n] * G.samples[n] * E[n];
            rhs_w2.samples[n] = F.samples[n] * G.samples[n] * Ew2[n];
        }
        CHECK(rel_err(lhs, rhs) <= 1e-6);
        // the w^2-only variant misses the constant exp(-e2 D p^2 / 2B)
        CHECK(rel_err(lhs, rhs_w2) > 1e-3);
    }

    SECTION("grid alignment is required") {
        const OlctParams ft = qft_params();
        const Grid misaligned(-8.0 + 0.3 * (16.0 / 512), 16.0 / 512, 512);
        const ComplexSignal f = ComplexSignal::zeros(misaligned);
        CHECK_THROWS_AS(olct_convolve(f, f, ft), grid_mismatch);
    }
}

TEST_CASE("composition up to a unimodular constant") {
    std::mt19937_64 rng(29);
    const std::size_t N = 512;
    const Grid tg(-8.0, 16.0 / static_cast<double>(N), N);
    for (int trial = 0; trial < 4; ++trial) {
        OlctParams outer = qft_params(), inner = qft_params(), both = qft_params();
        for (;;) {
            std::uniform_real_distribution<double> da(0.3, 1.2), db(0.8, 1.25),
                dc(-1.0, 1.0), dp(-0.3, 0.3);
            const double A1 = da(rng) * (rng() % 2 ? 1 : -1), B1 = db(rng) * (rng() % 2 ? 1 : -1);
            const double C1 = dc(rng), D1 = (1.0 + B1 * C1) / A1;
            const double A2 = da(rng) * (rng() % 2 ? 1 : -1), B2 = db(rng) * (rng() % 2 ? 1 : -1);
            const double C2 = dc(rng), D2 = (1.0 + B2 * C2) / A2;
            if (std::abs(D1) > 2.5 || std::abs(D2) > 2.5) continue;
            outer = {A1, B1, C1, D1, dp(rng), dp(rng)};
            inner = {A2, B2, C2, D2, dp(rng), dp(rng)};
            both = compose_params(outer, inner);
            if (std::abs(both.B) > 0.3) break;
        }
        const ComplexSignal f = smooth_signal(rng, tg);

        // stage-2 quadrature needs the intermediate spectrum oversampled
        const Grid mid = Grid::centered(2048, 48.0 / 2048);
        const Grid out_grid(-14.0, 28.0 / 512, 512);
        const ComplexSpectrum step1 = olct_fast(f, inner, mid);
        const ComplexSpectrum two_stage = olct_fast(as_signal(step1), outer, out_grid);
        const ComplexSpectrum reference = olct_fast(f, both, out_grid);

        std::size_t peak = 0;
        for (std::size_t n = 0; n < out_grid.count; ++n)
            if (std::abs(reference.samples[n]) > std::abs(reference.samples[peak])) peak = n;
        const ComplexE2 c = two_stage.samples[peak] / reference.samples[peak];
        CHECK(std::abs(std::abs(c) - 1.0) <= 1e-6);

        ComplexSpectrum scaled = reference;
        for (auto& s : scaled.samples) s *= c;
        CHECK(rel_err(two_stage, scaled) <= 1e-5);
    }
}
