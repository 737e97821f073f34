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

// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every tolerance is fixed here; nothing is calibrated at run time.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "qolct/bench.hpp"
#include "qolct/verify.hpp"

using namespace qolct;
using namespace qolct::verify;

namespace {

int failures = 0;

void report(int number, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d. %-38s %s\n", ok ? "PASS" : "FAIL", number, name,
                detail.c_str());
    if (!ok) ++failures;
}

double note_value(const VerificationReport& r, const std::string& key) {
    const auto pos = r.notes.find(key + "=");
    if (pos == std::string::npos) return -1.0;
    return std::strtod(r.notes.c_str() + pos + key.size() + 1, nullptr);
}

std::string residual_detail(const VerificationReport& r) {
    return "max residual " + format_double(r.max_residual) + " vs tolerance " +
           format_double(r.tolerance) + " (" + std::to_string(r.trials) + " trials)";
}

}  // namespace

int main() {
    TrialConfig base;
    base.seed = 1;

    {  // 1. inversion round trip
        TrialConfig cfg = base;
        cfg.n_samples = 1024;
        cfg.n_trials = 50;
        const VerificationReport r = suite_roundtrip(cfg);
        report(1, "inversion round trip (1e-6)", r.passed && r.tolerance == 1e-6,
               residual_detail(r));
    }

    {  // 2. Moyal formula
        TrialConfig cfg = base;
        cfg.n_samples = 1024;
        cfg.n_trials = 100;
        const VerificationReport r = suite_moyal(cfg);
        report(2, "Moyal inner-product identity (1e-6)",
               r.passed && r.tolerance == 1e-6, residual_detail(r));
    }

    {  // 3. left H-linearity
        TrialConfig cfg = base;
        cfg.n_trials = 100;
        const VerificationReport r = suite_linearity(cfg);
        report(3, "left H-linearity (1e-12)", r.passed && r.tolerance == 1e-12,
               residual_detail(r));
    }

    {  // 4. conjugation identity, lemma and remark forms
        TrialConfig cfg = base;
        cfg.n_trials = 50;
        const VerificationReport r = suite_conjugation(cfg);
        report(4, "conjugation identity (1e-8)", r.passed && r.tolerance == 1e-8,
               residual_detail(r));
    }

    {  // 5. convolution theorem, zero offsets and full phase with offsets
        TrialConfig cfg = base;
        cfg.n_trials = 50;
        const VerificationReport r = suite_convolution(cfg);
        const double w2 = note_value(r, "w2_only_phase_residual_offsets");
        const bool w2_documented = w2 > 1e-3;  // visibly nonzero, as expected
        report(5, "convolution theorem (1e-6)",
               r.passed && r.tolerance == 1e-6 && w2_documented,
               residual_detail(r) + "; w2-only phase residual " + format_double(w2));
    }

    {  // 6. product theorem
        TrialConfig cfg = base;
        cfg.n_trials = 50;
        const VerificationReport r = suite_product(cfg);
        const double quat = note_value(r, "quaternion_case_residual");
        report(6, "product theorem (1e-6 / 1e-5)",
               r.passed && r.tolerance == 1e-6 && quat >= 0.0 && quat <= 1e-5,
               residual_detail(r) + "; quaternion case " + format_double(quat));
    }

    {  // 7. composition up to a unimodular constant
        TrialConfig cfg = base;
        cfg.n_trials = 50;
        const VerificationReport r = suite_composition(cfg);
        const double cdev = note_value(r, "max_abs_c_minus_1");
        report(7, "composition, normalized (1e-5)",
               r.passed && r.tolerance == 1e-5 && cdev >= 0.0 && cdev <= 1e-6,
               residual_detail(r) + "; | |c|-1 | " + format_double(cdev));
    }

    {  // 8. special-case reductions
        TrialConfig cfg = base;
        cfg.n_trials = 10;
        const VerificationReport r = suite_special_cases(cfg);
        const double qft = note_value(r, "qft_residual");
        const bool preset_eq =
            r.notes.find("qfrft_halfpi_equals_qft=true") != std::string::npos;
        report(8, "special-case reductions (1e-10 / 1e-8)",
               r.passed && r.tolerance == 1e-8 && qft >= 0.0 && qft <= 1e-10 && preset_eq,
               residual_detail(r) + "; qft " + format_double(qft) +
                   (preset_eq ? "; qfrft(pi/2)==qft" : "; preset mismatch"));
    }

    {  // 9. fast vs direct, plus scaling signatures
        TrialConfig cfg = base;
        cfg.n_trials = 50;
        const VerificationReport r = suite_fast_vs_direct(cfg);
        bool ok = r.passed && r.tolerance == 1e-9;
        std::string detail = residual_detail(r);

        const auto rows =
            run_bench({256, 1024, 2048, 4096, 16384, 65536}, qft_params(), 4096, 3);
        auto row = [&](std::size_t n) -> const BenchRow& {
            for (const auto& x : rows)
                if (x.size == n) return x;
            std::abort();
        };
        for (const auto& x : rows)
            if (x.direct_ran && !(x.max_rel_deviation <= 1e-9)) ok = false;

        const double d_ratio1 = row(2048).direct_ms / row(1024).direct_ms;
        const double d_ratio2 = row(4096).direct_ms / row(2048).direct_ms;
        const double f_ratio1 = row(16384).fast_ms / row(4096).fast_ms;
        const double f_ratio2 = row(65536).fast_ms / row(16384).fast_ms;
        if (!(d_ratio1 >= 3.0 && d_ratio2 >= 3.0)) ok = false;
        if (!(f_ratio1 <= 6.0 && f_ratio2 <= 6.0)) ok = false;

        // quadratic-model extrapolation of the direct cost to 2^16
        const double direct_65536_est = row(4096).direct_ms * 256.0;
        const double speedup = direct_65536_est / row(65536).fast_ms;
        if (!(speedup >= 30.0)) ok = false;

        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "; direct x2 ratios %.2f/%.2f (>=3), fast x4 ratios %.2f/%.2f "
                      "(<=6), est. speedup at 65536 %.0fx (>=30)",
                      d_ratio1, d_ratio2, f_ratio1, f_ratio2, speedup);
        report(9, "fast vs direct + scaling (1e-9)", ok, detail + buf);
    }

    {  // 10. oracle transcription independence
        double max_res = 0.0;
        const std::size_t sizes[] = {128, 192, 256, 384, 512};
        for (std::size_t trial = 0; trial < 50; ++trial) {
            auto rng = std::mt19937_64(base.seed + 0x9E3779B97F4A7C15ULL * (trial + 101));
            const std::size_t N = sizes[trial % 5];
            const Grid tg(-8.0, 16.0 / static_cast<double>(N), N);
            const OlctParams m = random_params(rng, base.ranges);
            const SampledSignal f = random_signal(rng, SignalKind::gaussian_mix, tg);
            const Grid wg = contract_spectrum_grid(tg, m);
            const Spectrum a = oracle_transform(f, m, wg);
            const Spectrum b = qolct_forward(f, m, wg, Method::direct);
            max_res = std::max(max_res, rel_l2_error(a, b));
        }
        report(10, "oracle vs direct transcription (1e-12)", max_res <= 1e-12,
               "max residual " + format_double(max_res) + " vs tolerance 1e-12 (50 trials)");
    }

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
