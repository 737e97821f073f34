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

#ifndef QOLCT_BENCH_HPP
#define QOLCT_BENCH_HPP

#include <chrono>
#include <vector>

#include "qolct/olct.hpp"

namespace qolct {

struct BenchRow {
    std::size_t size = 0;
    bool direct_ran = false;
    double direct_ms = 0.0;
    double fast_ms = 0.0;
    double max_rel_deviation = 0.0;
};

/// Times olct_fast (and olct_direct up to `direct_cutoff`) on a Gaussian
/// with M = N contract-grid outputs; best of `reps` runs per path.
inline std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes,
                                       const OlctParams& m,
                                       std::size_t direct_cutoff = 4096, int reps = 3) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (const std::size_t N : sizes) {
        const Grid tg(-8.0, 16.0 / static_cast<double>(N), N);
        ComplexSignal f = ComplexSignal::zeros(tg);
        for (std::size_t n = 0; n < N; ++n)
            f.samples[n] = std::exp(-tg[n] * tg[n] / 2.0);
        const Grid wg = contract_spectrum_grid(tg, m);

        BenchRow row;
        row.size = N;

        ComplexSpectrum fast = ComplexSpectrum::zeros(wg);
        double best_fast = 1e300;
        for (int r = 0; r < reps; ++r) {
            const auto t0 = clock::now();
            fast = olct_fast(f, m, wg);
            const auto t1 = clock::now();
            best_fast = std::min(best_fast,
                                 std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        row.fast_ms = best_fast;

        if (N <= direct_cutoff) {
            ComplexSpectrum direct = ComplexSpectrum::zeros(wg);
            double best_direct = 1e300;
            for (int r = 0; r < reps; ++r) {
                const auto t0 = clock::now();
                direct = olct_direct(f, m, wg);
                const auto t1 = clock::now();
                best_direct = std::min(
                    best_direct, std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
            row.direct_ran = true;
            row.direct_ms = best_direct;
            row.max_rel_deviation = rel_l2_error(fast, direct);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace qolct

#endif  // QOLCT_BENCH_HPP
