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

#ifndef QOLCT_REPORT_HPP
#define QOLCT_REPORT_HPP

#include <cstdio>
#include <string>

namespace qolct {

/// Result of one property-suite run. passed is equivalent to
/// max_residual <= tolerance; side observations that carry their own
/// tolerances are folded into max_residual in units of `tolerance` and
/// reported raw in `notes`.
struct VerificationReport {
    std::string suite;
    std::size_t trials = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string notes;

    void finalize() { passed = max_residual <= tolerance; }

    /// Folds a secondary check with its own tolerance into the primary
    /// residual, scaled so that the pass condition stays a single compare.
    void fold_check(double residual, double check_tolerance) {
        const double scaled = residual * (tolerance / check_tolerance);
        if (scaled > max_residual) max_residual = scaled;
    }
};

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Line-oriented key=value serialization; byte-stable for a fixed seed.
inline std::string serialize_report(const VerificationReport& r) {
    std::string s;
    s += "suite=" + r.suite + "\n";
    s += "trials=" + std::to_string(r.trials) + "\n";
    s += "max_residual=" + format_double(r.max_residual) + "\n";
    s += "tolerance=" + format_double(r.tolerance) + "\n";
    s += std::string("passed=") + (r.passed ? "true" : "false") + "\n";
    s += "notes=" + r.notes + "\n";
    return s;
}

inline std::string human_summary(const VerificationReport& r) {
    std::string s = r.passed ? "PASS" : "FAIL";
    s += "  " + r.suite + ": max residual " + format_double(r.max_residual) +
         " (tolerance " + format_double(r.tolerance) + ", " +
         std::to_string(r.trials) + " trials)";
    return s;
}

}  // namespace qolct

#endif  // QOLCT_REPORT_HPP
