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

// qolct command line: transform / inverse / verify / filter / bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parameter
// error, 3 file format error, 4 grid/shape error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "qolct/bench.hpp"
#include "qolct/qolct.hpp"
#include "qolct/signal_io.hpp"
#include "qolct/verify.hpp"

namespace {

using namespace qolct;

std::vector<double> parse_doubles(const std::string& s, std::size_t expected,
                                  const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) {
        char* end = nullptr;
        const double v = std::strtod(field.c_str(), &end);
        if (end == field.c_str() || *end != '\0')
            throw invalid_params(std::string(what) + ": cannot parse '" + field + "'");
        out.push_back(v);
    }
    if (out.size() != expected)
        throw invalid_params(std::string(what) + ": expected " +
                             std::to_string(expected) + " comma-separated values");
    return out;
}

OlctParams parse_preset(const std::string& s) {
    if (s == "qft") return qft_params();
    if (s.rfind("qfrft:", 0) == 0) {
        const auto v = parse_doubles(s.substr(6), 1, "--preset qfrft");
        return qfrft_params(v[0]);
    }
    if (s.rfind("qlct:", 0) == 0) {
        const auto v = parse_doubles(s.substr(5), 4, "--preset qlct");
        return qlct_params(v[0], v[1], v[2], v[3]);
    }
    throw invalid_params("unknown preset '" + s + "' (use qft, qfrft:THETA, or qlct:A,B,C,D)");
}

struct ParamFlags {
    std::string params;
    std::string preset;

    void attach(CLI::App* sub) {
        sub->add_option("--params", params, "transform parameters A,B,C,D,p,q");
        sub->add_option("--preset", preset, "named parameters: qft | qfrft:THETA | qlct:A,B,C,D");
    }

    OlctParams resolve(bool allow_default_qft = false) const {
        if (!params.empty() && !preset.empty())
            throw invalid_params("--params and --preset are mutually exclusive");
        if (!params.empty()) {
            const auto v = parse_doubles(params, 6, "--params");
            OlctParams m{v[0], v[1], v[2], v[3], v[4], v[5]};
            m.require_transformable();
            return m;
        }
        if (!preset.empty()) return parse_preset(preset);
        if (allow_default_qft) return qft_params();
        throw invalid_params("one of --params or --preset is required");
    }
};

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

Grid resolve_output_grid(const Grid& in_grid, const OlctParams& m, double start,
                         double step, std::int64_t count) {
    if (count == 0 || count < -1) throw grid_mismatch("output grid count must be positive");
    const std::size_t n = count == -1 ? in_grid.count : static_cast<std::size_t>(count);
    const double dflt_step = kTwoPi * std::abs(m.B) / in_grid.span();
    const double st = std::isnan(step) ? dflt_step : step;
    if (!(st > 0.0)) throw grid_mismatch("output grid step must be positive");
    const double s0 = std::isnan(start) ? -st * static_cast<double>(n / 2) : start;
    return Grid(s0, st, n);
}

int cmd_transform(const ParamFlags& pf, const std::string& in_path,
                  const std::string& out_path, const std::string& method, double wstart,
                  double wstep, std::int64_t wcount) {
    const OlctParams m = pf.resolve();
    const SampledSignal f = read_signal_csv(in_path);
    const Grid wg = resolve_output_grid(f.grid, m, wstart, wstep, wcount);
    if (!satisfies_sampling_contract(f.grid, wg, m))
        std::cerr << "warning: w grid violates the sampling contract "
                     "(dt*dw*count != 2*pi*|B|); accuracy is unspecified\n";
    const Spectrum F =
        qolct_forward(f, m, wg, method == "direct" ? Method::direct : Method::fast);
    write_spectrum_csv(out_path, F);
    return 0;
}

int cmd_inverse(const ParamFlags& pf, const std::string& in_path,
                const std::string& out_path, const std::string& method, double tstart,
                double tstep, std::int64_t tcount) {
    const OlctParams m = pf.resolve();
    const Spectrum F = read_spectrum_csv(in_path);
    const Grid tg = resolve_output_grid(F.grid, m, tstart, tstep, tcount);
    if (tg.count != F.grid.count)
        throw grid_mismatch("--tcount must match the spectrum sample count under the "
                            "sampling contract");
    if (!satisfies_sampling_contract(tg, F.grid, m))
        throw grid_mismatch("--tstep violates the sampling contract "
                            "(dt*dw*count must equal 2*pi*|B|)");
    const SampledSignal f =
        qolct_inverse(F, m, tg, method == "direct" ? Method::direct : Method::fast);
    write_signal_csv(out_path, f);
    return 0;
}

int cmd_filter(const ParamFlags& pf, const std::string& in_path,
               const std::string& mask_path, const std::string& out_path) {
    const OlctParams m = pf.resolve();
    const SampledSignal f = read_signal_csv(in_path);
    const Grid wg = contract_spectrum_grid(f.grid, m);
    const Spectrum mask = read_mask_csv(mask_path);
    const Spectrum F = qolct_forward(f, m, wg);
    const Spectrum masked = apply_mask(F, mask);
    write_signal_csv(out_path, qolct_inverse(masked, m, f.grid));
    return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::int64_t n,
               std::int64_t trials, double tol, const std::string& report_path) {
    verify::TrialConfig cfg;
    cfg.seed = seed;
    if (n > 0) cfg.n_samples = static_cast<std::size_t>(n);
    if (trials > 0) cfg.n_trials = static_cast<std::size_t>(trials);
    if (tol > 0.0) cfg.tolerance = tol;

    std::vector<verify::Suite> to_run;
    if (suite == "all")
        to_run = verify::all_suites();
    else
        to_run.push_back(verify::parse_suite(suite));

    bool all_passed = true;
    std::string serialized;
    for (const auto s : to_run) {
        const VerificationReport r = verify::run_suite(s, cfg);
        all_passed = all_passed && r.passed;
        std::cout << human_summary(r) << "\n";
        std::cout << serialize_report(r);
        if (to_run.size() > 1) std::cout << "\n";
        serialized += serialize_report(r);
        if (to_run.size() > 1) serialized += "\n";
    }
    if (!report_path.empty()) {
        auto out = io_detail::open_output(report_path);
        out << serialized;
    }
    return all_passed ? 0 : 1;
}

int cmd_bench(const ParamFlags& pf, const std::string& sizes_csv,
              std::int64_t direct_cutoff, int reps) {
    if (reps < 1) throw invalid_params("--reps must be at least 1");
    const OlctParams m = pf.resolve(/*allow_default_qft=*/true);
    std::vector<std::size_t> sizes;
    std::stringstream ss(sizes_csv);
    std::string field;
    while (std::getline(ss, field, ',')) {
        const long long v = std::atoll(field.c_str());
        if (v <= 0) throw invalid_params("--sizes: entries must be positive integers");
        sizes.push_back(static_cast<std::size_t>(v));
    }
    if (sizes.empty()) throw invalid_params("--sizes: no sizes given");

    const auto rows = run_bench(sizes, m, static_cast<std::size_t>(direct_cutoff), reps);
    std::printf("size,direct_ms,fast_ms,max_rel_deviation\n");
    for (const auto& r : rows) {
        if (r.direct_ran)
            std::printf("%zu,%.6g,%.6g,%.6g\n", r.size, r.direct_ms, r.fast_ms,
                        r.max_rel_deviation);
        else
            std::printf("%zu,na,%.6g,na\n", r.size, r.fast_ms);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion offset linear canonical transforms"};
    app.require_subcommand(1);

    auto* t = app.add_subcommand("transform", "forward transform of a signal file");
    ParamFlags t_params;
    t_params.attach(t);
    std::string t_in, t_out, t_method = "fast";
    double t_wstart = kUnset, t_wstep = kUnset;
    std::int64_t t_wcount = -1;
    t->add_option("--in", t_in, "input signal CSV")->required();
    t->add_option("--out", t_out, "output spectrum CSV")->required();
    t->add_option("--method", t_method, "direct | fast (default fast)")
        ->check(CLI::IsMember({"direct", "fast"}));
    t->add_option("--wstart", t_wstart, "first output frequency (default centered)");
    t->add_option("--wstep", t_wstep, "output spacing (default 2*pi*|B|/(N*dt))");
    t->add_option("--wcount", t_wcount, "output count (default input count)");

    auto* iv = app.add_subcommand("inverse", "inverse transform of a spectrum file");
    ParamFlags i_params;
    i_params.attach(iv);
    std::string i_in, i_out, i_method = "fast";
    double i_tstart = kUnset, i_tstep = kUnset;
    std::int64_t i_tcount = -1;
    iv->add_option("--in", i_in, "input spectrum CSV")->required();
    iv->add_option("--out", i_out, "output signal CSV")->required();
    iv->add_option("--method", i_method, "direct | fast (default fast)")
        ->check(CLI::IsMember({"direct", "fast"}));
    iv->add_option("--tstart", i_tstart, "first output time (default centered)");
    iv->add_option("--tstep", i_tstep,
                   "output spacing; must satisfy the sampling contract");
    iv->add_option("--tcount", i_tcount, "output count; must match the spectrum count");

    auto* v = app.add_subcommand("verify", "run a property suite");
    std::string v_suite;
    std::uint64_t v_seed = 1;
    std::int64_t v_n = 0, v_trials = 0;
    double v_tol = 0.0;
    std::string v_report;
    v->add_option("suite", v_suite,
                  "roundtrip | linearity | moyal | conjugation | convolution | product | "
                  "composition | special_cases | fast_vs_direct | all")
        ->required();
    v->add_option("--seed", v_seed, "random seed (default 1)");
    v->add_option("--n", v_n, "samples per signal (default per suite)");
    v->add_option("--trials", v_trials, "trial count (default per suite)");
    v->add_option("--tol", v_tol, "tolerance override");
    v->add_option("--report", v_report, "also write the key=value report here");

    auto* fl = app.add_subcommand("filter", "transform, apply a mask, transform back");
    ParamFlags f_params;
    f_params.attach(fl);
    std::string f_in, f_mask, f_out;
    fl->add_option("--in", f_in, "input signal CSV")->required();
    fl->add_option("--mask", f_mask, "mask CSV on the transform grid")->required();
    fl->add_option("--out", f_out, "output signal CSV")->required();

    auto* b = app.add_subcommand("bench", "time the direct and fast paths");
    ParamFlags b_params;
    b_params.attach(b);
    std::string b_sizes = "256,1024,4096,16384,65536";
    std::int64_t b_cutoff = 4096;
    int b_reps = 3;
    b->add_option("--sizes", b_sizes, "comma-separated sizes");
    b->add_option("--direct-cutoff", b_cutoff, "largest size timed on the direct path");
    b->add_option("--reps", b_reps, "repetitions per measurement (best-of)");

    int rc = 0;
    t->callback([&] { rc = cmd_transform(t_params, t_in, t_out, t_method, t_wstart, t_wstep, t_wcount); });
    iv->callback([&] { rc = cmd_inverse(i_params, i_in, i_out, i_method, i_tstart, i_tstep, i_tcount); });
    v->callback([&] { rc = cmd_verify(v_suite, v_seed, v_n, v_trials, v_tol, v_report); });
    fl->callback([&] { rc = cmd_filter(f_params, f_in, f_mask, f_out); });
    b->callback([&] { rc = cmd_bench(b_params, b_sizes, b_cutoff, b_reps); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const file_format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const grid_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
