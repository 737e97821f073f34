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

// CSV signal files: a header row (t,q0,q1,q2,q3 for signals; w,q0,q1,q2,q3
// for spectra; w,m0,m1,m2,m3 for masks) followed by one row per sample with
// abscissa and the four quaternion components printed at full round-trip
// precision. Rows must be strictly increasing and uniformly spaced.

#ifndef QOLCT_SIGNAL_IO_HPP
#define QOLCT_SIGNAL_IO_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qolct/grid.hpp"

namespace qolct {

inline constexpr const char* kSignalHeader = "t,q0,q1,q2,q3";
inline constexpr const char* kSpectrumHeader = "w,q0,q1,q2,q3";
inline constexpr const char* kMaskHeader = "w,m0,m1,m2,m3";

namespace io_detail {

struct Row {
    double t;
    Quaternion v;
};

inline double parse_field(const std::string& s, std::size_t line_no) {
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw file_format_error("line " + std::to_string(line_no) +
                                ": cannot parse value '" + s + "'");
    return v;
}

inline std::vector<Row> parse_rows(std::istream& in, const std::string& expected_header) {
    std::string line;
    if (!std::getline(in, line)) throw file_format_error("empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != expected_header)
        throw file_format_error("expected header '" + expected_header + "', got '" +
                                line + "'");
    std::vector<Row> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            throw file_format_error("line " + std::to_string(line_no) +
                                    ": expected 5 comma-separated values");
        Row r;
        r.t = parse_field(fields[0], line_no);
        r.v = Quaternion{parse_field(fields[1], line_no), parse_field(fields[2], line_no),
                         parse_field(fields[3], line_no), parse_field(fields[4], line_no)};
        rows.push_back(r);
    }
    if (rows.empty()) throw file_format_error("no data rows");
    return rows;
}

/// Recovers the grid from the abscissa column. Prefers a step whose
/// regenerated abscissae match every row bit-exactly (so files written by
/// this library parse back to identical values); otherwise accepts uniform
/// spacing up to 1e-9 relative.
inline Grid grid_from_times(const std::vector<Row>& rows) {
    const std::size_t n = rows.size();
    const double start = rows[0].t;
    if (n == 1) return Grid(start, 1.0, 1);

    for (std::size_t i = 1; i < n; ++i)
        if (!(rows[i].t > rows[i - 1].t))
            throw file_format_error("abscissae must be strictly increasing");

    const double mean_step = (rows[n - 1].t - start) / static_cast<double>(n - 1);
    const double first_step = rows[1].t - start;
    auto exact_match = [&](double step) {
        for (std::size_t i = 0; i < n; ++i)
            if (start + static_cast<double>(i) * step != rows[i].t) return false;
        return true;
    };
    for (double base : {mean_step, first_step}) {
        double c = base;
        for (int k = 0; k < 3; ++k) {
            if (exact_match(c)) return Grid(start, c, n);
            c = std::nextafter(c, base > 0 ? 2.0 * base : 0.0);
        }
        c = std::nextafter(base, 0.0);
        for (int k = 0; k < 2; ++k) {
            if (exact_match(c)) return Grid(start, c, n);
            c = std::nextafter(c, 0.0);
        }
    }

    for (std::size_t i = 1; i < n; ++i) {
        const double d = rows[i].t - rows[i - 1].t;
        if (std::abs(d - mean_step) > 1e-9 * std::abs(mean_step))
            throw file_format_error("abscissae are not uniformly spaced");
    }
    return Grid(start, mean_step, n);
}

template <typename SeriesT>
SeriesT parse_series(std::istream& in, const std::string& expected_header) {
    const std::vector<Row> rows = parse_rows(in, expected_header);
    const Grid g = grid_from_times(rows);
    SeriesT out = SeriesT::zeros(g);
    for (std::size_t i = 0; i < rows.size(); ++i) out.samples[i] = rows[i].v;
    return out;
}

template <typename SeriesT>
void write_series(std::ostream& out, const SeriesT& s, const char* header) {
    out << header << "\n";
    char buf[192];
    for (std::size_t n = 0; n < s.size(); ++n) {
        const Quaternion& v = s.samples[n];
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.grid[n],
                      v.w, v.x, v.y, v.z);
        out << buf;
    }
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw file_format_error("cannot open '" + path + "'");
    return in;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw file_format_error("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace io_detail

inline SampledSignal read_signal_csv(std::istream& in) {
    return io_detail::parse_series<SampledSignal>(in, kSignalHeader);
}
inline SampledSignal read_signal_csv(const std::string& path) {
    auto in = io_detail::open_input(path);
    return read_signal_csv(in);
}

inline Spectrum read_spectrum_csv(std::istream& in) {
    return io_detail::parse_series<Spectrum>(in, kSpectrumHeader);
}
inline Spectrum read_spectrum_csv(const std::string& path) {
    auto in = io_detail::open_input(path);
    return read_spectrum_csv(in);
}

inline Spectrum read_mask_csv(std::istream& in) {
    return io_detail::parse_series<Spectrum>(in, kMaskHeader);
}
inline Spectrum read_mask_csv(const std::string& path) {
    auto in = io_detail::open_input(path);
    return read_mask_csv(in);
}

inline void write_signal_csv(std::ostream& out, const SampledSignal& s) {
    io_detail::write_series(out, s, kSignalHeader);
}
inline void write_signal_csv(const std::string& path, const SampledSignal& s) {
    auto out = io_detail::open_output(path);
    write_signal_csv(out, s);
}

inline void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
    io_detail::write_series(out, s, kSpectrumHeader);
}
inline void write_spectrum_csv(const std::string& path, const Spectrum& s) {
    auto out = io_detail::open_output(path);
    write_spectrum_csv(out, s);
}

}  // namespace qolct

#endif  // QOLCT_SIGNAL_IO_HPP
