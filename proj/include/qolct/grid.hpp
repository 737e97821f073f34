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

#ifndef QOLCT_GRID_HPP
#define QOLCT_GRID_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "qolct/errors.hpp"
#include "qolct/quaternion.hpp"

namespace qolct {

/// Uniform sample axis: point n is start + n*step, n = 0..count-1.
struct Grid {
    double start = 0.0;
    double step = 1.0;
    std::size_t count = 0;

    Grid() = default;
    Grid(double start_, double step_, std::size_t count_)
        : start(start_), step(step_), count(count_) {
        if (!(step > 0.0)) throw grid_mismatch("Grid: step must be positive");
        if (count < 1) throw grid_mismatch("Grid: count must be at least 1");
    }

    /// Grid of `count` points with spacing `step`, centered on zero
    /// (zero itself is a sample point).
    static Grid centered(std::size_t count, double step) {
        return Grid(-step * static_cast<double>(count / 2), step, count);
    }

    double operator[](std::size_t n) const { return start + static_cast<double>(n) * step; }
    double span() const { return step * static_cast<double>(count); }

    bool operator==(const Grid& o) const {
        return start == o.start && step == o.step && count == o.count;
    }

    /// Matching up to relative tolerance on start and step; counts must agree.
    bool approx_equal(const Grid& o, double rel_tol = 1e-9) const {
        if (count != o.count) return false;
        const double s = std::max({std::abs(step), std::abs(o.step)});
        return std::abs(step - o.step) <= rel_tol * s &&
               std::abs(start - o.start) <= rel_tol * std::max(s, std::abs(start));
    }
};

namespace detail {
template <typename Sample>
struct Series {
    Grid grid;
    std::vector<Sample> samples;

    Series() = default;
    Series(Grid g, std::vector<Sample> s) : grid(g), samples(std::move(s)) {
        if (samples.size() != grid.count)
            throw grid_mismatch("sample count does not match grid");
    }
    static Series zeros(Grid g) { return Series(g, std::vector<Sample>(g.count)); }

    std::size_t size() const { return samples.size(); }
};

inline void require_shared_grid(const Grid& a, const Grid& b, const char* what) {
    if (!a.approx_equal(b)) throw grid_mismatch(std::string(what) + ": operands on different grids");
}
}  // namespace detail

/// Quaternion-valued signal on a time grid.
struct SampledSignal : detail::Series<Quaternion> {
    using Series::Series;
    static SampledSignal zeros(Grid g) { return SampledSignal(g, std::vector<Quaternion>(g.count)); }
};

/// Quaternion-valued transform output on a w grid.
struct Spectrum : detail::Series<Quaternion> {
    using Series::Series;
    static Spectrum zeros(Grid g) { return Spectrum(g, std::vector<Quaternion>(g.count)); }
};

/// e2-complex signal on a time grid (the scalar engine's input).
struct ComplexSignal : detail::Series<ComplexE2> {
    using Series::Series;
    static ComplexSignal zeros(Grid g) { return ComplexSignal(g, std::vector<ComplexE2>(g.count)); }
};

/// e2-complex transform output on a w grid.
struct ComplexSpectrum : detail::Series<ComplexE2> {
    using Series::Series;
    static ComplexSpectrum zeros(Grid g) { return ComplexSpectrum(g, std::vector<ComplexE2>(g.count)); }
};

/// A spectrum fed back into a transform as if it were a time signal
/// (composition of transforms integrates over the previous output axis).
inline SampledSignal as_signal(const Spectrum& s) { return SampledSignal(s.grid, s.samples); }
inline ComplexSignal as_signal(const ComplexSpectrum& s) { return ComplexSignal(s.grid, s.samples); }

/// Discrete inner product <f,g> = step * sum f(t_n) g(t_n)^c. The rectangle
/// weight matches the transform quadrature, which is what makes the
/// Plancherel-type identities tight at the discrete level.
template <typename SeriesT>
inline Quaternion qdot(const SeriesT& f, const SeriesT& g) {
    detail::require_shared_grid(f.grid, g.grid, "qdot");
    Quaternion acc;
    for (std::size_t n = 0; n < f.samples.size(); ++n)
        acc += qmul(f.samples[n], qconj(g.samples[n]));
    return acc * f.grid.step;
}

template <typename SeriesT>
inline double l2_norm(const SeriesT& f) {
    double acc = 0.0;
    for (const auto& s : f.samples) acc += s.norm_sq();
    return std::sqrt(acc * f.grid.step);
}

inline double l2_norm(const ComplexSignal& f) {
    double acc = 0.0;
    for (const auto& s : f.samples) acc += std::norm(s);
    return std::sqrt(acc * f.grid.step);
}

inline double l2_norm(const ComplexSpectrum& f) {
    double acc = 0.0;
    for (const auto& s : f.samples) acc += std::norm(s);
    return std::sqrt(acc * f.grid.step);
}

inline double norm_sq_of(const Quaternion& q) { return q.norm_sq(); }
inline double norm_sq_of(const ComplexE2& z) { return std::norm(z); }

/// Relative L2 distance with absolute fallback below 1e-12.
template <typename SeriesA, typename SeriesB>
inline double rel_l2_error(const SeriesA& got, const SeriesB& want) {
    detail::require_shared_grid(got.grid, want.grid, "rel_l2_error");
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < got.samples.size(); ++n) {
        auto d = got.samples[n] - want.samples[n];
        num += norm_sq_of(d);
        den += norm_sq_of(want.samples[n]);
    }
    num = std::sqrt(num);
    den = std::sqrt(den);
    return den < 1e-12 ? num : num / den;
}

}  // namespace qolct

#endif  // QOLCT_GRID_HPP
