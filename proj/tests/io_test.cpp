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

#include <random>
#include <sstream>

#include "qolct/signal_io.hpp"

using namespace qolct;

TEST_CASE("signal file round trip is value-exact") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    SampledSignal f = SampledSignal::zeros(Grid(-8.0, 16.0 / 300, 300));
    for (auto& s : f.samples) s = Quaternion{d(rng), d(rng), d(rng), d(rng)};
    f.samples[0] = Quaternion{-0.0, 1e-300, 12345.6789012345678, -3e15};

    std::stringstream buf;
    write_signal_csv(buf, f);
    const SampledSignal g = read_signal_csv(buf);

    REQUIRE(g.grid.count == f.grid.count);
    CHECK(g.grid.start == f.grid.start);
    CHECK(g.grid.step == f.grid.step);
    for (std::size_t n = 0; n < f.size(); ++n) CHECK(g.samples[n] == f.samples[n]);

    // serializing the parse reproduces the bytes
    std::stringstream buf2;
    write_signal_csv(buf2, g);
    CHECK(buf2.str() == [&] {
        std::stringstream b3;
        write_signal_csv(b3, f);
        return b3.str();
    }());
}

TEST_CASE("spectrum and mask headers") {
    Spectrum F = Spectrum::zeros(Grid(-1.0, 0.5, 5));
    F.samples[2] = Quaternion{1, 2, 3, 4};
    std::stringstream buf;
    write_spectrum_csv(buf, F);
    CHECK(buf.str().rfind("w,q0,q1,q2,q3\n", 0) == 0);
    const Spectrum G = read_spectrum_csv(buf);
    CHECK(G.samples[2] == F.samples[2]);

    std::stringstream mask("w,m0,m1,m2,m3\n0,1,0,0,0\n0.5,1,0,0,0\n");
    const Spectrum M = read_mask_csv(mask);
    CHECK(M.grid.count == 2);
    CHECK(M.samples[0] == Quaternion{1, 0, 0, 0});
}

TEST_CASE("single-row files parse with unit spacing") {
    std::stringstream one("t,q0,q1,q2,q3\n2.5,1,0,0,0\n");
    const SampledSignal f = read_signal_csv(one);
    CHECK(f.grid.count == 1);
    CHECK(f.grid.start == 2.5);
    CHECK(f.grid.step == 1.0);
}

TEST_CASE("malformed files are rejected") {
    auto expect_reject = [](const std::string& text) {
        std::stringstream in(text);
        CHECK_THROWS_AS(read_signal_csv(in), file_format_error);
    };
    expect_reject("");                                        // empty
    expect_reject("w,q0,q1,q2,q3\n0,1,0,0,0\n");              // wrong header
    expect_reject("t,q0,q1,q2,q3\n");                         // no rows
    expect_reject("t,q0,q1,q2,q3\n0,1,0,0\n");                // 4 fields
    expect_reject("t,q0,q1,q2,q3\n0,1,0,0,x\n");              // non-numeric
    expect_reject("t,q0,q1,q2,q3\n0,1,0,0,0\n0,1,0,0,0\n");   // not increasing
    expect_reject("t,q0,q1,q2,q3\n0,1,0,0,0\n1,0,0,0,0\n2.5,0,0,0,0\n");  // non-uniform
}

TEST_CASE("windows line endings are tolerated") {
    std::stringstream in("t,q0,q1,q2,q3\r\n0,1,2,3,4\r\n1,5,6,7,8\r\n");
    const SampledSignal f = read_signal_csv(in);
    CHECK(f.grid.count == 2);
    CHECK(f.samples[1] == Quaternion{5, 6, 7, 8});
}
