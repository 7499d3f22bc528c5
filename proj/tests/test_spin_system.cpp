// Copyright 2026 The magcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <cmath>

#include "magcrit/errors.hpp"
#include "magcrit/spin_system.hpp"
#include "magcrit/standard_cases.hpp"
#include "magcrit/su2.hpp"

using namespace magcrit;

TEST_CASE("from_hz converts to angular frequency once") {
    const auto sys = SpinSystem::from_hz(1, 10.0, {{100.0, 5.0}}, {});
    CHECK(sys.s_offset() == doctest::Approx(kTwoPi * 10.0).epsilon(1e-15));
    CHECK(sys.i_spins()[0].offset == doctest::Approx(kTwoPi * 100.0).epsilon(1e-15));
    CHECK(sys.i_spins()[0].j_to_s == doctest::Approx(kTwoPi * 5.0).epsilon(1e-15));
}

TEST_CASE("configuration index is big-endian with m = +1/2 as bit 0") {
    const auto sys = cases::samx();
    CHECK(sys.config_count() == 8);
    const auto c = configuration_at(sys, 0b011);
    REQUIRE(c.m.size() == 3);
    CHECK(c.m[0] == 0.5);
    CHECK(c.m[1] == -0.5);
    CHECK(c.m[2] == -0.5);
    const auto all = enumerate_configurations(sys);
    REQUIRE(all.size() == 8);
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i].index == i);
}

TEST_CASE("isolated S has a single configuration at the bare offset") {
    const auto sys = cases::isolated_s(42.0);
    REQUIRE(sys.config_count() == 1);
    const auto c = configuration_at(sys, 0);
    CHECK(effective_s_offset(sys, c) == doctest::Approx(kTwoPi * 42.0));
    CHECK(i_spin_energy(sys, c) == 0.0);
}

TEST_CASE("effective offsets of SA split by J") {
    const auto sys = SpinSystem::from_hz(1, 0.0, {{150.0, 10.0}}, {});
    const auto w = effective_s_offsets(sys).values();
    REQUIRE(w.size() == 2);
    CHECK(w[0] == doctest::Approx(kTwoPi * 5.0));
    CHECK(w[1] == doctest::Approx(-kTwoPi * 5.0));
    CHECK(w[0] - w[1] == doctest::Approx(kTwoPi * 10.0));
}

TEST_CASE("I-spin energies include J_II products") {
    const auto sys = SpinSystem::from_hz(1, 0.0, {{100.0, 0.0}, {-50.0, 0.0}}, {{0, 1, 8.0}});
    const auto e = i_spin_energies(sys).values();
    REQUIRE(e.size() == 4);
    const double w0 = kTwoPi * 100.0, w1 = -kTwoPi * 50.0, j = kTwoPi * 8.0;
    CHECK(e[0] == doctest::Approx(0.5 * w0 + 0.5 * w1 + 0.25 * j));
    CHECK(e[1] == doctest::Approx(0.5 * w0 - 0.5 * w1 - 0.25 * j));
    CHECK(e[2] == doctest::Approx(-0.5 * w0 + 0.5 * w1 - 0.25 * j));
    CHECK(e[3] == doctest::Approx(-0.5 * w0 - 0.5 * w1 + 0.25 * j));
}

TEST_CASE("LOMSO diagonals add and multiply elementwise") {
    const auto sys = cases::sax();
    const auto w = effective_s_offsets(sys);
    const auto e = i_spin_energies(sys);
    const auto sum = (w + e).values();
    const auto prod = (w * e).values();
    const auto scaled = (w * 2.0).values();
    for (std::size_t i = 0; i < sum.size(); ++i) {
        CHECK(sum[i] == doctest::Approx(w.values()[i] + e.values()[i]));
        CHECK(prod[i] == doctest::Approx(w.values()[i] * e.values()[i]));
        CHECK(scaled[i] == doctest::Approx(2.0 * w.values()[i]));
    }
}

TEST_CASE("assemble_full_matrix places blocks on the S (x) config structure") {
    const auto sys = cases::sa();
    std::vector<Block> blocks(2);
    blocks[0] << 1.0, 2.0, 3.0, 4.0;
    blocks[1] << 5.0, 6.0, 7.0, 8.0;
    const auto full = assemble_full_matrix(sys, blocks);
    REQUIRE(full.rows() == 4);
    CHECK(full(0, 0) == std::complex<double>(1.0));
    CHECK(full(0, 2) == std::complex<double>(2.0));
    CHECK(full(2, 0) == std::complex<double>(3.0));
    CHECK(full(1, 3) == std::complex<double>(6.0));
    CHECK(full(0, 1) == std::complex<double>(0.0));
}

TEST_CASE("two S spins assemble as a Kronecker square per configuration") {
    const auto sys = SpinSystem::from_hz(2, 0.0, {}, {});
    Block b;
    b << 1.0, 2.0, 3.0, 4.0;
    const auto full = assemble_full_matrix(sys, {b});
    REQUIRE(full.rows() == 4);
    CHECK(full(0, 0) == std::complex<double>(1.0));
    CHECK(full(0, 3) == std::complex<double>(4.0));
    CHECK(full(3, 3) == std::complex<double>(16.0));
    CHECK(full(1, 2) == std::complex<double>(6.0));
}

TEST_CASE("invalid systems are rejected") {
    CHECK_THROWS_AS(SpinSystem::from_hz(0, 0.0, {}, {}), InputError);
    CHECK_THROWS_AS(SpinSystem::from_hz(1, 0.0, {{1.0, 1.0}}, {{0, 1, 3.0}}), InputError);
    CHECK_THROWS_AS(SpinSystem::from_hz(1, 0.0, {{1.0, 1.0}, {2.0, 1.0}}, {{1, 1, 3.0}}),
                    InputError);
    CHECK_THROWS_AS(assemble_full_matrix(cases::sa(), std::vector<Block>(3)), InputError);
}

TEST_CASE("spin system JSON round-trips through the parser") {
    const auto sys = parse_spin_system(R"({"s_count": 2, "s_offset_hz": 12.5,
        "i_spins": [{"offset_hz": 100, "j_to_s_hz": 7}, {"offset_hz": -30, "j_to_s_hz": 2}],
        "j_ii_hz": [[0, 1, 4.5]]})");
    CHECK(sys.s_count() == 2);
    CHECK(sys.i_count() == 2);
    CHECK(sys.s_offset() == doctest::Approx(kTwoPi * 12.5));
    CHECK(sys.j_ii().at({0, 1}) == doctest::Approx(kTwoPi * 4.5));
    CHECK_THROWS_AS(parse_spin_system("{not json"), InputError);
    CHECK_THROWS_AS(parse_spin_system(R"({"j_ii_hz": [[0, 1]]})"), InputError);
}

TEST_CASE("documented offset and energy examples") {
    const SpinSystem one(1, 0.0, {ISpin{0.0, kTwoPi * 10.0}});
    CHECK(effective_s_offset(one, configuration_at(one, 0)) == doctest::Approx(10 * kPi));
    CHECK(effective_s_offset(one, configuration_at(one, 1)) == doctest::Approx(-10 * kPi));
    const SpinSystem bare(1, 100.0, {});
    CHECK(effective_s_offset(bare, configuration_at(bare, 0)) == 100.0);
    CHECK(i_spin_energy(bare, configuration_at(bare, 0)) == 0.0);

    const SpinSystem two(1, 0.0, {ISpin{200.0, 0.0}, ISpin{-50.0, 0.0}});
    CHECK(i_spin_energy(two, configuration_at(two, 0)) == doctest::Approx(75.0));
    const SpinSystem coupled(1, 0.0, {ISpin{200.0, 0.0}, ISpin{-50.0, 0.0}},
                             {{{0, 1}, kTwoPi * 4.0}});
    CHECK(i_spin_energy(coupled, configuration_at(coupled, 0)) == doctest::Approx(75.0 + kTwoPi));
}
