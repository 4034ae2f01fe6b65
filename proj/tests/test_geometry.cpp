// SPDX-License-Identifier: Apache-2.0
//
// hmimo - near-field circular H-MIMO beamforming for data and energy multicast
// Copyright (C) 2026 The hmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "catch_amalgamated.hpp"

#include "hmimo/channel.hpp"
#include "hmimo/errors.hpp"
#include "hmimo/geometry.hpp"
#include "hmimo/propagation.hpp"
#include "hmimo/resolution.hpp"
#include "hmimo/rng.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace hmimo;
using Catch::Approx;

namespace
{
constexpr double pi = std::numbers::pi;
}

TEST_CASE("CircularArray - half-wavelength layout")
{
    const auto array = CircularArray::half_wavelength(800, 0.01);
    REQUIRE(array.size() == 800);
    CHECK(array.radius() == Approx(800 * 0.01 / (4.0 * pi)).epsilon(1e-15));
    CHECK(2.0 * pi * array.radius() / array.wavelength() == Approx(400.0).epsilon(1e-14));

    // Diameter of roughly 1.28 m at 30 GHz-scale wavelength
    CHECK(2.0 * array.radius() == Approx(1.2732).margin(1e-4));

    auto psi = array.angles();
    CHECK(psi[0] == 0.0);
    for (std::size_t n = 1; n < psi.size(); ++n)
    {
        CHECK(psi[n] > psi[n - 1]);
        CHECK(psi[n] == Approx(2.0 * pi * double(n) / 800.0).epsilon(1e-15));
    }
    CHECK(psi.back() < 2.0 * pi);
}

TEST_CASE("CircularArray - invalid arguments")
{
    CHECK_THROWS_AS(CircularArray(0, 0.01, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CircularArray(8, -0.01, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(CircularArray(8, 0.01, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(validate(PolarPoint{0.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(PolarPoint{1.0, NAN, 0.0}), std::invalid_argument);
}

TEST_CASE("exact_distance - reference values")
{
    const auto array = CircularArray::half_wavelength(800, 0.01);
    const PolarPoint p{10.0, pi / 2.0, 0.0};

    // 40-digit reference evaluation of the radical
    CHECK(exact_distance(array, p, 0) == Approx(9.3633802276324186569).epsilon(1e-15));
    CHECK(exact_distance(array, p, 200) == Approx(10.020243746265324812).epsilon(1e-15));
    CHECK(exact_distance(array, p, 123) == Approx(9.6522603785197689605).epsilon(1e-15));
    CHECK(exact_distance(array, {7.3, 1.1, 2.0}, 321) == Approx(6.8199257763300106011).epsilon(1e-14));
    CHECK(exact_distance(array, {0.2, 0.4, 5.5}, 799) == Approx(0.61193339176985657441).epsilon(1e-14));

    // Boresight and apex cases
    CHECK(exact_distance(array, {5.0, pi / 2.0, array.angle(17)}, 17) == Approx(5.0 - array.radius()).epsilon(1e-14));
    CHECK(exact_distance(array, {5.0, 0.0, 1.234}, 401) == Approx(std::hypot(5.0, array.radius())).epsilon(1e-15));

    CHECK_THROWS_AS(exact_distance(array, p, 800), std::out_of_range);
}

TEST_CASE("exact_distance - triangle bounds")
{
    const auto array = CircularArray::half_wavelength(256, 0.01);
    Rng rng(11);
    std::uniform_real_distribution<double> range(0.01, 60.0), polar(0.0, pi), az(0.0, 2.0 * pi);
    for (int i = 0; i < 200; ++i)
    {
        const PolarPoint p{range(rng), polar(rng), az(rng)};
        for (std::size_t n = 0; n < array.size(); n += 7)
        {
            const double d = exact_distance(array, p, n);
            CHECK(d >= std::abs(p.r - array.radius()) - 1e-12);
            CHECK(d <= p.r + array.radius() + 1e-12);
        }
    }
}

TEST_CASE("fresnel_distance - apex and validity")
{
    const auto array = CircularArray::half_wavelength(800, 0.01);
    const double R = array.radius();
    const double r = 4.0;
    CHECK(fresnel_distance(array, {r, 0.0, 0.7}, 3) ==
          Approx(r + R * R / (2.0 * r) - std::pow(R, 4) / (8.0 * r * r * r)).epsilon(1e-15));
    CHECK_THROWS_AS(fresnel_distance(array, {R, 1.0, 0.0}, 0), OutOfValidity);
    CHECK_THROWS_AS(fresnel_distance(array, {0.5 * R, 1.0, 0.0}, 0), OutOfValidity);
}

TEST_CASE("fresnel_distance - third-order convergence")
{
    const auto array = CircularArray::half_wavelength(800, 0.01);
    const double R = array.radius();

    // Relative error falls by roughly 2^3 per doubling of r
    double prev = 0.0;
    for (int i = 0; i < 8; ++i)
    {
        const double r = 4.0 * R * std::pow(2.0, i);
        double worst = 0.0;
        for (double theta : {0.3, 1.0, pi / 2.0})
            for (std::size_t n = 0; n < array.size(); n += 5)
            {
                const PolarPoint p{r, theta, 0.4};
                const double e = exact_distance(array, p, n);
                worst = std::max(worst, std::abs(fresnel_distance(array, p, n) - e) / e);
            }
        CHECK(worst < 2.0 * std::pow(R / r, 3));
        if (i > 0)
        {
            const double ratio = prev / worst;
            CHECK(ratio > 6.0);
            CHECK(ratio < 10.0);
        }
        prev = worst;
    }

    // Far field
    for (double scale : {100.0, 1e3, 1e6})
    {
        const PolarPoint p{scale * R, 0.9, 1.7};
        for (std::size_t n = 0; n < array.size(); n += 13)
        {
            const double e = exact_distance(array, p, n);
            CHECK(std::abs(fresnel_distance(array, p, n) - e) / e < (scale >= 1e6 ? 1e-12 : 1e-6));
        }
    }
}

TEST_CASE("steering_vector - unit norm and phase")
{
    const auto array = CircularArray::half_wavelength(800, 0.01);
    Rng rng(3);
    std::uniform_real_distribution<double> range(0.05, 100.0), polar(0.0, pi), az(0.0, 2.0 * pi);
    for (int i = 0; i < 100; ++i)
    {
        const PolarPoint p{range(rng), polar(rng), az(rng)};
        const CVec a = steering_vector(array, p);
        CHECK(std::abs(a.norm() - 1.0) < 1e-12);
        CHECK(std::abs(a.dot(a) - cd(1.0, 0.0)) < 1e-12);
    }

    const PolarPoint p{10.0, 1.0, 0.5};
    const CVec a = steering_vector(array, p);
    const double k = 2.0 * pi / 0.01;
    for (std::size_t n : {0u, 99u, 400u, 799u})
    {
        const cd expected = std::polar(1.0 / std::sqrt(800.0), k * (p.r - exact_distance(array, p, n)));
        CHECK(std::abs(a(static_cast<Eigen::Index>(n)) - expected) < 1e-12);
    }
}

TEST_CASE("steering_vector - separated points are below the asymptotic bound")
{
    const auto array = CircularArray::half_wavelength(800, 0.01);
    const CVec a1 = steering_vector(array, {15.0, pi / 2.0, 0.0});
    const CVec a2 = steering_vector(array, {20.0, pi / 6.0, pi / 3.0});
    const double xi1 = resolution_params(array, {15.0, pi / 2.0, 0.0}, {20.0, pi / 6.0, pi / 3.0}).xi1;
    CHECK(std::abs(a1.dot(a2)) < std::sqrt(2.0 / (pi * xi1)));
}

TEST_CASE("generate_channel - Friis amplitude")
{
    ChannelGenConfig cfg; // 10 dBi transmit, 0 dBi receive
    CHECK(los_amplitude(cfg, 0.01, 3.0) == Approx(std::sqrt(10.0) * 0.01 / (4.0 * pi * 3.0)).epsilon(1e-14));
    CHECK(los_amplitude(cfg, 0.01, 3.0) == Approx(8.3882e-4).margin(5e-8));

    cfg.rx_gain_dbi = 10.0;
    CHECK(los_amplitude(cfg, 0.01, 3.0) == Approx(10.0 * 0.01 / (4.0 * pi * 3.0)).epsilon(1e-14));
}

TEST_CASE("generate_channel - LoS only")
{
    const auto array = CircularArray::half_wavelength(128, 0.01);
    const PolarPoint user{6.0, pi / 2.0, 1.0};
    const Channel ch = generate_channel(array, user, 0, {}, 42);
    const double alpha = los_amplitude({}, 0.01, 6.0);
    CHECK(ch.nlos.empty());
    CHECK(std::abs(ch.los.gain) == Approx(alpha).epsilon(1e-14));
    CHECK(ch.vector.norm() == Approx(std::sqrt(128.0) * alpha).epsilon(1e-12));
    CHECK(ch.los.anchor == user);
}

TEST_CASE("generate_channel - determinism and round trip")
{
    const auto array = CircularArray::half_wavelength(200, 0.01);
    const PolarPoint user{20.0, pi / 2.0, 2.5};
    const Channel a = generate_channel(array, user, 6, {}, 99);
    const Channel b = generate_channel(array, user, 6, {}, 99);
    const Channel c = generate_channel(array, user, 6, {}, 100);
    REQUIRE(a.nlos.size() == 6);
    CHECK(a.vector == b.vector);
    CHECK(a.vector != c.vector);

    const Channel rebuilt = assemble_channel(array, a.los, a.nlos);
    CHECK(rebuilt.vector == a.vector);

    for (const auto &path : a.nlos)
    {
        CHECK(path.anchor.r >= 1.0);
        CHECK(path.anchor.r <= 20.0);
        CHECK(path.anchor.theta == pi / 2.0);
    }
}

TEST_CASE("generate_channel - scattered gain statistics")
{
    const auto array = CircularArray::half_wavelength(16, 0.01);
    ChannelGenConfig cfg;
    cfg.nlos_amplitude_ratio = 0.1;
    double power = 0.0;
    int count = 0;
    double a0 = 0.0;
    for (std::uint64_t s = 0; s < 400; ++s)
    {
        const Channel ch = generate_channel(array, {10.0, pi / 2.0, 0.0}, 10, cfg, s);
        a0 = std::abs(ch.los.gain);
        for (const auto &p : ch.nlos)
        {
            power += std::norm(p.gain);
            ++count;
        }
    }
    // E|a_i|^2 = (rho |a0|)^2
    CHECK(power / count / (a0 * a0 * 0.01) == Approx(1.0).margin(0.1));
}

TEST_CASE("derive_seed - pure and order independent")
{
    CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
    CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
    CHECK(derive_seed(1, {2}) != derive_seed(2, {2}));
}

TEST_CASE("propagation_matrix - zero path effect")
{
    const auto array = CircularArray::half_wavelength(32, 0.01);
    const auto P = propagation_matrix(array, 4, 0.0, 0.0);
    CHECK(P.matrix.rows() == 32);
    CHECK(P.matrix.cols() == 4);
    CHECK((P.matrix - CMat::Ones(32, 4)).norm() == 0.0);
}

TEST_CASE("propagation_matrix - hand-evaluated arc lengths")
{
    // N = 4 and R chosen so one arc step is 0.1 m
    const CircularArray array(4, 0.01, 0.2 / pi);
    const auto P = propagation_matrix(array, 1, 5.0, 0.0);
    const double expected[] = {1.0, std::exp(-0.5), std::exp(-1.0), std::exp(-1.5)};
    for (int m = 0; m < 4; ++m)
        CHECK(std::abs(P.matrix(m, 0)) == Approx(expected[m]).epsilon(1e-14));

    const auto Q = propagation_matrix(array, 1, 0.0, 7.0);
    for (int m = 0; m < 4; ++m)
    {
        const double l = 0.1 * m;
        CHECK(std::abs(Q.matrix(m, 0) - std::polar(1.0, 7.0 * l)) < 1e-14);
    }
}

TEST_CASE("propagation_matrix - feeds and monotone decay")
{
    const auto array = CircularArray::half_wavelength(64, 0.01);
    const auto P = propagation_matrix(array, 4, 5.0);
    REQUIRE(P.n_rf() == 4);
    CHECK(P.beta == Approx(2.0 * pi / 0.01));
    for (std::size_t k = 0; k < 4; ++k)
    {
        CHECK(P.feed_angles[k] == Approx(2.0 * pi * double(k) / 4.0));
        // Antenna co-located with the feed
        CHECK(std::abs(P.matrix(static_cast<Eigen::Index>(16 * k), static_cast<Eigen::Index>(k)) - 1.0) < 1e-14);
        // Walking clockwise from the feed, magnitude never grows
        double prev = 2.0;
        for (std::size_t step = 0; step < 64; ++step)
        {
            const auto m = static_cast<Eigen::Index>((16 * k + step) % 64);
            const double mag = std::abs(P.matrix(m, static_cast<Eigen::Index>(k)));
            CHECK(mag <= prev);
            CHECK(mag <= 1.0);
            prev = mag;
        }
    }
    CHECK_THROWS_AS(propagation_matrix(array, 0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(propagation_matrix(array, 65, 5.0), std::invalid_argument);
}
