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

#include "hmimo/beamforming.hpp"

#include "hmimo/errors.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hmimo
{

namespace
{
constexpr cd j_unit{0.0, 1.0};

double median_of(std::vector<double> v)
{
    const auto mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (v.size() % 2 == 0)
    {
        const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
        m = 0.5 * (m + lower);
    }
    return m;
}
} // namespace

std::string_view to_string(ControlKind k)
{
    switch (k)
    {
    case ControlKind::AmplitudeOnly:
        return "amplitude";
    case ControlKind::BinaryAmplitude:
        return "binary";
    case ControlKind::LorentzianPhase:
        return "lorentzian";
    }
    return "?";
}

std::size_t Scenario::n_antennas() const
{
    return du_channels.empty() ? 0 : du_channels.front().size();
}

void Scenario::validate() const
{
    if (du_channels.empty())
        throw std::invalid_argument("Scenario: at least one data user required");
    if (!(transmit_power > 0.0) || !(noise_power > 0.0))
        throw std::invalid_argument("Scenario: transmit and noise power must be positive");
    if (!(energy_floor >= 0.0))
        throw std::invalid_argument("Scenario: energy floor must be non-negative");
    const auto n = n_antennas();
    if (n == 0)
        throw std::invalid_argument("Scenario: empty channel");
    for (const auto *set : {&du_channels, &eu_channels})
        for (const auto &h : *set)
            if (h.size() != n)
                throw std::invalid_argument("Scenario: channel lengths differ");
}

CVec fd_asymptotic(const Scenario &scenario)
{
    scenario.validate();
    const double Pt = scenario.transmit_power;
    const double E0 = scenario.energy_floor;

    double eu_share = 0.0;
    std::vector<double> w_eu;
    for (const auto &h : scenario.eu_channels)
    {
        const double g = h.vector.squaredNorm();
        if (!(g > 0.0))
            throw EnergyInfeasible("fd_asymptotic: energy user with zero channel");
        const double w = std::sqrt(E0 / (Pt * g * g));
        w_eu.push_back(w);
        eu_share += w * w * g;
    }
    const double remaining = 1.0 - eu_share;
    if (!(remaining > 0.0))
        throw EnergyInfeasible("fd_asymptotic: energy users need " + std::to_string(eu_share) +
                               " of the transmit power");

    double inv_sum = 0.0;
    for (const auto &h : scenario.du_channels)
    {
        const double g = h.vector.squaredNorm();
        if (!(g > 0.0))
            throw std::invalid_argument("fd_asymptotic: data user with zero channel");
        inv_sum += 1.0 / g;
    }

    CVec f = CVec::Zero(static_cast<Eigen::Index>(scenario.n_antennas()));
    for (const auto &h : scenario.du_channels)
    {
        const double g = h.vector.squaredNorm();
        f += std::sqrt(remaining / (g * g * inv_sum)) * h.vector;
    }
    for (std::size_t l = 0; l < w_eu.size(); ++l)
        f += w_eu[l] * scenario.eu_channels[l].vector;
    return f;
}

CVec mf_baseline(const Scenario &scenario)
{
    if (scenario.du_channels.empty() && scenario.eu_channels.empty())
        throw std::invalid_argument("mf_baseline: no users");
    const auto &first = scenario.du_channels.empty() ? scenario.eu_channels.front() : scenario.du_channels.front();
    CVec f = CVec::Zero(first.vector.size());
    for (const auto *set : {&scenario.du_channels, &scenario.eu_channels})
        for (const auto &h : *set)
        {
            if (h.vector.size() != f.size())
                throw std::invalid_argument("mf_baseline: channel lengths differ");
            f += h.vector;
        }
    const double n = f.norm();
    if (!(n > 0.0))
        throw DegenerateBeam("mf_baseline: user channels sum to zero");
    return f / n;
}

DigitalBeamformer digital_ls_update(const PropagationMatrix &P, const AnalogBeamformer &analog, const CVec &f,
                                    RankPolicy policy)
{
    if (analog.q.size() != P.matrix.rows() || f.size() != P.matrix.rows())
        throw std::invalid_argument("digital_ls_update: dimension mismatch");
    const CMat A = analog.q.asDiagonal() * P.matrix;
    Eigen::CompleteOrthogonalDecomposition<CMat> cod(A);
    const auto rank = cod.rank();
    if (rank == 0)
        throw SingularUpdate("digital_ls_update: Q P is zero");
    if (rank < A.cols() && policy == RankPolicy::Strict)
        throw SingularUpdate("digital_ls_update: Q P has rank " + std::to_string(rank) + " < " +
                             std::to_string(A.cols()));
    return {cod.solve(f)};
}

CVec analog_target(const PropagationMatrix &P, const DigitalBeamformer &digital, const CVec &f)
{
    const CVec pb = P.matrix * digital.b;
    CVec x(pb.size());
    for (Eigen::Index i = 0; i < pb.size(); ++i)
        x(i) = pb(i) == cd(0.0, 0.0) ? cd(0.0, 0.0) : f(i) / pb(i);
    return x;
}

CVec project_amplitude(const CVec &x, double a)
{
    CVec q(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        q(i) = std::clamp(x(i).real(), 0.0, a);
    return q;
}

CVec project_binary(const CVec &x, double a)
{
    CVec q(x.size());
    // Ties (Re x == a/2) go to 0.
    for (Eigen::Index i = 0; i < x.size(); ++i)
        q(i) = x(i).real() > a / 2.0 ? a : 0.0;
    return q;
}

CVec project_lorentzian(const CVec &x, double a)
{
    CVec q(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
    {
        const double phi = std::arg(2.0 * x(i) - a * j_unit);
        q(i) = 0.5 * a * (j_unit + std::polar(1.0, phi));
    }
    return q;
}

CVec project(ControlKind kind, const CVec &x, double a)
{
    switch (kind)
    {
    case ControlKind::AmplitudeOnly:
        return project_amplitude(x, a);
    case ControlKind::BinaryAmplitude:
        return project_binary(x, a);
    case ControlKind::LorentzianPhase:
        return project_lorentzian(x, a);
    }
    throw std::logic_error("project: unknown control kind");
}

AnalogBeamformer analog_amplitude(const CVec &x, bool scaled)
{
    AnalogBeamformer out;
    out.mode = {ControlKind::AmplitudeOnly, scaled};
    double peak = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        peak = std::max(peak, x(i).real());
    if (!(peak > 0.0))
        throw DegenerateAnalog("analog_amplitude: no element with positive real part");
    if (!scaled)
    {
        out.q = project_amplitude(x, 1.0);
        return out;
    }
    out.q = project_amplitude(x, std::numeric_limits<double>::infinity());
    out.scale_a = peak;
    return out;
}

double binary_scale_objective(const CVec &x, double a)
{
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        sum += x(i).real() > a / 2.0 ? std::abs(x(i) - a) : std::abs(x(i));
    return sum;
}

namespace
{
template <typename Centre>
double binary_elimination(const CVec &x, Centre centre)
{
    std::vector<double> active;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x(i).real() > 0.0)
            active.push_back(x(i).real());
    if (active.empty())
        throw DegenerateAnalog("binary scale: no element with positive real part");

    for (;;)
    {
        const double a = centre(active);
        const auto before = active.size();
        std::erase_if(active, [a](double v) { return v < a / 2.0; });
        if (active.size() == before)
            return a;
    }
}
} // namespace

double binary_scale_mean(const CVec &x)
{
    return binary_elimination(x, [](const std::vector<double> &v) {
        double s = 0.0;
        for (double e : v)
            s += e;
        return s / static_cast<double>(v.size());
    });
}

double binary_scale_median(const CVec &x)
{
    return binary_elimination(x, [](const std::vector<double> &v) { return median_of(v); });
}

double binary_scale(const CVec &x, BinaryScaleRule rule)
{
    return rule == BinaryScaleRule::Median ? binary_scale_median(x) : binary_scale_mean(x);
}

AnalogBeamformer analog_binary(const CVec &x, bool scaled, BinaryScaleRule rule)
{
    AnalogBeamformer out;
    out.mode = {ControlKind::BinaryAmplitude, scaled};
    out.scale_a = scaled ? binary_scale(x, rule) : 1.0;
    out.q = project_binary(x, out.scale_a);
    return out;
}

double lorentzian_scale_objective(const CVec &x, double a)
{
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
    {
        const double re = x(i).real();
        const double im = x(i).imag();
        const double centre_dist = std::sqrt(std::max(re * re + im * im - a * im + 0.25 * a * a, 0.0));
        sum += std::abs(centre_dist - 0.5 * a);
    }
    return sum;
}

std::size_t lorentzian_anchor(const CVec &x)
{
    std::size_t best = 0;
    double best_mag = -1.0;
    for (Eigen::Index i = 0; i < x.size(); ++i)
    {
        if (x(i).imag() > 0.0 && std::abs(x(i)) > best_mag)
        {
            best_mag = std::abs(x(i));
            best = static_cast<std::size_t>(i);
        }
    }
    if (best_mag < 0.0)
        throw DegenerateAnalog("lorentzian scale: no element with positive imaginary part");
    return best;
}

namespace
{
double golden_section(const CVec &x, double lo, double hi, int iterations)
{
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = lorentzian_scale_objective(x, c);
    double fd = lorentzian_scale_objective(x, d);
    for (int it = 0; it < iterations; ++it)
    {
        if (fc <= fd)
        {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = lorentzian_scale_objective(x, c);
        }
        else
        {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = lorentzian_scale_objective(x, d);
        }
    }
    return fc <= fd ? c : d;
}

// The closed-form value competes with the refined grid optimum.
double lorentzian_global(const CVec &x, double anchor_mag, double closed_form)
{
    constexpr int points = 512;
    const double lo = std::log(1e-3 * anchor_mag);
    const double hi = std::log(1e3 * anchor_mag);
    const double step = (hi - lo) / (points - 1);

    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i)
    {
        const double v = lorentzian_scale_objective(x, std::exp(lo + step * i));
        if (v < best_val)
        {
            best_val = v;
            best = i;
        }
    }
    const double a_lo = std::exp(lo + step * std::max(best - 1, 0));
    const double a_hi = std::exp(lo + step * std::min(best + 1, points - 1));
    const double refined = golden_section(x, a_lo, a_hi, 60);
    const double grid_a = std::exp(lo + step * best);
    const double refined_val = lorentzian_scale_objective(x, refined);
    const double pick = refined_val <= best_val ? refined : grid_a;
    return lorentzian_scale_objective(x, closed_form) < std::min(refined_val, best_val) ? closed_form : pick;
}
} // namespace

double lorentzian_scale(const CVec &x, LorentzianScaleRule rule)
{
    const cd p = x(static_cast<Eigen::Index>(lorentzian_anchor(x)));
    switch (rule)
    {
    case LorentzianScaleRule::ClosedForm:
        return std::norm(p) / p.imag();
    case LorentzianScaleRule::PrintedFormula:
        return std::abs(p * p) / (2.0 * p.imag());
    case LorentzianScaleRule::GlobalSearch:
        return lorentzian_global(x, std::abs(p), std::norm(p) / p.imag());
    }
    throw std::logic_error("lorentzian_scale: unknown rule");
}

AnalogBeamformer analog_lorentzian(const CVec &x, bool scaled, LorentzianScaleRule rule)
{
    AnalogBeamformer out;
    out.mode = {ControlKind::LorentzianPhase, scaled};
    out.scale_a = scaled ? lorentzian_scale(x, rule) : 1.0;
    out.q = project_lorentzian(x, out.scale_a);
    return out;
}

CVec effective_beam(const AnalogBeamformer &analog, const PropagationMatrix &P, const DigitalBeamformer &digital)
{
    return analog.q.cwiseProduct(P.matrix * digital.b);
}

DigitalBeamformer normalize_digital(const DigitalBeamformer &digital, const AnalogBeamformer &analog,
                                    const PropagationMatrix &P)
{
    const double n = effective_beam(analog, P, digital).norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw DegenerateBeam("normalize_digital: effective beam has zero norm");
    return {digital.b / n};
}

std::pair<AnalogBeamformer, DigitalBeamformer> descale(const AnalogBeamformer &analog,
                                                       const DigitalBeamformer &digital)
{
    const double a = analog.scale_a;
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("descale: scale parameter must be positive");
    AnalogBeamformer q = analog;
    q.q = analog.q / a;
    q.scale_a = 1.0;
    return {std::move(q), DigitalBeamformer{digital.b * a}};
}

bool satisfies_constraints(const AnalogBeamformer &analog, double tol)
{
    const double a = analog.scale_a;
    const double t = tol * std::max(a, 1.0);
    for (Eigen::Index i = 0; i < analog.q.size(); ++i)
    {
        const cd q = analog.q(i);
        switch (analog.mode.kind)
        {
        case ControlKind::AmplitudeOnly:
            if (std::abs(q.imag()) > t || q.real() < -t || q.real() > a + t)
                return false;
            break;
        case ControlKind::BinaryAmplitude:
            if (std::abs(q) > t && std::abs(q - a) > t)
                return false;
            break;
        case ControlKind::LorentzianPhase:
            if (std::abs(std::abs(q - 0.5 * a * j_unit) - 0.5 * a) > t)
                return false;
            break;
        }
    }
    return true;
}

} // namespace hmimo
