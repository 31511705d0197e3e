// ----------------------------------------------------------------------------
// Copyright 2026 The aifs-spatial Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ----------------------------------------------------------------------------

#pragma once

#include <aifs/core.hpp>
#include <aifs/spatial.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aifs {

enum class MeasureId {
    S_Lp,
    S_Bd,
    S_C,
    S_Dc,
    S_Fz,
    S_Hk,
    S_Hy1_1,
    S_Hy2_1,
    S_Hy3_1,
    S_Hy1_2,
    S_Hy2_2,
    S_Hy3_2,
    S_Hy_3,
    S_Lzd,
    S_Ls,
    S_M,
    S_Hm,
    S_Az_p,
    S_Az_p_h,
    SSM_MD,
    SSM_NMD,
    SSM_ED,
};

inline constexpr std::size_t kMeasureCount = 22;

/// Free parameters of the measures. Index sets are 1-based feature indices.
struct MeasureParams {
    int p = 1;
    int z = 2;
    std::vector<std::size_t> delta_set;
    std::vector<std::size_t> gamma_set;
};

enum class Param { P, Z, Partition };

struct MeasureInfo {
    MeasureId id;
    std::string_view key;   // lower-case CLI name
    std::string_view name;  // display name
    std::string_view source;
    std::vector<Param> params;
};

/// Every implemented measure in display order.
inline const std::vector<MeasureInfo>& measure_catalog()
{
    static const std::vector<MeasureInfo> catalog = {
        {MeasureId::S_Lp, "s_lp", "S_Lp", "Atanassov", {Param::P}},
        {MeasureId::S_Bd, "s_bd", "S_Bd", "Boran et al.", {Param::P, Param::Z}},
        {MeasureId::S_C, "s_c", "S_C", "Chen et al.", {}},
        {MeasureId::S_Dc, "s_dc", "S_Dc", "Dengfeng et al.", {Param::P}},
        {MeasureId::S_Fz, "s_fz", "S_Fz", "Fan et al.", {}},
        {MeasureId::S_Hk, "s_hk", "S_Hk", "Hong et al.", {}},
        {MeasureId::S_Hy1_1, "s_hy1_1", "S^1_Hy1", "Hung et al. (2004)", {}},
        {MeasureId::S_Hy2_1, "s_hy2_1", "S^1_Hy2", "Hung et al. (2004)", {}},
        {MeasureId::S_Hy3_1, "s_hy3_1", "S^1_Hy3", "Hung et al. (2004)", {}},
        {MeasureId::S_Hy1_2, "s_hy1_2", "S^2_Hy1", "Hung et al. (2007)", {Param::P}},
        {MeasureId::S_Hy2_2, "s_hy2_2", "S^2_Hy2", "Hung et al. (2007)", {Param::P}},
        {MeasureId::S_Hy3_2, "s_hy3_2", "S^2_Hy3", "Hung et al. (2007)", {Param::P}},
        {MeasureId::S_Hy_3, "s_hy_3", "S^3_Hy", "Hung et al. (2008)", {}},
        {MeasureId::S_Lzd, "s_lzd", "S_Lzd", "Li et al.", {}},
        {MeasureId::S_Ls, "s_ls", "S_Ls", "Liang et al.", {Param::P}},
        {MeasureId::S_M, "s_m", "S_M", "Mitchell", {Param::P}},
        {MeasureId::S_Hm, "s_hm", "S_Hm", "Nagan et al.", {}},
        {MeasureId::S_Az_p, "s_az_p", "S_Az_p", "Ashraf et al.", {Param::P}},
        {MeasureId::S_Az_p_h, "s_az_p_h", "S^h_Az_p", "Ashraf et al.", {Param::P, Param::Partition}},
        {MeasureId::SSM_MD, "ssm_md", "MD-S_bv", "spatial similarity", {}},
        {MeasureId::SSM_NMD, "ssm_nmd", "NMD-S_bv", "spatial similarity", {}},
        {MeasureId::SSM_ED, "ssm_ed", "ED-S_bv", "spatial similarity", {}},
    };
    return catalog;
}

inline const MeasureInfo& measure_info(MeasureId id)
{
    return measure_catalog()[static_cast<std::size_t>(id)];
}

inline std::optional<MeasureId> find_measure(std::string_view key)
{
    for (const auto& info : measure_catalog()) {
        if (info.key == key)
            return info.id;
    }
    return std::nullopt;
}

constexpr bool is_spatial(MeasureId id) noexcept
{
    return id == MeasureId::SSM_MD || id == MeasureId::SSM_NMD || id == MeasureId::SSM_ED;
}

inline bool uses_param(MeasureId id, Param param)
{
    const auto& ps = measure_info(id).params;
    return std::find(ps.begin(), ps.end(), param) != ps.end();
}

namespace detail {

inline double power(double x, int p)
{
    if (p == 1)
        return x;
    if (p == 2)
        return x * x;
    return std::pow(x, p);
}

inline double root(double x, int p)
{
    if (p == 1)
        return x;
    if (p == 2)
        return std::sqrt(x);
    return std::pow(x, 1.0 / p);
}

inline void check_params(MeasureId id, const MeasureParams& params)
{
    if (uses_param(id, Param::P) && params.p < 1)
        throw Error(ErrorKind::InvalidParams, "p must be >= 1, got " + std::to_string(params.p));
    if (uses_param(id, Param::Z) && params.z < 2)
        throw Error(ErrorKind::InvalidParams, "z must be >= 2, got " + std::to_string(params.z));
}

/// Validates (delta, gamma) as a partition of {1..k} and returns a per-index
/// membership mask for delta.
inline std::vector<bool> partition_mask(const MeasureParams& params, std::size_t k)
{
    std::vector<int> seen(k + 1, 0);
    std::vector<bool> in_delta(k + 1, false);
    auto mark = [&](const std::vector<std::size_t>& set, bool delta) {
        for (std::size_t j : set) {
            if (j == 0 || j > k) {
                throw Error(ErrorKind::InvalidPartition,
                            "index " + std::to_string(j) + " outside 1.." + std::to_string(k));
            }
            if (++seen[j] > 1)
                throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(j) + " repeated");
            in_delta[j] = delta;
        }
    };
    mark(params.delta_set, true);
    mark(params.gamma_set, false);
    for (std::size_t j = 1; j <= k; ++j) {
        if (seen[j] == 0)
            throw Error(ErrorKind::InvalidPartition, "index " + std::to_string(j) + " not covered");
    }
    if (params.delta_set.empty())
        throw Error(ErrorKind::InvalidPartition, "delta set must be nonempty");
    return in_delta;
}

} // namespace detail

/// Scalar value of a measure; SSM ids return their own branch.
/// Notation follows the usual (a, b) = (mu_y, nu_y), (c, d) = (mu_x, nu_x).
inline double score(MeasureId id, const MeasureParams& params, std::span<const Element> y,
                    std::span<const Element> x)
{
    using detail::power;
    using detail::root;
    detail::check_pair(y, x);
    detail::check_params(id, params);

    const std::size_t k = y.size();
    const double kd = static_cast<double>(k);
    const int p = params.p;

    // Sum over j of f(a, b, c, d).
    auto sum = [&](auto&& f) {
        double s = 0.0;
        for (std::size_t j = 0; j < k; ++j)
            s += f(y[j].mu, y[j].nu, x[j].mu, x[j].nu);
        return s;
    };

    switch (id) {
    case MeasureId::S_Lp:
        // Absolute differences, so p = 1 gives the normalized Hamming measure.
        return 1.0 - root(sum([&](double a, double b, double c, double d) {
                              return power(std::abs(a - c), p) + power(std::abs(b - d), p);
                          }) / (2.0 * kd),
                          p);
    case MeasureId::S_Bd: {
        const double z = params.z;
        const double s = sum([&](double a, double b, double c, double d) {
            const double u = a - c, v = b - d;
            return power(std::abs(z * u - v), p) + power(std::abs(z * v - u), p);
        });
        return 1.0 - root(s / (2.0 * kd * power(z + 1.0, p)), p);
    }
    case MeasureId::S_C:
        return 1.0 - sum([](double a, double b, double c, double d) {
                         return std::abs((a - b) - (c - d));
                     }) / (2.0 * kd);
    case MeasureId::S_Dc:
        return 1.0 - root(sum([&](double a, double b, double c, double d) {
                              const double m_y = (a + 1.0 - b) / 2.0;
                              const double m_x = (c + 1.0 - d) / 2.0;
                              return power(std::abs(m_y - m_x), p);
                          }) / kd,
                          p);
    case MeasureId::S_Fz:
        // Score-function form with separate |a - c| and |b - d| terms.
        return 1.0 - sum([](double a, double b, double c, double d) {
                         return std::abs((a - b) - (c - d)) + std::abs(a - c) + std::abs(b - d);
                     }) / (4.0 * kd);
    case MeasureId::S_Hk:
        return 1.0 - sum([](double a, double b, double c, double d) {
                         return std::abs(a - c) + std::abs(b - d);
                     }) / (2.0 * kd);
    case MeasureId::S_Hy1_1:
    case MeasureId::S_Hy2_1:
    case MeasureId::S_Hy3_1: {
        const double s1 = 1.0 - sum([](double a, double b, double c, double d) {
                                    return std::max(std::abs(a - c), std::abs(b - d));
                                }) / kd;
        if (id == MeasureId::S_Hy1_1)
            return s1;
        if (id == MeasureId::S_Hy2_1)
            return (std::exp(s1 - 1.0) - std::exp(-1.0)) / (1.0 - std::exp(-1.0));
        return s1 / (2.0 - s1);
    }
    case MeasureId::S_Hy1_2:
    case MeasureId::S_Hy2_2:
    case MeasureId::S_Hy3_2: {
        const double dp = root(sum([&](double a, double b, double c, double d) {
                                   return power(std::abs(a - c), p) + power(std::abs(b - d), p);
                               }),
                               p) /
                          kd;
        const double q = root(2.0, p);
        if (id == MeasureId::S_Hy1_2)
            return (q - dp) / q;
        if (id == MeasureId::S_Hy2_2)
            return (std::exp(-dp) - std::exp(-q)) / (1.0 - std::exp(-q));
        return (q - dp) / (q * (1.0 + dp));
    }
    case MeasureId::S_Hy_3:
        // The halving applies to both differences.
        return sum([](double a, double b, double c, double d) {
                   return 1.0 - 0.5 * (std::abs(a - c) + std::abs(b - d));
               }) / kd;
    case MeasureId::S_Lzd:
        return 1.0 - std::sqrt(sum([](double a, double b, double c, double d) {
                                   return (a - c) * (a - c) + (b - d) * (b - d);
                               }) / (2.0 * kd));
    case MeasureId::S_Ls:
        // Sum s + t of the two half-differences.
        return 1.0 - root(sum([&](double a, double b, double c, double d) {
                              const double s = std::abs(a - c) / 2.0;
                              const double t = std::abs((1.0 - b) - (1.0 - d)) / 2.0;
                              return power(s + t, p);
                          }) / kd,
                          p);
    case MeasureId::S_M: {
        const double rho_mu =
            1.0 - root(sum([&](double a, double, double c, double) {
                           return power(std::abs(a - c), p);
                       }) / kd,
                       p);
        const double rho_nu =
            1.0 - root(sum([&](double, double b, double, double d) {
                           return power(std::abs(b - d), p);
                       }) / kd,
                       p);
        return 0.5 * (rho_mu + rho_nu);
    }
    case MeasureId::S_Hm:
        return 1.0 - sum([](double a, double b, double c, double d) {
                         return std::abs(a - c) + std::abs(b - d) +
                                std::abs(std::max(a, d) - std::max(c, b));
                     }) / (3.0 * kd);
    case MeasureId::S_Az_p:
    case MeasureId::S_Az_p_h: {
        std::vector<bool> in_delta(k + 1, true);
        if (id == MeasureId::S_Az_p_h)
            in_delta = detail::partition_mask(params, k);
        const std::size_t first =
            static_cast<std::size_t>(std::find(in_delta.begin() + 1, in_delta.end(), true) -
                                     in_delta.begin());
        // Features in delta contribute stepwise differences, except the first
        // one; features in gamma contribute raw differences.
        double s = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            const Element& yj = y[j - 1];
            const Element& xj = x[j - 1];
            if (!in_delta[j] || j == first) {
                s += power(std::abs(yj.mu - xj.mu), p) + power(std::abs(yj.nu - xj.nu), p);
            } else {
                const Element& yp = y[j - 2];
                const Element& xp = x[j - 2];
                s += power(std::abs((yj.mu - yp.mu) - (xj.mu - xp.mu)), p) +
                     power(std::abs((yj.nu - yp.nu) - (xj.nu - xp.nu)), p);
            }
        }
        return 1.0 - root(s, p) / root(2.0 * kd, p);
    }
    case MeasureId::SSM_MD: return 1.0 - spatial_distance(y, x).md;
    case MeasureId::SSM_NMD: return 1.0 - spatial_distance(y, x).nmd;
    case MeasureId::SSM_ED: return 1.0 - spatial_distance(y, x).ed;
    }
    throw Error(ErrorKind::InvalidParams, "unknown measure id");
}

inline double score(MeasureId id, const MeasureParams& params, const Pattern& y, const Pattern& x)
{
    return score(id, params, y.elements(), x.elements());
}

/// Scalar for baseline measures, the full (md, nmd, ed) triple for SSM ids.
using MeasureValue = std::variant<double, SpatialValue>;

inline MeasureValue similarity(MeasureId id, const MeasureParams& params, const Pattern& y,
                               const Pattern& x)
{
    if (is_spatial(id))
        return spatial_similarity(y, x);
    return score(id, params, y, x);
}

} // namespace aifs
