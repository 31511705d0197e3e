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

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace aifs {

/// Result of a three-branched measure, always ordered (md, nmd, ed).
/// Components are not clamped: inputs outside the AIFS simplex may leave [0, 1].
struct SpatialValue {
    double md = 0.0;  // membership dominant
    double nmd = 0.0; // non-membership dominant
    double ed = 0.0;  // equidominant

    friend constexpr bool operator==(const SpatialValue&, const SpatialValue&) = default;
};

/// |mu + nu - 1| allowed for an element to count as fuzzy.
inline constexpr double kFuzzyTolerance = 1e-9;

namespace detail {

inline void check_pair(std::span<const Element> y, std::span<const Element> x)
{
    if (y.empty() || x.empty())
        throw Error(ErrorKind::EmptyInput, "spatial measure of an empty pattern");
    if (y.size() != x.size()) {
        throw Error(ErrorKind::LengthMismatch, "patterns of length " + std::to_string(y.size()) +
                                                   " and " + std::to_string(x.size()));
    }
}

} // namespace detail

/// D1, D2, D3 between two equal-length pair streams. Works on raw real pairs;
/// the pattern overload below adds the AIFS validation.
inline SpatialValue spatial_distance(std::span<const Element> y, std::span<const Element> x)
{
    detail::check_pair(y, x);
    const auto mu_y = novel_dd_sequence(y, Projection::MembershipOnly);
    const auto mu_x = novel_dd_sequence(x, Projection::MembershipOnly);
    const auto nu_y = novel_dd_sequence(y, Projection::NonMembershipOnly);
    const auto nu_x = novel_dd_sequence(x, Projection::NonMembershipOnly);
    const auto full_y = novel_dd_sequence(y, Projection::Full);
    const auto full_x = novel_dd_sequence(x, Projection::Full);

    double md = 0.0, nmd = 0.0, ed = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double m = std::abs(mu_y[j] - mu_x[j]);
        const double n = std::abs(nu_y[j] - nu_x[j]);
        const double f = std::abs(full_y[j] - full_x[j]);
        md += m + f;
        nmd += n + f;
        ed += m + n;
    }
    const double norm = 4.0 * static_cast<double>(y.size());
    return {md / norm, nmd / norm, ed / norm};
}

inline SpatialValue spatial_distance(const Pattern& y, const Pattern& x)
{
    return spatial_distance(y.elements(), x.elements());
}

/// Branch-wise complement of the spatial distance (MD-, NMD-, ED-similarity).
inline SpatialValue spatial_similarity(std::span<const Element> y, std::span<const Element> x)
{
    const auto d = spatial_distance(y, x);
    return {1.0 - d.md, 1.0 - d.nmd, 1.0 - d.ed};
}

inline SpatialValue spatial_similarity(const Pattern& y, const Pattern& x)
{
    return spatial_similarity(y.elements(), x.elements());
}

/// The three induced norms: the spatial distance to the all-zero stream.
inline SpatialValue spatial_norm(std::span<const Element> y)
{
    if (y.empty())
        throw Error(ErrorKind::EmptyInput, "norm of an empty pattern");
    const std::vector<Element> zero(y.size());
    return spatial_distance(y, zero);
}

inline SpatialValue spatial_norm(const Pattern& y) { return spatial_norm(y.elements()); }

inline bool is_fuzzy(std::span<const Element> elements, double tol = kFuzzyTolerance) noexcept
{
    for (const auto& e : elements) {
        if (!(std::abs(e.mu + e.nu - 1.0) <= tol))
            return false;
    }
    return true;
}

struct FuzzyDistance {
    double d1p = 0.0;
    double d2p = 0.0;
};

/// Two-branch reduction on fuzzy inputs (mu + nu = 1):
/// d1p = (1/4k) sum |dmu^y - dmu^x|, d2p = 2 * d1p.
inline FuzzyDistance fuzzy_reduced_distance(std::span<const Element> y, std::span<const Element> x)
{
    detail::check_pair(y, x);
    if (!is_fuzzy(y) || !is_fuzzy(x))
        throw Error(ErrorKind::NotFuzzy, "fuzzy reduction needs mu + nu = 1 at every element");
    const auto mu_y = novel_dd_sequence(y, Projection::MembershipOnly);
    const auto mu_x = novel_dd_sequence(x, Projection::MembershipOnly);
    double sum = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j)
        sum += std::abs(mu_y[j] - mu_x[j]);
    const double k = static_cast<double>(y.size());
    return {sum / (4.0 * k), sum / (2.0 * k)};
}

inline FuzzyDistance fuzzy_reduced_distance(const Pattern& y, const Pattern& x)
{
    return fuzzy_reduced_distance(y.elements(), x.elements());
}

/// Univalued bounded-variation distance on real sequences:
/// (1/2k) sum |dy_j - dx_j| with y_0 = x_0 = 0.
inline double real_reduced_distance(std::span<const double> y, std::span<const double> x)
{
    if (y.size() != x.size()) {
        throw Error(ErrorKind::LengthMismatch, "sequences of length " + std::to_string(y.size()) +
                                                   " and " + std::to_string(x.size()));
    }
    const auto dy = delta(y);
    const auto dx = delta(x);
    double sum = 0.0;
    for (std::size_t j = 0; j < dy.size(); ++j)
        sum += std::abs(dy[j] - dx[j]);
    return sum / (2.0 * static_cast<double>(y.size()));
}

/// Embeds a real sequence along the membership axis, (v_j, 0).
inline std::vector<Element> embed_membership(std::span<const double> values)
{
    std::vector<Element> out;
    out.reserve(values.size());
    for (double v : values)
        out.push_back({v, 0.0});
    return out;
}

/// Embeds a real sequence along the non-membership axis, (0, v_j).
inline std::vector<Element> embed_nonmembership(std::span<const double> values)
{
    std::vector<Element> out;
    out.reserve(values.size());
    for (double v : values)
        out.push_back({0.0, v});
    return out;
}

} // namespace aifs
