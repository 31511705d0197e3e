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

#include <aifs/error.hpp>

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace aifs {

/// Absolute tolerance applied to every AIFS element bound.
inline constexpr double kElementTolerance = 1e-12;

/// One (membership, non-membership) pair. The struct itself is unconstrained so
/// that the difference operators can run on raw real pairs; `is_valid` checks
/// the intuitionistic fuzzy constraints.
struct Element {
    double mu = 0.0;
    double nu = 0.0;

    constexpr double hesitancy() const noexcept { return 1.0 - (mu + nu); }

    friend constexpr bool operator==(const Element&, const Element&) = default;
};

inline bool is_valid(const Element& e) noexcept
{
    constexpr double tol = kElementTolerance;
    if (!std::isfinite(e.mu) || !std::isfinite(e.nu))
        return false;
    return e.mu >= -tol && e.mu <= 1.0 + tol && e.nu >= -tol && e.nu <= 1.0 + tol &&
           e.mu + e.nu <= 1.0 + tol;
}

inline std::string describe(const Element& e)
{
    return "(mu=" + std::to_string(e.mu) + ", nu=" + std::to_string(e.nu) + ")";
}

/// A labelled, validated AIFS sequence over a universe of k >= 1 features.
/// The (0, 0) element at index 0 is implicit and never stored.
class Pattern {
public:
    Pattern() = default;

    Pattern(std::string label, std::vector<Element> elements)
        : label_(std::move(label)), elements_(std::move(elements))
    {
        if (elements_.empty())
            throw Error(ErrorKind::EmptyInput, "pattern '" + label_ + "' has no elements");
        for (std::size_t j = 0; j < elements_.size(); ++j) {
            if (!is_valid(elements_[j])) {
                throw Error(ErrorKind::InvalidElement, "pattern '" + label_ + "' element " +
                                                           std::to_string(j + 1) + " " +
                                                           describe(elements_[j]) +
                                                           " violates 0 <= mu, nu and mu + nu <= 1");
            }
        }
    }

    const std::string& label() const noexcept { return label_; }
    std::span<const Element> elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Element& operator[](std::size_t j) const { return elements_[j]; }

    friend bool operator==(const Pattern& a, const Pattern& b)
    {
        return a.elements_ == b.elements_;
    }

private:
    std::string label_;
    std::vector<Element> elements_;
};

/// Which components of each pair the novel divided difference sees.
enum class Projection {
    Full,             // (mu_j, nu_j)
    MembershipOnly,   // (mu_j, 0)
    NonMembershipOnly // (0, nu_j)
};

constexpr Element project(const Element& e, Projection p) noexcept
{
    switch (p) {
    case Projection::MembershipOnly: return {e.mu, 0.0};
    case Projection::NonMembershipOnly: return {0.0, e.nu};
    case Projection::Full: break;
    }
    return e;
}

/// Consecutive differences with a zero baseline: (v1 - 0, v2 - v1, ..., vk - v(k-1)).
inline std::vector<double> delta(std::span<const double> seq)
{
    if (seq.empty())
        throw Error(ErrorKind::EmptyInput, "delta of an empty sequence");
    std::vector<double> out(seq.size());
    double prev = 0.0;
    for (std::size_t j = 0; j < seq.size(); ++j) {
        out[j] = seq[j] - prev;
        prev = seq[j];
    }
    return out;
}

/// Row-major double sequence; grid[m-1][n-1] holds y_mn.
using Grid = std::vector<std::vector<double>>;

/// Mixed second difference y_mn - y_m(n-1) - y_(m-1)n + y_(m-1)(n-1) with
/// 1-based (m, n) and zeros on the m = 0 and n = 0 boundaries.
/// Not used by any measure.
inline double divided_difference_grid(const Grid& grid, std::size_t m, std::size_t n)
{
    if (m == 0 || n == 0 || m > grid.size() || n > grid[m - 1].size()) {
        throw Error(ErrorKind::IndexError, "grid index (" + std::to_string(m) + ", " +
                                              std::to_string(n) + ") out of range");
    }
    auto at = [&](std::size_t i, std::size_t j) -> double {
        if (i == 0 || j == 0)
            return 0.0;
        const auto& row = grid[i - 1];
        if (j > row.size())
            throw Error(ErrorKind::IndexError, "ragged grid at row " + std::to_string(i));
        return row[j - 1];
    };
    return at(m, n) - at(m, n - 1) - at(m - 1, n) + at(m - 1, n - 1);
}

/// mu_k - mu_(k-1) + nu_(k-1) - nu_k
constexpr double novel_divided_difference(const Element& curr, const Element& prev) noexcept
{
    return curr.mu - prev.mu + prev.nu - curr.nu;
}

/// The novel divided difference applied along a (possibly raw) pair stream,
/// after projecting each pair. Baseline (0, 0) precedes index 1.
inline std::vector<double> novel_dd_sequence(std::span<const Element> elements,
                                             Projection projection = Projection::Full)
{
    std::vector<double> out;
    out.reserve(elements.size());
    Element prev{};
    for (const auto& e : elements) {
        const Element curr = project(e, projection);
        out.push_back(novel_divided_difference(curr, prev));
        prev = curr;
    }
    return out;
}

inline std::vector<double> novel_dd_sequence(const Pattern& pattern,
                                             Projection projection = Projection::Full)
{
    return novel_dd_sequence(pattern.elements(), projection);
}

/// Sum of absolute step sizes under a projection.
inline double total_variation(std::span<const Element> elements, Projection projection)
{
    double sum = 0.0;
    for (double d : novel_dd_sequence(elements, projection))
        sum += std::abs(d);
    return sum;
}

/// Component-wise y - x; the result is generally not a valid AIFS sequence.
inline std::vector<Element> pairwise_difference(std::span<const Element> y,
                                                std::span<const Element> x)
{
    if (y.size() != x.size())
        throw Error(ErrorKind::LengthMismatch, "pairwise difference of unequal lengths");
    std::vector<Element> out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j)
        out[j] = {y[j].mu - x[j].mu, y[j].nu - x[j].nu};
    return out;
}

/// Standard AIFS containment: a is a subset of b iff mu_a <= mu_b and nu_a >= nu_b
/// point-wise.
inline bool is_subset(std::span<const Element> a, std::span<const Element> b) noexcept
{
    if (a.size() != b.size())
        return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].mu > b[j].mu || a[j].nu < b[j].nu)
            return false;
    }
    return true;
}

} // namespace aifs
