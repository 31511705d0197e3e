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
#include <aifs/measures.hpp>
#include <aifs/spatial.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace aifs {

/// Tolerance for identities that hold exactly in real arithmetic.
inline constexpr double kPropertyTolerance = 1e-12;

/// Deterministic source for the property suites. Suite i draws from
/// std::mt19937_64 seeded with (seed + i); doubles are (x >> 11) * 2^-53.
class PropertyRng {
public:
    explicit PropertyRng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
    std::size_t length(std::size_t max_len = 16) { return 1 + index(max_len); }

    Element element()
    {
        const double mu = uniform();
        return {mu, uniform() * (1.0 - mu)};
    }

    std::vector<Element> pattern(std::size_t k)
    {
        std::vector<Element> out(k);
        for (auto& e : out)
            e = element();
        return out;
    }

    /// Fuzzy element on a 2^-10 grid, so mu + nu == 1 holds exactly.
    Element fuzzy_element()
    {
        const double mu = static_cast<double>(index(1025)) * 0x1.0p-10;
        return {mu, 1.0 - mu};
    }

    std::vector<Element> raw_pairs(std::size_t k, double lo, double hi)
    {
        std::vector<Element> out(k);
        for (auto& e : out)
            e = {uniform(lo, hi), uniform(lo, hi)};
        return out;
    }

    std::vector<double> reals(std::size_t k, double lo, double hi)
    {
        std::vector<double> out(k);
        for (auto& v : out)
            v = uniform(lo, hi);
        return out;
    }

private:
    std::mt19937_64 gen_;
};

struct PropertyResult {
    std::string name;
    bool assumption_based = false; // reported, never fatal
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<std::string> counterexample; // first failure

    bool ok() const noexcept { return failed == 0; }
};

struct PropertyReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<PropertyResult> results;

    /// True when every non-assumption suite is clean.
    bool passed() const
    {
        return std::all_of(results.begin(), results.end(),
                           [](const PropertyResult& r) { return r.assumption_based || r.ok(); });
    }
};

namespace detail {

inline std::string fmt(double v)
{
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

inline std::string fmt(std::span<const Element> p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? ", [" : "[") + fmt(p[i].mu) + ", " + fmt(p[i].nu) + "]";
    return s + "]";
}

inline std::string fmt(std::span<const double> v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + fmt(v[i]);
    return s + "]";
}

inline std::string fmt(const SpatialValue& v)
{
    return "(" + fmt(v.md) + ", " + fmt(v.nmd) + ", " + fmt(v.ed) + ")";
}

/// Runs `trial` `trials` times; a trial returns a counterexample on failure.
inline PropertyResult run_suite(std::string name, std::size_t trials, std::uint64_t seed,
                                const std::function<std::optional<std::string>(PropertyRng&)>& trial,
                                bool assumption_based = false)
{
    PropertyResult r;
    r.name = std::move(name);
    r.assumption_based = assumption_based;
    r.trials = trials;
    PropertyRng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        if (auto bad = trial(rng)) {
            ++r.failed;
            if (!r.counterexample)
                r.counterexample = "trial " + std::to_string(t) + ": " + *bad;
        } else {
            ++r.passed;
        }
    }
    return r;
}

inline bool close(double a, double b, double tol = kPropertyTolerance)
{
    return std::abs(a - b) <= tol;
}

inline bool close(const SpatialValue& a, const SpatialValue& b, double tol = kPropertyTolerance)
{
    return close(a.md, b.md, tol) && close(a.nmd, b.nmd, tol) && close(a.ed, b.ed, tol);
}

inline bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

inline std::vector<Element> scaled(std::span<const Element> y, double eta)
{
    std::vector<Element> out(y.begin(), y.end());
    for (auto& e : out)
        e = {eta * e.mu, eta * e.nu};
    return out;
}

inline std::vector<Element> shifted(std::span<const Element> y, std::span<const Element> w)
{
    std::vector<Element> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] = {y[i].mu + w[i].mu, y[i].nu + w[i].nu};
    return out;
}

/// An element below `outer` in the order mu <=, nu >=.
inline Element contained_in(const Element& outer, PropertyRng& rng)
{
    const double mu = outer.mu * rng.uniform();
    const double nu = outer.nu + rng.uniform() * std::max(0.0, 1.0 - mu - outer.nu);
    return {mu, nu};
}

inline MeasureParams random_params(MeasureId id, std::size_t k, PropertyRng& rng)
{
    MeasureParams params;
    if (uses_param(id, Param::P))
        params.p = 1 + static_cast<int>(rng.index(4));
    if (uses_param(id, Param::Z))
        params.z = 2 + static_cast<int>(rng.index(4));
    if (uses_param(id, Param::Partition)) {
        params.delta_set.push_back(1 + rng.index(k));
        for (std::size_t j = 1; j <= k; ++j) {
            if (j == params.delta_set.front())
                continue;
            (rng.index(2) ? params.delta_set : params.gamma_set).push_back(j);
        }
        std::sort(params.delta_set.begin(), params.delta_set.end());
    }
    return params;
}

inline std::string describe_params(MeasureId id, const MeasureParams& params)
{
    std::string s;
    if (uses_param(id, Param::P))
        s += " p=" + std::to_string(params.p);
    if (uses_param(id, Param::Z))
        s += " z=" + std::to_string(params.z);
    if (uses_param(id, Param::Partition)) {
        s += " delta={";
        for (std::size_t i = 0; i < params.delta_set.size(); ++i)
            s += (i ? "," : "") + std::to_string(params.delta_set[i]);
        s += "}";
    }
    return s;
}

} // namespace detail

/// Every randomized property suite, in a fixed order. Spatial suites use
/// random valid patterns of length 1..16 unless noted.
inline PropertyReport run_properties(std::size_t trials, std::uint64_t seed)
{
    using detail::fmt;
    using Opt = std::optional<std::string>;
    PropertyReport report;
    report.seed = seed;
    report.trials = trials;
    std::uint64_t suite = 0;
    auto add = [&](std::string name, auto&& trial, bool assumption = false) {
        report.results.push_back(detail::run_suite(std::move(name), trials, seed + suite++, trial, assumption));
    };

    add("spatial.range", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.pattern(k), x = rng.pattern(k);
        const auto d = spatial_distance(y, x);
        if (detail::in_unit(d.md) && detail::in_unit(d.nmd) && detail::in_unit(d.ed))
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " D=" + fmt(d);
    });

    add("spatial.identity", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.pattern(k);
        auto x = y;
        // Half the trials differ in a single coordinate only.
        if (rng.index(2)) {
            x = rng.pattern(k);
        } else {
            auto& e = x[rng.index(k)];
            e = rng.element();
        }
        const auto self = spatial_distance(y, y);
        if (!(self == SpatialValue{0.0, 0.0, 0.0}))
            return "y=" + fmt(y) + " D(y,y)=" + fmt(self);
        const auto d = spatial_distance(y, x);
        const bool equal = std::equal(y.begin(), y.end(), x.begin());
        const bool zero = d.md == 0.0 || d.nmd == 0.0 || d.ed == 0.0;
        if (equal != (d.md == 0.0 && d.nmd == 0.0 && d.ed == 0.0) || (!equal && zero))
            return "y=" + fmt(y) + " x=" + fmt(x) + " D=" + fmt(d);
        return std::nullopt;
    });

    add("spatial.symmetry", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.pattern(k), x = rng.pattern(k);
        const auto a = spatial_distance(y, x), b = spatial_distance(x, y);
        if (a == b)
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " D(y,x)=" + fmt(a) + " D(x,y)=" + fmt(b);
    });

    add("spatial.triangle", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.pattern(k), x = rng.pattern(k), z = rng.pattern(k);
        const auto yx = spatial_distance(y, x), yz = spatial_distance(y, z), zx = spatial_distance(z, x);
        const double t = kPropertyTolerance;
        if (yx.md <= yz.md + zx.md + t && yx.nmd <= yz.nmd + zx.nmd + t && yx.ed <= yz.ed + zx.ed + t)
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " z=" + fmt(z);
    });

    add("spatial.translation_invariance", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.raw_pairs(k, -2.0, 2.0), x = rng.raw_pairs(k, -2.0, 2.0);
        const auto w = rng.raw_pairs(k, -2.0, 2.0);
        const auto a = spatial_distance(detail::shifted(y, w), detail::shifted(x, w));
        const auto b = spatial_distance(y, x);
        if (detail::close(a, b))
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " w=" + fmt(w) + " " + fmt(a) + " vs " + fmt(b);
    });

    add("spatial.absolute_homogeneity", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.raw_pairs(k, -2.0, 2.0), x = rng.raw_pairs(k, -2.0, 2.0);
        const double eta = rng.uniform(-3.0, 3.0);
        const auto a = spatial_distance(detail::scaled(y, eta), detail::scaled(x, eta));
        const auto d = spatial_distance(y, x);
        const double m = std::abs(eta);
        const SpatialValue b{m * d.md, m * d.nmd, m * d.ed};
        if (detail::close(a, b))
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " eta=" + fmt(eta) + " " + fmt(a) + " vs " + fmt(b);
    });

    add("spatial.complementarity", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.pattern(k), x = rng.pattern(k);
        const auto d = spatial_distance(y, x), s = spatial_similarity(y, x);
        if (s == SpatialValue{1.0 - d.md, 1.0 - d.nmd, 1.0 - d.ed})
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " S=" + fmt(s) + " D=" + fmt(d);
    });

    for (const auto& info : measure_catalog()) {
        if (is_spatial(info.id))
            continue;
        const MeasureId id = info.id;
        const std::string key(info.key);
        add("baseline." + key + ".range", [id](PropertyRng& rng) -> Opt {
            const std::size_t k = rng.length();
            const auto y = rng.pattern(k), x = rng.pattern(k);
            const auto params = detail::random_params(id, k, rng);
            const double s = score(id, params, y, x);
            if (s >= -kPropertyTolerance && s <= 1.0 + kPropertyTolerance)
                return std::nullopt;
            return "y=" + fmt(y) + " x=" + fmt(x) + detail::describe_params(id, params) + " S=" + fmt(s);
        });
        add("baseline." + key + ".identity", [id](PropertyRng& rng) -> Opt {
            const std::size_t k = rng.length();
            const auto y = rng.pattern(k);
            const auto params = detail::random_params(id, k, rng);
            const double s = score(id, params, y, y);
            if (detail::close(s, 1.0))
                return std::nullopt;
            return "y=" + fmt(y) + detail::describe_params(id, params) + " S(y,y)=" + fmt(s);
        });
        add("baseline." + key + ".symmetry", [id](PropertyRng& rng) -> Opt {
            const std::size_t k = rng.length();
            const auto y = rng.pattern(k), x = rng.pattern(k);
            const auto params = detail::random_params(id, k, rng);
            const double a = score(id, params, y, x), b = score(id, params, x, y);
            if (detail::close(a, b))
                return std::nullopt;
            return "y=" + fmt(y) + " x=" + fmt(x) + detail::describe_params(id, params) + " " + fmt(a) +
                   " vs " + fmt(b);
        });
    }

    add("reduction.fuzzy", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        std::vector<Element> y(k), x(k);
        for (std::size_t j = 0; j < k; ++j) {
            y[j] = rng.fuzzy_element();
            x[j] = rng.fuzzy_element();
        }
        const auto d = spatial_distance(y, x);
        const auto f = fuzzy_reduced_distance(y, x);
        if (d.md == d.nmd && detail::close(d.ed, f.d2p) && detail::close(d.ed, 2.0 * f.d1p))
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " D=" + fmt(d) + " d1p=" + fmt(f.d1p) + " d2p=" + fmt(f.d2p);
    });

    add("reduction.real_embedding", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.reals(k, 0.0, 1.0), x = rng.reals(k, 0.0, 1.0);
        const double r = real_reduced_distance(y, x);
        const double md = spatial_distance(embed_membership(y), embed_membership(x)).md;
        const double nmd = spatial_distance(embed_nonmembership(y), embed_nonmembership(x)).nmd;
        if (detail::close(md, r) && detail::close(nmd, r))
            return std::nullopt;
        return "y=" + fmt(y) + " x=" + fmt(x) + " D=" + fmt(r) + " md=" + fmt(md) + " nmd=" + fmt(nmd);
    });

    add("operator.delta_distributivity", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.reals(k, -2.0, 2.0), x = rng.reals(k, -2.0, 2.0);
        std::vector<double> diff(k);
        for (std::size_t j = 0; j < k; ++j)
            diff[j] = y[j] - x[j];
        const auto lhs = delta(diff), dy = delta(y), dx = delta(x);
        for (std::size_t j = 0; j < k; ++j) {
            if (!detail::close(lhs[j], dy[j] - dx[j]))
                return "y=" + fmt(y) + " x=" + fmt(x) + " at j=" + std::to_string(j + 1);
        }
        return std::nullopt;
    });

    add("operator.novel_dd_distributivity", [](PropertyRng& rng) -> Opt {
        const std::size_t k = rng.length();
        const auto y = rng.raw_pairs(k, -2.0, 2.0), x = rng.raw_pairs(k, -2.0, 2.0);
        const auto diff = pairwise_difference(y, x);
        for (auto proj : {Projection::Full, Projection::MembershipOnly, Projection::NonMembershipOnly}) {
            const auto lhs = novel_dd_sequence(diff, proj);
            const auto dy = novel_dd_sequence(y, proj), dx = novel_dd_sequence(x, proj);
            for (std::size_t j = 0; j < k; ++j) {
                if (!detail::close(lhs[j], dy[j] - dx[j]))
                    return "y=" + fmt(y) + " x=" + fmt(x) + " at j=" + std::to_string(j + 1);
            }
        }
        return std::nullopt;
    });

    add("spatial.containment_monotonicity",
        [](PropertyRng& rng) -> Opt {
            const std::size_t k = rng.length();
            const auto z = rng.pattern(k);
            std::vector<Element> x(k), y(k);
            for (std::size_t j = 0; j < k; ++j) {
                x[j] = detail::contained_in(z[j], rng);
                y[j] = detail::contained_in(x[j], rng);
            }
            const auto yz = spatial_distance(y, z), yx = spatial_distance(y, x), xz = spatial_distance(x, z);
            const double t = kPropertyTolerance;
            if (yz.md + t >= std::max(yx.md, xz.md) && yz.nmd + t >= std::max(yx.nmd, xz.nmd) &&
                yz.ed + t >= std::max(yx.ed, xz.ed))
                return std::nullopt;
            return "y=" + fmt(y) + " x=" + fmt(x) + " z=" + fmt(z) + " D(y,z)=" + fmt(yz) +
                   " D(y,x)=" + fmt(yx) + " D(x,z)=" + fmt(xz);
        },
        true);

    return report;
}

} // namespace aifs
