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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aifs {

/// Absolute tolerance below which two similarity values tie.
inline constexpr double kTieTolerance = 1e-9;

/// Rounds half away from zero at `decimals` places. The 1e-9 nudge (in units of
/// the last kept digit) absorbs binary representation error so that values such
/// as 0.95625 round up.
inline double round_half_up(double value, int decimals = 4)
{
    const double scale = std::pow(10.0, decimals);
    const double scaled = value * scale;
    const double r = scaled >= 0 ? std::floor(scaled + 0.5 + 1e-9) : -std::floor(-scaled + 0.5 + 1e-9);
    return r / scale;
}

struct ClassificationProblem {
    std::vector<std::string> universe;
    std::vector<Pattern> known;
    std::vector<Pattern> unknown;

    std::size_t length() const { return known.empty() ? 0 : known.front().size(); }

    void validate() const
    {
        if (known.empty())
            throw Error(ErrorKind::EmptyInput, "no known patterns");
        const std::size_t k = known.front().size();
        std::set<std::string> labels;
        for (const auto& b : known) {
            if (!labels.insert(b.label()).second)
                throw Error(ErrorKind::InvalidParams, "duplicate known label '" + b.label() + "'");
        }
        auto check = [&](const Pattern& p) {
            if (p.size() != k) {
                throw Error(ErrorKind::LengthMismatch, "pattern '" + p.label() + "' has " +
                                                           std::to_string(p.size()) +
                                                           " elements, expected " + std::to_string(k));
            }
        };
        for (const auto& b : known)
            check(b);
        for (const auto& a : unknown)
            check(a);
        if (!universe.empty() && universe.size() != k) {
            throw Error(ErrorKind::LengthMismatch, "universe lists " + std::to_string(universe.size()) +
                                                       " features, patterns have " + std::to_string(k));
        }
    }
};

struct MeasureSpec {
    MeasureId id = MeasureId::SSM_ED;
    MeasureParams params;
};

/// "S_Lp (p=2)" style label showing only the parameters the measure uses.
inline std::string display_name(const MeasureSpec& spec)
{
    const auto& info = measure_info(spec.id);
    std::string out(info.name);
    std::vector<std::string> parts;
    if (uses_param(spec.id, Param::P))
        parts.push_back("p=" + std::to_string(spec.params.p));
    if (uses_param(spec.id, Param::Z))
        parts.push_back("z=" + std::to_string(spec.params.z));
    if (!parts.empty()) {
        out += " (";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out += (i ? ", " : "") + parts[i];
        out += ")";
    }
    return out;
}

struct Decision {
    std::optional<std::string> label; // empty when unclassified
    std::vector<std::string> tied;    // labels attaining the maximum

    bool classified() const noexcept { return label.has_value(); }
    std::string text() const { return label.value_or("Unclassified"); }

    friend bool operator==(const Decision&, const Decision&) = default;
};

/// Argmax over `values`; two or more labels within `tol` of the maximum leave
/// the query unclassified.
inline Decision decide(const std::vector<double>& values, const std::vector<std::string>& labels,
                       double tol = kTieTolerance)
{
    Decision d;
    if (values.empty())
        return d;
    const double best = *std::max_element(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (best - values[i] <= tol)
            d.tied.push_back(labels[i]);
    }
    if (d.tied.size() == 1)
        d.label = d.tied.front();
    return d;
}

/// Decision on values as displayed at `decimals` places (exact ties only).
inline Decision decide_printed(const std::vector<double>& values,
                               const std::vector<std::string>& labels, int decimals = 4)
{
    std::vector<double> rounded(values.size());
    std::transform(values.begin(), values.end(), rounded.begin(),
                   [&](double v) { return round_half_up(v, decimals); });
    return decide(rounded, labels, 0.0);
}

struct MeasureOutcome {
    MeasureSpec measure;
    std::vector<double> values; // one per known pattern, in problem order
    Decision decision;
    Decision printed;
};

struct StrongResult {
    std::string query;
    Decision decision; // the ED branch decision
    bool strong = false;
};

struct QueryReport {
    std::string query;
    std::vector<MeasureOutcome> outcomes;
    StrongResult strong;
};

struct ClassificationReport {
    std::vector<std::string> known_labels;
    std::vector<QueryReport> queries;
};

namespace detail {

inline std::vector<std::string> labels_of(const std::vector<Pattern>& patterns)
{
    std::vector<std::string> out;
    out.reserve(patterns.size());
    for (const auto& p : patterns)
        out.push_back(p.label());
    return out;
}

inline MeasureOutcome evaluate(const MeasureSpec& spec, const Pattern& query,
                               const std::vector<Pattern>& known,
                               const std::vector<std::string>& labels)
{
    MeasureOutcome out{spec, {}, {}, {}};
    out.values.reserve(known.size());
    for (const auto& b : known)
        out.values.push_back(score(spec.id, spec.params, b, query));
    out.decision = decide(out.values, labels);
    out.printed = decide_printed(out.values, labels);
    return out;
}

inline StrongResult strong_for(const Pattern& query, const std::vector<Pattern>& known,
                               const std::vector<std::string>& labels)
{
    const MeasureParams none;
    const auto md = evaluate({MeasureId::SSM_MD, none}, query, known, labels).decision;
    const auto nmd = evaluate({MeasureId::SSM_NMD, none}, query, known, labels).decision;
    const auto ed = evaluate({MeasureId::SSM_ED, none}, query, known, labels).decision;
    const bool strong = md.classified() && nmd.classified() && ed.classified() &&
                        md.label == nmd.label && nmd.label == ed.label;
    return {query.label(), ed, strong};
}

} // namespace detail

/// Nearest-pattern classification of every query under every listed measure.
inline ClassificationReport classify(const ClassificationProblem& problem,
                                     const std::vector<MeasureSpec>& measures)
{
    problem.validate();
    if (measures.empty())
        throw Error(ErrorKind::InvalidParams, "no measures selected");
    ClassificationReport report;
    report.known_labels = detail::labels_of(problem.known);
    for (const auto& query : problem.unknown) {
        QueryReport q;
        q.query = query.label();
        for (const auto& spec : measures)
            q.outcomes.push_back(detail::evaluate(spec, query, problem.known, report.known_labels));
        q.strong = detail::strong_for(query, problem.known, report.known_labels);
        report.queries.push_back(std::move(q));
    }
    return report;
}

/// Per query: the ED decision plus whether MD, NMD and ED agree on a class.
inline std::vector<StrongResult> strong_classification(const ClassificationProblem& problem)
{
    problem.validate();
    const auto labels = detail::labels_of(problem.known);
    std::vector<StrongResult> out;
    for (const auto& query : problem.unknown)
        out.push_back(detail::strong_for(query, problem.known, labels));
    return out;
}

} // namespace aifs
