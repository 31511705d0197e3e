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

#include <aifs/classifier.hpp>
#include <aifs/core.hpp>
#include <aifs/error.hpp>

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace aifs {

namespace detail {

inline std::string located(const std::string& where, const std::string& what)
{
    return where + ": " + what;
}

inline void check_element(const Element& e, const std::string& where)
{
    if (!std::isfinite(e.mu) || !std::isfinite(e.nu))
        throw Error(ErrorKind::InvalidElement, located(where, "non-finite value"));
    if (e.mu < -kElementTolerance || e.mu > 1.0 + kElementTolerance)
        throw Error(ErrorKind::InvalidElement, located(where, "mu outside [0,1] in " + describe(e)));
    if (e.nu < -kElementTolerance || e.nu > 1.0 + kElementTolerance)
        throw Error(ErrorKind::InvalidElement, located(where, "nu outside [0,1] in " + describe(e)));
    if (!is_valid(e)) {
        std::ostringstream os;
        os << "mu+nu = " << e.mu + e.nu << " exceeds 1 in " << describe(e);
        throw Error(ErrorKind::InvalidElement, located(where, os.str()));
    }
}

inline std::vector<Pattern> patterns_from_json(const nlohmann::ordered_json& obj, const std::string& field)
{
    if (!obj.is_object())
        throw Error(ErrorKind::Parse, located(field, "expected an object of label -> [[mu, nu], ...]"));
    std::vector<Pattern> out;
    for (const auto& [label, rows] : obj.items()) {
        const std::string where = field + "." + label;
        if (!rows.is_array() || rows.empty())
            throw Error(ErrorKind::Parse, located(where, "expected a non-empty array of [mu, nu] pairs"));
        std::vector<Element> elements;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string at = where + "[" + std::to_string(i) + "]";
            const auto& pair = rows[i];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
                throw Error(ErrorKind::Parse, located(at, "expected [mu, nu]"));
            Element e{pair[0].get<double>(), pair[1].get<double>()};
            check_element(e, at);
            elements.push_back(e);
        }
        out.emplace_back(label, std::move(elements));
    }
    return out;
}

inline nlohmann::ordered_json patterns_to_json(const std::vector<Pattern>& patterns)
{
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& p : patterns) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& e : p.elements())
            rows.push_back({e.mu, e.nu});
        obj[p.label()] = std::move(rows);
    }
    return obj;
}

inline std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

inline std::string trim(std::string s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_number(const std::string& text, const std::string& where)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, located(where, "'" + text + "' is not a number"));
    }
    if (used != text.size())
        throw Error(ErrorKind::Parse, located(where, "'" + text + "' is not a number"));
    return v;
}

} // namespace detail

/// Reads {"universe": [...], "known": {label: [[mu, nu], ...]}, "unknown": {...}}.
/// Label order in the document is the class order of the problem.
inline ClassificationProblem problem_from_json(const nlohmann::ordered_json& doc)
{
    if (!doc.is_object())
        throw Error(ErrorKind::Parse, "document: expected an object");
    ClassificationProblem problem;
    if (doc.contains("universe")) {
        const auto& u = doc["universe"];
        if (!u.is_array())
            throw Error(ErrorKind::Parse, "universe: expected an array of feature names");
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!u[i].is_string())
                throw Error(ErrorKind::Parse, "universe[" + std::to_string(i) + "]: expected a string");
            problem.universe.push_back(u[i].get<std::string>());
        }
    }
    if (!doc.contains("known"))
        throw Error(ErrorKind::Parse, "known: missing");
    problem.known = detail::patterns_from_json(doc["known"], "known");
    if (doc.contains("unknown"))
        problem.unknown = detail::patterns_from_json(doc["unknown"], "unknown");
    problem.validate();
    return problem;
}

inline nlohmann::ordered_json problem_to_json(const ClassificationProblem& problem)
{
    nlohmann::ordered_json doc;
    doc["universe"] = problem.universe;
    doc["known"] = detail::patterns_to_json(problem.known);
    doc["unknown"] = detail::patterns_to_json(problem.unknown);
    return doc;
}

/// CSV with header `set,label,feature,mu,nu`; `set` is "known" or "unknown".
/// Features take the order of their first appearance.
inline ClassificationProblem problem_from_csv(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    auto where = [&](const std::string& field) {
        return "line " + std::to_string(line_no) + ", " + field;
    };

    // Skip blank lines before the header.
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::trim(line).empty())
            break;
    }
    const std::vector<std::string> expected = {"set", "label", "feature", "mu", "nu"};
    auto header = detail::split_csv_line(line);
    for (auto& h : header)
        h = detail::trim(h);
    if (header != expected)
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                          ": header must be set,label,feature,mu,nu");

    struct Rows {
        std::string label;
        std::map<std::size_t, Element> by_feature;
        std::size_t line = 0;
    };
    std::vector<std::string> features;
    std::vector<Rows> known, unknown;

    auto find_or_add = [](std::vector<Rows>& v, const std::string& label, std::size_t ln) -> Rows& {
        for (auto& r : v) {
            if (r.label == label)
                return r;
        }
        v.push_back({label, {}, ln});
        return v.back();
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty())
            continue;
        auto cells = detail::split_csv_line(line);
        if (cells.size() != 5)
            throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 5 columns, found " +
                                              std::to_string(cells.size()));
        for (auto& c : cells)
            c = detail::trim(c);
        const std::string& set = cells[0];
        if (set != "known" && set != "unknown")
            throw Error(ErrorKind::Parse, detail::located(where("set"), "'" + set + "' is not known/unknown"));
        if (cells[1].empty())
            throw Error(ErrorKind::Parse, detail::located(where("label"), "empty label"));
        if (cells[2].empty())
            throw Error(ErrorKind::Parse, detail::located(where("feature"), "empty feature"));
        Element e{detail::parse_number(cells[3], where("mu")), detail::parse_number(cells[4], where("nu"))};
        detail::check_element(e, where("mu/nu"));

        std::size_t f = 0;
        while (f < features.size() && features[f] != cells[2])
            ++f;
        if (f == features.size())
            features.push_back(cells[2]);

        Rows& rows = find_or_add(set == "known" ? known : unknown, cells[1], line_no);
        if (!rows.by_feature.emplace(f, e).second)
            throw Error(ErrorKind::Parse, detail::located(where("feature"), "duplicate feature '" + cells[2] +
                                                                                "' for " + cells[1]));
    }

    auto build = [&](const std::vector<Rows>& rows) {
        std::vector<Pattern> out;
        for (const auto& r : rows) {
            std::vector<Element> elements;
            for (std::size_t f = 0; f < features.size(); ++f) {
                auto it = r.by_feature.find(f);
                if (it == r.by_feature.end())
                    throw Error(ErrorKind::LengthMismatch, "line " + std::to_string(r.line) + ", label: '" +
                                                               r.label + "' has no row for feature '" +
                                                               features[f] + "'");
                elements.push_back(it->second);
            }
            out.emplace_back(r.label, std::move(elements));
        }
        return out;
    };

    ClassificationProblem problem;
    problem.universe = features;
    problem.known = build(known);
    problem.unknown = build(unknown);
    problem.validate();
    return problem;
}

/// Loads a problem from a .csv or JSON file, chosen by extension.
inline ClassificationProblem load_problem(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, path + ": cannot open");
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    if (csv)
        return problem_from_csv(in);
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
    return problem_from_json(doc);
}

} // namespace aifs
