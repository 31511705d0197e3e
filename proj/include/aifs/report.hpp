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

#include <aifs/benchmarks.hpp>
#include <aifs/classifier.hpp>
#include <aifs/error.hpp>
#include <aifs/measures.hpp>
#include <aifs/properties.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

namespace aifs {

using ordered_json = nlohmann::ordered_json;

/// Fixed 4-decimal rendering, half up; NaN prints as "n/a".
inline std::string format4(double v)
{
    if (std::isnan(v))
        return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", round_half_up(v));
    return buf;
}

namespace detail {

inline ordered_json decision_json(const Decision& d)
{
    ordered_json j;
    j["result"] = d.text();
    j["tied"] = d.tied;
    return j;
}

inline ordered_json params_json(const MeasureSpec& spec)
{
    ordered_json j = ordered_json::object();
    if (uses_param(spec.id, Param::P))
        j["p"] = spec.params.p;
    if (uses_param(spec.id, Param::Z))
        j["z"] = spec.params.z;
    if (uses_param(spec.id, Param::Partition)) {
        j["delta"] = spec.params.delta_set;
        j["gamma"] = spec.params.gamma_set;
    }
    return j;
}

inline ordered_json strong_json(const StrongResult& s)
{
    ordered_json j;
    j["query"] = s.query;
    j["ed_result"] = s.decision.text();
    j["strong"] = s.strong;
    return j;
}

inline std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

} // namespace detail

// Classification ------------------------------------------------------------

inline ordered_json to_json(const ClassificationReport& report)
{
    ordered_json j;
    j["known"] = report.known_labels;
    j["queries"] = ordered_json::array();
    for (const auto& q : report.queries) {
        ordered_json jq;
        jq["query"] = q.query;
        jq["measures"] = ordered_json::array();
        for (const auto& o : q.outcomes) {
            ordered_json jm;
            jm["measure"] = measure_info(o.measure.id).key;
            jm["name"] = display_name(o.measure);
            jm["params"] = detail::params_json(o.measure);
            jm["values"] = o.values;
            jm["decision"] = detail::decision_json(o.decision);
            jm["printed_decision"] = detail::decision_json(o.printed);
            jq["measures"].push_back(std::move(jm));
        }
        jq["strong"] = detail::strong_json(q.strong);
        j["queries"].push_back(std::move(jq));
    }
    return j;
}

inline std::string to_text(const ClassificationReport& report)
{
    std::string out;
    std::size_t name_w = 8;
    for (const auto& q : report.queries)
        for (const auto& o : q.outcomes)
            name_w = std::max(name_w, display_name(o.measure).size());
    name_w += 2;

    for (const auto& q : report.queries) {
        out += "Query " + q.query + "\n";
        out += detail::pad("Measure", name_w);
        for (const auto& l : report.known_labels)
            out += detail::pad(l, 9);
        out += "Result\n";
        for (const auto& o : q.outcomes) {
            out += detail::pad(display_name(o.measure), name_w);
            for (double v : o.values)
                out += detail::pad(format4(v), 9);
            out += o.decision.text() + "\n";
        }
        out += "Strong classification: " + q.strong.decision.text() +
               (q.strong.strong ? " (strong)" : " (not strong)") + "\n\n";
    }
    return out;
}

// Benchmarks ----------------------------------------------------------------

inline ordered_json to_json(const BenchmarkReport& report)
{
    ordered_json j;
    j["case"] = report.name;
    j["passed"] = report.passed();
    j["asserted_cells"] = report.asserted_cells();
    j["failed_cells"] = report.failed_cells();
    j["rows"] = ordered_json::array();
    for (const auto& r : report.rows) {
        ordered_json jr;
        jr["row"] = r.row;
        jr["measure"] = measure_info(r.measure.id).key;
        jr["params"] = detail::params_json(r.measure);
        jr["asserted"] = r.asserted;
        jr["evaluated"] = r.evaluated;
        if (!r.note.empty())
            jr["note"] = r.note;
        jr["cells"] = ordered_json::array();
        for (const auto& c : r.cells) {
            ordered_json jc;
            jc["known"] = c.known;
            jc["golden"] = c.golden;
            if (r.evaluated) {
                jc["computed"] = c.computed;
                jc["rounded"] = c.rounded;
            } else {
                jc["computed"] = nullptr;
                jc["rounded"] = nullptr;
            }
            jc["match"] = c.match;
            jc["asserted"] = c.asserted;
            jr["cells"].push_back(std::move(jc));
        }
        jr["results"] = ordered_json::array();
        for (const auto& c : r.results) {
            ordered_json jc;
            jc["query"] = c.query;
            jc["golden"] = c.golden;
            jc["computed"] = c.computed;
            jc["match"] = c.match;
            jc["asserted"] = c.asserted;
            jr["results"].push_back(std::move(jc));
        }
        j["rows"].push_back(std::move(jr));
    }
    j["strong"] = ordered_json::array();
    for (const auto& s : report.strong)
        j["strong"].push_back(detail::strong_json(s));
    return j;
}

inline std::string to_text(const BenchmarkReport& report)
{
    std::string out = "== " + report.name + " ==  (golden/computed)\n";
    for (const auto& r : report.rows) {
        out += detail::pad(r.row, 18);
        for (const auto& c : r.cells) {
            out += c.known + " " + format4(c.golden);
            if (r.evaluated)
                out += "/" + format4(c.computed);
            out += (c.asserted && !c.match) ? " MISMATCH  " : "  ";
        }
        for (const auto& c : r.results) {
            out += c.query + "->" + c.golden;
            if (r.evaluated)
                out += "/" + c.computed;
            if (c.asserted && !c.match)
                out += " MISMATCH";
            else if (!c.asserted && r.asserted)
                out += " [not asserted]";
            out += "  ";
        }
        if (!r.note.empty())
            out += "[" + std::string(r.asserted ? "" : "not asserted: ") + r.note + "]";
        out += "\n";
    }
    for (const auto& s : report.strong)
        out += "strong " + s.query + ": " + s.decision.text() + (s.strong ? " (strong)" : " (not strong)") + "\n";
    out += std::to_string(report.asserted_cells() - report.failed_cells()) + "/" +
           std::to_string(report.asserted_cells()) + " asserted cells match\n";
    return out;
}

/// Golden tables as a document that `golden_from_json` reads back.
inline ordered_json golden_to_json(const std::vector<BenchmarkCase>& cases)
{
    ordered_json j = ordered_json::object();
    for (const auto& c : cases) {
        ordered_json rows = ordered_json::array();
        for (const auto& g : c.golden) {
            ordered_json r;
            r["row"] = g.row;
            r["measure"] = measure_info(g.measure.id).key;
            r["params"] = detail::params_json(MeasureSpec{g.measure.id, g.measure.params});
            r["values"] = g.values;
            r["results"] = g.results;
            r["asserted"] = g.asserted;
            r["unasserted_queries"] = g.unasserted_queries;
            r["note"] = g.note;
            rows.push_back(std::move(r));
        }
        j[c.name] = std::move(rows);
    }
    return j;
}

/// Replaces the golden rows of the listed cases. Datasets stay embedded.
inline std::vector<BenchmarkCase> golden_from_json(const ordered_json& doc, std::vector<BenchmarkCase> cases)
{
    if (!doc.is_object())
        throw Error(ErrorKind::Parse, "golden: expected an object keyed by case name");
    for (const auto& [name, rows] : doc.items()) {
        auto it = std::find_if(cases.begin(), cases.end(), [&](const BenchmarkCase& c) { return c.name == name; });
        if (it == cases.end())
            throw Error(ErrorKind::Parse, "golden." + name + ": unknown case");
        if (!rows.is_array())
            throw Error(ErrorKind::Parse, "golden." + name + ": expected an array of rows");
        std::vector<GoldenRow> golden;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string where = "golden." + name + "[" + std::to_string(i) + "]";
            try {
                const auto& r = rows[i];
                GoldenRow g;
                g.row = r.at("row").get<std::string>();
                const auto key = r.at("measure").get<std::string>();
                const auto id = find_measure(key);
                if (!id)
                    throw Error(ErrorKind::Parse, where + ".measure: unknown measure '" + key + "'");
                g.measure.id = *id;
                const auto& p = r.at("params");
                g.measure.params.p = p.value("p", 1);
                g.measure.params.z = p.value("z", 2);
                g.measure.params.delta_set = p.value("delta", std::vector<std::size_t>{});
                g.measure.params.gamma_set = p.value("gamma", std::vector<std::size_t>{});
                g.values = r.at("values").get<std::vector<double>>();
                g.results = r.at("results").get<std::vector<std::string>>();
                g.asserted = r.value("asserted", true);
                g.unasserted_queries = r.value("unasserted_queries", std::vector<std::size_t>{});
                g.note = r.value("note", std::string{});
                golden.push_back(std::move(g));
            } catch (const nlohmann::json::exception& e) {
                throw Error(ErrorKind::Parse, where + ": " + e.what());
            }
        }
        it->golden = std::move(golden);
    }
    return cases;
}

// Properties ----------------------------------------------------------------

inline ordered_json to_json(const PropertyReport& report)
{
    ordered_json j;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["passed"] = report.passed();
    j["properties"] = ordered_json::array();
    for (const auto& r : report.results) {
        ordered_json jr;
        jr["name"] = r.name;
        jr["assumption_based"] = r.assumption_based;
        jr["passed"] = r.passed;
        jr["failed"] = r.failed;
        jr["counterexample"] = r.counterexample ? ordered_json(*r.counterexample) : ordered_json(nullptr);
        j["properties"].push_back(std::move(jr));
    }
    return j;
}

inline std::string to_text(const PropertyReport& report)
{
    std::string out = "seed " + std::to_string(report.seed) + ", " + std::to_string(report.trials) +
                      " trials per property\n";
    for (const auto& r : report.results) {
        out += detail::pad(r.name, 40) + std::to_string(r.passed) + "/" + std::to_string(r.trials);
        if (r.assumption_based)
            out += "  (assumption-based, not fatal)";
        else if (!r.ok())
            out += "  FAIL";
        out += "\n";
        if (r.counterexample)
            out += "    first counterexample: " + *r.counterexample + "\n";
    }
    return out;
}

// Catalog -------------------------------------------------------------------

inline ordered_json catalog_json()
{
    ordered_json j = ordered_json::array();
    for (const auto& info : measure_catalog()) {
        ordered_json e;
        e["key"] = info.key;
        e["name"] = info.name;
        e["source"] = info.source;
        ordered_json params = ordered_json::array();
        for (auto p : info.params)
            params.push_back(p == Param::P ? "p" : p == Param::Z ? "z" : "partition");
        e["params"] = std::move(params);
        j.push_back(std::move(e));
    }
    return j;
}

inline std::string catalog_text()
{
    std::string out;
    for (const auto& info : measure_catalog()) {
        out += detail::pad(std::string(info.key), 11) + detail::pad(std::string(info.name), 11) +
               detail::pad(std::string(info.source), 22);
        for (std::size_t i = 0; i < info.params.size(); ++i) {
            const auto p = info.params[i];
            out += (i ? "," : "") + std::string(p == Param::P ? "p" : p == Param::Z ? "z" : "partition");
        }
        out += "\n";
    }
    return out;
}

} // namespace aifs
