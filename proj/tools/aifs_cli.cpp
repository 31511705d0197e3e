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


// Command-line front end: classify, compare, axioms, catalog.

#include <aifs/benchmarks.hpp>
#include <aifs/classifier.hpp>
#include <aifs/dataset_io.hpp>
#include <aifs/error.hpp>
#include <aifs/measures.hpp>
#include <aifs/properties.hpp>
#include <aifs/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kFailure = 1, kInvalid = 2 };

struct Options {
    std::string input;
    std::string bench = "all";
    std::string measures;
    std::vector<std::string> exclude;
    int p = 1;
    int z = 2;
    std::string partition;
    std::string format = "text";
    std::string output;
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::string golden;
    std::string export_golden;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) {
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

std::vector<aifs::MeasureId> parse_selection(const std::string& expr, const std::vector<std::string>& exclude)
{
    std::vector<aifs::MeasureId> ids;
    for (const auto& token : split(expr, ',')) {
        if (token == "ssm") {
            for (auto id : aifs::ssm_selection())
                ids.push_back(id);
        } else if (token == "all") {
            for (auto id : aifs::all_selection())
                ids.push_back(id);
        } else if (auto id = aifs::find_measure(token)) {
            ids.push_back(*id);
        } else {
            throw aifs::Error(aifs::ErrorKind::InvalidParams, "--measures: unknown measure '" + token + "'");
        }
    }
    for (const auto& token : exclude) {
        for (const auto& key : split(token, ',')) {
            auto id = aifs::find_measure(key);
            if (!id)
                throw aifs::Error(aifs::ErrorKind::InvalidParams, "--exclude: unknown measure '" + key + "'");
            ids.erase(std::remove(ids.begin(), ids.end(), *id), ids.end());
        }
    }
    std::vector<aifs::MeasureId> unique;
    for (auto id : ids) {
        if (std::find(unique.begin(), unique.end(), id) == unique.end())
            unique.push_back(id);
    }
    if (unique.empty())
        throw aifs::Error(aifs::ErrorKind::InvalidParams, "--measures: empty selection");
    return unique;
}

// "1,3:2,4" -> delta {1,3}, gamma {2,4}.
void parse_partition(const std::string& text, aifs::MeasureParams& params)
{
    const auto colon = text.find(':');
    auto indices = [&](const std::string& part) {
        std::vector<std::size_t> out;
        for (const auto& t : split(part, ',')) {
            std::size_t used = 0;
            long v = -1;
            try {
                v = std::stol(t, &used);
            } catch (const std::exception&) {
            }
            if (v < 1 || used != t.size())
                throw aifs::Error(aifs::ErrorKind::InvalidPartition, "--partition: bad index '" + t + "'");
            out.push_back(static_cast<std::size_t>(v));
        }
        return out;
    };
    params.delta_set = indices(text.substr(0, colon));
    if (colon != std::string::npos)
        params.gamma_set = indices(text.substr(colon + 1));
}

void emit(const Options& opt, const std::string& text)
{
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out)
        throw aifs::Error(aifs::ErrorKind::Parse, opt.output + ": cannot write");
    out << text;
}

bool structured(const Options& opt) { return opt.format == "structured"; }

int cmd_classify(const Options& opt)
{
    const auto problem = aifs::load_problem(opt.input);
    const auto ids = parse_selection(opt.measures.empty() ? "ssm" : opt.measures, opt.exclude);
    aifs::MeasureParams params;
    params.p = opt.p;
    params.z = opt.z;
    if (!opt.partition.empty())
        parse_partition(opt.partition, params);

    std::vector<aifs::MeasureSpec> specs;
    for (auto id : ids) {
        if (id == aifs::MeasureId::S_Az_p_h && params.delta_set.empty())
            throw aifs::Error(aifs::ErrorKind::InvalidPartition,
                              "s_az_p_h needs --partition (or --exclude s_az_p_h)");
        specs.push_back({id, params});
    }
    const auto report = aifs::classify(problem, specs);
    emit(opt, structured(opt) ? aifs::to_json(report).dump(2) + "\n" : aifs::to_text(report));
    return kOk;
}

int cmd_compare(const Options& opt)
{
    std::vector<aifs::BenchmarkCase> cases = aifs::benchmark_cases();
    if (!opt.golden.empty()) {
        std::ifstream in(opt.golden);
        if (!in)
            throw aifs::Error(aifs::ErrorKind::Parse, opt.golden + ": cannot open");
        aifs::ordered_json doc;
        try {
            doc = aifs::ordered_json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw aifs::Error(aifs::ErrorKind::Parse, opt.golden + ": " + e.what());
        }
        cases = aifs::golden_from_json(doc, std::move(cases));
    }
    if (!opt.export_golden.empty()) {
        std::ofstream out(opt.export_golden, std::ios::binary);
        if (!out)
            throw aifs::Error(aifs::ErrorKind::Parse, opt.export_golden + ": cannot write");
        out << aifs::golden_to_json(cases).dump(2) << "\n";
    }

    std::vector<const aifs::BenchmarkCase*> selected;
    for (const auto& c : cases) {
        if (opt.bench == "all" || c.name == opt.bench)
            selected.push_back(&c);
    }
    if (selected.empty()) {
        std::cerr << "error: unknown case '" << opt.bench << "' (expected example1..example6 or all)\n";
        return kInvalid;
    }

    const auto ids = parse_selection(opt.measures.empty() ? "ssm" : opt.measures, opt.exclude);
    bool passed = true;
    aifs::ordered_json doc;
    doc["cases"] = aifs::ordered_json::array();
    std::string text;
    std::string summary = "\nSummary\n";
    for (const auto* c : selected) {
        const auto report = aifs::run_benchmark(*c, ids);
        passed = passed && report.passed();
        doc["cases"].push_back(aifs::to_json(report));
        text += aifs::to_text(report) + "\n";
        summary += "  " + c->name + ": " + (report.passed() ? "pass" : "FAIL") + " (" +
                   std::to_string(report.asserted_cells() - report.failed_cells()) + "/" +
                   std::to_string(report.asserted_cells()) + ")\n";
    }
    doc["passed"] = passed;
    emit(opt, structured(opt) ? doc.dump(2) + "\n" : text + summary);
    return passed ? kOk : kFailure;
}

int cmd_axioms(const Options& opt)
{
    if (opt.trials < 1)
        throw aifs::Error(aifs::ErrorKind::InvalidParams, "--trials must be at least 1");
    const auto report = aifs::run_properties(opt.trials, opt.seed);
    emit(opt, structured(opt) ? aifs::to_json(report).dump(2) + "\n" : aifs::to_text(report));
    return report.passed() ? kOk : kFailure;
}

int cmd_catalog(const Options& opt)
{
    emit(opt, structured(opt) ? aifs::catalog_json().dump(2) + "\n" : aifs::catalog_text());
    return kOk;
}

void add_format(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--output", opt.output, "Write the report to this file");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spatial similarity measures for AIFS patterns"};
    app.require_subcommand(1);
    Options opt;

    auto* classify = app.add_subcommand("classify", "Classify the unknown patterns of a dataset");
    classify->add_option("input", opt.input, "Dataset (.json or .csv)")->required();
    classify->add_option("--measures", opt.measures, "ssm, all, or comma-separated keys (default ssm)");
    classify->add_option("--exclude", opt.exclude, "Measure keys to drop");
    classify->add_option("--p", opt.p, "Order parameter p >= 1");
    classify->add_option("--z", opt.z, "S_Bd parameter z >= 2");
    classify->add_option("--partition", opt.partition, "S^h_Az_p index partition, e.g. 1,3:2,4");
    add_format(classify, opt);

    auto* compare = app.add_subcommand("compare", "Reproduce the golden tables");
    compare->add_option("case", opt.bench, "example1..example6 or all");
    compare->add_option("--measures", opt.measures, "ssm, all, or comma-separated keys (default ssm)");
    compare->add_option("--exclude", opt.exclude, "Measure keys to drop");
    compare->add_option("--golden", opt.golden, "Read golden rows from this file");
    compare->add_option("--export-golden", opt.export_golden, "Write the golden rows to this file");
    add_format(compare, opt);

    auto* axioms = app.add_subcommand("axioms", "Run the randomized property suites");
    axioms->add_option("--trials", opt.trials, "Trials per property");
    axioms->add_option("--seed", opt.seed, "Generator seed");
    add_format(axioms, opt);

    auto* catalog = app.add_subcommand("catalog", "List the implemented measures");
    add_format(catalog, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*classify)
            return cmd_classify(opt);
        if (*compare)
            return cmd_compare(opt);
        if (*axioms)
            return cmd_axioms(opt);
        return cmd_catalog(opt);
    } catch (const aifs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
