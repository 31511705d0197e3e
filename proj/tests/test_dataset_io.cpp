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


#include <aifs/dataset_io.hpp>
#include <aifs/error.hpp>

#include <gtest/gtest.h>

#include <sstream>
#include <string>

using aifs::ErrorKind;

namespace {

struct Failure {
    ErrorKind kind;
    std::string what;
};

template <typename F>
Failure failure_of(F&& f)
{
    try {
        f();
    } catch (const aifs::Error& e) {
        return {e.kind(), e.what()};
    }
    ADD_FAILURE() << "no aifs::Error thrown";
    return {ErrorKind::Parse, ""};
}

aifs::ClassificationProblem from_csv(const std::string& text)
{
    std::istringstream in(text);
    return aifs::problem_from_csv(in);
}

} // namespace

TEST(JsonInput, PreservesLabelOrder)
{
    const auto doc = nlohmann::ordered_json::parse(R"({
        "universe": ["a", "b"],
        "known": {"Z": [[0.1, 0.2], [0.3, 0.4]], "A": [[0.5, 0.5], [0, 1]]},
        "unknown": {"q": [[0.2, 0.2], [0.2, 0.2]]}
    })");
    const auto p = aifs::problem_from_json(doc);
    ASSERT_EQ(p.known.size(), 2u);
    EXPECT_EQ(p.known[0].label(), "Z");
    EXPECT_EQ(p.known[1].label(), "A");
    EXPECT_DOUBLE_EQ(p.known[1][1].nu, 1.0);
    EXPECT_EQ(p.unknown[0].label(), "q");

    const auto again = aifs::problem_from_json(aifs::problem_to_json(p));
    EXPECT_EQ(again.known[0], p.known[0]);
    EXPECT_EQ(again.universe, p.universe);
}

TEST(JsonInput, FieldLocatedErrors)
{
    const auto bad_sum = nlohmann::ordered_json::parse(
        R"({"known": {"B1": [[0.5, 0.3], [0.7, 0.5]]}, "unknown": {}})");
    const auto f = failure_of([&] { aifs::problem_from_json(bad_sum); });
    EXPECT_EQ(f.kind, ErrorKind::InvalidElement);
    EXPECT_NE(f.what.find("known.B1[1]"), std::string::npos) << f.what;

    const auto bad_shape = nlohmann::ordered_json::parse(R"({"known": {"B1": [[0.5]]}})");
    const auto g = failure_of([&] { aifs::problem_from_json(bad_shape); });
    EXPECT_EQ(g.kind, ErrorKind::Parse);
    EXPECT_NE(g.what.find("known.B1[0]"), std::string::npos) << g.what;

    const auto missing = nlohmann::ordered_json::parse(R"({"unknown": {}})");
    EXPECT_EQ(failure_of([&] { aifs::problem_from_json(missing); }).kind, ErrorKind::Parse);

    const auto ragged = nlohmann::ordered_json::parse(
        R"({"known": {"B1": [[0.5, 0.3]], "B2": [[0.1, 0.1], [0.2, 0.2]]}})");
    EXPECT_EQ(failure_of([&] { aifs::problem_from_json(ragged); }).kind, ErrorKind::LengthMismatch);
}

TEST(CsvInput, BuildsProblem)
{
    const auto p = from_csv("set,label,feature,mu,nu\n"
                            "known,B1,f1,0.5,0.3\n"
                            "known,B1,f2,0.7,0\n"
                            "known,B2,f2,0.6,0.1\n"
                            "known,B2,f1,0.5,0.2\n"
                            "\n"
                            "unknown,A,f1,0.4,0.3\n"
                            "unknown,A,f2,0.7,0.1\n");
    EXPECT_EQ(p.universe, (std::vector<std::string>{"f1", "f2"}));
    ASSERT_EQ(p.known.size(), 2u);
    EXPECT_DOUBLE_EQ(p.known[1][0].mu, 0.5);
    EXPECT_DOUBLE_EQ(p.known[1][1].mu, 0.6);
    EXPECT_EQ(p.unknown[0].label(), "A");
}

TEST(CsvInput, LineLocatedErrors)
{
    const std::string header = "set,label,feature,mu,nu\n";
    auto f = failure_of([&] { from_csv(header + "known,B1,f1,0.7,0.5\n"); });
    EXPECT_EQ(f.kind, ErrorKind::InvalidElement);
    EXPECT_NE(f.what.find("line 2"), std::string::npos) << f.what;

    f = failure_of([&] { from_csv(header + "known,B1,f1,0.7,0.1\nknown,B1,f1,x,0.1\n"); });
    EXPECT_EQ(f.kind, ErrorKind::Parse);
    EXPECT_NE(f.what.find("line 3, mu"), std::string::npos) << f.what;

    f = failure_of([&] { from_csv(header + "maybe,B1,f1,0.1,0.1\n"); });
    EXPECT_NE(f.what.find("line 2, set"), std::string::npos) << f.what;

    f = failure_of([&] { from_csv("label,set,feature,mu,nu\n"); });
    EXPECT_EQ(f.kind, ErrorKind::Parse);

    f = failure_of([&] { from_csv(header + "known,B1,f1,0.1,0.1\nknown,B1,f2,0.1\n"); });
    EXPECT_NE(f.what.find("line 3"), std::string::npos) << f.what;

    f = failure_of([&] { from_csv(header + "known,B1,f1,0.1,0.1\nknown,B2,f2,0.1,0.1\n"); });
    EXPECT_EQ(f.kind, ErrorKind::LengthMismatch);
}

TEST(Files, SampleDatasetsLoad)
{
    const auto json = aifs::load_problem("data/example1.json");
    const auto csv = aifs::load_problem("data/example1.csv");
    ASSERT_EQ(json.known.size(), csv.known.size());
    for (std::size_t i = 0; i < json.known.size(); ++i)
        EXPECT_EQ(json.known[i], csv.known[i]);
    EXPECT_EQ(json.unknown[0], csv.unknown[0]);
    EXPECT_EQ(json.universe, csv.universe);

    const auto e5 = aifs::load_problem("data/example5.json");
    EXPECT_EQ(e5.known.size(), 5u);
    EXPECT_EQ(e5.unknown.size(), 4u);

    EXPECT_EQ(failure_of([] { aifs::load_problem("data/invalid_sum.json"); }).kind, ErrorKind::InvalidElement);
    EXPECT_EQ(failure_of([] { aifs::load_problem("data/missing.json"); }).kind, ErrorKind::Parse);
}
