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


#include <aifs/properties.hpp>
#include <aifs/report.hpp>

#include <gtest/gtest.h>

#include <string>

TEST(PropertyRng, Streams)
{
    aifs::PropertyRng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform();
        EXPECT_EQ(u, b.uniform());
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        const auto e = a.element();
        b.element();
        EXPECT_TRUE(aifs::is_valid(e));
        const auto f = a.fuzzy_element();
        b.fuzzy_element();
        EXPECT_EQ(f.mu + f.nu, 1.0);
        const auto k = a.length();
        b.length();
        EXPECT_GE(k, 1u);
        EXPECT_LE(k, 16u);
    }
    // First draw of mt19937_64 seeded with 42, mapped to [0,1).
    std::mt19937_64 gen(42);
    EXPECT_EQ(aifs::PropertyRng(42).uniform(), static_cast<double>(gen() >> 11) * 0x1.0p-53);
}

TEST(Properties, SuitesPassAndAreDeterministic)
{
    const auto r1 = aifs::run_properties(200, 7);
    const auto r2 = aifs::run_properties(200, 7);
    EXPECT_EQ(aifs::to_json(r1).dump(), aifs::to_json(r2).dump());
    for (const auto& r : r1.results) {
        EXPECT_EQ(r.trials, 200u);
        EXPECT_EQ(r.passed + r.failed, r.trials);
        if (!r.assumption_based) {
            EXPECT_TRUE(r.ok()) << r.name << ": " << r.counterexample.value_or("");
        }
    }
    EXPECT_TRUE(r1.passed());
}

TEST(Properties, CoversEverySuite)
{
    const auto r = aifs::run_properties(1, 1);
    std::size_t baselines = 0, assumption = 0;
    for (const auto& x : r.results) {
        baselines += x.name.rfind("baseline.", 0) == 0;
        assumption += x.assumption_based;
    }
    // Three axioms for each of the 19 scalar measures.
    EXPECT_EQ(baselines, 57u);
    EXPECT_EQ(assumption, 1u);
    EXPECT_EQ(r.results.size(), 57u + 12u);
}

TEST(Properties, FailuresCarryCounterexample)
{
    const auto r = aifs::detail::run_suite("always_fails", 3, 0,
                                           [](aifs::PropertyRng&) -> std::optional<std::string> { return "boom"; });
    EXPECT_EQ(r.failed, 3u);
    ASSERT_TRUE(r.counterexample);
    EXPECT_EQ(*r.counterexample, "trial 0: boom");
}
