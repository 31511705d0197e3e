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


#include <aifs/core.hpp>
#include <aifs/error.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using aifs::Element;
using aifs::ErrorKind;
using aifs::Pattern;
using aifs::Projection;

namespace {

template <typename F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const aifs::Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no aifs::Error thrown";
    return ErrorKind::Parse;
}

void expect_near_all(const std::vector<double>& got, const std::vector<double>& want)
{
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        EXPECT_NEAR(got[i], want[i], 1e-12) << "index " << i;
}

const Pattern kB1("B1", {{0.5, 0.3}, {0.7, 0.0}, {0.4, 0.5}, {0.7, 0.3}});

} // namespace

TEST(Element, Validity)
{
    EXPECT_TRUE(aifs::is_valid({0.0, 0.0}));
    EXPECT_TRUE(aifs::is_valid({0.3, 0.7}));
    EXPECT_TRUE(aifs::is_valid({1.0, 1e-13}));
    EXPECT_FALSE(aifs::is_valid({0.6, 0.6}));
    EXPECT_FALSE(aifs::is_valid({-0.1, 0.2}));
    EXPECT_FALSE(aifs::is_valid({0.2, 1.1}));
    EXPECT_FALSE(aifs::is_valid({NAN, 0.2}));
    EXPECT_DOUBLE_EQ(Element(0.2, 0.5).hesitancy(), 0.3);
}

TEST(Pattern, RejectsEmptyAndInvalid)
{
    EXPECT_EQ(kind_of([] { Pattern("p", {}); }), ErrorKind::EmptyInput);
    EXPECT_EQ(kind_of([] { Pattern("p", {{0.2, 0.2}, {0.7, 0.5}}); }), ErrorKind::InvalidElement);
    const Pattern ok("p", {{0.2, 0.2}});
    EXPECT_EQ(ok.size(), 1u);
    EXPECT_EQ(ok.label(), "p");
}

TEST(Delta, StepSizesWithZeroBaseline)
{
    const std::vector<double> y = {0.5, 0.7, 0.4, 0.7};
    // Oracle: plain subtraction with v0 = 0.
    std::vector<double> want;
    double prev = 0.0;
    for (double v : y) {
        want.push_back(v - prev);
        prev = v;
    }
    expect_near_all(aifs::delta(y), want);
    expect_near_all(aifs::delta(y), {0.5, 0.2, -0.3, 0.3});
    expect_near_all(aifs::delta(std::vector<double>{0.0}), {0.0});
    expect_near_all(aifs::delta(std::vector<double>{0.37}), {0.37});
    EXPECT_EQ(kind_of([] { aifs::delta(std::vector<double>{}); }), ErrorKind::EmptyInput);
}

TEST(DividedDifferenceGrid, Examples)
{
    aifs::Grid constant(4, std::vector<double>(4, 0.8));
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t n = 2; n <= 4; ++n)
            EXPECT_NEAR(aifs::divided_difference_grid(constant, m, n), 0.0, 1e-15);

    aifs::Grid product(3, std::vector<double>(3)), sum(3, std::vector<double>(3));
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            product[m - 1][n - 1] = static_cast<double>(m * n);
            sum[m - 1][n - 1] = static_cast<double>(m + n);
        }
    }
    EXPECT_DOUBLE_EQ(aifs::divided_difference_grid(product, 1, 1), 1.0);
    EXPECT_DOUBLE_EQ(aifs::divided_difference_grid(sum, 2, 2), 0.0);
    // m*n has constant mixed difference 1 everywhere.
    EXPECT_DOUBLE_EQ(aifs::divided_difference_grid(product, 3, 2), 1.0);

    EXPECT_EQ(kind_of([&] { aifs::divided_difference_grid(sum, 0, 1); }), ErrorKind::IndexError);
    EXPECT_EQ(kind_of([&] { aifs::divided_difference_grid(sum, 4, 1); }), ErrorKind::IndexError);
    EXPECT_EQ(kind_of([&] { aifs::divided_difference_grid(sum, 1, 4); }), ErrorKind::IndexError);
}

TEST(NovelDividedDifference, Examples)
{
    EXPECT_NEAR(aifs::novel_divided_difference({0.5, 0.3}, {0.0, 0.0}), 0.2, 1e-15);
    EXPECT_NEAR(aifs::novel_divided_difference({0.7, 0.0}, {0.5, 0.3}), 0.5, 1e-15);
    for (const auto& e : kB1.elements())
        EXPECT_EQ(aifs::novel_divided_difference(e, e), 0.0);
    static_assert(aifs::novel_divided_difference({0.5, 0.5}, {0.5, 0.5}) == 0.0);
}

TEST(NovelDdSequence, Projections)
{
    expect_near_all(aifs::novel_dd_sequence(kB1, Projection::MembershipOnly), {0.5, 0.2, -0.3, 0.3});
    expect_near_all(aifs::novel_dd_sequence(kB1, Projection::NonMembershipOnly), {-0.3, 0.3, -0.5, 0.2});
    // Full is the sum of the two projections.
    expect_near_all(aifs::novel_dd_sequence(kB1, Projection::Full), {0.2, 0.5, -0.8, 0.5});

    const Pattern diagonal("d", {{0.1, 0.1}, {0.4, 0.4}, {0.2, 0.2}});
    expect_near_all(aifs::novel_dd_sequence(diagonal), {0.0, 0.0, 0.0});
}

TEST(TotalVariation, BoundedByTwoK)
{
    const double tv_full = aifs::total_variation(kB1.elements(), Projection::Full);
    EXPECT_NEAR(tv_full, 0.2 + 0.5 + 0.8 + 0.5, 1e-12);
    EXPECT_LE(aifs::total_variation(kB1.elements(), Projection::MembershipOnly), 2.0 * 4);
    EXPECT_LE(aifs::total_variation(kB1.elements(), Projection::NonMembershipOnly), 2.0 * 4);
    const Pattern alternating("a", {{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    EXPECT_LE(aifs::total_variation(alternating.elements(), Projection::MembershipOnly), 8.0);
}

TEST(PairwiseDifference, ComponentWiseAndDistributive)
{
    const std::vector<Element> y = {{0.5, -0.3}, {1.7, 0.2}};
    const std::vector<Element> x = {{0.1, 0.4}, {-0.2, 0.9}};
    const auto d = aifs::pairwise_difference(y, x);
    EXPECT_NEAR(d[0].mu, 0.4, 1e-15);
    EXPECT_NEAR(d[1].nu, -0.7, 1e-15);
    const auto lhs = aifs::novel_dd_sequence(d);
    const auto dy = aifs::novel_dd_sequence(y), dx = aifs::novel_dd_sequence(x);
    for (std::size_t j = 0; j < 2; ++j)
        EXPECT_NEAR(lhs[j], dy[j] - dx[j], 1e-12);
    EXPECT_EQ(kind_of([&] { aifs::pairwise_difference(y, std::vector<Element>{{0, 0}}); }),
              ErrorKind::LengthMismatch);
}

TEST(Subset, StandardOrder)
{
    const std::vector<Element> a = {{0.1, 0.6}, {0.3, 0.5}};
    const std::vector<Element> b = {{0.2, 0.5}, {0.3, 0.1}};
    EXPECT_TRUE(aifs::is_subset(a, b));
    EXPECT_FALSE(aifs::is_subset(b, a));
    EXPECT_TRUE(aifs::is_subset(a, a));
}
