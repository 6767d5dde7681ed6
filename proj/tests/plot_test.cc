// Copyright 2026 The qrw Authors
//
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

#include "qrw/plot.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace qrw;
using namespace qrw::plot;

namespace {

AggregateRow agg(int k, int shots, bool mitigation, double err, double sem) {
    AggregateRow a;
    a.n = 3;
    a.N = 8;
    a.k = k;
    a.sparsity_level = 1.0 - std::pow(0.5, k);
    a.backend = "fake-casablanca";
    a.mitigation = mitigation;
    a.shots = shots;
    a.count = 5;
    a.mean_relative_error = err;
    a.sem_relative_error = sem;
    a.mean_total_invalid = 10.0 * k * shots / 24.0;
    return a;
}

}  // namespace

TEST(SeriesFromAggregate, GroupsBySparsity) {
    std::vector<AggregateRow> rows{agg(0, 24, false, 0.2, 0.01), agg(0, 48, false, 0.1, 0.01),
                                   agg(1, 24, false, 0.3, 0.02), agg(1, 24, true, 0.05, 0.0)};
    const auto off = series_from_aggregate(rows, 3, "fake-casablanca", false, Metric::kRelativeError);
    ASSERT_EQ(off.size(), 2u);
    EXPECT_EQ(off[0].points.size(), 2u);
    EXPECT_EQ(off[0].points[0].x, 24.0);
    EXPECT_EQ(off[0].points[1].y, 0.1);
    EXPECT_EQ(off[1].sparsity, 0.5);
    const auto inv = series_from_aggregate(rows, 3, "fake-casablanca", false, Metric::kInvalidSteps);
    EXPECT_EQ(inv[1].points[0].y, 10.0);
    EXPECT_TRUE(series_from_aggregate(rows, 4, "fake-casablanca", false, Metric::kRelativeError).empty());
}

TEST(RenderSvg, SinglePointHasMarkerWithoutLine) {
    std::vector<Series> s{{"k=0", 0.0, {{96.0, 0.1, 0.01}}}, {"k=1", 0.5, {{24.0, 0.2, 0.0}, {48.0, 0.15, 0.0}}}};
    const auto svg = render_svg(s, Spec{});
    const auto parsed = parse_svg(svg);
    ASSERT_EQ(parsed.series.size(), 2u);
    EXPECT_FALSE(parsed.has_polyline("k=0"));
    EXPECT_TRUE(parsed.has_polyline("k=1"));
    ASSERT_EQ(parsed.series[0].points.size(), 1u);
    EXPECT_EQ(parsed.series[0].points[0].x, 96.0);
    EXPECT_EQ(parsed.series[0].points[0].y, 0.1);
    EXPECT_EQ(parsed.series[0].points[0].err, 0.01);
}

TEST(RenderSvg, EmptySeriesWarns) {
    std::vector<Series> s{{"k=0", 0.0, {}}, {"k=1", 0.5, {{24.0, 0.2, 0.0}}}};
    std::vector<std::string> warnings;
    const auto parsed = parse_svg(render_svg(s, Spec{}, &warnings));
    ASSERT_EQ(warnings.size(), 1u);
    EXPECT_NE(warnings[0].find("k=0"), std::string::npos);
    EXPECT_EQ(parsed.series.size(), 1u);
}

TEST(RenderSvg, ValuesSurviveRoundTrip) {
    std::vector<Series> s{{"k=2", 0.75, {{24.0, 0.123456789, 0.001}, {1008.0, 0.0123, 0.0005}}}};
    const auto parsed = parse_svg(render_svg(s, Spec{}));
    ASSERT_EQ(parsed.series.size(), 1u);
    EXPECT_EQ(parsed.series[0].label, "k=2");
    for (size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(parsed.series[0].points[i].x, s[0].points[i].x);
        EXPECT_EQ(parsed.series[0].points[i].y, s[0].points[i].y);
        EXPECT_EQ(parsed.series[0].points[i].err, s[0].points[i].err);
    }
    EXPECT_LE(parsed.axes.x_min, 24.0);
    EXPECT_GE(parsed.axes.x_max, 1008.0);
    EXPECT_GE(parsed.axes.y_max, 0.123456789 + 0.001);
}

TEST(AxesFor, MitigationPairSharesAxes) {
    std::vector<AggregateRow> rows{agg(0, 24, false, 0.4, 0.05), agg(0, 1008, false, 0.05, 0.01),
                                   agg(0, 24, true, 0.3, 0.02), agg(0, 1008, true, 0.02, 0.01)};
    const auto off = series_from_aggregate(rows, 3, "fake-casablanca", false, Metric::kRelativeError);
    const auto on = series_from_aggregate(rows, 3, "fake-casablanca", true, Metric::kRelativeError);
    const std::vector<std::vector<Series>> groups{off, on};
    const auto axes = axes_for(groups);
    EXPECT_DOUBLE_EQ(axes.y_max, 1.05 * 0.45);
    EXPECT_EQ(axes.y_min, 0.0);
    EXPECT_LE(axes.x_min, 24.0);
    EXPECT_GE(axes.x_max, 1008.0);
    Spec spec;
    spec.axes = axes;
    const auto a = parse_svg(render_svg(off, spec));
    const auto b = parse_svg(render_svg(on, spec));
    EXPECT_EQ(a.axes, b.axes);
    EXPECT_EQ(a.axes, axes);
}
