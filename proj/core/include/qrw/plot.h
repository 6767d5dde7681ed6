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

#ifndef QRW_PLOT_H
#define QRW_PLOT_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrw/harness.h"

namespace qrw::plot {

struct Point {
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;
};

struct Series {
    std::string label;
    double sparsity = 0.0;
    std::vector<Point> points;
};

struct AxisRange {
    double x_min = 1.0;
    double x_max = 10.0;
    double y_min = 0.0;
    double y_max = 1.0;

    bool operator==(const AxisRange &) const = default;
};

enum class Metric { kRelativeError, kInvalidSteps };

struct Spec {
    std::string title;
    std::string x_label = "shots";
    std::string y_label = "relative error";
    /// Fixed axes; computed from the data when empty.
    std::optional<AxisRange> axes;
};

/// One series per sparsity level for the (n, backend, mitigation) slice,
/// ordered by sparsity and shots.
std::vector<Series> series_from_aggregate(std::span<const AggregateRow> rows, int n, std::string_view backend,
                                          bool mitigation, Metric metric);

/// Log-x range padded to the enclosing powers of two, linear y from 0 to the
/// largest mean + error. Spans every series given.
AxisRange axes_for(std::span<const std::vector<Series>> groups);

/// SVG text. Log-scaled x, error bars of +-err, legend by sparsity. Series
/// with no points are dropped and reported through `warnings`; a series with
/// a single point gets a marker and no line. Each marker carries
/// data-x/data-y/data-err attributes with the exact values.
std::string render_svg(std::span<const Series> series, const Spec &spec, std::vector<std::string> *warnings = nullptr);

/// Values read back from a rendered SVG, keyed by series label.
struct ParsedSeries {
    std::string label;
    std::vector<Point> points;
};
struct ParsedPlot {
    AxisRange axes;
    std::vector<ParsedSeries> series;
    bool has_polyline(std::string_view label) const;
    std::vector<std::string> polyline_labels;
};
ParsedPlot parse_svg(std::string_view svg);

}  // namespace qrw::plot

#endif  // QRW_PLOT_H
