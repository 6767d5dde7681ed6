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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "qrw/errors.h"
#include "text_util.h"

namespace qrw::plot {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 180.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char *, 8> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string unescape(std::string_view s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '&') {
            out += s[i];
            continue;
        }
        auto semi = s.find(';', i);
        auto ent = s.substr(i, semi - i + 1);
        if (ent == "&amp;") out += '&';
        else if (ent == "&lt;") out += '<';
        else if (ent == "&gt;") out += '>';
        else if (ent == "&quot;") out += '"';
        else throw FormatError("unknown XML entity");
        i = semi;
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Frame {
    AxisRange axes;

    double px(double x) const {
        const double lo = std::log2(axes.x_min);
        const double hi = std::log2(axes.x_max);
        return kLeft + (std::log2(x) - lo) / (hi - lo) * (kWidth - kLeft - kRight);
    }
    double py(double y) const {
        return kHeight - kBottom - (y - axes.y_min) / (axes.y_max - axes.y_min) * (kHeight - kTop - kBottom);
    }
};

std::optional<std::string> attr(std::string_view tag, std::string_view name) {
    const std::string key = " " + std::string(name) + "=\"";
    auto pos = tag.find(key);
    if (pos == std::string_view::npos) return std::nullopt;
    pos += key.size();
    auto end = tag.find('"', pos);
    if (end == std::string_view::npos) throw FormatError("unterminated attribute");
    return unescape(tag.substr(pos, end - pos));
}

double attr_double(std::string_view tag, std::string_view name) {
    auto v = attr(tag, name);
    if (!v) throw FormatError("missing attribute " + std::string(name));
    return text::parse_double(*v);
}

}  // namespace

std::vector<Series> series_from_aggregate(std::span<const AggregateRow> rows, int n, std::string_view backend,
                                          bool mitigation, Metric metric) {
    std::map<int, Series> by_k;
    for (const auto &a : rows) {
        if (a.n != n || a.backend != backend || a.mitigation != mitigation) continue;
        auto &s = by_k[a.k];
        s.sparsity = a.sparsity_level;
        s.label = "sparsity " + text::format_double(a.sparsity_level);
        if (metric == Metric::kRelativeError) {
            s.points.push_back({static_cast<double>(a.shots), a.mean_relative_error, a.sem_relative_error});
        } else {
            s.points.push_back({static_cast<double>(a.shots), a.mean_total_invalid, a.sem_total_invalid});
        }
    }
    std::vector<Series> out;
    for (auto &[k, s] : by_k) {
        std::sort(s.points.begin(), s.points.end(), [](const Point &a, const Point &b) { return a.x < b.x; });
        out.push_back(std::move(s));
    }
    return out;
}

AxisRange axes_for(std::span<const std::vector<Series>> groups) {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = 0.0;
    double y_hi = 0.0;
    for (const auto &group : groups) {
        for (const auto &s : group) {
            for (const auto &p : s.points) {
                x_lo = std::min(x_lo, p.x);
                x_hi = std::max(x_hi, p.x);
                y_hi = std::max(y_hi, p.y + p.err);
            }
        }
    }
    AxisRange r;
    if (x_hi <= 0.0) return r;
    r.x_min = std::exp2(std::floor(std::log2(x_lo)));
    r.x_max = std::exp2(std::ceil(std::log2(x_hi)));
    if (r.x_max <= r.x_min) r.x_max = 2.0 * r.x_min;
    r.y_min = 0.0;
    r.y_max = y_hi > 0.0 ? 1.05 * y_hi : 1.0;
    return r;
}

std::string render_svg(std::span<const Series> series, const Spec &spec, std::vector<std::string> *warnings) {
    std::vector<Series> kept;
    for (const auto &s : series) {
        if (s.points.empty()) {
            if (warnings) warnings->push_back("series '" + s.label + "' has no points; omitted");
            continue;
        }
        for (const auto &p : s.points) {
            if (!(p.x > 0.0)) throw ParameterError("log-scaled x values must be positive");
        }
        kept.push_back(s);
    }
    Frame f;
    if (spec.axes) {
        f.axes = *spec.axes;
    } else {
        const std::vector<std::vector<Series>> one{kept};
        f.axes = axes_for(one);
    }

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" data-x-scale=\"log2\" data-x-min=\""
      << text::format_double(f.axes.x_min) << "\" data-x-max=\"" << text::format_double(f.axes.x_max)
      << "\" data-y-min=\"" << text::format_double(f.axes.y_min) << "\" data-y-max=\""
      << text::format_double(f.axes.y_max) << "\">\n";
    o << "  <title>" << escape(spec.title) << "</title>\n";
    o << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    o << "  <text x=\"" << num(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">"
      << escape(spec.title) << "</text>\n";

    const double x0 = kLeft, x1 = kWidth - kRight, y0 = kHeight - kBottom, y1 = kTop;
    o << "  <g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
    o << "    <line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y0)
      << "\"/>\n";
    o << "    <line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x0) << "\" y2=\"" << num(y1)
      << "\"/>\n";
    o << "  </g>\n";

    o << "  <g class=\"x-ticks\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (double x = f.axes.x_min; x <= f.axes.x_max * (1 + 1e-12); x *= 2.0) {
        o << "    <line x1=\"" << num(f.px(x)) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(f.px(x)) << "\" y2=\""
          << num(y0 + 5) << "\" stroke=\"black\"/>\n";
        o << "    <text x=\"" << num(f.px(x)) << "\" y=\"" << num(y0 + 18) << "\">" << text::format_double(x)
          << "</text>\n";
    }
    o << "  </g>\n";
    o << "  <g class=\"y-ticks\" font-size=\"11\" text-anchor=\"end\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double y = f.axes.y_min + (f.axes.y_max - f.axes.y_min) * i / 5.0;
        char label[32];
        std::snprintf(label, sizeof(label), "%.3g", y);
        o << "    <line x1=\"" << num(x0 - 5) << "\" y1=\"" << num(f.py(y)) << "\" x2=\"" << num(x0) << "\" y2=\""
          << num(f.py(y)) << "\" stroke=\"black\"/>\n";
        o << "    <text x=\"" << num(x0 - 8) << "\" y=\"" << num(f.py(y) + 4) << "\">" << label << "</text>\n";
    }
    o << "  </g>\n";
    o << "  <text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(spec.x_label) << " (log scale)</text>\n";
    o << "  <text transform=\"translate(20 " << num((y0 + y1) / 2)
      << ") rotate(-90)\" text-anchor=\"middle\" font-size=\"13\">" << escape(spec.y_label) << "</text>\n";

    for (size_t i = 0; i < kept.size(); ++i) {
        const auto &s = kept[i];
        const char *color = kPalette[i % kPalette.size()];
        o << "  <g class=\"series\" data-label=\"" << escape(s.label) << "\" data-sparsity=\""
          << text::format_double(s.sparsity) << "\" stroke=\"" << color << "\" fill=\"" << color << "\">\n";
        if (s.points.size() > 1) {
            o << "    <polyline class=\"series-line\" fill=\"none\" points=\"";
            for (size_t p = 0; p < s.points.size(); ++p) {
                if (p) o << ' ';
                o << num(f.px(s.points[p].x)) << ',' << num(f.py(s.points[p].y));
            }
            o << "\"/>\n";
        }
        for (const auto &p : s.points) {
            if (p.err > 0.0) {
                o << "    <line class=\"error-bar\" x1=\"" << num(f.px(p.x)) << "\" y1=\"" << num(f.py(p.y - p.err))
                  << "\" x2=\"" << num(f.px(p.x)) << "\" y2=\"" << num(f.py(p.y + p.err)) << "\"/>\n";
            }
            o << "    <circle class=\"point\" cx=\"" << num(f.px(p.x)) << "\" cy=\"" << num(f.py(p.y))
              << "\" r=\"3.5\" data-x=\"" << text::format_double(p.x) << "\" data-y=\"" << text::format_double(p.y)
              << "\" data-err=\"" << text::format_double(p.err) << "\"/>\n";
        }
        o << "  </g>\n";
    }

    o << "  <g class=\"legend\" font-size=\"12\">\n";
    for (size_t i = 0; i < kept.size(); ++i) {
        const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
        const char *color = kPalette[i % kPalette.size()];
        o << "    <line x1=\"" << num(x1 + 15) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(x1 + 40) << "\" y2=\""
          << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        o << "    <text x=\"" << num(x1 + 46) << "\" y=\"" << num(ly + 4) << "\">" << escape(kept[i].label)
          << "</text>\n";
    }
    o << "  </g>\n";
    o << "</svg>\n";
    return o.str();
}

bool ParsedPlot::has_polyline(std::string_view label) const {
    return std::find(polyline_labels.begin(), polyline_labels.end(), label) != polyline_labels.end();
}

ParsedPlot parse_svg(std::string_view svg) {
    ParsedPlot out;
    auto root_start = svg.find("<svg");
    if (root_start == std::string_view::npos) throw FormatError("not an SVG document");
    auto root_end = svg.find('>', root_start);
    const auto root = svg.substr(root_start, root_end - root_start);
    out.axes = {attr_double(root, "data-x-min"), attr_double(root, "data-x-max"), attr_double(root, "data-y-min"),
                attr_double(root, "data-y-max")};

    size_t pos = root_end;
    ParsedSeries *current = nullptr;
    while ((pos = svg.find('<', pos)) != std::string_view::npos) {
        auto end = svg.find('>', pos);
        if (end == std::string_view::npos) throw FormatError("unterminated tag");
        const auto tag = svg.substr(pos, end - pos + 1);
        auto cls = attr(tag, "class");
        if (tag.starts_with("<g") && cls == "series") {
            out.series.push_back({attr(tag, "data-label").value_or(""), {}});
            current = &out.series.back();
        } else if (tag.starts_with("</g")) {
            current = nullptr;
        } else if (current && cls == "series-line") {
            out.polyline_labels.push_back(current->label);
        } else if (current && cls == "point") {
            current->points.push_back(
                {attr_double(tag, "data-x"), attr_double(tag, "data-y"), attr_double(tag, "data-err")});
        }
        pos = end + 1;
    }
    return out;
}

}  // namespace qrw::plot
