#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "cantorval/cover.hpp"
#include "cantorval/scan.hpp"

namespace cantorval {

inline constexpr int kMinAsciiWidth = 40;

inline const char* verdict_color(Verdict v) {
    switch (v) {
        case Verdict::FiniteUnionOfIntervals: return "#59a14f";
        case Verdict::Cantor: return "#4e79a7";
        case Verdict::Cantorval: return "#f28e2b";
        default: return "#bab0ac";
    }
}

inline char verdict_glyph(Verdict v) {
    switch (v) {
        case Verdict::FiniteUnionOfIntervals: return 'I';
        case Verdict::Cantor: return 'C';
        case Verdict::Cantorval: return 'M';
        default: return '?';
    }
}

namespace detail {

inline std::string approx6(const Ratio& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", to_double(r));
    return buf;
}

} // namespace detail

// Number line of verdicts over q in (0, 1/2), 7-bit output.  Column c covers
// q in [c, c+1)/(2*width) and is sampled at its exact midpoint; '|' marks
// critical points.  Same report and width always give identical bytes.
inline std::string render_scan_ascii(const ScanReport& report, int width = 80, bool labels = true) {
    if (width < kMinAsciiWidth)
        throw Error("ascii width must be at least " + std::to_string(kMinAsciiWidth));
    std::string band(static_cast<size_t>(width), '?');
    for (int col = 0; col < width; ++col) {
        const Ratio qc(2 * col + 1, 4LL * width);
        for (const ScanRegion& r : report.regions) {
            const bool above_lo = r.lo_closed ? qc >= r.lo : qc > r.lo;
            const bool below_hi = r.hi_closed ? qc <= r.hi : qc < r.hi;
            if (above_lo && below_hi) {
                band[static_cast<size_t>(col)] = verdict_glyph(r.verdict);
                break;
            }
        }
    }
    for (const CriticalPoint& c : report.critical_points) {
        auto col = (num(c.q) * 2 * width / den(c.q)).convert_to<long long>();
        if (col >= width) col = width - 1;
        band[static_cast<size_t>(col)] = '|';
    }

    std::string out = "block:";
    for (size_t i = 0; i < report.k.size(); ++i) out += (i ? "," : " ") + std::to_string(report.k[i]);
    out += "\nq:  0 [" + band + ") 1/2\n";
    if (labels) {
        out += "legend: I interval union, C Cantor, M Cantorval, ? unknown\n";
        for (const CriticalPoint& c : report.critical_points) {
            out += "  " + ratio_str(c.q) + " (~" + detail::approx6(c.q) + "): ";
            for (size_t i = 0; i < c.labels.size(); ++i) out += (i ? ", " : "") + c.labels[i];
            out += "\n";
        }
    }
    return out;
}

// SVG scan strip.  Coordinates are rendered through fixed-point rationals, so
// the bytes are reproducible.
inline std::string render_scan_svg(const ScanReport& report, int width = 800, bool labels = true) {
    if (width < 200) throw Error("svg width must be at least 200");
    const int height = labels ? 170 : 110;
    const int margin = 40;
    const int plot = width - 2 * margin;
    auto xpos = [&](const Ratio& q) { return fixed2(Ratio(margin) + q * 2 * plot); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::string block;
    for (size_t i = 0; i < report.k.size(); ++i) block += (i ? "," : "") + std::to_string(report.k[i]);
    s += "<text x=\"" + std::to_string(margin) +
         "\" y=\"24\" font-family=\"monospace\" font-size=\"14\">block " + block +
         ", ratio sweep (0, 1/2)</text>\n";
    for (const ScanRegion& r : report.regions) {
        const std::string x0 = xpos(r.lo), x1 = xpos(r.hi);
        s += "<rect x=\"" + x0 + "\" y=\"40\" width=\"" + fixed2((r.hi - r.lo) * 2 * plot) +
             "\" height=\"40\" fill=\"" + verdict_color(r.verdict) + "\"/>\n";
    }
    for (size_t i = 0; i < report.critical_points.size(); ++i) {
        const CriticalPoint& c = report.critical_points[i];
        const std::string x = xpos(c.q);
        s += "<line x1=\"" + x + "\" y1=\"36\" x2=\"" + x +
             "\" y2=\"84\" stroke=\"black\" stroke-width=\"1\"/>\n";
        if (labels) {
            const int y = 100 + (i % 2) * 16;
            s += "<text x=\"" + x + "\" y=\"" + std::to_string(y) +
                 "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
                 ratio_str(c.q) + "</text>\n";
        }
    }
    s += "<text x=\"" + std::to_string(margin) +
         "\" y=\"96\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">0</text>\n";
    s += "<text x=\"" + std::to_string(margin + plot) +
         "\" y=\"96\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">1/2</text>\n";
    if (labels) {
        const int y = height - 14;
        int x = margin;
        const Verdict all[] = {Verdict::FiniteUnionOfIntervals, Verdict::Cantor, Verdict::Cantorval,
                               Verdict::Unknown};
        const char* names[] = {"interval union", "Cantor", "Cantorval", "unknown"};
        for (int i = 0; i < 4; ++i) {
            s += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y - 10) +
                 "\" width=\"12\" height=\"12\" fill=\"" + std::string(verdict_color(all[i])) + "\"/>\n";
            s += "<text x=\"" + std::to_string(x + 16) + "\" y=\"" + std::to_string(y) +
                 "\" font-family=\"monospace\" font-size=\"11\">" + names[i] + "</text>\n";
            x += 150;
        }
    }
    s += "</svg>\n";
    return s;
}

// Coarse coverage bar over [0, sum]: '#' where a column intersects a cover
// component.
inline std::string render_cover_ascii(const DepthCover& cover, int width = 80) {
    if (width < kMinAsciiWidth)
        throw Error("ascii width must be at least " + std::to_string(kMinAsciiWidth));
    const Ratio top = cover.components.back().hi;
    std::string band(static_cast<size_t>(width), '.');
    auto column = [&](const Ratio& v) {
        auto col = (num(v) * den(top) * width / (den(v) * num(top))).convert_to<long long>();
        return std::max(0LL, std::min<long long>(col, width - 1));
    };
    for (const RatioInterval& c : cover.components)
        for (long long col = column(c.lo); col <= column(c.hi); ++col)
            band[static_cast<size_t>(col)] = '#';
    return "0 [" + band + "] " + ratio_str(top) + "\n";
}

// SVG number line for a cover: one bar per component.
inline std::string render_cover_svg(const DepthCover& cover, int width = 800) {
    if (width < 200) throw Error("svg width must be at least 200");
    const int margin = 40;
    const int plot = width - 2 * margin;
    const Ratio top = cover.components.back().hi;
    auto xpos = [&](const Ratio& v) { return fixed2(Ratio(margin) + v / top * plot); };
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"110\" viewBox=\"0 0 " + std::to_string(width) + " 110\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + std::to_string(margin) +
         "\" y=\"24\" font-family=\"monospace\" font-size=\"14\">depth " +
         std::to_string(cover.depth) + " cover, " + std::to_string(cover.components.size()) +
         " components, total length " + ratio_str(cover.total_length) + "</text>\n";
    s += "<line x1=\"" + std::to_string(margin) + "\" y1=\"70\" x2=\"" + std::to_string(margin + plot) +
         "\" y2=\"70\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    for (const RatioInterval& c : cover.components) {
        s += "<rect x=\"" + xpos(c.lo) + "\" y=\"52\" width=\"" + fixed2((c.hi - c.lo) / top * plot) +
             "\" height=\"24\" fill=\"#4e79a7\"/>\n";
    }
    s += "<text x=\"" + std::to_string(margin) +
         "\" y=\"96\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">0</text>\n";
    s += "<text x=\"" + std::to_string(margin + plot) +
         "\" y=\"96\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" +
         ratio_str(top) + "</text>\n";
    s += "</svg>\n";
    return s;
}

} // namespace cantorval
