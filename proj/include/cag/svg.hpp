#pragma once

// Static SVG drawing of an arc representation: k ticks on a reference circle
// and one concentric band per vertex carrying its arc.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "cag/arc_rep.hpp"
#include "cag/graph.hpp"

namespace cag {

namespace detail {

inline std::string fmt(const char* f, double a, double b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
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

} // namespace detail

inline std::string render_svg(const Graph& g, const ArcRep& rep) {
    using detail::fmt;
    const int k = std::max(rep.k, 1);
    const int bands = g.size();
    const double r0 = 60.0, step = 14.0;
    const double size = 2 * (r0 + step * (bands + 2));
    const double c = size / 2;
    // Point p sits at angle 2*pi*p/k, clockwise from the top.
    auto at = [&](double p, double r) {
        double t = 2 * std::numbers::pi * p / k;
        return std::pair{c + r * std::sin(t), c - r * std::cos(t)};
    };

    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt("%.0f", size, 0) + "\" height=\"" +
         fmt("%.0f", size, 0) + "\">\n";
    s += "<circle cx=\"" + fmt("%.2f", c, 0) + "\" cy=\"" + fmt("%.2f", c, 0) + "\" r=\"" + fmt("%.2f", r0, 0) +
         "\" fill=\"none\" stroke=\"#888\"/>\n";
    for (int p = 0; p < k; ++p) {
        auto [x1, y1] = at(p, r0 - 4);
        auto [x2, y2] = at(p, r0 + 4);
        auto [tx, ty] = at(p, r0 - 14);
        s += "<line x1=\"" + fmt("%.2f", x1, 0) + "\" y1=\"" + fmt("%.2f", y1, 0) + "\" x2=\"" + fmt("%.2f", x2, 0) +
             "\" y2=\"" + fmt("%.2f", y2, 0) + "\" stroke=\"#888\"/>\n";
        s += "<text x=\"" + fmt("%.2f", tx, 0) + "\" y=\"" + fmt("%.2f", ty, 0) +
             "\" font-size=\"8\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(p) + "</text>\n";
    }

    for (Vertex v = 0; v < g.size(); ++v) {
        const double r = r0 + step * (v + 1);
        const std::string label = detail::xml_escape(g.label(v));
        auto it = rep.arcs.find(v);
        double mid;
        if (it == rep.arcs.end()) {
            s += "<circle cx=\"" + fmt("%.2f", c, 0) + "\" cy=\"" + fmt("%.2f", c, 0) + "\" r=\"" + fmt("%.2f", r, 0) +
                 "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"3\"/>\n";
            mid = 0;
        } else {
            auto [l, rr] = it->second;
            const int len = arc_length(l, rr, k);
            // Span the covered points l+1..r-1, padded so single points show.
            double from = l + 1 - 0.3, sweep = std::max(len - 1 + 0.6, 0.3);
            auto [x1, y1] = at(from, r);
            auto [x2, y2] = at(from + sweep, r);
            s += "<path d=\"M " + fmt("%.2f %.2f", x1, y1) + " A " + fmt("%.2f %.2f", r, r) + " 0 " +
                 (sweep > k / 2.0 ? "1" : "0") + " 1 " + fmt("%.2f %.2f", x2, y2) +
                 "\" fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"3\"/>\n";
            mid = from + sweep / 2;
        }
        auto [tx, ty] = at(mid, r + step / 2);
        s += "<text x=\"" + fmt("%.2f", tx, 0) + "\" y=\"" + fmt("%.2f", ty, 0) +
             "\" font-size=\"9\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + label + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace cag
