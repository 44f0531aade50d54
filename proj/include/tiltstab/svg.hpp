#ifndef TILTSTAB_SVG_HPP
#define TILTSTAB_SVG_HPP

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "quad.hpp"

namespace tiltstab {

struct Overlay {
    enum class Kind { polyline, segment, point, label };
    Kind kind = Kind::polyline;
    std::vector<std::pair<QuadNumber, QuadNumber>> points;
    std::string text;  // label text, also used as point annotation
};

struct PlotSpec {
    std::string target;
    std::vector<Overlay> overlays;
    int width = 640;
    int height = 480;
};

namespace detail {

// fixed 6-decimal rendering so identical inputs give identical bytes
inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

}  // namespace detail

inline void emit_plot(const PlotSpec& spec, const std::string& path) {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& ov : spec.overlays)
        for (const auto& [qx, qy] : ov.points) {
            double x = qx.to_double(), y = qy.to_double();
            if (first) { xmin = xmax = x; ymin = ymax = y; first = false; continue; }
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    if (xmax - xmin < 1e-9) { xmin -= 1; xmax += 1; }
    if (ymax - ymin < 1e-9) { ymin -= 1; ymax += 1; }
    double margin = 40;
    double sx = (spec.width - 2 * margin) / (xmax - xmin);
    double sy = (spec.height - 2 * margin) / (ymax - ymin);
    auto px = [&](double x) { return margin + (x - xmin) * sx; };
    auto py = [&](double y) { return spec.height - margin - (y - ymin) * sy; };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
    out << "<!-- " << spec.target << " -->\n";
    // axes through the origin when visible
    if (xmin <= 0 && 0 <= xmax)
        out << "<line x1=\"" << detail::fmt(px(0)) << "\" y1=\"" << detail::fmt(py(ymin))
            << "\" x2=\"" << detail::fmt(px(0)) << "\" y2=\"" << detail::fmt(py(ymax))
            << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    if (ymin <= 0 && 0 <= ymax)
        out << "<line x1=\"" << detail::fmt(px(xmin)) << "\" y1=\"" << detail::fmt(py(0))
            << "\" x2=\"" << detail::fmt(px(xmax)) << "\" y2=\"" << detail::fmt(py(0))
            << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";

    for (const auto& ov : spec.overlays) {
        switch (ov.kind) {
            case Overlay::Kind::polyline: {
                out << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"1.5\" points=\"";
                for (size_t i = 0; i < ov.points.size(); ++i) {
                    if (i) out << ' ';
                    out << detail::fmt(px(ov.points[i].first.to_double())) << ','
                        << detail::fmt(py(ov.points[i].second.to_double()));
                }
                out << "\"/>\n";
                break;
            }
            case Overlay::Kind::segment: {
                if (ov.points.size() != 2) throw std::invalid_argument("segment needs two points");
                out << "<line x1=\"" << detail::fmt(px(ov.points[0].first.to_double())) << "\" y1=\""
                    << detail::fmt(py(ov.points[0].second.to_double())) << "\" x2=\""
                    << detail::fmt(px(ov.points[1].first.to_double())) << "\" y2=\""
                    << detail::fmt(py(ov.points[1].second.to_double()))
                    << "\" stroke=\"#b03030\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
                break;
            }
            case Overlay::Kind::point: {
                for (const auto& [qx, qy] : ov.points)
                    out << "<circle cx=\"" << detail::fmt(px(qx.to_double())) << "\" cy=\""
                        << detail::fmt(py(qy.to_double()))
                        << "\" r=\"3\" fill=\"#202020\"/>\n";
                break;
            }
            case Overlay::Kind::label: {
                if (ov.points.empty()) throw std::invalid_argument("label needs an anchor");
                out << "<text x=\"" << detail::fmt(px(ov.points[0].first.to_double()) + 5) << "\" y=\""
                    << detail::fmt(py(ov.points[0].second.to_double()) - 5)
                    << "\" font-size=\"11\" font-family=\"monospace\">" << ov.text << "</text>\n";
                break;
            }
        }
    }
    out << "</svg>\n";
}

}  // namespace tiltstab

#endif
