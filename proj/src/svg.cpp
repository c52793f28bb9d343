#include "geoforge/scene.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace geoforge {

namespace {

std::string fmt6(double v) {
    if (v == 0.0) v = 0.0;  // collapse negative zero
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

std::string escape_xml(const std::string& text) {
    std::string out;
    for (const char c : text) {
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

constexpr const char* kClasses[] = {"triangle-primary", "triangle-derived", "construction-line",
                                    "point", "label"};

bool known_class(const std::string& name) {
    for (const char* c : kClasses)
        if (name == c) return true;
    return false;
}

std::string style_prop(const StyleConfig& style, const std::string& cls, const std::string& prop,
                       const std::string& fallback) {
    const auto cit = style.entries.find(cls);
    if (cit != style.entries.end()) {
        const auto pit = cit->second.find(prop);
        if (pit != cit->second.end()) return pit->second;
    }
    return fallback;
}

/// Intersections of a*x + b*y = c with the box edges, in svg coordinates.
std::vector<std::array<double, 2>> clip_line(double a, double b, double c, const ViewBox& vb) {
    const double x0 = vb.min_x, x1 = vb.min_x + vb.width;
    const double y0 = vb.min_y, y1 = vb.min_y + vb.height;
    const double slack = 1e-9 * std::max(vb.width, vb.height);
    std::vector<std::array<double, 2>> pts;
    const auto push = [&](double x, double y) {
        for (const auto& p : pts)
            if (std::fabs(p[0] - x) <= slack && std::fabs(p[1] - y) <= slack) return;
        pts.push_back({x, y});
    };
    if (b != 0.0) {
        for (const double x : {x0, x1}) {
            const double y = (c - a * x) / b;
            if (y >= y0 - slack && y <= y1 + slack) push(x, std::clamp(y, y0, y1));
        }
    }
    if (a != 0.0) {
        for (const double y : {y0, y1}) {
            const double x = (c - b * y) / a;
            if (x >= x0 - slack && x <= x1 + slack) push(std::clamp(x, x0, x1), y);
        }
    }
    if (pts.size() > 2) {
        // Corner hits can leave collinear duplicates; keep the extreme pair.
        std::sort(pts.begin(), pts.end());
        pts = {pts.front(), pts.back()};
    }
    return pts;
}

}  // namespace

std::string ViewBox::str() const {
    return "(" + fmt6(min_x) + ", " + fmt6(min_y) + ", " + fmt6(width) + ", " + fmt6(height) +
           ")";
}

ViewBox autoscale(const Scene& scene) {
    bool any = false;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    const auto feed = [&](double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y)) return;
        if (!any) {
            min_x = max_x = x;
            min_y = max_y = y;
            any = true;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (const SceneItem& item : scene.items)
        for (const auto& p : item.coords) feed(p[0], -p[1]);
    if (!any) throw Error("autoscale of a scene without finite points");

    const auto widen = [](double& lo, double& hi) {
        if (hi - lo == 0.0) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    };
    widen(min_x, max_x);
    widen(min_y, max_y);
    return {min_x, min_y, max_x - min_x, max_y - min_y};
}

StyleConfig StyleConfig::defaults() {
    StyleConfig s;
    s.entries["triangle-primary"] = {{"stroke", "#1f77b4"}, {"fill", "none"}};
    s.entries["triangle-derived"] = {{"stroke", "#d62728"}, {"fill", "none"}};
    s.entries["construction-line"] = {{"stroke", "#999999"}, {"fill", "none"}};
    s.entries["point"] = {{"stroke", "none"}, {"fill", "#222222"}};
    s.entries["label"] = {{"stroke", "none"}, {"fill", "#222222"}};
    return s;
}

StyleConfig StyleConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open style config: " + path);
    StyleConfig s = defaults();
    std::string line;
    int lineno = 0;
    const auto trim = [](std::string text) {
        const auto from = text.find_first_not_of(" \t\r");
        const auto to = text.find_last_not_of(" \t\r");
        return from == std::string::npos ? std::string() : text.substr(from, to - from + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const std::string entry = trim(line);
        if (entry.empty() || entry[0] == '#') continue;
        const auto eq = entry.find('=');
        const auto dot = entry.find('.');
        if (eq == std::string::npos || dot == std::string::npos || dot > eq)
            throw Error("style config line " + std::to_string(lineno) +
                        ": expected \"class.property = value\"");
        const std::string cls = trim(entry.substr(0, dot));
        const std::string prop = trim(entry.substr(dot + 1, eq - dot - 1));
        const std::string value = trim(entry.substr(eq + 1));
        if (!known_class(cls))
            throw Error("style config line " + std::to_string(lineno) + ": unknown class \"" +
                        cls + "\"");
        const bool font_prop = prop == "font-family" || prop == "font-size";
        if (!(prop == "stroke" || prop == "fill" || prop == "width" ||
              (cls == "label" && font_prop)))
            throw Error("style config line " + std::to_string(lineno) + ": unknown property \"" +
                        prop + "\"");
        if (value.empty())
            throw Error("style config line " + std::to_string(lineno) + ": empty value");
        s.entries[cls][prop] = value;
    }
    return s;
}

std::string render_svg(const Scene& scene, const StyleConfig& style) {
    const ViewBox vb = autoscale(scene);
    const double dim = std::max(vb.width, vb.height);
    const double radius = 0.008 * dim;
    const double font = 0.03 * dim;
    const double label_offset = radius * 1.5;

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" +
                      fmt6(vb.min_x) + " " + fmt6(vb.min_y) + " " + fmt6(vb.width) + " " +
                      fmt6(vb.height) + "\">\n";
    if (!scene.title.empty()) out += "<title>" + escape_xml(scene.title) + "</title>\n";

    out += "<style>\n";
    for (const char* cls : kClasses) {
        const std::string width =
            style_prop(style, cls, "width",
                       fmt6((std::string(cls) == "construction-line" ? 0.003 : 0.005) * dim));
        out += "." + std::string(cls) + " { fill: " + style_prop(style, cls, "fill", "none") +
               "; stroke: " + style_prop(style, cls, "stroke", "none") +
               "; stroke-width: " + width + ";";
        if (std::string(cls) == "label")
            out += " font-family: " + style_prop(style, cls, "font-family", "sans-serif") +
                   "; font-size: " + style_prop(style, cls, "font-size", fmt6(font)) + ";";
        out += " }\n";
    }
    out += "</style>\n";

    const auto emit_label = [&](const std::optional<std::string>& label, double x, double y) {
        if (!label || label->empty()) return;
        out += "<text class=\"label\" x=\"" + fmt6(x + label_offset) + "\" y=\"" +
               fmt6(y - label_offset) + "\">" + escape_xml(*label) + "</text>\n";
    };

    for (const SceneItem& item : scene.items) {
        switch (item.kind) {
            case SceneItem::Kind::point: {
                const double x = item.coords[0][0];
                const double y = -item.coords[0][1];
                out += "<circle class=\"" + item.style + "\" cx=\"" + fmt6(x) + "\" cy=\"" +
                       fmt6(y) + "\" r=\"" + fmt6(radius) + "\"/>\n";
                emit_label(item.label, x, y);
                break;
            }
            case SceneItem::Kind::segment: {
                out += "<line class=\"" + item.style + "\" x1=\"" + fmt6(item.coords[0][0]) +
                       "\" y1=\"" + fmt6(-item.coords[0][1]) + "\" x2=\"" +
                       fmt6(item.coords[1][0]) + "\" y2=\"" + fmt6(-item.coords[1][1]) +
                       "\"/>\n";
                break;
            }
            case SceneItem::Kind::line: {
                // In svg coordinates the locus a*x + b*y = c becomes
                // a*x - b*y = c.
                const auto pts = clip_line(item.a, -item.b, item.c, vb);
                if (pts.size() < 2) break;
                out += "<line class=\"" + item.style + "\" x1=\"" + fmt6(pts[0][0]) +
                       "\" y1=\"" + fmt6(pts[0][1]) + "\" x2=\"" + fmt6(pts[1][0]) + "\" y2=\"" +
                       fmt6(pts[1][1]) + "\"/>\n";
                emit_label(item.label, (pts[0][0] + pts[1][0]) / 2, (pts[0][1] + pts[1][1]) / 2);
                break;
            }
            case SceneItem::Kind::polygon: {
                out += "<polygon class=\"" + item.style + "\" points=\"";
                for (std::size_t i = 0; i < item.coords.size(); ++i) {
                    if (i > 0) out += " ";
                    out += fmt6(item.coords[i][0]) + "," + fmt6(-item.coords[i][1]);
                }
                out += "\"/>\n";
                break;
            }
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace geoforge
