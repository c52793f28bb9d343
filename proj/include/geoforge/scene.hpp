#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geoforge/dsl/eval.hpp"
#include "geoforge/errors.hpp"

namespace geoforge {

/// Drawable primitives in painter's order. Coordinates are binary64: exact
/// scalars are converted here, at the rendering boundary, and nowhere
/// earlier.
struct SceneItem {
    enum class Kind { point, segment, line, polygon };

    Kind kind = Kind::point;
    std::string style;
    std::vector<std::array<double, 2>> coords;  // point: 1, segment: 2, polygon: n
    double a = 0, b = 0, c = 0;                 // infinite line a*x + b*y = c
    std::optional<std::string> label;
};

struct Scene {
    std::string title;
    std::vector<SceneItem> items;

    void add_point(double x, double y, std::optional<std::string> label = std::nullopt,
                   std::string style = "point") {
        items.push_back({SceneItem::Kind::point, std::move(style), {{x, y}}, 0, 0, 0,
                         std::move(label)});
    }
    void add_segment(double x1, double y1, double x2, double y2,
                     std::string style = "construction-line") {
        items.push_back({SceneItem::Kind::segment, std::move(style), {{x1, y1}, {x2, y2}}, 0, 0,
                         0, std::nullopt});
    }
    void add_line(double a, double b, double c, std::string style = "construction-line",
                  std::optional<std::string> label = std::nullopt) {
        items.push_back({SceneItem::Kind::line, std::move(style), {}, a, b, c, std::move(label)});
    }
    void add_polygon(std::vector<std::array<double, 2>> pts,
                     std::string style = "triangle-primary") {
        items.push_back({SceneItem::Kind::polygon, std::move(style), std::move(pts), 0, 0, 0,
                         std::nullopt});
    }
};

/// The y-flipped drawing rectangle: mathematical "up" renders up.
struct ViewBox {
    double min_x = 0, min_y = 0, width = 0, height = 0;
    std::string str() const;
};

/// Bounding box of all finite scene points with a 5% margin per side; a
/// degenerate axis is first widened to extent 1 about its value. Throws
/// Error when the scene has no finite point.
ViewBox autoscale(const Scene& scene);

/// The five fixed style classes with stroke/fill/width properties. Width
/// defaults scale with the viewBox and may be overridden with an absolute
/// value.
struct StyleConfig {
    std::map<std::string, std::map<std::string, std::string>> entries;

    static StyleConfig defaults();
    /// defaults() overlaid with "class.property = value" lines; "#" starts a
    /// comment line. Unknown classes or properties are rejected.
    static StyleConfig load_file(const std::string& path);
};

/// Deterministic standalone SVG 1.1 document; byte-identical for identical
/// inputs.
std::string render_svg(const Scene& scene, const StyleConfig& style = StyleConfig::defaults());

/// Scene for one render directive: points and lines from the evaluated
/// environment in directive order.
template <class S>
Scene build_scene(const dsl::RenderDirective& directive, const dsl::Environment<S>& env) {
    using T = ScalarTraits<S>;
    Scene scene;
    scene.title = directive.title;
    for (const dsl::RenderItem& item : directive.items) {
        const auto* value = env.find(item.name);
        if (value == nullptr)
            throw dsl::ScriptError(item.span, "error at " + dsl::span_phrase(item.span) +
                                                  ": unknown identifier \"" + item.name + "\"");
        if (const auto* p = std::get_if<Point<S>>(value)) {
            scene.add_point(T::to_double(p->x), T::to_double(p->y), item.label);
        } else {
            const auto& l = std::get<Line<S>>(*value);
            scene.add_line(T::to_double(l.a), T::to_double(l.b), T::to_double(l.c),
                           "construction-line", item.label);
        }
    }
    return scene;
}

}  // namespace geoforge
