#include "cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <vector>

namespace tricircle::cli {

namespace {

struct Point {
    double x, y;
};

struct Disk {
    Point center;
    double radius;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << v;
    return os.str();
}

// Vertex i (0-based) of a circle with `count` vertices; vertices start at the top and run clockwise.
Point vertex_position(const Disk& d, int i, int count) {
    const double t = -std::numbers::pi / 2 + 2 * std::numbers::pi * i / count;
    return {d.center.x + d.radius * std::cos(t), d.center.y + d.radius * std::sin(t)};
}

std::array<Disk, 3> layout_disks(const RenderSpec& r) {
    const double cx = r.width / 2.0, cy = r.height / 2.0;
    const double span = std::min(r.width, r.height);
    std::array<Disk, 3> disks{};
    if (r.layout == RenderSpec::Layout::nested) {
        disks[index_of(Circle::P)] = {{cx, cy}, span * 0.42};
        disks[index_of(Circle::M)] = {{cx - span * 0.17, cy}, span * 0.09};
        disks[index_of(Circle::N)] = {{cx + span * 0.17, cy}, span * 0.09};
        return disks;
    }
    for (Circle c : all_circles) {
        const double t = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(index_of(c)) / 3;
        disks[index_of(c)] = {{cx + span * 0.28 * std::cos(t), cy + span * 0.28 * std::sin(t)}, span * 0.14};
    }
    return disks;
}

std::string color_of(const RenderSpec& r, Circle a, Circle b) {
    if (index_of(b) < index_of(a)) std::swap(a, b);
    auto it = r.colors.find({a, b});
    return it == r.colors.end() ? "black" : it->second;
}

}  // namespace

std::string render_svg(const TripartiteSpec& spec, const RenderSpec& render) {
    const auto disks = layout_disks(render);
    const Point mid{render.width / 2.0, render.height / 2.0};
    std::array<std::vector<Point>, 3> verts;
    for (Circle c : all_circles) {
        for (int i = 0; i < spec.size(c); ++i) verts[index_of(c)].push_back(vertex_position(disks[index_of(c)], i, spec.size(c)));
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << render.width << "\" height=\""
       << render.height << "\" viewBox=\"0 0 " << render.width << " " << render.height << "\">\n";

    os << "  <g fill=\"none\" stroke-width=\"1\" stroke-opacity=\"0.7\">\n";
    for (Circle a : all_circles) {
        const Circle b = next(a);
        const std::string color = color_of(render, a, b);
        for (const Point& u : verts[index_of(a)]) {
            for (const Point& v : verts[index_of(b)]) {
                // bend through the midpoint between the chord and the canvas center
                const Point ctl{((u.x + v.x) / 2 + mid.x) / 2, ((u.y + v.y) / 2 + mid.y) / 2};
                os << "    <path d=\"M " << fmt(u.x) << " " << fmt(u.y) << " Q " << fmt(ctl.x) << " " << fmt(ctl.y) << " "
                   << fmt(v.x) << " " << fmt(v.y) << "\" stroke=\"" << color << "\"/>\n";
            }
        }
    }
    os << "  </g>\n";

    for (Circle c : all_circles) {
        const Disk& d = disks[index_of(c)];
        os << "  <circle cx=\"" << fmt(d.center.x) << "\" cy=\"" << fmt(d.center.y) << "\" r=\"" << fmt(d.radius)
           << "\" fill=\"none\" stroke=\"black\"><title>" << circle_name(c) << "</title></circle>\n";
    }
    for (Circle c : all_circles) {
        int i = 1;
        for (const Point& p : verts[index_of(c)]) {
            os << "  <rect x=\"" << fmt(p.x - 3) << "\" y=\"" << fmt(p.y - 3)
               << "\" width=\"6\" height=\"6\" fill=\"black\"><title>" << circle_name(c) << i++ << "</title></rect>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tricircle::cli
