#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "simplexcert/report.hpp"

namespace simplexcert {

namespace {

using Vec = std::vector<double>;

Vec to_doubles(const RatVector& v)
{
    Vec out;
    out.reserve(v.size());
    for (const auto& c : v)
        out.push_back(c.to_double());
    return out;
}

double dot(const Vec& a, const Vec& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Point2 {
    double x = 0.0, y = 0.0;
};

constexpr std::array<std::pair<Label, Label>, 7> kSegments = {{
    {Label::A, Label::B}, {Label::C, Label::F}, {Label::A, Label::E}, {Label::B, Label::D},
    {Label::G, Label::F}, {Label::E, Label::F}, {Label::C, Label::G},
}};

} // namespace

std::string render_scene_svg(const ConstructionScene& scene)
{
    // Orthonormal frame of the plane, floating point; rendering only.
    Vec u = to_doubles(scene.plane_basis[0]);
    Vec w = to_doubles(scene.plane_basis[1]);
    const double ulen = std::sqrt(dot(u, u));
    for (auto& c : u)
        c /= ulen;
    const double proj = dot(w, u);
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] -= proj * u[i];
    const double wlen = std::sqrt(dot(w, w));
    for (auto& c : w)
        c /= wlen;

    const Vec origin = to_doubles(scene.at(Label::A));
    std::array<Point2, 8> flat;
    for (Label l : kAllLabels) {
        Vec p = to_doubles(scene.at(l));
        for (std::size_t i = 0; i < p.size(); ++i)
            p[i] -= origin[i];
        flat[static_cast<std::size_t>(l)] = {dot(p, u), dot(p, w)};
    }
    const Point2 center = flat[static_cast<std::size_t>(Label::B)];
    const double radius = std::sqrt(scene.circle_sq_radius.to_double());

    double min_x = center.x - radius, max_x = center.x + radius;
    double min_y = center.y - radius, max_y = center.y + radius;
    for (const auto& p : flat) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }

    constexpr double kWidth = 560.0;
    constexpr double kMargin = 40.0;
    const double scale = kWidth / std::max(max_x - min_x, 1e-9);
    const double height = (max_y - min_y) * scale;
    auto to_screen = [&](const Point2& p) {
        return Point2{kMargin + (p.x - min_x) * scale, kMargin + (max_y - p.y) * scale};
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth + 2 * kMargin) << "\" height=\""
        << num(height + 2 * kMargin) << "\" viewBox=\"0 0 " << num(kWidth + 2 * kMargin) << ' '
        << num(height + 2 * kMargin) << "\">\n"
        << "  <title>Plane cross-section of the regular " << scene.base_dim + 1
        << "-simplex over its " << scene.base_dim << "-dimensional base</title>\n"
        << "  <rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const Point2 c = to_screen(center);
    svg << "  <circle class=\"circle-c\" cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\""
        << num(radius * scale) << "\" fill=\"none\" stroke=\"#3465a4\" stroke-dasharray=\"6 4\"/>\n";

    svg << "  <g class=\"segments\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const auto& [from, to] : kSegments) {
        const Point2 a = to_screen(flat[static_cast<std::size_t>(from)]);
        const Point2 b = to_screen(flat[static_cast<std::size_t>(to)]);
        svg << "    <line data-segment=\"" << to_char(from) << to_char(to) << "\" x1=\"" << num(a.x)
            << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y) << "\"/>\n";
    }
    svg << "  </g>\n";

    svg << "  <g class=\"points\" font-family=\"sans-serif\" font-size=\"16\">\n";
    for (Label l : kAllLabels) {
        const Point2 p = to_screen(flat[static_cast<std::size_t>(l)]);
        svg << "    <rect class=\"point\" data-label=\"" << to_char(l) << "\" x=\"" << num(p.x - 3) << "\" y=\""
            << num(p.y - 3) << "\" width=\"6\" height=\"6\" fill=\"#cc0000\"/>\n"
            << "    <text class=\"label\" x=\"" << num(p.x + 6) << "\" y=\"" << num(p.y - 6) << "\">"
            << to_char(l) << "</text>\n";
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

} // namespace simplexcert
