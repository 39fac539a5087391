#include "simplexcert/construction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "simplexcert/simplex.hpp"

namespace simplexcert {

char to_char(Label label) { return static_cast<char>('A' + static_cast<int>(label)); }

std::optional<Label> label_from_char(char c)
{
    if (c < 'A' || c > 'H')
        return std::nullopt;
    return static_cast<Label>(c - 'A');
}

namespace {

// Solves B + t (D - B) = E + s (F - E) exactly through the 2x2 normal
// equations, then confirms the residual vanishes.
std::pair<Rational, Rational> intersect_lines(const RatPoint& b, const RatPoint& d,
                                              const RatPoint& e, const RatPoint& f)
{
    const RatVector u = d - b;
    const RatVector w = e - f;
    const RatVector r = e - b;
    const Rational a11 = dot(u, u), a12 = dot(u, w), a22 = dot(w, w);
    const Rational b1 = dot(u, r), b2 = dot(w, r);
    const Rational det = a11 * a22 - a12 * a12;
    if (det.is_zero())
        throw GeometryError("lines BD and EF are parallel");
    Rational t = (b1 * a22 - a12 * b2) / det;
    Rational s = (a11 * b2 - a12 * b1) / det;
    if (b + t * u != e + s * (f - e))
        throw GeometryError("lines BD and EF do not meet");
    return {std::move(t), std::move(s)};
}

} // namespace

ConstructionScene build_construction(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("the construction needs a base of dimension at least 2");

    const Simplex outer = standard_simplex(n + 1);
    const auto& v = outer.vertices();
    const std::span<const RatPoint> all(v);

    ConstructionScene scene;
    scene.base_dim = n;
    scene.at(Label::A) = v.front();
    scene.at(Label::C) = v.back();
    scene.at(Label::B) = centroid(all.subspan(1, n));
    scene.at(Label::F) = centroid(all.first(n + 1));
    scene.at(Label::E) = centroid(all.subspan(1));
    scene.at(Label::D) = centroid(all);

    const RatPoint& b = scene.at(Label::B);
    const RatPoint& e = scene.at(Label::E);
    scene.at(Label::G) = Rational(2) * b - e;

    auto [t, s] = intersect_lines(b, scene.at(Label::D), e, scene.at(Label::F));
    scene.at(Label::H) = b + t * (scene.at(Label::D) - b);
    scene.h_param_on_bd = std::move(t);
    scene.h_param_on_ef = std::move(s);

    scene.circle_sq_radius = sq_dist(b, scene.at(Label::G));
    scene.plane_basis = {b - scene.at(Label::A), scene.at(Label::C) - scene.at(Label::A)};

    if (!strictly_between(scene.at(Label::C), scene.at(Label::F), scene.at(Label::D)))
        throw GeometryError("D is not inside segment CF");
    if (!strictly_between(scene.at(Label::C), b, e))
        throw GeometryError("E is not inside segment CB");
    std::vector<RatVector> spread(scene.plane_basis.begin(), scene.plane_basis.end());
    for (const auto& p : scene.points)
        spread.push_back(p - scene.at(Label::A));
    if (rank(spread) != 2)
        throw GeometryError("construction points do not span a single plane");
    return scene;
}

void perturb(ConstructionScene& scene, Label label, std::size_t coord, const Rational& delta)
{
    RatPoint& p = scene.at(label);
    if (coord >= p.size())
        throw std::out_of_range("coordinate " + std::to_string(coord + 1) + " does not exist in a " +
                                std::to_string(p.size()) + "-dimensional scene");
    p[coord] += delta;
}

} // namespace simplexcert

namespace simplexcert {

Injection Injection::parse(std::string_view text)
{
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos)
        throw std::invalid_argument("injection must look like POINT:COORD:DELTA, e.g. E:4:1/1000");

    const auto point = text.substr(0, first);
    const auto coord = text.substr(first + 1, second - first - 1);
    const auto delta = text.substr(second + 1);

    Injection inj;
    auto label = point.size() == 1 ? label_from_char(point.front()) : std::nullopt;
    if (!label)
        throw std::invalid_argument("injection point must be one of A..H");
    inj.point = *label;

    std::size_t index = 0;
    if (coord.empty() || coord.size() > 6)
        throw std::invalid_argument("injection coordinate must be a positive integer");
    for (char c : coord) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("injection coordinate must be a positive integer");
        index = index * 10 + static_cast<std::size_t>(c - '0');
    }
    if (index == 0)
        throw std::invalid_argument("injection coordinates are 1-based");
    inj.coord = index - 1;

    inj.delta = Rational::parse(delta);
    if (inj.delta.is_zero())
        throw std::invalid_argument("injection delta must be nonzero");
    return inj;
}

std::string Injection::str() const
{
    return std::string(1, to_char(point)) + ":" + std::to_string(coord + 1) + ":" + delta.str();
}

} // namespace simplexcert
