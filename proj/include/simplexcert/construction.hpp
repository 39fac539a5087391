#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "simplexcert/rat_vector.hpp"

namespace simplexcert {

// Labels of the eight points of the plane cross-section construction.
enum class Label { A, B, C, D, E, F, G, H };

inline constexpr std::array<Label, 8> kAllLabels = {Label::A, Label::B, Label::C, Label::D,
                                                    Label::E, Label::F, Label::G, Label::H};

char to_char(Label label);
std::optional<Label> label_from_char(char c);

// The cross-section of the regular (n+1)-simplex built on a regular n-simplex
// base, inside standard_simplex(n+1) (ambient dimension n+2):
//   A  first base vertex e1           C  apex e_{n+2}
//   B  foot of the base altitude from A (centroid of e2..e_{n+1})
//   F  centroid of the base           E  centroid of the face opposite A
//   D  centroid of the whole simplex  G  2B - E, extension of CB past B
//   H  intersection of lines BD and EF
// The circle is centered at B through E, F and G.
struct ConstructionScene {
    std::size_t base_dim = 0;
    std::array<RatPoint, 8> points;
    Rational circle_sq_radius;
    std::array<RatVector, 2> plane_basis;
    // H = B + t (D - B) = E + s (F - E).
    Rational h_param_on_bd;
    Rational h_param_on_ef;

    std::size_t ambient_dim() const { return base_dim + 2; }
    const RatPoint& at(Label label) const { return points[static_cast<std::size_t>(label)]; }
    RatPoint& at(Label label) { return points[static_cast<std::size_t>(label)]; }
    const RatPoint& circle_center() const { return at(Label::B); }
};

// Builds and certifies the scene for base dimension n >= 2. Throws
// std::invalid_argument for n < 2 and GeometryError when a construction
// invariant fails (D on CF, E on CB, all points in one plane).
ConstructionScene build_construction(std::size_t n);

// Adds `delta` to one coordinate (0-based) of one labeled point. Derived
// fields are left untouched so that the ledger sees an inconsistent scene.
void perturb(ConstructionScene& scene, Label label, std::size_t coord, const Rational& delta);

} // namespace simplexcert

namespace simplexcert {

// Single-coordinate fault injected into a freshly built scene.
struct Injection {
    Label point = Label::A;
    std::size_t coord = 0; // 0-based
    Rational delta;

    // "E:4:1/1000" (1-based coordinate). Throws std::invalid_argument.
    static Injection parse(std::string_view text);
    std::string str() const;
};

} // namespace simplexcert
