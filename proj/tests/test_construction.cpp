#include <doctest.h>

#include "simplexcert/construction.hpp"
#include "simplexcert/simplex.hpp"

using namespace simplexcert;

// Coordinates frozen from tests/oracle/scene_oracle.py (Fraction arithmetic).
TEST_CASE("n=2 scene coordinates")
{
    const ConstructionScene scene = build_construction(2);
    CHECK(scene.ambient_dim() == 4);
    CHECK(scene.at(Label::A) == RatVector{1, 0, 0, 0});
    CHECK(scene.at(Label::B) == RatVector{0, Rational(1, 2), Rational(1, 2), 0});
    CHECK(scene.at(Label::C) == RatVector{0, 0, 0, 1});
    CHECK(scene.at(Label::D) == RatVector{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(1, 4)});
    CHECK(scene.at(Label::E) == RatVector{0, Rational(1, 3), Rational(1, 3), Rational(1, 3)});
    CHECK(scene.at(Label::F) == RatVector{Rational(1, 3), Rational(1, 3), Rational(1, 3), 0});
    CHECK(scene.at(Label::G) == RatVector{0, Rational(2, 3), Rational(2, 3), Rational(-1, 3)});
    CHECK(scene.at(Label::H) == RatVector{Rational(1, 6), Rational(1, 3), Rational(1, 3), Rational(1, 6)});
    CHECK(scene.h_param_on_bd == Rational(2, 3));
    CHECK(scene.h_param_on_ef == Rational(1, 2));
    CHECK(scene.circle_sq_radius == Rational(1, 6));
    CHECK(scene.circle_center() == scene.at(Label::B));
}

TEST_CASE("scene invariants across dimensions")
{
    for (std::size_t n = 2; n <= 12; ++n) {
        CAPTURE(n);
        const ConstructionScene s = build_construction(n);
        const Simplex outer = standard_simplex(n + 1);
        CHECK(s.at(Label::A) == outer.vertex(0));
        CHECK(s.at(Label::C) == outer.vertex(n + 1));
        // B is the foot of the base altitude from A; F the foot from C.
        const std::vector<RatPoint> base(outer.vertices().begin(), outer.vertices().end() - 1);
        CHECK(s.at(Label::B) == orthogonal_projection(s.at(Label::A), std::span(base).subspan(1)));
        CHECK(s.at(Label::F) == orthogonal_projection(s.at(Label::C), base));
        CHECK(s.at(Label::E) == altitude_foot(outer, 0));
        CHECK(s.at(Label::D) == centroid(outer.vertices()));
        CHECK(Rational(2) * s.at(Label::B) == s.at(Label::E) + s.at(Label::G));
        // H sits inside both of its defining segments.
        CHECK(s.h_param_on_bd > Rational(0));
        CHECK(s.h_param_on_bd < Rational(1));
        CHECK(s.h_param_on_ef > Rational(0));
        CHECK(s.h_param_on_ef < Rational(1));
        CHECK(strictly_between(s.at(Label::C), s.at(Label::F), s.at(Label::D)));
        CHECK(strictly_between(s.at(Label::C), s.at(Label::B), s.at(Label::E)));
        std::vector<RatVector> spread(s.plane_basis.begin(), s.plane_basis.end());
        for (const auto& p : s.points)
            spread.push_back(p - s.at(Label::A));
        CHECK(rank(spread) == 2);
    }
}

TEST_CASE("construction needs a base of dimension two")
{
    CHECK_THROWS_AS(build_construction(1), std::invalid_argument);
    CHECK_THROWS_AS(build_construction(0), std::invalid_argument);
}

TEST_CASE("labels")
{
    CHECK(to_char(Label::A) == 'A');
    CHECK(to_char(Label::H) == 'H');
    CHECK(label_from_char('E') == Label::E);
    CHECK_FALSE(label_from_char('I').has_value());
    CHECK_FALSE(label_from_char('a').has_value());
}

TEST_CASE("perturbation")
{
    ConstructionScene s = build_construction(2);
    perturb(s, Label::E, 3, Rational(1, 1000));
    CHECK(s.at(Label::E)[3] == Rational(1, 3) + Rational(1, 1000));
    CHECK_THROWS_AS(perturb(s, Label::E, 4, Rational(1)), std::out_of_range);
}

TEST_CASE("injection syntax")
{
    const Injection inj = Injection::parse("E:4:1/1000");
    CHECK(inj.point == Label::E);
    CHECK(inj.coord == 3);
    CHECK(inj.delta == Rational(1, 1000));
    CHECK(inj.str() == "E:4:1/1000");
    CHECK(Injection::parse("H:1:-2").delta == Rational(-2));

    for (const char* bad : {"", "E", "E:4", "Z:1:1", "EE:1:1", "E:0:1", "E:x:1", "E:1:0", "E:1:1/0", "E:1:abc"})
        CHECK_THROWS(Injection::parse(bad));
}
