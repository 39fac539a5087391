#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "simplexcert/ledger.hpp"
#include "simplexcert/simplex.hpp"

using namespace simplexcert;

namespace {

const Witness* find_witness(const LemmaResult& r, const std::string& name)
{
    for (const auto& w : r.witness)
        if (w.name == name)
            return &w;
    return nullptr;
}

Rational scalar(const LemmaResult& r, const std::string& name)
{
    const Witness* w = find_witness(r, name);
    REQUIRE_MESSAGE(w != nullptr, "missing witness ", name);
    return std::get<Rational>(w->value);
}

} // namespace

TEST_CASE("catalog")
{
    const auto catalog = ledger_catalog();
    CHECK(catalog.size() == 27);

    std::vector<std::string> names;
    for (LemmaId id : catalog)
        names.emplace_back(to_string(id));
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::set<std::string>(names.begin(), names.end()).size() == names.size());

    // Every step 5.11..5.35 except the folded 5.20 and 5.34; 5.15 twice.
    std::set<std::string> expected;
    for (int step = 11; step <= 35; ++step)
        if (step != 20 && step != 34 && step != 15)
            expected.insert("L5." + std::to_string(step));
    expected.insert("L5.15a");
    expected.insert("L5.15b");
    std::set<std::string> steps;
    for (const auto& name : names)
        if (name.front() == 'L')
            steps.insert(name);
    CHECK(steps == expected);

    for (const auto& name : names)
        CHECK(lemma_from_string(name).has_value());
    CHECK_FALSE(lemma_from_string("L5.20").has_value());
    CHECK_FALSE(lemma_from_string("L5.15").has_value());
}

TEST_CASE("n=2 ledger with frozen witnesses")
{
    const ConstructionScene scene = build_construction(2);

    const LemmaResult l14 = check_lemma(scene, LemmaId::L5_14);
    CHECK(l14.passed);
    CHECK(scalar(l14, "|EB|^2") == Rational(1, 6));
    CHECK(scalar(l14, "|BF|^2") == Rational(1, 6));

    const LemmaResult l24 = check_lemma(scene, LemmaId::L5_24);
    CHECK(l24.passed);
    const Witness* twice_h = find_witness(l24, "2H");
    REQUIRE(twice_h != nullptr);
    CHECK(std::get<RatVector>(twice_h->value) == RatVector{Rational(1, 3), Rational(2, 3), Rational(2, 3), Rational(1, 3)});

    const LemmaResult l35 = check_lemma(scene, LemmaId::L5_35);
    CHECK(l35.passed);
    CHECK(scalar(l35, "|CD|^2") == Rational(3, 4));
    CHECK(scalar(l35, "|DF|^2") == Rational(1, 12));
    CHECK(scalar(l35, "|CD|^2") / scalar(l35, "|DF|^2") == Rational(9));

    const auto ledger = run_ledger(2);
    CHECK(ledger.size() == 27);
    CHECK(all_passed(ledger));
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        CHECK(ledger[i].id == ledger_catalog()[i]);
        CHECK_FALSE(ledger[i].statement.empty());
        CHECK_FALSE(ledger[i].witness.empty());
    }
}

TEST_CASE("recorded readings of irregular steps")
{
    const ConstructionScene scene = build_construction(3);
    CHECK(check_lemma(scene, LemmaId::L5_15a).note.find("5.15") != std::string::npos);
    CHECK(check_lemma(scene, LemmaId::L5_15b).note.find("5.15") != std::string::npos);
    CHECK(check_lemma(scene, LemmaId::L5_22).note.find("ADF") != std::string::npos);
    CHECK(check_lemma(scene, LemmaId::L5_23).note.find("ADF") != std::string::npos);
}

TEST_CASE("ledger passes for a range of dimensions")
{
    for (std::size_t n = 2; n <= 12; ++n) {
        CAPTURE(n);
        const auto ledger = run_ledger(n);
        for (const auto& r : ledger) {
            CAPTURE(to_string(r.id));
            CHECK(r.passed);
        }
    }
}

TEST_CASE("scene route to the dihedral cosine")
{
    for (std::size_t n = 2; n <= 10; ++n) {
        const ConstructionScene scene = build_construction(n);
        // cos CBF = |FB| / |CB| = 1 / (n+1): the dihedral cosine one dimension up.
        CHECK(scene_dihedral_cosine(scene) == dihedral_cosine(n + 1));
        const Rational n1(static_cast<long>(n + 1));
        CHECK(n1 * n1 * sq_dist(scene.at(Label::F), scene.at(Label::B)) ==
              sq_dist(scene.at(Label::C), scene.at(Label::B)));
    }
    const ConstructionScene s2 = build_construction(2);
    CHECK(sq_dist(s2.at(Label::B), s2.at(Label::F)) == Rational(1, 6));
    CHECK(sq_dist(s2.at(Label::B), s2.at(Label::C)) == Rational(3, 2));
    CHECK(dot(s2.at(Label::F) - s2.at(Label::B), s2.at(Label::C) - s2.at(Label::B)) == Rational(1, 6));
    CHECK(scene_dihedral_cosine(s2) == Rational(1, 3));
}

TEST_CASE("injected fault on E breaks L5.14")
{
    const auto ledger = run_ledger(2, Injection{Label::E, 3, Rational(1, 1000)});
    const auto it = std::find_if(ledger.begin(), ledger.end(), [](const auto& r) { return r.id == LemmaId::L5_14; });
    REQUIRE(it != ledger.end());
    CHECK_FALSE(it->passed);
    CHECK(scalar(*it, "|EB|^2") != scalar(*it, "|BF|^2"));
    CHECK_FALSE(all_passed(ledger));
}

TEST_CASE("every single-point perturbation is detected")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        ConstructionScene scene = build_construction(n);
        const Label label = kAllLabels[rng() % kAllLabels.size()];
        const std::size_t coord = rng() % scene.ambient_dim();
        long num = static_cast<long>(rng() % 21) - 10;
        if (num == 0)
            num = 1;
        const Rational delta(num, static_cast<long>(1 + rng() % 1000));
        CAPTURE(n);
        CAPTURE(to_char(label));
        CAPTURE(coord);
        CAPTURE(delta.str());
        perturb(scene, label, coord, delta);
        CHECK_FALSE(all_passed(run_ledger(scene)));
    }
}

TEST_CASE("degenerate scenes fail without throwing")
{
    ConstructionScene scene = build_construction(2);
    scene.at(Label::H) = scene.at(Label::B);
    const LemmaResult r = check_lemma(scene, LemmaId::L5_30);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.note.empty());

    scene = build_construction(2);
    scene.at(Label::F) = scene.at(Label::C);
    CHECK_FALSE(check_lemma(scene, LemmaId::S5_4).passed);
    CHECK_NOTHROW(run_ledger(scene));
}
