#include "simplexcert/ledger.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace simplexcert {

namespace {

struct CatalogEntry {
    LemmaId id;
    std::string_view name;
};

constexpr std::array<CatalogEntry, 27> kCatalog = {{
    {LemmaId::L5_11, "L5.11"}, {LemmaId::L5_12, "L5.12"}, {LemmaId::L5_13, "L5.13"},
    {LemmaId::L5_14, "L5.14"}, {LemmaId::L5_15a, "L5.15a"}, {LemmaId::L5_15b, "L5.15b"},
    {LemmaId::L5_16, "L5.16"}, {LemmaId::L5_17, "L5.17"}, {LemmaId::L5_18, "L5.18"},
    {LemmaId::L5_19, "L5.19"}, {LemmaId::L5_21, "L5.21"}, {LemmaId::L5_22, "L5.22"},
    {LemmaId::L5_23, "L5.23"}, {LemmaId::L5_24, "L5.24"}, {LemmaId::L5_25, "L5.25"},
    {LemmaId::L5_26, "L5.26"}, {LemmaId::L5_27, "L5.27"}, {LemmaId::L5_28, "L5.28"},
    {LemmaId::L5_29, "L5.29"}, {LemmaId::L5_30, "L5.30"}, {LemmaId::L5_31, "L5.31"},
    {LemmaId::L5_32, "L5.32"}, {LemmaId::L5_33, "L5.33"}, {LemmaId::L5_35, "L5.35"},
    {LemmaId::S5_3, "S5.3"}, {LemmaId::S5_4, "S5.4"}, {LemmaId::S5_7, "S5.7"},
}};

constexpr std::array<LemmaId, 27> kOrder = [] {
    std::array<LemmaId, 27> out{};
    for (std::size_t i = 0; i < kCatalog.size(); ++i)
        out[i] = kCatalog[i].id;
    return out;
}();

using enum Label;

std::string seg(Label x, Label y) { return {to_char(x), to_char(y)}; }

// Records every compared quantity into the result while evaluating.
class Evaluator {
public:
    Evaluator(const ConstructionScene& scene, LemmaResult& result) : scene_(scene), result_(result) {}

    const RatPoint& at(Label l) const { return scene_.at(l); }

    Rational sq(Label x, Label y)
    {
        Rational v = sq_dist(at(x), at(y));
        record("|" + seg(x, y) + "|^2", v);
        return v;
    }

    // (x - vertex) . (y - vertex)
    Rational inner(Label vertex, Label x, Label y)
    {
        Rational v = dot(at(x) - at(vertex), at(y) - at(vertex));
        record("<" + seg(vertex, x) + "," + seg(vertex, y) + ">", v);
        return v;
    }

    // Angle x-vertex-y.
    CosineWitness angle(Label x, Label vertex, Label y)
    {
        CosineWitness w = cosine_witness(at(x) - at(vertex), at(y) - at(vertex));
        const std::string name = std::string{to_char(x), to_char(vertex), to_char(y)};
        record("cos^2(" + name + ")", w.cos_sq);
        record("sgn cos(" + name + ")", Rational(w.sign == Sign::negative ? -1 : w.sign == Sign::zero ? 0 : 1));
        return w;
    }

    // p strictly inside segment (from, to); records the line parameter.
    bool between(Label from, Label to, Label p)
    {
        if (at(from) == at(to)) {
            note("segment " + seg(from, to) + " is degenerate");
            return false;
        }
        auto t = line_parameter(at(from), at(to), at(p));
        if (!t) {
            note(std::string(1, to_char(p)) + " is off line " + seg(from, to));
            return false;
        }
        record("t(" + std::string(1, to_char(p)) + " on " + seg(from, to) + ")", *t);
        return t->sign() > 0 && *t < Rational(1);
    }

    bool same_sq(Label a, Label b, Label c, Label d)
    {
        const Rational lhs = sq(a, b);
        const Rational rhs = sq(c, d);
        return lhs == rhs;
    }

    bool same_angle(Label a1, Label v1, Label b1, Label a2, Label v2, Label b2)
    {
        const CosineWitness lhs = angle(a1, v1, b1);
        const CosineWitness rhs = angle(a2, v2, b2);
        return lhs == rhs;
    }

    bool collinear3(Label x, Label y, Label z)
    {
        const RatVector diffs[] = {at(y) - at(x), at(z) - at(x)};
        const std::size_t r = rank(diffs);
        record("rank(" + seg(x, y) + "," + seg(x, z) + ")", Rational(static_cast<long>(r)));
        return r <= 1;
    }

    void record(std::string name, WitnessValue value)
    {
        result_.witness.push_back({std::move(name), std::move(value)});
    }

    void note(const std::string& text)
    {
        if (!result_.note.empty())
            result_.note += "; ";
        result_.note += text;
    }

    const ConstructionScene& scene() const { return scene_; }

private:
    const ConstructionScene& scene_;
    LemmaResult& result_;
};

bool complementary_acute(const CosineWitness& a, const CosineWitness& b)
{
    return a.sign == Sign::positive && b.sign == Sign::positive && a.cos_sq + b.cos_sq == Rational(1);
}

bool evaluate(Evaluator& ev, LemmaResult& r)
{
    const Rational n(static_cast<long>(ev.scene().base_dim));
    const Rational n1 = n + Rational(1);

    switch (r.id) {
    case LemmaId::L5_11:
        r.statement = "|AB|^2 = |CB|^2";
        return ev.same_sq(A, B, C, B);

    case LemmaId::L5_12: {
        r.statement = "(n+1)^2 |AF|^2 = n^2 |AB|^2 and (n+1)^2 |CE|^2 = n^2 |CB|^2";
        const Rational af = ev.sq(A, F);
        const Rational ab = ev.sq(A, B);
        const Rational ce = ev.sq(C, E);
        const Rational cb = ev.sq(C, B);
        const bool base = n1 * n1 * af == n * n * ab;
        const bool side = n1 * n1 * ce == n * n * cb;
        return base && side;
    }

    case LemmaId::L5_13:
        r.statement = "|AF|^2 = |CE|^2";
        return ev.same_sq(A, F, C, E);

    case LemmaId::L5_14:
        r.statement = "|EB|^2 = |BF|^2";
        return ev.same_sq(E, B, B, F);

    case LemmaId::L5_15a:
        r.statement = "|BG|^2 = |BF|^2";
        ev.note("first of two steps numbered 5.15");
        return ev.same_sq(B, G, B, F);

    case LemmaId::L5_15b:
        r.statement = "|AE|^2 = |CF|^2";
        ev.note("second of two steps numbered 5.15");
        return ev.same_sq(A, E, C, F);

    case LemmaId::L5_16: {
        r.statement = "angles CFA, CFB, AEC, AEB are right: <FC,FA> = <FC,FB> = <EA,EC> = <EA,EB> = 0";
        const bool cfa = ev.inner(F, C, A).is_zero();
        const bool cfb = ev.inner(F, C, B).is_zero();
        const bool aec = ev.inner(E, A, C).is_zero();
        const bool aeb = ev.inner(E, A, B).is_zero();
        return cfa && cfb && aec && aeb;
    }

    case LemmaId::L5_17: {
        r.statement = "angle ADF = angle CDE, with D inside AE and inside CF";
        const bool ade = ev.between(A, E, D);
        const bool cdf = ev.between(C, F, D);
        if (!ade || !cdf)
            return false;
        const CosineWitness adf = ev.angle(A, D, F);
        return adf == ev.angle(C, D, E);
    }

    case LemmaId::L5_18: {
        r.statement = "triangles ADF, CDE congruent: |AD|^2 = |CD|^2, |DF|^2 = |DE|^2, |AF|^2 = |CE|^2";
        const bool s1 = ev.same_sq(A, D, C, D);
        const bool s2 = ev.same_sq(D, F, D, E);
        const bool s3 = ev.same_sq(A, F, C, E);
        return s1 && s2 && s3;
    }

    case LemmaId::L5_19:
        r.statement = "|DF|^2 = |DE|^2";
        return ev.same_sq(D, F, D, E);

    case LemmaId::L5_21: {
        r.statement = "|BF|^2 = |BE|^2 = |BG|^2, E, B, G collinear with 2B = E + G";
        const Rational bf = ev.sq(B, F);
        const Rational be = ev.sq(B, E);
        const Rational bg = ev.sq(B, G);
        const bool radii = bf == be && bf == bg;
        const bool line = ev.collinear3(E, B, G);
        const RatVector twice_b = Rational(2) * ev.at(B);
        const RatVector e_plus_g = ev.at(E) + ev.at(G);
        ev.record("2B", twice_b);
        ev.record("E+G", e_plus_g);
        return radii && line && twice_b == e_plus_g;
    }

    case LemmaId::L5_22:
        r.statement = "angle EFG is right: <FE,FG> = 0 (F on the circle with diameter EG)";
        ev.note("as written the step names angle ADF; the checked angle is EFG, the one Thales gives");
        return ev.inner(F, E, G).is_zero();

    case LemmaId::L5_23: {
        r.statement = "triangles DFB, DEB congruent (SSS): |DF|^2 = |DE|^2, |FB|^2 = |EB|^2, DB shared";
        ev.note("as written the step repeats triangles ADF, CDE; the checked pair is DFB, DEB");
        const bool s1 = ev.same_sq(D, F, D, E);
        const bool s2 = ev.same_sq(F, B, E, B);
        ev.sq(D, B);
        return s1 && s2;
    }

    case LemmaId::L5_24: {
        r.statement = "H is the midpoint of EF: 2H = E + F";
        const RatVector twice_h = Rational(2) * ev.at(H);
        const RatVector e_plus_f = ev.at(E) + ev.at(F);
        ev.record("2H", twice_h);
        ev.record("E+F", e_plus_f);
        return twice_h == e_plus_f;
    }

    case LemmaId::L5_25: {
        r.statement = "triangles FBE and FBG isosceles: |FB|^2 = |BE|^2 and |FB|^2 = |BG|^2";
        const Rational fb = ev.sq(F, B);
        const bool fbe = fb == ev.sq(B, E);
        const bool fbg = fb == ev.sq(B, G);
        return fbe && fbg;
    }

    case LemmaId::L5_26:
        r.statement = "angle EHB is right: <HE,HB> = 0";
        return ev.inner(H, E, B).is_zero();

    case LemmaId::L5_27:
        r.statement = "base angles of FBG: angle BGF = angle BFG";
        return ev.same_angle(B, G, F, B, F, G);

    case LemmaId::L5_28: {
        r.statement = "angle BFE = 90 deg - angle BFG: EFG right, cos^2(BFE) + cos^2(BFG) = 1, both acute";
        const bool right = ev.inner(F, E, G).is_zero();
        const CosineWitness bfe = ev.angle(B, F, E);
        const CosineWitness bfg = ev.angle(B, F, G);
        return right && complementary_acute(bfe, bfg);
    }

    case LemmaId::L5_29:
        r.statement = "base angles of FBE: angle EFB = angle FEB";
        return ev.same_angle(E, F, B, F, E, B);

    case LemmaId::L5_30: {
        r.statement = "EHB right-angled at H and angle EBH = 90 deg - angle HEB";
        const bool right = ev.inner(H, E, B).is_zero();
        const CosineWitness ebh = ev.angle(E, B, H);
        const CosineWitness heb = ev.angle(H, E, B);
        return right && complementary_acute(ebh, heb);
    }

    case LemmaId::L5_31:
        r.statement = "angle EBH = angle BFG";
        return ev.same_angle(E, B, H, B, F, G);

    case LemmaId::L5_32: {
        r.statement = "DB parallel to FG: rank(D - B, G - F) = 1";
        const RatVector db = ev.at(D) - ev.at(B);
        const RatVector fg = ev.at(G) - ev.at(F);
        const RatVector pair[] = {db, fg};
        const std::size_t rk = rank(pair);
        ev.record("rank(BD,FG)", Rational(static_cast<long>(rk)));
        return rk == 1 && !db.is_zero() && !fg.is_zero();
    }

    case LemmaId::L5_33: {
        r.statement = "CD : DF = CB : BG: |CD|^2 |BG|^2 = |DF|^2 |CB|^2, with C, D, F and C, B, G collinear";
        const Rational cd = ev.sq(C, D);
        const Rational bg = ev.sq(B, G);
        const Rational df = ev.sq(D, F);
        const Rational cb = ev.sq(C, B);
        const Rational lhs = cd * bg;
        const Rational rhs = df * cb;
        const bool cdf = ev.collinear3(C, D, F);
        const bool cbg = ev.collinear3(C, B, G);
        return cdf && cbg && lhs == rhs;
    }

    case LemmaId::L5_35: {
        r.statement = "CD : DF = (n+1) : 1, i.e. |CD|^2 = (n+1)^2 |DF|^2";
        const Rational cd = ev.sq(C, D);
        const Rational df = ev.sq(D, F);
        ev.record("(n+1)^2", n1 * n1);
        return cd == n1 * n1 * df;
    }

    case LemmaId::S5_3: {
        r.statement = "A..H span exactly one plane: rank(P - A : P in B..H) = 2";
        std::vector<RatVector> diffs;
        for (Label l : kAllLabels)
            if (l != A)
                diffs.push_back(ev.at(l) - ev.at(A));
        const std::size_t rk = rank(diffs);
        ev.record("rank", Rational(static_cast<long>(rk)));
        return rk == 2;
    }

    case LemmaId::S5_4:
        r.statement = "D lies strictly inside segment CF";
        return ev.between(C, F, D);

    case LemmaId::S5_7:
        r.statement = "E lies strictly inside segment CB";
        return ev.between(C, B, E);
    }
    return false;
}

} // namespace

std::string_view to_string(LemmaId id)
{
    for (const auto& entry : kCatalog)
        if (entry.id == id)
            return entry.name;
    return "?";
}

std::optional<LemmaId> lemma_from_string(std::string_view text)
{
    for (const auto& entry : kCatalog)
        if (entry.name == text)
            return entry.id;
    return std::nullopt;
}

std::span<const LemmaId> ledger_catalog() { return kOrder; }

LemmaResult check_lemma(const ConstructionScene& scene, LemmaId id)
{
    LemmaResult result;
    result.id = id;
    Evaluator ev(scene, result);
    try {
        result.passed = evaluate(ev, result);
    } catch (const DegenerateAngleError& e) {
        result.passed = false;
        ev.note(e.what());
    } catch (const GeometryError& e) {
        result.passed = false;
        ev.note(e.what());
    }
    return result;
}

std::vector<LemmaResult> run_ledger(const ConstructionScene& scene)
{
    std::vector<LemmaResult> ledger;
    ledger.reserve(kOrder.size());
    for (LemmaId id : kOrder)
        ledger.push_back(check_lemma(scene, id));
    return ledger;
}

std::vector<LemmaResult> run_ledger(std::size_t n, const std::optional<Injection>& fault)
{
    ConstructionScene scene = build_construction(n);
    if (fault)
        perturb(scene, fault->point, fault->coord, fault->delta);
    return run_ledger(scene);
}

bool all_passed(std::span<const LemmaResult> ledger)
{
    return std::all_of(ledger.begin(), ledger.end(), [](const LemmaResult& r) { return r.passed; });
}

std::optional<Rational> scene_dihedral_cosine(const ConstructionScene& scene)
{
    const CosineWitness w = cosine_witness(scene.at(C) - scene.at(B), scene.at(F) - scene.at(B));
    if (w.sign != Sign::positive)
        return std::nullopt;
    return w.exact_cosine();
}

} // namespace simplexcert
