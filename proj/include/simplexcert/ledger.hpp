#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "simplexcert/construction.hpp"

namespace simplexcert {

// Frozen identifiers of the checked proof steps. L-entries are the numbered
// steps 5.11..5.35 (5.20 and 5.34 are folded into L5.21 and L5.35; the doubled
// number 5.15 becomes L5.15a/L5.15b). S-entries are construction invariants
// of steps 5.3, 5.4 and 5.7. Consumers must treat these as opaque strings.
enum class LemmaId {
    L5_11, L5_12, L5_13, L5_14, L5_15a, L5_15b, L5_16, L5_17, L5_18, L5_19,
    L5_21, L5_22, L5_23, L5_24, L5_25, L5_26, L5_27, L5_28, L5_29, L5_30,
    L5_31, L5_32, L5_33, L5_35,
    S5_3, S5_4, S5_7,
};

std::string_view to_string(LemmaId id);
std::optional<LemmaId> lemma_from_string(std::string_view text);

// Every ledger entry in evaluation order (sorted by identifier string).
std::span<const LemmaId> ledger_catalog();

using WitnessValue = std::variant<Rational, RatVector>;

struct Witness {
    std::string name;
    WitnessValue value;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct LemmaResult {
    LemmaId id = LemmaId::L5_11;
    std::string statement;
    bool passed = false;
    std::vector<Witness> witness;
    // Free-form remark: textual deviations, degenerate geometry, ...
    std::string note;

    friend bool operator==(const LemmaResult&, const LemmaResult&) = default;
};

// Evaluates one exact predicate on the scene. Degenerate geometry (a zero
// ray, coincident segment endpoints) makes the lemma fail rather than throw.
LemmaResult check_lemma(const ConstructionScene& scene, LemmaId id);

std::vector<LemmaResult> run_ledger(const ConstructionScene& scene);
// Builds the scene for base dimension n, applies the optional fault, and
// evaluates the whole catalog.
std::vector<LemmaResult> run_ledger(std::size_t n, const std::optional<Injection>& fault = std::nullopt);

bool all_passed(std::span<const LemmaResult> ledger);

// Dihedral cosine of the (n+1)-simplex read off the scene as |FB| / |CB|,
// i.e. cos of angle CBF. Empty unless the squared ratio is a rational square
// and the angle is acute.
std::optional<Rational> scene_dihedral_cosine(const ConstructionScene& scene);

} // namespace simplexcert
