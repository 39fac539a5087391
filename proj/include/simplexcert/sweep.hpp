#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simplexcert/construction.hpp"
#include "simplexcert/ledger.hpp"
#include "simplexcert/simplex.hpp"

namespace simplexcert {

inline constexpr std::size_t kDefaultMaxDim = 64;
inline constexpr double kOracleTolerance = 1e-9;

// Serial kernels are the reference; the parallel ones distribute dimensions
// over OpenMP threads and must produce identical results.
enum class Execution { serial, parallel };

struct DimensionEntry {
    std::size_t n = 0;
    // |AO|^2 / |OH|^2 at vertex 0; `well_built` requires n^2 at every vertex.
    Rational well_built_ratio;
    bool well_built = false;
    // Ledger of the scene with base dimension n (the step n -> n+1). Empty for
    // the top dimension of a sweep.
    std::vector<LemmaResult> ledger;
    Rational dihedral_cos;
    Rational central_cos;
    double oracle_abs_err = 0.0;
    bool oracle_ok = false;

    bool passed() const;

    friend bool operator==(const DimensionEntry&, const DimensionEntry&) = default;
};

struct CertificationReport {
    std::size_t n_max = 0;
    // |AO|^2 / |OH|^2 = 4 in the triangle.
    bool base_case = false;
    std::vector<DimensionEntry> entries;
    std::optional<Injection> fault;

    bool overall() const;
    std::size_t passed_count() const;
    std::size_t failed_count() const;
};

DimensionEntry certify_dimension(std::size_t n, std::size_t n_max, const std::optional<Injection>& fault);

// Certifies the base case and every n in [2, n_max]. Entries are in n-order
// regardless of the execution mode. Throws std::invalid_argument for
// n_max < 2 and std::out_of_range when the fault's coordinate does not exist
// in some scene.
CertificationReport induction_sweep(std::size_t n_max, Execution mode = Execution::parallel,
                                    const std::optional<Injection>& fault = std::nullopt);

// verify_altitude_properties on standard_simplex(n) for n in [lo, hi].
std::vector<AltitudeCheck> certify_hypotheses(std::size_t lo, std::size_t hi,
                                              Execution mode = Execution::parallel);

// well_built_ratio at vertex 0 of standard_simplex(n) for n in [lo, hi].
std::vector<Rational> well_built_ratios(std::size_t lo, std::size_t hi,
                                        Execution mode = Execution::parallel);

} // namespace simplexcert
