#include "simplexcert/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include "simplexcert/oracle.hpp"

namespace simplexcert {

namespace {

// Runs body(i) for i in [0, count). The parallel path captures the first
// exception thrown by any iteration and rethrows it after the loop.
template <typename Body>
void for_each_index(std::size_t count, Execution mode, Body&& body)
{
    if (mode == Execution::serial) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::exception_ptr failure;
    const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = total - 1; i >= 0; --i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(simplexcert_sweep_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
}

void require_range(std::size_t lo, std::size_t hi, std::size_t min)
{
    if (lo < min || hi < lo)
        throw std::invalid_argument("invalid dimension range");
}

} // namespace

bool DimensionEntry::passed() const
{
    const Rational nn(static_cast<long>(n));
    return well_built && all_passed(ledger) && dihedral_cos * nn == Rational(1) &&
           central_cos * nn == Rational(-1) && oracle_ok && oracle_abs_err <= kOracleTolerance;
}

bool CertificationReport::overall() const
{
    return base_case && failed_count() == 0;
}

std::size_t CertificationReport::passed_count() const
{
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const DimensionEntry& e) { return e.passed(); }));
}

std::size_t CertificationReport::failed_count() const { return entries.size() - passed_count(); }

DimensionEntry certify_dimension(std::size_t n, std::size_t n_max, const std::optional<Injection>& fault)
{
    DimensionEntry entry;
    entry.n = n;

    const Simplex s = standard_simplex(n);
    const Rational target(static_cast<long>(n * n));
    entry.well_built = true;
    for (std::size_t v = 0; v <= n; ++v) {
        Rational ratio = well_built_ratio(s, v);
        entry.well_built = entry.well_built && ratio == target;
        if (v == 0)
            entry.well_built_ratio = std::move(ratio);
    }

    if (n < n_max)
        entry.ledger = run_ledger(n, fault);

    entry.dihedral_cos = dihedral_cosine(s, 0, 1);
    entry.central_cos = central_angle_cosine(s, 0, 1);

    const OracleResult oracle = float_oracle_dihedral(n);
    entry.oracle_ok = oracle.ok;
    entry.oracle_abs_err = oracle.ok ? std::abs(entry.dihedral_cos.to_double() - oracle.cosine) : INFINITY;
    return entry;
}

CertificationReport induction_sweep(std::size_t n_max, Execution mode, const std::optional<Injection>& fault)
{
    if (n_max < 2)
        throw std::invalid_argument("the sweep needs n_max >= 2");
    if (fault) {
        if (n_max < 3)
            throw std::invalid_argument("fault injection needs at least one construction scene (n_max >= 3)");
        // The smallest scene (base dimension 2) has 4 coordinates.
        if (fault->coord >= 4)
            throw std::out_of_range("fault coordinate must exist in every scene (1..4)");
    }

    CertificationReport report;
    report.n_max = n_max;
    report.fault = fault;
    report.base_case = well_built_ratio(standard_simplex(2), 0) == Rational(4);

    report.entries.resize(n_max - 1);
    for_each_index(report.entries.size(), mode,
                   [&](std::size_t i) { report.entries[i] = certify_dimension(i + 2, n_max, fault); });
    return report;
}

std::vector<AltitudeCheck> certify_hypotheses(std::size_t lo, std::size_t hi, Execution mode)
{
    require_range(lo, hi, 1);
    std::vector<AltitudeCheck> checks(hi - lo + 1);
    for_each_index(checks.size(), mode,
                   [&](std::size_t i) { checks[i] = verify_altitude_properties(standard_simplex(lo + i)); });
    return checks;
}

std::vector<Rational> well_built_ratios(std::size_t lo, std::size_t hi, Execution mode)
{
    require_range(lo, hi, 1);
    std::vector<Rational> ratios(hi - lo + 1);
    for_each_index(ratios.size(), mode,
                   [&](std::size_t i) { ratios[i] = well_built_ratio(standard_simplex(lo + i), 0); });
    return ratios;
}

} // namespace simplexcert
