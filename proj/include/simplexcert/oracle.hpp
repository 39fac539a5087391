#pragma once

#include <cstddef>

namespace simplexcert {

struct OracleResult {
    double cosine = 0.0;
    // False when a facet-normal solve was too ill-conditioned to trust.
    bool ok = false;
};

// Floating-point dihedral cosine of the regular n-simplex, computed without
// any of the exact machinery: inward unit normals of two adjacent facets are
// obtained inside the simplex's affine hull from dense LU solves, and the
// interior angle is pi minus the angle between them. n >= 2.
OracleResult float_oracle_dihedral(std::size_t n);

} // namespace simplexcert
