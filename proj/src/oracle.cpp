#include "simplexcert/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace simplexcert {

namespace {

constexpr double kMinRcond = 1e-12;

// Inward normal of the facet opposite `apex`, expressed in ambient
// coordinates and restricted to the affine hull spanned by `dirs` (columns
// are v_k - v_0, k = 1..n). Solves for coefficients c with
//   (dirs c) . (f_k - f_0) = 0   for the facet's edges
//   (dirs c) . (apex - f_0) = 1
bool facet_normal(const Eigen::MatrixXd& vertices, const Eigen::MatrixXd& dirs, Eigen::Index apex,
                  Eigen::VectorXd& normal)
{
    const Eigen::Index count = vertices.cols();
    const Eigen::Index n = dirs.cols();

    Eigen::Index base = apex == 0 ? 1 : 0;
    Eigen::MatrixXd constraints(n, vertices.rows());
    Eigen::Index row = 0;
    for (Eigen::Index k = 0; k < count; ++k) {
        if (k == apex || k == base)
            continue;
        constraints.row(row++) = (vertices.col(k) - vertices.col(base)).transpose();
    }
    constraints.row(row) = (vertices.col(apex) - vertices.col(base)).transpose();

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;

    const Eigen::MatrixXd system = constraints * dirs;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(system);
    if (!(lu.rcond() > kMinRcond))
        return false;
    normal = dirs * lu.solve(rhs);
    const double len = normal.norm();
    if (!(len > 0.0) || !std::isfinite(len))
        return false;
    normal /= len;
    return true;
}

} // namespace

OracleResult float_oracle_dihedral(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("dihedral angles need dimension at least 2");

    const auto count = static_cast<Eigen::Index>(n + 1);
    const Eigen::MatrixXd vertices = Eigen::MatrixXd::Identity(count, count);
    Eigen::MatrixXd dirs(count, count - 1);
    for (Eigen::Index k = 1; k < count; ++k)
        dirs.col(k - 1) = vertices.col(k) - vertices.col(0);

    Eigen::VectorXd first, second;
    if (!facet_normal(vertices, dirs, 0, first) || !facet_normal(vertices, dirs, 1, second))
        return {};
    return {-first.dot(second), true};
}

} // namespace simplexcert
