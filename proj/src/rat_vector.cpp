#include "simplexcert/rat_vector.hpp"

#include <sstream>
#include <utility>

namespace simplexcert {

namespace {

void require_same_size(const RatVector& u, const RatVector& v, const char* op)
{
    if (u.size() != v.size()) {
        std::ostringstream msg;
        msg << op << ": dimension mismatch (" << u.size() << " vs " << v.size() << ")";
        throw DimensionError(msg.str());
    }
}

} // namespace

RatVector RatVector::basis(std::size_t dim, std::size_t index)
{
    if (index >= dim)
        throw std::out_of_range("basis index out of range");
    RatVector v(dim);
    v[index] = Rational(1);
    return v;
}

bool RatVector::is_zero() const
{
    for (const auto& c : coords_)
        if (!c.is_zero())
            return false;
    return true;
}

RatVector& RatVector::operator+=(const RatVector& rhs)
{
    require_same_size(*this, rhs, "add");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += rhs.coords_[i];
    return *this;
}

RatVector& RatVector::operator-=(const RatVector& rhs)
{
    require_same_size(*this, rhs, "sub");
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= rhs.coords_[i];
    return *this;
}

RatVector& RatVector::operator*=(const Rational& scale)
{
    for (auto& c : coords_)
        c *= scale;
    return *this;
}

std::string RatVector::str() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i)
            out += ", ";
        out += coords_[i].str();
    }
    return out + ")";
}

std::string_view to_string(Sign sign)
{
    switch (sign) {
    case Sign::negative:
        return "negative";
    case Sign::zero:
        return "zero";
    case Sign::positive:
        return "positive";
    }
    return "zero";
}

Sign sign_of(const Rational& value)
{
    int s = value.sign();
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

std::optional<Rational> CosineWitness::exact_cosine() const
{
    auto root = exact_sqrt(cos_sq);
    if (!root)
        return std::nullopt;
    return sign == Sign::negative ? -*root : *root;
}

Rational dot(const RatVector& u, const RatVector& v)
{
    require_same_size(u, v, "dot");
    Rational sum;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero())
            sum += u[i] * v[i];
    return sum;
}

Rational sq_norm(const RatVector& v) { return dot(v, v); }

Rational sq_dist(const RatPoint& p, const RatPoint& q)
{
    require_same_size(p, q, "sq_dist");
    return sq_norm(p - q);
}

CosineWitness cosine_witness(const RatVector& u, const RatVector& v)
{
    require_same_size(u, v, "cosine_witness");
    Rational uu = sq_norm(u);
    Rational vv = sq_norm(v);
    if (uu.is_zero() || vv.is_zero())
        throw DegenerateAngleError("angle with a zero-length ray");
    Rational uv = dot(u, v);
    return CosineWitness{uv * uv / (uu * vv), sign_of(uv)};
}

std::size_t rank(std::span<const RatVector> vectors)
{
    if (vectors.empty())
        return 0;
    const std::size_t cols = vectors.front().size();
    std::vector<std::vector<Rational>> rows;
    rows.reserve(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != cols)
            throw DimensionError("rank: vectors of differing dimension");
        rows.push_back(v.coords());
    }

    // Row echelon form, pivoting on the first nonzero entry of each column.
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero())
                continue;
            Rational factor = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!rows[r][j].is_zero())
                    rows[i][j] -= factor * rows[r][j];
        }
        ++r;
    }
    return r;
}

bool rank_le(std::span<const RatVector> vectors, std::size_t k) { return rank(vectors) <= k; }

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> matrix,
                                                  std::vector<Rational> rhs)
{
    const std::size_t n = matrix.size();
    if (rhs.size() != n)
        throw DimensionError("solve_linear: rhs length mismatch");
    for (const auto& row : matrix)
        if (row.size() != n)
            throw DimensionError("solve_linear: matrix is not square");

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && matrix[pivot][c].is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(matrix[c], matrix[pivot]);
        std::swap(rhs[c], rhs[pivot]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (matrix[i][c].is_zero())
                continue;
            Rational factor = matrix[i][c] / matrix[c][c];
            for (std::size_t j = c; j < n; ++j)
                matrix[i][j] -= factor * matrix[c][j];
            rhs[i] -= factor * rhs[c];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= matrix[i][j] * x[j];
        x[i] = acc / matrix[i][i];
    }
    return x;
}

std::optional<Rational> line_parameter(const RatPoint& from, const RatPoint& to, const RatPoint& p)
{
    RatVector dir = to - from;
    Rational len_sq = sq_norm(dir);
    if (len_sq.is_zero())
        throw GeometryError("line_parameter: coincident endpoints");
    Rational t = dot(p - from, dir) / len_sq;
    if (from + t * dir != p)
        return std::nullopt;
    return t;
}

bool collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r)
{
    const RatVector diffs[] = {q - p, r - p};
    return rank_le(diffs, 1);
}

bool strictly_between(const RatPoint& from, const RatPoint& to, const RatPoint& p)
{
    if (from == to)
        return false;
    auto t = line_parameter(from, to, p);
    return t && t->sign() > 0 && *t < Rational(1);
}

RatPoint orthogonal_projection(const RatPoint& point, std::span<const RatPoint> hull)
{
    if (hull.empty())
        throw std::invalid_argument("orthogonal_projection: empty hull");
    const RatPoint& origin = hull.front();
    if (hull.size() == 1)
        return origin;

    const std::size_t k = hull.size() - 1;
    std::vector<RatVector> dirs;
    dirs.reserve(k);
    for (std::size_t i = 1; i < hull.size(); ++i)
        dirs.push_back(hull[i] - origin);

    std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
    std::vector<Rational> rhs(k);
    const RatVector offset = point - origin;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            gram[i][j] = dot(dirs[i], dirs[j]);
            gram[j][i] = gram[i][j];
        }
        rhs[i] = dot(dirs[i], offset);
    }
    auto coeffs = solve_linear(std::move(gram), std::move(rhs));
    if (!coeffs)
        throw GeometryError("orthogonal_projection: hull is affinely dependent");

    RatPoint foot = origin;
    for (std::size_t i = 0; i < k; ++i)
        foot += (*coeffs)[i] * dirs[i];
    return foot;
}

} // namespace simplexcert
