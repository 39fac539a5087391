#include "simplexcert/simplex.hpp"

#include <stdexcept>
#include <string>

namespace simplexcert {

namespace {

void require_vertex(const Simplex& s, std::size_t v)
{
    if (v > s.dim())
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for a " +
                                std::to_string(s.dim()) + "-simplex");
}

void require_angle_dim(std::size_t n)
{
    if (n < 2)
        throw std::invalid_argument("angles between faces need a simplex of dimension at least 2");
}

std::vector<RatPoint> all_except(const Simplex& s, std::size_t i, std::size_t j)
{
    std::vector<RatPoint> out;
    out.reserve(s.vertices().size());
    for (std::size_t k = 0; k < s.vertices().size(); ++k)
        if (k != i && k != j)
            out.push_back(s.vertices()[k]);
    return out;
}

} // namespace

Simplex::Simplex(std::vector<RatPoint> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty())
        throw GeometryError("simplex needs at least one vertex");
    for (const auto& v : vertices_)
        if (v.size() != vertices_.front().size())
            throw DimensionError("simplex vertices of differing dimension");
    if (ambient_dim() != vertices_.size())
        throw DimensionError("an n-simplex is embedded in n+1 coordinates");
    if (!is_regular(vertices_))
        throw GeometryError("vertices are not pairwise equidistant");
    if (!affinely_independent(vertices_))
        throw GeometryError("vertices are affinely dependent");
}

Rational Simplex::edge_sq_length() const
{
    return dim() == 0 ? Rational(0) : sq_dist(vertices_[0], vertices_[1]);
}

Simplex standard_simplex(std::size_t n)
{
    std::vector<RatPoint> vertices;
    vertices.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        vertices.push_back(RatVector::basis(n + 1, i));
    return Simplex(Simplex::Trusted{}, std::move(vertices));
}

bool is_regular(std::span<const RatPoint> vertices)
{
    if (vertices.size() < 2)
        return true;
    const Rational edge = sq_dist(vertices[0], vertices[1]);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (sq_dist(vertices[i], vertices[j]) != edge)
                return false;
    return !edge.is_zero();
}

bool affinely_independent(std::span<const RatPoint> vertices)
{
    if (vertices.size() < 2)
        return !vertices.empty();
    std::vector<RatVector> diffs;
    diffs.reserve(vertices.size() - 1);
    for (std::size_t i = 1; i < vertices.size(); ++i)
        diffs.push_back(vertices[i] - vertices[0]);
    return rank(diffs) == diffs.size();
}

RatPoint centroid(std::span<const RatPoint> points)
{
    if (points.empty())
        throw std::invalid_argument("centroid of an empty point set");
    RatPoint sum(points.front().size());
    for (const auto& p : points)
        sum += p;
    sum *= Rational(1, static_cast<long>(points.size()));
    return sum;
}

std::vector<RatPoint> face(const Simplex& s, std::size_t omit)
{
    require_vertex(s, omit);
    return all_except(s, omit, omit);
}

RatPoint altitude_foot(const Simplex& s, std::size_t v)
{
    if (s.dim() == 0)
        throw std::invalid_argument("a 0-simplex has no altitudes");
    return centroid(face(s, v));
}

bool AltitudeCheck::ok() const
{
    if (!congruent || !affinely_independent || records.size() != dim + 1)
        return false;
    for (const auto& r : records)
        if (!r.ok())
            return false;
    return true;
}

AltitudeCheck verify_altitude_properties(const Simplex& s)
{
    if (s.dim() == 0)
        throw std::invalid_argument("a 0-simplex has no altitudes");

    AltitudeCheck check;
    check.dim = s.dim();
    check.common_point = centroid(s.vertices());
    check.affinely_independent = affinely_independent(s.vertices());
    check.records.reserve(s.dim() + 1);

    for (std::size_t v = 0; v <= s.dim(); ++v) {
        const RatPoint& apex = s.vertex(v);
        const std::vector<RatPoint> opposite = face(s, v);

        AltitudeRecord rec;
        rec.vertex = v;
        rec.foot = centroid(opposite);
        rec.sq_length = sq_dist(apex, rec.foot);
        rec.foot_is_face_centroid = orthogonal_projection(apex, opposite) == rec.foot;

        const RatVector altitude = apex - rec.foot;
        rec.perpendicular = true;
        for (std::size_t k = 1; k < opposite.size() && rec.perpendicular; ++k)
            rec.perpendicular = dot(altitude, opposite[k] - opposite[0]).is_zero();

        if (apex != rec.foot) {
            auto t = line_parameter(apex, rec.foot, check.common_point);
            rec.passes_centroid = t.has_value();
            rec.internal = t && t->sign() > 0 && *t < Rational(1);
        }
        check.records.push_back(std::move(rec));
    }

    check.congruent = true;
    for (const auto& rec : check.records)
        check.congruent = check.congruent && rec.sq_length == check.records.front().sq_length;
    return check;
}

Rational well_built_ratio(const Simplex& s, std::size_t v)
{
    require_vertex(s, v);
    const RatPoint& apex = s.vertex(v);
    const RatPoint center = centroid(s.vertices());
    const RatPoint foot = altitude_foot(s, v);
    if (!strictly_between(apex, foot, center))
        throw GeometryError("centroid is not strictly between vertex and altitude foot");
    return sq_dist(apex, center) / sq_dist(center, foot);
}

Rational dihedral_cosine(const Simplex& s, std::size_t i, std::size_t j)
{
    require_angle_dim(s.dim());
    require_vertex(s, i);
    require_vertex(s, j);
    if (i == j)
        throw std::invalid_argument("dihedral angle needs two distinct hyperfaces");

    const std::vector<RatPoint> ridge = all_except(s, i, j);
    const RatPoint ridge_center = centroid(ridge);
    const RatVector u = s.vertex(i) - ridge_center;
    const RatVector w = s.vertex(j) - ridge_center;
    for (std::size_t k = 1; k < ridge.size(); ++k) {
        const RatVector edge = ridge[k] - ridge[0];
        if (!dot(u, edge).is_zero() || !dot(w, edge).is_zero())
            throw GeometryError("ridge spokes are not orthogonal to the ridge");
    }
    const Rational uu = sq_norm(u);
    if (uu != sq_norm(w))
        throw GeometryError("ridge spokes differ in length");
    return dot(u, w) / uu;
}

Rational dihedral_cosine(std::size_t n)
{
    require_angle_dim(n);
    return dihedral_cosine(standard_simplex(n), 0, 1);
}

Rational central_angle_cosine(const Simplex& s, std::size_t i, std::size_t j)
{
    require_angle_dim(s.dim());
    require_vertex(s, i);
    require_vertex(s, j);
    if (i == j)
        throw std::invalid_argument("central angle needs two distinct vertices");

    const RatPoint center = centroid(s.vertices());
    const RatVector u = s.vertex(i) - center;
    const RatVector w = s.vertex(j) - center;
    const Rational uu = sq_norm(u);
    if (uu != sq_norm(w))
        throw GeometryError("centroid spokes differ in length");
    return dot(u, w) / uu;
}

Rational central_angle_cosine(std::size_t n)
{
    require_angle_dim(n);
    return central_angle_cosine(standard_simplex(n), 0, 1);
}

SignedPermutation::SignedPermutation(std::vector<SignedIndex> entries) : entries_(std::move(entries))
{
    std::vector<bool> seen(entries_.size(), false);
    for (const auto& e : entries_) {
        if (e.sign != 1 && e.sign != -1)
            throw std::invalid_argument("signed permutation: sign must be +1 or -1");
        if (e.source >= entries_.size() || seen[e.source])
            throw std::invalid_argument("signed permutation: not a bijection");
        seen[e.source] = true;
    }
}

SignedPermutation SignedPermutation::identity(std::size_t dim)
{
    std::vector<SignedIndex> entries(dim);
    for (std::size_t k = 0; k < dim; ++k)
        entries[k] = {k, 1};
    return SignedPermutation(std::move(entries));
}

RatVector SignedPermutation::apply(const RatVector& x) const
{
    if (x.size() != entries_.size())
        throw DimensionError("signed permutation applied to a vector of the wrong dimension");
    RatVector y(x.size());
    for (std::size_t k = 0; k < entries_.size(); ++k)
        y[k] = entries_[k].sign < 0 ? -x[entries_[k].source] : x[entries_[k].source];
    return y;
}

Simplex apply_rational_similarity(const Simplex& s, const Rational& scale,
                                  const SignedPermutation& perm, const RatVector& shift)
{
    if (scale.sign() <= 0)
        throw std::invalid_argument("similarity scale must be positive");
    if (shift.size() != s.ambient_dim())
        throw DimensionError("similarity shift has the wrong dimension");
    std::vector<RatPoint> image;
    image.reserve(s.vertices().size());
    for (const auto& v : s.vertices())
        image.push_back(scale * perm.apply(v) + shift);
    return Simplex(std::move(image));
}

} // namespace simplexcert
