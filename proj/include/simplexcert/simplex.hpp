#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simplexcert/rat_vector.hpp"

namespace simplexcert {

// Regular n-simplex: n+1 pairwise-equidistant, affinely independent vertices
// in n+1 ambient coordinates. Immutable after construction.
class Simplex {
public:
    // Validates shape, regularity and affine independence; throws
    // GeometryError (or DimensionError for ragged input) otherwise.
    explicit Simplex(std::vector<RatPoint> vertices);

    std::size_t dim() const { return vertices_.size() - 1; }
    std::size_t ambient_dim() const { return vertices_.front().size(); }
    const std::vector<RatPoint>& vertices() const { return vertices_; }
    const RatPoint& vertex(std::size_t i) const { return vertices_.at(i); }
    Rational edge_sq_length() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;

private:
    struct Trusted {};
    Simplex(Trusted, std::vector<RatPoint> vertices) : vertices_(std::move(vertices)) {}
    friend Simplex standard_simplex(std::size_t n);

    std::vector<RatPoint> vertices_;
};

// The n+1 standard basis points of R^(n+1); every edge has squared length 2.
Simplex standard_simplex(std::size_t n);

bool is_regular(std::span<const RatPoint> vertices);
bool affinely_independent(std::span<const RatPoint> vertices);

// Coordinate-wise mean. Throws std::invalid_argument on empty input.
RatPoint centroid(std::span<const RatPoint> points);

// Vertices of the hyperface opposite `omit`, in original order.
std::vector<RatPoint> face(const Simplex& s, std::size_t omit);

// Foot of the altitude from vertex v: the centroid of the opposite face.
RatPoint altitude_foot(const Simplex& s, std::size_t v);

struct AltitudeRecord {
    std::size_t vertex = 0;
    RatPoint foot;
    Rational sq_length;
    // Orthogonal projection of the vertex onto the face hull equals the face centroid.
    bool foot_is_face_centroid = false;
    // vertex - foot is orthogonal to every edge of the opposite face.
    bool perpendicular = false;
    // The simplex centroid lies on the altitude line.
    bool passes_centroid = false;
    // ... strictly between the vertex and the foot.
    bool internal = false;

    bool ok() const { return foot_is_face_centroid && perpendicular && passes_centroid && internal; }

    friend bool operator==(const AltitudeRecord&, const AltitudeRecord&) = default;
};

struct AltitudeCheck {
    std::size_t dim = 0;
    RatPoint common_point;
    std::vector<AltitudeRecord> records;
    bool congruent = false;
    bool affinely_independent = false;

    bool ok() const;

    friend bool operator==(const AltitudeCheck&, const AltitudeCheck&) = default;
};

// Certifies, per instance, that the altitudes are congruent, meet at the
// centroid strictly inside the simplex, and land on the face centroids.
// Failures are reported, never thrown. Requires dim >= 1.
AltitudeCheck verify_altitude_properties(const Simplex& s);

// |AO|^2 / |OH|^2 for A = vertex v, O = centroid, H = altitude foot. The
// simplex is well-built iff this is n^2. Throws GeometryError if O is not
// strictly between A and H.
Rational well_built_ratio(const Simplex& s, std::size_t v);

// Cosine of the dihedral angle along the ridge that omits vertices i and j.
// Throws GeometryError if the ridge spokes are not orthogonal to the ridge
// or not of equal length.
Rational dihedral_cosine(const Simplex& s, std::size_t i, std::size_t j);
Rational dihedral_cosine(std::size_t n);

// Cosine of the angle at the centroid between the spokes to vertices i and j.
Rational central_angle_cosine(const Simplex& s, std::size_t i, std::size_t j);
Rational central_angle_cosine(std::size_t n);

struct SignedIndex {
    std::size_t source = 0;
    int sign = 1;
};

// Coordinate map y[k] = sign_k * x[source_k]; a bijection on indices.
class SignedPermutation {
public:
    // Throws std::invalid_argument when not a bijection or a sign is not +-1.
    explicit SignedPermutation(std::vector<SignedIndex> entries);
    static SignedPermutation identity(std::size_t dim);

    std::size_t size() const { return entries_.size(); }
    RatVector apply(const RatVector& x) const;

private:
    std::vector<SignedIndex> entries_;
};

// x -> scale * perm(x) + shift applied to every vertex.
Simplex apply_rational_similarity(const Simplex& s, const Rational& scale,
                                  const SignedPermutation& perm, const RatVector& shift);

} // namespace simplexcert
