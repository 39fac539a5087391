#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplexcert/errors.hpp"
#include "simplexcert/rational.hpp"

namespace simplexcert {

// Fixed-length sequence of exact rationals. Used both for points and for
// displacement vectors; the length is the ambient dimension.
class RatVector {
public:
    RatVector() = default;
    explicit RatVector(std::size_t dim) : coords_(dim) {}
    RatVector(std::initializer_list<Rational> coords) : coords_(coords) {}
    explicit RatVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    // Standard basis vector e_index (0-based) in `dim` coordinates.
    static RatVector basis(std::size_t dim, std::size_t index);

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    bool is_zero() const;

    RatVector& operator+=(const RatVector& rhs);
    RatVector& operator-=(const RatVector& rhs);
    RatVector& operator*=(const Rational& scale);

    friend RatVector operator+(RatVector lhs, const RatVector& rhs) { return lhs += rhs; }
    friend RatVector operator-(RatVector lhs, const RatVector& rhs) { return lhs -= rhs; }
    friend RatVector operator*(const Rational& scale, RatVector v) { return v *= scale; }
    friend RatVector operator*(RatVector v, const Rational& scale) { return v *= scale; }
    friend RatVector operator-(RatVector v) { return v *= Rational(-1); }

    friend bool operator==(const RatVector&, const RatVector&) = default;

    // "(1/6, 1/3, 1/3, 1/6)"
    std::string str() const;

private:
    std::vector<Rational> coords_;
};

using RatPoint = RatVector;

enum class Sign { negative, zero, positive };

std::string_view to_string(Sign sign);
Sign sign_of(const Rational& value);

// Exact angle representation: squared cosine plus the sign of the cosine.
// Two angles in [0, pi] are equal iff their witnesses are equal.
struct CosineWitness {
    Rational cos_sq;
    Sign sign = Sign::zero;

    bool is_right_angle() const { return sign == Sign::zero; }
    // The cosine itself, when cos_sq is a rational square.
    std::optional<Rational> exact_cosine() const;

    friend bool operator==(const CosineWitness&, const CosineWitness&) = default;
};

Rational dot(const RatVector& u, const RatVector& v);
Rational sq_norm(const RatVector& v);
Rational sq_dist(const RatPoint& p, const RatPoint& q);

// Throws DegenerateAngleError when either vector is zero.
CosineWitness cosine_witness(const RatVector& u, const RatVector& v);

// Dimension of the linear span, by exact Gaussian elimination.
std::size_t rank(std::span<const RatVector> vectors);
bool rank_le(std::span<const RatVector> vectors, std::size_t k);

// Solves the square system `matrix * x = rhs` exactly. Empty when singular.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> matrix,
                                                  std::vector<Rational> rhs);

// Parameter t with p = from + t (to - from), if p lies on that line.
// Throws GeometryError when from == to.
std::optional<Rational> line_parameter(const RatPoint& from, const RatPoint& to, const RatPoint& p);

bool collinear(const RatPoint& p, const RatPoint& q, const RatPoint& r);

// p lies on the open segment (from, to).
bool strictly_between(const RatPoint& from, const RatPoint& to, const RatPoint& p);

// Orthogonal projection of `point` onto the affine hull of `hull`
// (which must be affinely independent). Exact Gram-system solve.
RatPoint orthogonal_projection(const RatPoint& point, std::span<const RatPoint> hull);

} // namespace simplexcert
