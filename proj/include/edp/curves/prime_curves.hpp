#pragma once

#include <optional>
#include <random>
#include <vector>

#include "edp/algebra/fp.hpp"
#include "edp/curves/edwards.hpp"
#include "edp/curves/weierstrass.hpp"

namespace edp {

using FpCurve = EdwardsCurve<Fp>;
using FpPoint = EdwardsPoint<Fp>;
using FpWCurve = WeierstrassCurve<Fp>;
using FpWPoint = WeierstrassPoint<Fp>;

// Validates p (prime, > 3) and the curve coefficients.
FpCurve make_curve(const Int& a, const Int& d, const Int& p);

// ad is a non-square. The x-only formulas never divide by zero on such
// curves; the full addition law needs has_complete_addition().
bool is_complete(const FpCurve& curve);

// a is a square and d is not, so 1 +- d*x1*x2*y1*y2 never vanishes.
bool has_complete_addition(const FpCurve& curve);

// Weierstrass points with no affine Edwards image that are defined over F_p:
// ((5d-a)/12, +-s(d-a)/4) when d = s^2 and ((-(a+d) +- 6t)/12, 0) when ad = t^2.
std::vector<FpWPoint> exceptional_points(const FpCurve& curve);

// Random curve with a, d uniform among valid pairs.
FpCurve random_curve(const FieldPtr& field, std::mt19937_64& rng);
FpCurve random_complete_curve(const FieldPtr& field, std::mt19937_64& rng);

// A point with the given y, choosing the root of x^2 by `negative_x`.
std::optional<FpPoint> point_with_y(const FpCurve& curve, const Fp& y, bool negative_x);

// Uniform y until a point exists; the sign of x is random.
FpPoint random_point(const FpCurve& curve, std::mt19937_64& rng);

// Every affine point, ordered by (y, x) value.
std::vector<FpPoint> enumerate_points(const FpCurve& curve);

// Every point including infinity.
std::vector<FpWPoint> enumerate_points(const FpWCurve& curve);

}  // namespace edp
