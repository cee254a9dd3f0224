#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thicksat {

// All geometric decisions in this toolkit are made over exact rationals.
// mpq_class keeps values canonical (gcd 1, positive denominator) as long as
// construction sites canonicalize, which the helpers below do.
using Integer = mpz_class;
using Rational = mpq_class;

Rational rational(long numerator, long denominator = 1);

/// Parses "123", "-4", or "p/q". Returns nullopt on malformed text or a zero
/// denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_text(const Rational& value);

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& other) const { return x == other.x && y == other.y; }
    bool operator!=(const Point& other) const { return !(*this == other); }
};

/// Lexicographic (x, then y) order; used for sorting and deduplication.
bool lex_less(const Point& a, const Point& b);

struct Segment {
    Point a;
    Point b;
};

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

/// Sign of the cross product of (q - p) and (r - p), computed exactly.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// True iff some point lies in the interior of both segments. Endpoint
/// contact is not a crossing; collinear overlap of positive length is.
bool segments_cross(const Segment& s, const Segment& t);

/// True iff the point lies on the closed segment.
bool point_on_segment(const Point& p, const Segment& s);

/// Indices of the hull vertices in counterclockwise circular order, starting
/// at the lexicographically smallest point. Requires >= 3 points; interior
/// points are strict with the general-position precondition.
std::vector<std::size_t> convex_hull(const std::vector<Point>& points);

/// True iff no three points are collinear (duplicates therefore fail too).
bool general_position(const std::vector<Point>& points);

}  // namespace thicksat
