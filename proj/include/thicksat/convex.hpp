#pragma once

#include "thicksat/drawing.hpp"

#include <optional>
#include <vector>

namespace thicksat {

/// Chord set that, together with the outer cycle, forms an outerplane graph
/// whose weak dual is a path of quadrilateral faces with end faces of size 3
/// or 4. Chords are kept in dual-path order.
struct NiceMatching {
    int n = 0;
    std::vector<Edge> chords;
};

bool is_nice_matching(const NiceMatching& m);

/// Inner faces of the outer cycle on n vertices plus pairwise non-crossing
/// chords; each face is a vertex list in ascending circular order.
std::vector<std::vector<int>> outerplane_faces(int n, const std::vector<Edge>& chords);

struct AngulationCount {
    long inner_edges = 0;
    bool exact = true;  // false when (n - ell) is not divisible by (ell - 2)
};

/// Inner edge count (n - ell) / (ell - 2) of an inner ell-angulation.
AngulationCount inner_angulation_inner_edges(long n, long ell);

/// The parallel-chords matching {(i, n-i) : 1 <= i <= (n-2)/2} on vertices
/// 0..n-1.
NiceMatching canonical_nice_matching(int n);

enum class TiltSide { Left, Right };

/// The nice matching formed by one consistent choice of missing diagonal in
/// each face. tilt(tilt(m, Left), Right) == m and vice versa.
NiceMatching tilt(const NiceMatching& m, TiltSide side);

struct ZigzagResult {
    Drawing drawing;
    Coloring coloring;
};

/// The layered saturated construction on a convex n-gon: color 1 holds
/// M1 and its left tilt, colors 2..k-1 hold successive right tilts, and
/// color k holds the last matching and its right tilt. The outer cycle is
/// present with color 1. Requires n >= 5 and 2 <= k <= n/2.
ZigzagResult build_zigzag(int n, int k);

/// For each color class plus the full outer cycle (as an outerplane graph on
/// the hull order), the maximum inner face size. Convex drawings only.
std::vector<int> check_face_sizes(const Drawing& drawing, const Coloring& coloring, int k);

struct BoundsTable {
    int n = 0;
    int k = 0;
    long max_convex = 0;                            // n + k(n-3)
    std::optional<long> precolored_min_upper;       // floor((k+4)(n-2)/2), n >= 5, 2k <= n
    std::optional<long> precolored_min_lower;       // ceil(k(n-2k+1)/(2k-3)) + n, n >= 2k-1
    std::optional<long> k3_precolored_lower;        // ceil(5n/2) - 6, k = 3
    std::optional<long> k3_free_lower;              // ceil(7n/2) - 8, k = 3
};

BoundsTable bounds(int n, int k);

/// n distinct rational points on the unit circle approximating a regular
/// n-gon, in counterclockwise order. Points on a common circle are
/// automatically in convex and general position.
std::vector<Point> convex_polygon_points(int n);

}  // namespace thicksat
