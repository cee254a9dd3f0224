#pragma once

#include "thicksat/drawing.hpp"
#include "thicksat/saturation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thicksat {

/// Chords (a,b) and (c,d) on n circularly ordered points cross in any convex
/// placement iff exactly one of c, d lies strictly inside the circular
/// interval (a, b). Endpoints must be distinct.
bool interleaves(int n, int a, int b, int c, int d);

/// Convex drawings reduced to combinatorics: n points on a circle, edges as
/// index pairs. Hull pairs never cross anything.
struct CircularDrawing {
    int n = 0;
    std::vector<Edge> chords;
};

struct EnumerationCaps {
    int free_cap = 8;
    int precolored_cap = 9;
};

/// Default caps, honoring the THICKSAT_CAP environment override.
EnumerationCaps default_caps();

struct EnumerationResult {
    int n = 0;
    int k = 0;
    SaturationMode mode = SaturationMode::Free;
    long min_edges = 0;
    long max_edges = 0;
    CircularDrawing witness_min;
    CircularDrawing witness_max;
    std::vector<int> witness_min_colors;  // aligned with witness chords (precolored)
    std::vector<int> witness_max_colors;
    long saturated_count = 0;  // saturated configurations examined
};

/// Exhaustive min/max edge counts over all saturated configurations for n
/// points in convex position. Refuses n beyond the cap instead of silently
/// truncating.
EnumerationResult enumerate_saturated(int n, int k, SaturationMode mode,
                                      const EnumerationCaps& caps = default_caps());

enum class BoundKind {
    Prop2Upper,           // no convex drawing exceeds n + k(n-3)
    Thm5PrecoloredLower,  // saturated precolored >= ceil(k(n-2k+1)/(2k-3)) + n
    K3PrecoloredLower,    // k = 3 precolored >= ceil(5n/2) - 6
    K3FreeLower,          // k = 3 free >= ceil(7n/2) - 8
    Cor6Exact,            // k = 2: saturated count is exactly 3n - 6
};

struct BoundReport {
    BoundKind kind;
    bool pass = false;
    long bound_value = 0;
    EnumerationResult enumeration;
    std::string detail;
};

BoundReport verify_bound(int n, int k, BoundKind kind, const EnumerationCaps& caps = default_caps());

std::string bound_name(BoundKind kind);

}  // namespace thicksat
