#pragma once

#include "thicksat/geom.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace thicksat {

/// Unordered vertex pair stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    bool operator==(const Edge& other) const { return u == other.u && v == other.v; }
    bool operator!=(const Edge& other) const { return !(*this == other); }
    bool operator<(const Edge& other) const {
        return u != other.u ? u < other.u : v < other.v;
    }
};

/// Normalizes endpoint order; rejects self-loops and negative indices.
Edge make_edge(int u, int v);

std::string edge_text(const Edge& e);

/// Straight-line drawing: vertex coordinates, a simple edge set (kept sorted),
/// and the thickness budget k. Structural sanity (index ranges, duplicate
/// points, simplicity) is enforced at construction; geometric requirements
/// such as general position are reported by validate() so that defective
/// inputs can be diagnosed rather than rejected wholesale.
struct Drawing {
    std::vector<Point> vertices;
    std::vector<Edge> edges;
    int k = 1;

    int n() const { return static_cast<int>(vertices.size()); }
    bool has_edge(const Edge& e) const;
    Segment segment_of(const Edge& e) const { return {vertices[e.u], vertices[e.v]}; }
};

Drawing make_drawing(std::vector<Point> vertices, std::vector<Edge> edges, int k);

/// Returns a copy of the drawing with one more edge.
Drawing with_edge(const Drawing& drawing, const Edge& e);

/// Edge coloring with colors 1..k, kept separate from the drawing so one
/// geometry can carry several candidate colorings.
struct Coloring {
    std::map<Edge, int> color_of;

    int color(const Edge& e) const;
    bool has(const Edge& e) const { return color_of.count(e) != 0; }
    void set(const Edge& e, int color) { color_of[e] = color; }
};

struct ValidationReport {
    struct MonochromaticCrossing {
        Edge e;
        Edge f;
        int color = 0;
    };
    struct ColorDefect {
        Edge e;
        int color = 0;
    };

    std::vector<std::array<int, 3>> collinear_triples;
    std::vector<MonochromaticCrossing> crossings;
    std::vector<ColorDefect> out_of_range;
    std::vector<Edge> uncolored;
    std::vector<Edge> unknown_colored;
    std::vector<std::string> structural;

    bool ok() const {
        return collinear_triples.empty() && crossings.empty() && out_of_range.empty() &&
               uncolored.empty() && unknown_colored.empty() && structural.empty();
    }
    std::vector<std::string> lines() const;
};

/// Lists every defect that keeps (drawing, coloring) from being a valid
/// thickness-k drawing: monochromatic crossings, colors outside 1..k,
/// general-position violations, and coloring totality defects.
ValidationReport validate(const Drawing& drawing, const Coloring& coloring);

/// Graph on the drawing's edges whose adjacencies are geometric crossings.
struct ConflictGraph {
    std::vector<Edge> nodes;
    std::vector<std::vector<int>> adjacency;
    std::vector<std::pair<int, int>> crossing_pairs;
};

ConflictGraph conflict_graph(const Drawing& drawing);

struct OuterCycle {
    std::vector<int> order;     // hull vertices, counterclockwise
    std::vector<bool> present;  // present[i]: edge (order[i], order[i+1 mod m]) exists

    int size() const { return static_cast<int>(order.size()); }
    int present_count() const;
};

OuterCycle outer_cycle(const Drawing& drawing);

/// True iff every vertex lies on the convex hull.
bool is_convex(const Drawing& drawing);

}  // namespace thicksat
