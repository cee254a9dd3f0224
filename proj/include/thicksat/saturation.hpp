#pragma once

#include "thicksat/drawing.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace thicksat {

enum class SaturationMode { Precolored, Free };

/// Node limit for the exact coloring search.
struct SearchBudget {
    long max_nodes = 4'000'000;
};

enum class Ternary { False, True, Inconclusive };

/// Raised when a free-mode decision ran out of budget; never conflated with
/// "not saturated".
class InconclusiveError : public std::runtime_error {
  public:
    explicit InconclusiveError(const std::string& what) : std::runtime_error(what) {}
};

enum class ColorSearchStatus { Colorable, NotColorable, Inconclusive };

struct ColorSearchResult {
    ColorSearchStatus status = ColorSearchStatus::Inconclusive;
    std::vector<int> colors;  // per node, 1..k; meaningful when Colorable
    long nodes_visited = 0;
};

/// Exact k-colorability of an abstract conflict graph: DSATUR-ordered
/// backtracking, solved per connected component, with the first vertex of
/// each component pinned to color 1 and new colors introduced in order.
ColorSearchResult color_conflict_graph(const std::vector<std::vector<int>>& adjacency, int k,
                                       const SearchBudget& budget = {});

/// Colors i in 1..k such that the segment uv crosses no edge of color i.
/// Precondition: uv is absent and (drawing, coloring) validates.
std::set<int> addable_colors_precolored(const Drawing& drawing, const Coloring& coloring,
                                        const Edge& uv);

struct KColorableResult {
    ColorSearchStatus status = ColorSearchStatus::Inconclusive;
    std::optional<Coloring> coloring;
    long nodes_visited = 0;
};

/// A validating k-coloring of the drawing's edges if one exists.
KColorableResult k_colorable(const Drawing& drawing, int k, const SearchBudget& budget = {});

/// Precolored: no absent pair admits any color. Free: for every absent pair,
/// the drawing plus that edge is not k-colorable. Budget exhaustion in free
/// mode yields Inconclusive.
Ternary is_saturated(const Drawing& drawing, const std::optional<Coloring>& coloring, int k,
                     SaturationMode mode, const SearchBudget& budget = {});

struct SaturationOutcome {
    Drawing drawing;
    Coloring coloring;
    long edges_added = 0;
};

/// Adds candidate edges in order while the drawing stays a thickness-k
/// drawing (smallest admissible color in precolored mode, a fresh witness
/// coloring in free mode). Both admissibility notions are monotone under
/// edge insertion, so one pass saturates.
SaturationOutcome greedy_saturate(const Drawing& drawing, const std::optional<Coloring>& coloring,
                                  int k, SaturationMode mode, const SearchBudget& budget = {},
                                  const std::vector<Edge>* candidate_order = nullptr);

/// For a 2-colored drawing (blue = 1, red = 2): grows the blue class into a
/// maximal plane straight-line graph on the point set by adding blue edges
/// and recoloring red edges that cross no blue edge. The result has exactly
/// 3n - 3 - n' blue edges (n' hull vertices).
SaturationOutcome complete_blue_triangulation(const Drawing& drawing, const Coloring& coloring);

inline constexpr int kBlue = 1;
inline constexpr int kRed = 2;

/// All vertex pairs absent from the drawing, lexicographically.
std::vector<Edge> missing_pairs(const Drawing& drawing);

}  // namespace thicksat
