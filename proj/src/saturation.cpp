#include "thicksat/saturation.hpp"

#include <algorithm>
#include <stdexcept>

namespace thicksat {

namespace {

enum class Step { Failed, Solved, OutOfBudget };

struct DsaturState {
    const std::vector<std::vector<int>>& adjacency;
    int k;
    long max_nodes;
    long nodes_visited = 0;
    std::vector<int> colors;
};

int saturation_degree(const DsaturState& state, int v) {
    bool seen[64] = {};
    int count = 0;
    for (const int w : state.adjacency[v]) {
        const int c = state.colors[w];
        if (c > 0 && !seen[c]) {
            seen[c] = true;
            ++count;
        }
    }
    return count;
}

Step color_component(DsaturState& state, const std::vector<int>& component, int colored,
                     int max_used) {
    if (colored == static_cast<int>(component.size())) return Step::Solved;

    int best = -1, best_sat = -1, best_deg = -1;
    for (const int v : component) {
        if (state.colors[v] != 0) continue;
        const int sat = saturation_degree(state, v);
        const int deg = static_cast<int>(state.adjacency[v].size());
        if (sat > best_sat || (sat == best_sat && deg > best_deg) ||
            (sat == best_sat && deg == best_deg && (best == -1 || v < best))) {
            best = v;
            best_sat = sat;
            best_deg = deg;
        }
    }

    // New colors are tried in increasing order only; color classes are
    // interchangeable within a component.
    const int limit = std::min(state.k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool blocked = false;
        for (const int w : state.adjacency[best]) {
            if (state.colors[w] == c) {
                blocked = true;
                break;
            }
        }
        if (blocked) continue;
        if (++state.nodes_visited > state.max_nodes) return Step::OutOfBudget;
        state.colors[best] = c;
        const Step step = color_component(state, component, colored + 1, std::max(max_used, c));
        if (step != Step::Failed) return step;
        state.colors[best] = 0;
    }
    return Step::Failed;
}

}  // namespace

ColorSearchResult color_conflict_graph(const std::vector<std::vector<int>>& adjacency, int k,
                                       const SearchBudget& budget) {
    if (k < 1) throw std::invalid_argument("color_conflict_graph: k must be positive");
    if (k > 63) throw std::invalid_argument("color_conflict_graph: k too large");
    const int n = static_cast<int>(adjacency.size());
    DsaturState state{adjacency, k, budget.max_nodes};
    state.colors.assign(n, 0);

    std::vector<int> component_of(n, -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (component_of[start] != -1) continue;
        std::vector<int> queue{start};
        component_of[start] = components;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (const int w : adjacency[queue[head]])
                if (component_of[w] == -1) {
                    component_of[w] = components;
                    queue.push_back(w);
                }
        ++components;
    }

    for (int c = 0; c < components; ++c) {
        std::vector<int> component;
        for (int v = 0; v < n; ++v)
            if (component_of[v] == c) component.push_back(v);
        const Step step = color_component(state, component, 0, 0);
        if (step == Step::OutOfBudget)
            return {ColorSearchStatus::Inconclusive, {}, state.nodes_visited};
        if (step == Step::Failed)
            return {ColorSearchStatus::NotColorable, {}, state.nodes_visited};
    }
    return {ColorSearchStatus::Colorable, state.colors, state.nodes_visited};
}

namespace {

std::set<int> addable_colors_raw(const Drawing& drawing, const Coloring& coloring,
                                 const Edge& uv) {
    const Segment candidate = drawing.segment_of(uv);
    std::vector<bool> blocked(drawing.k + 1, false);
    for (const auto& e : drawing.edges) {
        const int c = coloring.color(e);
        if (blocked[c]) continue;
        if (segments_cross(candidate, drawing.segment_of(e))) blocked[c] = true;
    }
    std::set<int> colors;
    for (int c = 1; c <= drawing.k; ++c)
        if (!blocked[c]) colors.insert(c);
    return colors;
}

void require_valid(const Drawing& drawing, const Coloring& coloring, const char* where) {
    if (!validate(drawing, coloring).ok())
        throw std::invalid_argument(std::string(where) + ": input does not validate");
}

}  // namespace

std::set<int> addable_colors_precolored(const Drawing& drawing, const Coloring& coloring,
                                        const Edge& uv) {
    if (drawing.has_edge(uv))
        throw std::invalid_argument("addable_colors_precolored: edge already present");
    require_valid(drawing, coloring, "addable_colors_precolored");
    return addable_colors_raw(drawing, coloring, uv);
}

KColorableResult k_colorable(const Drawing& drawing, int k, const SearchBudget& budget) {
    const ConflictGraph graph = conflict_graph(drawing);
    const ColorSearchResult found = color_conflict_graph(graph.adjacency, k, budget);
    KColorableResult result;
    result.status = found.status;
    result.nodes_visited = found.nodes_visited;
    if (found.status == ColorSearchStatus::Colorable) {
        Coloring coloring;
        for (std::size_t i = 0; i < graph.nodes.size(); ++i)
            coloring.set(graph.nodes[i], found.colors[i]);
        result.coloring = std::move(coloring);
    }
    return result;
}

std::vector<Edge> missing_pairs(const Drawing& drawing) {
    std::vector<Edge> out;
    for (int u = 0; u < drawing.n(); ++u)
        for (int v = u + 1; v < drawing.n(); ++v) {
            const Edge e{u, v};
            if (!drawing.has_edge(e)) out.push_back(e);
        }
    return out;
}

Ternary is_saturated(const Drawing& drawing, const std::optional<Coloring>& coloring, int k,
                     SaturationMode mode, const SearchBudget& budget) {
    if (mode == SaturationMode::Precolored) {
        if (!coloring) throw std::invalid_argument("is_saturated: precolored mode needs a coloring");
        require_valid(drawing, *coloring, "is_saturated");
        for (const auto& uv : missing_pairs(drawing))
            if (!addable_colors_raw(drawing, *coloring, uv).empty()) return Ternary::False;
        return Ternary::True;
    }

    const KColorableResult base = k_colorable(drawing, k, budget);
    if (base.status == ColorSearchStatus::Inconclusive) return Ternary::Inconclusive;
    if (base.status == ColorSearchStatus::NotColorable)
        throw std::invalid_argument("is_saturated: drawing is not a thickness-k drawing");
    for (const auto& uv : missing_pairs(drawing)) {
        const KColorableResult extended = k_colorable(with_edge(drawing, uv), k, budget);
        if (extended.status == ColorSearchStatus::Inconclusive) return Ternary::Inconclusive;
        if (extended.status == ColorSearchStatus::Colorable) return Ternary::False;
    }
    return Ternary::True;
}

SaturationOutcome greedy_saturate(const Drawing& drawing, const std::optional<Coloring>& coloring,
                                  int k, SaturationMode mode, const SearchBudget& budget,
                                  const std::vector<Edge>* candidate_order) {
    Drawing current = drawing;
    current.k = k;
    std::vector<Edge> candidates = candidate_order ? *candidate_order : missing_pairs(drawing);
    SaturationOutcome outcome{current, {}, 0};

    if (mode == SaturationMode::Precolored) {
        if (!coloring)
            throw std::invalid_argument("greedy_saturate: precolored mode needs a coloring");
        require_valid(current, *coloring, "greedy_saturate");
        outcome.coloring = *coloring;
        for (const auto& uv : candidates) {
            if (outcome.drawing.has_edge(uv)) continue;
            const std::set<int> colors = addable_colors_raw(outcome.drawing, outcome.coloring, uv);
            if (colors.empty()) continue;
            outcome.drawing = with_edge(outcome.drawing, uv);
            outcome.coloring.set(uv, *colors.begin());
            ++outcome.edges_added;
        }
        return outcome;
    }

    if (coloring) {
        require_valid(current, *coloring, "greedy_saturate");
        outcome.coloring = *coloring;
    } else {
        const KColorableResult base = k_colorable(current, k, budget);
        if (base.status == ColorSearchStatus::Inconclusive)
            throw InconclusiveError("greedy_saturate: budget exhausted on input certificate");
        if (base.status == ColorSearchStatus::NotColorable)
            throw std::invalid_argument("greedy_saturate: input is not a thickness-k drawing");
        outcome.coloring = *base.coloring;
    }
    for (const auto& uv : candidates) {
        if (outcome.drawing.has_edge(uv)) continue;
        const Drawing extended = with_edge(outcome.drawing, uv);
        const KColorableResult found = k_colorable(extended, k, budget);
        if (found.status == ColorSearchStatus::Inconclusive)
            throw InconclusiveError("greedy_saturate: budget exhausted at candidate " +
                                    edge_text(uv));
        if (found.status == ColorSearchStatus::NotColorable) continue;
        outcome.drawing = extended;
        outcome.coloring = *found.coloring;
        ++outcome.edges_added;
    }
    return outcome;
}

SaturationOutcome complete_blue_triangulation(const Drawing& drawing, const Coloring& coloring) {
    if (drawing.k != 2)
        throw std::invalid_argument("complete_blue_triangulation: requires k = 2");
    if (drawing.n() < 3)
        throw std::invalid_argument("complete_blue_triangulation: need at least 3 vertices");
    require_valid(drawing, coloring, "complete_blue_triangulation");

    SaturationOutcome outcome{drawing, coloring, 0};
    std::vector<Edge> blue;
    for (const auto& e : outcome.drawing.edges)
        if (outcome.coloring.color(e) == kBlue) blue.push_back(e);

    auto crosses_blue = [&](const Segment& s) {
        for (const auto& b : blue)
            if (segments_cross(s, outcome.drawing.segment_of(b))) return true;
        return false;
    };

    // Scan all candidate segments repeatedly until the blue class is maximal
    // plane; red edges that cross no blue edge are recolored.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u = 0; u < outcome.drawing.n(); ++u) {
            for (int v = u + 1; v < outcome.drawing.n(); ++v) {
                const Edge e{u, v};
                const Segment s = outcome.drawing.segment_of(e);
                if (outcome.drawing.has_edge(e)) {
                    if (outcome.coloring.color(e) == kRed && !crosses_blue(s)) {
                        outcome.coloring.set(e, kBlue);
                        blue.push_back(e);
                        changed = true;
                    }
                } else if (!crosses_blue(s)) {
                    outcome.drawing = with_edge(outcome.drawing, e);
                    outcome.coloring.set(e, kBlue);
                    blue.push_back(e);
                    ++outcome.edges_added;
                    changed = true;
                }
            }
        }
    }

    const long n = outcome.drawing.n();
    const long hull = static_cast<long>(convex_hull(outcome.drawing.vertices).size());
    if (static_cast<long>(blue.size()) != 3 * n - 3 - hull)
        throw std::logic_error("complete_blue_triangulation: blue class is not a triangulation");
    return outcome;
}

}  // namespace thicksat
