#include "thicksat/drawing.hpp"

#include <algorithm>
#include <stdexcept>

namespace thicksat {

Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("make_edge: self-loop");
    if (u < 0 || v < 0) throw std::invalid_argument("make_edge: negative vertex index");
    if (u > v) std::swap(u, v);
    return Edge{u, v};
}

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

bool Drawing::has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Drawing make_drawing(std::vector<Point> vertices, std::vector<Edge> edges, int k) {
    if (k < 1) throw std::invalid_argument("make_drawing: k must be positive");
    const int n = static_cast<int>(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                throw std::invalid_argument("make_drawing: duplicate points at indices " +
                                            std::to_string(i) + " and " + std::to_string(j));
    for (auto& e : edges) {
        e = make_edge(e.u, e.v);
        if (e.v >= n)
            throw std::invalid_argument("make_drawing: edge " + edge_text(e) + " out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Drawing{std::move(vertices), std::move(edges), k};
}

Drawing with_edge(const Drawing& drawing, const Edge& e) {
    if (drawing.has_edge(e)) throw std::invalid_argument("with_edge: edge already present");
    Drawing out = drawing;
    out.edges.insert(std::upper_bound(out.edges.begin(), out.edges.end(), e), e);
    return out;
}

int Coloring::color(const Edge& e) const {
    const auto it = color_of.find(e);
    if (it == color_of.end()) throw std::invalid_argument("coloring: no color for " + edge_text(e));
    return it->second;
}

std::vector<std::string> ValidationReport::lines() const {
    std::vector<std::string> out;
    for (const auto& t : collinear_triples)
        out.push_back("collinear vertices " + std::to_string(t[0]) + ", " + std::to_string(t[1]) +
                      ", " + std::to_string(t[2]));
    for (const auto& c : crossings)
        out.push_back("monochromatic crossing " + edge_text(c.e) + " x " + edge_text(c.f) +
                      " in color " + std::to_string(c.color));
    for (const auto& d : out_of_range)
        out.push_back("edge " + edge_text(d.e) + " has color " + std::to_string(d.color) +
                      " outside 1..k");
    for (const auto& e : uncolored) out.push_back("edge " + edge_text(e) + " has no color");
    for (const auto& e : unknown_colored)
        out.push_back("color given for unknown edge " + edge_text(e));
    for (const auto& s : structural) out.push_back(s);
    return out;
}

ValidationReport validate(const Drawing& drawing, const Coloring& coloring) {
    ValidationReport report;
    const auto& pts = drawing.vertices;
    const int n = drawing.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                if (orientation(pts[i], pts[j], pts[l]) == Orientation::Collinear)
                    report.collinear_triples.push_back({i, j, l});

    for (const auto& e : drawing.edges)
        if (!coloring.has(e)) report.uncolored.push_back(e);
    for (const auto& [e, c] : coloring.color_of) {
        if (!drawing.has_edge(e)) {
            report.unknown_colored.push_back(e);
            continue;
        }
        if (c < 1 || c > drawing.k) report.out_of_range.push_back({e, c});
    }

    const auto& edges = drawing.edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!coloring.has(edges[i])) continue;
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (!coloring.has(edges[j])) continue;
            const int c = coloring.color(edges[i]);
            if (c != coloring.color(edges[j])) continue;
            if (segments_cross(drawing.segment_of(edges[i]), drawing.segment_of(edges[j])))
                report.crossings.push_back({edges[i], edges[j], c});
        }
    }

    // Consistency: a defect-free convex thickness-k drawing can never exceed
    // n + k(n-3) edges.
    if (report.ok() && n >= 3 && is_convex(drawing)) {
        const long bound = static_cast<long>(n) + static_cast<long>(drawing.k) * (n - 3);
        if (static_cast<long>(drawing.edges.size()) > bound)
            report.structural.push_back("convex edge count exceeds n + k(n-3)");
    }
    return report;
}

ConflictGraph conflict_graph(const Drawing& drawing) {
    ConflictGraph graph;
    graph.nodes = drawing.edges;
    graph.adjacency.assign(graph.nodes.size(), {});
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < graph.nodes.size(); ++j) {
            if (segments_cross(drawing.segment_of(graph.nodes[i]),
                               drawing.segment_of(graph.nodes[j]))) {
                graph.adjacency[i].push_back(static_cast<int>(j));
                graph.adjacency[j].push_back(static_cast<int>(i));
                graph.crossing_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return graph;
}

int OuterCycle::present_count() const {
    int count = 0;
    for (const bool p : present) count += p ? 1 : 0;
    return count;
}

OuterCycle outer_cycle(const Drawing& drawing) {
    if (drawing.n() < 3) throw std::invalid_argument("outer_cycle: need at least 3 vertices");
    OuterCycle cycle;
    for (const std::size_t i : convex_hull(drawing.vertices))
        cycle.order.push_back(static_cast<int>(i));
    const int m = cycle.size();
    cycle.present.resize(m);
    for (int i = 0; i < m; ++i)
        cycle.present[i] = drawing.has_edge(make_edge(cycle.order[i], cycle.order[(i + 1) % m]));
    return cycle;
}

bool is_convex(const Drawing& drawing) {
    if (drawing.n() < 3) return true;
    return convex_hull(drawing.vertices).size() == drawing.vertices.size();
}

}  // namespace thicksat
