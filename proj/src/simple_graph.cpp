#include <kcr/simple_graph.hpp>

#include <algorithm>
#include <string>

namespace kcr {

std::pair<int, int> SimpleGraph::key(int u, int v) const {
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ValidationError("edge endpoint out of range");
    if (v < u) std::swap(u, v);
    return {u, v};
}

void SimpleGraph::add_edge(int u, int v) { edges_[key(u, v)] = std::nullopt; }

void SimpleGraph::add_edge(int u, int v, double weight) { edges_[key(u, v)] = weight; }

bool SimpleGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (v < u) std::swap(u, v);
    return edges_.count({u, v}) != 0;
}

double SimpleGraph::weight(int u, int v) const {
    if (v < u) std::swap(u, v);
    const auto it = edges_.find({u, v});
    if (it == edges_.end())
        throw ValidationError("no edge " + std::to_string(u) + "," + std::to_string(v));
    return it->second.value_or(1.0);
}

bool SimpleGraph::weighted() const {
    for (const auto& [k, w] : edges_)
        if (w.has_value()) return true;
    return false;
}

double SimpleGraph::max_weight() const {
    double m = 0.0;
    for (const auto& [k, w] : edges_)
        if (w.has_value()) m = std::max(m, *w);
    return m;
}

}  // namespace kcr
