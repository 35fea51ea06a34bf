#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <kcr/errors.hpp>

// Plain undirected graphs on vertices 0..n-1 with optional edge weights.
// Source side of the reductions and input to the graph oracles.

namespace kcr {

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n) {}

    int size() const { return n_; }

    void add_edge(int u, int v);
    void add_edge(int u, int v, double weight);

    bool has_edge(int u, int v) const;
    // Weight of an existing edge; unweighted edges count 1.
    double weight(int u, int v) const;

    const std::map<std::pair<int, int>, std::optional<double>>& edges() const { return edges_; }

    bool weighted() const;
    double max_weight() const;  // 0 when there are no weighted edges

private:
    std::pair<int, int> key(int u, int v) const;

    int n_ = 0;
    std::map<std::pair<int, int>, std::optional<double>> edges_;
};

}  // namespace kcr
