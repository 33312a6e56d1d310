#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fiedler/matrix.hpp"

namespace fiedler {

/// Undirected edge with a strictly positive conductance weight.
/// Endpoints are 0-based and stored with u < v.
struct Edge {
    int u;
    int v;
    double weight;
};

/// Error raised by parse_graph; the message carries the offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Weighted undirected graph with ordered vertices. Immutable after
/// construction; the constructor validates endpoints, rejects self-loops,
/// duplicate edges and non-positive weights, and computes connectivity.
class WeightedGraph {
public:
    WeightedGraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool connected() const { return connected_; }

    std::vector<double> weights() const;

    /// Same topology, new weights (one per edge, in edge order).
    WeightedGraph with_weights(const std::vector<double>& weights) const;

private:
    int n_;
    std::vector<Edge> edges_;
    bool connected_;
};

/// Parses the graph file format:
///   n <count>            exactly once, first non-comment line
///   e <i> <j> [<weight>] one per edge, 1-based endpoints, weight defaults to 1.0
///   # comment line
WeightedGraph parse_graph(const std::string& text);

/// Serializes a graph in the file format; parse_graph(format_graph(g))
/// reproduces g exactly (weights printed with round-trip precision).
std::string format_graph(const WeightedGraph& g);

/// Path v_1 - v_2 - ... - v_n with weights[i] on edge {v_i, v_{i+1}}.
WeightedGraph path_graph(int vertex_count, const std::vector<double>& weights);

/// Weighted Laplacian: diagonal = weighted degree, off-diagonal (i,j) = -w_ij.
Matrix laplacian(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

/// True when the edge set is exactly {{v_i, v_{i+1}}}, i.e. the graph is a
/// path in vertex order.
bool is_path(const WeightedGraph& g);

/// Path edge weights c_1..c_{n-1} in path order. Throws when g is not a path.
std::vector<double> path_weights(const WeightedGraph& g);

}  // namespace fiedler
