#include "fiedler/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

namespace fiedler {

namespace {

bool traversal_covers_all(int n, const std::vector<Edge>& edges) {
    if (n <= 0) return false;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

}  // namespace

WeightedGraph::WeightedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 2) throw std::invalid_argument("graph: vertex count must be at least 2");
    std::set<std::pair<int, int>> seen;
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw std::invalid_argument("graph: vertex index out of range");
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
        if (!seen.insert({e.u, e.v}).second) throw std::invalid_argument("graph: duplicate edge");
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("graph: edge weight must be positive and finite");
    }
    connected_ = traversal_covers_all(n_, edges_);
}

std::vector<double> WeightedGraph::weights() const {
    std::vector<double> w;
    w.reserve(edges_.size());
    for (const Edge& e : edges_) w.push_back(e.weight);
    return w;
}

WeightedGraph WeightedGraph::with_weights(const std::vector<double>& weights) const {
    if (weights.size() != edges_.size())
        throw std::invalid_argument("with_weights: expected one weight per edge");
    std::vector<Edge> e = edges_;
    for (std::size_t k = 0; k < e.size(); ++k) e[k].weight = weights[k];
    return WeightedGraph(n_, std::move(e));
}

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream fields(line.substr(start));
        std::string tag;
        fields >> tag;
        if (tag == "n") {
            if (n >= 0) throw ParseError(line_no, "repeated 'n' record");
            long count = 0;
            if (!(fields >> count)) throw ParseError(line_no, "malformed 'n' record");
            std::string rest;
            if (fields >> rest) throw ParseError(line_no, "trailing tokens after 'n' record");
            if (count < 2) throw ParseError(line_no, "vertex count must be at least 2");
            n = static_cast<int>(count);
        } else if (tag == "e") {
            if (n < 0) throw ParseError(line_no, "'e' record before 'n' record");
            long i = 0, j = 0;
            if (!(fields >> i >> j)) throw ParseError(line_no, "malformed 'e' record");
            double w = 1.0;
            std::string wtok;
            if (fields >> wtok) {
                std::size_t pos = 0;
                try {
                    w = std::stod(wtok, &pos);
                } catch (const std::exception&) {
                    throw ParseError(line_no, "malformed weight '" + wtok + "'");
                }
                if (pos != wtok.size()) throw ParseError(line_no, "malformed weight '" + wtok + "'");
                std::string rest;
                if (fields >> rest) throw ParseError(line_no, "trailing tokens after 'e' record");
            }
            if (i < 1 || i > n || j < 1 || j > n)
                throw ParseError(line_no, "vertex index out of range [1, " + std::to_string(n) + "]");
            if (i == j) throw ParseError(line_no, "self-loop");
            int u = static_cast<int>(std::min(i, j)) - 1;
            int v = static_cast<int>(std::max(i, j)) - 1;
            if (!seen.insert({u, v}).second) throw ParseError(line_no, "duplicate edge");
            if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line_no, "non-positive weight");
            edges.push_back({u, v, w});
        } else {
            throw ParseError(line_no, "unknown record '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing 'n' record");
    return WeightedGraph(n, std::move(edges));
}

std::string format_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    char buf[40];
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof(buf), "%.17g", e.weight);
        out << "e " << (e.u + 1) << " " << (e.v + 1) << " " << buf << "\n";
    }
    return out.str();
}

WeightedGraph path_graph(int vertex_count, const std::vector<double>& weights) {
    if (vertex_count < 2) throw std::invalid_argument("path_graph: need at least 2 vertices");
    if (static_cast<int>(weights.size()) != vertex_count - 1)
        throw std::invalid_argument("path_graph: expected n-1 weights");
    std::vector<Edge> edges;
    edges.reserve(weights.size());
    for (int i = 0; i + 1 < vertex_count; ++i) edges.push_back({i, i + 1, weights[i]});
    return WeightedGraph(vertex_count, std::move(edges));
}

Matrix laplacian(const WeightedGraph& g) {
    Matrix lap(g.vertex_count());
    for (const Edge& e : g.edges()) {
        lap(e.u, e.u) += e.weight;
        lap(e.v, e.v) += e.weight;
        lap(e.u, e.v) -= e.weight;
        lap(e.v, e.u) -= e.weight;
    }
    return lap;
}

bool is_connected(const WeightedGraph& g) { return g.connected(); }

bool is_path(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (g.edge_count() != n - 1) return false;
    std::vector<char> present(n - 1, 0);
    for (const Edge& e : g.edges()) {
        if (e.v != e.u + 1) return false;
        present[e.u] = 1;
    }
    return std::all_of(present.begin(), present.end(), [](char c) { return c != 0; });
}

std::vector<double> path_weights(const WeightedGraph& g) {
    if (!is_path(g)) throw std::invalid_argument("path_weights: graph is not a path");
    std::vector<double> c(g.vertex_count() - 1, 0.0);
    for (const Edge& e : g.edges()) c[e.u] = e.weight;
    return c;
}

}  // namespace fiedler
