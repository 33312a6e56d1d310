#pragma once

#include <vector>

#include "fiedler/graph.hpp"
#include "fiedler/optimize.hpp"

namespace fiedler {

/// All adjacency-preserving vertex permutations of a graph, with the induced
/// partition of the edge set into orbits. Guarded to n <= 10.
struct AutomorphismGroup {
    std::vector<std::vector<int>> permutations;  // sigma[v] = image of v
    std::vector<std::vector<int>> edge_orbits;   // partition of edge indices

    int order() const { return static_cast<int>(permutations.size()); }

    /// Identity membership and closure under composition/inverse, checked
    /// exhaustively. Throws std::logic_error on violation.
    void verify_axioms() const;
};

/// Verdict of the automorphism-invariance check on an optimizer result.
struct ConjectureVerdict {
    bool invariant;                  // max_orbit_spread <= tolerance
    double max_orbit_spread;         // largest relative weight spread within an orbit
    double lambda2_after_averaging;  // lambda2 once weights are orbit-averaged
                                     // and rescaled to the same total resistance
};

/// Enumerates automorphisms by backtracking with degree pruning. When
/// ignore_weights is true (the conjecture's setting) only adjacency must be
/// preserved; otherwise edge weights must match to relative 1e-12 as well.
/// Throws when n > 10.
AutomorphismGroup automorphisms(const WeightedGraph& g, bool ignore_weights = true);

/// Replaces each edge weight by the arithmetic mean over its orbit, then
/// rescales so the total effective resistance matches the input's.
WeightedGraph orbit_average(const WeightedGraph& g, const AutomorphismGroup& group);

/// Orbit spread of the optimal weights and lambda2 after orbit averaging.
/// `tolerance` is the relative spread below which the weights count as
/// automorphism-invariant.
ConjectureVerdict check_conjecture(const WeightedGraph& g, const OptimizationResult& result,
                                   double tolerance = 1e-5);

}  // namespace fiedler
