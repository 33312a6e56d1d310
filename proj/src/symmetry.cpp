#include "fiedler/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "fiedler/resistance.hpp"
#include "fiedler/spectral.hpp"

namespace fiedler {

namespace {

struct AdjacencyView {
    int n;
    std::vector<std::vector<char>> adjacent;
    std::vector<std::vector<double>> weight;
    std::vector<int> degree;
};

AdjacencyView build_view(const WeightedGraph& g) {
    AdjacencyView view;
    view.n = g.vertex_count();
    view.adjacent.assign(view.n, std::vector<char>(view.n, 0));
    view.weight.assign(view.n, std::vector<double>(view.n, 0.0));
    view.degree.assign(view.n, 0);
    for (const Edge& e : g.edges()) {
        view.adjacent[e.u][e.v] = view.adjacent[e.v][e.u] = 1;
        view.weight[e.u][e.v] = view.weight[e.v][e.u] = e.weight;
        ++view.degree[e.u];
        ++view.degree[e.v];
    }
    return view;
}

bool weights_match(double a, double b) {
    return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

void search(const AdjacencyView& view, bool ignore_weights, std::vector<int>& image,
            std::vector<char>& used, int v, std::vector<std::vector<int>>& found) {
    const int n = view.n;
    if (v == n) {
        found.push_back(image);
        return;
    }
    for (int target = 0; target < n; ++target) {
        if (used[target] || view.degree[target] != view.degree[v]) continue;
        bool ok = true;
        for (int prev = 0; prev < v && ok; ++prev) {
            if (view.adjacent[v][prev] != view.adjacent[image[prev]][target]) ok = false;
            else if (!ignore_weights && view.adjacent[v][prev] &&
                     !weights_match(view.weight[v][prev], view.weight[image[prev]][target]))
                ok = false;
        }
        if (!ok) continue;
        image[v] = target;
        used[target] = 1;
        search(view, ignore_weights, image, used, v + 1, found);
        used[target] = 0;
    }
}

}  // namespace

void AutomorphismGroup::verify_axioms() const {
    const int order_count = order();
    if (order_count == 0) throw std::logic_error("automorphism group: empty");
    const std::size_t n = permutations.front().size();

    std::set<std::vector<int>> members(permutations.begin(), permutations.end());
    std::vector<int> identity(n);
    for (std::size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);
    if (!members.contains(identity)) throw std::logic_error("automorphism group: missing identity");

    for (const std::vector<int>& sigma : permutations) {
        std::vector<int> inverse(n);
        for (std::size_t i = 0; i < n; ++i) inverse[sigma[i]] = static_cast<int>(i);
        if (!members.contains(inverse))
            throw std::logic_error("automorphism group: not closed under inverse");
        for (const std::vector<int>& tau : permutations) {
            std::vector<int> comp(n);
            for (std::size_t i = 0; i < n; ++i) comp[i] = sigma[tau[i]];
            if (!members.contains(comp))
                throw std::logic_error("automorphism group: not closed under composition");
        }
    }
}

AutomorphismGroup automorphisms(const WeightedGraph& g, bool ignore_weights) {
    const int n = g.vertex_count();
    if (n > 10) throw std::invalid_argument("automorphisms: n > 10 (factorial guard)");

    const AdjacencyView view = build_view(g);
    AutomorphismGroup group;
    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    search(view, ignore_weights, image, used, 0, group.permutations);

    // Edge orbits under the induced action.
    std::map<std::pair<int, int>, int> edge_index;
    const std::vector<Edge>& edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k)
        edge_index[{edges[k].u, edges[k].v}] = static_cast<int>(k);

    std::vector<int> orbit_of(edges.size(), -1);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (orbit_of[k] >= 0) continue;
        const int orbit_id = static_cast<int>(group.edge_orbits.size());
        std::vector<int> orbit;
        std::vector<std::size_t> frontier{k};
        orbit_of[k] = orbit_id;
        while (!frontier.empty()) {
            const std::size_t cur = frontier.back();
            frontier.pop_back();
            orbit.push_back(static_cast<int>(cur));
            for (const std::vector<int>& sigma : group.permutations) {
                int a = sigma[edges[cur].u], b = sigma[edges[cur].v];
                if (a > b) std::swap(a, b);
                const int img = edge_index.at({a, b});
                if (orbit_of[img] < 0) {
                    orbit_of[img] = orbit_id;
                    frontier.push_back(static_cast<std::size_t>(img));
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        group.edge_orbits.push_back(std::move(orbit));
    }

    if (group.order() <= 2000) group.verify_axioms();
    return group;
}

WeightedGraph orbit_average(const WeightedGraph& g, const AutomorphismGroup& group) {
    std::vector<double> averaged = g.weights();
    for (const std::vector<int>& orbit : group.edge_orbits) {
        double mean = 0.0;
        for (int e : orbit) mean += averaged[e];
        mean /= static_cast<double>(orbit.size());
        for (int e : orbit) averaged[e] = mean;
    }

    const double target = resistance_profile(g).total;
    const double current = resistance_profile(g.with_weights(averaged)).total;
    const double scale = current / target;
    for (double& w : averaged) w *= scale;
    return g.with_weights(averaged);
}

ConjectureVerdict check_conjecture(const WeightedGraph& g, const OptimizationResult& result,
                                   double tolerance) {
    if (result.weights.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("check_conjecture: result does not match graph");

    const AutomorphismGroup group = automorphisms(g, /*ignore_weights=*/true);
    const WeightedGraph optimal = g.with_weights(result.weights);

    double spread = 0.0;
    for (const std::vector<int>& orbit : group.edge_orbits) {
        double lo = result.weights[orbit.front()], hi = lo, mean = 0.0;
        for (int e : orbit) {
            lo = std::min(lo, result.weights[e]);
            hi = std::max(hi, result.weights[e]);
            mean += result.weights[e];
        }
        mean /= static_cast<double>(orbit.size());
        spread = std::max(spread, (hi - lo) / mean);
    }

    const WeightedGraph averaged = orbit_average(optimal, group);
    const double lambda2_avg = eigendecompose(laplacian(averaged)).eigenvalues[1];

    return ConjectureVerdict{spread <= tolerance, spread, lambda2_avg};
}

}  // namespace fiedler
