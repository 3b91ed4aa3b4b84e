#include "friezelab/exchange.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace friezelab {

namespace {

constexpr std::size_t kFiniteTypeBudget = 2'000'000;

std::vector<LaurentPoly> sorted_vars(const Seed& s) {
    std::vector<LaurentPoly> vars = s.vars;
    std::sort(vars.begin(), vars.end());
    return vars;
}

void collect_variables(ExchangeGraph& g) {
    std::set<LaurentPoly> all;
    for (const auto& node : g.nodes) all.insert(node.vars.begin(), node.vars.end());
    g.variables.assign(all.begin(), all.end());
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> ExchangeGraph::undirected_edges() const {
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : edges) pairs.emplace(std::min(e.from, e.to), std::max(e.from, e.to));
    return {pairs.begin(), pairs.end()};
}

ExchangeGraph enumerate(const Quiver& q, std::size_t budget) {
    if (budget < 1) throw InvalidInput("budget must be at least 1");
    ExchangeGraph g;
    g.initial = q;
    g.nodes.push_back(initial_seed(q));

    // Bucket by the sorted variable list; confirm with the full isomorphism test.
    std::map<std::vector<LaurentPoly>, std::vector<std::size_t>> buckets;
    buckets[sorted_vars(g.nodes.front())].push_back(0);

    const int n = q.size();
    for (std::size_t idx = 0; idx < g.nodes.size(); ++idx) {
        for (int k = 1; k <= n; ++k) {
            Seed next = mutate_seed(g.nodes[idx], k);
            auto& bucket = buckets[sorted_vars(next)];
            std::size_t target = g.nodes.size();
            for (std::size_t candidate : bucket) {
                if (seeds_isomorphic(next, g.nodes[candidate])) {
                    target = candidate;
                    break;
                }
            }
            if (target == g.nodes.size()) {
                if (g.nodes.size() >= budget) {
                    collect_variables(g);
                    std::ostringstream os;
                    os << "exchange graph has more than " << budget << " seeds";
                    throw BudgetExceeded(os.str(), std::move(g));
                }
                bucket.push_back(target);
                g.nodes.push_back(std::move(next));
            }
            g.edges.push_back({idx, k, target});
        }
    }
    g.complete = true;
    collect_variables(g);
    return g;
}

std::vector<LaurentPoly> cluster_variables(const Quiver& q) {
    const FiniteTypeResult ft = is_finite_type(q);
    if (!ft.finite) throw NotFiniteType("quiver is not mutation-equivalent to a Dynkin quiver");
    return enumerate(q, kFiniteTypeBudget).variables;
}

std::string to_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "graph exchange {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  s" << i << " [label=\"";
        for (std::size_t v = 0; v < g.nodes[i].vars.size(); ++v) {
            if (v > 0) os << "\\n";
            os << g.nodes[i].vars[v].to_string();
        }
        os << "\"];\n";
    }
    std::set<std::pair<std::size_t, std::size_t>> drawn;
    for (const auto& e : g.edges) {
        const auto key = std::make_pair(std::min(e.from, e.to), std::max(e.from, e.to));
        if (!drawn.insert(key).second) continue;
        os << "  s" << key.first << " -- s" << key.second << " [label=\"" << e.vertex << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace friezelab
