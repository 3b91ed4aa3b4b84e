#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "friezelab/errors.hpp"
#include "friezelab/seed.hpp"

namespace friezelab {

/// Mutation of node `from` at `vertex` (1-based, in from's labeling) gives a
/// seed isomorphic to node `to`.
struct ExchangeEdge {
    std::size_t from;
    int vertex;
    std::size_t to;
    friend bool operator==(const ExchangeEdge&, const ExchangeEdge&) = default;
};

/// Seeds reachable from the initial seed, one representative per isomorphism
/// class, in breadth-first discovery order.
struct ExchangeGraph {
    Quiver initial;
    std::vector<Seed> nodes;
    /// Sorted by (from, vertex); a complete graph has exactly n edges per node.
    std::vector<ExchangeEdge> edges;
    /// Every variable occurring in a node, sorted and deduplicated.
    std::vector<LaurentPoly> variables;
    bool complete = false;

    /// Unordered node pairs joined by some mutation, each listed once with first < second.
    std::vector<std::pair<std::size_t, std::size_t>> undirected_edges() const;
};

class BudgetExceeded : public DomainError {
public:
    BudgetExceeded(const std::string& detail, ExchangeGraph partial)
        : DomainError("budget_exceeded", detail), partial_(std::move(partial)) {}

    const ExchangeGraph& partial() const noexcept { return partial_; }

private:
    ExchangeGraph partial_;
};

/// Breadth-first exploration of the exchange graph. Throws BudgetExceeded,
/// carrying the partial graph, once more than `budget` seeds would be needed.
ExchangeGraph enumerate(const Quiver& q, std::size_t budget);

/// All cluster variables of a finite-type quiver. Throws NotFiniteType otherwise.
std::vector<LaurentPoly> cluster_variables(const Quiver& q);

/// Graphviz rendering of the undirected exchange graph.
std::string to_dot(const ExchangeGraph& g);

}  // namespace friezelab
