#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "friezelab/laurent.hpp"
#include "friezelab/quiver.hpp"

namespace testing {

using friezelab::BigInt;
using friezelab::LaurentPoly;
using friezelab::Quiver;

inline LaurentPoly random_poly(std::mt19937& rng, std::size_t nvars, int max_terms = 4) {
    std::uniform_int_distribution<int> terms(0, max_terms), exp(-2, 2), coeff(-5, 5);
    LaurentPoly p(nvars);
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        friezelab::Exponents e(nvars);
        for (auto& x : e) x = exp(rng);
        p.add_term(e, BigInt(coeff(rng)));
    }
    return p;
}

inline LaurentPoly random_nonzero_poly(std::mt19937& rng, std::size_t nvars) {
    for (;;) {
        LaurentPoly p = random_poly(rng, nvars, 3);
        if (!p.is_zero()) return p;
    }
}

/// Each pair gets an arrow with probability 1/2, multiplicity 1 (80%) or 2 (20%),
/// oriented along a random vertex order, so the quiver is acyclic.
inline Quiver random_acyclic_quiver(std::mt19937& rng, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution present(0.5), doubled(0.2);
    std::vector<friezelab::Arrow> arrows;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!present(rng)) continue;
            arrows.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)], doubled(rng) ? 2 : 1});
        }
    }
    return Quiver::from_arrows(n, arrows);
}

/// True when every connected component of the underlying graph is Dynkin or
/// affine: simple-arrow trees (all of them, for up to 5 vertices), simple-arrow
/// cycles, or a double arrow on two vertices. Mutation growth is then polynomial.
inline bool tame_underlying_graph(const Quiver& q) {
    const int n = q.size();
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (component[static_cast<std::size_t>(start)] >= 0) continue;
        std::vector<int> stack{start};
        component[static_cast<std::size_t>(start)] = components;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (q.matrix()(v, w) != 0 && component[static_cast<std::size_t>(w)] < 0) {
                    component[static_cast<std::size_t>(w)] = components;
                    stack.push_back(w);
                }
            }
        }
        ++components;
    }
    for (int c = 0; c < components; ++c) {
        int vertices = 0, edges = 0, multiple = 0;
        bool all_degree_two = true;
        for (int v = 0; v < n; ++v) {
            if (component[static_cast<std::size_t>(v)] != c) continue;
            ++vertices;
            int degree = 0;
            for (int w = 0; w < n; ++w) {
                const int m = std::abs(q.matrix()(v, w));
                if (m == 0) continue;
                ++degree;
                if (w > v) ++edges;
                if (m > 1) ++multiple;
            }
            all_degree_two = all_degree_two && degree == 2;
        }
        const bool forest = multiple == 0 && edges == vertices - 1 && vertices <= 5;
        const bool cycle = multiple == 0 && edges == vertices && all_degree_two;
        const bool kronecker = vertices == 2 && multiple == 2 && std::abs(q.matrix().maxCoeff()) == 2;
        if (!forest && !cycle && !kronecker) return false;
    }
    return true;
}

/// random_acyclic_quiver conditioned on a tame underlying graph.
inline Quiver random_tame_acyclic_quiver(std::mt19937& rng, int n) {
    for (;;) {
        Quiver q = random_acyclic_quiver(rng, n);
        if (tame_underlying_graph(q)) return q;
    }
}

/// Arbitrary skew-symmetric matrix with entries in [-bound, bound].
inline Quiver random_quiver(std::mt19937& rng, int n, int bound = 2) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    friezelab::ExchangeMatrix b = friezelab::ExchangeMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            b(i, j) = entry(rng);
            b(j, i) = -b(i, j);
        }
    }
    return Quiver(b);
}

}  // namespace testing
