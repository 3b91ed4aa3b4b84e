#include "friezelab/seed.hpp"

#include <functional>

#include "friezelab/errors.hpp"

namespace friezelab {

Seed initial_seed(const Quiver& q) {
    Seed s{q, {}};
    const auto n = static_cast<std::size_t>(q.size());
    for (std::size_t i = 1; i <= n; ++i) s.vars.push_back(LaurentPoly::variable(n, i));
    return s;
}

void validate_seed(const Seed& s) {
    const auto n = static_cast<std::size_t>(s.quiver.size());
    if (s.vars.size() != n) throw InvalidInput("seed must carry one variable per vertex");
    for (const auto& v : s.vars) {
        if (v.nvars() != n) throw InvalidInput("seed variables must live in n variables");
        if (v.is_zero()) throw InvalidInput("cluster variables are nonzero");
    }
}

LaurentPoly exchange_binomial(const Seed& s, int k) {
    const int n = s.quiver.size();
    if (k < 1 || k > n) throw InvalidInput("mutation vertex out of range");
    const auto nvars = static_cast<std::size_t>(n);
    LaurentPoly out_product = LaurentPoly::constant(nvars, BigInt(1));
    LaurentPoly in_product = LaurentPoly::constant(nvars, BigInt(1));
    for (int j = 1; j <= n; ++j) {
        const int m = s.quiver.arrows(k, j);
        const auto& f = s.vars[static_cast<std::size_t>(j - 1)];
        if (m > 0) out_product = out_product * pow(f, static_cast<unsigned>(m));
        if (m < 0) in_product = in_product * pow(f, static_cast<unsigned>(-m));
    }
    return out_product + in_product;
}

Seed mutate_seed(const Seed& s, int k) {
    validate_seed(s);
    Seed out{s.quiver.mutate(k), s.vars};
    try {
        out.vars[static_cast<std::size_t>(k - 1)] =
            div_exact(exchange_binomial(s, k), s.vars[static_cast<std::size_t>(k - 1)]);
    } catch (const NotDivisible& e) {
        throw LaurentViolation("exchange relation at vertex " + std::to_string(k) +
                               " is not a Laurent polynomial: " + e.what());
    }
    return out;
}

Seed mutate_seed(Seed s, const std::vector<int>& word) {
    for (int k : word) s = mutate_seed(s, k);
    return s;
}

bool seeds_isomorphic(const Seed& s, const Seed& t) {
    const int n = s.quiver.size();
    if (t.quiver.size() != n || s.vars.size() != t.vars.size()) return false;

    // Candidate images per vertex by variable equality, then backtrack.
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (s.vars[static_cast<std::size_t>(i)] == t.vars[static_cast<std::size_t>(j)]) {
                candidates[static_cast<std::size_t>(i)].push_back(j);
            }
        }
        if (candidates[static_cast<std::size_t>(i)].empty()) return false;
    }

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    std::vector<bool> taken(static_cast<std::size_t>(n), false);
    std::function<bool(int)> assign = [&](int i) {
        if (i == n) return true;
        for (int j : candidates[static_cast<std::size_t>(i)]) {
            if (taken[static_cast<std::size_t>(j)]) continue;
            bool consistent = true;
            for (int prev = 0; prev < i && consistent; ++prev) {
                const int pj = image[static_cast<std::size_t>(prev)];
                consistent = s.quiver.matrix()(prev, i) == t.quiver.matrix()(pj, j);
            }
            if (!consistent) continue;
            image[static_cast<std::size_t>(i)] = j;
            taken[static_cast<std::size_t>(j)] = true;
            if (assign(i + 1)) return true;
            taken[static_cast<std::size_t>(j)] = false;
        }
        return false;
    };
    return assign(0);
}

}  // namespace friezelab
