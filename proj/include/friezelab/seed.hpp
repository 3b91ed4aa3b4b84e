#pragma once

#include <vector>

#include "friezelab/laurent.hpp"
#include "friezelab/quiver.hpp"

namespace friezelab {

/// A cluster quiver together with one cluster variable per vertex.
struct Seed {
    Quiver quiver;
    std::vector<LaurentPoly> vars;

    friend bool operator==(const Seed&, const Seed&) = default;
};

/// (q, {x1, ..., xn}).
Seed initial_seed(const Quiver& q);

/// Throws InvalidInput when vars and quiver disagree in size or variable count.
void validate_seed(const Seed& s);

/// The binomial right-hand side of the exchange relation at k:
/// prod_{k->j} vars[j]^{b_kj} + prod_{l->k} vars[l]^{b_lk}.
LaurentPoly exchange_binomial(const Seed& s, int k);

/// Seed mutation at vertex k (1-based). A failed exact division would contradict
/// the Laurent phenomenon and is reported as LaurentViolation.
Seed mutate_seed(const Seed& s, int k);

/// Applies a word of mutations left to right.
Seed mutate_seed(Seed s, const std::vector<int>& word);

/// True iff a vertex permutation carries s.quiver to t.quiver and s.vars to t.vars.
bool seeds_isomorphic(const Seed& s, const Seed& t);

}  // namespace friezelab
