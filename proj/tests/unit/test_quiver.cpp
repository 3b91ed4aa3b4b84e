#include <doctest.h>

#include <algorithm>

#include "friezelab/errors.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/quiver.hpp"
#include "support.hpp"

using namespace friezelab;

namespace {

Quiver arrows(int n, std::vector<Arrow> a) { return Quiver::from_arrows(n, a); }

// Upper triangle read column by column after renaming v -> perm[v-1].
std::vector<int> relabeled_key(const Quiver& q, const std::vector<int>& perm) {
    const int n = q.size();
    ExchangeMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) c(perm[i] - 1, perm[j] - 1) = q.matrix()(i, j);
    }
    std::vector<int> key;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) key.push_back(c(i, j));
    }
    return key;
}

std::vector<int> brute_force_best_key(const Quiver& q) {
    std::vector<int> perm(static_cast<std::size_t>(q.size()));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<int> best = relabeled_key(q, perm);
    while (std::next_permutation(perm.begin(), perm.end())) best = std::max(best, relabeled_key(q, perm));
    return best;
}

std::vector<int> identity_key(const Quiver& q) {
    std::vector<int> perm(static_cast<std::size_t>(q.size()));
    std::iota(perm.begin(), perm.end(), 1);
    return relabeled_key(q, perm);
}

}  // namespace

TEST_SUITE("quiver") {

TEST_CASE("worked four-vertex mutation at vertex 1") {
    const Quiver q = arrows(4, {{1, 2, 1}, {1, 3, 1}, {2, 4, 1}, {3, 4, 1}, {4, 1, 1}});
    const Quiver expected = arrows(4, {{2, 1, 1}, {3, 1, 1}, {1, 4, 1}});
    CHECK(q.mutate(1) == expected);
    CHECK(q.mutate(1).mutate(1) == q);
}

TEST_CASE("source mutation of A2 reverses the arrow") {
    CHECK(arrows(2, {{1, 2, 1}}).mutate(1) == arrows(2, {{2, 1, 1}}));
    CHECK_THROWS_AS(arrows(2, {{1, 2, 1}}).mutate(3), InvalidInput);
}

TEST_CASE("construction rejects loops, 2-cycles and asymmetric matrices") {
    CHECK_THROWS_AS(arrows(2, {{1, 1, 1}}), InvalidInput);
    CHECK_THROWS_AS(arrows(2, {{1, 2, 1}, {2, 1, 1}}), InvalidInput);
    ExchangeMatrix b(2, 2);
    b << 0, 1, 1, 0;
    CHECK_THROWS_AS(Quiver{b}, InvalidInput);
}

TEST_CASE("three-step mutation agrees with the matrix rule and is an involution") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> size(1, 7);
    for (int trial = 0; trial < 1000; ++trial) {
        const Quiver q = testing::random_quiver(rng, size(rng));
        const int k = std::uniform_int_distribution<int>(1, q.size())(rng);
        REQUIRE(q.mutate(k).matrix() == mutate_matrix(q.matrix(), k - 1));
        REQUIRE(q.mutate(k).mutate(k) == q);
    }
}

TEST_CASE("matrix rule is generic in the scalar") {
    Eigen::Matrix<long long, 3, 3> b;
    b << 0, 1, 0, -1, 0, 1, 0, -1, 0;
    const auto m = mutate_matrix(b, 1);
    CHECK(m(0, 2) == 1);
    CHECK(m(0, 1) == -1);
}

TEST_CASE("canonical form examples") {
    const CanonicalForm c = canonical_form(arrows(2, {{2, 1, 1}}));
    CHECK(c.quiver == arrows(2, {{1, 2, 1}}));
    CHECK(c.permutation == Permutation{2, 1});

    const Quiver path = arrows(3, {{1, 2, 1}, {2, 3, 1}});
    CHECK(canonical_form(path).quiver == path);
    CHECK(identity_key(path) == brute_force_best_key(path));

    // Reversed A3 is a relabeling of the path; a sink in the middle is not.
    const Quiver reversed = arrows(3, {{2, 1, 1}, {3, 2, 1}});
    CHECK(canonical_form(reversed).quiver == canonical_form(path).quiver);
    const Quiver middle_sink = path.mutate(3);
    CHECK(canonical_form(middle_sink).quiver == canonical_form(arrows(3, {{2, 1, 1}, {3, 1, 1}})).quiver);
    CHECK_FALSE(canonical_form(middle_sink).quiver == canonical_form(path).quiver);
}

TEST_CASE("canonical form matches brute force over all permutations") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> size(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const Quiver q = testing::random_quiver(rng, size(rng), trial % 2 == 0 ? 1 : 2);
        const CanonicalForm c = canonical_form(q);
        REQUIRE(q.relabel(c.permutation) == c.quiver);
        REQUIRE(identity_key(c.quiver) == brute_force_best_key(q));
    }
}

TEST_CASE("canonical form limit") {
    CHECK_THROWS_AS(canonical_form(Quiver(11)), LimitExceeded);
    CHECK_NOTHROW(canonical_form(dynkin(DynkinFamily::A, 10)));
}

TEST_CASE("mutation commutes with relabeling") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(2, 6)(rng);
        const Quiver q = testing::random_quiver(rng, n);
        Permutation pi(static_cast<std::size_t>(n));
        std::iota(pi.begin(), pi.end(), 1);
        std::shuffle(pi.begin(), pi.end(), rng);
        const int k = std::uniform_int_distribution<int>(1, n)(rng);
        REQUIRE(canonical_form(q.mutate(k)).quiver ==
                canonical_form(q.relabel(pi).mutate(pi[static_cast<std::size_t>(k - 1)])).quiver);
    }
}

TEST_CASE("Dynkin constructors") {
    CHECK(dynkin(DynkinFamily::A, 2, {Orientation::Forward}) == arrows(2, {{1, 2, 1}}));
    using enum Orientation;
    const Quiver a6 = dynkin(DynkinFamily::A, 6, {Forward, Backward, Forward, Forward, Forward});
    CHECK(a6 == arrows(6, {{1, 2, 1}, {3, 2, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}}));
    CHECK(a6 == bolt_to_quiver(LightningBolt::parse("9:RLRRR")));

    const Quiver star = dynkin(DynkinFamily::D, 4, {Forward, Backward, Backward});
    CHECK(star == arrows(4, {{1, 2, 1}, {3, 2, 1}, {4, 2, 1}}));
    CHECK(sinks_sources(star).first == std::vector<int>{2});

    CHECK_THROWS_AS(dynkin(DynkinFamily::D, 3), InvalidInput);
    CHECK_THROWS_AS(dynkin(DynkinFamily::E, 9), InvalidInput);
    CHECK_THROWS_AS(dynkin(DynkinFamily::A, 0), InvalidInput);
    CHECK(parse_dynkin_type("E7") == std::pair{DynkinFamily::E, 7});
    CHECK_THROWS_AS(parse_dynkin_type("F4"), InvalidInput);
}

TEST_CASE("Dynkin type recognition") {
    CHECK(dynkin_type_of(dynkin(DynkinFamily::A, 5)) == "A5");
    CHECK(dynkin_type_of(dynkin(DynkinFamily::D, 5)) == "D5");
    CHECK(dynkin_type_of(dynkin(DynkinFamily::E, 8)) == "E8");
    CHECK(dynkin_type_of(arrows(4, {{1, 2, 1}})) == "A1+A1+A2");
    CHECK_FALSE(dynkin_type_of(arrows(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}})).has_value());
    CHECK_FALSE(dynkin_type_of(arrows(2, {{1, 2, 2}})).has_value());
}

TEST_CASE("finite type detection") {
    const FiniteTypeResult a2 = is_finite_type(arrows(2, {{1, 2, 1}}));
    CHECK(a2.finite);
    CHECK(a2.type == "A2");

    const FiniteTypeResult kronecker = is_finite_type(arrows(2, {{1, 2, 2}}));
    CHECK_FALSE(kronecker.finite);
    CHECK(kronecker.witness.max_multiplicity() >= 2);

    const Quiver cycle = arrows(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}});
    const FiniteTypeResult c = is_finite_type(cycle);
    REQUIRE(c.finite);
    CHECK(c.type == "A3");
    Quiver walked = cycle;
    for (int k : c.path) walked = walked.mutate(k);
    CHECK(walked == c.witness);

    // Markov quiver: mutation-infinite but every mutation keeps double arrows.
    const FiniteTypeResult markov = is_finite_type(arrows(3, {{1, 2, 2}, {2, 3, 2}, {3, 1, 2}}));
    CHECK_FALSE(markov.finite);

    // Affine A2 (acyclic triangle) reaches a double arrow after one mutation.
    const FiniteTypeResult affine = is_finite_type(arrows(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}));
    CHECK_FALSE(affine.finite);
    Quiver w = arrows(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
    for (int k : affine.path) w = w.mutate(k);
    CHECK(w.max_multiplicity() >= 2);
}

TEST_CASE("sinks and sources") {
    CHECK(sinks_sources(arrows(2, {{1, 2, 1}})) == std::pair{std::vector<int>{2}, std::vector<int>{1}});
    const auto cyc = sinks_sources(arrows(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}));
    CHECK(cyc.first.empty());
    CHECK(cyc.second.empty());
    const auto a6 = sinks_sources(bolt_to_quiver(LightningBolt::parse("9:RLRRR")));
    CHECK(std::find(a6.second.begin(), a6.second.end(), 3) != a6.second.end());
}

TEST_CASE("sink and source mutations keep acyclic quivers acyclic") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const Quiver q = testing::random_acyclic_quiver(rng, std::uniform_int_distribution<int>(1, 6)(rng));
        REQUIRE(is_acyclic(q));
        const auto [sinks, sources] = sinks_sources(q);
        for (int k : sinks) REQUIRE(is_acyclic(q.mutate(k)));
        for (int k : sources) REQUIRE(is_acyclic(q.mutate(k)));
    }
    CHECK_FALSE(is_acyclic(arrows(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}})));
}

}
