#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace friezelab {

using ExchangeMatrix = Eigen::MatrixXi;

/// Matrix mutation rule on a skew-symmetric exchange matrix (0-based k):
/// b'[i][j] = -b[i][j] if k in {i,j}, else b[i][j] + sign(b[i][k]) * max(b[i][k] * b[k][j], 0).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
mutate_matrix(const Eigen::MatrixBase<Derived>& b, Eigen::Index k) {
    using Scalar = typename Derived::Scalar;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out = b;
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
                continue;
            }
            const Scalar bik = b(i, k);
            const Scalar prod = bik * b(k, j);
            if (prod > Scalar(0)) out(i, j) += (bik > Scalar(0) ? prod : Scalar(-prod));
        }
    }
    return out;
}

/// A permutation of 1..n stored as image[old-1] = new.
using Permutation = std::vector<int>;

/// An arrow i -> j with multiplicity (1-based vertex labels).
struct Arrow {
    int tail;
    int head;
    int multiplicity;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A cluster quiver: no loops, no 2-cycles, stored as its signed adjacency
/// matrix b, where b(i,j) > 0 counts arrows i -> j. Vertices are 1..n.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int n);
    /// Validates skew-symmetry.
    explicit Quiver(ExchangeMatrix b);

    static Quiver from_arrows(int n, const std::vector<Arrow>& arrows);

    int size() const noexcept { return static_cast<int>(b_.rows()); }
    const ExchangeMatrix& matrix() const noexcept { return b_; }
    /// Signed arrow count from i to j (1-based).
    int arrows(int i, int j) const { return b_(i - 1, j - 1); }

    /// Arrows i -> j with positive multiplicity, sorted by (tail, head).
    std::vector<Arrow> arrow_list() const;
    /// Largest |b(i,j)|.
    int max_multiplicity() const;

    /// Three-step mutation at vertex k (1-based).
    Quiver mutate(int k) const;
    /// The quiver with vertex v renamed perm[v-1].
    Quiver relabel(const Permutation& perm) const;

    friend bool operator==(const Quiver& a, const Quiver& b) { return a.b_ == b.b_; }

private:
    ExchangeMatrix b_;
};

/// Upper bound on vertex count accepted by canonical_form.
inline constexpr int kCanonicalFormLimit = 10;

struct CanonicalForm {
    Quiver quiver;
    /// relabel(input, permutation) == quiver.
    Permutation permutation;
};

/// Canonical representative of the relabeling class: the matrix whose
/// strict upper triangle, read column by column (b(1,2), b(1,3), b(2,3), b(1,4), ...),
/// is lexicographically greatest. Throws LimitExceeded above `limit` vertices.
CanonicalForm canonical_form(const Quiver& q, int limit = kCanonicalFormLimit);

enum class DynkinFamily { A, D, E };

enum class Orientation { Forward, Backward };

/// Edges of the Dynkin tree in their fixed listing order (1-based, i < j for A and paths).
std::vector<std::pair<int, int>> dynkin_edges(DynkinFamily family, int rank);

/// An orientation of a simply-laced Dynkin diagram. `orientation[e]` refers to
/// the e-th edge of dynkin_edges (Forward: first -> second). Missing entries
/// default to Forward.
Quiver dynkin(DynkinFamily family, int rank, const std::vector<Orientation>& orientation = {});

/// Parses "A6", "D4", "E8".
std::pair<DynkinFamily, int> parse_dynkin_type(const std::string& label);

/// If the underlying graph of q is a forest of Dynkin trees with simple arrows,
/// returns its type (components joined by '+', e.g. "A2", "A1+A3"), else nullopt.
std::optional<std::string> dynkin_type_of(const Quiver& q);

struct FiniteTypeResult {
    bool finite = false;
    /// Dynkin type reached, when finite.
    std::string type;
    /// Mutation sequence (1-based) from q to `witness`. When finite, witness is
    /// a Dynkin orientation; otherwise it carries a multiple arrow.
    std::vector<int> path;
    Quiver witness;
    /// Number of relabeling classes visited.
    std::size_t classes_visited = 0;
};

/// Breadth-first search of the mutation class up to relabeling.
FiniteTypeResult is_finite_type(const Quiver& q);

/// Vertices without outgoing arrows and vertices without incoming arrows.
std::pair<std::vector<int>, std::vector<int>> sinks_sources(const Quiver& q);

bool is_acyclic(const Quiver& q);

}  // namespace friezelab
