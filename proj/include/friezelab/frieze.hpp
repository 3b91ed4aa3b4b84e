#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "friezelab/errors.hpp"
#include "friezelab/exact_linalg.hpp"
#include "friezelab/laurent.hpp"
#include "friezelab/numeric.hpp"
#include "friezelab/polygon.hpp"
#include "friezelab/quiver.hpp"

namespace friezelab {

/// Representative of x modulo N in 1..N.
inline int label_mod(int x, int polygon_size) { return ((x - 1) % polygon_size + polygon_size) % polygon_size + 1; }

/// The polygon diagonal carried by pair coordinate (a, b).
inline Diagonal diagonal_of(int polygon_size, int a, int b) {
    return {label_mod(a, polygon_size), label_mod(b, polygon_size)};
}

/// A frieze of height n in pair coordinates. m(a,b) is defined for
/// 0 <= b-a <= n+3 and depends only on the diagonal {a mod N, b mod N},
/// N = n+3; the entries are held on the N x N grid indexed by those labels.
class Frieze {
public:
    Frieze() = default;

    /// Builds from one value per diagonal and validates positivity and the diamond rule.
    static Frieze from_diagonal_values(int height, const std::map<Diagonal, BigInt>& values);

    int height() const noexcept { return n_; }
    int period() const noexcept { return n_ + 3; }

    /// m(a,b); requires 0 <= b-a <= n+3.
    const BigInt& at(int a, int b) const;

    /// q[i-1] = m(i-1, i+1).
    QuidditySequence quiddity() const;

    /// One value per diagonal, sorted by diagonal.
    std::vector<std::pair<Diagonal, BigInt>> domain() const;

    const DenseMatrix<BigInt>& grid() const noexcept { return grid_; }

    friend bool operator==(const Frieze& x, const Frieze& y) { return x.n_ == y.n_ && x.grid_ == y.grid_; }

private:
    int n_ = 0;
    DenseMatrix<BigInt> grid_;
};

Frieze from_quiddity(const QuidditySequence& q);
Frieze from_triangulation(const Triangulation& t);
/// Ear-cutting inverse of from_triangulation.
Triangulation to_triangulation(const Frieze& f);
Triangulation triangulation_from_quiddity(const QuidditySequence& q);

/// Every frieze of height n, one per triangulation of the (n+3)-gon.
std::vector<Frieze> enumerate_friezes(int height);

/// Text strip: rows 0..n+1, trivial entries as *1*, odd rows offset by half a cell.
std::string render(const Frieze& f, int width);

struct BoltCell {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const BoltCell&, const BoltCell&) = default;
};

/// One cell per nontrivial row; cell r (1-based) satisfies b-a = r+1 and
/// cell r+1 is either (a-1, b) or (a, b+1).
class LightningBolt {
public:
    LightningBolt() = default;
    explicit LightningBolt(std::vector<BoltCell> cells);

    /// "a:LRR..." where a is the first coordinate of the row-1 cell and each
    /// letter moves one row down to the left (L) or right (R).
    static LightningBolt parse(const std::string& text);
    std::string to_string() const;

    int height() const noexcept { return static_cast<int>(cells_.size()); }
    const std::vector<BoltCell>& cells() const noexcept { return cells_; }

    friend auto operator<=>(const LightningBolt&, const LightningBolt&) = default;

private:
    std::vector<BoltCell> cells_;
};

/// All bolts of height n with row-1 cell starting at a = 1..n+3.
std::vector<LightningBolt> enumerate_bolts(int height);

/// Linear A_n orientation read off the bolt: i+1 -> i when the row i+1 cell lies left of the row i cell.
Quiver bolt_to_quiver(const LightningBolt& bolt);

/// Fills one value per diagonal from values on the bolt by sweeping source rows
/// across diamonds: m(a+1,b+1) = (m(a+1,b) m(a,b+1) + 1) / m(a,b).
/// `divide(numerator, denominator, new_cell)` performs the exact division.
template <typename Scalar, typename Divide>
std::map<Diagonal, Scalar> propagate_bolt(const LightningBolt& bolt, const std::vector<Scalar>& values,
                                          const Scalar& one, Divide&& divide) {
    const int n = bolt.height();
    const int polygon_size = n + 3;
    if (static_cast<int>(values.size()) != n) throw InvalidInput("one bolt value per row is required");

    std::vector<BoltCell> cells = bolt.cells();
    std::vector<Scalar> current = values;
    std::map<Diagonal, Scalar> known;
    for (int r = 0; r < n; ++r) {
        const auto [it, fresh] = known.emplace(diagonal_of(polygon_size, cells[r].a, cells[r].b), values[r]);
        if (!fresh) throw InvalidInput("bolt visits a diagonal twice");
    }

    const auto target = static_cast<std::size_t>(n * polygon_size / 2);
    auto is_source = [&](int k) {
        const bool up = k == 0 || cells[k - 1].a == cells[k].a + 1;
        const bool down = k == n - 1 || cells[k + 1].b == cells[k].b + 1;
        return up && down;
    };
    while (known.size() < target) {
        bool advanced = false;
        for (int k = 0; k < n && known.size() < target; ++k) {
            if (!is_source(k)) continue;
            const Scalar& top = k == 0 ? one : current[k - 1];
            const Scalar& bottom = k == n - 1 ? one : current[k + 1];
            const BoltCell next{cells[k].a + 1, cells[k].b + 1};
            current[k] = divide(top * bottom + one, current[k], next);
            cells[k] = next;
            known.emplace(diagonal_of(polygon_size, next.a, next.b), current[k]);
            advanced = true;
        }
        if (!advanced) throw std::logic_error("bolt propagation stalled");
    }
    return known;
}

/// Integer frieze through the given positive values on the bolt.
Frieze from_bolt(const LightningBolt& bolt, const std::vector<BigInt>& values);

/// Bolt values x_r at row r, propagated with exact Laurent division.
std::map<Diagonal, LaurentPoly> symbolic_from_bolt(const LightningBolt& bolt);

/// Entries of f on the bolt cells, row by row.
std::vector<BigInt> bolt_values(const Frieze& f, const LightningBolt& bolt);

}  // namespace friezelab
