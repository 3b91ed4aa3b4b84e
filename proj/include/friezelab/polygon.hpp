#pragma once

#include <utility>
#include <vector>

namespace friezelab {

/// A diagonal {a, b} of a labeled polygon, stored with a < b.
struct Diagonal {
    int a = 0;
    int b = 0;

    Diagonal() = default;
    /// Normalizes the endpoint order.
    Diagonal(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// True iff {a,b} is a diagonal (not a side) of the N-gon with vertices 1..N.
bool is_diagonal(int polygon_size, const Diagonal& d);

/// Throws InvalidInput unless is_diagonal holds.
void require_diagonal(int polygon_size, const Diagonal& d);

/// Endpoints strictly interleave around the polygon.
bool crossing(int polygon_size, const Diagonal& d1, const Diagonal& d2);

/// A maximal set of pairwise non-crossing diagonals of the N-gon labeled 1..N clockwise.
class Triangulation {
public:
    Triangulation() = default;
    /// Validates size, diagonality and non-crossing; sorts the diagonals.
    Triangulation(int polygon_size, std::vector<Diagonal> diagonals);

    int polygon_size() const noexcept { return size_; }
    const std::vector<Diagonal>& diagonals() const noexcept { return diagonals_; }
    bool contains(const Diagonal& d) const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend auto operator<=>(const Triangulation& x, const Triangulation& y) {
        if (auto c = x.size_ <=> y.size_; c != 0) return c;
        return x.diagonals_ <=> y.diagonals_;
    }

private:
    int size_ = 0;
    std::vector<Diagonal> diagonals_;
};

/// Cyclic sequence of triangle counts per polygon vertex; entries[i-1] belongs to vertex i.
using QuidditySequence = std::vector<int>;

QuidditySequence quiddity(const Triangulation& t);

/// Replaces d by the other diagonal of the quadrilateral formed by its two triangles.
Triangulation flip(const Triangulation& t, const Diagonal& d);

/// The diagonal that replaces d under flip(t, d).
Diagonal flipped_diagonal(const Triangulation& t, const Diagonal& d);

/// Every triangulation of the labeled N-gon, sorted.
std::vector<Triangulation> enumerate_triangulations(int polygon_size);

/// All diagonals of the N-gon, sorted.
std::vector<Diagonal> all_diagonals(int polygon_size);

/// Rotation by `steps` (vertex i -> i + steps, modulo N).
Triangulation rotate(const Triangulation& t, int steps);

}  // namespace friezelab
