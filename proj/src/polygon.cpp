#include "friezelab/polygon.hpp"

#include <algorithm>
#include <sstream>

#include "friezelab/errors.hpp"

namespace friezelab {

namespace {

std::string describe(const Diagonal& d) {
    std::ostringstream os;
    os << "{" << d.a << "," << d.b << "}";
    return os.str();
}

bool is_side(int polygon_size, int x, int y) {
    const int lo = std::min(x, y), hi = std::max(x, y);
    return hi - lo == 1 || (lo == 1 && hi == polygon_size);
}

// Triangulations of the sub-polygon lo, lo+1, ..., hi (closing side {lo, hi}).
std::vector<std::vector<Diagonal>> triangulate_range(int lo, int hi) {
    if (hi - lo < 2) return {{}};
    std::vector<std::vector<Diagonal>> out;
    for (int apex = lo + 1; apex < hi; ++apex) {
        const auto left = triangulate_range(lo, apex);
        const auto right = triangulate_range(apex, hi);
        for (const auto& l : left) {
            for (const auto& r : right) {
                std::vector<Diagonal> ds = l;
                ds.insert(ds.end(), r.begin(), r.end());
                if (apex - lo >= 2) ds.emplace_back(lo, apex);
                if (hi - apex >= 2) ds.emplace_back(apex, hi);
                out.push_back(std::move(ds));
            }
        }
    }
    return out;
}

}  // namespace

bool is_diagonal(int polygon_size, const Diagonal& d) {
    return d.a >= 1 && d.b <= polygon_size && d.a != d.b && !is_side(polygon_size, d.a, d.b);
}

void require_diagonal(int polygon_size, const Diagonal& d) {
    if (!is_diagonal(polygon_size, d)) {
        throw InvalidInput(describe(d) + " is not a diagonal of the " + std::to_string(polygon_size) + "-gon");
    }
}

bool crossing(int polygon_size, const Diagonal& d1, const Diagonal& d2) {
    require_diagonal(polygon_size, d1);
    require_diagonal(polygon_size, d2);
    return (d1.a < d2.a && d2.a < d1.b && d1.b < d2.b) || (d2.a < d1.a && d1.a < d2.b && d2.b < d1.b);
}

Triangulation::Triangulation(int polygon_size, std::vector<Diagonal> diagonals)
    : size_(polygon_size), diagonals_(std::move(diagonals)) {
    if (size_ < 3) throw InvalidInput("a polygon needs at least 3 vertices");
    std::sort(diagonals_.begin(), diagonals_.end());
    if (std::adjacent_find(diagonals_.begin(), diagonals_.end()) != diagonals_.end()) {
        throw InvalidInput("duplicate diagonal in triangulation");
    }
    for (const auto& d : diagonals_) require_diagonal(size_, d);
    if (static_cast<int>(diagonals_.size()) != size_ - 3) {
        throw InvalidInput("a triangulation of the " + std::to_string(size_) + "-gon has " +
                           std::to_string(size_ - 3) + " diagonals");
    }
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j) {
            if (crossing(size_, diagonals_[i], diagonals_[j])) {
                throw InvalidInput(describe(diagonals_[i]) + " crosses " + describe(diagonals_[j]));
            }
        }
    }
}

bool Triangulation::contains(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

QuidditySequence quiddity(const Triangulation& t) {
    QuidditySequence q(static_cast<std::size_t>(t.polygon_size()), 1);
    for (const auto& d : t.diagonals()) {
        ++q[static_cast<std::size_t>(d.a - 1)];
        ++q[static_cast<std::size_t>(d.b - 1)];
    }
    return q;
}

Diagonal flipped_diagonal(const Triangulation& t, const Diagonal& d) {
    if (!t.contains(d)) throw InvalidInput(describe(d) + " is not in the triangulation");
    const int n = t.polygon_size();
    auto edge = [&](int x, int y) { return is_side(n, x, y) || t.contains(Diagonal(x, y)); };
    int inside = 0, outside = 0;
    for (int c = 1; c <= n; ++c) {
        if (c == d.a || c == d.b || !edge(d.a, c) || !edge(c, d.b)) continue;
        (c > d.a && c < d.b ? inside : outside) = c;
    }
    return {inside, outside};
}

Triangulation flip(const Triangulation& t, const Diagonal& d) {
    const Diagonal replacement = flipped_diagonal(t, d);
    std::vector<Diagonal> ds;
    for (const auto& e : t.diagonals()) ds.push_back(e == d ? replacement : e);
    return {t.polygon_size(), std::move(ds)};
}

std::vector<Triangulation> enumerate_triangulations(int polygon_size) {
    if (polygon_size < 3) throw InvalidInput("a polygon needs at least 3 vertices");
    std::vector<Triangulation> out;
    for (auto& ds : triangulate_range(1, polygon_size)) out.emplace_back(polygon_size, std::move(ds));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Diagonal> all_diagonals(int polygon_size) {
    std::vector<Diagonal> out;
    for (int a = 1; a <= polygon_size; ++a) {
        for (int b = a + 2; b <= polygon_size; ++b) {
            if (!(a == 1 && b == polygon_size)) out.emplace_back(a, b);
        }
    }
    return out;
}

Triangulation rotate(const Triangulation& t, int steps) {
    const int n = t.polygon_size();
    auto shift = [&](int v) { return ((v - 1 + steps) % n + n) % n + 1; };
    std::vector<Diagonal> ds;
    for (const auto& d : t.diagonals()) ds.emplace_back(shift(d.a), shift(d.b));
    return {n, std::move(ds)};
}

}  // namespace friezelab
