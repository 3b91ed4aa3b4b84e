#include "friezelab/arquiver.hpp"

#include <algorithm>

#include "friezelab/errors.hpp"
#include "friezelab/exact_linalg.hpp"

namespace friezelab {

namespace {

using RationalMatrix = DenseMatrix<Rational>;

struct Knot {
    int dim = 0;
    // Map V_W -> V_Z for each arrow W -> Z.
    std::map<ZQVertex, RationalMatrix> incoming;
};

int level(const ZQVertex& v) { return 2 * v.m + v.i; }

void require_rank(int n) {
    if (n < 1) throw InvalidInput("rank must be at least 1");
}

std::string describe(const ZQVertex& v) { return "(" + std::to_string(v.i) + "," + std::to_string(v.m) + ")"; }

}  // namespace

std::vector<ZQVertex> MeshWindow::vertices() const {
    std::vector<ZQVertex> out;
    for (int m = m0; m <= m1; ++m) {
        for (int i = 1; i <= n; ++i) out.push_back({i, m});
    }
    return out;
}

std::map<ZQVertex, int> hom_dims_from(const MeshWindow& w, const ZQVertex& x) {
    require_rank(w.n);
    if (!w.contains(x)) throw WindowTooSmall("source " + describe(x) + " lies outside the window");

    auto order = w.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [](const ZQVertex& u, const ZQVertex& v) { return level(u) < level(v); });

    std::map<ZQVertex, Knot> knots;
    auto dim_of = [&](const ZQVertex& v) {
        const auto it = knots.find(v);
        return it == knots.end() ? 0 : it->second.dim;
    };
    auto arrow_map = [&](const ZQVertex& from, const ZQVertex& to) -> RationalMatrix {
        const auto it = knots.find(to);
        if (it == knots.end()) return RationalMatrix::Zero(0, dim_of(from));
        const auto arrow = it->second.incoming.find(from);
        if (arrow == it->second.incoming.end()) return RationalMatrix::Zero(it->second.dim, dim_of(from));
        return arrow->second;
    };

    std::map<ZQVertex, int> dims;
    for (const auto& z : order) {
        if (z == x) {
            knots[z].dim = 1;
        } else if (z.m >= x.m && level(z) > level(x)) {
            std::vector<ZQVertex> middles;
            if (z.i > 1) middles.push_back({z.i - 1, z.m});
            if (z.i < w.n) middles.push_back({z.i + 1, z.m - 1});
            const ZQVertex source = tau(z);

            int total = 0;
            for (const auto& v : middles) total += dim_of(v);
            if (total > 0) {
                RationalMatrix mesh(total, dim_of(source));
                int row = 0;
                for (std::size_t k = 0; k < middles.size(); ++k) {
                    const RationalMatrix block = arrow_map(source, middles[k]);
                    mesh.middleRows(row, block.rows()) = k == 0 ? block : RationalMatrix(-block);
                    row += static_cast<int>(block.rows());
                }
                const RationalMatrix quotient = exact_left_kernel(mesh);
                Knot& knot = knots[z];
                knot.dim = static_cast<int>(quotient.rows());
                int col = 0;
                for (const auto& v : middles) {
                    const int d = dim_of(v);
                    knot.incoming.emplace(v, quotient.middleCols(col, d));
                    col += d;
                }
            }
        }
        dims[z] = dim_of(z);
    }
    return dims;
}

int hom_dim_mesh(const MeshWindow& w, const ZQVertex& x, const ZQVertex& y) {
    if (!w.contains(y)) throw WindowTooSmall("target " + describe(y) + " lies outside the window");
    return hom_dims_from(w, x).at(y);
}

int hom_dim_rectangle(int n, const ZQVertex& x, const ZQVertex& y) {
    require_rank(n);
    const auto [a, b] = pair_coordinates(x);
    const auto [c, d] = pair_coordinates(y);
    return a <= c && c <= b - 2 && b <= d && d <= a + n + 1 ? 1 : 0;
}

ZQVertex tau(const ZQVertex& v) { return {v.i, v.m - 1}; }
ZQVertex tau_inverse(const ZQVertex& v) { return {v.i, v.m + 1}; }

CatObject tau(int n, const CatObject& d) {
    require_diagonal(n + 3, d);
    return {label_mod(d.a - 1, n + 3), label_mod(d.b - 1, n + 3)};
}

ZQVertex sigma(int n, const ZQVertex& v) { return {n + 1 - v.i, v.m + v.i}; }

CatObject orbit_diagonal(int n, const ZQVertex& v) {
    require_rank(n);
    if (v.i < 1 || v.i > n) throw InvalidInput("vertex " + describe(v) + " is outside ZA_" + std::to_string(n));
    const auto [a, b] = pair_coordinates(v);
    return diagonal_of(n + 3, a, b);
}

ZQVertex lift(int n, const CatObject& d) {
    require_diagonal(n + 3, d);
    return {d.b - d.a - 1, d.a};
}

bool compatible(int n, const CatObject& x, const CatObject& y) { return !crossing(n + 3, x, y); }

std::vector<Triangulation> cluster_tilting_objects(int n) {
    require_rank(n);
    return enumerate_triangulations(n + 3);
}

Triangulation mutate_ct(const Triangulation& t, const CatObject& x) { return flip(t, x); }

Frieze frieze_from_ct(const Triangulation& t) { return from_triangulation(t); }

LaurentPoly cluster_variable_of(const CatObject& x, const LightningBolt& bolt) {
    require_diagonal(bolt.height() + 3, x);
    return symbolic_from_bolt(bolt).at(x);
}

}  // namespace friezelab
