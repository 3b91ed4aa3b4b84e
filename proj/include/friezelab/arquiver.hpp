#pragma once

#include <map>
#include <vector>

#include "friezelab/frieze.hpp"
#include "friezelab/laurent.hpp"
#include "friezelab/polygon.hpp"

namespace friezelab {

/// Vertex (i, m) of ZQ for the linear orientation 1 -> 2 -> ... -> n.
/// Arrows: (i,m) -> (i+1,m) and (i,m) -> (i-1,m+1).
struct ZQVertex {
    int i = 1;
    int m = 0;
    friend auto operator<=>(const ZQVertex&, const ZQVertex&) = default;
};

/// Indecomposable of the cluster category, as a diagonal of the (n+3)-gon.
using CatObject = Diagonal;

/// The slices m0 <= m <= m1 of ZQ for A_n.
struct MeshWindow {
    int n = 1;
    int m0 = 0;
    int m1 = 0;

    bool contains(const ZQVertex& v) const { return v.i >= 1 && v.i <= n && v.m >= m0 && v.m <= m1; }
    std::vector<ZQVertex> vertices() const;
};

/// Pair coordinates (a, b) = (m, m+i+1) of a vertex.
inline std::pair<int, int> pair_coordinates(const ZQVertex& v) { return {v.m, v.m + v.i + 1}; }

/// Dimensions of Hom(X, Y) for every Y in the window, computed in the mesh
/// category by induction on 2m+i: Hom(X,Z) is the cokernel of
/// Hom(X,tau Z) -> sum over arrows W -> Z of Hom(X,W). Exact rationals.
std::map<ZQVertex, int> hom_dims_from(const MeshWindow& w, const ZQVertex& x);

/// Throws WindowTooSmall unless both vertices lie in the window.
int hom_dim_mesh(const MeshWindow& w, const ZQVertex& x, const ZQVertex& y);

/// 1 iff Y lies in the rectangle spanned by X and tau Sigma X.
int hom_dim_rectangle(int n, const ZQVertex& x, const ZQVertex& y);

ZQVertex tau(const ZQVertex& v);
ZQVertex tau_inverse(const ZQVertex& v);
/// Rotation of both endpoints by -1.
CatObject tau(int n, const CatObject& d);

/// Suspension on ZA_n: (i, m) -> (n+1-i, m+i).
ZQVertex sigma(int n, const ZQVertex& v);

/// Diagonal {m, m+i+1} mod n+3 of the (Sigma^-1 tau)-orbit of v.
CatObject orbit_diagonal(int n, const ZQVertex& v);

/// The representative (b-a-1, a) of a diagonal a < b.
ZQVertex lift(int n, const CatObject& d);

/// No crossing; equivalently Hom(X, Sigma Y) = 0 in the cluster category.
bool compatible(int n, const CatObject& x, const CatObject& y);

std::vector<Triangulation> cluster_tilting_objects(int n);
Triangulation mutate_ct(const Triangulation& t, const CatObject& x);
Frieze frieze_from_ct(const Triangulation& t);

/// phi_X, with the bolt cells carrying x_1..x_n.
LaurentPoly cluster_variable_of(const CatObject& x, const LightningBolt& bolt);

}  // namespace friezelab
