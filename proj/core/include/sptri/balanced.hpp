#ifndef SPTRI_BALANCED_HPP
#define SPTRI_BALANCED_HPP

#include <vector>

#include "sptri/complex.hpp"
#include "sptri/crosspoly.hpp"
#include "sptri/permutation.hpp"

namespace sptri {

/// A cross-polytope boundary with a distinguished facet, its antipodal
/// vertex pairing and a balanced coloring.  Paired vertices always share a
/// color.
struct PolytopePiece {
    int d = 0;
    SimplicialComplex complex;
    Face sigma;
    Permutation antipode;
    Coloring coloring;

    Face neg_sigma() const { return antipode.apply(sigma); }
};

/// Builds the boundary complex of the cross-polytope with the given
/// antipodal vertex pairs; sigma must pick exactly one vertex per pair.
PolytopePiece cross_polytope_piece(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                   const Face& sigma, const Coloring& coloring);

/// A complex assembled from cross-polytope pieces by diamond-connected
/// sums, with the two distinguished antipodal regions A and -A (the
/// connected sums of the sigma facets and their antipodes).
struct GluedComplex {
    int d = 0;
    SimplicialComplex complex;
    Coloring coloring;
    std::vector<VertexId> a_vertices;     // accumulated V(sigma_1), V(sigma_2), ...
    std::vector<VertexId> neg_a_vertices; // accumulated V(-sigma_i)

    SimplicialComplex a_side() const { return restriction(complex, a_vertices); }
    SimplicialComplex neg_a_side() const { return restriction(complex, neg_a_vertices); }
};

GluedComplex glued_from_piece(const PolytopePiece& piece);

/// Diamond-connected sum: deletes the edge e1 from the glued complex and e2
/// from the piece, and glues the two star complements along their boundary
/// spheres through `ident` (a color-preserving bijection from the vertices
/// of st(e2) onto those of st(e1)).  Vertices of the piece outside st(e2)
/// keep their labels, which must be fresh.
GluedComplex diamond_connected_sum(const GluedComplex& glued, const Face& e1,
                                   const PolytopePiece& piece, const Face& e2,
                                   const VertexMap& ident);

/// Diamond-handle addition within one complex: removes the stars of e1 and
/// e2 and identifies them through `phi` (a bijection from V(st(e1)) onto
/// V(st(e2))).  For every v, phi(v) must share no neighbor with v.
GluedComplex diamond_handle_addition(const GluedComplex& glued, const Face& e1, const Face& e2,
                                     const VertexMap& phi);

/// The label bijection x_i -> x'_{i+1}, y_i -> y'_{i+1} (1 <= i <= d-1),
/// x_d -> y'_1, y_d -> x'_1 between the two ambient cross-polytopes.
VertexMap map_f(int d);

/// The 2d-cycle facets sigma_1..sigma_2d generating B(1,d):
/// sigma_i = x_1..x_i y_{i+1}..y_d and sigma_{d+i} = y_1..y_i x_{i+1}..x_d.
Face sigma_facet(int i, int d);

/// The unique cross-polytope boundary containing sigma_i and f(sigma_i) as
/// antipodal facets: vertices of equal color are paired.
PolytopePiece gamma_piece(int d, int i);

/// The 2d edges deleted when chaining the pieces: e_i joins piece i and
/// piece i+1 (cyclically).
std::vector<Face> deleted_edge_list(int d);

/// The chained complex Gamma = union of the 2d pieces minus every facet
/// containing a deleted edge, with the two copies of B(1,d) surviving as
/// subcomplexes.
struct GammaComplex {
    int d = 0;
    SimplicialComplex complex;
    Coloring coloring;
    SimplicialComplex delta1;   // B(1,d) on x/y labels
    SimplicialComplex f_delta1; // its image on primed labels
    std::vector<Face> deleted_edges;
    std::vector<PolytopePiece> pieces;
};

GammaComplex build_gamma(int d);

/// The balanced 4d-vertex triangulation of S^2 x S^(d-3):
/// Sigma = Delta_2 cup N cup f(Delta_2), where N is the complement of
/// Delta_1 cup f(Delta_1) in Gamma and Delta_2 the complement of Delta_1 in
/// the ambient cross-polytope boundary.
struct SigmaComplex {
    int d = 0;
    SimplicialComplex complex;
    Coloring coloring;
    GammaComplex gamma;
    SimplicialComplex delta2, f_delta2;
    SimplicialComplex tube; // N
};

SigmaComplex build_sigma(int d);

/// The three symmetry generators of Sigma:
///   D  swaps x <-> y and x' <-> y',
///   E' swaps primed and unprimed blocks reversing indices,
///   R' rotates indices, crossing x_d -> y_1 (and primed likewise).
struct SigmaSymmetry {
    Permutation d_swap;    // order 2
    Permutation e_reflect; // order 2
    Permutation r_rotate;  // order 2d
};

SigmaSymmetry sigma_symmetry_generators(int d);

} // namespace sptri

#endif
