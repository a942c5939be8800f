#ifndef SPTRI_CROSSPOLY_HPP
#define SPTRI_CROSSPOLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sptri/complex.hpp"
#include "sptri/permutation.hpp"

namespace sptri {

// Standard vertex labels of the boundary of the d-cross-polytope: x_i and
// y_i form the i-th antipodal pair.
VertexId x_label(int i);
VertexId y_label(int i);
VertexId xp_label(int i); // x'_i
VertexId yp_label(int i); // y'_i

/// A facet of the cross-polytope boundary as a sign vector: bit i-1 set
/// means position i carries y_i, clear means x_i.
struct SignedFacet {
    int d = 0;
    std::uint32_t ybits = 0;

    bool is_y(int position) const { return (ybits >> (position - 1)) & 1u; }
    Face to_face() const;
    static SignedFacet from_face(const Face& f, int d);
    SignedFacet antipode() const;

    auto operator<=>(const SignedFacet&) const = default;
};

/// Number of positions 1..d-1 where consecutive entries of the sign vector
/// carry different x/y labels (linear reading, no wraparound).  This is the
/// count that generates the B(i,d) family: B(1,d) has exactly 2d facets.
int switch_count(const SignedFacet& f);

/// Same count read cyclically (position d compared against position 1).
/// Always even; the belt complexes Gamma_j are exactly the facets with
/// cyclic count <= 2 and j labels of y type.
int cyclic_switch_count(const SignedFacet& f);

/// Boundary complex of the d-cross-polytope together with its antipodal
/// involution x_i <-> y_i and the balanced coloring x_i, y_i -> i.
struct CrossPolytopeSphere {
    int d = 0;
    SimplicialComplex complex;
    Permutation antipode;
    Coloring coloring;
};

CrossPolytopeSphere cross_polytope_boundary(int d);

/// B(i,d): the pure subcomplex of the cross-polytope boundary generated by
/// all facets with at most i switches; inherits coloring and antipode.
struct BComplex {
    int i = 0;
    int d = 0;
    SimplicialComplex complex;
    Permutation antipode;
    Coloring coloring;
};

BComplex b_complex(int i, int d);

/// tau_j^k: the facet of the d-cross-polytope whose y-entries occupy the
/// cyclic arc of length j starting at position k (indices modulo d).
Face tau_facet(int j, int k, int d);

/// Gamma_j: the subcomplex generated by tau_j^1..tau_j^d (a single facet
/// for j = 0 and j = d).
SimplicialComplex gamma_belt(int j, int d);

// --- shelling ----------------------------------------------------------------

/// A certified shelling: the facet order together with the restriction face
/// of each step (the minimal new face).
struct ShellingCertificate {
    std::vector<Face> order;
    std::vector<Face> restrictions;
};

/// Verifies that `order` (exactly the facet set of the complex) satisfies
/// the shelling interval condition; throws ShellingError at the first step
/// where it fails.
ShellingCertificate verify_shelling(const SimplicialComplex& complex,
                                    const std::vector<Face>& order);

/// The facet order tau_0, tau_1^1..tau_1^d, ..., tau_i^1..tau_i^d of the
/// union of the belts Gamma_0..Gamma_i.
std::vector<Face> belt_shelling_order(int d, int i);

/// Union of the belts Gamma_0..Gamma_i.
SimplicialComplex belt_union(int d, int i);

// --- the two balls and the cs sphere product ----------------------------------

/// The pair of d-balls inside the boundary of the (d+1)-cross-polytope whose
/// union's boundary triangulates S^2 x S^(d-3).
struct DiskPair {
    int d = 0;
    SimplicialComplex d1, d2;
    SimplicialComplex intersection; // D1 cap D2, centrally symmetric
};

DiskPair build_d1_d2(int d);

/// Checks that the facet-ridge graph of the complex is one cycle of even
/// length 2n whose enumeration pairs opposite facets antipodally
/// (sigma_i = -sigma_(n+i)); returns the facet enumeration around the
/// cycle.  Throws CriterionError otherwise.
std::vector<Face> verify_cycle_antipodal(const SimplicialComplex& complex,
                                         const Permutation& antipode);

/// The centrally symmetric (2d+2)-vertex triangulation of S^2 x S^(d-3):
/// the boundary of D1 union D2 inside the boundary of the (d+1)-cross-
/// polytope.
struct CsSphereProduct {
    int d = 0;
    SimplicialComplex complex;
    Permutation antipode; // free involution on 2d+2 vertices
    DiskPair disks;
};

CsSphereProduct cs_sphere_product(int d);

/// Rotation/reflection vertex maps fixing the two cone apexes; together
/// with the antipode these generate the symmetries of the cs product for
/// odd d.
Permutation cs_product_rotation(int d);   // x_j -> x_{j+1}, apexes fixed
Permutation cs_product_reflection(int d); // x_j -> x_{d-j+1}, apexes fixed

// --- the inductive construction ------------------------------------------------

/// Input of one inductive step: four balls with B1 cap B2 = A1 cup A2 and
/// four fresh apex labels.
struct InductiveInput {
    SimplicialComplex a1, a2, b1, b2;
    VertexId u, v, u2, v2;
};

/// D_prev = A1*u cup A2*v, D_cur = B1*u cup B2*v, and
/// D_next = (C1*u') cup (C2*v') with C1 = B1*u cup A2*v,
/// C2 = A1*u cup B2*v.  The step checks C1 cap C2 = D_prev.
struct InductiveResult {
    SimplicialComplex d_prev, d_cur;
    SimplicialComplex c1, c2;
    SimplicialComplex d_next;
};

InductiveResult inductive_step(const InductiveInput& input);

/// Seed with B1 cap B2 = two disjoint facets, taken from the facet cycle of
/// B(1,n); the resulting boundary of D_next triangulates S^1 x S^(n-1).
InductiveInput disjoint_facet_seed(int n);

/// Seed from the links of x_d and y_d in B(i-1,d) and B(i,d); the step then
/// rebuilds B(i,d+1) exactly.
InductiveInput b_family_seed(int i, int d);

} // namespace sptri

#endif
