#ifndef SPTRI_HOMOLOGY_HPP
#define SPTRI_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "sptri/complex.hpp"
#include "sptri/snf.hpp"

namespace sptri {

/// The simplicial chain complex of a complex: faces per dimension in
/// lexicographic order, and the boundary maps between them.  matrices[k] is
/// the map from k-chains to (k-1)-chains; matrices[0] is the augmentation
/// (the 1 x f_0 all-ones row), which makes the homology reduced.
struct ChainComplexData {
    std::vector<std::vector<Face>> faces_by_dim; // index k = dimension k
    std::vector<IntegerMatrix> matrices;         // index k = boundary from dim k

    int top_dimension() const { return static_cast<int>(faces_by_dim.size()) - 1; }
    /// boundary(k) composed with boundary(k+1) vanishes for all k.
    bool boundary_squares_to_zero() const;
};

ChainComplexData boundary_matrices(const SimplicialComplex& complex);

/// Integral homology: per-dimension Betti number plus torsion coefficients
/// (invariant factors > 1, each forming a divisibility chain).
struct HomologyProfile {
    std::vector<long long> betti;                  // index k = dimension k
    std::vector<std::vector<Integer>> torsion;     // index k = dimension k
    bool reduced = true;

    long long betti_at(int k) const;
    const std::vector<Integer>& torsion_at(int k) const;
    bool torsion_free() const;
    bool operator==(const HomologyProfile&) const = default;

    /// One line per dimension: "H_k = Z^b + Z/t1 + ...".
    std::string str() const;
};

/// Convenience constructor for expected profiles: betti[k] = rank of H_k,
/// no torsion.
HomologyProfile sphere_profile(int dim_complex, int sphere_dim);
/// Reduced homology of S^a x S^b as a profile over dimensions 0..(a+b).
HomologyProfile sphere_product_profile(int a, int b);

struct HomologyOptions {
    bool reduced = true;
    /// When false, Betti numbers come from fraction-free ranks only and the
    /// torsion lists stay empty (cheap path).  When true, a full Smith
    /// normal form certifies the torsion of every boundary map.
    bool torsion = true;
};

/// Exact integral (reduced by default) simplicial homology via Smith normal
/// form over the integers.
HomologyProfile reduced_homology(const SimplicialComplex& complex,
                                 const HomologyOptions& options = {});

} // namespace sptri

#endif
