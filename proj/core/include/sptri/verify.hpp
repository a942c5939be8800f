#ifndef SPTRI_VERIFY_HPP
#define SPTRI_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sptri/complex.hpp"
#include "sptri/homology.hpp"
#include "sptri/permutation.hpp"

namespace sptri {

/// Result of a single certification check.  A failing report always carries
/// a concrete witness (a violating face, vertex or edge).
struct VerificationReport {
    std::string check;
    bool passed = false;
    std::string witness;
    std::map<std::string, std::string> metrics;

    static VerificationReport pass(std::string check);
    static VerificationReport fail(std::string check, std::string witness);
    std::string str() const;
};

/// With a coloring: verifies properness and that exactly dim+1 colors are
/// used.  Without: exact backtracking search for a proper (dim+1)-coloring
/// (intended for <= 30 vertices); the report carries the verdict either way.
VerificationReport check_balanced(const SimplicialComplex& complex,
                                  const std::optional<Coloring>& coloring = std::nullopt);

/// Deterministic backtracking search for a proper coloring with at most
/// max_colors colors.
std::optional<Coloring> find_proper_coloring(const SimplicialComplex& complex, int max_colors);

/// Central symmetry: alpha is a fixed-point-free involution of the vertices
/// mapping every face to a face and no nonempty face to itself.
VerificationReport check_cs(const SimplicialComplex& complex, const Permutation& alpha);

/// g is an automorphism iff it maps the facet set onto itself.
VerificationReport check_automorphism(const SimplicialComplex& complex, const Permutation& g);

struct GroupClosure {
    long long order = 0;
    bool vertex_transitive = false;
    std::vector<long long> orbit_sizes;
};

/// BFS closure of the generators under composition; throws CapError when
/// the closure exceeds `cap` elements.
GroupClosure group_closure(const std::vector<Permutation>& generators, long long cap = 100000);

/// Every ridge lies in exactly two facets and the facet-ridge graph is
/// connected.
VerificationReport check_closed_pseudomanifold(const SimplicialComplex& complex);

/// Necessary manifold condition: every vertex link has the reduced homology
/// of a sphere of dimension dim-1 (interior vertices) or trivial reduced
/// homology (vertices on the boundary).
VerificationReport link_homology_survey(const SimplicialComplex& complex);

/// Verifies that every face of `sub` of dimension <= i is a face of
/// `complex`.
VerificationReport skeleton_contained(const SimplicialComplex& complex,
                                      const SimplicialComplex& sub, int i);

struct IsomorphismOptions {
    /// Backtracking node budget; exceeded searches throw BudgetError.
    std::uint64_t budget = 50'000'000;
};

/// Backtracking simplicial-isomorphism search pruned by degree sequences
/// and link f-vectors; any returned bijection is re-verified against the
/// facet sets before being reported.  Both complexes must be pure; intended
/// for complexes with at most ~32 vertices.
std::optional<VertexMap> find_isomorphism(const SimplicialComplex& a,
                                          const SimplicialComplex& b,
                                          const IsomorphismOptions& options = {});

} // namespace sptri

#endif
