#ifndef SPTRI_COMPLEX_HPP
#define SPTRI_COMPLEX_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sptri/errors.hpp"

namespace sptri {

/// A vertex is identified by an opaque label with a total (lexicographic)
/// order.  Labels such as "x3", "y3", "x'3" and apex labels "u", "v" are
/// all legal; ordering is deterministic and purely label-based.
struct VertexId {
    std::string label;

    VertexId() = default;
    explicit VertexId(std::string l) : label(std::move(l)) {}
    VertexId(const char* l) : label(l) {}

    auto operator<=>(const VertexId&) const = default;
};

/// A face: a strictly sorted duplicate-free list of vertices.  The empty
/// face is valid and has dimension -1.
class Face {
public:
    Face() = default;

    /// Sorts the vertices; throws MalformedInputError on duplicates.
    explicit Face(std::vector<VertexId> vertices);

    static Face of(std::initializer_list<std::string> labels);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool contains(const VertexId& v) const;
    bool contains_all(const Face& other) const;

    Face without(const VertexId& v) const;
    Face union_with(const Face& other) const;
    Face intersect(const Face& other) const;

    std::string str() const;

    auto operator<=>(const Face&) const = default;

private:
    std::vector<VertexId> vertices_;
};

/// f-vector: counts()[i] is the number of (i-1)-dimensional faces, so the
/// leading entry is f_{-1} (1 for every nonempty complex).
struct FVector {
    std::vector<long long> counts;

    /// f_i for i in [-1, dim].
    long long f(int i) const;
    int dim() const { return static_cast<int>(counts.size()) - 2; }
    /// Unreduced Euler characteristic: alternating sum of f_0, f_1, ...
    long long euler_characteristic() const;

    bool operator==(const FVector&) const = default;
    std::string str() const;
};

/// A finite abstract simplicial complex, stored by its inclusion-maximal
/// faces (facets).  Immutable after construction; queries are pure.  Face
/// enumeration is lazy and cached per dimension behind a mutex, so complexes
/// may be shared across threads.
///
/// The empty complex (no faces at all) and the complex {<empty face>}
/// (a single (-1)-dimensional facet) are distinct values.
class SimplicialComplex {
public:
    SimplicialComplex();

    /// The complex generated by the given faces; non-maximal faces are
    /// absorbed, duplicates are dropped.  An empty list yields the empty
    /// complex.
    static SimplicialComplex from_facets(std::vector<Face> faces);

    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    bool is_empty() const { return facets_.empty(); }
    /// -2 for the empty complex, otherwise the maximum facet dimension.
    int dimension() const { return dimension_; }
    bool is_pure() const;

    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    bool has_vertex(const VertexId& v) const;

    /// Face membership: F is a face iff F is contained in some facet.
    bool contains(const Face& f) const;

    /// All faces of dimension k, lexicographically sorted (cached).
    const std::vector<Face>& faces(int k) const;
    /// All faces of all dimensions 0..dim (the empty face is not listed).
    std::vector<Face> all_faces() const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

private:
    std::vector<Face> facets_;       // sorted, maximal
    std::vector<VertexId> vertices_; // sorted
    int dimension_ = -2;

    struct FaceCache {
        std::mutex mutex;
        std::map<int, std::vector<Face>> by_dim;
    };
    std::shared_ptr<FaceCache> cache_;
};

// --- elementary operations ------------------------------------------------

SimplicialComplex from_facets(std::vector<Face> faces);

FVector f_vector(const SimplicialComplex& complex);

/// star(sigma) = complex generated by all facets containing sigma.
SimplicialComplex star(const SimplicialComplex& complex, const Face& sigma);
/// link(sigma) = {tau in star(sigma) : tau disjoint from sigma}.
SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma);

/// Join of two complexes on disjoint vertex sets.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// Cone with apex v; v must not be a vertex of the complex.
SimplicialComplex join_cone(const SimplicialComplex& complex, const VertexId& apex);

/// Restriction to a vertex set W: all faces contained in W.  Foreign
/// vertices in W are ignored.
SimplicialComplex restriction(const SimplicialComplex& complex,
                              const std::vector<VertexId>& w);

/// Complement: the subcomplex of `complex` generated by the facets not in
/// `sub`.  Both must be pure of the same dimension and facets(sub) must be
/// a subset of facets(complex).
SimplicialComplex complement_of(const SimplicialComplex& complex,
                                const SimplicialComplex& sub);

/// All faces of dimension <= i.
SimplicialComplex skeleton(const SimplicialComplex& complex, int i);

/// Boundary by the ridge criterion: the closure of all ridges lying in
/// exactly one facet.  Requires a pure complex in which every ridge lies in
/// at most two facets.  Empty for a closed complex.
SimplicialComplex boundary_complex(const SimplicialComplex& complex);

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);

/// Intersection as complexes: the common faces (computed up to the smaller
/// dimension, then reduced to maximal elements).  Facet-level intersection
/// would be wrong when facets overlap partially.
SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);

/// Relabel vertices through an injective map; vertices outside the map keep
/// their labels.
SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::map<VertexId, VertexId>& vertex_map);

// --- facet-ridge graph ------------------------------------------------------

/// Graph on the facets of a pure complex, one edge per shared ridge
/// (codimension-1 face).
struct FacetRidgeGraph {
    std::vector<Face> facets;          // node i = facets[i]
    std::vector<std::vector<int>> adj; // sorted neighbor lists

    std::size_t node_count() const { return facets.size(); }
    std::size_t edge_count() const;
    bool is_connected() const;
    /// Every node has degree 2, the graph is connected and has as many
    /// edges as nodes.
    bool is_single_cycle() const;
    /// Node indices around the cycle; requires is_single_cycle().
    std::vector<int> cycle_order() const;
};

FacetRidgeGraph facet_ridge_graph(const SimplicialComplex& complex);

// --- misc -------------------------------------------------------------------

/// Proper coloring metadata: vertex -> color in {1..k}.
using Coloring = std::map<VertexId, int>;

/// Number of distinct colors used.
int colors_used(const Coloring& coloring);
/// True if every edge of the complex has endpoints of distinct colors and
/// every vertex is colored.
bool is_proper_coloring(const SimplicialComplex& complex, const Coloring& coloring);

} // namespace sptri

#endif
