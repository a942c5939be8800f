#ifndef SPTRI_PERMUTATION_HPP
#define SPTRI_PERMUTATION_HPP

#include <map>
#include <vector>

#include "sptri/complex.hpp"

namespace sptri {

/// Map between vertex label sets (not necessarily a self-map).
using VertexMap = std::map<VertexId, VertexId>;

/// A bijection of a declared vertex set onto itself.
class Permutation {
public:
    Permutation() = default;

    /// The map must be a bijection of its key set onto itself.
    static Permutation from_map(const VertexMap& map);
    static Permutation identity(std::vector<VertexId> domain);

    const std::vector<VertexId>& domain() const { return domain_; }

    VertexId operator()(const VertexId& v) const;
    Face apply(const Face& f) const;
    SimplicialComplex apply(const SimplicialComplex& c) const;

    /// compose(g)(v) = (*this)(g(v)); both must share a domain.
    Permutation compose(const Permutation& g) const;
    Permutation inverse() const;
    int order() const;
    bool is_identity() const;
    bool is_involution() const { return compose(*this).is_identity(); }
    std::vector<VertexId> fixed_points() const;

    VertexMap to_map() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<VertexId> domain_; // sorted
    std::vector<int> image_;       // image_[i] = index of image of domain_[i]
};

} // namespace sptri

#endif
