#include "sptri/permutation.hpp"

#include <algorithm>
#include <set>

namespace sptri {

Permutation Permutation::from_map(const VertexMap& map) {
    Permutation p;
    p.domain_.reserve(map.size());
    for (const auto& [from, to] : map) p.domain_.push_back(from); // keys sorted
    std::set<VertexId> image_set;
    for (const auto& [from, to] : map) image_set.insert(to);
    if (std::vector<VertexId>(image_set.begin(), image_set.end()) != p.domain_) {
        throw PreconditionError("permutation: map is not a bijection of its key set");
    }
    p.image_.reserve(map.size());
    for (const auto& [from, to] : map) {
        auto it = std::lower_bound(p.domain_.begin(), p.domain_.end(), to);
        p.image_.push_back(static_cast<int>(it - p.domain_.begin()));
    }
    return p;
}

Permutation Permutation::identity(std::vector<VertexId> domain) {
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    Permutation p;
    p.domain_ = std::move(domain);
    p.image_.resize(p.domain_.size());
    for (std::size_t i = 0; i < p.image_.size(); ++i) p.image_[i] = static_cast<int>(i);
    return p;
}

VertexId Permutation::operator()(const VertexId& v) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
    if (it == domain_.end() || *it != v) {
        throw PreconditionError("permutation: vertex '" + v.label + "' is outside the domain");
    }
    return domain_[image_[it - domain_.begin()]];
}

Face Permutation::apply(const Face& f) const {
    std::vector<VertexId> vs;
    vs.reserve(f.size());
    for (const VertexId& v : f.vertices()) vs.push_back((*this)(v));
    return Face(std::move(vs));
}

SimplicialComplex Permutation::apply(const SimplicialComplex& c) const {
    std::vector<Face> fs;
    fs.reserve(c.facet_count());
    for (const Face& f : c.facets()) fs.push_back(apply(f));
    return from_facets(std::move(fs));
}

Permutation Permutation::compose(const Permutation& g) const {
    if (domain_ != g.domain_) {
        throw PreconditionError("permutation: compose requires equal domains");
    }
    Permutation p;
    p.domain_ = domain_;
    p.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) p.image_[i] = image_[g.image_[i]];
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.domain_ = domain_;
    p.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = static_cast<int>(i);
    return p;
}

int Permutation::order() const {
    Permutation acc = *this;
    int n = 1;
    while (!acc.is_identity()) {
        acc = acc.compose(*this);
        ++n;
        if (n > 1000000) throw PreconditionError("permutation: runaway order computation");
    }
    return n;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != static_cast<int>(i)) return false;
    }
    return true;
}

std::vector<VertexId> Permutation::fixed_points() const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] == static_cast<int>(i)) out.push_back(domain_[i]);
    }
    return out;
}

VertexMap Permutation::to_map() const {
    VertexMap m;
    for (std::size_t i = 0; i < domain_.size(); ++i) m[domain_[i]] = domain_[image_[i]];
    return m;
}

} // namespace sptri
