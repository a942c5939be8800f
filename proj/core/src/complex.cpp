#include "sptri/complex.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace sptri {

// --- Face -------------------------------------------------------------------

Face::Face(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end()) {
        throw MalformedInputError("face has duplicate vertex '" + dup->label + "'");
    }
}

Face Face::of(std::initializer_list<std::string> labels) {
    std::vector<VertexId> vs;
    vs.reserve(labels.size());
    for (const auto& l : labels) vs.emplace_back(l);
    return Face(std::move(vs));
}

bool Face::contains(const VertexId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::contains_all(const Face& other) const {
    return std::includes(vertices_.begin(), vertices_.end(),
                         other.vertices_.begin(), other.vertices_.end());
}

Face Face::without(const VertexId& v) const {
    std::vector<VertexId> vs;
    vs.reserve(vertices_.size());
    for (const auto& u : vertices_) {
        if (u != v) vs.push_back(u);
    }
    Face f;
    f.vertices_ = std::move(vs); // still sorted and duplicate-free
    return f;
}

Face Face::union_with(const Face& other) const {
    std::vector<VertexId> vs;
    std::set_union(vertices_.begin(), vertices_.end(),
                   other.vertices_.begin(), other.vertices_.end(),
                   std::back_inserter(vs));
    Face f;
    f.vertices_ = std::move(vs);
    return f;
}

Face Face::intersect(const Face& other) const {
    std::vector<VertexId> vs;
    std::set_intersection(vertices_.begin(), vertices_.end(),
                          other.vertices_.begin(), other.vertices_.end(),
                          std::back_inserter(vs));
    Face f;
    f.vertices_ = std::move(vs);
    return f;
}

std::string Face::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << " ";
        os << vertices_[i].label;
    }
    os << "}";
    return os.str();
}

// --- FVector ------------------------------------------------------------------

long long FVector::f(int i) const {
    std::size_t idx = static_cast<std::size_t>(i + 1);
    if (i < -1 || idx >= counts.size()) return 0;
    return counts[idx];
}

long long FVector::euler_characteristic() const {
    long long chi = 0;
    for (int i = 0; i <= dim(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f(i);
    return chi;
}

std::string FVector::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i <= dim(); ++i) {
        if (i) os << ", ";
        os << f(i);
    }
    os << ")";
    return os.str();
}

// --- SimplicialComplex --------------------------------------------------------

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    // Drop non-maximal faces.  Sorting by size descending lets each face be
    // tested only against already-kept (larger or equal) ones.
    std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.size() > b.size();
    });
    std::vector<Face> maximal;
    for (const Face& f : faces) {
        bool contained = false;
        for (const Face& m : maximal) {
            if (m.contains_all(f)) {
                contained = true;
                break;
            }
        }
        if (!contained) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end());

    SimplicialComplex c;
    c.facets_ = std::move(maximal);
    std::set<VertexId> vs;
    for (const Face& f : c.facets_) {
        c.dimension_ = std::max(c.dimension_, f.dimension());
        vs.insert(f.vertices().begin(), f.vertices().end());
    }
    c.vertices_.assign(vs.begin(), vs.end());
    return c;
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_) {
        if (f.dimension() != dimension_) return false;
    }
    return true;
}

bool SimplicialComplex::has_vertex(const VertexId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const Face& m : facets_) {
        if (m.contains_all(f)) return true;
    }
    return false;
}

namespace {

void subsets_of_size(const std::vector<VertexId>& vs, std::size_t k,
                     std::vector<VertexId>& scratch, std::size_t start,
                     std::set<Face>& out) {
    if (scratch.size() == k) {
        std::vector<VertexId> copy = scratch;
        out.insert(Face(std::move(copy)));
        return;
    }
    for (std::size_t i = start; i + (k - scratch.size()) <= vs.size(); ++i) {
        scratch.push_back(vs[i]);
        subsets_of_size(vs, k, scratch, i + 1, out);
        scratch.pop_back();
    }
}

} // namespace

const std::vector<Face>& SimplicialComplex::faces(int k) const {
    static const std::vector<Face> kNone;
    if (k < -1 || k > dimension_) return kNone;

    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->by_dim.find(k);
    if (it != cache_->by_dim.end()) return it->second;

    std::set<Face> out;
    if (k == -1) {
        if (!facets_.empty()) out.insert(Face());
    } else {
        std::vector<VertexId> scratch;
        for (const Face& f : facets_) {
            if (f.dimension() < k) continue;
            subsets_of_size(f.vertices(), static_cast<std::size_t>(k) + 1, scratch, 0, out);
        }
    }
    auto [pos, ignored] =
        cache_->by_dim.emplace(k, std::vector<Face>(out.begin(), out.end()));
    return pos->second;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::vector<Face> out;
    for (int k = 0; k <= dimension_; ++k) {
        const auto& fs = faces(k);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    return out;
}

// --- operations -----------------------------------------------------------------

SimplicialComplex from_facets(std::vector<Face> faces) {
    return SimplicialComplex::from_facets(std::move(faces));
}

FVector f_vector(const SimplicialComplex& complex) {
    FVector fv;
    if (complex.is_empty()) return fv;
    fv.counts.resize(static_cast<std::size_t>(complex.dimension()) + 2, 0);
    fv.counts[0] = 1; // the empty face
    for (int k = 0; k <= complex.dimension(); ++k) {
        fv.counts[static_cast<std::size_t>(k) + 1] =
            static_cast<long long>(complex.faces(k).size());
    }
    return fv;
}

SimplicialComplex star(const SimplicialComplex& complex, const Face& sigma) {
    if (!complex.contains(sigma)) {
        throw FaceNotFoundError("star: " + sigma.str() + " is not a face of the complex");
    }
    std::vector<Face> fs;
    for (const Face& f : complex.facets()) {
        if (f.contains_all(sigma)) fs.push_back(f);
    }
    return from_facets(std::move(fs));
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma) {
    if (!complex.contains(sigma)) {
        throw FaceNotFoundError("link: " + sigma.str() + " is not a face of the complex");
    }
    std::vector<Face> fs;
    for (const Face& f : complex.facets()) {
        if (!f.contains_all(sigma)) continue;
        Face g = f;
        for (const VertexId& v : sigma.vertices()) g = g.without(v);
        fs.push_back(g);
    }
    return from_facets(std::move(fs));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const VertexId& v : b.vertices()) {
        if (a.has_vertex(v)) {
            throw VertexCollisionError("join: vertex '" + v.label + "' lies in both factors");
        }
    }
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    std::vector<Face> fs;
    fs.reserve(a.facet_count() * b.facet_count());
    for (const Face& f : a.facets()) {
        for (const Face& g : b.facets()) fs.push_back(f.union_with(g));
    }
    return from_facets(std::move(fs));
}

SimplicialComplex join_cone(const SimplicialComplex& complex, const VertexId& apex) {
    if (complex.has_vertex(apex)) {
        throw VertexCollisionError("cone: apex '" + apex.label + "' is already a vertex");
    }
    std::vector<Face> fs;
    fs.reserve(complex.facet_count());
    Face apex_face(std::vector<VertexId>{apex});
    for (const Face& f : complex.facets()) fs.push_back(f.union_with(apex_face));
    return from_facets(std::move(fs));
}

SimplicialComplex restriction(const SimplicialComplex& complex,
                              const std::vector<VertexId>& w) {
    std::set<VertexId> ws(w.begin(), w.end());
    std::vector<Face> fs;
    for (const Face& f : complex.facets()) {
        std::vector<VertexId> kept;
        for (const VertexId& v : f.vertices()) {
            if (ws.count(v)) kept.push_back(v);
        }
        fs.push_back(Face(std::move(kept)));
    }
    if (complex.is_empty()) return SimplicialComplex();
    return from_facets(std::move(fs));
}

SimplicialComplex complement_of(const SimplicialComplex& complex,
                                const SimplicialComplex& sub) {
    if (!complex.is_pure() || !sub.is_pure() || complex.dimension() != sub.dimension()) {
        throw PreconditionError("complement: complexes must be pure of equal dimension");
    }
    std::set<Face> inner(sub.facets().begin(), sub.facets().end());
    for (const Face& f : sub.facets()) {
        if (!std::binary_search(complex.facets().begin(), complex.facets().end(), f)) {
            throw PreconditionError("complement: facet " + f.str() +
                                    " is not a facet of the ambient complex");
        }
    }
    std::vector<Face> fs;
    for (const Face& f : complex.facets()) {
        if (!inner.count(f)) fs.push_back(f);
    }
    return from_facets(std::move(fs));
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int i) {
    if (i < -1 || i > complex.dimension()) {
        throw PreconditionError("skeleton: index out of range");
    }
    std::vector<Face> fs;
    for (const Face& f : complex.facets()) {
        if (f.dimension() <= i) {
            fs.push_back(f);
        }
    }
    const auto& top = complex.faces(i);
    fs.insert(fs.end(), top.begin(), top.end());
    return from_facets(std::move(fs));
}

namespace {

// ridge -> indices of incident facets (facet list must be pure)
std::map<Face, std::vector<int>> ridge_incidence(const std::vector<Face>& facets) {
    std::map<Face, std::vector<int>> inc;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (const VertexId& v : facets[i].vertices()) {
            inc[facets[i].without(v)].push_back(static_cast<int>(i));
        }
    }
    return inc;
}

} // namespace

SimplicialComplex boundary_complex(const SimplicialComplex& complex) {
    if (complex.is_empty()) return SimplicialComplex();
    if (!complex.is_pure()) {
        throw PreconditionError("boundary: complex must be pure");
    }
    auto inc = ridge_incidence(complex.facets());
    std::vector<Face> boundary;
    for (const auto& [ridge, facs] : inc) {
        if (facs.size() > 2) {
            throw NotPseudomanifoldError("boundary: ridge " + ridge.str() + " lies in " +
                                         std::to_string(facs.size()) + " facets");
        }
        if (facs.size() == 1) boundary.push_back(ridge);
    }
    return from_facets(std::move(boundary));
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> fs = a.facets();
    fs.insert(fs.end(), b.facets().begin(), b.facets().end());
    return from_facets(std::move(fs));
}

SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_empty() || b.is_empty()) return SimplicialComplex();

    // Enumerate faces of the complex with fewer facets, keep those lying in
    // the other, then reduce to maximal elements (top dimension first).
    const SimplicialComplex& small = a.facet_count() <= b.facet_count() ? a : b;
    const SimplicialComplex& large = a.facet_count() <= b.facet_count() ? b : a;

    int top = std::min(a.dimension(), b.dimension());
    std::vector<Face> maximal;
    for (int k = top; k >= 0; --k) {
        for (const Face& f : small.faces(k)) {
            if (!large.contains(f)) continue;
            bool absorbed = false;
            for (const Face& m : maximal) {
                if (m.contains_all(f)) {
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) maximal.push_back(f);
        }
    }
    if (maximal.empty()) {
        // Both complexes are nonempty, so the empty face is common: the
        // intersection is the (-1)-dimensional complex, not the empty one.
        maximal.push_back(Face());
    }
    return from_facets(std::move(maximal));
}

SimplicialComplex relabel(const SimplicialComplex& complex,
                          const std::map<VertexId, VertexId>& vertex_map) {
    std::set<VertexId> images;
    for (const auto& [from, to] : vertex_map) {
        if (!images.insert(to).second) {
            throw PreconditionError("relabel: map is not injective at '" + to.label + "'");
        }
    }
    std::vector<Face> fs;
    fs.reserve(complex.facet_count());
    for (const Face& f : complex.facets()) {
        std::vector<VertexId> vs;
        vs.reserve(f.size());
        for (const VertexId& v : f.vertices()) {
            auto it = vertex_map.find(v);
            vs.push_back(it == vertex_map.end() ? v : it->second);
        }
        fs.push_back(Face(std::move(vs)));
    }
    return from_facets(std::move(fs));
}

// --- facet-ridge graph -------------------------------------------------------

std::size_t FacetRidgeGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& n : adj) twice += n.size();
    return twice / 2;
}

bool FacetRidgeGraph::is_connected() const {
    if (facets.empty()) return true;
    std::vector<char> seen(facets.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == facets.size();
}

bool FacetRidgeGraph::is_single_cycle() const {
    if (facets.size() < 3) return false;
    for (const auto& n : adj) {
        if (n.size() != 2) return false;
    }
    return is_connected();
}

std::vector<int> FacetRidgeGraph::cycle_order() const {
    if (!is_single_cycle()) {
        throw PreconditionError("cycle_order: facet-ridge graph is not a single cycle");
    }
    std::vector<int> order;
    order.reserve(facets.size());
    int prev = -1;
    int cur = 0;
    do {
        order.push_back(cur);
        int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    } while (cur != 0);
    return order;
}

FacetRidgeGraph facet_ridge_graph(const SimplicialComplex& complex) {
    if (!complex.is_pure()) {
        throw PreconditionError("facet_ridge_graph: complex must be pure");
    }
    FacetRidgeGraph g;
    g.facets = complex.facets();
    g.adj.resize(g.facets.size());
    for (const auto& [ridge, facs] : ridge_incidence(g.facets)) {
        for (std::size_t i = 0; i < facs.size(); ++i) {
            for (std::size_t j = i + 1; j < facs.size(); ++j) {
                g.adj[facs[i]].push_back(facs[j]);
                g.adj[facs[j]].push_back(facs[i]);
            }
        }
    }
    for (auto& n : g.adj) {
        std::sort(n.begin(), n.end());
        n.erase(std::unique(n.begin(), n.end()), n.end());
    }
    return g;
}

// --- coloring helpers -----------------------------------------------------------

int colors_used(const Coloring& coloring) {
    std::set<int> cs;
    for (const auto& [v, c] : coloring) cs.insert(c);
    return static_cast<int>(cs.size());
}

bool is_proper_coloring(const SimplicialComplex& complex, const Coloring& coloring) {
    for (const VertexId& v : complex.vertices()) {
        if (!coloring.count(v)) return false;
    }
    for (const Face& e : complex.faces(1)) {
        if (coloring.at(e.vertices()[0]) == coloring.at(e.vertices()[1])) return false;
    }
    return true;
}

} // namespace sptri
