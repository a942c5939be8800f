#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>

#include "sptri/verify.hpp"

namespace sptri {

namespace {

struct Side {
    std::vector<VertexId> vertices;           // sorted
    std::vector<std::uint64_t> adj;           // adjacency masks
    std::vector<std::string> signature;       // per-vertex invariant
    std::unordered_set<std::uint64_t> facet_masks;
    std::vector<std::uint64_t> facets;

    int index_of(const VertexId& v) const {
        return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                                vertices.begin());
    }
};

std::uint64_t face_mask(const Side& s, const Face& f) {
    std::uint64_t m = 0;
    for (const VertexId& v : f.vertices()) m |= (1ull << s.index_of(v));
    return m;
}

Side make_side(const SimplicialComplex& c) {
    Side s;
    s.vertices = c.vertices();
    if (s.vertices.size() > 62) {
        throw PreconditionError("find_isomorphism: too many vertices");
    }
    s.adj.assign(s.vertices.size(), 0);
    for (const Face& e : c.faces(1)) {
        int a = s.index_of(e.vertices()[0]);
        int b = s.index_of(e.vertices()[1]);
        s.adj[a] |= (1ull << b);
        s.adj[b] |= (1ull << a);
    }
    for (const Face& f : c.facets()) {
        std::uint64_t m = face_mask(s, f);
        s.facets.push_back(m);
        s.facet_masks.insert(m);
    }
    // invariant: (degree, f-vector of the link), rendered as a string key
    for (const VertexId& v : s.vertices) {
        SimplicialComplex lk = link(c, Face(std::vector<VertexId>{v}));
        std::string key = std::to_string(std::popcount(s.adj[s.index_of(v)])) + "|";
        if (!lk.is_empty()) key += f_vector(lk).str();
        s.signature.push_back(std::move(key));
    }
    return s;
}

struct Search {
    const Side& a;
    const Side& b;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> image;      // a-index -> b-index or -1
    std::uint64_t used_b = 0;
    std::vector<int> order;      // processing order of a's vertices

    Search(const Side& a_, const Side& b_, std::uint64_t budget_) : a(a_), b(b_), budget(budget_) {
        image.assign(a.vertices.size(), -1);
    }

    bool consistent(int va, int vb) const {
        if (a.signature[va] != b.signature[vb]) return false;
        // adjacency to the already-mapped vertices must match exactly
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (image[i] < 0) continue;
            bool ea = (a.adj[va] >> i) & 1;
            bool eb = (b.adj[vb] >> image[i]) & 1;
            if (ea != eb) return false;
        }
        return true;
    }

    // every fully-mapped facet of a must land on a facet of b
    bool facets_ok(int va) const {
        std::uint64_t mapped = 0;
        for (std::size_t i = 0; i < image.size(); ++i) {
            if (image[i] >= 0) mapped |= (1ull << i);
        }
        for (std::uint64_t fm : a.facets) {
            if (!((fm >> va) & 1)) continue;
            if ((fm & mapped) != fm) continue;
            std::uint64_t target = 0;
            for (std::size_t i = 0; i < image.size(); ++i) {
                if ((fm >> i) & 1) target |= (1ull << image[i]);
            }
            if (!b.facet_masks.count(target)) return false;
        }
        return true;
    }

    bool run(std::size_t pos) {
        if (++nodes > budget) {
            throw BudgetError("find_isomorphism: search budget exceeded");
        }
        if (pos == order.size()) return true;
        int va = order[pos];
        for (std::size_t vb = 0; vb < b.vertices.size(); ++vb) {
            if ((used_b >> vb) & 1) continue;
            if (!consistent(va, static_cast<int>(vb))) continue;
            image[va] = static_cast<int>(vb);
            used_b |= (1ull << vb);
            if (facets_ok(va) && run(pos + 1)) return true;
            image[va] = -1;
            used_b &= ~(1ull << vb);
        }
        return false;
    }
};

} // namespace

std::optional<VertexMap> find_isomorphism(const SimplicialComplex& a,
                                          const SimplicialComplex& b,
                                          const IsomorphismOptions& options) {
    if (!a.is_pure() || !b.is_pure()) {
        throw PreconditionError("find_isomorphism: complexes must be pure");
    }
    if (a.vertex_count() != b.vertex_count() || a.facet_count() != b.facet_count() ||
        a.dimension() != b.dimension()) {
        return std::nullopt;
    }
    if (f_vector(a) != f_vector(b)) return std::nullopt;

    Side sa = make_side(a);
    Side sb = make_side(b);

    // the signature multisets must agree
    {
        std::multiset<std::string> ma(sa.signature.begin(), sa.signature.end());
        std::multiset<std::string> mb(sb.signature.begin(), sb.signature.end());
        if (ma != mb) return std::nullopt;
    }

    Search search(sa, sb, options.budget);

    // Process vertices so that each one (after the first) is adjacent to an
    // already-processed vertex when possible; start from the rarest
    // signature class for early pruning.
    std::map<std::string, int> class_size;
    for (const auto& s : sa.signature) class_size[s] += 1;
    std::vector<char> placed(sa.vertices.size(), 0);
    std::uint64_t placed_mask = 0;
    for (std::size_t step = 0; step < sa.vertices.size(); ++step) {
        int best = -1;
        bool best_touch = false;
        for (std::size_t v = 0; v < sa.vertices.size(); ++v) {
            if (placed[v]) continue;
            bool touch = (sa.adj[v] & placed_mask) != 0;
            if (best < 0 || (touch && !best_touch) ||
                (touch == best_touch &&
                 class_size[sa.signature[v]] < class_size[sa.signature[best]])) {
                best = static_cast<int>(v);
                best_touch = touch;
            }
        }
        search.order.push_back(best);
        placed[best] = 1;
        placed_mask |= (1ull << best);
    }

    if (!search.run(0)) return std::nullopt;

    VertexMap out;
    for (std::size_t i = 0; i < sa.vertices.size(); ++i) {
        out[sa.vertices[i]] = sb.vertices[search.image[i]];
    }
    // soundness: re-verify the facet bijection before reporting
    SimplicialComplex mapped = relabel(a, out);
    if (mapped != b) {
        throw ConstructionError("find_isomorphism: internal verification failed");
    }
    return out;
}

} // namespace sptri
