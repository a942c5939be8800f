#include "sptri/verify.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace sptri {

VerificationReport VerificationReport::pass(std::string check) {
    VerificationReport r;
    r.check = std::move(check);
    r.passed = true;
    return r;
}

VerificationReport VerificationReport::fail(std::string check, std::string witness) {
    VerificationReport r;
    r.check = std::move(check);
    r.passed = false;
    r.witness = std::move(witness);
    return r;
}

std::string VerificationReport::str() const {
    std::ostringstream os;
    os << check << ": " << (passed ? "pass" : "FAIL");
    if (!passed && !witness.empty()) os << " (" << witness << ")";
    for (const auto& [k, v] : metrics) os << " " << k << "=" << v;
    return os.str();
}

std::optional<Coloring> find_proper_coloring(const SimplicialComplex& complex, int max_colors) {
    const auto& vs = complex.vertices();
    std::size_t n = vs.size();
    if (n == 0) return Coloring{};

    // adjacency over vertex indices
    std::vector<std::set<int>> adj(n);
    auto index_of = [&](const VertexId& v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Face& e : complex.faces(1)) {
        int a = index_of(e.vertices()[0]);
        int b = index_of(e.vertices()[1]);
        adj[a].insert(b);
        adj[b].insert(a);
    }

    // order by degree descending (ties by label) for earlier pruning
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
        return a < b;
    });

    std::vector<int> color(n, 0);
    auto feasible = [&](int v, int c) {
        for (int w : adj[v]) {
            if (color[w] == c) return false;
        }
        return true;
    };
    std::vector<std::size_t> pos_stack;
    std::size_t pos = 0;
    while (pos < n) {
        int v = order[pos];
        int c = color[v] + 1;
        bool advanced = false;
        for (; c <= max_colors; ++c) {
            if (feasible(v, c)) {
                color[v] = c;
                ++pos;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            color[v] = 0;
            if (pos == 0) return std::nullopt;
            --pos;
        }
    }
    Coloring out;
    for (std::size_t i = 0; i < n; ++i) out[vs[i]] = color[i];
    return out;
}

VerificationReport check_balanced(const SimplicialComplex& complex,
                                  const std::optional<Coloring>& coloring) {
    int want = complex.dimension() + 1;
    VerificationReport r;
    r.check = "balanced";
    if (!complex.is_pure()) {
        return VerificationReport::fail("balanced", "complex is not pure");
    }
    if (coloring) {
        for (const VertexId& v : complex.vertices()) {
            if (!coloring->count(v)) {
                return VerificationReport::fail("balanced", "vertex " + v.label + " is uncolored");
            }
        }
        for (const Face& e : complex.faces(1)) {
            if (coloring->at(e.vertices()[0]) == coloring->at(e.vertices()[1])) {
                return VerificationReport::fail("balanced", "monochromatic edge " + e.str());
            }
        }
        int used = colors_used(*coloring);
        r.metrics["colors"] = std::to_string(used);
        if (used != want) {
            r.passed = false;
            r.witness = "uses " + std::to_string(used) + " colors, expected " + std::to_string(want);
            return r;
        }
        r.passed = true;
        return r;
    }
    if (complex.vertex_count() > 30) {
        return VerificationReport::fail("balanced",
                                        "no coloring supplied and complex too large for search");
    }
    auto found = find_proper_coloring(complex, want);
    r.metrics["colors"] = std::to_string(want);
    if (found) {
        r.passed = true;
    } else {
        r.passed = false;
        r.witness = "no proper " + std::to_string(want) + "-coloring exists";
    }
    return r;
}

VerificationReport check_cs(const SimplicialComplex& complex, const Permutation& alpha) {
    for (const VertexId& v : complex.vertices()) {
        VertexId w = alpha(v);
        if (w == v) {
            return VerificationReport::fail("cs", "fixed vertex " + v.label);
        }
        if (alpha(w) != v) {
            return VerificationReport::fail("cs", "alpha is not an involution at " + v.label);
        }
    }
    for (int k = 0; k <= complex.dimension(); ++k) {
        for (const Face& f : complex.faces(k)) {
            Face image = alpha.apply(f);
            if (!complex.contains(image)) {
                return VerificationReport::fail("cs", "face " + f.str() + " has no antipodal face");
            }
            if (image == f) {
                return VerificationReport::fail("cs", "face " + f.str() + " is fixed");
            }
        }
    }
    VerificationReport r = VerificationReport::pass("cs");
    r.metrics["vertices"] = std::to_string(complex.vertex_count());
    return r;
}

VerificationReport check_automorphism(const SimplicialComplex& complex, const Permutation& g) {
    for (const VertexId& v : complex.vertices()) {
        bool in_domain = std::binary_search(g.domain().begin(), g.domain().end(), v);
        if (!in_domain) {
            return VerificationReport::fail("automorphism", "vertex " + v.label + " outside domain");
        }
    }
    for (const Face& f : complex.facets()) {
        Face image = g.apply(f);
        if (!std::binary_search(complex.facets().begin(), complex.facets().end(), image)) {
            return VerificationReport::fail("automorphism",
                                            "facet " + f.str() + " maps to non-facet " + image.str());
        }
    }
    return VerificationReport::pass("automorphism");
}

GroupClosure group_closure(const std::vector<Permutation>& generators, long long cap) {
    if (generators.empty()) {
        throw PreconditionError("group_closure: no generators");
    }
    const auto& domain = generators.front().domain();
    for (const auto& g : generators) {
        if (g.domain() != domain) {
            throw PreconditionError("group_closure: generators act on different vertex sets");
        }
    }
    std::set<Permutation> seen;
    std::queue<Permutation> frontier;
    Permutation id = Permutation::identity(domain);
    seen.insert(id);
    frontier.push(id);
    while (!frontier.empty()) {
        Permutation cur = frontier.front();
        frontier.pop();
        for (const auto& g : generators) {
            Permutation next = g.compose(cur);
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > cap) {
                    throw CapError("group_closure: closure exceeds cap " + std::to_string(cap));
                }
                frontier.push(next);
            }
        }
    }

    // vertex orbits under the generated group
    std::size_t n = domain.size();
    std::vector<int> comp(n, -1);
    GroupClosure out;
    out.order = static_cast<long long>(seen.size());
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = ncomp;
        long long size = 1;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (const auto& g : generators) {
                VertexId image = g(domain[u]);
                std::size_t w = static_cast<std::size_t>(
                    std::lower_bound(domain.begin(), domain.end(), image) - domain.begin());
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    ++size;
                    q.push(w);
                }
            }
        }
        out.orbit_sizes.push_back(size);
        ++ncomp;
    }
    out.vertex_transitive = (ncomp == 1);
    return out;
}

VerificationReport check_closed_pseudomanifold(const SimplicialComplex& complex) {
    if (!complex.is_pure()) {
        return VerificationReport::fail("closed-pseudomanifold", "complex is not pure");
    }
    std::map<Face, int> ridge_count;
    for (const Face& f : complex.facets()) {
        for (const VertexId& v : f.vertices()) ridge_count[f.without(v)] += 1;
    }
    for (const auto& [ridge, count] : ridge_count) {
        if (count != 2) {
            return VerificationReport::fail("closed-pseudomanifold",
                                            "ridge " + ridge.str() + " lies in " +
                                                std::to_string(count) + " facets");
        }
    }
    FacetRidgeGraph g = facet_ridge_graph(complex);
    if (!g.is_connected()) {
        return VerificationReport::fail("closed-pseudomanifold", "facet-ridge graph disconnected");
    }
    VerificationReport r = VerificationReport::pass("closed-pseudomanifold");
    r.metrics["facets"] = std::to_string(complex.facet_count());
    return r;
}

VerificationReport link_homology_survey(const SimplicialComplex& complex) {
    if (!complex.is_pure()) {
        return VerificationReport::fail("link-survey", "complex is not pure");
    }
    SimplicialComplex bd = boundary_complex(complex);
    int interior_expect = complex.dimension() - 1;
    int boundary_vertices = 0;
    for (const VertexId& v : complex.vertices()) {
        SimplicialComplex lk = link(complex, Face(std::vector<VertexId>{v}));
        HomologyProfile h = reduced_homology(lk);
        bool on_boundary = bd.has_vertex(v);
        HomologyProfile expect;
        if (on_boundary) {
            ++boundary_vertices;
            expect.betti.assign(lk.dimension() + 1, 0);
            expect.torsion.assign(lk.dimension() + 1, {});
        } else {
            expect = sphere_profile(lk.dimension(), interior_expect);
        }
        if (h != expect) {
            return VerificationReport::fail(
                "link-survey", "link of " + v.label + " has homology\n" + h.str());
        }
    }
    VerificationReport r = VerificationReport::pass("link-survey");
    r.metrics["vertices"] = std::to_string(complex.vertex_count());
    r.metrics["boundary_vertices"] = std::to_string(boundary_vertices);
    return r;
}

VerificationReport skeleton_contained(const SimplicialComplex& complex,
                                      const SimplicialComplex& sub, int i) {
    for (const VertexId& v : sub.vertices()) {
        if (!complex.has_vertex(v)) {
            return VerificationReport::fail("skeleton-contained",
                                            "vertex " + v.label + " missing from target");
        }
    }
    for (int k = 0; k <= std::min(i, sub.dimension()); ++k) {
        for (const Face& f : sub.faces(k)) {
            if (!complex.contains(f)) {
                return VerificationReport::fail("skeleton-contained",
                                                "face " + f.str() + " is missing");
            }
        }
    }
    VerificationReport r = VerificationReport::pass("skeleton-contained");
    r.metrics["dimension"] = std::to_string(i);
    return r;
}

} // namespace sptri
