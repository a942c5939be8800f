#include "sptri/balanced.hpp"

#include <algorithm>
#include <set>

namespace sptri {

namespace {

Coloring full_coloring(int d) {
    Coloring c;
    for (int j = 1; j <= d; ++j) {
        c[x_label(j)] = j;
        c[y_label(j)] = j;
        c[xp_label(j)] = j;
        c[yp_label(j)] = j;
    }
    return c;
}

std::set<Face> facet_set(const SimplicialComplex& c) {
    return std::set<Face>(c.facets().begin(), c.facets().end());
}

} // namespace

PolytopePiece cross_polytope_piece(const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                   const Face& sigma, const Coloring& coloring) {
    int d = static_cast<int>(pairs.size());
    if (d < 1 || d > 20) throw PreconditionError("cross_polytope_piece: bad rank");

    VertexMap antipode_map;
    for (const auto& [a, b] : pairs) {
        if (a == b) throw PreconditionError("cross_polytope_piece: degenerate pair");
        antipode_map[a] = b;
        antipode_map[b] = a;
        if (coloring.at(a) != coloring.at(b)) {
            throw PreconditionError("cross_polytope_piece: pair " + a.label + "," + b.label +
                                    " is not monochromatic");
        }
    }
    if (antipode_map.size() != static_cast<std::size_t>(2 * d)) {
        throw PreconditionError("cross_polytope_piece: pairs overlap");
    }

    std::vector<Face> fs;
    fs.reserve(1u << d);
    for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
        std::vector<VertexId> vs;
        vs.reserve(d);
        for (int i = 0; i < d; ++i) {
            vs.push_back((bits >> i) & 1 ? pairs[i].second : pairs[i].first);
        }
        fs.push_back(Face(std::move(vs)));
    }

    PolytopePiece piece;
    piece.d = d;
    piece.complex = from_facets(std::move(fs));
    piece.sigma = sigma;
    piece.antipode = Permutation::from_map(antipode_map);
    for (const VertexId& v : piece.complex.vertices()) piece.coloring[v] = coloring.at(v);

    for (const auto& [a, b] : pairs) {
        if (!(sigma.contains(a) != sigma.contains(b))) {
            throw PreconditionError("cross_polytope_piece: sigma must pick one vertex per pair");
        }
    }
    return piece;
}

GluedComplex glued_from_piece(const PolytopePiece& piece) {
    GluedComplex g;
    g.d = piece.d;
    g.complex = piece.complex;
    g.coloring = piece.coloring;
    g.a_vertices = piece.sigma.vertices();
    g.neg_a_vertices = piece.neg_sigma().vertices();
    return g;
}

namespace {

void check_edge_usable(const GluedComplex& g, const Face& e, const char* which) {
    if (e.dimension() != 1) {
        throw PreconditionError(std::string(which) + " must be an edge");
    }
    if (!g.complex.contains(e)) {
        throw PreconditionError(std::string(which) + " " + e.str() + " is not an edge here");
    }
    if (g.a_side().contains(e) || g.neg_a_side().contains(e)) {
        throw PreconditionError(std::string(which) + " " + e.str() +
                                " lies in a distinguished region");
    }
}

} // namespace

GluedComplex diamond_connected_sum(const GluedComplex& glued, const Face& e1,
                                   const PolytopePiece& piece, const Face& e2,
                                   const VertexMap& ident) {
    check_edge_usable(glued, e1, "e1");
    if (e2.dimension() != 1 || !piece.complex.contains(e2)) {
        throw PreconditionError("e2 " + e2.str() + " is not an edge of the piece");
    }
    if (piece.sigma.contains_all(e2) || piece.neg_sigma().contains_all(e2)) {
        throw PreconditionError("e2 " + e2.str() + " lies in a distinguished facet");
    }

    SimplicialComplex st1 = star(glued.complex, e1);
    SimplicialComplex st2 = star(piece.complex, e2);

    // ident: V(st(e1)) -> V(st(e2)), bijective, color-preserving, and
    // preserving the sigma side.
    std::vector<VertexId> dom1 = st1.vertices(), dom2 = st2.vertices();
    if (ident.size() != dom1.size()) {
        throw GluingError("ident must cover exactly the star of e1");
    }
    std::set<VertexId> image;
    std::set<VertexId> a_set(glued.a_vertices.begin(), glued.a_vertices.end());
    for (const auto& [from, to] : ident) {
        if (!std::binary_search(dom1.begin(), dom1.end(), from)) {
            throw GluingError("ident key " + from.label + " is not in the star of e1");
        }
        if (!std::binary_search(dom2.begin(), dom2.end(), to)) {
            throw GluingError("ident image " + to.label + " is not in the star of e2");
        }
        if (glued.coloring.at(from) != piece.coloring.at(to)) {
            throw PreconditionError("ident is not color-preserving at " + from.label);
        }
        bool from_a = a_set.count(from) > 0;
        bool to_a = piece.sigma.contains(to);
        if (from_a != to_a) {
            throw GluingError("ident does not respect the sigma sides at " + from.label);
        }
        image.insert(to);
    }
    if (image.size() != dom2.size()) {
        throw GluingError("ident is not a bijection onto the star of e2");
    }

    // the edges themselves must correspond
    if (Face({ident.at(e1.vertices()[0]), ident.at(e1.vertices()[1])}) != e2) {
        throw PreconditionError("ident does not carry e1 to e2 (color mismatch)");
    }

    // the star boundaries must be simplicially isomorphic under ident
    if (relabel(boundary_complex(st1), ident) != boundary_complex(st2)) {
        throw GluingError("ident is not an isomorphism of the star boundaries");
    }

    // piece labels outside the glued star must be fresh
    VertexMap back;
    for (const auto& [from, to] : ident) back[to] = from;
    for (const VertexId& v : piece.complex.vertices()) {
        if (!back.count(v) && glued.complex.has_vertex(v)) {
            throw GluingError("piece vertex " + v.label + " collides with the glued complex");
        }
    }

    std::set<Face> removed1 = facet_set(st1), removed2 = facet_set(st2);
    std::vector<Face> fs;
    for (const Face& f : glued.complex.facets()) {
        if (!removed1.count(f)) fs.push_back(f);
    }
    for (const Face& f : piece.complex.facets()) {
        if (removed2.count(f)) continue;
        std::vector<VertexId> vs;
        for (const VertexId& v : f.vertices()) {
            auto it = back.find(v);
            vs.push_back(it == back.end() ? v : it->second);
        }
        fs.push_back(Face(std::move(vs)));
    }

    GluedComplex out;
    out.d = glued.d;
    out.complex = from_facets(std::move(fs));
    if (out.complex.contains(e1)) {
        throw ConstructionError("diamond_connected_sum: deleted edge " + e1.str() + " survived");
    }
    out.coloring = glued.coloring;
    for (const VertexId& v : out.complex.vertices()) {
        if (!out.coloring.count(v)) out.coloring[v] = piece.coloring.at(v);
    }

    auto accumulate = [&](const std::vector<VertexId>& old_side, const Face& piece_sigma) {
        std::set<VertexId> side(old_side.begin(), old_side.end());
        for (const VertexId& v : piece_sigma.vertices()) {
            auto it = back.find(v);
            side.insert(it == back.end() ? v : it->second);
        }
        std::vector<VertexId> kept;
        for (const VertexId& v : side) {
            if (out.complex.has_vertex(v)) kept.push_back(v);
        }
        return kept;
    };
    out.a_vertices = accumulate(glued.a_vertices, piece.sigma);
    out.neg_a_vertices = accumulate(glued.neg_a_vertices, piece.neg_sigma());
    return out;
}

GluedComplex diamond_handle_addition(const GluedComplex& glued, const Face& e1, const Face& e2,
                                     const VertexMap& phi) {
    check_edge_usable(glued, e1, "e1");
    check_edge_usable(glued, e2, "e2");
    if (e1 == e2) throw PreconditionError("handle addition needs two distinct edges");

    SimplicialComplex st1 = star(glued.complex, e1);
    SimplicialComplex st2 = star(glued.complex, e2);
    std::vector<VertexId> dom1 = st1.vertices(), dom2 = st2.vertices();

    for (const VertexId& v : dom1) {
        if (std::binary_search(dom2.begin(), dom2.end(), v)) {
            throw HandleError("stars of the two edges share the vertex " + v.label);
        }
    }
    if (phi.size() != dom1.size()) {
        throw GluingError("phi must cover exactly the star of e1");
    }
    std::set<VertexId> image;
    std::set<VertexId> a_set(glued.a_vertices.begin(), glued.a_vertices.end());
    for (const auto& [from, to] : phi) {
        if (!std::binary_search(dom1.begin(), dom1.end(), from) ||
            !std::binary_search(dom2.begin(), dom2.end(), to)) {
            throw GluingError("phi is not a map from st(e1) to st(e2)");
        }
        if (glued.coloring.at(from) != glued.coloring.at(to)) {
            throw PreconditionError("phi is not color-preserving at " + from.label);
        }
        if ((a_set.count(from) > 0) != (a_set.count(to) > 0)) {
            throw GluingError("phi does not respect the sigma sides at " + from.label);
        }
        image.insert(to);
    }
    if (image.size() != dom2.size()) {
        throw GluingError("phi is not a bijection onto the star of e2");
    }
    if (relabel(st1, phi) != st2) {
        throw GluingError("phi is not an isomorphism of the two stars");
    }

    // no v may share a neighbor with phi(v)
    for (const auto& [from, to] : phi) {
        SimplicialComplex lk_from = link(glued.complex, Face(std::vector<VertexId>{from}));
        SimplicialComplex lk_to = link(glued.complex, Face(std::vector<VertexId>{to}));
        for (const VertexId& w : lk_from.vertices()) {
            if (w == to) {
                throw HandleError("vertex " + from.label + " is adjacent to its image " + to.label);
            }
            if (lk_to.has_vertex(w)) {
                throw HandleError("vertices " + from.label + " and " + to.label +
                                  " share the neighbor " + w.label);
            }
        }
    }

    std::set<Face> removed = facet_set(st1);
    for (const Face& f : st2.facets()) removed.insert(f);
    std::vector<Face> fs;
    for (const Face& f : glued.complex.facets()) {
        if (removed.count(f)) continue;
        std::vector<VertexId> vs;
        for (const VertexId& v : f.vertices()) {
            auto it = phi.find(v);
            vs.push_back(it == phi.end() ? v : it->second);
        }
        fs.push_back(Face(std::move(vs)));
    }

    GluedComplex out;
    out.d = glued.d;
    out.complex = from_facets(std::move(fs));
    if (out.complex.contains(e2)) {
        throw ConstructionError("diamond_handle_addition: deleted edge " + e2.str() + " survived");
    }
    out.coloring = glued.coloring;

    auto filter_side = [&](const std::vector<VertexId>& side) {
        std::vector<VertexId> kept;
        for (const VertexId& v : side) {
            if (out.complex.has_vertex(v)) kept.push_back(v);
        }
        return kept;
    };
    out.a_vertices = filter_side(glued.a_vertices);
    out.neg_a_vertices = filter_side(glued.neg_a_vertices);
    return out;
}

VertexMap map_f(int d) {
    if (d < 3) throw PreconditionError("map_f: d must be >= 3");
    VertexMap m;
    for (int i = 1; i <= d - 1; ++i) {
        m[x_label(i)] = xp_label(i + 1);
        m[y_label(i)] = yp_label(i + 1);
    }
    m[x_label(d)] = yp_label(1);
    m[y_label(d)] = xp_label(1);
    return m;
}

Face sigma_facet(int i, int d) {
    if (i < 1 || i > 2 * d) throw PreconditionError("sigma_facet: index out of range");
    std::uint32_t bits;
    if (i <= d) {
        bits = (~0u << i) & ((1u << d) - 1u); // y at positions i+1..d
    } else {
        bits = ~(~0u << (i - d)) & ((1u << d) - 1u); // y at positions 1..i-d
    }
    return SignedFacet{d, bits}.to_face();
}

PolytopePiece gamma_piece(int d, int i) {
    if (d < 3) throw PreconditionError("gamma_piece: d must be >= 3");
    if (i < 1 || i > 2 * d) throw PreconditionError("gamma_piece: index out of range");

    VertexMap f = map_f(d);
    Face sigma = sigma_facet(i, d);
    Face f_sigma;
    {
        std::vector<VertexId> vs;
        for (const VertexId& v : sigma.vertices()) vs.push_back(f.at(v));
        f_sigma = Face(std::move(vs));
    }

    Coloring colors = full_coloring(d);
    // pair the color-c vertex of sigma with the color-c vertex of f(sigma);
    // this is the unique pairing under which the piece is balanced
    std::vector<std::pair<VertexId, VertexId>> pairs(d, {VertexId(), VertexId()});
    for (const VertexId& v : sigma.vertices()) pairs[colors.at(v) - 1].first = v;
    for (const VertexId& v : f_sigma.vertices()) pairs[colors.at(v) - 1].second = v;

    return cross_polytope_piece(pairs, sigma, colors);
}

std::vector<Face> deleted_edge_list(int d) {
    if (d < 3) throw PreconditionError("deleted_edge_list: d must be >= 3");
    std::vector<Face> es;
    es.reserve(2 * d);
    for (int i = 1; i <= d - 2; ++i) es.push_back(Face({xp_label(i + 1), y_label(i + 2)}));
    es.push_back(Face({xp_label(d), x_label(1)}));
    es.push_back(Face({yp_label(1), x_label(2)}));
    for (int i = 1; i <= d - 2; ++i) es.push_back(Face({yp_label(i + 1), x_label(i + 2)}));
    es.push_back(Face({yp_label(d), y_label(1)}));
    es.push_back(Face({xp_label(1), y_label(2)}));
    return es;
}

GammaComplex build_gamma(int d) {
    if (d < 3) throw PreconditionError("build_gamma: d must be >= 3");

    GammaComplex g;
    g.d = d;
    g.coloring = full_coloring(d);
    g.deleted_edges = deleted_edge_list(d);
    for (int i = 1; i <= 2 * d; ++i) g.pieces.push_back(gamma_piece(d, i));

    // consecutive pieces overlap exactly in the star of the edge deleted
    // between them (cyclically; the last pair is the handle-addition seam)
    for (int i = 1; i <= 2 * d; ++i) {
        const PolytopePiece& cur = g.pieces[i - 1];
        const PolytopePiece& next = g.pieces[i % (2 * d)];
        const Face& e = g.deleted_edges[i - 1];
        if (!cur.complex.contains(e) || !next.complex.contains(e)) {
            throw GluingError("build_gamma: edge " + e.str() + " is missing from piece " +
                              std::to_string(i) + " or its successor");
        }
        SimplicialComplex st_cur = star(cur.complex, e);
        if (st_cur != star(next.complex, e)) {
            throw GluingError("build_gamma: the stars of " + e.str() +
                              " differ between consecutive pieces");
        }
        if (intersection_of(cur.complex, next.complex) != st_cur) {
            throw GluingError("build_gamma: pieces " + std::to_string(i) + "," +
                              std::to_string(i % (2 * d) + 1) + " overlap beyond the star of " +
                              e.str());
        }
    }

    std::set<Face> fs;
    for (const PolytopePiece& piece : g.pieces) {
        for (const Face& f : piece.complex.facets()) {
            bool keep = true;
            for (const Face& e : g.deleted_edges) {
                if (f.contains_all(e)) {
                    keep = false;
                    break;
                }
            }
            if (keep) fs.insert(f);
        }
    }
    g.complex = from_facets(std::vector<Face>(fs.begin(), fs.end()));

    for (const Face& e : g.deleted_edges) {
        if (g.complex.contains(e)) {
            throw ConstructionError("build_gamma: deleted edge " + e.str() + " is still a face");
        }
    }

    std::vector<Face> delta1_facets;
    for (int i = 1; i <= 2 * d; ++i) delta1_facets.push_back(sigma_facet(i, d));
    g.delta1 = from_facets(delta1_facets);
    g.f_delta1 = relabel(g.delta1, map_f(d));
    for (const Face& f : g.delta1.facets()) {
        if (!std::binary_search(g.complex.facets().begin(), g.complex.facets().end(), f)) {
            throw ConstructionError("build_gamma: facet " + f.str() + " of Delta_1 was lost");
        }
    }
    for (const Face& f : g.f_delta1.facets()) {
        if (!std::binary_search(g.complex.facets().begin(), g.complex.facets().end(), f)) {
            throw ConstructionError("build_gamma: facet " + f.str() + " of f(Delta_1) was lost");
        }
    }
    if (g.complex.vertex_count() != static_cast<std::size_t>(4 * d)) {
        throw ConstructionError("build_gamma: expected 4d vertices");
    }
    return g;
}

SigmaComplex build_sigma(int d) {
    SigmaComplex s;
    s.d = d;
    s.gamma = build_gamma(d);
    s.coloring = s.gamma.coloring;

    s.tube = complement_of(s.gamma.complex, union_of(s.gamma.delta1, s.gamma.f_delta1));
    if (intersection_of(s.tube, s.gamma.delta1) != boundary_complex(s.gamma.delta1)) {
        throw ConstructionError("build_sigma: N cap Delta_1 != boundary of Delta_1");
    }
    if (intersection_of(s.tube, s.gamma.f_delta1) != boundary_complex(s.gamma.f_delta1)) {
        throw ConstructionError("build_sigma: N cap f(Delta_1) != boundary of f(Delta_1)");
    }

    CrossPolytopeSphere ambient = cross_polytope_boundary(d);
    s.delta2 = complement_of(ambient.complex, s.gamma.delta1);
    s.f_delta2 = relabel(s.delta2, map_f(d));

    s.complex = union_of(union_of(s.delta2, s.tube), s.f_delta2);
    if (s.complex.vertex_count() != static_cast<std::size_t>(4 * d)) {
        throw ConstructionError("build_sigma: expected 4d vertices");
    }
    if (!is_proper_coloring(s.complex, s.coloring)) {
        throw ConstructionError("build_sigma: inherited coloring is not proper");
    }
    return s;
}

SigmaSymmetry sigma_symmetry_generators(int d) {
    if (d < 4) throw PreconditionError("sigma_symmetry_generators: d must be >= 4");
    VertexMap dm, em, rm;
    for (int j = 1; j <= d; ++j) {
        dm[x_label(j)] = y_label(j);
        dm[y_label(j)] = x_label(j);
        dm[xp_label(j)] = yp_label(j);
        dm[yp_label(j)] = xp_label(j);

        em[x_label(j)] = xp_label(d - j + 1);
        em[y_label(j)] = yp_label(d - j + 1);
        em[xp_label(j)] = x_label(d - j + 1);
        em[yp_label(j)] = y_label(d - j + 1);

        if (j < d) {
            rm[x_label(j)] = x_label(j + 1);
            rm[y_label(j)] = y_label(j + 1);
            rm[xp_label(j)] = xp_label(j + 1);
            rm[yp_label(j)] = yp_label(j + 1);
        }
    }
    rm[x_label(d)] = y_label(1);
    rm[y_label(d)] = x_label(1);
    rm[xp_label(d)] = yp_label(1);
    rm[yp_label(d)] = xp_label(1);

    SigmaSymmetry sym;
    sym.d_swap = Permutation::from_map(dm);
    sym.e_reflect = Permutation::from_map(em);
    sym.r_rotate = Permutation::from_map(rm);
    return sym;
}

} // namespace sptri
