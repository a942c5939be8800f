#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sptri/balanced.hpp"
#include "sptri/homology.hpp"
#include "sptri/verify.hpp"

using namespace sptri;

namespace {

// connected components of a pure complex via its facet-ridge graph
std::vector<SimplicialComplex> components(const SimplicialComplex& c) {
    auto g = facet_ridge_graph(c);
    std::vector<int> comp(g.facets.size(), -1);
    int n = 0;
    for (std::size_t s = 0; s < g.facets.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = n;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (int w : g.adj[u]) {
                if (comp[w] < 0) {
                    comp[w] = n;
                    stack.push_back(static_cast<std::size_t>(w));
                }
            }
        }
        ++n;
    }
    std::vector<std::vector<Face>> buckets(n);
    for (std::size_t i = 0; i < g.facets.size(); ++i) buckets[comp[i]].push_back(g.facets[i]);
    std::vector<SimplicialComplex> out;
    for (auto& b : buckets) out.push_back(from_facets(std::move(b)));
    return out;
}

// the corrected non-edge ledger of Sigma: all same-color pairs, the 2d
// deleted edges, and the 2d pairs {v, f(antipode(v))} for unprimed v
std::set<Face> expected_non_edges(int d) {
    std::set<Face> out;
    for (int c = 1; c <= d; ++c) {
        std::vector<VertexId> cls = {x_label(c), y_label(c), xp_label(c), yp_label(c)};
        for (std::size_t i = 0; i < cls.size(); ++i) {
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                out.insert(Face({cls[i], cls[j]}));
            }
        }
    }
    for (const Face& e : deleted_edge_list(d)) out.insert(e);
    VertexMap f = map_f(d);
    for (int c = 1; c <= d; ++c) {
        out.insert(Face({x_label(c), f.at(y_label(c))}));
        out.insert(Face({y_label(c), f.at(x_label(c))}));
    }
    return out;
}

std::set<Face> non_edges(const SimplicialComplex& c) {
    std::set<Face> edges(c.faces(1).begin(), c.faces(1).end());
    std::set<Face> out;
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            Face e({vs[i], vs[j]});
            if (!edges.count(e)) out.insert(e);
        }
    }
    return out;
}

} // namespace

TEST_CASE("the label map f") {
    SECTION("images of the distinguished facets") {
        int d = 5;
        VertexMap f = map_f(d);
        Face sigma1 = sigma_facet(1, d);
        std::vector<VertexId> image;
        for (const VertexId& v : sigma1.vertices()) image.push_back(f.at(v));
        REQUIRE(Face(std::move(image)) ==
                Face({xp_label(1), xp_label(2), yp_label(3), yp_label(4), yp_label(5)}));
    }
    SECTION("f carries Delta_1 onto the primed copy of B(1,d)") {
        for (int d : {4, 5}) {
            std::vector<Face> facets;
            for (int i = 1; i <= 2 * d; ++i) facets.push_back(sigma_facet(i, d));
            auto delta1 = from_facets(facets);
            auto primed = relabel(delta1, map_f(d));

            VertexMap prime_only;
            for (int j = 1; j <= d; ++j) {
                prime_only[x_label(j)] = xp_label(j);
                prime_only[y_label(j)] = yp_label(j);
            }
            REQUIRE(primed == relabel(delta1, prime_only));
            auto iso = find_isomorphism(primed, delta1);
            REQUIRE(iso.has_value());
        }
    }
    SECTION("f shifts colors by one, cyclically") {
        int d = 4;
        VertexMap f = map_f(d);
        Coloring colors;
        for (int j = 1; j <= d; ++j) {
            colors[x_label(j)] = j;
            colors[y_label(j)] = j;
            colors[xp_label(j)] = j;
            colors[yp_label(j)] = j;
        }
        for (const auto& [from, to] : f) {
            REQUIRE(colors.at(to) == colors.at(from) % d + 1);
        }
    }
}

TEST_CASE("gamma pieces") {
    SECTION("pairing matches colors, as forced by balancedness") {
        auto piece = gamma_piece(3, 1);
        // sigma_1 = {x1, y2, y3}, f(sigma_1) = {x'1, x'2, y'3}
        REQUIRE(piece.sigma == Face({x_label(1), y_label(2), y_label(3)}));
        REQUIRE(piece.antipode(x_label(1)) == xp_label(1));
        REQUIRE(piece.antipode(y_label(2)) == xp_label(2));
        REQUIRE(piece.antipode(y_label(3)) == yp_label(3));
    }
    SECTION("sigma and f(sigma) are antipodal facets of the piece") {
        for (int d : {3, 4}) {
            for (int i = 1; i <= 2 * d; ++i) {
                auto piece = gamma_piece(d, i);
                REQUIRE(piece.complex.contains(piece.sigma));
                REQUIRE(piece.complex.contains(piece.neg_sigma()));
                REQUIRE(piece.antipode.apply(piece.sigma) == piece.neg_sigma());
                REQUIRE(piece.sigma.intersect(piece.neg_sigma()).empty());
            }
        }
    }
    SECTION("every piece is balanced under the inherited coloring") {
        for (int i = 1; i <= 8; ++i) {
            auto piece = gamma_piece(4, i);
            REQUIRE(check_balanced(piece.complex, piece.coloring).passed);
        }
    }
    SECTION("pieces are cross-polytope spheres") {
        auto piece = gamma_piece(4, 3);
        auto h = reduced_homology(piece.complex);
        REQUIRE(h == sphere_profile(3, 3));
        REQUIRE(check_cs(piece.complex, piece.antipode).passed);
    }
}

TEST_CASE("diamond-connected sum of two disjoint octahedra") {
    // two 3-cross-polytopes on disjoint labels, glued along the stars of
    // the matching edges {x1,y2} and {X1,Y2}
    Coloring colors;
    std::vector<std::pair<VertexId, VertexId>> pairs1, pairs2;
    for (int j = 1; j <= 3; ++j) {
        pairs1.push_back({x_label(j), y_label(j)});
        VertexId xc("X" + std::to_string(j)), yc("Y" + std::to_string(j));
        pairs2.push_back({xc, yc});
        colors[x_label(j)] = j;
        colors[y_label(j)] = j;
        colors[xc] = j;
        colors[yc] = j;
    }
    auto p1 = cross_polytope_piece(pairs1, Face({x_label(1), x_label(2), x_label(3)}), colors);
    auto p2 = cross_polytope_piece(pairs2, Face::of({"X1", "X2", "X3"}), colors);
    Face e1({x_label(1), y_label(2)});
    Face e2 = Face::of({"X1", "Y2"});
    VertexMap ident = {{x_label(1), VertexId("X1")},
                       {y_label(2), VertexId("Y2")},
                       {x_label(3), VertexId("X3")},
                       {y_label(3), VertexId("Y3")}};

    SECTION("the sum is a balanced 2-sphere on 8 vertices") {
        auto glued = diamond_connected_sum(glued_from_piece(p1), e1, p2, e2, ident);
        REQUIRE(glued.complex.vertex_count() == 8);
        REQUIRE(reduced_homology(glued.complex) == sphere_profile(2, 2));
        REQUIRE(check_balanced(glued.complex, glued.coloring).passed);
        REQUIRE(check_closed_pseudomanifold(glued.complex).passed);
        // neither deleted edge survives
        REQUIRE_FALSE(glued.complex.contains(e1));

        // the distinguished region restricts to the connected sum of the
        // two distinguished simplices: a 2-ball made of two triangles
        auto a = glued.a_side();
        REQUIRE(a.facet_count() == 2);
        REQUIRE(a.dimension() == 2);
        REQUIRE(boundary_complex(a).facet_count() == 4);
    }
    SECTION("edges inside a distinguished facet are rejected") {
        Face bad({x_label(1), x_label(2)});
        REQUIRE_THROWS_AS(
            diamond_connected_sum(glued_from_piece(p1), bad, p2, e2, ident),
            PreconditionError);
    }
    SECTION("color mismatch is rejected") {
        Face e2_bad = Face::of({"X1", "Y3"}); // colors {1,3}, not {1,2}
        // positionally valid identification of the two stars, but y2 (color
        // 2) would land on Y3 (color 3)
        VertexMap ident_bad = {{x_label(1), VertexId("X1")},
                               {y_label(2), VertexId("Y3")},
                               {x_label(3), VertexId("X2")},
                               {y_label(3), VertexId("Y2")}};
        REQUIRE_THROWS_AS(
            diamond_connected_sum(glued_from_piece(p1), e1, p2, e2_bad, ident_bad),
            PreconditionError);
    }
    SECTION("an ident that is no star isomorphism is rejected") {
        // swapping the sides of the color-3 pair breaks the sigma-side rule
        VertexMap twisted = {{x_label(1), VertexId("X1")},
                             {y_label(2), VertexId("Y2")},
                             {x_label(3), VertexId("Y3")},
                             {y_label(3), VertexId("X3")}};
        REQUIRE_THROWS_AS(
            diamond_connected_sum(glued_from_piece(p1), e1, p2, e2, twisted),
            GluingError);
    }
}

TEST_CASE("diamond-handle addition guards") {
    // in one octahedron, any two edge stars share vertices
    auto piece = gamma_piece(3, 1);
    auto glued = glued_from_piece(piece);
    Face e1({x_label(1), yp_label(3)});
    Face e2({xp_label(2), y_label(3)});
    VertexMap phi;
    REQUIRE_THROWS_AS(diamond_handle_addition(glued, e1, e2, phi), HandleError);
}

namespace {

VertexId alias_label(const VertexId& v, int i) {
    return VertexId(v.label + "@" + std::to_string(i));
}

PolytopePiece alias_piece(const PolytopePiece& p, int i) {
    VertexMap m;
    for (const VertexId& v : p.complex.vertices()) m[v] = alias_label(v, i);
    PolytopePiece out;
    out.d = p.d;
    out.complex = relabel(p.complex, m);
    out.sigma = Face([&] {
        std::vector<VertexId> vs;
        for (const VertexId& v : p.sigma.vertices()) vs.push_back(m.at(v));
        return vs;
    }());
    VertexMap anti;
    for (const auto& [a, b] : p.antipode.to_map()) anti[m.at(a)] = m.at(b);
    out.antipode = Permutation::from_map(anti);
    for (const auto& [v, c] : p.coloring) out.coloring[m.at(v)] = c;
    return out;
}

} // namespace

TEST_CASE("chaining the pieces through the general diamond operations") {
    // Rebuild Gamma on disjoint piece labels, gluing consecutive pieces
    // with explicit identification maps and closing with a handle addition;
    // the result must be isomorphic to the direct shared-label build.
    for (int d : {3, 4}) {
        std::vector<Face> edges = deleted_edge_list(d);
        std::vector<PolytopePiece> pieces;
        for (int i = 1; i <= 2 * d; ++i) pieces.push_back(gamma_piece(d, i));

        VertexMap current; // underlying label -> label in the chain
        auto chain = glued_from_piece(alias_piece(pieces[0], 1));
        for (const VertexId& v : pieces[0].complex.vertices()) current[v] = alias_label(v, 1);

        for (int i = 2; i <= 2 * d; ++i) {
            const Face& e = edges[i - 2];
            PolytopePiece next = alias_piece(pieces[i - 1], i);
            Face e1({current.at(e.vertices()[0]), current.at(e.vertices()[1])});
            Face e2({alias_label(e.vertices()[0], i), alias_label(e.vertices()[1], i)});

            VertexMap ident;
            auto junction = star(pieces[i - 2].complex, e).vertices();
            for (const VertexId& w : junction) ident[current.at(w)] = alias_label(w, i);

            chain = diamond_connected_sum(chain, e1, next, e2, ident);

            std::set<VertexId> junction_set(junction.begin(), junction.end());
            for (const VertexId& w : pieces[i - 1].complex.vertices()) {
                if (!junction_set.count(w)) current[w] = alias_label(w, i);
            }

            // every partial chain is a balanced sphere in which each edge
            // between the two distinguished sides links a (d-3)-sphere
            REQUIRE(reduced_homology(chain.complex) == sphere_profile(d - 1, d - 1));
            REQUIRE(check_balanced(chain.complex, chain.coloring).passed);
            std::set<VertexId> a_side(chain.a_vertices.begin(), chain.a_vertices.end());
            std::set<VertexId> b_side(chain.neg_a_vertices.begin(), chain.neg_a_vertices.end());
            for (const Face& edge : chain.complex.faces(1)) {
                bool mixed = (a_side.count(edge.vertices()[0]) && b_side.count(edge.vertices()[1])) ||
                             (b_side.count(edge.vertices()[0]) && a_side.count(edge.vertices()[1]));
                if (!mixed) continue;
                auto lk = link(chain.complex, edge);
                REQUIRE(reduced_homology(lk) == sphere_profile(lk.dimension(), d - 3));
                if (d >= 4) {
                    REQUIRE(check_closed_pseudomanifold(lk).passed);
                }
            }
        }

        // close the cycle: identify the two surviving copies of the last
        // deleted edge's star
        const Face& e = edges[2 * d - 1];
        auto junction = star(pieces[0].complex, e).vertices();
        Face e_late({current.at(e.vertices()[0]), current.at(e.vertices()[1])});
        Face e_early({alias_label(e.vertices()[0], 1), alias_label(e.vertices()[1], 1)});
        VertexMap phi;
        for (const VertexId& w : junction) phi[current.at(w)] = alias_label(w, 1);
        chain = diamond_handle_addition(chain, e_late, e_early, phi);

        REQUIRE(chain.complex.vertex_count() == static_cast<std::size_t>(4 * d));
        auto direct = build_gamma(d);
        REQUIRE(chain.complex.facet_count() == direct.complex.facet_count());
        auto iso = find_isomorphism(chain.complex, direct.complex);
        REQUIRE(iso.has_value());
    }
}

TEST_CASE("mixed edges away from the deleted edge may link longer cycles") {
    // In the sum of the first two pieces for d = 4, the edge {x'1, y4} lies
    // in the glued boundary sphere but misses the deleted edge {x'2, y3};
    // both of its piece links lose the facet {x'2, y3}, so the glued link
    // is a hexagon rather than the 4-cycle boundary of a 2-cross-polytope.
    int d = 4;
    auto edges = deleted_edge_list(d);
    auto p1 = gamma_piece(d, 1);
    auto p2 = gamma_piece(d, 2);
    std::set<Face> fs;
    for (const Face& f : p1.complex.facets()) {
        if (!f.contains_all(edges[0])) fs.insert(f);
    }
    for (const Face& f : p2.complex.facets()) {
        if (!f.contains_all(edges[0])) fs.insert(f);
    }
    auto sum = from_facets(std::vector<Face>(fs.begin(), fs.end()));
    auto lk = link(sum, Face({xp_label(1), y_label(4)}));
    REQUIRE(lk.vertex_count() == 6);
    REQUIRE(facet_ridge_graph(lk).is_single_cycle());
    REQUIRE_FALSE(find_isomorphism(lk, cross_polytope_boundary(2).complex).has_value());
}

TEST_CASE("the chained complex Gamma") {
    SECTION("face counts of the chain") {
        for (int d : {3, 4, 5}) {
            auto g = build_gamma(d);
            auto fv = f_vector(g.complex);
            REQUIRE(fv.f(0) == 4 * d);
            REQUIRE(fv.f(1) == 4ll * d * (2 * d - 3));
            REQUIRE(fv.f(d - 1) == static_cast<long long>(d) * (1 << d));
        }
    }
    SECTION("both copies of B(1,d) survive") {
        auto g = build_gamma(4);
        for (const Face& f : g.delta1.facets()) REQUIRE(g.complex.contains(f));
        for (const Face& f : g.f_delta1.facets()) REQUIRE(g.complex.contains(f));
        REQUIRE(find_isomorphism(g.delta1, b_complex(1, 4).complex).has_value());
    }
    SECTION("no deleted edge is a face") {
        auto g = build_gamma(4);
        for (const Face& e : g.deleted_edges) REQUIRE_FALSE(g.complex.contains(e));
    }
    SECTION("Gamma is a closed balanced pseudomanifold") {
        for (int d : {3, 4}) {
            auto g = build_gamma(d);
            REQUIRE(check_closed_pseudomanifold(g.complex).passed);
            REQUIRE(check_balanced(g.complex, g.coloring).passed);
        }
    }
}

TEST_CASE("the balanced sphere product Sigma") {
    SECTION("d = 3: two disjoint octahedron boundaries") {
        auto s = build_sigma(3);
        auto fv = f_vector(s.complex);
        REQUIRE(fv.f(0) == 12);
        REQUIRE(fv.f(1) == 24);
        REQUIRE(fv.f(2) == 16);
        auto comps = components(s.complex);
        REQUIRE(comps.size() == 2);
        auto oct = cross_polytope_boundary(3);
        for (const auto& comp : comps) {
            REQUIRE(find_isomorphism(comp, oct.complex).has_value());
        }
        REQUIRE(reduced_homology(s.complex) == sphere_product_profile(2, 0));
    }
    SECTION("d = 4: S^2 x S^1 with 16 vertices") {
        auto s = build_sigma(4);
        REQUIRE(s.complex.vertex_count() == 16);
        auto h = reduced_homology(s.complex);
        REQUIRE(h == sphere_product_profile(2, 1));
        REQUIRE(check_balanced(s.complex, s.coloring).passed);
        REQUIRE(check_closed_pseudomanifold(s.complex).passed);
        REQUIRE(link_homology_survey(s.complex).passed);
    }
    SECTION("d = 5: face numbers and S^2 x S^2 homology") {
        auto s = build_sigma(5);
        auto fv = f_vector(s.complex);
        REQUIRE(fv.f(0) == 20);
        REQUIRE(fv.f(1) == 140);
        REQUIRE(fv.f(4) == 184);
        auto h = reduced_homology(s.complex);
        REQUIRE(h == sphere_product_profile(2, 2));
        REQUIRE(h.torsion_free());
        REQUIRE(check_balanced(s.complex, s.coloring).passed);
    }
    SECTION("the tube meets each copy of Delta_1 in its boundary") {
        auto s = build_sigma(4);
        REQUIRE(intersection_of(s.tube, s.gamma.delta1) == boundary_complex(s.gamma.delta1));
        REQUIRE(intersection_of(s.tube, s.gamma.f_delta1) ==
                boundary_complex(s.gamma.f_delta1));
    }
    SECTION("missing-edge ledger") {
        for (int d : {4, 5}) {
            auto s = build_sigma(d);
            REQUIRE(non_edges(s.complex) == expected_non_edges(d));
        }
    }
}

TEST_CASE("symmetries of Sigma") {
    SECTION("generator orders and the dihedral relation") {
        for (int d : {4, 5}) {
            auto sym = sigma_symmetry_generators(d);
            REQUIRE(sym.d_swap.order() == 2);
            REQUIRE(sym.e_reflect.order() == 2);
            REQUIRE(sym.r_rotate.order() == 2 * d);
            auto lhs = sym.e_reflect.compose(sym.r_rotate);
            auto rhs = sym.r_rotate.inverse().compose(sym.e_reflect.inverse());
            REQUIRE(lhs == rhs);
        }
    }
    SECTION("generators are automorphisms of Sigma") {
        for (int d : {4, 5}) {
            auto s = build_sigma(d);
            auto sym = sigma_symmetry_generators(d);
            REQUIRE(check_automorphism(s.complex, sym.d_swap).passed);
            REQUIRE(check_automorphism(s.complex, sym.e_reflect).passed);
            REQUIRE(check_automorphism(s.complex, sym.r_rotate).passed);
        }
    }
    SECTION("the three generators generate the dihedral group of order 4d") {
        // R' is a 2d-cycle on each of the two label blocks, so its d-th
        // power is exactly the x <-> y swap: D lies inside <E',R'> and the
        // closure is dihedral of order 4d, not a direct product with Z_2.
        for (int d : {4, 5}) {
            auto sym = sigma_symmetry_generators(d);
            Permutation power = sym.r_rotate;
            for (int k = 1; k < d; ++k) power = power.compose(sym.r_rotate);
            REQUIRE(power == sym.d_swap);
            auto closure = group_closure({sym.d_swap, sym.e_reflect, sym.r_rotate});
            REQUIRE(closure.order == 4 * d);
        }
    }
    SECTION("each generator fixes the non-edge set setwise") {
        int d = 4;
        auto s = build_sigma(d);
        auto sym = sigma_symmetry_generators(d);
        auto missing = non_edges(s.complex);
        for (const Permutation* g : {&sym.d_swap, &sym.e_reflect, &sym.r_rotate}) {
            std::set<Face> image;
            for (const Face& e : missing) image.insert(g->apply(e));
            REQUIRE(image == missing);
        }
    }
    SECTION("swapping two vertices of different colors is no automorphism") {
        auto s = build_sigma(4);
        VertexMap m;
        for (const VertexId& v : s.complex.vertices()) m[v] = v;
        m[x_label(1)] = x_label(2);
        m[x_label(2)] = x_label(1);
        REQUIRE_FALSE(check_automorphism(s.complex, Permutation::from_map(m)).passed);
    }
}
