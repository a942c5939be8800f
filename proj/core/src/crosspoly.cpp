#include "sptri/crosspoly.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace sptri {

VertexId x_label(int i) { return VertexId("x" + std::to_string(i)); }
VertexId y_label(int i) { return VertexId("y" + std::to_string(i)); }
VertexId xp_label(int i) { return VertexId("x'" + std::to_string(i)); }
VertexId yp_label(int i) { return VertexId("y'" + std::to_string(i)); }

Face SignedFacet::to_face() const {
    std::vector<VertexId> vs;
    vs.reserve(d);
    for (int i = 1; i <= d; ++i) vs.push_back(is_y(i) ? y_label(i) : x_label(i));
    return Face(std::move(vs));
}

SignedFacet SignedFacet::from_face(const Face& f, int d) {
    SignedFacet s{d, 0};
    if (static_cast<int>(f.size()) != d) {
        throw PreconditionError("signed facet: face has wrong cardinality");
    }
    for (int i = 1; i <= d; ++i) {
        if (f.contains(y_label(i))) {
            s.ybits |= (1u << (i - 1));
        } else if (!f.contains(x_label(i))) {
            throw PreconditionError("signed facet: face misses pair " + std::to_string(i));
        }
    }
    return s;
}

SignedFacet SignedFacet::antipode() const {
    return SignedFacet{d, ~ybits & ((d == 32 ? ~0u : (1u << d) - 1u))};
}

int switch_count(const SignedFacet& f) {
    std::uint32_t diff = (f.ybits ^ (f.ybits >> 1)) & ((1u << (f.d - 1)) - 1u);
    return std::popcount(diff);
}

int cyclic_switch_count(const SignedFacet& f) {
    int s = switch_count(f);
    bool first = f.is_y(1), last = f.is_y(f.d);
    return s + (first != last ? 1 : 0);
}

namespace {

Permutation xy_antipode(int d) {
    VertexMap m;
    for (int i = 1; i <= d; ++i) {
        m[x_label(i)] = y_label(i);
        m[y_label(i)] = x_label(i);
    }
    return Permutation::from_map(m);
}

Coloring xy_coloring(int d) {
    Coloring c;
    for (int i = 1; i <= d; ++i) {
        c[x_label(i)] = i;
        c[y_label(i)] = i;
    }
    return c;
}

} // namespace

CrossPolytopeSphere cross_polytope_boundary(int d) {
    if (d < 1) throw PreconditionError("cross_polytope_boundary: d must be >= 1");
    if (d > 20) throw PreconditionError("cross_polytope_boundary: d too large");
    std::vector<Face> fs;
    fs.reserve(1u << d);
    for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
        fs.push_back(SignedFacet{d, bits}.to_face());
    }
    return CrossPolytopeSphere{d, from_facets(std::move(fs)), xy_antipode(d), xy_coloring(d)};
}

BComplex b_complex(int i, int d) {
    if (i < 0 || i > d - 1) {
        throw PreconditionError("b_complex: require 0 <= i <= d-1");
    }
    std::vector<Face> fs;
    for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
        SignedFacet s{d, bits};
        if (switch_count(s) <= i) fs.push_back(s.to_face());
    }
    return BComplex{i, d, from_facets(std::move(fs)), xy_antipode(d), xy_coloring(d)};
}

Face tau_facet(int j, int k, int d) {
    if (j < 0 || j > d || k < 1 || k > d) {
        throw PreconditionError("tau_facet: indices out of range");
    }
    std::uint32_t bits = 0;
    for (int t = 0; t < j; ++t) {
        int pos = ((k - 1 + t) % d) + 1;
        bits |= (1u << (pos - 1));
    }
    return SignedFacet{d, bits}.to_face();
}

SimplicialComplex gamma_belt(int j, int d) {
    if (j < 0 || j > d) {
        throw PreconditionError("gamma_belt: require 0 <= j <= d");
    }
    std::vector<Face> fs;
    if (j == 0 || j == d) {
        fs.push_back(tau_facet(j, 1, d));
    } else {
        for (int k = 1; k <= d; ++k) fs.push_back(tau_facet(j, k, d));
    }
    return from_facets(std::move(fs));
}

// --- shelling -------------------------------------------------------------------

ShellingCertificate verify_shelling(const SimplicialComplex& complex,
                                    const std::vector<Face>& order) {
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != complex.facets()) {
        throw PreconditionError("verify_shelling: order is not exactly the facet set");
    }

    ShellingCertificate cert;
    cert.order = order;
    cert.restrictions.reserve(order.size());

    auto is_old = [&](const Face& g, std::size_t upto) {
        for (std::size_t i = 0; i < upto; ++i) {
            if (order[i].contains_all(g)) return true;
        }
        return false;
    };

    for (std::size_t j = 0; j < order.size(); ++j) {
        if (j == 0) {
            cert.restrictions.push_back(Face());
            continue;
        }
        // restriction candidate: vertices whose opposite ridge is already
        // covered by an earlier facet
        std::vector<VertexId> r;
        for (const VertexId& v : order[j].vertices()) {
            if (is_old(order[j].without(v), j)) r.push_back(v);
        }
        Face restriction((std::vector<VertexId>(r)));
        if (r.empty()) {
            throw ShellingError("step " + std::to_string(j) + ": facet " + order[j].str() +
                                    " attaches along no ridge",
                                static_cast<int>(j));
        }
        // r must itself be new; otherwise some old face contains r and the
        // new faces do not form the interval [r, F_j].
        if (is_old(restriction, j)) {
            throw ShellingError("step " + std::to_string(j) + ": restriction " +
                                    restriction.str() + " of facet " + order[j].str() +
                                    " already lies in an earlier facet",
                                static_cast<int>(j));
        }
        cert.restrictions.push_back(restriction);
    }
    return cert;
}

std::vector<Face> belt_shelling_order(int d, int i) {
    if (i < 0 || i > d) throw PreconditionError("belt_shelling_order: 0 <= i <= d");
    std::vector<Face> order;
    order.push_back(tau_facet(0, 1, d));
    for (int j = 1; j <= i; ++j) {
        if (j == d) {
            order.push_back(tau_facet(d, 1, d));
        } else {
            for (int k = 1; k <= d; ++k) order.push_back(tau_facet(j, k, d));
        }
    }
    return order;
}

SimplicialComplex belt_union(int d, int i) {
    SimplicialComplex u = gamma_belt(0, d);
    for (int j = 1; j <= i; ++j) u = union_of(u, gamma_belt(j, d));
    return u;
}

// --- D1, D2 and the cs product ---------------------------------------------------

DiskPair build_d1_d2(int d) {
    if (d < 3) throw PreconditionError("build_d1_d2: d must be >= 3");

    SimplicialComplex base1, base2, expected_cap;
    if (d % 2 == 1) {
        int m = (d - 1) / 2;
        base1 = belt_union(d, m + 1);
        SimplicialComplex upper = gamma_belt(m, d);
        for (int k = m + 1; k <= d; ++k) upper = union_of(upper, gamma_belt(k, d));
        base2 = upper;
        expected_cap = union_of(gamma_belt(m, d), gamma_belt(m + 1, d));
    } else {
        int m = d / 2;
        // gamma = tau_{m-1}^1..tau_{m-1}^m; its antipodal image is
        // tau_{m+1}^m..tau_{m+1}^{d-1}.
        std::vector<Face> gamma_facets, neg_expected;
        for (int k = 1; k <= m; ++k) gamma_facets.push_back(tau_facet(m - 1, k, d));
        for (int k = m; k <= d - 1; ++k) neg_expected.push_back(tau_facet(m + 1, k, d));
        SimplicialComplex gamma = from_facets(gamma_facets);

        Permutation alpha = xy_antipode(d);
        SimplicialComplex neg_gamma = alpha.apply(gamma);
        if (neg_gamma != from_facets(neg_expected)) {
            throw ConstructionError("build_d1_d2: antipode of gamma disagrees with the "
                                    "tau_{m+1} description");
        }

        base1 = union_of(belt_union(d, m), neg_gamma);
        SimplicialComplex upper = gamma_belt(m, d);
        for (int k = m + 1; k <= d; ++k) upper = union_of(upper, gamma_belt(k, d));
        base2 = union_of(upper, gamma);
        expected_cap = union_of(union_of(gamma_belt(m, d), gamma), neg_gamma);
    }

    DiskPair pair;
    pair.d = d;
    pair.d1 = join_cone(base1, x_label(d + 1));
    pair.d2 = join_cone(base2, y_label(d + 1));
    pair.intersection = intersection_of(pair.d1, pair.d2);
    if (pair.intersection != expected_cap) {
        throw ConstructionError("build_d1_d2: D1 cap D2 is not the expected belt union");
    }

    // D1 cap D2 must be centrally symmetric under x_i <-> y_i.
    Permutation alpha = xy_antipode(d);
    if (alpha.apply(pair.intersection) != pair.intersection) {
        throw ConstructionError("build_d1_d2: D1 cap D2 is not centrally symmetric");
    }
    return pair;
}

std::vector<Face> verify_cycle_antipodal(const SimplicialComplex& complex,
                                         const Permutation& antipode) {
    if (!complex.is_pure()) {
        throw PreconditionError("verify_cycle_antipodal: complex must be pure");
    }
    FacetRidgeGraph g = facet_ridge_graph(complex);
    if (!g.is_single_cycle()) {
        throw CriterionError("verify_cycle_antipodal: facet-ridge graph is not a single cycle");
    }
    if (g.node_count() % 2 != 0) {
        throw CriterionError("verify_cycle_antipodal: cycle length " +
                             std::to_string(g.node_count()) + " is odd");
    }
    std::vector<int> cyc = g.cycle_order();
    std::size_t n = cyc.size() / 2;
    std::vector<Face> enumeration;
    enumeration.reserve(cyc.size());
    for (int idx : cyc) enumeration.push_back(g.facets[idx]);
    for (std::size_t i = 0; i < n; ++i) {
        if (antipode.apply(enumeration[i]) != enumeration[i + n]) {
            throw CriterionError("verify_cycle_antipodal: facet " + enumeration[i].str() +
                                 " is not antipodal to the opposite facet " +
                                 enumeration[i + n].str());
        }
    }
    return enumeration;
}

CsSphereProduct cs_sphere_product(int d) {
    if (d < 5) throw PreconditionError("cs_sphere_product: d must be >= 5");
    CsSphereProduct p;
    p.d = d;
    p.disks = build_d1_d2(d);
    p.complex = boundary_complex(union_of(p.disks.d1, p.disks.d2));

    VertexMap m;
    for (int i = 1; i <= d + 1; ++i) {
        m[x_label(i)] = y_label(i);
        m[y_label(i)] = x_label(i);
    }
    p.antipode = Permutation::from_map(m);
    if (p.complex.vertex_count() != static_cast<std::size_t>(2 * d + 2)) {
        throw ConstructionError("cs_sphere_product: expected 2d+2 vertices");
    }
    if (p.antipode.apply(p.complex) != p.complex) {
        throw ConstructionError("cs_sphere_product: boundary is not centrally symmetric");
    }
    return p;
}

Permutation cs_product_rotation(int d) {
    VertexMap m;
    for (int j = 1; j <= d; ++j) {
        int t = (j % d) + 1;
        m[x_label(j)] = x_label(t);
        m[y_label(j)] = y_label(t);
    }
    m[x_label(d + 1)] = x_label(d + 1);
    m[y_label(d + 1)] = y_label(d + 1);
    return Permutation::from_map(m);
}

Permutation cs_product_reflection(int d) {
    VertexMap m;
    for (int j = 1; j <= d; ++j) {
        m[x_label(j)] = x_label(d - j + 1);
        m[y_label(j)] = y_label(d - j + 1);
    }
    m[x_label(d + 1)] = x_label(d + 1);
    m[y_label(d + 1)] = y_label(d + 1);
    return Permutation::from_map(m);
}

// --- inductive construction -------------------------------------------------------

InductiveResult inductive_step(const InductiveInput& in) {
    for (const VertexId& apex : {in.u, in.v, in.u2, in.v2}) {
        for (const SimplicialComplex* c : {&in.a1, &in.a2, &in.b1, &in.b2}) {
            if (c->has_vertex(apex)) {
                throw VertexCollisionError("inductive_step: apex '" + apex.label +
                                           "' is not fresh");
            }
        }
    }
    if (intersection_of(in.b1, in.b2) != union_of(in.a1, in.a2)) {
        throw PreconditionError("inductive_step: B1 cap B2 != A1 cup A2");
    }

    InductiveResult r;
    r.d_prev = union_of(join_cone(in.a1, in.u), join_cone(in.a2, in.v));
    r.d_cur = union_of(join_cone(in.b1, in.u), join_cone(in.b2, in.v));
    r.c1 = union_of(join_cone(in.b1, in.u), join_cone(in.a2, in.v));
    r.c2 = union_of(join_cone(in.a1, in.u), join_cone(in.b2, in.v));
    if (intersection_of(r.c1, r.c2) != r.d_prev) {
        throw ConstructionError("inductive_step: C1 cap C2 != D(i-1,d)");
    }
    r.d_next = union_of(join_cone(r.c1, in.u2), join_cone(r.c2, in.v2));
    return r;
}

namespace {

// sigma_i of the 2d-cycle of B(1,n): x_1..x_i y_{i+1}..y_n for i <= n and
// the antipodal continuation afterwards.
Face b1_cycle_facet(int i, int n) {
    std::uint32_t bits;
    if (i <= n) {
        bits = ~0u << i; // y at positions i+1..n
    } else {
        bits = ~(~0u << (i - n)); // y at positions 1..i-n
    }
    bits &= (1u << n) - 1u;
    return SignedFacet{n, bits}.to_face();
}

} // namespace

InductiveInput disjoint_facet_seed(int n) {
    if (n < 3) throw PreconditionError("disjoint_facet_seed: n must be >= 3");
    std::vector<Face> first, second;
    for (int i = 1; i <= n + 1; ++i) first.push_back(b1_cycle_facet(i, n));
    for (int i = n + 1; i <= 2 * n; ++i) second.push_back(b1_cycle_facet(i, n));
    second.push_back(b1_cycle_facet(1, n));

    InductiveInput in;
    in.b1 = from_facets(first);
    in.b2 = from_facets(second);
    in.a1 = from_facets({b1_cycle_facet(1, n)});
    in.a2 = from_facets({b1_cycle_facet(n + 1, n)});
    in.u = VertexId("u");
    in.v = VertexId("v");
    in.u2 = VertexId("u'");
    in.v2 = VertexId("v'");
    return in;
}

InductiveInput b_family_seed(int i, int d) {
    if (i < 1 || i > d - 2) {
        throw PreconditionError("b_family_seed: require 1 <= i <= d-2");
    }
    BComplex lower = b_complex(i - 1, d);
    BComplex upper = b_complex(i, d);
    Face xd(std::vector<VertexId>{x_label(d)});
    Face yd(std::vector<VertexId>{y_label(d)});

    InductiveInput in;
    in.a1 = link(lower.complex, xd);
    in.a2 = link(lower.complex, yd);
    in.b1 = link(upper.complex, xd);
    in.b2 = link(upper.complex, yd);
    in.u = x_label(d);
    in.v = y_label(d);
    in.u2 = x_label(d + 1);
    in.v2 = y_label(d + 1);
    return in;
}

} // namespace sptri
