#include "certify.hpp"

#include <chrono>
#include <future>
#include <set>

#include "sptri/balanced.hpp"
#include "sptri/crosspoly.hpp"
#include "sptri/homology.hpp"

namespace sptri::cli {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

VerificationReport expect(std::string name, bool condition, std::string witness) {
    return condition ? VerificationReport::pass(std::move(name))
                     : VerificationReport::fail(std::move(name), std::move(witness));
}

VerificationReport named(VerificationReport r, const std::string& name) {
    r.check = name;
    return r;
}

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

} // namespace

RunManifest certify_cs_product(int d) {
    RunManifest m;
    m.command = "certify cs-product";
    m.params["d"] = std::to_string(d);
    auto t0 = Clock::now();

    auto p = cs_sphere_product(d);
    m.timings_ms["build"] = ms_since(t0);

    m.checks.push_back(expect("vertex-count", p.complex.vertex_count() == std::size_t(2 * d + 2),
                              "expected " + std::to_string(2 * d + 2) + " vertices"));

    auto th = Clock::now();
    auto h = reduced_homology(p.complex);
    m.timings_ms["homology"] = ms_since(th);
    auto want = sphere_product_profile(2, d - 3);
    m.checks.push_back(expect("homology", h == want && h.torsion_free(), h.str()));

    m.checks.push_back(named(check_cs(p.complex, p.antipode), "cs-involution"));
    m.checks.push_back(named(
        skeleton_contained(p.complex, cross_polytope_boundary(d + 1).complex, 2), "2-skeleton"));
    m.checks.push_back(named(check_closed_pseudomanifold(p.complex), "closed-pseudomanifold"));

    auto tl = Clock::now();
    m.checks.push_back(named(link_homology_survey(p.complex), "vertex-links"));
    m.timings_ms["links"] = ms_since(tl);

    if (d % 2 == 1) {
        auto rot = cs_product_rotation(d);
        auto refl = cs_product_reflection(d);
        m.checks.push_back(named(check_automorphism(p.complex, rot), "rotation-automorphism"));
        m.checks.push_back(named(check_automorphism(p.complex, refl), "reflection-automorphism"));
        auto closure = group_closure({rot, refl, p.antipode});
        m.checks.push_back(expect("symmetry-order-4d", closure.order == 4ll * d,
                                  "closure has order " + std::to_string(closure.order)));
        // the two cone apexes form their own orbit, so the action is
        // transitive away from them but not on the full vertex set
        std::vector<long long> sizes = closure.orbit_sizes;
        std::sort(sizes.begin(), sizes.end());
        m.checks.push_back(expect("orbits-2d-and-apexes",
                                  sizes == std::vector<long long>{2, 2ll * d},
                                  "unexpected orbit structure"));
    } else {
        // for even d the belt rotation does not extend to the product
        m.checks.push_back(expect("rotation-breaks-for-even-d",
                                  !check_automorphism(p.complex, cs_product_rotation(d)).passed,
                                  "rotation unexpectedly preserves the facets"));
    }
    m.timings_ms["total"] = ms_since(t0);
    return m;
}

RunManifest certify_balanced_product(int d) {
    RunManifest m;
    m.command = "certify balanced-product";
    m.params["d"] = std::to_string(d);
    auto t0 = Clock::now();

    auto s = build_sigma(d);
    m.timings_ms["build"] = ms_since(t0);

    auto fv = f_vector(s.complex);
    m.checks.push_back(expect("f0", fv.f(0) == 4ll * d, fv.str()));
    if (d >= 4) {
        m.checks.push_back(expect("f1", fv.f(1) == 4ll * d * (2 * d - 3), fv.str()));
        m.checks.push_back(expect(
            "top-facets", fv.f(d - 1) == (d + 2ll) * (1 << d) - 8ll * d, fv.str()));
    } else {
        // d = 3: two disjoint octahedron boundaries
        auto comps = components(s.complex);
        bool ok = comps.size() == 2;
        auto oct = cross_polytope_boundary(3).complex;
        for (const auto& c : comps) ok = ok && find_isomorphism(c, oct).has_value();
        m.checks.push_back(expect("two-octahedra", ok, "components are not two octahedra"));
    }

    m.checks.push_back(named(check_balanced(s.complex, s.coloring), "balanced"));

    auto th = Clock::now();
    auto h = reduced_homology(s.complex);
    m.timings_ms["homology"] = ms_since(th);
    auto want = sphere_product_profile(2, d - 3);
    m.checks.push_back(expect("homology", h == want && h.torsion_free(), h.str()));

    for (const auto& comp : components(s.complex)) {
        m.checks.push_back(named(check_closed_pseudomanifold(comp), "closed-pseudomanifold"));
    }
    auto tl = Clock::now();
    m.checks.push_back(named(link_homology_survey(s.complex), "vertex-links"));
    m.timings_ms["links"] = ms_since(tl);

    if (d >= 4) {
        auto sym = sigma_symmetry_generators(d);
        m.checks.push_back(named(check_automorphism(s.complex, sym.d_swap), "automorphism-D"));
        m.checks.push_back(named(check_automorphism(s.complex, sym.e_reflect), "automorphism-E"));
        m.checks.push_back(named(check_automorphism(s.complex, sym.r_rotate), "automorphism-R"));
        m.checks.push_back(expect("dihedral-relation",
                                  sym.e_reflect.compose(sym.r_rotate) ==
                                      sym.r_rotate.inverse().compose(sym.e_reflect.inverse()),
                                  "E'R' != R'^-1 E'^-1"));
        Permutation power = sym.r_rotate;
        for (int k = 1; k < d; ++k) power = power.compose(sym.r_rotate);
        m.checks.push_back(expect("rotation-power-is-swap", power == sym.d_swap,
                                  "R'^d differs from D"));
        auto closure = group_closure({sym.d_swap, sym.e_reflect, sym.r_rotate});
        m.checks.push_back(expect("symmetry-order-4d", closure.order == 4ll * d,
                                  "closure has order " + std::to_string(closure.order)));
    }
    m.timings_ms["total"] = ms_since(t0);
    return m;
}

RunManifest certify_b_complex(int d) {
    RunManifest m;
    m.command = "certify b-complex";
    m.params["d"] = std::to_string(d);
    auto t0 = Clock::now();

    auto ambient = cross_polytope_boundary(d);
    for (int i = 0; i <= d - 2; ++i) {
        auto b = b_complex(i, d);
        m.checks.push_back(named(skeleton_contained(b.complex, ambient.complex, i),
                                 "skeleton-" + std::to_string(i)));
        auto comp = complement_of(ambient.complex, b.complex);
        m.checks.push_back(expect(
            "complement-iso-" + std::to_string(i),
            find_isomorphism(comp, b_complex(d - i - 2, d).complex).has_value(),
            "complement of B(" + std::to_string(i) + "," + std::to_string(d) +
                ") is not B(" + std::to_string(d - i - 2) + "," + std::to_string(d) + ")"));
    }
    if (d <= 6) {
        for (int i = 1; i <= d - 3; ++i) {
            auto b = b_complex(i, d);
            auto h = reduced_homology(b.complex);
            m.checks.push_back(expect("homology-" + std::to_string(i),
                                      h == sphere_profile(d - 1, i), h.str()));
            auto hb = reduced_homology(boundary_complex(b.complex));
            m.checks.push_back(expect("boundary-homology-" + std::to_string(i),
                                      hb == sphere_product_profile(i, d - i - 2), hb.str()));
        }
    }
    m.timings_ms["total"] = ms_since(t0);
    return m;
}

RunManifest certify_shelling(int d, int i) {
    RunManifest m;
    m.command = "certify shelling";
    m.params["d"] = std::to_string(d);
    m.params["i"] = std::to_string(i);
    auto t0 = Clock::now();

    auto complex = belt_union(d, i);
    auto order = belt_shelling_order(d, i);
    try {
        auto cert = verify_shelling(complex, order);
        bool restrictions_ok = true;
        std::string witness;
        std::string reported;
        std::size_t idx = 1;
        for (int j = 1; j <= i && restrictions_ok; ++j) {
            for (int k = 1; k <= d; ++k, ++idx) {
                Face want = j == 1 ? Face({y_label(k)})
                                   : Face({y_label(k), y_label((k + j - 2) % d + 1)});
                if (!reported.empty()) reported += " ";
                reported += cert.restrictions[idx].str();
                if (cert.restrictions[idx] != want) {
                    restrictions_ok = false;
                    witness = "restriction of tau_" + std::to_string(j) + "^" +
                              std::to_string(k) + " is " + cert.restrictions[idx].str();
                    break;
                }
            }
        }
        m.checks.push_back(expect("shelling-accepted", true, ""));
        auto report = expect("restriction-faces", restrictions_ok, witness);
        report.metrics["restrictions"] = reported;
        m.checks.push_back(report);
    } catch (const ShellingError& e) {
        m.checks.push_back(expect("shelling-accepted", false, e.what()));
    }
    m.timings_ms["total"] = ms_since(t0);
    return m;
}

RunManifest certify_inductive(int i, int d) {
    RunManifest m;
    m.command = "certify inductive";
    m.params["i"] = std::to_string(i);
    m.params["d"] = std::to_string(d);
    auto t0 = Clock::now();

    auto out = inductive_step(b_family_seed(i, d));
    m.checks.push_back(expect("rebuilds-previous", out.d_prev == b_complex(i - 1, d).complex,
                              "D(i-1,d) differs from B(i-1,d)"));
    m.checks.push_back(expect("rebuilds-current", out.d_cur == b_complex(i, d).complex,
                              "D(i,d) differs from B(i,d)"));
    m.checks.push_back(expect("rebuilds-next", out.d_next == b_complex(i, d + 1).complex,
                              "D(i,d+1) differs from B(i,d+1)"));

    auto seeded = inductive_step(disjoint_facet_seed(d - 1));
    auto h = reduced_homology(boundary_complex(seeded.d_next));
    m.checks.push_back(expect("disjoint-seed-homology", h == sphere_product_profile(1, d - 2),
                              h.str()));
    m.timings_ms["total"] = ms_since(t0);
    return m;
}

std::vector<RunManifest> certify_all(int max_d, int jobs) {
    std::vector<std::function<RunManifest()>> tasks;
    for (int d = 5; d <= max_d; ++d) tasks.push_back([d] { return certify_cs_product(d); });
    for (int d = 3; d <= max_d; ++d) tasks.push_back([d] { return certify_balanced_product(d); });
    for (int d = 3; d <= max_d; ++d) tasks.push_back([d] { return certify_b_complex(d); });
    for (int d = 5; d <= std::min(max_d, 7); ++d) {
        for (int i = 1; i <= (d + 1) / 2; ++i) {
            tasks.push_back([d, i] { return certify_shelling(d, i); });
        }
    }
    for (auto [i, d] : std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 5}}) {
        if (d + 1 <= std::max(max_d, 6)) {
            tasks.push_back([i, d] { return certify_inductive(i, d); });
        }
    }

    std::vector<RunManifest> out;
    if (jobs <= 1) {
        for (auto& t : tasks) out.push_back(t());
        return out;
    }
    std::vector<std::future<RunManifest>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, t));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

} // namespace sptri::cli
