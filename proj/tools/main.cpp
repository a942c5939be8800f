#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "certify.hpp"
#include "sptri/balanced.hpp"
#include "sptri/crosspoly.hpp"
#include "sptri/homology.hpp"
#include "sptri/io.hpp"

namespace fs = std::filesystem;
using namespace sptri;

namespace {

struct GlobalOpts {
    std::string out_dir = ".";
    std::string format = "json";
};

std::string write_complex(const GlobalOpts& g, const io::NamedComplex& nc) {
    io::Format f = io::format_from_string(g.format);
    fs::create_directories(g.out_dir);
    std::string path =
        (fs::path(g.out_dir) / (nc.name + (f == io::Format::json ? ".json" : ".txt"))).string();
    io::write_file(path, nc, f);
    std::cout << path << "  f = " << f_vector(nc.complex).str() << "\n";
    return path;
}

int run_build(const GlobalOpts& g, const std::string& target, int d, int i, int j,
              bool emit_intermediates) {
    if (target == "cross-polytope") {
        auto c = cross_polytope_boundary(d);
        write_complex(g, {"cross-polytope-d" + std::to_string(d), c.complex, c.coloring,
                          c.antipode.to_map()});
    } else if (target == "b-complex") {
        auto b = b_complex(i, d);
        write_complex(g, {"b-complex-i" + std::to_string(i) + "-d" + std::to_string(d),
                          b.complex, b.coloring, b.antipode.to_map()});
    } else if (target == "gamma-belt") {
        auto belt = gamma_belt(j, d);
        write_complex(g, {"gamma-belt-j" + std::to_string(j) + "-d" + std::to_string(d), belt,
                          std::nullopt, std::nullopt});
    } else if (target == "cs-product") {
        auto p = cs_sphere_product(d);
        write_complex(g, {"cs-product-d" + std::to_string(d), p.complex, std::nullopt,
                          p.antipode.to_map()});
        if (emit_intermediates) {
            write_complex(g, {"cs-product-d" + std::to_string(d) + "-ball1", p.disks.d1,
                              std::nullopt, std::nullopt});
            write_complex(g, {"cs-product-d" + std::to_string(d) + "-ball2", p.disks.d2,
                              std::nullopt, std::nullopt});
            write_complex(g, {"cs-product-d" + std::to_string(d) + "-waist",
                              p.disks.intersection, std::nullopt, std::nullopt});
        }
    } else if (target == "balanced-product") {
        auto s = build_sigma(d);
        write_complex(g, {"balanced-product-d" + std::to_string(d), s.complex, s.coloring,
                          std::nullopt});
        if (emit_intermediates) {
            write_complex(g, {"balanced-product-d" + std::to_string(d) + "-gamma",
                              s.gamma.complex, s.gamma.coloring, std::nullopt});
            write_complex(g, {"balanced-product-d" + std::to_string(d) + "-delta1",
                              s.gamma.delta1, std::nullopt, std::nullopt});
            write_complex(g, {"balanced-product-d" + std::to_string(d) + "-delta2", s.delta2,
                              std::nullopt, std::nullopt});
            write_complex(g, {"balanced-product-d" + std::to_string(d) + "-tube", s.tube,
                              std::nullopt, std::nullopt});
        }
    } else if (target == "inductive") {
        auto out = inductive_step(b_family_seed(i, d));
        write_complex(g, {"inductive-i" + std::to_string(i) + "-d" + std::to_string(d) + "-next",
                          out.d_next, std::nullopt, std::nullopt});
        if (emit_intermediates) {
            write_complex(g, {"inductive-i" + std::to_string(i) + "-d" + std::to_string(d) +
                                  "-prev",
                              out.d_prev, std::nullopt, std::nullopt});
            write_complex(g, {"inductive-i" + std::to_string(i) + "-d" + std::to_string(d) +
                                  "-boundary",
                              boundary_complex(out.d_next), std::nullopt, std::nullopt});
        }
    } else {
        std::cerr << "unknown build target '" << target << "'\n";
        return 1;
    }
    return 0;
}

void report_manifest(const GlobalOpts& g, cli::RunManifest& m) {
    fs::create_directories(g.out_dir);
    std::string stem;
    for (char c : m.command) stem += (c == ' ') ? '-' : c;
    for (const auto& [k, v] : m.params) stem += "-" + k + v;
    std::string path = (fs::path(g.out_dir) / (stem + ".manifest.json")).string();
    std::ofstream out(path);
    out << m.to_json().dump(2) << "\n";
    for (const auto& c : m.checks) {
        std::cout << "  " << c.str() << "\n";
    }
    std::cout << (m.all_passed() ? "PASS " : "FAIL ") << m.command;
    for (const auto& [k, v] : m.params) std::cout << " --" << k << " " << v;
    std::cout << "  -> " << path << "\n";
}

int run_certify(const GlobalOpts& g, const std::string& target, int d, int i, int max_d,
                int jobs) {
    std::vector<cli::RunManifest> manifests;
    if (target == "cs-product") {
        manifests.push_back(cli::certify_cs_product(d));
    } else if (target == "balanced-product") {
        manifests.push_back(cli::certify_balanced_product(d));
    } else if (target == "b-complex") {
        manifests.push_back(cli::certify_b_complex(d));
    } else if (target == "shelling") {
        manifests.push_back(cli::certify_shelling(d, i));
    } else if (target == "inductive") {
        manifests.push_back(cli::certify_inductive(i, d));
    } else if (target == "all") {
        manifests = cli::certify_all(max_d, jobs);
    } else {
        std::cerr << "unknown certify target '" << target << "'\n";
        return 1;
    }
    bool ok = true;
    for (auto& m : manifests) {
        report_manifest(g, m);
        ok = ok && m.all_passed();
    }
    if (target == "all") {
        std::cout << (ok ? "PASS" : "FAIL") << " all (" << manifests.size() << " targets)\n";
    }
    return ok ? 0 : 1;
}

int run_convert(const std::string& in, const std::string& out, const std::string& format) {
    auto nc = io::read_file(in);
    io::Format f = io::format_from_string(format);
    if (f == io::Format::plain && (nc.coloring || nc.involution)) {
        std::cerr << "warning: plain format drops coloring/involution metadata\n";
    }
    io::write_file(out, nc, f);
    return 0;
}

int run_homology(const std::string& file, bool unreduced, bool verify_transforms) {
    auto nc = io::read_file(file);
    if (verify_transforms) {
        // re-run each boundary Smith normal form with the U*M*V check on
        auto data = boundary_matrices(nc.complex);
        for (const auto& mtx : data.matrices) {
            SmithOptions o;
            o.verify_transforms = true;
            smith_normal_form(mtx, o);
        }
    }
    HomologyOptions opts;
    opts.reduced = !unreduced;
    std::cout << reduced_homology(nc.complex, opts).str() << "\n";
    return 0;
}

Coloring coloring_from(const io::NamedComplex& nc, const std::string& coloring_file) {
    if (!coloring_file.empty()) {
        auto other = io::read_file(coloring_file);
        if (!other.coloring) throw MalformedInputError("no coloring in " + coloring_file);
        return *other.coloring;
    }
    if (!nc.coloring) throw MalformedInputError("complex file carries no coloring");
    return *nc.coloring;
}

int run_verify(const std::string& check, const std::string& file, const std::string& coloring_file,
               const std::string& involution_file, const std::string& against, int i) {
    auto nc = io::read_file(file);
    VerificationReport report;
    try {
        if (check == "balanced") {
            std::optional<Coloring> coloring;
            if (!coloring_file.empty() || nc.coloring) {
                coloring = coloring_from(nc, coloring_file);
            }
            report = check_balanced(nc.complex, coloring);
        } else if (check == "cs") {
            VertexMap inv;
            if (!involution_file.empty()) {
                auto other = io::read_file(involution_file);
                if (!other.involution) {
                    throw MalformedInputError("no involution in " + involution_file);
                }
                inv = *other.involution;
            } else if (nc.involution) {
                inv = *nc.involution;
            } else {
                throw MalformedInputError("complex file carries no involution");
            }
            report = check_cs(nc.complex, Permutation::from_map(inv));
        } else if (check == "pseudomanifold") {
            report = check_closed_pseudomanifold(nc.complex);
        } else if (check == "links") {
            report = link_homology_survey(nc.complex);
        } else if (check == "skeleton") {
            auto other = io::read_file(against);
            report = skeleton_contained(nc.complex, other.complex, i);
        } else if (check == "isomorphic") {
            auto other = io::read_file(against);
            auto iso = find_isomorphism(nc.complex, other.complex);
            report = iso ? VerificationReport::pass("isomorphic")
                         : VerificationReport::fail("isomorphic", "no isomorphism exists");
        } else {
            std::cerr << "unknown check '" << check << "'\n";
            return 1;
        }
    } catch (const BudgetError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    nlohmann::json j;
    j["check"] = report.check;
    j["passed"] = report.passed;
    if (!report.witness.empty()) j["witness"] = report.witness;
    if (!report.metrics.empty()) j["metrics"] = report.metrics;
    std::cout << j.dump(2) << "\n";
    return report.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constructions and certificates for small sphere-product triangulations"};
    app.require_subcommand(1);
    app.fallthrough(); // allow the global --out/--format after a subcommand

    GlobalOpts g;
    app.add_option("--out", g.out_dir, "output directory")->capture_default_str();
    app.add_option("--format", g.format, "output format: plain or json")
        ->check(CLI::IsMember({"plain", "json"}))
        ->capture_default_str();

    int d = 5, i = 1, j = 1, max_d = 6, jobs = 1;
    bool emit_intermediates = false, unreduced = false, verify_transforms = false;
    std::string target, in_file, out_file, convert_format = "plain";
    std::string check, coloring_file, involution_file, against;

    auto* build = app.add_subcommand("build", "construct a complex and write it to disk");
    build->add_option("target", target,
                      "cross-polytope | b-complex | gamma-belt | cs-product | "
                      "balanced-product | inductive")
        ->required();
    build->add_option("--d", d, "dimension parameter");
    build->add_option("--i", i, "switch bound / inductive index");
    build->add_option("--j", j, "belt index");
    build->add_flag("--emit-intermediates", emit_intermediates,
                    "also write the intermediate complexes");

    auto* certify = app.add_subcommand("certify", "run the invariant suite for a target");
    certify->add_option("target", target,
                        "cs-product | balanced-product | b-complex | shelling | inductive | all")
        ->required();
    certify->add_option("--d", d, "dimension parameter");
    certify->add_option("--i", i, "belt / inductive index");
    certify->add_option("--max-d", max_d, "largest dimension for 'all'");
    certify->add_option("--jobs", jobs, "concurrent targets for 'all'");

    auto* convert = app.add_subcommand("convert", "convert between the canonical formats");
    convert->add_option("input", in_file)->required()->check(CLI::ExistingFile);
    convert->add_option("output", out_file)->required();
    convert->add_option("--format", convert_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}))
        ->required();

    auto* homology = app.add_subcommand("homology", "integral homology of a complex file");
    homology->add_option("input", in_file)->required()->check(CLI::ExistingFile);
    homology->add_flag("--unreduced", unreduced, "report unreduced homology");
    homology->add_flag("--verify-transforms", verify_transforms,
                       "re-verify the Smith normal form transforms");

    auto* verify = app.add_subcommand("verify", "run one certification check on a file");
    verify->add_option("check", check,
                       "balanced | cs | pseudomanifold | links | skeleton | isomorphic")
        ->required();
    verify->add_option("input", in_file)->required()->check(CLI::ExistingFile);
    verify->add_option("--coloring", coloring_file, "json file supplying the coloring");
    verify->add_option("--involution", involution_file, "json file supplying the involution");
    verify->add_option("--against", against, "second complex for skeleton/isomorphic");
    verify->add_option("--i", i, "skeleton dimension");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return run_build(g, target, d, i, j, emit_intermediates);
        if (certify->parsed()) return run_certify(g, target, d, i, max_d, jobs);
        if (convert->parsed()) return run_convert(in_file, out_file, convert_format);
        if (homology->parsed()) return run_homology(in_file, unreduced, verify_transforms);
        if (verify->parsed()) {
            return run_verify(check, in_file, coloring_file, involution_file, against, i);
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
