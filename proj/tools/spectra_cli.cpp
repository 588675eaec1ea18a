// spectra: exact finite duality toolkit, command-line front end.
//
// Exit codes: 0 success, 1 property violation (report carries a witness),
// 2 malformed input, 3 refusal (the hypotheses of the requested check fail).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "spectra/approx.hpp"
#include "spectra/complexify.hpp"
#include "spectra/duality.hpp"
#include "spectra/json_io.hpp"
#include "spectra/mspec.hpp"
#include "spectra/profinite.hpp"
#include "spectra/rings.hpp"
#include "spectra/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kBadInput = 2;
constexpr int kRefusal = 3;

using spectra::Json;

struct Options {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::size_t max_size = 4;
    double epsilon = 1e-3;
    int depth = 16;
    double norm_cap = 0;  // 0 = unlimited
};

std::uint64_t resolve_seed(const Options& opt) {
    if (opt.seed_set) return opt.seed;
    if (const char* env = std::getenv("SPECTRA_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw spectra::SchemaError("SPECTRA_SEED is not an unsigned integer");
        }
    }
    return 0;
}

Json load_input(const Options& opt) {
    if (opt.input.empty()) throw spectra::SchemaError("this verb needs --input");
    std::ifstream in(opt.input);
    if (!in) throw spectra::SchemaError("cannot open input file: " + opt.input);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw spectra::SchemaError(std::string("input is not valid JSON: ") + e.what());
    }
}

int emit(const Options& opt, const Json& report, int code) {
    std::string text = report.dump(2);
    text.push_back('\n');
    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output);
        if (!out) {
            std::cerr << "cannot open output file: " << opt.output << "\n";
            return kBadInput;
        }
        out << text;
    }
    return code;
}

Json values_to_json(const std::vector<spectra::GQ>& v, spectra::FieldTag field) {
    Json arr = Json::array();
    for (const auto& z : v) arr.push_back(spectra::scalar_to_json(z, field));
    return arr;
}

// CLI convenience: {"kind":"quot","field":"Q","modulus":["-1","0","1"]}
// builds Q[t]/(f) without spelling out the structure constants.
spectra::RingPtr ring_from_input(const Json& j) {
    if (j.is_object() && j.contains("kind") && j["kind"] == "quot") {
        spectra::FieldTag field =
            j.value("field", std::string("Q")) == "Qi" ? spectra::FieldTag::Qi
                                                       : spectra::FieldTag::Q;
        if (!j.contains("modulus")) throw spectra::SchemaError("quot needs a modulus");
        std::vector<spectra::GQ> coeffs;
        for (const auto& c : j["modulus"]) coeffs.push_back(spectra::scalar_from_json(c, field));
        try {
            return spectra::mk_quotient_by(spectra::Poly<spectra::GQ>(std::move(coeffs)), field);
        } catch (const spectra::InvalidRing& e) {
            throw spectra::SchemaError(e.what());
        }
    }
    return spectra::ring_from_json(j);
}

int cmd_ring_mspec(const Options& opt) {
    auto ring = ring_from_input(load_input(opt));
    auto spectrum = spectra::mspec(ring);
    Json ideals = Json::array();
    for (const auto& m : spectrum) ideals.push_back(m.describe(*ring));
    Json report{{"verb", "ring-mspec"},
                {"property", "complete enumeration of maximal ideals"},
                {"count", spectrum.size()},
                {"ideals", std::move(ideals)}};
    return emit(opt, report, kOk);
}

int cmd_ring_split(const Options& opt) {
    auto ring = ring_from_input(load_input(opt));
    if (!ring->is_sc())
        throw spectra::SchemaError("ring-split expects a structure-constant algebra");
    auto field = ring->sc().field;
    auto chars = spectra::split_characters(ring);
    auto d = spectra::dev(ring);
    Json carr = Json::array();
    for (const auto& c : chars) carr.push_back(values_to_json(c.values, field));
    Json report{{"verb", "ring-split"},
                {"property", "characters recovered by eigen-splitting; dev matrix attached"},
                {"count", chars.size()},
                {"characters", std::move(carr)},
                {"dev_bijective", d.bijective}};
    return emit(opt, report, kOk);
}

int cmd_duality_roundtrip(const Options& opt) {
    Json cases = Json::array();
    for (spectra::FieldTag field : {spectra::FieldTag::Q, spectra::FieldTag::Qi}) {
        for (std::size_t nx = 1; nx <= opt.max_size; ++nx) {
            spectra::FinSpace x;
            for (std::size_t i = 0; i < nx; ++i) x.points.push_back("x" + std::to_string(i));
            auto rx = spectra::refl_alg(x, field);
            if (!rx.bijective)
                return emit(opt,
                            Json{{"verb", "duality-roundtrip"},
                                 {"violation", "reflection not bijective"},
                                 {"size", nx}},
                            kViolation);
            for (std::size_t ny = 1; ny <= opt.max_size; ++ny) {
                spectra::FinSpace y;
                for (std::size_t i = 0; i < ny; ++i) y.points.push_back("x" + std::to_string(i));
                std::size_t total = 1;
                for (std::size_t i = 0; i < nx; ++i) total *= ny;
                for (std::size_t code = 0; code < total; ++code) {
                    std::vector<int> a(nx);
                    std::size_t c = code;
                    for (std::size_t i = 0; i < nx; ++i) {
                        a[i] = static_cast<int>(c % ny);
                        c /= ny;
                    }
                    spectra::SpaceMap f{x, y, a};
                    auto phi = spectra::f_functor(f, field);
                    auto back = spectra::hom_to_map(phi);
                    bool ok = back.assignment == a && spectra::check_naturality(f, field);
                    if (!ok)
                        return emit(opt,
                                    Json{{"verb", "duality-roundtrip"},
                                         {"violation", "round trip failed"},
                                         {"assignment", a}},
                                    kViolation);
                }
            }
        }
    }
    Json report{{"verb", "duality-roundtrip"},
                {"property", "function-ring and spectrum functors are mutually inverse"},
                {"max_size", opt.max_size},
                {"ok", true}};
    return emit(opt, report, kOk);
}

int cmd_scc(const Options& opt) {
    Json j = load_input(opt);
    if (!j.contains("points")) throw spectra::SchemaError("scc input needs a points array");
    spectra::FinSpace x{j["points"].get<std::vector<std::string>>()};
    spectra::FieldTag field = j.value("field", std::string("Q")) == "Qi"
                                  ? spectra::FieldTag::Qi
                                  : spectra::FieldTag::Q;
    auto cert = spectra::scc_finite(x, field, opt.max_size);
    Json report{{"verb", "scc"},
                {"property", "universal extension through the spectrum compactification"},
                {"bar_points", cert.bar_x.points},
                {"reflection", cert.c},
                {"reflection_bijective", cert.c_bijective},
                {"targets_checked", cert.targets_checked},
                {"maps_checked", cert.maps_checked},
                {"factorizations_unique", cert.factorizations_unique},
                {"note", cert.note}};
    return emit(opt, report, cert.factorizations_unique && cert.c_bijective ? kOk : kViolation);
}

int cmd_norm_check(const Options& opt) {
    Json j = load_input(opt);
    if (!j.contains("ring")) throw spectra::SchemaError("norm-check input needs a ring");
    auto ring = ring_from_input(j["ring"]);
    if (!ring->is_sc())
        throw spectra::SchemaError("norm-check expects a structure-constant algebra");
    auto field = ring->sc().field;
    std::vector<spectra::RingElement> samples;
    if (!j.contains("samples")) throw spectra::SchemaError("norm-check input needs samples");
    for (const auto& s : j["samples"]) {
        std::vector<spectra::GQ> coords;
        for (const auto& c : s) coords.push_back(spectra::scalar_from_json(c, field));
        if (coords.size() != ring->sc().dim)
            throw spectra::SchemaError("sample has the wrong dimension");
        samples.push_back(spectra::sc_elt(ring, std::move(coords)));
    }
    if (opt.norm_cap > 0) {
        spectra::Rational cap_sq(opt.norm_cap);
        cap_sq *= spectra::Rational(opt.norm_cap);
        for (const auto& s : samples)
            if (spectra::sup_norm(s).sq > cap_sq)
                throw spectra::SchemaError("sample norm exceeds --norm-cap");
    }
    spectra::AxiomReport rep;
    if (field == spectra::FieldTag::Q) {
        rep = spectra::check_banach_star_real(ring, samples);
    } else {
        auto inv = j["ring"].contains("star")
                       ? spectra::involutive_from_json(j["ring"])
                       : spectra::canonical_involution(ring);
        rep = spectra::check_banach_star_complex(inv, samples);
    }
    Json report{{"verb", "norm-check"},
                {"property", "norm and involution axioms on exact squared moduli"},
                {"samples", samples.size()},
                {"ok", rep.ok}};
    if (!rep.ok) report["violation"] = rep.violation;
    return emit(opt, report, rep.ok ? kOk : kViolation);
}

int cmd_profinite_refine(const Options& opt) {
    Json j = load_input(opt);
    if (!j.contains("system") || !j.contains("covering"))
        throw spectra::SchemaError("profinite-refine input needs a system and a covering");
    auto sys = spectra::system_from_json(j["system"]);
    auto u = spectra::covering_from_json(sys, j["covering"]);
    try {
        auto cert = spectra::refine_covering(sys, u);
        bool valid = spectra::validate_refinement(sys, u, cert);
        Json report{{"verb", "profinite-refine"},
                    {"property", "every clopen covering refines to one cylinder level"},
                    {"k0", cert.k0},
                    {"rho", cert.rho},
                    {"validated", valid}};
        return emit(opt, report, valid ? kOk : kViolation);
    } catch (const spectra::NotACovering& e) {
        Json report{{"verb", "profinite-refine"},
                    {"violation", "parts do not cover the space"},
                    {"witness", {{"level", e.witness.level}, {"point", e.witness.point}}}};
        return emit(opt, report, kViolation);
    }
}

int cmd_approx_density(const Options& opt) {
    spectra::InverseSystem sys;
    spectra::RepresentedFn f;
    if (!opt.input.empty()) {
        Json j = load_input(opt);
        if (!j.contains("system") || !j.contains("fn"))
            throw spectra::SchemaError("approx-density input needs a system and a fn");
        sys = spectra::system_from_json(j["system"]);
        f = spectra::represented_from_json(sys, j["fn"]);
    } else {
        sys = spectra::cantor_system(opt.depth);
        f = spectra::cantor_binary_fn(sys, opt.depth);
    }
    auto cert = spectra::density_certificate(sys, f, opt.epsilon);
    Json report{{"verb", "approx-density"},
                {"property", "step functions approximate within any positive tolerance"},
                {"epsilon", cert.epsilon},
                {"level", cert.level},
                {"bound", cert.bound},
                {"step", {{"level", cert.step.level}, {"values", cert.step.values}}}};
    return emit(opt, report, cert.bound < opt.epsilon ? kOk : kViolation);
}

int cmd_complex_hermitian(const Options& opt) {
    Json j = load_input(opt);
    auto ring = ring_from_input(j);
    if (!ring->is_sc() || ring->sc().field != spectra::FieldTag::Qi)
        throw spectra::SchemaError("complex-hermitian expects a Q(i) algebra");
    auto inv = j.contains("star") ? spectra::involutive_from_json(j)
                                  : spectra::canonical_involution(ring);
    auto h = spectra::hermitian_subring(inv);
    Json vecs = Json::array();
    for (const auto& v : h.vectors) vecs.push_back(values_to_json(v, spectra::FieldTag::Qi));
    Json report{{"verb", "complex-hermitian"},
                {"property", "the fixed points of the involution form a rational real form"},
                {"real_form", spectra::ring_to_json(*h.real_form)},
                {"vectors", std::move(vecs)}};
    return emit(opt, report, kOk);
}

int cmd_complex_roundtrip(const Options& opt) {
    Json j = load_input(opt);
    auto ring = ring_from_input(j);
    if (!ring->is_sc()) throw spectra::SchemaError("complex-roundtrip expects an algebra");
    spectra::RoundtripCert cert;
    std::string direction;
    if (ring->sc().field == spectra::FieldTag::Q) {
        direction = "hermitian-of-induced";
        cert = spectra::roundtrip_hi(ring);
    } else {
        direction = "induced-of-hermitian";
        auto inv = j.contains("star") ? spectra::involutive_from_json(j)
                                      : spectra::canonical_involution(ring);
        cert = spectra::roundtrip_ih(inv);
    }
    Json report{{"verb", "complex-roundtrip"},
                {"property", "scalar extension and hermitian part are mutually inverse"},
                {"direction", direction},
                {"valid", cert.valid},
                {"note", cert.note}};
    return emit(opt, report, cert.valid ? kOk : kViolation);
}

int cmd_demo_nonfunctorial(const Options& opt) {
    auto rep = spectra::demo_preimage_not_maximal();
    Json report{{"verb", "demo-nonfunctorial"},
                {"property", "maximal-ideal preimages need not be maximal"},
                {"source_ring", rep.source_ring},
                {"target_ring", rep.target_ring},
                {"ideal", rep.ideal},
                {"preimage", rep.preimage},
                {"preimage_maximal", rep.preimage_maximal},
                {"witness", rep.witness}};
    return emit(opt, report, kOk);
}

int cmd_demo_nonhausdorff(const Options& opt) {
    Json j = load_input(opt);
    if (!j.contains("a") || !j.contains("b"))
        throw spectra::SchemaError("demo-nonhausdorff input needs polynomials a and b");
    auto read_poly = [](const Json& arr) {
        std::vector<spectra::Rational> c;
        for (const auto& x : arr) c.push_back(spectra::rational_from_json(x));
        return spectra::PolyQ(std::move(c));
    };
    spectra::PolyQ a = read_poly(j["a"]), b = read_poly(j["b"]);
    if (a.is_zero() || b.is_zero())
        throw spectra::SchemaError("both polynomials must be nonzero");
    auto c = spectra::demo_non_hausdorff(a, b);
    Json report{{"verb", "demo-nonhausdorff"},
                {"property", "two dense opens always meet: a common nonvanishing point exists"},
                {"c", spectra::rational_to_json(c)},
                {"a_at_c", spectra::rational_to_json(a.eval(c))},
                {"b_at_c", spectra::rational_to_json(b.eval(c))}};
    return emit(opt, report, kOk);
}

int cmd_suite(const Options& opt, const std::string& name) {
    std::uint64_t seed = resolve_seed(opt);
    std::vector<spectra::SuiteResult> results;
    if (name == "all") {
        results = spectra::run_all_suites(seed);
    } else {
        try {
            results.push_back(spectra::run_suite(name, seed));
        } catch (const std::invalid_argument& e) {
            throw spectra::SchemaError(e.what());
        }
    }
    bool all_ok = true;
    Json arr = Json::array();
    for (const auto& r : results) {
        std::cout << (r.ok ? "ok   " : "FAIL ") << r.name << " - " << r.detail << "\n";
        arr.push_back(Json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
        all_ok = all_ok && r.ok;
    }
    Json report{{"verb", "suite"}, {"seed", seed}, {"results", std::move(arr)}, {"ok", all_ok}};
    if (!opt.output.empty()) return emit(opt, report, all_ok ? kOk : kViolation);
    return all_ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite dualities between spaces and rings"};
    app.require_subcommand(1);

    Options opt;
    std::string suite_name = "all";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "path to a JSON input file");
        sub->add_option("--output", opt.output, "path for the JSON report (default stdout)");
        sub->add_option("--seed", opt.seed, "RNG seed for randomized checks")
            ->each([&](const std::string&) { opt.seed_set = true; });
        sub->add_option("--max-size", opt.max_size, "size cap for exhaustive enumeration");
        sub->add_option("--epsilon", opt.epsilon, "approximation tolerance");
        sub->add_option("--depth", opt.depth, "tower depth for built-in examples");
        sub->add_option("--norm-cap", opt.norm_cap, "reject samples with norm above this bound");
        return sub;
    };

    auto* v_mspec = add_common(app.add_subcommand("ring-mspec", "enumerate maximal ideals"));
    auto* v_split = add_common(app.add_subcommand("ring-split", "split an algebra into characters"));
    auto* v_dual = add_common(
        app.add_subcommand("duality-roundtrip", "exhaustive duality round trips up to --max-size"));
    auto* v_scc = add_common(
        app.add_subcommand("scc", "compactification certificate for a finite space"));
    auto* v_norm = add_common(app.add_subcommand("norm-check", "norm and involution axioms"));
    auto* v_refine = add_common(
        app.add_subcommand("profinite-refine", "refine a clopen covering to one level"));
    auto* v_density = add_common(
        app.add_subcommand("approx-density", "certified step-function approximation"));
    auto* v_herm = add_common(
        app.add_subcommand("complex-hermitian", "hermitian real form of an involutive algebra"));
    auto* v_round = add_common(
        app.add_subcommand("complex-roundtrip", "scalar extension / hermitian part round trip"));
    auto* v_nonfun = add_common(
        app.add_subcommand("demo-nonfunctorial", "preimage-of-maximal counterexample"));
    auto* v_nonhaus = add_common(
        app.add_subcommand("demo-nonhausdorff", "common nonvanishing point of two polynomials"));
    auto* v_suite = add_common(app.add_subcommand("suite", "run property suites"));
    v_suite->add_option("name", suite_name, "suite name, or \"all\"");

    CLI11_PARSE(app, argc, argv);

    try {
        if (v_mspec->parsed()) return cmd_ring_mspec(opt);
        if (v_split->parsed()) return cmd_ring_split(opt);
        if (v_dual->parsed()) return cmd_duality_roundtrip(opt);
        if (v_scc->parsed()) return cmd_scc(opt);
        if (v_norm->parsed()) return cmd_norm_check(opt);
        if (v_refine->parsed()) return cmd_profinite_refine(opt);
        if (v_density->parsed()) return cmd_approx_density(opt);
        if (v_herm->parsed()) return cmd_complex_hermitian(opt);
        if (v_round->parsed()) return cmd_complex_roundtrip(opt);
        if (v_nonfun->parsed()) return cmd_demo_nonfunctorial(opt);
        if (v_nonhaus->parsed()) return cmd_demo_nonhausdorff(opt);
        if (v_suite->parsed()) return cmd_suite(opt, suite_name);
    } catch (const spectra::NotKValued& e) {
        std::cerr << "NotKValued: " << e.what() << "\n";
        return kRefusal;
    } catch (const spectra::InsufficientDepth& e) {
        std::cerr << "InsufficientDepth: " << e.what() << "\n";
        return kRefusal;
    } catch (const spectra::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
