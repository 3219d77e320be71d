// Batch front-end: loads algebras, groups, and pairings from JSON, runs the
// duality pipeline, and emits markdown plus optional machine-readable JSON.
//
// Exit codes: 0 all checks pass, 1 axiom or structural-law violation,
// 2 malformed input, 3 resource budget exceeded.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crystal/errors.hpp"
#include "crystal/json_io.hpp"
#include "crystal/pairing.hpp"

namespace {

using namespace crystal;

struct Options {
    std::string json_path;
    std::uint64_t seed = 0;
    int max_n = 0;
    std::int64_t window_cap = 0;
    int jobs = 1;
};

struct RunOutcome {
    std::string markdown;
    json report;
    int exit_code = 0;
};

struct LedgerEntry {
    std::string name;
    bool pass = true;
    std::string detail;
};

json ledger_to_json(const std::vector<LedgerEntry>& ledger) {
    json out = json::array();
    for (const auto& e : ledger)
        out.push_back(json{{"name", e.name},
                           {"pass", e.pass},
                           {"detail", e.detail}});
    return out;
}

void ledger_to_markdown(std::ostringstream& md,
                        const std::vector<LedgerEntry>& ledger) {
    md << "### Structural-law ledger\n";
    for (const auto& e : ledger) {
        md << "- [" << (e.pass ? "PASS" : "FAIL") << "] " << e.name;
        if (!e.detail.empty()) md << " (" << e.detail << ")";
        md << "\n";
    }
}

bool ledger_ok(const std::vector<LedgerEntry>& ledger) {
    return std::all_of(ledger.begin(), ledger.end(),
                       [](const LedgerEntry& e) { return e.pass; });
}

std::vector<std::int64_t> graded_dims(const GradedBialgebraData& G) {
    std::vector<std::int64_t> out;
    for (const auto& c : G.components) out.push_back(c.dim);
    return out;
}

std::string dims_string(const std::vector<std::int64_t>& dims) {
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + ")";
}

// Deterministic coordinate vector: uniform residues in char p, small
// integers in char 0. Raw generator words keep the stream independent of
// library distribution implementations.
SparseVector random_element(const HopfAlgebra& H, std::mt19937_64& rng) {
    SparseVector v(H.dim);
    for (std::int64_t i = 0; i < H.dim; ++i) {
        std::int64_t c;
        if (H.field.characteristic > 0)
            c = (std::int64_t)(rng() % (std::uint64_t)H.field.characteristic);
        else
            c = (std::int64_t)(rng() % 7) - 3;
        if (c != 0) v.push(i, Scalar(H.field, c));
    }
    return v;
}

// Largest tensor depth whose slot count stays inside the element budget.
int max_tensor_depth(std::int64_t dim, std::int64_t budget) {
    int n = 0;
    std::int64_t size = 1;
    while (size <= budget / std::max<std::int64_t>(dim, 1)) {
        size *= dim;
        ++n;
    }
    return n;
}

struct RandomCheckSummary {
    int trials = 0;
    int coassoc_pass = 0;
    int expansion_pass = 0;
};

RandomCheckSummary run_random_laws(const HopfAlgebra& H, std::uint64_t seed,
                                   int trials) {
    std::mt19937_64 rng(seed);
    RandomCheckSummary s;
    int depth = max_tensor_depth(H.dim, default_tensor_budget);
    int n_cap = std::min(3, depth - 1);
    if (n_cap < 1) return s;
    s.trials = trials;
    for (int t = 0; t < trials; ++t) {
        int n = 1 + (int)(rng() % (std::uint64_t)n_cap);
        int l = 1 + (int)(rng() % (std::uint64_t)(depth - n) % 2);
        int slot = (int)(rng() % (std::uint64_t)n);
        SparseVector x = random_element(H, rng);
        SparseVector y = random_element(H, rng);
        if (delta_coassociativity(H, x, n, l, slot)) ++s.coassoc_pass;
        if (delta_product_expansion(H, x, y, n)) ++s.expansion_pass;
    }
    return s;
}

json random_checks_json(const RandomCheckSummary& s, std::uint64_t seed) {
    return json{{"seed", seed},
                {"trials", s.trials},
                {"coassociativity_pass", s.coassoc_pass},
                {"product_expansion_pass", s.expansion_pass}};
}

// Full pipeline on one validated bialgebra: filtrations, connecting
// functors, crystal graded objects, Rees modules, both deformation functors
// and their semiclassical limits, plus seeded random coproduct laws.
RunOutcome analyze_algebra(const HopfAlgebra& H, const std::string& title,
                           const Options& opt,
                           std::vector<LedgerEntry> ledger = {}) {
    std::ostringstream md;
    json rep;
    md << "## analyze: " << title << "\n\n";
    rep["input"] = title;
    rep["dim"] = H.dim;
    rep["field_char"] = H.field.characteristic;

    ValidationReport vr = validate(H);
    rep["validation"] = validation_to_json(vr);
    ledger.push_back({"bialgebra axioms hold on the input", vr.all_pass(),
                      ""});
    if (!vr.all_pass()) {
        md << "Axiom violations:\n";
        for (const auto& c : vr.checks)
            if (!c.pass) md << "- " << c.name << ": " << c.witness << "\n";
        ledger_to_markdown(md, ledger);
        rep["ledger"] = ledger_to_json(ledger);
        return {md.str(), rep, 1};
    }

    Filtration J = jadic_filtration(H);
    Filtration D = dee_filtration(H);
    rep["filtrations"] = json{{"augmentation_power_dims", J.dims()},
                              {"augmentation_stable_index", J.stable_index},
                              {"coradical_dims", D.dims()},
                              {"coradical_stable_index", D.stable_index}};
    md << "- augmentation-power dims " << dims_string(J.dims())
       << ", coradical dims " << dims_string(D.dims()) << "\n";

    QuotientHopf vee = h_vee(H);
    SubHopf prime = h_prime(H);
    rep["connecting"] = json{
        {"separated_quotient_dim", vee.quotient.dim},
        {"connected_component_dim", prime.sub.dim}};
    md << "- separated quotient dim " << vee.quotient.dim
       << ", connected component dim " << prime.sub.dim << "\n";

    ReesBialgebra RJ =
        rees_of_filtration(vee.quotient, jadic_filtration(vee.quotient));
    ReesBialgebra RD =
        rees_of_filtration(prime.sub, dee_filtration(prime.sub));
    ledger.push_back({"Rees modules close under product and coproduct",
                      RJ.closed_under_product && RJ.closed_under_coproduct &&
                          RD.closed_under_product && RD.closed_under_coproduct,
                      ""});

    HopfAlgebra fib1 = fiber_t1(RJ);
    ledger.push_back(
        {"t=1 fiber of the augmentation Rees module recovers the separated "
         "quotient",
         fib1.dim == vee.quotient.dim && validate(fib1).all_pass(), ""});

    GradedBialgebraData Hhat = fiber_t0(RJ);
    GradedBialgebraData Htil = fiber_t0(RD);
    RestrictedLieBialgebra lie = extract_lie(Hhat);
    PresentationReport pres = truncated_presentation(Htil);
    ledger.push_back(
        {"enveloping-type crystal is cocommutative and primitive-generated",
         true, "dim " + std::to_string(Hhat.dim())});
    ledger.push_back(
        {"function-type crystal is commutative with truncated generators",
         pres.relations_verified || pres.generator_labels.empty(),
         "generators " + std::to_string(pres.generator_labels.size())});
    rep["crystals"] = json{
        {"enveloping_type",
         json{{"graded_dims", graded_dims(Hhat)}, {"lie", lie_to_json(lie)}}},
        {"function_type",
         json{{"graded_dims", graded_dims(Htil)},
              {"presentation", presentation_to_json(pres)}}}};
    md << "- enveloping-type crystal dims " << dims_string(graded_dims(Hhat))
       << ", function-type crystal dims " << dims_string(graded_dims(Htil))
       << "\n";

    ReesBialgebra P = drinfeld_prime(RJ, opt.max_n, opt.window_cap);
    ReesBialgebra V = drinfeld_vee(RD, opt.window_cap);
    ledger.push_back({"deformation images close and stabilize",
                      P.closed_under_product && P.closed_under_coproduct &&
                          P.stabilized && V.closed_under_product &&
                          V.closed_under_coproduct,
                      ""});
    SemiclassicalLimit scP = semiclassical_limit(P);
    SemiclassicalLimit scV = semiclassical_limit(V);
    ledger.push_back({"semiclassical limits carry the induced brackets",
                      scP.poisson.has_value() && scV.copoisson.has_value(),
                      ""});
    rep["rees"] = json{{"augmentation_module", laurent_to_json(RJ.module)},
                       {"coradical_module", laurent_to_json(RD.module)}};
    rep["deformations"] = json{
        {"commutative",
         json{{"module", laurent_to_json(P.module)},
              {"stabilized", P.stabilized},
              {"fiber_graded_dims", graded_dims(scP.graded)}}},
        {"enveloping",
         json{{"module", laurent_to_json(V.module)},
              {"fiber_graded_dims", graded_dims(scV.graded)}}}};

    // The four deformation corners around the middle row
    // connected component -> input -> separated quotient.
    md << "\n### Deformation square\n";
    md << "| corner | object | graded dims |\n|---|---|---|\n";
    md << "| upper left | function-type crystal of the connected component | "
       << dims_string(graded_dims(Htil)) << " |\n";
    md << "| upper right | commutative deformation fiber | "
       << dims_string(graded_dims(scP.graded)) << " |\n";
    md << "| lower left | enveloping-type crystal of the separated quotient | "
       << dims_string(graded_dims(Hhat)) << " |\n";
    md << "| lower right | enveloping deformation fiber | "
       << dims_string(graded_dims(scV.graded)) << " |\n";
    rep["deformation_square"] = json{
        {"function_type_crystal_dims", graded_dims(Htil)},
        {"commutative_fiber_dims", graded_dims(scP.graded)},
        {"enveloping_type_crystal_dims", graded_dims(Hhat)},
        {"enveloping_fiber_dims", graded_dims(scV.graded)},
        {"middle_row_dims",
         json::array({prime.sub.dim, H.dim, vee.quotient.dim})}};

    RandomCheckSummary rnd = run_random_laws(H, opt.seed, 20);
    rep["random_checks"] = random_checks_json(rnd, opt.seed);
    ledger.push_back(
        {"iterated coproduct composes along every slot insertion",
         rnd.coassoc_pass == rnd.trials,
         std::to_string(rnd.coassoc_pass) + "/" + std::to_string(rnd.trials) +
             " seeded trials"});
    ledger.push_back(
        {"iterated coproduct of a product expands over slot subsets",
         rnd.expansion_pass == rnd.trials,
         std::to_string(rnd.expansion_pass) + "/" +
             std::to_string(rnd.trials) + " seeded trials"});

    md << "\n";
    ledger_to_markdown(md, ledger);
    rep["ledger"] = ledger_to_json(ledger);
    return {md.str(), rep, ledger_ok(ledger) ? 0 : 1};
}

RunOutcome run_validate(const std::string& path) {
    std::ostringstream md;
    json rep;
    md << "## validate: " << path << "\n\n";
    rep["input"] = path;
    HopfAlgebra H = hopf_from_json(load_json_file(path));
    ValidationReport vr = validate(H);
    rep["validation"] = validation_to_json(vr);
    for (const auto& c : vr.checks) {
        md << "- [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.pass) md << ": " << c.witness;
        md << "\n";
    }
    md << (vr.all_pass() ? "\nAll axioms hold.\n" : "\nAxioms violated.\n");
    return {md.str(), rep, vr.all_pass() ? 0 : 1};
}

FiniteGroup group_from_flags(const std::string& path,
                             const std::string& family, std::int64_t p,
                             std::int64_t n,
                             const std::vector<int>& exponents) {
    if (!path.empty()) return group_from_json(load_json_file(path));
    if (family.empty())
        throw format_error("group command needs a file or --family");
    json spec{{"family", family}};
    if (p > 0) spec["p"] = p;
    if (n > 0) spec["n"] = n;
    if (!exponents.empty()) spec["exponents"] = exponents;
    return group_from_json(spec);
}

bool is_power_of(std::int64_t order, std::int64_t p) {
    if (p < 2) return false;
    while (order % p == 0) order /= p;
    return order == 1;
}

RunOutcome run_group(const FiniteGroup& G, const std::string& pipeline,
                     std::int64_t field_char, const Options& opt) {
    std::string title = "group of order " + std::to_string(G.order) +
                        " over char " + std::to_string(field_char) +
                        ", pipeline " + pipeline;
    if (pipeline == "jennings") {
        std::ostringstream md;
        json rep;
        md << "## group: " << title << "\n\n";
        rep["input"] = title;
        if (!is_power_of(G.order, field_char))
            throw format_error(
                "the p-series pipeline needs a p-group over GF(p)");
        JenningsHallReport jr =
            jennings_hall_check(G, (std::uint64_t)field_char);
        SubgroupSeries ds = dimension_subgroups(G, Field(field_char));
        SubgroupSeries pl =
            p_lower_central_series(G, (std::uint64_t)field_char);
        std::vector<std::int64_t> ds_sizes, pl_sizes;
        for (const auto& t : ds.terms) ds_sizes.push_back((std::int64_t)t.size());
        for (const auto& t : pl.terms) pl_sizes.push_back((std::int64_t)t.size());
        rep["series"] = json{{"dimension_subgroup_orders", ds_sizes},
                             {"p_lower_central_orders", pl_sizes}};
        rep["graded_dims"] = jr.graded_dims;
        rep["monomial_counts"] = jr.monomial_counts;
        std::vector<LedgerEntry> ledger{
            {"dimension subgroups equal the p-lower central series",
             jr.series_match, ""},
            {"weighted monomial counts give the graded dimensions",
             jr.monomial_bases_match, dims_string(jr.graded_dims)},
            {"graded classes realize the p-series Lie constants",
             jr.lie_isomorphism, ""},
            {"separated quotient is the group algebra of the stable quotient",
             jr.separated_quotient_match, ""}};
        ledger_to_markdown(md, ledger);
        rep["ledger"] = ledger_to_json(ledger);
        return {md.str(), rep, ledger_ok(ledger) ? 0 : 1};
    }
    Field f(field_char);
    std::vector<LedgerEntry> pre;
    HopfAlgebra H;
    if (pipeline == "dual") {
        H = build_function_algebra(G, f);
    } else {
        H = build_group_algebra(G, f);
        if (field_char > 1 && is_power_of(G.order, field_char)) {
            JenningsHallReport jr =
                jennings_hall_check(G, (std::uint64_t)field_char);
            pre.push_back(
                {"crystal graded dimensions match weighted monomial counts",
                 jr.graded_dims == jr.monomial_counts,
                 dims_string(jr.graded_dims)});
        }
    }
    RunOutcome out = analyze_algebra(H, title, opt, std::move(pre));
    if (pipeline == "dual") {
        bool trivial_vee =
            out.report["connecting"]["separated_quotient_dim"] == 1;
        LedgerEntry e{
            "separated quotient of the function algebra is the ground field",
            trivial_vee, ""};
        out.report["ledger"].push_back(json{
            {"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
        out.markdown += std::string("- [") + (e.pass ? "PASS" : "FAIL") +
                        "] " + e.name + "\n";
        if (!e.pass && out.exit_code == 0) out.exit_code = 1;
    }
    return out;
}

RunOutcome run_pair(const std::string& path) {
    std::ostringstream md;
    json rep;
    md << "## pair: " << path << "\n\n";
    rep["input"] = path;
    std::string dir = std::filesystem::path(path).parent_path().string();
    PairingData P = pairing_from_json(load_json_file(path), dir);
    PairingReport pr = validate_pairing(P);
    const char* level = pr.level == PairingLevel::hopf        ? "hopf"
                        : pr.level == PairingLevel::bialgebra ? "bialgebra"
                        : pr.level == PairingLevel::augmented ? "augmented"
                                                              : "none";
    rep["level"] = level;
    rep["failures"] = pr.failures;
    rep["left_kernel_dim"] = pr.left_kernel.dim();
    rep["right_kernel_dim"] = pr.right_kernel.dim();
    rep["perfect_left"] = pr.perfect_left;
    rep["perfect_right"] = pr.perfect_right;
    md << "- compatibility level: " << level << "\n";
    md << "- left kernel dim " << pr.left_kernel.dim() << ", right kernel dim "
       << pr.right_kernel.dim() << "\n";
    for (const auto& fl : pr.failures) md << "- violated: " << fl << "\n";
    std::vector<LedgerEntry> ledger;
    ledger.push_back({"pairing satisfies the augmented compatibility laws",
                      pr.level != PairingLevel::none, ""});
    if (pr.level != PairingLevel::none) {
        OrthogonalityReport orep = orthogonality_identity(P);
        rep["orthogonality"] =
            json{{"augmentation_power_dims", orep.j_power_dims},
                 {"coradical_dims", orep.d_dims},
                 {"depth", orep.depth},
                 {"perfect", orep.perfect},
                 {"polar_equality", orep.polar_equality}};
        ledger.push_back(
            {"coradical layers are the annihilators of augmentation powers",
             true, "depth " + std::to_string(orep.depth)});
        GradedPairingReport gr = induced_graded_pairing(P);
        rep["graded"] = json{{"left_dims", gr.left_dims},
                             {"right_dims", gr.right_dims},
                             {"ranks", gr.ranks},
                             {"right_perfect_all", gr.right_perfect_all},
                             {"perfect_all", gr.perfect_all},
                             {"rees_identity", gr.rees_identity}};
        md << "- graded ranks " << dims_string(gr.ranks) << "\n";
        ledger.push_back({"graded pairing is perfect on the right",
                          gr.right_perfect_all, ""});
        if (pr.perfect())
            ledger.push_back(
                {"Rees layers are mutual annihilators degree-wise",
                 gr.rees_identity, ""});
    }
    md << "\n";
    ledger_to_markdown(md, ledger);
    rep["ledger"] = ledger_to_json(ledger);
    return {md.str(), rep, ledger_ok(ledger) ? 0 : 1};
}

template <typename Fn>
RunOutcome guarded(const std::string& what, Fn fn) {
    try {
        return fn();
    } catch (const resource_error& e) {
        return {"## " + what + "\n\nResource budget exceeded: " +
                    e.what() + "\n",
                json{{"input", what}, {"error", e.what()},
                     {"kind", "resource"}},
                3};
    } catch (const theorem_error& e) {
        return {"## " + what + "\n\nStructural law violated: " + e.what() +
                    "\n",
                json{{"input", what}, {"error", e.what()},
                     {"kind", "theorem"}},
                1};
    } catch (const axiom_error& e) {
        return {"## " + what + "\n\nAxiom violated: " + e.what() + "\n",
                json{{"input", what}, {"error", e.what()}, {"kind", "axiom"}},
                1};
    } catch (const format_error& e) {
        return {"## " + what + "\n\nInput error: " + e.what() + "\n",
                json{{"input", what}, {"error", e.what()}, {"kind", "format"}},
                2};
    }
}

// Runs one job per input, optionally concurrently, and merges the results in
// input order so output stays deterministic.
int emit_all(const std::string& command, const Options& opt,
             std::vector<std::function<RunOutcome()>> tasks) {
    std::vector<RunOutcome> results(tasks.size());
    if (opt.jobs > 1 && tasks.size() > 1) {
        std::vector<std::future<RunOutcome>> futs;
        futs.reserve(tasks.size());
        for (auto& t : tasks)
            futs.push_back(std::async(std::launch::async, t));
        for (std::size_t i = 0; i < futs.size(); ++i)
            results[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    }
    int code = 0;
    json inputs = json::array();
    for (const auto& r : results) {
        std::fputs(r.markdown.c_str(), stdout);
        std::fputc('\n', stdout);
        inputs.push_back(r.report);
        code = std::max(code, r.exit_code);
    }
    if (!opt.json_path.empty()) {
        json out{{"command", command},
                 {"seed", opt.seed},
                 {"inputs", inputs},
                 {"exit_code", code}};
        write_json_file(opt.json_path, out);
    }
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact duality pipeline for finite-dimensional bialgebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--json", opt.json_path, "Write the full report here");
    app.add_option("--seed", opt.seed, "Seed for randomized law checks");
    app.add_option("--max-n", opt.max_n,
                   "Depth cap for the commutative deformation functor");
    app.add_option("--window-cap", opt.window_cap,
                   "Laurent window growth cap (0 = automatic)");
    app.add_option("--jobs", opt.jobs, "Run this many inputs concurrently");

    std::vector<std::string> validate_inputs, analyze_inputs, pair_inputs;
    auto* cmd_validate =
        app.add_subcommand("validate", "Check the declared axioms of inputs");
    cmd_validate->add_option("inputs", validate_inputs, "Algebra JSON files")
        ->required();
    auto* cmd_analyze =
        app.add_subcommand("analyze", "Run the full duality pipeline");
    cmd_analyze->add_option("inputs", analyze_inputs, "Algebra JSON files")
        ->required();
    auto* cmd_pair =
        app.add_subcommand("pair", "Validate pairings and their identities");
    cmd_pair->add_option("inputs", pair_inputs, "Pairing JSON files")
        ->required();

    std::string group_path, family, pipeline = "crystal";
    std::int64_t group_p = 0, group_n = 0, field_char = 2;
    std::vector<int> exponents;
    auto* cmd_group =
        app.add_subcommand("group", "Build a group and run a pipeline");
    cmd_group->add_option("input", group_path, "Group JSON file");
    cmd_group->add_option("--family", family, "Named group family");
    cmd_group->add_option("--p", group_p, "Prime parameter of the family");
    cmd_group->add_option("--n", group_n, "Size parameter of the family");
    cmd_group->add_option("--exponents", exponents,
                          "Cyclic p-power exponents")
        ->delimiter(',');
    cmd_group->add_option("--field", field_char,
                          "Coefficient field characteristic");
    cmd_group->add_option("--pipeline", pipeline, "crystal, jennings, dual")
        ->check(CLI::IsMember({"crystal", "jennings", "dual"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::vector<std::function<RunOutcome()>> tasks;
    std::string command;
    if (*cmd_validate) {
        command = "validate";
        for (const auto& p : validate_inputs)
            tasks.push_back([p] {
                return guarded("validate: " + p,
                               [&] { return run_validate(p); });
            });
    } else if (*cmd_analyze) {
        command = "analyze";
        for (const auto& p : analyze_inputs)
            tasks.push_back([p, opt] {
                return guarded("analyze: " + p, [&] {
                    HopfAlgebra H = hopf_from_json(load_json_file(p));
                    return analyze_algebra(H, p, opt);
                });
            });
    } else if (*cmd_pair) {
        command = "pair";
        for (const auto& p : pair_inputs)
            tasks.push_back(
                [p] { return guarded("pair: " + p, [&] { return run_pair(p); }); });
    } else {
        command = "group";
        tasks.push_back([=] {
            return guarded("group", [&] {
                FiniteGroup G = group_from_flags(group_path, family, group_p,
                                                 group_n, exponents);
                return run_group(G, pipeline, field_char, opt);
            });
        });
    }
    return emit_all(command, opt, std::move(tasks));
}
