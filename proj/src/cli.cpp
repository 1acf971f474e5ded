#include "ctw/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctw/drawing.hpp"
#include "ctw/error.hpp"
#include "ctw/gadgets.hpp"
#include "ctw/io.hpp"
#include "ctw/planarizer.hpp"
#include "ctw/solvers.hpp"

namespace ctw {

namespace {

using nlohmann::json;

struct Report {
    json doc;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Report(const std::string& command, const std::vector<std::string>& args) {
        doc["schema"] = 1;
        doc["command"] = command;
        doc["argv"] = std::vector<std::string>(args.begin() + 1, args.end());
        doc["inputs"] = json::object();
    }

    void input(const std::string& role, const std::string& path) {
        doc["inputs"][role] = {{"path", path}, {"fnv1a64", fnv1a_hex(read_file(path))}};
    }

    void emit(std::ostream& out) {
        doc["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << doc.dump(2) << '\n';
    }
};

json profile_json(const CutProfile& cp) { return {{"max_width", cp.max_width}, {"widths", cp.widths}}; }

json dp_json(const DPReport& r) {
    return {{"optimum", r.optimum},
            {"max_live_states", r.max_live_states},
            {"bag_count", r.bag_count},
            {"width_used", r.width_used}};
}

const CrossoverGadget& builtin_gadget(Problem p) { return p == Problem::is ? gjs_is_gadget() : ds_crossover_gadget(); }

CrossoverGadget load_gadget(const std::string& path) {
    try {
        return gadget_from_json(json::parse(read_file(path)));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("gadget JSON: ") + e.what());
    }
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-")
        out << content;
    else
        write_file(path, content);
}

// ---------------------------------------------------------------- commands

struct CutwidthArgs {
    std::string graph, layout;
    bool exact = false;
    int oracle_limit = kDefaultCutwidthOracleLimit;
};

int cmd_cutwidth(const CutwidthArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    Report rep("cutwidth", args);
    Graph g = load_graph_file(a.graph);
    rep.input("graph", a.graph);
    json res;
    res["n"] = g.vertex_count();
    res["m"] = g.edge_count();
    if (a.exact) {
        CutwidthResult r = exact_cutwidth(g, a.oracle_limit);
        res["mode"] = "exact";
        res["width"] = r.cutwidth;
        res["layout"] = layout_to_json(r.layout);
        res["cut_profile"] = profile_json(cut_profile(g, r.layout));
    } else if (!a.layout.empty()) {
        LinearLayout layout = load_layout_file(a.layout);
        rep.input("layout", a.layout);
        CutProfile cp = cut_profile(g, layout);
        res["mode"] = "layout";
        res["width"] = cp.max_width;
        res["cut_profile"] = profile_json(cp);
        res["pathwidth_bound"] = layout_to_path_decomposition(g, layout).width;
    } else {
        LinearLayout layout = heuristic_layout(g);
        CutProfile cp = cut_profile(g, layout);
        res["mode"] = "heuristic";
        res["width"] = cp.max_width;
        res["layout"] = layout_to_json(layout);
        res["cut_profile"] = profile_json(cp);
        res["pathwidth_bound"] = layout_to_path_decomposition(g, layout).width;
    }
    rep.doc["result"] = res;
    rep.emit(out);
    return exit_code::ok;
}

struct PlanarizeArgs {
    std::string graph, layout, problem = "is", gadget, output = "planarized";
    int t = 0;
    bool verify = false;
};

int cmd_planarize(const PlanarizeArgs& a, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Report rep("planarize", args);
    Graph g = load_graph_file(a.graph);
    rep.input("graph", a.graph);
    LinearLayout layout = load_layout_file(a.layout);
    rep.input("layout", a.layout);
    const Problem problem = problem_from_string(a.problem);
    std::optional<CrossoverGadget> custom;
    if (!a.gadget.empty()) {
        custom = load_gadget(a.gadget);
        rep.input("gadget", a.gadget);
        if (custom->problem != problem) throw PreconditionError("gadget problem does not match --problem");
    }
    const CrossoverGadget& gadget = custom ? *custom : builtin_gadget(problem);
    PlanarizationResult r = planarize(g, layout, a.t, gadget);

    const std::string graph_path = a.output + ".graph", layout_path = a.output + ".layout",
                      report_path = a.output + ".json";
    write_file(graph_path, format_graph_text(r.g_prime));
    write_file(layout_path, format_layout_text(r.layout_prime));

    json res;
    res["problem"] = to_string(problem);
    res["t"] = a.t;
    res["t_prime"] = r.t_prime;
    res["crossings_replaced"] = r.crossings_replaced;
    res["shift"] = r.shift;
    res["width_in"] = r.width_in;
    res["width_out"] = r.width_out;
    res["gadget_width"] = r.gadget_width;
    res["width_bound"] = r.width_in + r.gadget_width + 4;
    res["n_prime"] = r.g_prime.vertex_count();
    res["m_prime"] = r.g_prime.edge_count();
    res["planar"] = true;
    res["cut_profile"] = profile_json(r.profile_prime);
    res["outputs"] = {{"graph", graph_path}, {"layout", layout_path}, {"report", report_path}};
    int code = exit_code::ok;
    if (a.verify) {
        PlanarizationCheck c = verify_planarization_report(g, layout, a.t, r, problem);
        res["verification"] = {{"planar", c.planar},           {"width_bound", c.width_bound},
                               {"target", c.target},           {"optimum_shift", c.optimum_shift},
                               {"opt_before", c.opt_before},   {"opt_after", c.opt_after},
                               {"passed", c.passed()},         {"detail", c.detail}};
        err << "verify: " << (c.passed() ? "PASS" : "FAIL " + c.detail) << '\n';
        if (!c.passed()) code = exit_code::verification;
    }
    rep.doc["result"] = res;
    std::ostringstream ss;
    rep.emit(ss);
    write_file(report_path, ss.str());
    out << ss.str();
    return code;
}

struct SolveArgs {
    std::string graph, layout, problem = "is", algo = "dp";
    int brute_limit = kDefaultBruteForceLimit;
    double memory_mib = static_cast<double>(kDefaultMemoryBudget >> 20);
};

int cmd_solve(const SolveArgs& a, const std::vector<std::string>& args, std::ostream& out) {
    Report rep("solve", args);
    Graph g = load_graph_file(a.graph);
    rep.input("graph", a.graph);
    const Problem problem = problem_from_string(a.problem);
    json res;
    res["problem"] = to_string(problem);
    res["algo"] = a.algo;
    if (a.algo == "brute") {
        res["optimum"] = problem == Problem::is ? brute_is(g, a.brute_limit) : brute_ds(g, a.brute_limit);
    } else if (a.algo == "dp") {
        LinearLayout layout;
        if (!a.layout.empty()) {
            layout = load_layout_file(a.layout);
            rep.input("layout", a.layout);
            res["layout_source"] = "file";
        } else {
            layout = heuristic_layout(g);
            res["layout_source"] = "heuristic";
        }
        DPOptions opt;
        opt.memory_budget = static_cast<std::size_t>(a.memory_mib * (1 << 20));
        DPReport r = problem == Problem::is ? dp_is(g, layout, opt) : dp_ds(g, layout, opt);
        res.update(dp_json(r));
        res["cutwidth_of_layout"] = cut_profile(g, layout).max_width;
    } else {
        throw ParseError("--algo must be dp or brute");
    }
    rep.doc["result"] = res;
    rep.emit(out);
    return exit_code::ok;
}

struct CertifyArgs {
    std::string gadget, builtin;
    int hosts = 25;
    std::uint64_t seed = 0;
    int max_n = 0;
};

int cmd_certify(const CertifyArgs& a, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Report rep("certify", args);
    rep.doc["seed"] = a.seed;
    if (a.gadget.empty() == a.builtin.empty()) throw ParseError("give exactly one of a gadget file or --builtin");
    CrossoverGadget gadget = a.builtin.empty() ? load_gadget(a.gadget) : builtin_gadget(problem_from_string(a.builtin));
    if (!a.gadget.empty()) rep.input("gadget", a.gadget);

    json res;
    res["problem"] = to_string(gadget.problem);
    res["shift"] = gadget.shift;
    res["n"] = gadget.h.vertex_count();
    res["m"] = gadget.h.edge_count();
    res["layout_width"] = gadget.layout_width();
    bool pass = true;
    auto verdict = [&](const std::string& name, bool ok, const std::string& note = "") {
        err << name << ": " << (ok ? "PASS" : "FAIL") << (note.empty() ? "" : " (" + note + ")") << '\n';
        res["verdicts"][name] = ok;
        pass = pass && ok;
    };

    std::string structure_note;
    bool structure_ok = true;
    try {
        check_gadget_structure(gadget);
    } catch (const PreconditionError& e) {
        structure_ok = false;
        structure_note = e.what();
    }
    verdict("structure", structure_ok, structure_note);

    if (gadget.problem == Problem::is) {
        CertificationReport c = certify_is_gadget_report(gadget);
        json bf = json::object();
        for (unsigned f = 0; f < 16; ++f) bf[terminal_subset_name(f)] = c.boundary(f);
        res["boundary_function"] = bf;
        res["failures"] = c.failures;
        auto note = [&](char which) {
            std::string s;
            for (const auto& f : c.failures)
                if (f[1] == which) s += (s.empty() ? "" : "; ") + f;
            return s;
        };
        verdict("C1", c.c1, note('1'));
        verdict("C2", c.c2, note('2'));
        verdict("C3", c.c3, note('3'));
    }

    const int max_n = a.max_n > 0 ? a.max_n : (gadget.problem == Problem::is ? 12 : 8);
    int passed_hosts = 0;
    json trials = json::array();
    if (a.hosts > 0 && structure_ok) {
        for (const HostTrial& t : gadget_host_trials(gadget, a.hosts, a.seed, max_n)) {
            passed_hosts += t.ok;
            trials.push_back({{"n", t.n},
                              {"m", t.m},
                              {"e1", {t.e1.first + 1, t.e1.second + 1}},
                              {"e2", {t.e2.first + 1, t.e2.second + 1}},
                              {"opt_before", t.opt_before},
                              {"opt_after", t.opt_after},
                              {"dp_width", t.dp_width},
                              {"ok", t.ok}});
        }
    }
    res["host_trials"] = {{"requested", a.hosts}, {"passed", passed_hosts}, {"max_n", max_n}, {"trials", trials}};
    verdict("hosts", passed_hosts == a.hosts,
            std::to_string(passed_hosts) + "/" + std::to_string(a.hosts) + " shifts equal " +
                std::to_string(gadget.shift));
    res["verdict"] = pass ? "PASS" : "FAIL";
    err << "certify: " << (pass ? "PASS" : "FAIL") << ", shift " << gadget.shift << '\n';
    rep.doc["result"] = res;
    rep.emit(out);
    return pass ? exit_code::ok : exit_code::verification;
}

struct ExportArgs {
    std::string graph, layout, format = "svg", output;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
    Graph g = load_graph_file(a.graph);
    if (a.format == "dot") {
        write_output(a.output, format_dot(g), out);
    } else if (a.format == "svg") {
        LinearLayout layout = a.layout.empty() ? LinearLayout::identity(g.vertex_count()) : load_layout_file(a.layout);
        write_output(a.output, arc_drawing_svg(build_arc_drawing(g, layout)), out);
    } else {
        throw ParseError("--format must be dot or svg");
    }
    return exit_code::ok;
}

struct GadgetArgs {
    std::string problem = "is", output;
};

int cmd_gadget(const GadgetArgs& a, std::ostream& out) {
    write_output(a.output, gadget_to_json(builtin_gadget(problem_from_string(a.problem))).dump(1) + "\n", out);
    return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cutwidth-preserving planarization with crossover gadgets", "ctw"};
    app.require_subcommand(1);

    CutwidthArgs cw;
    auto* c_cw = app.add_subcommand("cutwidth", "Cut profile of a layout, exact cutwidth, or heuristic width");
    c_cw->add_option("graph", cw.graph, "Graph file")->required()->check(CLI::ExistingFile);
    c_cw->add_option("layout", cw.layout, "Layout file")->check(CLI::ExistingFile);
    c_cw->add_flag("--exact", cw.exact, "Exact cutwidth by subset dynamic programming");
    c_cw->add_option("--oracle-limit", cw.oracle_limit, "Vertex limit of the exact oracle")->capture_default_str();

    PlanarizeArgs pl;
    auto* c_pl = app.add_subcommand("planarize", "Replace every crossing of the arc drawing by a gadget");
    c_pl->add_option("graph", pl.graph, "Graph file")->required()->check(CLI::ExistingFile);
    c_pl->add_option("layout", pl.layout, "Layout file")->required()->check(CLI::ExistingFile);
    c_pl->add_option("--problem", pl.problem, "is or ds")->check(CLI::IsMember({"is", "ds"}))->capture_default_str();
    c_pl->add_option("--t", pl.t, "Target value t")->capture_default_str();
    c_pl->add_option("--gadget", pl.gadget, "Gadget JSON instead of the built-in one")->check(CLI::ExistingFile);
    c_pl->add_option("-o,--output", pl.output, "Output prefix for .graph, .layout, .json")->capture_default_str();
    c_pl->add_flag("--verify", pl.verify, "Check planarity, width bound and optimum shift");

    SolveArgs so;
    auto* c_so = app.add_subcommand("solve", "Exact optimum by brute force or layout DP");
    c_so->add_option("graph", so.graph, "Graph file")->required()->check(CLI::ExistingFile);
    c_so->add_option("layout", so.layout, "Layout file (dp only; default heuristic)")->check(CLI::ExistingFile);
    c_so->add_option("--problem", so.problem, "is or ds")->check(CLI::IsMember({"is", "ds"}))->capture_default_str();
    c_so->add_option("--algo", so.algo, "dp or brute")->check(CLI::IsMember({"dp", "brute"}))->capture_default_str();
    c_so->add_option("--brute-limit", so.brute_limit, "Vertex limit for brute force")->capture_default_str();
    c_so->add_option("--memory-mib", so.memory_mib, "DP memory budget in MiB")->capture_default_str();

    CertifyArgs ce;
    auto* c_ce = app.add_subcommand("certify", "Check a gadget's usefulness conditions and host shifts");
    c_ce->add_option("gadget", ce.gadget, "Gadget JSON")->check(CLI::ExistingFile);
    c_ce->add_option("--builtin", ce.builtin, "Certify the built-in gadget: is or ds")->check(CLI::IsMember({"is", "ds"}));
    c_ce->add_option("--hosts", ce.hosts, "Random host count")->capture_default_str();
    c_ce->add_option("--seed", ce.seed, "Random seed")->capture_default_str();
    c_ce->add_option("--max-n", ce.max_n, "Largest host (default 12 for is, 8 for ds)");

    ExportArgs ex;
    auto* c_ex = app.add_subcommand("export", "DOT graph or SVG arc diagram");
    c_ex->add_option("graph", ex.graph, "Graph file")->required()->check(CLI::ExistingFile);
    c_ex->add_option("layout", ex.layout, "Layout file (svg; default identity)")->check(CLI::ExistingFile);
    c_ex->add_option("--format", ex.format, "dot or svg")->check(CLI::IsMember({"dot", "svg"}))->capture_default_str();
    c_ex->add_option("-o,--output", ex.output, "Output file (default stdout)");

    GadgetArgs ga;
    auto* c_ga = app.add_subcommand("gadget", "Write a built-in gadget as JSON");
    c_ga->add_option("--problem", ga.problem, "is or ds")->check(CLI::IsMember({"is", "ds"}))->capture_default_str();
    c_ga->add_option("-o,--output", ga.output, "Output file (default stdout)");

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::parse;
    }

    try {
        if (c_cw->parsed()) return cmd_cutwidth(cw, args, out);
        if (c_pl->parsed()) return cmd_planarize(pl, args, out, err);
        if (c_so->parsed()) return cmd_solve(so, args, out);
        if (c_ce->parsed()) return cmd_certify(ce, args, out, err);
        if (c_ex->parsed()) return cmd_export(ex, out);
        if (c_ga->parsed()) return cmd_gadget(ga, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_code::parse;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return exit_code::resource;
    } catch (const OracleLimitError& e) {
        err << "size limit: " << e.what() << '\n';
        return exit_code::resource;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return exit_code::precondition;
    } catch (const InvariantViolation& e) {
        err << "verification failure: " << e.what() << '\n';
        return exit_code::verification;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::failure;
    }
    return exit_code::failure;
}

}  // namespace ctw
