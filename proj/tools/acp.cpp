#include <acp/bounds.hpp>
#include <acp/edgelist.hpp>
#include <acp/error.hpp>
#include <acp/families.hpp>
#include <acp/milp.hpp>
#include <acp/solver.hpp>
#include <acp/sweep.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace acp;
using std::cerr;
using std::cout;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    enum Exit
    {
        ok = 0,
        usage = 1,
        violation = 2,
        resource = 3
    };

    auto csv(std::span<const int> values) -> string
    {
        string out;
        for (std::size_t i = 0; i < values.size(); ++i)
            out += (i ? "," : "") + to_string(values[i]);
        return out;
    }

    auto cmd_family(const string & text) -> int
    {
        auto spec = parse_family_spec(text);
        auto g = generate(spec);
        auto cert = certify(spec);
        auto bounds = combined_bounds(g);
        cout << "family=" << spec_string(spec) << " n=" << g.order() << " m=" << g.size() << "\n";
        cout << "eta=" << cert.eta << "\n";
        if (cert.labeling) {
            cout << "labeling=" << csv(cert.labeling->values()) << "\n";
            cout << "provenance=" << name_of(cert.provenance) << "\n";
            cout << "verified=" << (verify_additive_coloring(g, *cert.labeling) ? "yes" : "NO") << "\n";
        }
        cout << "lower_bound_witness=" << cert.lower_bound_witness << "\n";
        cout << "bounds lower=" << bounds.eta_lower << " upper=" << bounds.eta_upper << "\n";
        for (auto & w : bounds.witnesses)
            cout << "  " << w.name << "=" << w.value << (w.detail.empty() ? "" : " (" + w.detail + ")") << "\n";
        return ok;
    }

    auto cmd_solve(const string & input, std::uint64_t budget) -> int
    {
        int status = ok;
        EtaSearchOptions options;
        options.node_budget = budget;
        for (auto & [name, g] : read_graph_argument(input)) {
            auto result = solve_eta(g, options, true);
            cout << "graph=" << name << " n=" << g.order() << " m=" << g.size() << " components=" << connected_components(g).size();
            if (result.status != SolveStatus::solved) {
                cout << " eta=? status=" << name_of(result.status) << " nodes=" << result.stats.nodes << "\n";
                status = resource;
                continue;
            }
            auto verified = result.certificate && verify_additive_coloring(g, *result.certificate);
            cout << " eta=" << result.value << " source=" << name_of(result.source) << " nodes=" << result.stats.nodes << "\n";
            if (result.certificate)
                cout << "labeling=" << csv(result.certificate->values()) << " verified=" << (verified ? "yes" : "NO") << "\n";
        }
        return status;
    }

    auto component_path(const string & base, std::size_t index, std::size_t count) -> string
    {
        if (count == 1)
            return base;
        std::filesystem::path p(base);
        auto stem = p.stem().string() + "_c" + to_string(index + 1);
        return (p.parent_path() / (stem + p.extension().string())).string();
    }

    auto cmd_export_lp(const string & input, std::optional<long long> ub, bool valid, bool symmetry, const string & output) -> int
    {
        auto graphs = read_graph_argument(input);
        if (graphs.size() != 1)
            throw InputError("export-lp takes a single graph, " + input + " holds " + to_string(graphs.size()));
        auto & g = graphs.front().graph;
        vector<vector<Vertex>> parts;
        for (auto & c : connected_components(g))
            if (c.size() > 1)
                parts.push_back(c);
        if (parts.empty())
            throw InputError("graph has no edge; eta = 1 and there is nothing to export");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            auto sub = induced_subgraph(g, parts[i]);
            auto bound = ub.value_or(combined_bounds(sub).eta_upper);
            auto model = build_model(sub, bound, MilpOptions{valid, symmetry});
            auto path = component_path(output, i, parts.size());
            std::ofstream out(path);
            out << write_lp(model);
            out.close();
            if (! out)
                throw ResourceError("cannot write " + path);
            auto eliminated = std::count(model.eliminated.begin(), model.eliminated.end(), true);
            cout << "wrote " << path << " vertices=" << sub.order() << " ub=" << bound << " integers=" << model.active_variable_count(VariableKind::integer)
                 << " binaries=" << model.active_variable_count(VariableKind::binary) << " eliminated=" << eliminated
                 << " constraints=" << model.constraints.size() << "\n";
        }
        return ok;
    }

    auto cmd_sweep(const string & file, const SweepOptions & options, const string & report) -> int
    {
        std::ifstream file_in;
        if (file != "-") {
            file_in.open(file);
            if (! file_in)
                throw InputError("cannot open " + file);
        }
        std::istream & in = file == "-" ? std::cin : file_in;
        std::ofstream report_file;
        if (! report.empty()) {
            report_file.open(report);
            if (! report_file)
                throw ResourceError("cannot write " + report);
        }
        std::ostream & out = report.empty() ? cout : report_file;
        auto summary = run_sweep(in, options, [&](const SweepRecord & r) { out << format_record(r) << "\n"; });
        auto text = format_summary(summary);
        out << text;
        if (! report.empty())
            cout << text;
        if (summary.violations > 0 || summary.audit_failures > 0)
            return violation;
        if (summary.budget_exceeded > 0)
            return resource;
        return ok;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Additive coloring toolkit"};
    app.require_subcommand(1);

    string spec;
    auto family = app.add_subcommand("family", "Formula, labeling and bounds for a graph family");
    family->add_option("spec", spec, "e.g. cycle:5, thin-spider:4, multipartite:3,2,2, join:2:cycle:9")->required();

    string input;
    std::uint64_t budget = 10'000'000;
    auto solve = app.add_subcommand("solve", "Exact additive chromatic number of a graph");
    solve->add_option("graph", input, "graph6 string, graph6 file or edge-list file")->required();
    solve->add_option("--budget", budget, "search node budget");

    std::optional<long long> ub;
    bool valid = false, symmetry = false;
    string lp_output = "model.lp";
    auto export_lp = app.add_subcommand("export-lp", "Write the integer program in LP format");
    export_lp->add_option("graph", input, "graph6 string or file")->required();
    export_lp->add_option("--ub", ub, "label upper bound (default: best known upper bound)")->check(CLI::PositiveNumber);
    export_lp->add_flag("--valid", valid, "add the neighbourhood-containment inequalities");
    export_lp->add_flag("--symmetry", symmetry, "add twin symmetry breaking");
    export_lp->add_option("-o,--output", lp_output, "output path; one file per component");

    string corpus, report;
    SweepOptions sweep_options;
    auto sweep = app.add_subcommand("sweep", "Check eta <= chi over a graph6 corpus");
    sweep->add_option("file", corpus, "graph6 file, - for stdin")->required();
    sweep->add_option("--max-n", sweep_options.max_n, "skip graphs with more vertices");
    sweep->add_option("--workers", sweep_options.workers, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--budget", sweep_options.node_budget, "search node budget per graph");
    sweep->add_option("-o,--output", report, "report path (default stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? ok : usage;
    }

    try {
        if (*family)
            return cmd_family(spec);
        if (*solve)
            return cmd_solve(input, budget);
        if (*export_lp)
            return cmd_export_lp(input, ub, valid, symmetry, lp_output);
        return cmd_sweep(corpus, sweep_options, report);
    }
    catch (const ResourceError & e) {
        cerr << "acp: " << e.what() << "\n";
        return resource;
    }
    catch (const std::exception & e) {
        cerr << "acp: " << e.what() << "\n";
        return usage;
    }
}
