/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <minhom/errors.hh>
#include <minhom/hardness.hh>
#include <minhom/io.hh>
#include <minhom/oracle.hh>
#include <minhom/recognition.hh>
#include <minhom/solver.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iostream>
#include <random>

using std::cerr;
using std::cout;
using std::string;
using std::to_string;
using std::vector;

using namespace minhom;

namespace
{
    constexpr int exit_ok = 0, exit_error = 1, exit_np_complete = 2;

    struct Globals
    {
        int limit_template_size = 10;
        int parallel = 1;
        unsigned seed = 0;

        auto limits() const -> SearchLimits
        {
            return SearchLimits{ limit_template_size, false };
        }
    };

    auto load_digraph(const string & path) -> DigraphFile
    {
        return parse_digraph(read_file(path));
    }

    auto join_names(const Digraph & h, const vector<Vertex> & vs) -> string
    {
        string out;
        for (auto v : vs)
            out += (out.empty() ? "" : " ") + h.name(v);
        return out;
    }

    auto run_classify(const Globals & g, const string & path) -> int
    {
        auto file = load_digraph(path);
        auto verdict = classify(file.graph, default_catalog(), g.limits());
        cout << "template: " << file.name << "\n";
        if (auto p = std::get_if<Polynomial>(&verdict)) {
            cout << "verdict: polynomial\n";
            cout << "ordering: " << join_names(file.graph, p->ordering.sequence()) << "\n";
            return exit_ok;
        }
        auto & np = std::get<NPComplete>(verdict);
        cout << "verdict: NP-complete\n";
        cout << "certificate: " << describe(file.graph, np.certificate, default_catalog()) << "\n";
        return exit_np_complete;
    }

    auto run_ordering(const Globals & g, const string & path) -> int
    {
        auto file = load_digraph(path);
        if (file.graph.is_reflexive())
            return run_classify(g, path);

        // Without loops there is no certificate theory here, just the search.
        if (auto order = find_min_max_bruteforce(file.graph, g.limits())) {
            cout << "ordering: " << join_names(file.graph, order->sequence()) << "\n";
            return exit_ok;
        }
        cout << "no Min-Max ordering\n";
        return exit_np_complete;
    }

    auto run_solve(const Globals & g, const string & template_path, const string & instance_path,
            const string & costs_path, bool bruteforce) -> int
    {
        auto h = load_digraph(template_path).graph;
        auto instance = load_digraph(instance_path).graph;
        auto costs = parse_costs(read_file(costs_path), instance, h);

        Homomorphism result;
        if (h.is_reflexive()) {
            auto verdict = classify(h, default_catalog(), g.limits());
            if (auto p = std::get_if<Polynomial>(&verdict))
                result = solve(h, p->ordering, instance, costs);
            else if (bruteforce)
                result = minhom_bruteforce(instance, h, costs);
            else {
                cerr << "template is NP-complete ("
                    << describe(h, std::get<NPComplete>(verdict).certificate, default_catalog())
                    << "); rerun with --bruteforce for an exact exponential search\n";
                return exit_np_complete;
            }
        }
        else if (bruteforce)
            result = minhom_bruteforce(instance, h, costs);
        else
            throw PreconditionError("the min-cut solver needs a reflexive template; use --bruteforce");

        for (Vertex u = 0 ; u < instance.size() ; ++u)
            cout << instance.name(u) << " -> " << h.name(result.image[u]) << "\n";
        cout << "cost: " << result.cost.to_string() << "\n";
        return exit_ok;
    }

    auto run_catalog(const Globals & g, int max_size, const string & out) -> int
    {
        auto catalog = derive_obstruction_catalog(max_size, g.parallel);
        if (max_size >= 4)
            catalog = identify_labeled_obstructions(catalog).catalog;
        auto files = write_catalog(catalog, out);
        cout << "members: " << catalog.members.size() << "\n";
        cout << "classes: " << catalog.class_count << "\n";
        for (int m = 0 ; m < int(catalog.members.size()) ; ++m)
            cout << "member " << m << ": " << catalog.member_name(m) << " (" << catalog.members[m].graph.size()
                << " vertices, class " << catalog.members[m].converse_class << ")\n";
        cout << "files written: " << files.size() << "\n";
        return exit_ok;
    }

    auto parse_obstruction(string text) -> int
    {
        std::transform(text.begin(), text.end(), text.begin(), [] (unsigned char c) { return std::tolower(c); });
        if (! text.empty() && text[0] == 'h')
            text.erase(0, 1);
        if (text.size() != 1 || text[0] < '2' || text[0] > '6')
            throw PreconditionError("--obstruction must be one of h2 .. h6");
        return text[0] - '0';
    }

    auto run_reduce(const string & obstruction, const string & input, int k, const string & out) -> int
    {
        int i = parse_obstruction(obstruction);
        auto x = parse_three_coloured(read_file(input));
        auto & catalog = labeled_catalog();
        auto instance = gadget(i, x, k, catalog);
        auto files = write_gadget(instance, x, "H" + to_string(i), out);
        cout << "obstruction: H" << i << "\n";
        cout << "instance vertices: " << instance.instance.size() << "\n";
        cout << "instance arcs: " << instance.instance.arc_count() << "\n";
        cout << "budget: " << instance.budget.to_string() << "\n";
        cout << "files written: " << files.size() << "\n";
        return exit_ok;
    }

    auto run_verify(const Globals & g, int max_n, bool listing) -> int
    {
        auto report = verify_theorem(max_n, default_catalog(), g.parallel, listing);
        cout << report.summary();
        for (auto & line : report.listing)
            cout << line << "\n";
        return report.mismatches.empty() ? exit_ok : exit_error;
    }

    auto run_export_dot(const Globals & g, const string & path, const string & out) -> int
    {
        auto file = load_digraph(path);
        string dot;
        if (! file.graph.is_reflexive())
            dot = to_dot(file.graph, file.name);
        else {
            auto verdict = classify(file.graph, default_catalog(), g.limits());
            if (std::holds_alternative<Polynomial>(verdict))
                dot = to_dot(file.graph, file.name);
            else {
                auto & c = std::get<NPComplete>(verdict).certificate;
                if (auto s = std::get_if<SCertificate>(&c))
                    dot = to_dot(as_symmetric_digraph(symmetric_subgraph(file.graph)), "S(" + file.name + ")", s->embedding.image);
                else if (auto b = std::get_if<BCertificate>(&c))
                    dot = to_dot(bipartite_double(file.graph), "B(" + file.name + ")", b->embedding.white, b->embedding.black);
                else
                    dot = to_dot(file.graph, file.name, std::get<HCertificate>(c).embedding.image);
            }
        }

        if (out.empty())
            cout << dot;
        else
            write_file(out, dot);
        return exit_ok;
    }

    /// Random reflexive templates with a Min-Max ordering against the brute-force oracle.
    auto run_selftest(const Globals & g, int trials) -> int
    {
        std::mt19937 rng(g.seed);
        int done = 0, failures = 0;
        while (done < trials) {
            int n = 1 + int(rng() % 5);
            vector<Arc> arcs;
            for (int a = 0 ; a < n ; ++a)
                for (int b = 0 ; b < n ; ++b)
                    if (a == b || rng() % 2)
                        arcs.push_back(Arc{ a, b });
            auto h = Digraph::with_size(n, arcs);
            auto order = find_min_max_bruteforce(h);
            if (! order)
                continue;

            int m = 1 + int(rng() % 8);
            vector<Arc> instance_arcs;
            for (int a = 0 ; a < m ; ++a)
                for (int b = 0 ; b < m ; ++b)
                    if (rng() % 4 == 0)
                        instance_arcs.push_back(Arc{ a, b });
            auto instance = Digraph::with_size(m, instance_arcs);
            CostMatrix costs(m, n);
            for (int u = 0 ; u < m ; ++u)
                for (int i = 0 ; i < n ; ++i)
                    costs.set(u, i, Rational(long(rng() % 10)));

            auto fast = solve(h, *order, instance, costs);
            auto slow = minhom_bruteforce(instance, h, costs);
            if (fast.cost != slow.cost) {
                ++failures;
                cout << "mismatch on trial " << done << ": solver " << fast.cost.to_string()
                    << ", oracle " << slow.cost.to_string() << "\n";
            }
            ++done;
        }
        cout << "trials: " << done << "\nmismatches: " << failures << "\n";
        return failures ? exit_error : exit_ok;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Minimum cost homomorphisms to reflexive digraphs" };
    app.require_subcommand(1);

    Globals globals;
    app.add_option("--limit-template-size", globals.limit_template_size,
            "Largest template (or colour class) the exponential ordering searches accept")->check(CLI::PositiveNumber);
    app.add_option("--parallel", globals.parallel, "Worker threads for enumeration and verification")->check(CLI::PositiveNumber);
    app.add_option("--seed", globals.seed, "Random seed (selftest only)");

    string template_path, instance_path, costs_path, out_dir, input_path, obstruction, dot_out;
    int max_size = 4, max_n = 4, k = 0, trials = 100;
    bool bruteforce = false, listing = false;

    auto classify_cmd = app.add_subcommand("classify", "Decide polynomial or NP-complete, with an ordering or certificate");
    classify_cmd->add_option("template", template_path, "Digraph file")->required();

    auto ordering_cmd = app.add_subcommand("ordering", "Print a Min-Max ordering, or a certificate that none exists");
    ordering_cmd->add_option("template", template_path, "Digraph file")->required();

    auto solve_cmd = app.add_subcommand("solve", "Minimum cost homomorphism from instance to template");
    solve_cmd->add_option("--template", template_path, "Template digraph file")->required();
    solve_cmd->add_option("--instance", instance_path, "Instance digraph file")->required();
    solve_cmd->add_option("--costs", costs_path, "Cost table (CSV)")->required();
    solve_cmd->add_flag("--bruteforce", bruteforce, "Allow exhaustive search when the template is NP-complete");

    auto catalog_cmd = app.add_subcommand("catalog", "Derive the minimal obstructions and write them out");
    catalog_cmd->add_option("--max-size", max_size, "Largest obstruction size (1..5)")->required();
    catalog_cmd->add_option("--out", out_dir, "Output directory")->required();

    auto reduce_cmd = app.add_subcommand("reduce", "Build the hardness gadget for a three-coloured graph");
    reduce_cmd->add_option("--obstruction", obstruction, "h2 .. h6")->required();
    reduce_cmd->add_option("--input", input_path, "Three-coloured graph file")->required();
    reduce_cmd->add_option("--k", k, "Independent set size")->required();
    reduce_cmd->add_option("--out", out_dir, "Output directory")->required();

    auto verify_cmd = app.add_subcommand("verify-theorem", "Compare the characterisation with brute force on all small templates");
    verify_cmd->add_option("--max-n", max_n, "Largest template size (1..5)")->required();
    verify_cmd->add_flag("--listing", listing, "Also print one line per isomorphism class");

    auto dot_cmd = app.add_subcommand("export-dot", "Graphviz drawing, highlighting the certificate if there is one");
    dot_cmd->add_option("template", template_path, "Digraph file")->required();
    dot_cmd->add_option("--out", dot_out, "Write here instead of standard output");

    auto selftest_cmd = app.add_subcommand("selftest", "Random solver against brute-force checks");
    selftest_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*classify_cmd)
            return run_classify(globals, template_path);
        if (*ordering_cmd)
            return run_ordering(globals, template_path);
        if (*solve_cmd)
            return run_solve(globals, template_path, instance_path, costs_path, bruteforce);
        if (*catalog_cmd)
            return run_catalog(globals, max_size, out_dir);
        if (*reduce_cmd)
            return run_reduce(obstruction, input_path, k, out_dir);
        if (*verify_cmd)
            return run_verify(globals, max_n, listing);
        if (*dot_cmd)
            return run_export_dot(globals, template_path, dot_out);
        if (*selftest_cmd)
            return run_selftest(globals, trials);
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << "\n";
        return exit_error;
    }

    return exit_error;
}
