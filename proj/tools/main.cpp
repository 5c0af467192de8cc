// bundlelabel: construct cycle-over-cycle graph bundles, emit closed-form
// L(d,1)-labelings with admissibility certificates, verify labelings, and
// solve small instances exactly.
//
// Exit codes: 0 success / labeling valid, 1 labeling invalid,
// 2 malformed arguments or inadmissible parameters, 3 solver budget
// exhausted.

#include "bundlelabel/bundle.hpp"
#include "bundlelabel/io.hpp"
#include "bundlelabel/labeling.hpp"
#include "bundlelabel/schemes.hpp"
#include "bundlelabel/solver.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace bundlelabel;

ProductKind parse_kind(const std::string& s) {
    if (s == "direct") return ProductKind::Direct;
    if (s == "cartesian") return ProductKind::Cartesian;
    throw std::invalid_argument("kind must be \"direct\" or \"cartesian\"");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << text;
}

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

std::string certificate_line(const AdmissibilityCertificate& cert) {
    std::ostringstream os;
    os << "case=" << case_name(cert.form) << " a=" << cert.a
       << " k=" << cert.k;
    if (cert.t) os << " t=" << *cert.t;
    if (cert.t_prime) os << " t_prime=" << *cert.t_prime;
    if (cert.p) os << " p=" << *cert.p;
    if (cert.i_case) os << " i=" << *cert.i_case;
    return os.str();
}

struct Args {
    std::string kind = "direct";
    int m = 0;
    int n = 0;
    int ell = 0;
    int d = 1;
    std::string format;
    std::string output;
    std::string input;
    long long budget = kDefaultNodeBudget;
    bool reflect = false;
    bool quiet = false;
};

int run_gen(const Args& args) {
    BundleSpec spec{parse_kind(args.kind), args.m, args.n, args.ell};
    Graph g = build_bundle(spec);
    if (args.format == "dot")
        write_output(to_dot(g, spec.n), args.output);
    else
        write_output(to_edge_list(g), args.output);
    return 0;
}

int run_label(const Args& args) {
    BundleSpec spec{parse_kind(args.kind), args.m, args.n, args.ell};
    OptimalLabeling result = label_optimal(spec, args.d);
    const auto& labels = result.labeling.labels;
    if (args.format == "json") {
        LabelingFile file{spec.kind, spec.m, spec.n,  spec.ell,
                          args.d,    labels, result.certificate};
        write_output(to_json(file), args.output);
    } else if (args.format == "csv") {
        write_output(to_csv(labels, spec.m, spec.n), args.output);
    } else {
        write_output(to_grid(labels, spec.m, spec.n), args.output);
    }
    if (args.format != "json")
        std::cerr << "certificate: " << certificate_json(result.certificate)
                  << "\n";
    std::cerr << "span " << span_of(labels)
              << (args.d <= 4 ? " (optimal)" : " (upper bound only)") << "\n";
    return 0;
}

int run_verify(const Args& args) {
    LabelingFile file = labeling_from_json(read_input(args.input));
    if (!file.kind || !file.ell)
        throw std::invalid_argument(
            "labeling file lacks \"kind\"/\"ell\"; cannot rebuild the bundle");
    BundleSpec spec{*file.kind, file.m, file.n, *file.ell};
    Graph g = build_bundle(spec);
    ValidityReport report = verify_labeling(g, {file.labels, file.d});
    if (report.valid) {
        std::cout << "valid, span " << report.span << "\n";
        return 0;
    }
    std::cout << "invalid, span " << report.span << ", "
              << report.violations.size() << " violations\n";
    for (const auto& v : report.violations)
        std::cout << "  u=" << v.u << " v=" << v.v << " distance=" << v.distance
                  << " gap=" << v.gap << "\n";
    return 1;
}

int run_shifts(const Args& args) {
    ProductKind kind = parse_kind(args.kind);
    for (int ell = 0; ell < args.n; ++ell) {
        BundleSpec spec{kind, args.m, args.n, ell};
        for (const auto& cert : certify(spec, args.d))
            std::cout << "ell=" << ell << " " << certificate_line(cert) << "\n";
    }
    return 0;
}

int run_lambda(const Args& args) {
    BundleSpec spec{parse_kind(args.kind), args.m, args.n, args.ell};
    Graph g = build_bundle(spec);
    SearchOptions opts;
    opts.node_budget = args.budget;
    opts.reflect_symmetry_break = args.reflect;
    if (!args.quiet)
        opts.on_progress = [](long long nodes) {
            std::cerr << "... " << nodes << " nodes\n";
        };
    SolveResult result = lambda_exact(g, args.d, opts);
    if (result.timed_out) {
        std::cout << "budget exhausted after " << result.nodes_explored
                  << " nodes; lambda >= " << result.lower_bound << "\n";
        return 3;
    }
    std::cout << "lambda = " << result.lambda << "\n";
    std::cout << "nodes = " << result.nodes_explored << "\n";
    std::cout << to_grid(result.witness.labels, spec.m, spec.n);
    return 0;
}

int run_figure() {
    struct Config {
        ProductKind kind;
        int ell;
        SchemeKind scheme;
        int a;
    };
    // The eight span-6 L(2,1) grids on C_9 bundles with fibre C_7, one
    // per closed form.
    const Config configs[] = {
        {ProductKind::Direct, 3, SchemeKind::F, 1},
        {ProductKind::Direct, 4, SchemeKind::F, 2},
        {ProductKind::Direct, 6, SchemeKind::G, 1},
        {ProductKind::Direct, 1, SchemeKind::G, 2},
        {ProductKind::Cartesian, 6, SchemeKind::F, 1},
        {ProductKind::Cartesian, 1, SchemeKind::F, 2},
        {ProductKind::Cartesian, 3, SchemeKind::G, 1},
        {ProductKind::Cartesian, 4, SchemeKind::G, 2},
    };
    bool first = true;
    for (const auto& cfg : configs) {
        BundleSpec spec{cfg.kind, 9, 7, cfg.ell};
        Labeling l = labels_from_scheme(spec, {2, cfg.scheme, cfg.a});
        if (!first) std::cout << "\n";
        first = false;
        std::cout << kind_name(cfg.kind) << " ell=" << cfg.ell << " scheme="
                  << (cfg.scheme == SchemeKind::F ? 'f' : 'g')
                  << " a=" << cfg.a << "\n";
        std::cout << to_grid(l.labels, spec.m, spec.n);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"L(d,1)-labelings of direct and Cartesian cycle-over-cycle "
                 "graph bundles"};
    app.require_subcommand(1);
    Args args;

    auto add_spec_opts = [&](CLI::App* sub, bool with_ell) {
        sub->add_option("--kind", args.kind, "direct or cartesian")
            ->required();
        sub->add_option("-m", args.m, "base cycle order")->required();
        sub->add_option("-n", args.n, "fibre cycle order")->required();
        if (with_ell)
            sub->add_option("--ell", args.ell, "cyclic shift")->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "construct a bundle graph");
    add_spec_opts(gen, true);
    gen->add_option("--format", args.format, "edgelist or dot")
        ->default_val("edgelist")
        ->check(CLI::IsMember({"edgelist", "dot"}));
    gen->add_option("-o,--output", args.output, "output file (default stdout)");

    CLI::App* label =
        app.add_subcommand("label", "closed-form optimal labeling");
    add_spec_opts(label, true);
    label->add_option("-d", args.d, "separation parameter")->required();
    label->add_option("--format", args.format, "grid, csv or json")
        ->default_val("grid")
        ->check(CLI::IsMember({"grid", "csv", "json"}));
    label->add_option("-o,--output", args.output,
                      "output file (default stdout)");

    CLI::App* verify =
        app.add_subcommand("verify", "verify a labeling JSON file");
    verify->add_option("file", args.input,
                       "labeling JSON (default stdin, \"-\" for stdin)");

    CLI::App* shifts =
        app.add_subcommand("shifts", "list admissible shifts with certificates");
    add_spec_opts(shifts, false);
    shifts->add_option("-d", args.d, "separation parameter")->required();

    CLI::App* lambda =
        app.add_subcommand("lambda", "exact minimum span by backtracking");
    add_spec_opts(lambda, true);
    lambda->add_option("-d", args.d, "separation parameter")->required();
    lambda->add_option("--budget", args.budget, "search node budget")
        ->default_val(kDefaultNodeBudget);
    lambda->add_flag("--reflect", args.reflect,
                     "halve the first branching vertex's label range");
    lambda->add_flag("--quiet", args.quiet, "suppress progress output");

    CLI::App* figure = app.add_subcommand(
        "figure", "print the eight reference span-6 L(2,1) grids (m=9, n=7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(args);
        if (label->parsed()) return run_label(args);
        if (verify->parsed()) return run_verify(args);
        if (shifts->parsed()) return run_shifts(args);
        if (lambda->parsed()) return run_lambda(args);
        if (figure->parsed()) return run_figure();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
