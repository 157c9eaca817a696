#pragma once

#include "treebound/bounds.hpp"
#include "treebound/edge_list.hpp"
#include "treebound/families.hpp"
#include "treebound/kirchhoff.hpp"
#include "treebound/multigraph.hpp"
#include "treebound/numbers.hpp"
#include "treebound/spectrum.hpp"
#include "treebound/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace treebound::cli {

namespace detail {

inline const char* status_label(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        default: return "SKIP";
    }
}

/// Doubles in CSV always carry a decimal point so the column never reads as
/// an integer one.
inline std::string csv_double(double v) {
    std::string s = decimal_string(v, 12);
    if (s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

inline void print_bound_report(std::ostream& out, const BoundReport& r) {
    out << "tau=" << r.tau << " bound=" << (r.bound_finite ? rational_string(r.bound) : "inf")
        << (r.holds ? " HOLDS" : " VIOLATED") << " EQUALITY=" << (r.equality ? "yes" : "no") << '\n';
    out << "bound_decimal=" << (r.bound_finite ? decimal_string(r.bound, 12) : "inf") << '\n';
    if (!r.preconditions.empty()) {
        out << "preconditions:";
        for (const auto& [name, value] : r.preconditions) out << ' ' << name << '=' << (value ? "yes" : "no");
        out << '\n';
    }
}

inline std::vector<Multigraph> load_parts(const std::vector<std::string>& paths) {
    std::vector<Multigraph> parts;
    parts.reserve(paths.size());
    for (const auto& p : paths) parts.push_back(load_edge_list(p));
    return parts;
}

struct SweepParams {
    std::string family;
    int n_max = 0;
    std::int64_t delta = 3;
    std::uint64_t seed = 1;
    int count = 10;
};

inline void sweep_emit(std::ostream& out, const std::string& family, const Multigraph& g) {
    const BoundReport r = check_degree_bound(g);
    const double ratio = (Rational(r.tau) / r.bound).convert_to<double>();
    out << family << ',' << g.order() << ',' << max_multiplicity(g) << ',' << r.tau << ','
        << rational_string(r.bound) << ',' << csv_double(ratio) << ','
        << (r.equality ? "true" : "false") << '\n';
}

inline void run_sweep(const SweepParams& p, std::ostream& out) {
    out << "family,n,delta,tau,bound,ratio,equality\n";
    if (p.family == "complete") {
        for (int n = 2; n <= p.n_max; ++n) sweep_emit(out, p.family, complete_graph(n));
    } else if (p.family == "cycle") {
        for (int n = 3; n <= p.n_max; ++n) sweep_emit(out, p.family, cycle_graph(n));
    } else if (p.family == "path") {
        for (int n = 2; n <= p.n_max; ++n) sweep_emit(out, p.family, path_graph(n));
    } else if (p.family == "complete-bipartite") {
        for (int n = 2; n <= p.n_max; ++n) sweep_emit(out, p.family, complete_bipartite((n + 1) / 2, n / 2));
    } else {
        Rng rng(p.seed);
        for (int row = 0; row < p.count; ++row) {
            const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n_max) - 1));
            Multigraph g(1);
            do {
                g = p.family == "random-simple" ? random_simple_graph(n, rng)
                                                : random_multigraph(n, p.delta, rng);
            } while (!g.has_edges());
            sweep_emit(out, p.family, g);
        }
    }
}

}  // namespace detail

/// Front end over the library. `args` is argv without the program name.
/// Returns 0 on success, 1 on parse/precondition failures, 2 when `verify`
/// finds a failing check.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spanning-tree counts, Laplacian spectra, and degree-sequence bounds for multigraphs",
                 "treebound"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> files;
    detail::SweepParams sweep;

    auto* count_cmd = app.add_subcommand("count", "exact spanning-tree count");
    count_cmd->add_option("file", file, "graph in edge-list format")->required();

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian eigenvalues, one per line");
    spectrum_cmd->add_option("file", file, "graph in edge-list format")->required();

    auto* bound_cmd = app.add_subcommand("bound", "degree-sequence bound report");
    bound_cmd->add_option("file", file, "graph in edge-list format")->required();

    auto* verify_cmd = app.add_subcommand("verify", "cross-check every computation route");
    verify_cmd->add_option("file", file, "graph in edge-list format")->required();

    auto* join_cmd = app.add_subcommand("join", "join of two or more graphs, as an edge list");
    join_cmd->add_option("files", files, "part graphs in edge-list format")->required()->expected(-2);

    auto* product_cmd = app.add_subcommand("product", "Cartesian product of two simple graphs");
    product_cmd->add_option("files", files, "factor graphs in edge-list format")->required()->expected(2);

    auto* join_bound_cmd = app.add_subcommand("join-bound", "bound report for a join");
    join_bound_cmd->add_option("files", files, "part graphs in edge-list format")->required()->expected(-2);

    auto* product_bound_cmd = app.add_subcommand("product-bound", "bound report for a Cartesian product");
    product_bound_cmd->add_option("files", files, "factor graphs in edge-list format")
        ->required()
        ->expected(2);

    auto* sweep_cmd = app.add_subcommand("sweep", "bound reports over a graph family, as CSV");
    sweep_cmd->add_option("--family", sweep.family, "graph family")
        ->required()
        ->check(CLI::IsMember(
            {"complete", "cycle", "path", "complete-bipartite", "random-simple", "random-multi"}));
    sweep_cmd->add_option("--n-max", sweep.n_max, "largest vertex count")->required()->check(CLI::Range(2, 10000));
    sweep_cmd->add_option("--delta", sweep.delta, "multiplicity cap for random-multi")->check(CLI::Range(1, 1000000));
    sweep_cmd->add_option("--seed", sweep.seed, "random seed");
    sweep_cmd->add_option("--count", sweep.count, "rows for random families")->check(CLI::Range(1, 1000000));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (count_cmd->parsed()) {
            out << tau_exact(load_edge_list(file)) << '\n';
        } else if (spectrum_cmd->parsed()) {
            const Spectrum s = laplacian_spectrum(load_edge_list(file));
            for (double v : s.values) out << decimal_string(v, 12) << '\n';
        } else if (bound_cmd->parsed()) {
            detail::print_bound_report(out, check_degree_bound(load_edge_list(file)));
        } else if (verify_cmd->parsed()) {
            const auto results = run_verification(load_edge_list(file));
            for (const auto& r : results) {
                out << r.name << ": " << detail::status_label(r.status);
                if (!r.detail.empty()) out << " (" << r.detail << ")";
                out << '\n';
            }
            if (!all_passed(results)) return 2;
        } else if (join_cmd->parsed()) {
            out << write_edge_list(join(detail::load_parts(files)));
        } else if (product_cmd->parsed()) {
            const auto factors = detail::load_parts(files);
            out << write_edge_list(cartesian_product(factors[0], factors[1]));
        } else if (join_bound_cmd->parsed()) {
            detail::print_bound_report(out, join_bound(detail::load_parts(files)));
        } else if (product_bound_cmd->parsed()) {
            const auto factors = detail::load_parts(files);
            detail::print_bound_report(out, cartesian_bound(factors[0], factors[1]));
        } else if (sweep_cmd->parsed()) {
            detail::run_sweep(sweep, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace treebound::cli
