#include "isolation/error.hpp"
#include "isolation/harness/commands.hpp"
#include "isolation/harness/formats.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace isolation;
using namespace isolation::harness;

namespace {

auto load(const std::string & path) -> GraphInput
{
    return {path, read_graph_file(path)};
}

auto split_csv(const std::string & text) -> std::vector<std::string>
{
    std::vector<std::string> out;
    std::string item;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (! item.empty())
                out.push_back(item);
            item.clear();
        }
        else if (ch != ' ') {
            item.push_back(ch);
        }
    }
    return out;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"k-isolating sets: exact values, constructive witnesses, verification and searches"};
    app.require_subcommand(1);

    bool as_json = false;
    std::optional<std::uint64_t> global_seed;
    app.add_flag("--json", as_json, "emit the report as JSON");
    app.add_option("--seed", global_seed, "seed for randomized commands");

    int k = 1;
    std::string file;
    std::string witness_csv;
    std::string track = "thm16";
    bool trace = false, fallback = false;

    auto * compute = app.add_subcommand("compute", "exact iota_k of every graph in a file");
    compute->add_option("--k", k, "residual degree bound")->check(CLI::NonNegativeNumber);
    compute->add_option("file", file, "edge-list or graph6 file, - for stdin")->required();

    auto * verify = app.add_subcommand("verify", "check that a vertex set is k-isolating");
    verify->add_option("--k", k)->check(CLI::NonNegativeNumber);
    verify->add_option("--witness", witness_csv, "comma-separated vertex ids")->required();
    verify->add_option("file", file)->required();

    auto * construct_cmd = app.add_subcommand("construct", "build a 1-isolating set of size <= n/4");
    construct_cmd->add_option("--track", track)->check(CLI::IsMember({"thm16", "thm17"}))->required();
    construct_cmd->add_flag("--trace", trace, "include the case trace");
    construct_cmd->add_flag("--fallback-exact", fallback, "solve small stuck subproblems exactly (debug aid)");
    construct_cmd->add_option("file", file)->required();

    ExtremalRequest extremal;
    std::string kinds_csv, joins_csv;
    auto * extremal_cmd = app.add_subcommand("extremal", "write an extremal instance with its designated witness");
    extremal_cmd->add_option("--t", extremal.t, "backbone order")->required()->check(CLI::PositiveNumber);
    extremal_cmd->add_option("--kinds", kinds_csv, "gadget kinds, one per backbone vertex or one for all")
        ->required();
    extremal_cmd->add_option("--leaves", extremal.leaves)->check(CLI::Range(0, 3));
    extremal_cmd->add_option("--backbone", extremal.backbone, "path, star, cycle or complete")
        ->check(CLI::IsMember({"path", "star", "cycle", "complete"}));
    extremal_cmd->add_option("--joins", joins_csv, "gadget vertex joined to each backbone vertex");
    extremal_cmd->add_flag("--exact", extremal.exact, "also compute iota_1 exactly");
    extremal_cmd->add_option("--out", extremal.out, "edge-list output file")->required();

    ScanRequest scan;
    std::string assertion;
    auto * scan_cmd = app.add_subcommand("scan", "check a bound over all connected graphs up to nmax");
    scan_cmd->add_option("--nmax", scan.nmax)->required();
    scan_cmd->add_option("--assert", assertion)->required()->check(CLI::IsMember({"thm11", "thm15", "thm16", "thm17"}));
    scan_cmd->add_option("--k", scan.k, "k for thm11")->check(CLI::NonNegativeNumber);

    SearchRequest search;
    std::string search_class = "induced6free";
    std::optional<std::uint64_t> search_seed;
    auto * search_cmd = app.add_subcommand("search", "hill climbing for graphs with a large iota_1/n");
    search_cmd->add_option("--class", search_class)->check(CLI::IsMember({"induced6free"}));
    search_cmd->add_option("--nmin", search.nmin)->required();
    search_cmd->add_option("--nmax", search.nmax)->required();
    search_cmd->add_option("--budget", search.budget)->required()->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--seed", search_seed);
    search_cmd->add_option("--restart-after", search.restart_after)->check(CLI::PositiveNumber);
    search_cmd->add_option("--out", search.out, "edge-list file for the best instance");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? exit_success : exit_usage;
    }

    try {
        RunReport report;
        if (*compute) {
            report = cmd_compute(load(file), k);
        }
        else if (*verify) {
            report = cmd_verify(load(file), VertexSet(parse_vertex_csv(witness_csv)), k);
        }
        else if (*construct_cmd) {
            report = cmd_construct(load(file), {parse_track(track), trace, fallback});
        }
        else if (*extremal_cmd) {
            for (const auto & name : split_csv(kinds_csv))
                extremal.kinds.push_back(parse_kind(name));
            extremal.join_points = parse_vertex_csv(joins_csv);
            report = cmd_extremal(extremal);
        }
        else if (*scan_cmd) {
            scan.assertion = parse_assertion(assertion);
            report = cmd_scan(scan);
        }
        else if (*search_cmd) {
            if (! search_seed && ! global_seed) {
                std::cerr << "search needs an explicit --seed\n";
                return exit_usage;
            }
            search.seed = search_seed ? *search_seed : *global_seed;
            report = cmd_search(search);
        }

        if (as_json)
            std::cout << report.to_json().dump(2) << '\n';
        else
            std::cout << report.to_text();
        return report.exit_code();
    }
    catch (const CaseExhaustion & e) {
        std::cerr << e.what() << '\n';
        return exit_violations;
    }
    catch (const IsolationError & e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
}
