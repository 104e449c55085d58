// euler-refine: tables, identity verification and exploration for refinements
// of the Euler (secant/tangent) numbers.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using namespace eulerrefine;
using namespace eulerrefine::cli;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot open '" + path + "' for writing");
    }
    out << text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Alternating permutations and refinements of Euler numbers"};
    app.require_subcommand(1);

    std::optional<unsigned> cap_flag;
    app.add_option("--cap", cap_flag, "Enumeration cap (default 11, or $EULER_REFINE_CAP)")->check(CLI::Range(1, 63));

    std::string format_text = "table";
    std::string out_path;
    std::string method_text = "enum";
    unsigned max_n = 0;
    unsigned egf_order = kDefaultEgfOrder;
    unsigned theorem_max_n = 40;
    std::optional<unsigned> corrupt_euler;
    std::string populations = "updown";
    std::string sequence;
    std::string perm_text;

    const auto formats = CLI::IsMember({"table", "json", "csv", "bfile"});

    auto* table = app.add_subcommand("table", "Refinement counts for n = 2..max-n");
    table->add_option("--max-n", max_n, "Largest degree (default 9)");
    table->add_option("--method", method_text, "enum | formula | egf | all")
        ->check(CLI::IsMember({"enum", "formula", "egf", "all"}));
    table->add_option("--populations", populations, "updown | all (adds down-up columns)")
        ->check(CLI::IsMember({"updown", "all"}));
    table->add_option("--format", format_text, "table | json | csv")->check(formats);
    table->add_option("--out", out_path, "Write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Cross-check every identity by enumeration, formula and EGF");
    verify->add_option("--max-n", max_n, "Largest enumerated degree (default 10)");
    verify->add_option("--egf-order", egf_order, "Truncation order of the series checks (default 20)");
    verify->add_option("--theorem-max-n", theorem_max_n, "Largest degree of the formula-only theorem check");
    verify->add_option("--format", format_text, "table | json")->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--out", out_path, "Write to a file instead of stdout");
    verify->add_option("--corrupt-euler", corrupt_euler, "Test hook: perturb E_k in the formula routes")
        ->group("");

    auto* ratios = app.add_subcommand("ratios", "Exact ratios Enw/Ene and Edown/Eup");
    ratios->add_option("--max-n", max_n, "Largest degree (default 40)");
    ratios->add_option("--format", format_text, "table | json | csv")->check(formats);
    ratios->add_option("--out", out_path, "Write to a file instead of stdout");

    auto* openq = app.add_subcommand("openq", "Down-up 2nd-max counts and candidate generating functions");
    openq->add_option("--max-n", max_n, "Largest degree (default 11)");
    openq->add_option("--format", format_text, "table | json | csv")->check(formats);
    openq->add_option("--out", out_path, "Write to a file instead of stdout");

    auto* exporter = app.add_subcommand("export", "Export one sequence as b-file, JSON or CSV");
    exporter->add_option("sequence", sequence, "E | Ene | Enw | Eup | Edown | Dup | Ddown")->required();
    exporter->add_option("--max-n", max_n, "Largest index (default 10)");
    exporter->add_option("--format", format_text, "bfile | json | csv")->check(formats);
    exporter->add_option("--out", out_path, "Write to a file instead of stdout");

    auto* bijection = app.add_subcommand("bijection-check", "Exhaustive checks of the explicit bijections");
    bijection->add_option("--max-n", max_n, "Largest degree (default 10)");
    bijection->add_option("--perm", perm_text, "Describe one permutation instead, e.g. 3412");
    bijection->add_option("--format", format_text, "table | json")->check(CLI::IsMember({"table", "json"}));
    bijection->add_option("--out", out_path, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const unsigned cap = enumeration_cap(cap_flag);

        if (table->parsed()) {
            TableOptions options;
            options.max_n = max_n ? max_n : 9;
            options.method = parse_method(method_text);
            options.all_populations = populations == "all";
            options.format = parse_format(format_text);
            options.cap = cap;
            const auto result = cmd_table(options);
            write_output(result.text, out_path);
            return result.consistent ? kExitOk : kExitFailure;
        }
        if (verify->parsed()) {
            VerifyOptions options;
            options.max_n = max_n ? max_n : 10;
            options.egf_order = egf_order;
            options.theorem_max_n = theorem_max_n;
            options.cap = cap;
            options.corrupt_euler_index = corrupt_euler;
            const auto reports = cmd_verify(options);
            write_output(format_text == "json" ? render_json(reports) + "\n" : render_text(reports), out_path);
            return all_pass(reports) ? kExitOk : kExitFailure;
        }
        if (ratios->parsed()) {
            write_output(cmd_ratios(max_n ? max_n : 40, parse_format(format_text)), out_path);
            return kExitOk;
        }
        if (openq->parsed()) {
            const auto result = cmd_openq(max_n ? max_n : 11, cap, parse_format(format_text));
            write_output(result.text, out_path);
            return result.partition_holds ? kExitOk : kExitFailure;
        }
        if (exporter->parsed()) {
            ExportOptions options;
            options.sequence = sequence;
            options.max_n = max_n ? max_n : 10;
            options.format = exporter->count("--format") ? parse_format(format_text) : Format::Bfile;
            options.cap = cap;
            write_output(cmd_export(options), out_path);
            return kExitOk;
        }
        if (bijection->parsed()) {
            if (!perm_text.empty()) {
                write_output(describe_permutation(Permutation::parse(perm_text)), out_path);
                return kExitOk;
            }
            BijectionOptions options;
            options.max_n = max_n ? max_n : 10;
            options.cap = cap;
            const auto reports = cmd_bijection_check(options);
            write_output(format_text == "json" ? render_json(reports) + "\n" : render_text(reports), out_path);
            return all_pass(reports) ? kExitOk : kExitFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
