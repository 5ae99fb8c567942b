#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "condasp/cli.hpp"

namespace {

void add_common_flags(CLI::App* cmd, condasp::cli::CommonOptions& opts,
                      std::string& format, bool with_kb) {
    cmd->add_option("--program", opts.program_path, "logic program (.lp)")
        ->required();
    if (with_kb) {
        cmd->add_option("--kb", opts.kb_path, "conditional knowledge base (.kb)");
        cmd->add_flag("--allow-no-kb", opts.allow_no_kb,
                      "run without a knowledge base (every atom weighs 0)");
    }
    cmd->add_option("--format", format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--dump-ground", opts.dump_ground,
                  "print the simplified ground program to stderr");
    cmd->add_flag("--dump-model", opts.dump_model,
                  "print the world/weight table to stderr");
    cmd->add_option("--max-answer-sets", opts.max_answer_sets,
                    "abort with exit 5 when the program has more answer sets");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reasoner for answer set programs with conditional knowledge bases"};
    app.require_subcommand(1);

    condasp::cli::CommonOptions solve_opts, model_opts, query_opts;
    std::string solve_format = "text", model_format = "text", query_format = "text",
                klm_format = "text";
    std::string query_text, query_file;
    condasp::cli::VerifyKlmOptions klm_opts;

    CLI::App* solve = app.add_subcommand("solve", "enumerate the program's answer sets");
    add_common_flags(solve, solve_opts, solve_format, /*with_kb=*/false);

    CLI::App* model = app.add_subcommand(
        "model", "print per-world weights of every distinguished atom");
    add_common_flags(model, model_opts, model_format, /*with_kb=*/true);

    CLI::App* query = app.add_subcommand(
        "query", "decide whether an implication holds at every answer set");
    add_common_flags(query, query_opts, query_format, /*with_kb=*/true);
    auto* query_opt =
        query->add_option("--query", query_text, "query formula, e.g. \"T(a) -> b\"");
    auto* query_file_opt =
        query->add_option("--query-file", query_file, "file containing the query formula");
    query_opt->excludes(query_file_opt);

    CLI::App* klm = app.add_subcommand(
        "verify-klm", "probe the consequence relation's postulates on random instances");
    klm->add_option("--seeds", klm_opts.seeds, "number of random program+KB instances");
    klm->add_option("--trials", klm_opts.trials, "formula triples per instance");
    klm->add_option("--rm-budget", klm_opts.rm_budget,
                    "also search this many instances for a rational-monotonicity "
                    "counterexample");
    klm->add_option("--format", klm_format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    const auto to_format = [](const std::string& name) {
        return name == "json" ? condasp::cli::OutputFormat::Json
                              : condasp::cli::OutputFormat::Text;
    };

    if (solve->parsed()) {
        solve_opts.format = to_format(solve_format);
        return condasp::cli::run_solve(solve_opts, std::cout, std::cerr);
    }
    if (model->parsed()) {
        model_opts.format = to_format(model_format);
        return condasp::cli::run_model(model_opts, std::cout, std::cerr);
    }
    if (query->parsed()) {
        query_opts.format = to_format(query_format);
        if (!query_file.empty()) {
            std::ifstream in(query_file, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot open " << query_file << "\n";
                return condasp::cli::kParseError;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            query_text = buffer.str();
        }
        if (query_text.empty()) {
            std::cerr << "error: no query given; pass --query or --query-file\n";
            return condasp::cli::kParseError;
        }
        return condasp::cli::run_query(query_opts, query_text, std::cout, std::cerr);
    }
    klm_opts.format = to_format(klm_format);
    return condasp::cli::run_verify_klm(klm_opts, std::cout, std::cerr);
}
