#ifndef CONDASP_CLI_HPP
#define CONDASP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace condasp::cli {

// Exit codes shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kInconsistent = 1;
inline constexpr int kParseError = 2;
inline constexpr int kKbError = 3;
inline constexpr int kRankedCombination = 4;
inline constexpr int kTooManyAnswerSets = 5;
inline constexpr int kViolationsFound = 6;
inline constexpr int kNotEntailed = 10;

enum class OutputFormat { Text, Json };

struct CommonOptions {
    std::string program_path;
    std::string kb_path;           // may be empty
    bool allow_no_kb = false;
    OutputFormat format = OutputFormat::Text;
    bool dump_ground = false;      // print the ground program to stderr
    bool dump_model = false;       // print the weight table to stderr
    std::optional<std::size_t> max_answer_sets;
};

int run_solve(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int run_model(const CommonOptions& opts, std::ostream& out, std::ostream& err);
int run_query(const CommonOptions& opts, const std::string& query_text, std::ostream& out,
              std::ostream& err);

struct VerifyKlmOptions {
    std::size_t seeds = 20;
    std::size_t trials = 50;
    std::optional<std::size_t> rm_budget;
    OutputFormat format = OutputFormat::Text;
};

int run_verify_klm(const VerifyKlmOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace condasp::cli

#endif
