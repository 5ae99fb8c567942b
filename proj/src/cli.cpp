#include "condasp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "condasp/error.hpp"
#include "condasp/grounder.hpp"
#include "condasp/kb.hpp"
#include "condasp/klm.hpp"
#include "condasp/model.hpp"
#include "condasp/parser.hpp"
#include "condasp/solver.hpp"

namespace condasp::cli {

namespace {

using nlohmann::json;

/// Internal control-flow carrier: an error already mapped to an exit code.
struct CliFailure {
    int exit_code;
    std::string message;
};

int exit_for(const Error& e, int stage_default) {
    switch (e.code()) {
        case ErrorCode::InconsistentProgram: return kInconsistent;
        case ErrorCode::RankedSubject:
        case ErrorCode::NotRankedSubject:
        case ErrorCode::RankedComplexCombination: return kRankedCombination;
        case ErrorCode::MaxAnswerSetsExceeded: return kTooManyAnswerSets;
        default: return stage_default;
    }
}

[[noreturn]] void fail(const Error& e, int stage_default) {
    throw CliFailure{exit_for(e, stage_default),
                     std::string(error_code_name(e.code())) + ": " + e.what()};
}

std::string read_file(const std::string& path, int stage_default) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliFailure{stage_default, "cannot open " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

GroundProgram load_ground(const CommonOptions& opts, std::ostream& err) {
    const std::string text = read_file(opts.program_path, kParseError);
    try {
        const Program program = parse_program(text, opts.program_path);
        const GroundProgram ground = simplify(ground_program(program));
        if (opts.dump_ground) err << to_lp_string(ground);
        return ground;
    } catch (const Error& e) {
        fail(e, kParseError);
    }
}

ConditionalKB load_kb(const CommonOptions& opts) {
    if (opts.kb_path.empty()) {
        if (!opts.allow_no_kb) {
            throw CliFailure{kKbError,
                             "no knowledge base given; pass --kb or opt into weight-0 "
                             "semantics with --allow-no-kb"};
        }
        return {};
    }
    const std::string text = read_file(opts.kb_path, kKbError);
    try {
        return parse_kb(text, opts.kb_path);
    } catch (const Error& e) {
        fail(e, kKbError);
    }
}

std::vector<AnswerSet> run_enumerate(const GroundProgram& ground,
                                     const CommonOptions& opts) {
    try {
        return enumerate(ground, opts.max_answer_sets);
    } catch (const Error& e) {
        fail(e, kParseError);
    }
}

json worlds_json(const std::vector<AnswerSet>& worlds) {
    json arr = json::array();
    for (const AnswerSet& world : worlds) {
        json atoms = json::array();
        for (const Atom& atom : world.atoms()) atoms.push_back(atom.to_string());
        arr.push_back(std::move(atoms));
    }
    return arr;
}

void write_model_text(const PreferentialModel& model, std::ostream& out) {
    const std::vector<Atom> weighted = model.kb().weighted_subjects();
    const std::vector<Atom> ranked = model.kb().ranked_subjects();
    const std::size_t n = model.worlds().size();

    std::vector<std::string> labels(n);
    std::size_t label_width = 0;
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = "S" + std::to_string(i);
        label_width = std::max(label_width, labels[i].size());
    }

    std::vector<std::size_t> widths(weighted.size());
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(weighted.size()));
    for (std::size_t c = 0; c < weighted.size(); ++c) {
        widths[c] = weighted[c].to_string().size();
        for (std::size_t i = 0; i < n; ++i) {
            cells[i][c] = std::to_string(model.weight_of(weighted[c], i));
            widths[c] = std::max(widths[c], cells[i][c].size());
        }
    }

    out << std::left << std::setw(static_cast<int>(label_width)) << "";
    for (std::size_t c = 0; c < weighted.size(); ++c) {
        out << "  " << std::setw(static_cast<int>(widths[c])) << weighted[c].to_string();
    }
    out << "\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << std::setw(static_cast<int>(label_width)) << labels[i];
        for (std::size_t c = 0; c < weighted.size(); ++c) {
            out << "  " << std::setw(static_cast<int>(widths[c])) << cells[i][c];
        }
        out << "\n";
    }
    out << std::right;

    for (std::size_t i = 0; i < n; ++i) {
        out << labels[i] << " = {" << model.worlds()[i].to_string() << "}\n";
    }

    if (!ranked.empty()) {
        out << "ranked satisfaction counts (per world):\n";
        for (const Atom& subject : ranked) {
            std::vector<std::uint32_t> levels;
            for (const auto& rc : model.kb().ranked) {
                if (rc.subject == subject) levels.push_back(rc.rank);
            }
            std::sort(levels.rbegin(), levels.rend());
            levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
            for (std::uint32_t level : levels) {
                out << "  " << subject.to_string() << " @ " << level << ":";
                for (std::size_t i = 0; i < n; ++i) {
                    out << " " << model.ranked_satisfied_count(subject, level, i);
                }
                out << "\n";
            }
        }
    }

    if (!weighted.empty()) {
        out << "max = " << model.global_max_weight() << "\n";
        out << "min = " << model.global_min_weight() << "\n";
    }
}

PreferentialModel build_model(const GroundProgram& ground, const ConditionalKB& kb,
                              const CommonOptions& opts, std::ostream& err) {
    std::vector<AnswerSet> worlds = run_enumerate(ground, opts);
    try {
        PreferentialModel model = PreferentialModel::build_from_worlds(std::move(worlds), kb);
        if (opts.dump_model) write_model_text(model, err);
        return model;
    } catch (const Error& e) {
        fail(e, kKbError);
    }
}

int report_failure(const CliFailure& failure, OutputFormat format, std::ostream& out,
                   std::ostream& err) {
    err << "error: " << failure.message << "\n";
    if (format == OutputFormat::Json) {
        json doc;
        doc["version"] = 1;
        doc["error"] = failure.message;
        doc["exit_code"] = failure.exit_code;
        out << doc.dump(2) << "\n";
    }
    return failure.exit_code;
}

}  // namespace

int run_solve(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const GroundProgram ground = load_ground(opts, err);
        const std::vector<AnswerSet> worlds = run_enumerate(ground, opts);
        if (opts.format == OutputFormat::Json) {
            json doc;
            doc["version"] = 1;
            doc["answer_sets"] = worlds_json(worlds);
            doc["count"] = worlds.size();
            if (worlds.empty()) doc["error"] = "program inconsistent";
            out << doc.dump(2) << "\n";
        } else {
            if (worlds.empty()) {
                out << "program inconsistent\n";
            } else {
                for (const AnswerSet& world : worlds) out << world.to_string() << "\n";
            }
        }
        return worlds.empty() ? kInconsistent : kOk;
    } catch (const CliFailure& failure) {
        return report_failure(failure, opts.format, out, err);
    }
}

int run_model(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const GroundProgram ground = load_ground(opts, err);
        const ConditionalKB kb = load_kb(opts);
        const PreferentialModel model = build_model(ground, kb, opts, err);

        if (opts.format == OutputFormat::Json) {
            json doc;
            doc["version"] = 1;
            doc["worlds"] = worlds_json(model.worlds());
            json weights = json::object();
            for (const Atom& subject : kb.weighted_subjects()) {
                json row = json::array();
                for (std::size_t i = 0; i < model.worlds().size(); ++i) {
                    row.push_back(model.weight_of(subject, i));
                }
                weights[subject.to_string()] = std::move(row);
            }
            doc["weights"] = std::move(weights);
            doc["max"] = model.global_max_weight();
            doc["min"] = model.global_min_weight();
            if (!kb.ranked.empty()) {
                json ranks = json::object();
                for (const Atom& subject : kb.ranked_subjects()) {
                    std::vector<std::uint32_t> levels;
                    for (const auto& rc : kb.ranked) {
                        if (rc.subject == subject) levels.push_back(rc.rank);
                    }
                    std::sort(levels.rbegin(), levels.rend());
                    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
                    json per_level = json::object();
                    for (std::uint32_t level : levels) {
                        json row = json::array();
                        for (std::size_t i = 0; i < model.worlds().size(); ++i) {
                            row.push_back(model.ranked_satisfied_count(subject, level, i));
                        }
                        per_level[std::to_string(level)] = std::move(row);
                    }
                    ranks[subject.to_string()] = std::move(per_level);
                }
                doc["ranks"] = std::move(ranks);
            }
            out << doc.dump(2) << "\n";
        } else {
            write_model_text(model, out);
        }
        return kOk;
    } catch (const CliFailure& failure) {
        return report_failure(failure, opts.format, out, err);
    }
}

int run_query(const CommonOptions& opts, const std::string& query_text, std::ostream& out,
              std::ostream& err) {
    try {
        const GroundProgram ground = load_ground(opts, err);
        const ConditionalKB kb = load_kb(opts);
        const PreferentialModel model = build_model(ground, kb, opts, err);

        Formula query = Formula::top();
        try {
            query = parse_query(query_text);
        } catch (const Error& e) {
            fail(e, kParseError);
        }

        EntailmentVerdict verdict;
        try {
            verdict = model.check_entailment(query);
        } catch (const Error& e) {
            fail(e, kParseError);
        }

        if (opts.format == OutputFormat::Json) {
            json doc;
            doc["version"] = 1;
            doc["query"] = query.to_string();
            doc["verdict"] = verdict.entailed ? "ENTAILED" : "NOT ENTAILED";
            doc["entailed"] = verdict.entailed;
            if (verdict.counterexample) {
                json atoms = json::array();
                for (const Atom& atom : verdict.counterexample->atoms()) {
                    atoms.push_back(atom.to_string());
                }
                doc["counterexample"] = std::move(atoms);
            } else {
                doc["counterexample"] = nullptr;
            }
            json witnesses = json::array();
            for (const TypWitness& w : verdict.typ_witnesses) {
                json entry;
                entry["subject"] = w.subject.to_string();
                if (w.max_weight) {
                    entry["max_weight"] = *w.max_weight;
                } else {
                    entry["max_weight"] = nullptr;
                }
                entry["typical_worlds"] = w.typical_world_indices;
                witnesses.push_back(std::move(entry));
            }
            doc["typ_witnesses"] = std::move(witnesses);
            doc["worlds"] = worlds_json(model.worlds());
            out << doc.dump(2) << "\n";
        } else {
            out << (verdict.entailed ? "ENTAILED" : "NOT ENTAILED") << "\n";
            if (verdict.counterexample) {
                out << "counterexample: {" << verdict.counterexample->to_string() << "}\n";
            }
            for (const TypWitness& w : verdict.typ_witnesses) {
                out << "T(" << w.subject.to_string() << "): maxw = ";
                if (w.max_weight) {
                    out << *w.max_weight;
                } else {
                    out << "n/a";
                }
                out << ", typical worlds:";
                for (std::size_t index : w.typical_world_indices) {
                    out << " {" << model.worlds()[index].to_string() << "}";
                }
                out << "\n";
            }
        }
        return verdict.entailed ? kOk : kNotEntailed;
    } catch (const CliFailure& failure) {
        return report_failure(failure, opts.format, out, err);
    }
}

int run_verify_klm(const VerifyKlmOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        std::size_t applications = 0;
        std::vector<std::pair<std::uint64_t, PostulateViolation>> violations;
        for (std::uint64_t i = 1; i <= opts.seeds; ++i) {
            InstanceSeed seed;
            seed.seed = i;
            Instance instance = generate_instance(seed);
            PostulateReport report =
                check_postulates(instance.model, opts.trials, i * 0x9e3779b97f4a7c15ULL);
            applications += report.applications;
            for (PostulateViolation& v : report.violations) {
                violations.emplace_back(i, std::move(v));
            }
        }
        std::optional<RmWitness> rm;
        if (opts.rm_budget) {
            rm = search_rm_counterexample(*opts.rm_budget, 20260401);
        }

        if (opts.format == OutputFormat::Json) {
            json doc;
            doc["version"] = 1;
            doc["seeds"] = opts.seeds;
            doc["trials_per_seed"] = opts.trials;
            doc["applications"] = applications;
            json vs = json::array();
            for (const auto& [seed, v] : violations) {
                json entry;
                entry["seed"] = seed;
                entry["postulate"] = to_string(v.postulate);
                entry["description"] = v.description;
                vs.push_back(std::move(entry));
            }
            doc["violations"] = std::move(vs);
            if (opts.rm_budget) {
                if (rm) {
                    json found;
                    found["found"] = true;
                    found["description"] = rm->description;
                    doc["rm_counterexample"] = std::move(found);
                } else {
                    doc["rm_counterexample"] = json{{"found", false}};
                }
            }
            out << doc.dump(2) << "\n";
        } else {
            out << "seeds: " << opts.seeds << ", trials per seed: " << opts.trials << "\n";
            out << "postulate applications: " << applications << "\n";
            out << "violations: " << violations.size() << "\n";
            for (const auto& [seed, v] : violations) {
                out << "  seed " << seed << " " << to_string(v.postulate) << ": "
                    << v.description << "\n";
            }
            if (opts.rm_budget) {
                if (rm) {
                    out << "rational monotonicity counterexample found:\n  "
                        << rm->description << "\n";
                } else {
                    out << "no rational monotonicity counterexample within budget\n";
                }
            }
        }
        return violations.empty() ? kOk : kViolationsFound;
    } catch (const CliFailure& failure) {
        return report_failure(failure, opts.format, out, err);
    } catch (const Error& e) {
        CliFailure failure{kParseError,
                           std::string(error_code_name(e.code())) + ": " + e.what()};
        return report_failure(failure, opts.format, out, err);
    }
}

}  // namespace condasp::cli
