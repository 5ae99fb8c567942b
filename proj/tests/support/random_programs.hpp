#ifndef CONDASP_TESTS_SUPPORT_RANDOM_PROGRAMS_HPP
#define CONDASP_TESTS_SUPPORT_RANDOM_PROGRAMS_HPP

// Random ground-program generator for the solver differential suite. The
// generated programs keep the total atom count (user atoms plus one fresh
// complement atom per choice-head occurrence) within a budget so the
// exhaustive 2^n oracle stays fast.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "condasp/grounder.hpp"
#include "condasp/rule.hpp"

namespace condasp::testsupport {

/// A propositional program over at most `max_total_atoms` atoms counting
/// the choice-translation overhead. Exercises facts, normal rules with
/// positive/negated bodies, constraints, bounded/unbounded choice heads,
/// and body cardinality lower bounds.
inline GroundProgram random_ground_program(std::uint64_t seed,
                                           std::size_t max_total_atoms = 14) {
    std::mt19937_64 rng(seed);
    static const char* const names[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
    const std::size_t user_atoms = 1 + rng() % 7;  // 1..7
    std::vector<AtomSchema> atoms;
    for (std::size_t i = 0; i < user_atoms; ++i) {
        atoms.push_back(AtomSchema(Symbol::intern(names[i])));
    }
    auto random_atom = [&]() -> const AtomSchema& { return atoms[rng() % atoms.size()]; };

    Program program;
    std::size_t fresh_budget = max_total_atoms - user_atoms;
    const std::size_t rule_count = 1 + rng() % 9;  // 1..9
    for (std::size_t i = 0; i < rule_count; ++i) {
        switch (rng() % 10) {
            case 0:
            case 1: {  // fact
                Rule rule;
                rule.head = random_atom();
                program.rules.push_back(std::move(rule));
                break;
            }
            case 2:
            case 3:
            case 4: {  // normal rule
                Rule rule;
                rule.head = random_atom();
                const std::size_t k = 1 + rng() % 3;
                for (std::size_t j = 0; j < k; ++j) {
                    rule.body.push_back(rng() % 2 ? BodyElement::positive(random_atom())
                                                  : BodyElement::negated(random_atom()));
                }
                program.rules.push_back(std::move(rule));
                break;
            }
            case 5: {  // constraint
                Rule rule;
                rule.head = std::monostate{};
                const std::size_t k = 1 + rng() % 2;
                for (std::size_t j = 0; j < k; ++j) {
                    rule.body.push_back(rng() % 2 ? BodyElement::positive(random_atom())
                                                  : BodyElement::negated(random_atom()));
                }
                program.rules.push_back(std::move(rule));
                break;
            }
            case 6: {  // rule guarded by a body cardinality
                Rule rule;
                rule.head = random_atom();
                std::vector<AtomSchema> members;
                const std::size_t width = 1 + rng() % 3;
                for (std::size_t j = 0; j < width; ++j) members.push_back(random_atom());
                rule.body.push_back(
                    BodyElement::cardinality(static_cast<int>(rng() % (width + 1)), members));
                program.rules.push_back(std::move(rule));
                break;
            }
            default: {  // choice rule, possibly bounded, possibly with a body
                const std::size_t width = 1 + rng() % 3;
                if (fresh_budget < width) break;  // would blow the atom budget
                fresh_budget -= width;
                Rule rule;
                ChoiceHead head;
                for (std::size_t j = 0; j < width; ++j) head.atoms.push_back(random_atom());
                if (rng() % 2) head.lower = static_cast<int>(rng() % (width + 1));
                if (rng() % 2) head.upper = static_cast<int>(rng() % (width + 1));
                rule.head = std::move(head);
                if (rng() % 3 == 0) {
                    rule.body.push_back(rng() % 2 ? BodyElement::positive(random_atom())
                                                  : BodyElement::negated(random_atom()));
                }
                program.rules.push_back(std::move(rule));
                break;
            }
        }
    }
    if (program.rules.empty()) {
        Rule rule;
        rule.head = random_atom();
        program.rules.push_back(std::move(rule));
    }
    return ground_program(program);
}

}  // namespace condasp::testsupport

#endif
