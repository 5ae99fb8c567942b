#ifndef CONDASP_KLM_HPP
#define CONDASP_KLM_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "condasp/kb.hpp"
#include "condasp/model.hpp"
#include "condasp/rule.hpp"

namespace condasp {

/// Budgets for random instance generation. Defaults keep the search spaces
/// small enough for exhaustive cross-checking.
struct InstanceSeed {
    std::uint64_t seed = 0;
    std::size_t atom_budget = 8;         // ≤ 8
    std::size_t rule_budget = 12;        // ≤ 12
    std::size_t kb_budget = 10;          // ≤ 10 conditionals
    std::int64_t min_weight = -100;
    std::int64_t max_weight = 100;
};

struct Instance {
    GroundProgram ground;
    ConditionalKB kb;
    PreferentialModel model;
};

/// Deterministically generates a random consistent program+KB pair.
/// Inconsistent draws are retried with a perturbed stream; throws
/// Error(GenerationExhausted) when the retry cap is hit.
Instance generate_instance(const InstanceSeed& seed);

/// Like generate_instance but reports whether the first draw was already
/// consistent (used to measure generator quality).
Instance generate_instance(const InstanceSeed& seed, bool& first_try_consistent);

enum class Postulate {
    Reflexivity,
    LeftLogicalEquivalence,
    RightWeakening,
    And,
    Or,
    CautiousMonotonicity,
};

std::string to_string(Postulate p);

struct PostulateViolation {
    Postulate postulate = Postulate::Reflexivity;
    std::string description;  // formulas involved plus the violating world
};

struct PostulateReport {
    std::size_t trials = 0;
    std::size_t applications = 0;  // postulate instances whose premises held
    std::vector<PostulateViolation> violations;

    bool clean() const { return violations.empty(); }
};

/// Draws `trials` random formula triples over the model's distinguished
/// subjects and tests each KLM postulate on them. Premise implications for
/// Right Weakening are certified by truth table; Left Logical Equivalence
/// pairs come from `equivalent_variants`. Deterministic in `seed`. Every
/// violation is re-verified through check_entailment before being reported.
PostulateReport check_postulates(const PreferentialModel& model, std::size_t trials,
                                 std::uint64_t seed);

struct RmWitness {
    GroundProgram ground;
    ConditionalKB kb;
    Formula a, b, c;
    std::string description;
};

/// Searches randomly generated instances for formulas A, B, C with
/// T(A) -> C entailed, T(A) -> ~B not entailed, and T(A & B) -> C not
/// entailed. Tries up to `budget` instances, several triples each;
/// deterministic in `seed`.
std::optional<RmWitness> search_rm_counterexample(std::size_t budget, std::uint64_t seed,
                                                  const InstanceSeed& limits = {});

/// Same search restricted to one already-built model; returns the triple's
/// description. Used on the bird/penguin fixture.
std::optional<std::string> find_rm_triple(const PreferentialModel& model, std::size_t budget,
                                          std::uint64_t seed);

/// True iff the T-free formula holds under every assignment to its atoms.
/// Exponential in the atom count; intended for the small formulas the
/// generator produces.
bool is_tautology(const Formula& f);

/// True iff the two T-free formulas agree under every assignment to their
/// combined atoms.
bool are_equivalent(const Formula& a, const Formula& b);

/// Structurally different formulas equivalent to `f`, produced by identity
/// rewrites (double negation, De Morgan both ways, commutativity,
/// idempotence, associativity, absorption, distribution). Every result
/// passes are_equivalent against `f`.
std::vector<Formula> equivalent_variants(const Formula& f, std::size_t max_variants,
                                         std::uint64_t seed);

/// Random T-free formula over the given atoms (connectives: and, or, not),
/// depth-bounded.
Formula random_formula(const std::vector<Atom>& atoms, std::size_t max_depth,
                       std::mt19937_64& rng);

}  // namespace condasp

#endif
