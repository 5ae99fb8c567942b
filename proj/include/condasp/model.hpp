#ifndef CONDASP_MODEL_HPP
#define CONDASP_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "condasp/answer_set.hpp"
#include "condasp/formula.hpp"
#include "condasp/kb.hpp"
#include "condasp/rule.hpp"

namespace condasp {

enum class Preference { StrictlyLess, Equivalent, StrictlyGreater };

/// Per-world evidence backing a typicality subformula in a verdict.
struct TypWitness {
    Formula subject;                       // the formula under T(...)
    std::optional<std::int64_t> max_weight;  // max weight over worlds satisfying it
                                             // (absent for ranked subjects and when
                                             // no world satisfies the subject)
    std::vector<std::size_t> typical_world_indices;  // indices into worlds()
};

struct EntailmentVerdict {
    bool entailed = false;
    std::optional<AnswerSet> counterexample;  // first violating world, canonical order
    std::vector<TypWitness> typ_witnesses;    // one per distinct T(...) in the query
};

/// The multi-preferential model over a program's answer sets: every answer
/// set is a world, and each distinguished subject induces a preference
/// relation on worlds from its accumulated weights (weighted subjects) or
/// prioritized satisfaction counts (ranked subjects).
class PreferentialModel {
  public:
    /// Enumerates the program's answer sets and tabulates subject weights.
    /// Throws Error(InconsistentProgram) when there are no answer sets.
    static PreferentialModel build(const GroundProgram& ground, const ConditionalKB& kb);
    /// Grounds and simplifies first.
    static PreferentialModel build(const Program& program, const ConditionalKB& kb);
    /// Builds over an explicit world list (already canonical); used by
    /// tests and the instance generator to bypass re-enumeration.
    static PreferentialModel build_from_worlds(std::vector<AnswerSet> worlds,
                                               const ConditionalKB& kb);

    const std::vector<AnswerSet>& worlds() const { return worlds_; }
    const ConditionalKB& kb() const { return kb_; }

    /// Accumulated weight of a weighted subject at a world: the sum of the
    /// weights of its conditionals whose consequent holds there. Atoms that
    /// are not weighted subjects have weight 0 everywhere. Throws
    /// Error(RankedSubject) for ranked subjects.
    std::int64_t weight_of(const Atom& subject, std::size_t world) const;

    /// Weight of a boolean combination of subjects: conjunction takes the
    /// minimum, disjunction the maximum, and negation reflects the weight
    /// across the global span [min_weight, max_weight] of all weighted
    /// subjects over all worlds (w -> max + min - w). Ranked subjects are
    /// only allowed when the formula is a single atom
    /// (RankedComplexCombination otherwise).
    std::int64_t weight_of_formula(const Formula& subject, std::size_t world) const;

    /// For a ranked subject: how many of its rank-`rank` conditionals hold
    /// at the world. Throws Error(NotRankedSubject) for other atoms.
    std::size_t ranked_satisfied_count(const Atom& subject, std::uint32_t rank,
                                       std::size_t world) const;

    /// Compares two worlds under the preference relation of `subject`.
    /// Weighted subjects compare accumulated weights (greater weight =
    /// preferred = StrictlyLess). Ranked atomic subjects compare
    /// lexicographically by satisfaction counts from the highest rank down.
    Preference prefers(const Formula& subject, std::size_t a, std::size_t b) const;

    /// Worlds satisfying `subject` that are minimal in its preference
    /// relation. Empty iff no world satisfies the subject.
    std::vector<std::size_t> typical_worlds(const Formula& subject) const;

    /// Truth of an arbitrary query formula at a world. T(C) holds at S iff
    /// S is one of C's typical worlds.
    bool eval(const Formula& query, std::size_t world) const;

    /// Entailment = truth at every world. The verdict carries the first
    /// violating world (if any) and evidence for every typicality
    /// subformula in the query.
    EntailmentVerdict check_entailment(const Formula& query) const;

    std::int64_t global_max_weight() const { return global_max_; }
    std::int64_t global_min_weight() const { return global_min_; }

  private:
    PreferentialModel() = default;

    std::vector<AnswerSet> worlds_;
    ConditionalKB kb_;
    // weight tables: weighted subject -> per-world accumulated weight
    std::map<Atom, std::vector<std::int64_t>> weights_;
    // ranked tables: subject -> rank (descending) -> per-world count
    std::map<Atom, std::vector<std::pair<std::uint32_t, std::vector<std::size_t>>>> ranks_;
    std::int64_t global_max_ = 0;  // over weighted subjects and worlds; 0 when none
    std::int64_t global_min_ = 0;
};

std::string to_string(Preference p);

}  // namespace condasp

#endif
