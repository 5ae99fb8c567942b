#ifndef CONDASP_SOLVER_HPP
#define CONDASP_SOLVER_HPP

#include <cstddef>
#include <optional>

#include "condasp/answer_set.hpp"
#include "condasp/bits.hpp"
#include "condasp/rule.hpp"

namespace condasp {

/// Cardinality restriction left over from a choice head `l { H } u :- B`:
/// whenever B holds in a candidate, the candidate must contain between
/// `lower` and `upper` atoms of H. Checked natively instead of being
/// compiled to rules.
struct BoundCheck {
    std::vector<GroundBodyElement> condition;  // the choice rule's body
    std::vector<Atom> atoms;                   // the choice's head atoms
    std::optional<int> lower;
    std::optional<int> upper;
};

/// A ground program with all choice rules compiled away. Each choice atom
/// occurrence `h` becomes the complementary pair `h :- B, not h'.` and
/// `h' :- B, not h.` over a fresh internal atom `h'` (fresh per occurrence);
/// the choice's bounds become a BoundCheck. Fresh atom names start with
/// `_`, which user predicates cannot, and are stripped from reported
/// answer sets.
struct NormalizedProgram {
    std::vector<GroundRule> rules;  // normal rules and constraints only
    std::vector<BoundCheck> bound_checks;
    std::vector<Atom> atoms;        // universe: user atoms first, then fresh
    std::size_t user_atoms = 0;     // length of the user-visible prefix
};

NormalizedProgram normalize(const GroundProgram& ground);

/// Stability test for a total candidate over `program.atoms`: s must
/// satisfy every constraint and bound check, and equal the least model of
/// the reduct of the normal rules by s. Cardinality literals are evaluated
/// against the growing derivation, so circular support through a
/// cardinality does not count.
bool is_stable(const NormalizedProgram& program, const Bits& candidate);

/// All answer sets, canonically sorted, fresh atoms stripped, deduplicated.
/// `max_answer_sets`, when set, bounds how many distinct answer sets may be
/// collected before Error(MaxAnswerSetsExceeded) is thrown.
std::vector<AnswerSet> enumerate(const NormalizedProgram& program,
                                 std::optional<std::size_t> max_answer_sets = std::nullopt);
std::vector<AnswerSet> enumerate(const GroundProgram& ground,
                                 std::optional<std::size_t> max_answer_sets = std::nullopt);

/// Reference enumeration: tries every subset of the atom universe against
/// `is_stable`. Exponential by construction; throws Error(TooLarge) beyond
/// 22 atoms. Exists to cross-check `enumerate`.
std::vector<AnswerSet> oracle_enumerate(const NormalizedProgram& program);
std::vector<AnswerSet> oracle_enumerate(const GroundProgram& ground);

}  // namespace condasp

#endif
