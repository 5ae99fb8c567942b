#ifndef CONDASP_PARSER_HPP
#define CONDASP_PARSER_HPP

#include <string>
#include <string_view>

#include "condasp/formula.hpp"
#include "condasp/kb.hpp"
#include "condasp/rule.hpp"

namespace condasp {

/// Parses a logic program in the supported fragment: facts, normal rules,
/// constraints, and choice rules with optional cardinality bounds; bodies
/// may contain positive/negated atoms, `=`/`!=` comparisons, and lower-bound
/// cardinality literals `l { a1; ...; ak }`. `%` starts a line comment.
///
/// Throws ParseError with a precise source span on lexical or syntactic
/// errors, on unsafe rules (UnsafeVariable), and on recognizable constructs
/// outside the fragment (UnsupportedConstruct).
Program parse_program(std::string_view text, std::string filename = "<program>");

/// Parses a conditional knowledge base: one conditional per line, either
/// `T(subject) -> formula : weight.` or `T(subject) -> formula @ rank.`
/// Subjects are ground atoms; formulas use `&`, `|`, `~`, and parentheses.
/// The returned KB has been validated (single strategy per subject, no
/// typicality inside consequents).
ConditionalKB parse_kb(std::string_view text, std::string filename = "<kb>");

/// Parses a query formula, e.g. `T(student) -> young` or
/// `T(hm & hb) -> pizza_m & pizza_b`. `not` may be used as a synonym for
/// `~`. The result is validated: typicality may not nest and may only wrap
/// atoms combined with `&`, `|`, `~`.
Formula parse_query(std::string_view text, std::string filename = "<query>");

}  // namespace condasp

#endif
