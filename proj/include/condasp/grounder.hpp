#ifndef CONDASP_GROUNDER_HPP
#define CONDASP_GROUNDER_HPP

#include "condasp/rule.hpp"

namespace condasp {

/// Instantiates every rule over the program's Herbrand universe (the set of
/// constants appearing anywhere in the program). Comparison literals are
/// evaluated during instantiation and dropped when true; instances with a
/// false comparison are discarded. The result is canonical: rules sorted
/// and deduplicated, Herbrand base sorted.
///
/// Throws Error(EmptyUniverse) when a rule with variables exists but no
/// constant does.
GroundProgram ground_program(const Program& program);

/// Removes rules that can never fire: positive body atoms (and cardinality
/// members) are checked against a superset of derivable atoms computed by
/// iterating rule heads to a fixpoint. Rules whose positive body mentions an
/// underivable atom are dropped, as are underivable atoms inside cardinality
/// literals (bounds are kept, so a pruned cardinality may become
/// unsatisfiable and take its rule with it). Negated literals over
/// underivable atoms are simply removed (they hold vacuously). The Herbrand
/// base shrinks to the derivable superset. Answer sets are preserved
/// exactly.
GroundProgram simplify(const GroundProgram& ground);

}  // namespace condasp

#endif
