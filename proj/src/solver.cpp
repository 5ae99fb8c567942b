#include "condasp/solver.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "condasp/error.hpp"

namespace condasp {

namespace {

constexpr std::size_t kOracleCap = 22;

// ---------------------------------------------------------------------------
// Compiled form: atoms become indices, bodies become bitsets.

struct CompiledCard {
    int lower = 0;
    Bits members;
};

struct CompiledBody {
    Bits pos, neg;
    std::vector<CompiledCard> cards;
};

struct CompiledRule {
    int head = -1;  // -1 = constraint
    CompiledBody body;
};

struct CompiledBound {
    CompiledBody condition;
    Bits members;
    int lower = 0;   // effective bounds; missing ones widened
    int upper = 0;
};

struct Compiled {
    std::size_t n = 0;
    std::size_t user_atoms = 0;
    std::vector<CompiledRule> rules;
    std::vector<CompiledBound> bounds;
    std::vector<std::vector<std::size_t>> heads_of;  // atom -> rules with that head
};

bool body_true(const CompiledBody& body, const Bits& s) {
    if (!body.pos.is_subset_of(s)) return false;
    if (body.neg.intersects(s)) return false;
    for (const CompiledCard& card : body.cards) {
        if (static_cast<int>(s.count_and(card.members)) < card.lower) return false;
    }
    return true;
}

Compiled compile(const NormalizedProgram& np) {
    Compiled c;
    c.n = np.atoms.size();
    c.user_atoms = np.user_atoms;
    std::map<Atom, std::size_t> index;
    for (std::size_t i = 0; i < np.atoms.size(); ++i) index.emplace(np.atoms[i], i);

    auto compile_body = [&](const std::vector<GroundBodyElement>& body) {
        CompiledBody out;
        out.pos = Bits(c.n);
        out.neg = Bits(c.n);
        for (const GroundBodyElement& e : body) {
            switch (e.kind) {
                case GroundBodyElement::Kind::PositiveAtom:
                    out.pos.set(index.at(e.atom));
                    break;
                case GroundBodyElement::Kind::NegatedAtom:
                    out.neg.set(index.at(e.atom));
                    break;
                case GroundBodyElement::Kind::CardinalityLower: {
                    CompiledCard card;
                    card.lower = e.lower;
                    card.members = Bits(c.n);
                    for (const Atom& a : e.atoms) card.members.set(index.at(a));
                    out.cards.push_back(std::move(card));
                    break;
                }
                case GroundBodyElement::Kind::Comparison:
                    // resolved by the grounder; a surviving one is a bug
                    throw Error(ErrorCode::UnsupportedShape,
                                "comparison in a ground rule body");
            }
        }
        return out;
    };

    c.heads_of.resize(c.n);
    for (const GroundRule& rule : np.rules) {
        CompiledRule cr;
        cr.body = compile_body(rule.body);
        if (rule.has_normal_head()) {
            cr.head = static_cast<int>(index.at(rule.normal_head()));
            c.heads_of[cr.head].push_back(c.rules.size());
        }
        c.rules.push_back(std::move(cr));
    }
    for (const BoundCheck& bound : np.bound_checks) {
        CompiledBound cb;
        cb.condition = compile_body(bound.condition);
        cb.members = Bits(c.n);
        for (const Atom& a : bound.atoms) cb.members.set(index.at(a));
        cb.lower = bound.lower.value_or(0);
        cb.upper = bound.upper.value_or(static_cast<int>(bound.atoms.size()));
        c.bounds.push_back(std::move(cb));
    }
    return c;
}

bool stable(const Compiled& c, const Bits& s) {
    // (a) constraints and bound checks
    for (const CompiledRule& rule : c.rules) {
        if (rule.head < 0 && body_true(rule.body, s)) return false;
    }
    for (const CompiledBound& bound : c.bounds) {
        if (!body_true(bound.condition, s)) continue;
        const int have = static_cast<int>(s.count_and(bound.members));
        if (have < bound.lower || have > bound.upper) return false;
    }
    // cheap necessary conditions before the fixpoint: s must be a supported
    // model of the normal rules
    for (const CompiledRule& rule : c.rules) {
        if (rule.head >= 0 && !s.test(rule.head) && body_true(rule.body, s)) return false;
    }
    for (std::size_t a = 0; a < c.n; ++a) {
        if (!s.test(a)) continue;
        bool supported = false;
        for (std::size_t r : c.heads_of[a]) {
            if (body_true(c.rules[r].body, s)) {
                supported = true;
                break;
            }
        }
        if (!supported) return false;
    }
    // (b) least fixpoint of the reduct: drop rules whose negative body
    // intersects s; evaluate cardinalities against the growing set so that
    // circular support does not count.
    Bits derived(c.n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const CompiledRule& rule : c.rules) {
            if (rule.head < 0 || derived.test(rule.head)) continue;
            if (rule.body.neg.intersects(s)) continue;  // deleted by the reduct
            if (!rule.body.pos.is_subset_of(derived)) continue;
            bool ok = true;
            for (const CompiledCard& card : rule.body.cards) {
                if (static_cast<int>(derived.count_and(card.members)) < card.lower) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            derived.set(rule.head);
            changed = true;
        }
    }
    return derived == s;
}

// ---------------------------------------------------------------------------
// Backtracking enumeration with propagation. Soundness comes from the final
// `stable` gate on every total candidate; propagation only prunes branches
// that cannot contain a stable model.

enum class Value : unsigned char { Unknown, True, False };

struct Search {
    const Compiled& c;
    std::vector<Value> assign;
    std::vector<Bits> results;  // total candidates that passed the gate
    std::optional<std::size_t> cap;

    explicit Search(const Compiled& compiled, std::optional<std::size_t> max_results)
        : c(compiled), assign(compiled.n, Value::Unknown), cap(max_results) {}

    // status of a body under the current partial assignment
    enum class Status { True, False, Open };

    Status body_status(const CompiledBody& body) const {
        bool open = false;
        for (std::size_t i = 0; i < c.n; ++i) {
            if (body.pos.test(i)) {
                if (assign[i] == Value::False) return Status::False;
                if (assign[i] == Value::Unknown) open = true;
            }
            if (body.neg.test(i)) {
                if (assign[i] == Value::True) return Status::False;
                if (assign[i] == Value::Unknown) open = true;
            }
        }
        for (const CompiledCard& card : body.cards) {
            int certain = 0, possible = 0;
            for (std::size_t i = 0; i < c.n; ++i) {
                if (!card.members.test(i)) continue;
                if (assign[i] == Value::True) ++certain;
                if (assign[i] != Value::False) ++possible;
            }
            if (possible < card.lower) return Status::False;
            if (certain < card.lower) open = true;
        }
        return open ? Status::Open : Status::True;
    }

    bool set(std::size_t atom, Value v, std::vector<std::size_t>& trail) {
        if (assign[atom] == v) return true;
        if (assign[atom] != Value::Unknown) return false;  // conflict
        assign[atom] = v;
        trail.push_back(atom);
        return true;
    }

    // Runs propagation to a fixpoint; false = conflict. Every inference is a
    // consequence true in all stable extensions of the current assignment.
    bool propagate(std::vector<std::size_t>& trail) {
        bool again = true;
        while (again) {
            again = false;
            for (const CompiledRule& rule : c.rules) {
                const Status st = body_status(rule.body);
                if (rule.head < 0) {
                    if (st == Status::True) return false;  // violated constraint
                    continue;
                }
                if (st == Status::True && assign[rule.head] != Value::True) {
                    if (!set(rule.head, Value::True, trail)) return false;
                    again = true;
                }
            }
            // unsupported atoms are false
            for (std::size_t a = 0; a < c.n; ++a) {
                if (assign[a] != Value::Unknown) continue;
                bool maybe_supported = false;
                for (std::size_t r : c.heads_of[a]) {
                    if (body_status(c.rules[r].body) != Status::False) {
                        maybe_supported = true;
                        break;
                    }
                }
                if (!maybe_supported) {
                    if (!set(a, Value::False, trail)) return false;
                    again = true;
                }
            }
            // choice bounds, once their condition is certain
            for (const CompiledBound& bound : c.bounds) {
                if (body_status(bound.condition) != Status::True) continue;
                int certain = 0, possible = 0;
                for (std::size_t i = 0; i < c.n; ++i) {
                    if (!bound.members.test(i)) continue;
                    if (assign[i] == Value::True) ++certain;
                    if (assign[i] != Value::False) ++possible;
                }
                if (certain > bound.upper || possible < bound.lower) return false;
                if (certain == bound.upper && possible > certain) {
                    // remaining members must be false
                    for (std::size_t i = 0; i < c.n; ++i) {
                        if (bound.members.test(i) && assign[i] == Value::Unknown) {
                            if (!set(i, Value::False, trail)) return false;
                        }
                    }
                    again = true;
                } else if (possible == bound.lower && certain < possible) {
                    for (std::size_t i = 0; i < c.n; ++i) {
                        if (bound.members.test(i) && assign[i] == Value::Unknown) {
                            if (!set(i, Value::True, trail)) return false;
                        }
                    }
                    again = true;
                }
            }
        }
        return true;
    }

    void dfs() {
        std::vector<std::size_t> trail;
        if (!propagate(trail)) {
            undo(trail);
            return;
        }
        std::size_t pick = c.n;
        for (std::size_t a = 0; a < c.n; ++a) {
            if (assign[a] == Value::Unknown) {
                pick = a;
                break;
            }
        }
        if (pick == c.n) {
            Bits candidate(c.n);
            for (std::size_t a = 0; a < c.n; ++a)
                if (assign[a] == Value::True) candidate.set(a);
            if (stable(c, candidate)) {
                if (cap && results.size() >= *cap) {
                    throw Error(ErrorCode::MaxAnswerSetsExceeded,
                                "more than " + std::to_string(*cap) + " answer sets");
                }
                results.push_back(std::move(candidate));
            }
            undo(trail);
            return;
        }
        for (const Value v : {Value::False, Value::True}) {
            std::vector<std::size_t> branch;
            if (set(pick, v, branch)) dfs();
            undo(branch);
        }
        undo(trail);
    }

    void undo(const std::vector<std::size_t>& trail) {
        for (std::size_t a : trail) assign[a] = Value::Unknown;
    }
};

std::vector<AnswerSet> strip_and_sort(const NormalizedProgram& np,
                                      const std::vector<Bits>& models) {
    std::vector<AnswerSet> out;
    out.reserve(models.size());
    for (const Bits& m : models) {
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < np.user_atoms; ++i)
            if (m.test(i)) atoms.push_back(np.atoms[i]);
        out.emplace_back(std::move(atoms));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

NormalizedProgram normalize(const GroundProgram& ground) {
    NormalizedProgram np;
    np.atoms = ground.herbrand_base;
    np.user_atoms = np.atoms.size();

    std::size_t fresh_counter = 0;
    auto fresh_atom = [&] {
        return Atom::make("_c" + std::to_string(fresh_counter++));
    };

    for (const GroundRule& rule : ground.rules) {
        if (!rule.has_choice_head()) {
            np.rules.push_back(rule);
            continue;
        }
        const GroundChoiceHead& choice = rule.choice_head();
        for (const Atom& h : choice.atoms) {
            const Atom complement = fresh_atom();
            np.atoms.push_back(complement);

            GroundRule pick;
            pick.head = h;
            pick.body = rule.body;
            pick.body.push_back(GroundBodyElement::negated(complement));
            pick.span = rule.span;
            np.rules.push_back(std::move(pick));

            GroundRule reject;
            reject.head = complement;
            reject.body = rule.body;
            reject.body.push_back(GroundBodyElement::negated(h));
            reject.span = rule.span;
            np.rules.push_back(std::move(reject));
        }
        if (choice.lower || choice.upper) {
            BoundCheck bound;
            bound.condition = rule.body;
            bound.atoms = choice.atoms;
            bound.lower = choice.lower;
            bound.upper = choice.upper;
            np.bound_checks.push_back(std::move(bound));
        }
    }
    return np;
}

bool is_stable(const NormalizedProgram& program, const Bits& candidate) {
    return stable(compile(program), candidate);
}

std::vector<AnswerSet> enumerate(const NormalizedProgram& program,
                                 std::optional<std::size_t> max_answer_sets) {
    const Compiled c = compile(program);
    Search search(c, max_answer_sets);
    search.dfs();
    return strip_and_sort(program, search.results);
}

std::vector<AnswerSet> enumerate(const GroundProgram& ground,
                                 std::optional<std::size_t> max_answer_sets) {
    return enumerate(normalize(ground), max_answer_sets);
}

std::vector<AnswerSet> oracle_enumerate(const NormalizedProgram& program) {
    const std::size_t n = program.atoms.size();
    if (n > kOracleCap) {
        throw Error(ErrorCode::TooLarge,
                    "oracle enumeration over " + std::to_string(n) + " atoms (cap " +
                        std::to_string(kOracleCap) + ")");
    }
    const Compiled c = compile(program);
    std::vector<Bits> models;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Bits candidate(n);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) candidate.set(i);
        if (stable(c, candidate)) models.push_back(std::move(candidate));
    }
    return strip_and_sort(program, models);
}

std::vector<AnswerSet> oracle_enumerate(const GroundProgram& ground) {
    return oracle_enumerate(normalize(ground));
}

}  // namespace condasp
