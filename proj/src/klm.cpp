#include "condasp/klm.hpp"

#include <algorithm>
#include <sstream>

#include "condasp/error.hpp"
#include "condasp/grounder.hpp"
#include "condasp/solver.hpp"

namespace condasp {

namespace {

// ---------------------------------------------------------------------------
// truth tables

bool eval_mask(const Formula& f, const std::vector<Atom>& atoms, std::uint64_t mask) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            auto it = std::lower_bound(atoms.begin(), atoms.end(), f.atom_value(), atom_less);
            const std::size_t i = static_cast<std::size_t>(it - atoms.begin());
            return (mask >> i) & 1;
        }
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Not: return !eval_mask(f.lhs(), atoms, mask);
        case Formula::Kind::And:
            return eval_mask(f.lhs(), atoms, mask) && eval_mask(f.rhs(), atoms, mask);
        case Formula::Kind::Or:
            return eval_mask(f.lhs(), atoms, mask) || eval_mask(f.rhs(), atoms, mask);
        case Formula::Kind::Implies:
            return !eval_mask(f.lhs(), atoms, mask) || eval_mask(f.rhs(), atoms, mask);
        case Formula::Kind::Typ:
            throw Error(ErrorCode::TypNotAllowed,
                        "truth tables are defined for classical formulas only");
    }
    return false;
}

std::vector<Atom> merged_atoms(const Formula& a, const Formula& b) {
    std::vector<Atom> atoms = a.atoms();
    for (const Atom& x : b.atoms()) atoms.push_back(x);
    std::sort(atoms.begin(), atoms.end(), atom_less);
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

}  // namespace

bool is_tautology(const Formula& f) {
    const std::vector<Atom> atoms = f.atoms();
    if (atoms.size() > 20) {
        throw Error(ErrorCode::TooLarge, "truth table over more than 20 atoms");
    }
    const std::uint64_t total = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (!eval_mask(f, atoms, mask)) return false;
    }
    return true;
}

bool are_equivalent(const Formula& a, const Formula& b) {
    const std::vector<Atom> atoms = merged_atoms(a, b);
    if (atoms.size() > 20) {
        throw Error(ErrorCode::TooLarge, "truth table over more than 20 atoms");
    }
    const std::uint64_t total = std::uint64_t{1} << atoms.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (eval_mask(a, atoms, mask) != eval_mask(b, atoms, mask)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// identity rewrites
//
// Each rewrite preserves classical truth and, because min/max over the
// integers form a distributive lattice and negation is the affine
// reflection w -> Max - w + Min, it also preserves the accumulated weight
// of the formula at every world. Full propositional equivalence does not
// guarantee equal weights (e.g. `x` vs `x & (y | ~y)` differ when the
// weight of `x` exceeds both weights of `y` and `~y`), so equivalent pairs
// are always produced by chains of these identities.

namespace {

using RewriteFn = std::optional<Formula> (*)(const Formula&);

std::optional<Formula> rw_double_neg_elim(const Formula& f) {
    if (f.kind() == Formula::Kind::Not && f.lhs().kind() == Formula::Kind::Not) {
        return f.lhs().lhs();
    }
    return std::nullopt;
}

std::optional<Formula> rw_double_neg_intro(const Formula& f) {
    return Formula::negation(Formula::negation(f));
}

std::optional<Formula> rw_de_morgan_split(const Formula& f) {
    if (f.kind() != Formula::Kind::Not) return std::nullopt;
    const Formula inner = f.lhs();
    if (inner.kind() == Formula::Kind::And) {
        return Formula::disjunction(Formula::negation(inner.lhs()),
                                    Formula::negation(inner.rhs()));
    }
    if (inner.kind() == Formula::Kind::Or) {
        return Formula::conjunction(Formula::negation(inner.lhs()),
                                    Formula::negation(inner.rhs()));
    }
    return std::nullopt;
}

std::optional<Formula> rw_de_morgan_join(const Formula& f) {
    if (f.kind() == Formula::Kind::Or && f.lhs().kind() == Formula::Kind::Not &&
        f.rhs().kind() == Formula::Kind::Not) {
        return Formula::negation(Formula::conjunction(f.lhs().lhs(), f.rhs().lhs()));
    }
    if (f.kind() == Formula::Kind::And && f.lhs().kind() == Formula::Kind::Not &&
        f.rhs().kind() == Formula::Kind::Not) {
        return Formula::negation(Formula::disjunction(f.lhs().lhs(), f.rhs().lhs()));
    }
    return std::nullopt;
}

std::optional<Formula> rw_commute(const Formula& f) {
    if (f.kind() == Formula::Kind::And) return Formula::conjunction(f.rhs(), f.lhs());
    if (f.kind() == Formula::Kind::Or) return Formula::disjunction(f.rhs(), f.lhs());
    return std::nullopt;
}

std::optional<Formula> rw_idem_elim(const Formula& f) {
    if ((f.kind() == Formula::Kind::And || f.kind() == Formula::Kind::Or) &&
        f.lhs() == f.rhs()) {
        return f.lhs();
    }
    return std::nullopt;
}

std::optional<Formula> rw_idem_intro_and(const Formula& f) {
    return Formula::conjunction(f, f);
}

std::optional<Formula> rw_idem_intro_or(const Formula& f) {
    return Formula::disjunction(f, f);
}

std::optional<Formula> rw_assoc_left(const Formula& f) {
    if (f.kind() == Formula::Kind::And && f.rhs().kind() == Formula::Kind::And) {
        return Formula::conjunction(Formula::conjunction(f.lhs(), f.rhs().lhs()),
                                    f.rhs().rhs());
    }
    if (f.kind() == Formula::Kind::Or && f.rhs().kind() == Formula::Kind::Or) {
        return Formula::disjunction(Formula::disjunction(f.lhs(), f.rhs().lhs()),
                                    f.rhs().rhs());
    }
    return std::nullopt;
}

std::optional<Formula> rw_assoc_right(const Formula& f) {
    if (f.kind() == Formula::Kind::And && f.lhs().kind() == Formula::Kind::And) {
        return Formula::conjunction(f.lhs().lhs(),
                                    Formula::conjunction(f.lhs().rhs(), f.rhs()));
    }
    if (f.kind() == Formula::Kind::Or && f.lhs().kind() == Formula::Kind::Or) {
        return Formula::disjunction(f.lhs().lhs(),
                                    Formula::disjunction(f.lhs().rhs(), f.rhs()));
    }
    return std::nullopt;
}

std::optional<Formula> rw_absorb_elim(const Formula& f) {
    if (f.kind() == Formula::Kind::And && f.rhs().kind() == Formula::Kind::Or &&
        f.lhs() == f.rhs().lhs()) {
        return f.lhs();
    }
    if (f.kind() == Formula::Kind::Or && f.rhs().kind() == Formula::Kind::And &&
        f.lhs() == f.rhs().lhs()) {
        return f.lhs();
    }
    return std::nullopt;
}

std::optional<Formula> rw_absorb_intro(const Formula& f) {
    // X -> X & (X | X); truth and weight both collapse back to X
    return Formula::conjunction(f, Formula::disjunction(f, f));
}

std::optional<Formula> rw_distribute(const Formula& f) {
    if (f.kind() == Formula::Kind::And && f.rhs().kind() == Formula::Kind::Or) {
        return Formula::disjunction(Formula::conjunction(f.lhs(), f.rhs().lhs()),
                                    Formula::conjunction(f.lhs(), f.rhs().rhs()));
    }
    if (f.kind() == Formula::Kind::Or && f.rhs().kind() == Formula::Kind::And) {
        return Formula::conjunction(Formula::disjunction(f.lhs(), f.rhs().lhs()),
                                    Formula::disjunction(f.lhs(), f.rhs().rhs()));
    }
    return std::nullopt;
}

std::optional<Formula> rw_factor(const Formula& f) {
    if (f.kind() == Formula::Kind::Or && f.lhs().kind() == Formula::Kind::And &&
        f.rhs().kind() == Formula::Kind::And && f.lhs().lhs() == f.rhs().lhs()) {
        return Formula::conjunction(f.lhs().lhs(),
                                    Formula::disjunction(f.lhs().rhs(), f.rhs().rhs()));
    }
    if (f.kind() == Formula::Kind::And && f.lhs().kind() == Formula::Kind::Or &&
        f.rhs().kind() == Formula::Kind::Or && f.lhs().lhs() == f.rhs().lhs()) {
        return Formula::disjunction(f.lhs().lhs(),
                                    Formula::conjunction(f.lhs().rhs(), f.rhs().rhs()));
    }
    return std::nullopt;
}

constexpr RewriteFn kRewrites[] = {
    rw_double_neg_elim, rw_double_neg_intro, rw_de_morgan_split, rw_de_morgan_join,
    rw_commute,         rw_idem_elim,        rw_idem_intro_and,  rw_idem_intro_or,
    rw_assoc_left,      rw_assoc_right,      rw_absorb_elim,     rw_absorb_intro,
    rw_distribute,      rw_factor,
};

std::size_t count_nodes(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Not:
        case Formula::Kind::Typ: return 1 + count_nodes(f.lhs());
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            return 1 + count_nodes(f.lhs()) + count_nodes(f.rhs());
        default: return 1;
    }
}

/// Rebuilds f with `rewrite` applied at the node numbered `target` in
/// preorder. `counter` threads the numbering through the walk.
std::optional<Formula> apply_at(const Formula& f, RewriteFn rewrite, std::size_t target,
                                std::size_t& counter) {
    if (counter++ == target) return rewrite(f);
    switch (f.kind()) {
        case Formula::Kind::Not: {
            auto inner = apply_at(f.lhs(), rewrite, target, counter);
            if (inner) return Formula::negation(*inner);
            return std::nullopt;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            const std::size_t before = counter;
            auto left = apply_at(f.lhs(), rewrite, target, counter);
            if (left) {
                return f.kind() == Formula::Kind::And
                           ? Formula::conjunction(*left, f.rhs())
                           : Formula::disjunction(*left, f.rhs());
            }
            (void)before;
            auto right = apply_at(f.rhs(), rewrite, target, counter);
            if (right) {
                return f.kind() == Formula::Kind::And
                           ? Formula::conjunction(f.lhs(), *right)
                           : Formula::disjunction(f.lhs(), *right);
            }
            return std::nullopt;
        }
        default: return std::nullopt;
    }
}

Formula rewrite_randomly(const Formula& f, std::mt19937_64& rng, std::size_t steps) {
    Formula current = f;
    for (std::size_t step = 0; step < steps; ++step) {
        const std::size_t nodes = count_nodes(current);
        if (nodes > 60) break;  // keep variants readable and truth tables cheap
        bool applied = false;
        for (int attempt = 0; attempt < 24 && !applied; ++attempt) {
            const std::size_t target = rng() % nodes;
            const RewriteFn rewrite = kRewrites[rng() % std::size(kRewrites)];
            std::size_t counter = 0;
            if (auto next = apply_at(current, rewrite, target, counter)) {
                current = *next;
                applied = true;
            }
        }
        if (!applied) break;
    }
    return current;
}

}  // namespace

std::vector<Formula> equivalent_variants(const Formula& f, std::size_t max_variants,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Formula> out;
    for (std::size_t i = 0; i < max_variants * 4 && out.size() < max_variants; ++i) {
        const Formula variant = rewrite_randomly(f, rng, 1 + rng() % 4);
        if (variant == f) continue;
        bool fresh = true;
        for (const Formula& seen : out) {
            if (seen == variant) {
                fresh = false;
                break;
            }
        }
        if (!fresh) continue;
        if (!are_equivalent(f, variant)) continue;  // never expected; certification
        out.push_back(variant);
    }
    return out;
}

Formula random_formula(const std::vector<Atom>& atoms, std::size_t max_depth,
                       std::mt19937_64& rng) {
    if (atoms.empty()) {
        throw Error(ErrorCode::UnsupportedShape, "no atoms to build a formula from");
    }
    if (max_depth == 0 || rng() % 3 == 0) {
        return Formula::atom(atoms[rng() % atoms.size()]);
    }
    switch (rng() % 3) {
        case 0: return Formula::negation(random_formula(atoms, max_depth - 1, rng));
        case 1:
            return Formula::conjunction(random_formula(atoms, max_depth - 1, rng),
                                        random_formula(atoms, max_depth - 1, rng));
        default:
            return Formula::disjunction(random_formula(atoms, max_depth - 1, rng),
                                        random_formula(atoms, max_depth - 1, rng));
    }
}

// ---------------------------------------------------------------------------
// instance generation

namespace {

std::vector<Atom> instance_atoms(std::size_t count) {
    static const char* const names[] = {"a", "b", "c", "d", "e", "f", "g", "h",
                                        "i", "j", "k", "l"};
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < count && i < std::size(names); ++i) {
        atoms.push_back(Atom::make(names[i]));
    }
    return atoms;
}

Program random_program(const std::vector<Atom>& atoms, std::size_t rule_budget,
                       std::mt19937_64& rng) {
    Program program;
    auto schema = [](const Atom& a) { return AtomSchema::from_atom(a); };
    auto random_atom = [&] { return atoms[rng() % atoms.size()]; };

    // Open the whole space with one bounds-free choice over every atom, then
    // sprinkle structure on top. With every atom freely choosable, odd
    // negative loops cannot make the program inconsistent on their own, so
    // most draws are consistent on the first try.
    {
        Rule choice;
        ChoiceHead head;
        std::vector<Atom> sample = atoms;
        std::shuffle(sample.begin(), sample.end(), rng);
        for (const Atom& atom : sample) head.atoms.push_back(schema(atom));
        choice.head = std::move(head);
        program.rules.push_back(std::move(choice));
    }

    const std::size_t extra = rule_budget > 1 ? rng() % rule_budget : 0;
    for (std::size_t i = 0; i < extra; ++i) {
        switch (rng() % 8) {
            case 0: {  // fact
                Rule rule;
                rule.head = schema(random_atom());
                program.rules.push_back(std::move(rule));
                break;
            }
            case 1:
            case 2:
            case 3: {  // normal rule, one or two body literals
                Rule rule;
                rule.head = schema(random_atom());
                const std::size_t literals = 1 + rng() % 2;
                for (std::size_t k = 0; k < literals; ++k) {
                    const Atom body_atom = random_atom();
                    rule.body.push_back(rng() % 2
                                            ? BodyElement::positive(schema(body_atom))
                                            : BodyElement::negated(schema(body_atom)));
                }
                program.rules.push_back(std::move(rule));
                break;
            }
            case 4: {  // binary constraint
                Rule rule;
                rule.head = std::monostate{};
                rule.body.push_back(BodyElement::positive(schema(random_atom())));
                rule.body.push_back(rng() % 2
                                        ? BodyElement::positive(schema(random_atom()))
                                        : BodyElement::negated(schema(random_atom())));
                program.rules.push_back(std::move(rule));
                break;
            }
            case 5: {  // bounded choice
                Rule rule;
                ChoiceHead head;
                const std::size_t width = 1 + rng() % 3;
                for (std::size_t k = 0; k < width; ++k)
                    head.atoms.push_back(schema(random_atom()));
                head.lower = 0;
                head.upper = static_cast<int>(1 + rng() % width);
                rule.head = std::move(head);
                if (rng() % 2) {
                    rule.body.push_back(BodyElement::positive(schema(random_atom())));
                }
                program.rules.push_back(std::move(rule));
                break;
            }
            case 6: {  // rule guarded by a cardinality
                Rule rule;
                rule.head = schema(random_atom());
                std::vector<AtomSchema> members;
                const std::size_t width = 2 + rng() % 2;
                for (std::size_t k = 0; k < width; ++k) members.push_back(schema(random_atom()));
                rule.body.push_back(
                    BodyElement::cardinality(static_cast<int>(1 + rng() % 2), members));
                program.rules.push_back(std::move(rule));
                break;
            }
            default: {  // another unbounded choice
                Rule rule;
                ChoiceHead head;
                const std::size_t width = 1 + rng() % 3;
                for (std::size_t k = 0; k < width; ++k)
                    head.atoms.push_back(schema(random_atom()));
                rule.head = std::move(head);
                program.rules.push_back(std::move(rule));
                break;
            }
        }
    }
    return program;
}

ConditionalKB random_kb(const std::vector<Atom>& atoms, const InstanceSeed& limits,
                        std::mt19937_64& rng) {
    ConditionalKB kb;
    const std::size_t count = 1 + rng() % std::max<std::size_t>(1, limits.kb_budget);
    const std::int64_t span = limits.max_weight - limits.min_weight + 1;
    for (std::size_t i = 0; i < count; ++i) {
        WeightedConditional c;
        c.subject = atoms[rng() % atoms.size()];
        c.consequent = random_formula(atoms, 2, rng);
        c.weight = limits.min_weight + static_cast<std::int64_t>(rng() % span);
        kb.weighted.push_back(std::move(c));
    }
    return kb;
}

}  // namespace

Instance generate_instance(const InstanceSeed& seed, bool& first_try_consistent) {
    constexpr int kMaxRetries = 64;
    first_try_consistent = false;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::mt19937_64 rng(seed.seed * 0x9e3779b97f4a7c15ULL + attempt);
        const std::size_t budget =
            std::max<std::size_t>(1, std::min<std::size_t>(seed.atom_budget, 12));
        const std::size_t atom_count = 1 + rng() % budget;
        const std::vector<Atom> atoms = instance_atoms(atom_count);
        const Program program =
            random_program(atoms, std::max<std::size_t>(1, seed.rule_budget), rng);
        const GroundProgram ground = ground_program(program);
        std::vector<AnswerSet> worlds = enumerate(ground);
        if (worlds.empty()) continue;
        if (attempt == 0) first_try_consistent = true;
        const ConditionalKB kb = random_kb(atoms, seed, rng);
        Instance instance{ground, kb,
                          PreferentialModel::build_from_worlds(std::move(worlds), kb)};
        return instance;
    }
    throw Error(ErrorCode::GenerationExhausted,
                "no consistent program found within the retry budget");
}

Instance generate_instance(const InstanceSeed& seed) {
    bool ignored = false;
    return generate_instance(seed, ignored);
}

// ---------------------------------------------------------------------------
// postulates

std::string to_string(Postulate p) {
    switch (p) {
        case Postulate::Reflexivity: return "Reflexivity";
        case Postulate::LeftLogicalEquivalence: return "Left Logical Equivalence";
        case Postulate::RightWeakening: return "Right Weakening";
        case Postulate::And: return "And";
        case Postulate::Or: return "Or";
        case Postulate::CautiousMonotonicity: return "Cautious Monotonicity";
    }
    return "?";
}

namespace {

std::string describe_violation(const PreferentialModel& model, const std::string& premise,
                               const Formula& conclusion) {
    const EntailmentVerdict verdict = model.check_entailment(conclusion);
    std::ostringstream out;
    out << premise << " but " << conclusion.to_string() << " fails";
    if (verdict.counterexample) {
        out << " at world {" << verdict.counterexample->to_string() << "}";
    }
    return out.str();
}

class PostulateChecker {
  public:
    PostulateChecker(const PreferentialModel& model, PostulateReport& report)
        : model_(model), report_(report) {}

    bool entailed(const Formula& antecedent, const Formula& consequent) {
        return model_.check_entailment(Formula::implication(antecedent, consequent))
            .entailed;
    }

    /// Records a violation if `conclusion` is not entailed, re-verifying
    /// through a second check_entailment call first.
    void require(Postulate postulate, const std::string& premise,
                 const Formula& antecedent, const Formula& consequent) {
        ++report_.applications;
        const Formula conclusion = Formula::implication(antecedent, consequent);
        if (model_.check_entailment(conclusion).entailed) return;
        if (model_.check_entailment(conclusion).entailed) return;  // re-verify
        report_.violations.push_back(
            PostulateViolation{postulate, describe_violation(model_, premise, conclusion)});
    }

  private:
    const PreferentialModel& model_;
    PostulateReport& report_;
};

}  // namespace

PostulateReport check_postulates(const PreferentialModel& model, std::size_t trials,
                                 std::uint64_t seed) {
    PostulateReport report;
    report.trials = trials;
    const std::vector<Atom> subjects = model.kb().weighted_subjects();
    if (subjects.empty()) return report;

    std::mt19937_64 rng(seed);
    PostulateChecker check(model, report);

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Formula a = random_formula(subjects, 2, rng);
        const Formula b = random_formula(subjects, 2, rng);
        const Formula c = random_formula(subjects, 2, rng);
        const Formula ta = Formula::typicality(a);

        // Reflexivity: T(A) -> A
        check.require(Postulate::Reflexivity, "reflexivity of " + a.to_string(), ta, a);

        // Right Weakening: B -> (B | C) is valid, so T(A) -> B gives
        // T(A) -> (B | C)
        {
            const Formula weaker = Formula::disjunction(b, c);
            if (is_tautology(Formula::implication(b, weaker)) && check.entailed(ta, b)) {
                check.require(Postulate::RightWeakening,
                              "T(" + a.to_string() + ") -> " + b.to_string() +
                                  " entailed and |= " + b.to_string() + " -> " +
                                  weaker.to_string(),
                              ta, weaker);
            }
        }

        // Left Logical Equivalence on an identity-rewritten copy of A
        {
            const std::vector<Formula> variants = equivalent_variants(a, 1, rng());
            if (!variants.empty() && are_equivalent(a, variants.front()) &&
                check.entailed(ta, c)) {
                check.require(Postulate::LeftLogicalEquivalence,
                              "T(" + a.to_string() + ") -> " + c.to_string() +
                                  " entailed and " + a.to_string() + " == " +
                                  variants.front().to_string(),
                              Formula::typicality(variants.front()), c);
            }
        }

        // And / Or / Cautious Monotonicity
        if (check.entailed(ta, b) && check.entailed(ta, c)) {
            check.require(Postulate::And,
                          "T(" + a.to_string() + ") entails both " + b.to_string() +
                              " and " + c.to_string(),
                          ta, Formula::conjunction(b, c));
            check.require(Postulate::CautiousMonotonicity,
                          "T(" + a.to_string() + ") entails both " + b.to_string() +
                              " and " + c.to_string(),
                          Formula::typicality(Formula::conjunction(a, b)), c);
        }
        if (check.entailed(ta, c) && check.entailed(Formula::typicality(b), c)) {
            check.require(Postulate::Or,
                          "both T(" + a.to_string() + ") and T(" + b.to_string() +
                              ") entail " + c.to_string(),
                          Formula::typicality(Formula::disjunction(a, b)), c);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// rational monotonicity

std::optional<std::string> find_rm_triple(const PreferentialModel& model,
                                          std::size_t budget, std::uint64_t seed) {
    const std::vector<Atom> subjects = model.kb().weighted_subjects();
    if (subjects.empty()) return std::nullopt;
    std::mt19937_64 rng(seed);

    for (std::size_t i = 0; i < budget; ++i) {
        // alternate between plain atoms and small combinations
        const Formula a = i % 2 ? random_formula(subjects, 2, rng)
                                : Formula::atom(subjects[rng() % subjects.size()]);
        const Formula b = i % 2 ? random_formula(subjects, 2, rng)
                                : Formula::atom(subjects[rng() % subjects.size()]);
        const Formula c = random_formula(subjects, 2, rng);
        const Formula ta = Formula::typicality(a);

        const bool premise1 =
            model.check_entailment(Formula::implication(ta, c)).entailed;
        if (!premise1) continue;
        const bool premise2 =
            !model.check_entailment(Formula::implication(ta, Formula::negation(b)))
                 .entailed;
        if (!premise2) continue;
        const Formula conclusion = Formula::implication(
            Formula::typicality(Formula::conjunction(a, b)), c);
        const EntailmentVerdict verdict = model.check_entailment(conclusion);
        if (verdict.entailed) continue;

        std::ostringstream out;
        out << "T(" << a.to_string() << ") -> " << c.to_string() << " entailed; T("
            << a.to_string() << ") -> " << Formula::negation(b).to_string()
            << " not entailed; yet " << conclusion.to_string() << " fails";
        if (verdict.counterexample) {
            out << " at world {" << verdict.counterexample->to_string() << "}";
        }
        return out.str();
    }
    return std::nullopt;
}

std::optional<RmWitness> search_rm_counterexample(std::size_t budget, std::uint64_t seed,
                                                  const InstanceSeed& limits) {
    for (std::size_t i = 0; i < budget; ++i) {
        InstanceSeed draw = limits;
        draw.seed = seed + i;
        Instance instance = generate_instance(draw);
        std::mt19937_64 rng(seed ^ (i * 0x2545f4914f6cdd1dULL));
        const std::vector<Atom> subjects = instance.kb.weighted_subjects();
        if (subjects.empty()) continue;

        for (std::size_t t = 0; t < 32; ++t) {
            const Formula a = t % 2 ? random_formula(subjects, 2, rng)
                                    : Formula::atom(subjects[rng() % subjects.size()]);
            const Formula b = t % 2 ? random_formula(subjects, 2, rng)
                                    : Formula::atom(subjects[rng() % subjects.size()]);
            const Formula c = random_formula(subjects, 2, rng);
            const Formula ta = Formula::typicality(a);

            if (!instance.model.check_entailment(Formula::implication(ta, c)).entailed)
                continue;
            if (instance.model
                    .check_entailment(Formula::implication(ta, Formula::negation(b)))
                    .entailed)
                continue;
            const Formula conclusion = Formula::implication(
                Formula::typicality(Formula::conjunction(a, b)), c);
            const EntailmentVerdict verdict = instance.model.check_entailment(conclusion);
            if (verdict.entailed) continue;

            std::ostringstream out;
            out << "T(" << a.to_string() << ") -> " << c.to_string() << " entailed; T("
                << a.to_string() << ") -> " << Formula::negation(b).to_string()
                << " not entailed; yet " << conclusion.to_string() << " fails";
            if (verdict.counterexample) {
                out << " at world {" << verdict.counterexample->to_string() << "}";
            }
            return RmWitness{instance.ground, instance.kb, a, b, c, out.str()};
        }
    }
    return std::nullopt;
}

}  // namespace condasp
