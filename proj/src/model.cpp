#include "condasp/model.hpp"

#include <algorithm>
#include <limits>

#include "condasp/error.hpp"
#include "condasp/grounder.hpp"
#include "condasp/solver.hpp"

namespace condasp {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "weight arithmetic overflow");
    }
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(ErrorCode::Overflow, "weight arithmetic overflow");
    }
    return r;
}

}  // namespace

PreferentialModel PreferentialModel::build(const GroundProgram& ground,
                                           const ConditionalKB& kb) {
    return build_from_worlds(enumerate(ground), kb);
}

PreferentialModel PreferentialModel::build(const Program& program, const ConditionalKB& kb) {
    return build(simplify(ground_program(program)), kb);
}

PreferentialModel PreferentialModel::build_from_worlds(std::vector<AnswerSet> worlds,
                                                       const ConditionalKB& kb) {
    kb.validate();
    std::sort(worlds.begin(), worlds.end());
    worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
    if (worlds.empty()) {
        throw Error(ErrorCode::InconsistentProgram, "the program has no answer sets");
    }

    PreferentialModel m;
    m.worlds_ = std::move(worlds);
    m.kb_ = kb;

    for (const Atom& subject : kb.weighted_subjects()) {
        std::vector<std::int64_t> row(m.worlds_.size(), 0);
        for (const WeightedConditional& c : kb.weighted) {
            if (!(c.subject == subject)) continue;
            for (std::size_t w = 0; w < m.worlds_.size(); ++w) {
                if (eval_classical(m.worlds_[w], c.consequent)) {
                    row[w] = checked_add(row[w], c.weight);
                }
            }
        }
        m.weights_.emplace(subject, std::move(row));
    }

    if (m.weights_.empty()) {
        m.global_max_ = 0;
        m.global_min_ = 0;
    } else {
        m.global_max_ = std::numeric_limits<std::int64_t>::min();
        m.global_min_ = std::numeric_limits<std::int64_t>::max();
        for (const auto& [subject, row] : m.weights_) {
            for (std::int64_t w : row) {
                m.global_max_ = std::max(m.global_max_, w);
                m.global_min_ = std::min(m.global_min_, w);
            }
        }
    }

    for (const Atom& subject : kb.ranked_subjects()) {
        std::vector<std::uint32_t> levels;
        for (const RankedConditional& c : kb.ranked) {
            if (c.subject == subject) levels.push_back(c.rank);
        }
        std::sort(levels.rbegin(), levels.rend());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

        std::vector<std::pair<std::uint32_t, std::vector<std::size_t>>> table;
        for (std::uint32_t level : levels) {
            std::vector<std::size_t> counts(m.worlds_.size(), 0);
            for (const RankedConditional& c : kb.ranked) {
                if (!(c.subject == subject) || c.rank != level) continue;
                for (std::size_t w = 0; w < m.worlds_.size(); ++w) {
                    // vacuously satisfied when the subject is false
                    if (!m.worlds_[w].contains(subject) ||
                        eval_classical(m.worlds_[w], c.consequent)) {
                        ++counts[w];
                    }
                }
            }
            table.emplace_back(level, std::move(counts));
        }
        m.ranks_.emplace(subject, std::move(table));
    }
    return m;
}

std::int64_t PreferentialModel::weight_of(const Atom& subject, std::size_t world) const {
    if (kb_.is_ranked_subject(subject)) {
        throw Error(ErrorCode::RankedSubject,
                    "no weight is defined for ranked subject " + subject.to_string());
    }
    auto it = weights_.find(subject);
    return it == weights_.end() ? 0 : it->second[world];
}

std::int64_t PreferentialModel::weight_of_formula(const Formula& subject,
                                                  std::size_t world) const {
    switch (subject.kind()) {
        case Formula::Kind::Atom: return weight_of(subject.atom_value(), world);
        case Formula::Kind::And:
            return std::min(weight_of_formula(subject.lhs(), world),
                            weight_of_formula(subject.rhs(), world));
        case Formula::Kind::Or:
            return std::max(weight_of_formula(subject.lhs(), world),
                            weight_of_formula(subject.rhs(), world));
        case Formula::Kind::Not:
            // reflect across the global weight span
            return checked_add(checked_sub(global_max_,
                                           weight_of_formula(subject.lhs(), world)),
                               global_min_);
        case Formula::Kind::Top:
        case Formula::Kind::Bottom:
        case Formula::Kind::Implies:
        case Formula::Kind::Typ:
            throw Error(ErrorCode::UnsupportedShape,
                        "weights are defined for combinations of atoms with &, |, ~ "
                        "only: " +
                            subject.to_string());
    }
    return 0;
}

std::size_t PreferentialModel::ranked_satisfied_count(const Atom& subject,
                                                      std::uint32_t rank,
                                                      std::size_t world) const {
    auto it = ranks_.find(subject);
    if (it == ranks_.end()) {
        throw Error(ErrorCode::NotRankedSubject,
                    subject.to_string() + " is not a ranked subject");
    }
    for (const auto& [level, counts] : it->second) {
        if (level == rank) return counts[world];
    }
    return 0;
}

namespace {

/// Non-atomic combinations have no semantics over ranked subjects.
void reject_ranked_in_combination(const ConditionalKB& kb, const Formula& f) {
    if (f.kind() == Formula::Kind::Atom) return;
    for (const Atom& a : f.atoms()) {
        if (kb.is_ranked_subject(a)) {
            throw Error(ErrorCode::RankedComplexCombination,
                        "ranked subject " + a.to_string() +
                            " may not appear in a boolean combination: " + f.to_string());
        }
    }
}

}  // namespace

Preference PreferentialModel::prefers(const Formula& subject, std::size_t a,
                                      std::size_t b) const {
    if (subject.kind() == Formula::Kind::Atom &&
        kb_.is_ranked_subject(subject.atom_value())) {
        const auto& table = ranks_.at(subject.atom_value());
        for (const auto& [level, counts] : table) {  // highest rank first
            if (counts[a] != counts[b]) {
                return counts[a] > counts[b] ? Preference::StrictlyLess
                                             : Preference::StrictlyGreater;
            }
        }
        return Preference::Equivalent;
    }
    reject_ranked_in_combination(kb_, subject);
    const std::int64_t wa = weight_of_formula(subject, a);
    const std::int64_t wb = weight_of_formula(subject, b);
    if (wa > wb) return Preference::StrictlyLess;  // higher weight = preferred
    if (wa < wb) return Preference::StrictlyGreater;
    return Preference::Equivalent;
}

std::vector<std::size_t> PreferentialModel::typical_worlds(const Formula& subject) const {
    reject_ranked_in_combination(kb_, subject);
    std::vector<std::size_t> satisfying;
    for (std::size_t w = 0; w < worlds_.size(); ++w) {
        if (eval_classical(worlds_[w], subject)) satisfying.push_back(w);
    }
    if (satisfying.empty()) return {};
    std::size_t best = satisfying.front();
    for (std::size_t w : satisfying) {
        if (prefers(subject, w, best) == Preference::StrictlyLess) best = w;
    }
    std::vector<std::size_t> minimal;
    for (std::size_t w : satisfying) {
        if (prefers(subject, w, best) == Preference::Equivalent) minimal.push_back(w);
    }
    return minimal;
}

namespace {

bool eval_impl(const PreferentialModel& model, const Formula& f, std::size_t world,
               std::map<const void*, std::vector<std::size_t>>& typ_cache) {
    switch (f.kind()) {
        case Formula::Kind::Atom: return model.worlds()[world].contains(f.atom_value());
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Not: return !eval_impl(model, f.lhs(), world, typ_cache);
        case Formula::Kind::And:
            return eval_impl(model, f.lhs(), world, typ_cache) &&
                   eval_impl(model, f.rhs(), world, typ_cache);
        case Formula::Kind::Or:
            return eval_impl(model, f.lhs(), world, typ_cache) ||
                   eval_impl(model, f.rhs(), world, typ_cache);
        case Formula::Kind::Implies:
            return !eval_impl(model, f.lhs(), world, typ_cache) ||
                   eval_impl(model, f.rhs(), world, typ_cache);
        case Formula::Kind::Typ: {
            auto it = typ_cache.find(f.id());
            if (it == typ_cache.end()) {
                it = typ_cache.emplace(f.id(), model.typical_worlds(f.lhs())).first;
            }
            const std::vector<std::size_t>& typical = it->second;
            return std::binary_search(typical.begin(), typical.end(), world);
        }
    }
    return false;
}

void collect_typ(const Formula& f, std::vector<Formula>& out) {
    switch (f.kind()) {
        case Formula::Kind::Typ: {
            for (const Formula& seen : out)
                if (seen == f) return;
            out.push_back(f);
            return;
        }
        case Formula::Kind::Not: collect_typ(f.lhs(), out); return;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::Implies:
            collect_typ(f.lhs(), out);
            collect_typ(f.rhs(), out);
            return;
        default: return;
    }
}

}  // namespace

bool PreferentialModel::eval(const Formula& query, std::size_t world) const {
    validate_formula(query);
    std::map<const void*, std::vector<std::size_t>> cache;
    return eval_impl(*this, query, world, cache);
}

EntailmentVerdict PreferentialModel::check_entailment(const Formula& query) const {
    validate_formula(query);
    if (query.kind() != Formula::Kind::Implies) {
        throw Error(ErrorCode::UnsupportedShape,
                    "entailment queries must be implications: " + query.to_string());
    }

    EntailmentVerdict verdict;
    std::map<const void*, std::vector<std::size_t>> cache;

    std::vector<Formula> typ_occurrences;
    collect_typ(query, typ_occurrences);
    for (const Formula& typ : typ_occurrences) {
        const Formula subject = typ.lhs();
        TypWitness witness;
        witness.subject = subject;
        witness.typical_world_indices = typical_worlds(subject);
        cache.emplace(typ.id(), witness.typical_world_indices);
        const bool ranked_atomic = subject.kind() == Formula::Kind::Atom &&
                                   kb_.is_ranked_subject(subject.atom_value());
        if (!ranked_atomic && !witness.typical_world_indices.empty()) {
            // maximal weight over the worlds satisfying the subject
            std::optional<std::int64_t> maxw;
            for (std::size_t w = 0; w < worlds_.size(); ++w) {
                if (!eval_classical(worlds_[w], subject)) continue;
                const std::int64_t weight = weight_of_formula(subject, w);
                if (!maxw || weight > *maxw) maxw = weight;
            }
            witness.max_weight = maxw;
        }
        verdict.typ_witnesses.push_back(std::move(witness));
    }

    verdict.entailed = true;
    for (std::size_t w = 0; w < worlds_.size(); ++w) {
        if (!eval_impl(*this, query, w, cache)) {
            verdict.entailed = false;
            verdict.counterexample = worlds_[w];
            break;
        }
    }
    return verdict;
}

std::string to_string(Preference p) {
    switch (p) {
        case Preference::StrictlyLess: return "strictly_less";
        case Preference::Equivalent: return "equivalent";
        case Preference::StrictlyGreater: return "strictly_greater";
    }
    return "?";
}

}  // namespace condasp
