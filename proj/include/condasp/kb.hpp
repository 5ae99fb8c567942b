#ifndef CONDASP_KB_HPP
#define CONDASP_KB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "condasp/atom.hpp"
#include "condasp/error.hpp"
#include "condasp/formula.hpp"

namespace condasp {

/// `T(subject) -> consequent : weight.`  Weights are signed integers.
struct WeightedConditional {
    Atom subject;
    Formula consequent;
    std::int64_t weight = 0;
    SourceSpan span;

    friend bool operator==(const WeightedConditional& a, const WeightedConditional& b) {
        return a.subject == b.subject && a.consequent == b.consequent && a.weight == b.weight;
    }
};

/// `T(subject) -> consequent @ rank.`  Ranks are non-negative; higher rank
/// means higher priority when comparing worlds.
struct RankedConditional {
    Atom subject;
    Formula consequent;
    std::uint32_t rank = 0;
    SourceSpan span;

    friend bool operator==(const RankedConditional& a, const RankedConditional& b) {
        return a.subject == b.subject && a.consequent == b.consequent && a.rank == b.rank;
    }
};

/// A conditional knowledge base. Every subject uses exactly one strategy:
/// a subject appearing in a weighted conditional may not also appear in a
/// ranked one (checked by `validate`).
struct ConditionalKB {
    std::vector<WeightedConditional> weighted;
    std::vector<RankedConditional> ranked;

    bool empty() const { return weighted.empty() && ranked.empty(); }

    /// Subjects of weighted conditionals, sorted and unique.
    std::vector<Atom> weighted_subjects() const;
    /// Subjects of ranked conditionals, sorted and unique.
    std::vector<Atom> ranked_subjects() const;
    /// Union of the two, sorted and unique.
    std::vector<Atom> distinguished_subjects() const;

    bool is_weighted_subject(const Atom& a) const;
    bool is_ranked_subject(const Atom& a) const;

    /// Throws Error(MixedStrategyForSubject) if some subject occurs in both
    /// lists, and Error(TypInConsequent) if any consequent contains a
    /// typicality operator.
    void validate() const;
};

std::string to_string(const WeightedConditional& c);
std::string to_string(const RankedConditional& c);
std::string to_string(const ConditionalKB& kb);

}  // namespace condasp

#endif
