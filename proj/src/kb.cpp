#include "condasp/kb.hpp"

#include <algorithm>
#include <sstream>

namespace condasp {

namespace {

std::vector<Atom> sorted_unique(std::vector<Atom> atoms) {
    std::sort(atoms.begin(), atoms.end(), atom_less);
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return atoms;
}

}  // namespace

std::vector<Atom> ConditionalKB::weighted_subjects() const {
    std::vector<Atom> out;
    out.reserve(weighted.size());
    for (const auto& c : weighted) out.push_back(c.subject);
    return sorted_unique(std::move(out));
}

std::vector<Atom> ConditionalKB::ranked_subjects() const {
    std::vector<Atom> out;
    out.reserve(ranked.size());
    for (const auto& c : ranked) out.push_back(c.subject);
    return sorted_unique(std::move(out));
}

std::vector<Atom> ConditionalKB::distinguished_subjects() const {
    std::vector<Atom> out = weighted_subjects();
    for (const auto& c : ranked) out.push_back(c.subject);
    return sorted_unique(std::move(out));
}

bool ConditionalKB::is_weighted_subject(const Atom& a) const {
    for (const auto& c : weighted)
        if (c.subject == a) return true;
    return false;
}

bool ConditionalKB::is_ranked_subject(const Atom& a) const {
    for (const auto& c : ranked)
        if (c.subject == a) return true;
    return false;
}

void ConditionalKB::validate() const {
    for (const auto& c : ranked) {
        if (is_weighted_subject(c.subject)) {
            throw Error(ErrorCode::MixedStrategyForSubject,
                        "subject " + c.subject.to_string() +
                            " uses both weighted and ranked conditionals");
        }
    }
    for (const auto& c : weighted) {
        if (c.consequent.contains_typ()) {
            throw Error(ErrorCode::TypInConsequent,
                        "typicality operator in conditional consequent: " +
                            c.consequent.to_string());
        }
    }
    for (const auto& c : ranked) {
        if (c.consequent.contains_typ()) {
            throw Error(ErrorCode::TypInConsequent,
                        "typicality operator in conditional consequent: " +
                            c.consequent.to_string());
        }
    }
}

std::string to_string(const WeightedConditional& c) {
    std::ostringstream out;
    out << "T(" << c.subject.to_string() << ") -> " << c.consequent.to_string() << " : "
        << c.weight << '.';
    return out.str();
}

std::string to_string(const RankedConditional& c) {
    std::ostringstream out;
    out << "T(" << c.subject.to_string() << ") -> " << c.consequent.to_string() << " @ "
        << c.rank << '.';
    return out.str();
}

std::string to_string(const ConditionalKB& kb) {
    std::ostringstream out;
    for (const auto& c : kb.weighted) out << to_string(c) << '\n';
    for (const auto& c : kb.ranked) out << to_string(c) << '\n';
    return out.str();
}

}  // namespace condasp
