#ifndef CONDASP_ANSWER_SET_HPP
#define CONDASP_ANSWER_SET_HPP

#include <string>
#include <vector>

#include "condasp/atom.hpp"

namespace condasp {

/// A set of ground atoms, kept sorted in canonical atom order. An answer
/// set is also read as a propositional interpretation: the atoms it
/// contains are true, every other atom is false. Immutable once built.
class AnswerSet {
public:
    AnswerSet() = default;
    explicit AnswerSet(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool contains(const Atom& atom) const;
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }

    /// Space-separated sorted atom list; the line format used by the CLI.
    std::string to_string() const;

    friend bool operator==(const AnswerSet& a, const AnswerSet& b) {
        return a.atoms_ == b.atoms_;
    }
    friend bool operator!=(const AnswerSet& a, const AnswerSet& b) { return !(a == b); }
    /// Canonical order between answer sets: lexicographic on the sorted
    /// atom sequences.
    friend bool operator<(const AnswerSet& a, const AnswerSet& b);

private:
    std::vector<Atom> atoms_;
};

}  // namespace condasp

#endif
