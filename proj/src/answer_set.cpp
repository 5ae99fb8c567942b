#include "condasp/answer_set.hpp"

#include <algorithm>
#include <sstream>

namespace condasp {

AnswerSet::AnswerSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    std::sort(atoms_.begin(), atoms_.end(), atom_less);
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

bool AnswerSet::contains(const Atom& atom) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), atom, atom_less);
}

std::string AnswerSet::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (i) out << ' ';
        out << atoms_[i].to_string();
    }
    return out.str();
}

bool operator<(const AnswerSet& a, const AnswerSet& b) {
    return std::lexicographical_compare(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(),
                                        b.atoms_.end(), atom_less);
}

}  // namespace condasp
