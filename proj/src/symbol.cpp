#include "condasp/symbol.hpp"

#include <mutex>
#include <set>

namespace condasp {

namespace {

// The pool hands out stable addresses: std::set never moves its elements.
struct Pool {
    std::mutex mutex;
    std::set<std::string, std::less<>> strings;

    const std::string* intern(std::string_view text) {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = strings.find(text);
        if (it == strings.end()) it = strings.emplace(text).first;
        return &*it;
    }
};

Pool& pool() {
    static Pool p;
    return p;
}

}  // namespace

Symbol Symbol::intern(std::string_view text) { return Symbol(pool().intern(text)); }

const std::string* Symbol::empty_() {
    static const std::string* e = pool().intern("");
    return e;
}

std::string Constant::to_string() const {
    if (is_integer()) return std::to_string(integer_value());
    return symbol_value().str();
}

bool operator<(const Constant& a, const Constant& b) {
    if (a.is_integer() != b.is_integer()) return a.is_integer();
    if (a.is_integer()) return a.integer_value() < b.integer_value();
    return a.symbol_value() < b.symbol_value();
}

std::string Term::to_string() const {
    if (is_variable()) return variable_name().str();
    return constant_value().to_string();
}

bool operator<(const Term& a, const Term& b) {
    if (a.is_var_ != b.is_var_) return !a.is_var_;  // constants order before variables
    if (a.is_var_) return std::get<Symbol>(a.value_) < std::get<Symbol>(b.value_);
    return std::get<Constant>(a.value_) < std::get<Constant>(b.value_);
}

}  // namespace condasp
