#ifndef CONDASP_SYMBOL_HPP
#define CONDASP_SYMBOL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace condasp {

/// An interned identifier. Two symbols with the same spelling compare equal
/// by pointer; ordering is lexicographic on the spelling. The backing pool
/// is process-wide and append-only, so symbols stay valid for the lifetime
/// of the process and are safe to share across threads.
class Symbol {
public:
    Symbol() : str_(empty_()) {}
    static Symbol intern(std::string_view text);

    const std::string& str() const { return *str_; }

    friend bool operator==(Symbol a, Symbol b) { return a.str_ == b.str_; }
    friend bool operator!=(Symbol a, Symbol b) { return a.str_ != b.str_; }
    friend bool operator<(Symbol a, Symbol b) {
        return a.str_ != b.str_ && *a.str_ < *b.str_;
    }

private:
    explicit Symbol(const std::string* s) : str_(s) {}
    static const std::string* empty_();

    const std::string* str_;
};

/// A ground term: a lowercase symbolic constant or an integer.
class Constant {
public:
    Constant() : value_(Symbol{}) {}
    explicit Constant(Symbol s) : value_(s) {}
    explicit Constant(std::int64_t n) : value_(n) {}

    static Constant symbol(std::string_view name) { return Constant(Symbol::intern(name)); }
    static Constant integer(std::int64_t n) { return Constant(n); }

    bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
    std::int64_t integer_value() const { return std::get<std::int64_t>(value_); }
    Symbol symbol_value() const { return std::get<Symbol>(value_); }

    std::string to_string() const;

    friend bool operator==(const Constant& a, const Constant& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Constant& a, const Constant& b) { return !(a == b); }
    // Integers order before symbols; within a kind, natural order.
    friend bool operator<(const Constant& a, const Constant& b);

private:
    std::variant<Symbol, std::int64_t> value_;
};

/// A term as written in a rule: either a constant or a variable name.
/// Variables only occur in non-ground rules.
class Term {
public:
    explicit Term(Constant c) : value_(c) {}
    static Term constant(Constant c) { return Term(c); }
    static Term variable(std::string_view name) { return Term(Symbol::intern(name), VarTag{}); }

    bool is_variable() const { return is_var_; }
    Symbol variable_name() const { return std::get<Symbol>(value_); }
    const Constant& constant_value() const { return std::get<Constant>(value_); }

    std::string to_string() const;

    friend bool operator==(const Term& a, const Term& b) {
        return a.is_var_ == b.is_var_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b);

private:
    struct VarTag {};
    Term(Symbol name, VarTag) : value_(name), is_var_(true) {}

    std::variant<Constant, Symbol> value_;
    bool is_var_ = false;
};

}  // namespace condasp

#endif
