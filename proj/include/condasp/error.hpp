#ifndef CONDASP_ERROR_HPP
#define CONDASP_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace condasp {

/// Location of a token or construct in an input file. Lines and columns
/// are 1-based; `end` is inclusive.
struct SourceSpan {
    std::string file;
    int line_begin = 1;
    int column_begin = 1;
    int line_end = 1;
    int column_end = 1;

    std::string to_string() const;
};

enum class ErrorCode {
    // formula validation
    NestedTypicality,
    ForbiddenInsideTyp,
    TypNotAllowed,
    // parsing
    SyntaxError,
    UnsafeVariable,
    UnsupportedConstruct,
    MixedStrategyForSubject,
    TypInConsequent,
    // grounding
    EmptyUniverse,
    // solving
    TooLarge,
    MaxAnswerSetsExceeded,
    // preferential model
    RankedSubject,
    NotRankedSubject,
    RankedComplexCombination,
    UnsupportedShape,
    InconsistentProgram,
    Overflow,
    // instance generation
    GenerationExhausted,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Error raised while reading program, knowledge-base, or query text.
/// Always carries the span of the offending input.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::string message, SourceSpan span)
        : Error(code, std::move(message)), span_(std::move(span)) {}

    const SourceSpan& span() const { return span_; }

private:
    SourceSpan span_;
};

}  // namespace condasp

#endif
