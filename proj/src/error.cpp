#include "condasp/error.hpp"

#include <sstream>

namespace condasp {

std::string SourceSpan::to_string() const {
    std::ostringstream out;
    out << file << ':' << line_begin << ':' << column_begin;
    if (line_end != line_begin || column_end != column_begin) {
        out << '-' << line_end << ':' << column_end;
    }
    return out.str();
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NestedTypicality: return "NestedTypicality";
        case ErrorCode::ForbiddenInsideTyp: return "ForbiddenInsideTyp";
        case ErrorCode::TypNotAllowed: return "TypNotAllowed";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnsafeVariable: return "UnsafeVariable";
        case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
        case ErrorCode::MixedStrategyForSubject: return "MixedStrategyForSubject";
        case ErrorCode::TypInConsequent: return "TypInConsequent";
        case ErrorCode::EmptyUniverse: return "EmptyUniverse";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::MaxAnswerSetsExceeded: return "MaxAnswerSetsExceeded";
        case ErrorCode::RankedSubject: return "RankedSubject";
        case ErrorCode::NotRankedSubject: return "NotRankedSubject";
        case ErrorCode::RankedComplexCombination: return "RankedComplexCombination";
        case ErrorCode::UnsupportedShape: return "UnsupportedShape";
        case ErrorCode::InconsistentProgram: return "InconsistentProgram";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    }
    return "Unknown";
}

}  // namespace condasp
