#include "headliner/error.hpp"

namespace headliner {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return "Io";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::EmptyLexicon: return "EmptyLexicon";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::NoVowel: return "NoVowel";
    case ErrorCode::NoRelations: return "NoRelations";
    case ErrorCode::NoTarget: return "NoTarget";
    case ErrorCode::Ineligible: return "Ineligible";
    case ErrorCode::NoCandidates: return "NoCandidates";
    case ErrorCode::AllOOV: return "AllOOV";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::JoinFailure: return "JoinFailure";
    case ErrorCode::GroupSizeMismatch: return "GroupSizeMismatch";
    case ErrorCode::MissingParse: return "MissingParse";
    case ErrorCode::SpanAlignmentFailure: return "SpanAlignmentFailure";
    case ErrorCode::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

}  // namespace headliner
