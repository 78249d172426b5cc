#include "regsyn/error.hpp"

namespace regsyn {

const char* code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::DuplicateTransition: return "DuplicateTransition";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::InvalidBound: return "InvalidBound";
    case ErrorCode::EventNotInType: return "EventNotInType";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidAtom: return "InvalidAtom";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::EventSetMismatch: return "EventSetMismatch";
    case ErrorCode::ExplosionGuard: return "ExplosionGuard";
    case ErrorCode::StateClash: return "StateClash";
    case ErrorCode::NameClash: return "NameClash";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::ClauseArity: return "ClauseArity";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::NotAModel: return "NotAModel";
    case ErrorCode::UnknownCatalog: return "UnknownCatalog";
    case ErrorCode::Io: return "Io";
  }
  return "Error";
}

}  // namespace regsyn
