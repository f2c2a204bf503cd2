#include "gpcert/error.hpp"

namespace gpcert {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::OrderOverflow: return "OrderOverflow";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OracleCapExceeded: return "OracleCapExceeded";
    case ErrorKind::UndefinedImage: return "UndefinedImage";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SeparatorFailed: return "SeparatorFailed";
    case ErrorKind::TrivialElement: return "TrivialElement";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ClassObstruction: return "ClassObstruction";
    case ErrorKind::ChartIncomplete: return "ChartIncomplete";
    case ErrorKind::AlmostHomViolated: return "AlmostHomViolated";
    case ErrorKind::CoverageMissing: return "CoverageMissing";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace gpcert
