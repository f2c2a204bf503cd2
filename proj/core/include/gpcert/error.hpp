#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpcert {

// Every recoverable failure in the toolkit is reported as an Error carrying
// one of these categories. The CLI maps categories onto exit codes.
enum class ErrorKind {
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotNormal,
  OrderOverflow,
  UnknownVertex,
  MoveNotApplicable,
  IndexOutOfRange,
  OracleCapExceeded,
  UndefinedImage,
  PreconditionViolated,
  SeparatorFailed,
  TrivialElement,
  BudgetExceeded,
  ClassObstruction,
  ChartIncomplete,
  AlmostHomViolated,
  CoverageMissing,
  SchemaError,
  UnknownCommand,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gpcert
