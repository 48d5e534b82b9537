#ifndef TB_ERRORS_HPP
#define TB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tb {

enum class Err {
  UnsupportedOrder,
  InvalidLambda,
  NotIncident,
  InvalidPresentation,
  BudgetExceeded,
  BoundaryVertex,
  OutOfBall,
  WindowTooSmall,
  NotPeriodic,
  SearchFailed,
  StripTooShort,
  NotStabilizing,
  TooShallow,
  Unsupported,
  NoMatch,
  PrefixTooShallow,
  DepthTooSmall,
  OracleMismatch,
  BadInput,
};

inline const char *err_name(Err e) {
  switch (e) {
  case Err::UnsupportedOrder: return "UnsupportedOrder";
  case Err::InvalidLambda: return "InvalidLambda";
  case Err::NotIncident: return "NotIncident";
  case Err::InvalidPresentation: return "InvalidPresentation";
  case Err::BudgetExceeded: return "BudgetExceeded";
  case Err::BoundaryVertex: return "BoundaryVertex";
  case Err::OutOfBall: return "OutOfBall";
  case Err::WindowTooSmall: return "WindowTooSmall";
  case Err::NotPeriodic: return "NotPeriodic";
  case Err::SearchFailed: return "SearchFailed";
  case Err::StripTooShort: return "StripTooShort";
  case Err::NotStabilizing: return "NotStabilizing";
  case Err::TooShallow: return "TooShallow";
  case Err::Unsupported: return "Unsupported";
  case Err::NoMatch: return "NoMatch";
  case Err::PrefixTooShallow: return "PrefixTooShallow";
  case Err::DepthTooSmall: return "DepthTooSmall";
  case Err::OracleMismatch: return "OracleMismatch";
  case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string &msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string &msg) { throw Error(kind, msg); }

} // namespace tb

#endif
