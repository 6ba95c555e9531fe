#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orered {

enum class ErrorKind {
  ZeroDenominator,
  DivisionByZero,
  InvalidContext,
  ContextMismatch,
  DivisionByZeroOperator,
  BothZero,
  ZeroArgument,
  ZeroTarget,
  NotSimpleContext,
  SearchExhausted,
  TooManyTerms,
  ZeroProduct,
  InvalidWitness,
  NotUnimodularPair,
  NoTwoTermWitness,
  BothProductsZero,
  RingTooLarge,
  DimensionMismatch,
  NotFull,
  NotUnimodular,
  WitnessTooLong,
  SyntaxError,
  DivByOperator,
  FormatError,
  UnsupportedContext,
};

constexpr std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DivisionByZeroOperator: return "DivisionByZeroOperator";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroTarget: return "ZeroTarget";
    case ErrorKind::NotSimpleContext: return "NotSimpleContext";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::TooManyTerms: return "TooManyTerms";
    case ErrorKind::ZeroProduct: return "ZeroProduct";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::NotUnimodularPair: return "NotUnimodularPair";
    case ErrorKind::NoTwoTermWitness: return "NoTwoTermWitness";
    case ErrorKind::BothProductsZero: return "BothProductsZero";
    case ErrorKind::RingTooLarge: return "RingTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotFull: return "NotFull";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::WitnessTooLong: return "WitnessTooLong";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DivByOperator: return "DivByOperator";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::UnsupportedContext: return "UnsupportedContext";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace orered
