#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mtlab {

enum class ErrorCode {
  DuplicateLabel,
  UnknownLabel,
  NotAntisymmetric,
  NotALattice,
  NotDistributive,
  NotBooleanAlgebra,
  KuratowskiViolation,
  NotATopology,
  SizeGuardExceeded,
  ParseError,
  NotBooleanHom,
  NotMTMorphism,
  NotFrameHom,
  NotSober,
  HypothesisNotMet,
  BijectionFailure,
  ShapeMismatch,
  OracleDisagreement,
};

std::string_view to_string(ErrorCode code);

/// Every failure carries a code and the labels of the offending elements.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const { return code_; }
  const std::vector<std::string>& witness() const { return witness_; }

  /// Validation errors map to CLI exit code 2; the rest are internal.
  bool is_input_error() const {
    switch (code_) {
      case ErrorCode::BijectionFailure:
      case ErrorCode::OracleDisagreement:
        return false;
      default:
        return true;
    }
  }

 private:
  ErrorCode code_;
  std::vector<std::string> witness_;
};

/// Upper bound on universes that brute-force subset oracles will enumerate.
/// Defaults to 20; MTLAB_SIZE_GUARD overrides it.
std::size_t size_guard();
void set_size_guard(std::size_t bound);
bool within_size_guard(std::size_t n);
/// Throws SizeGuardExceeded when n is above the guard.
void require_size_guard(std::size_t n, std::string_view what);

}  // namespace mtlab
