#include "mtlab/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace mtlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::NotBooleanAlgebra: return "NotBooleanAlgebra";
    case ErrorCode::KuratowskiViolation: return "KuratowskiViolation";
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotBooleanHom: return "NotBooleanHom";
    case ErrorCode::NotMTMorphism: return "NotMTMorphism";
    case ErrorCode::NotFrameHom: return "NotFrameHom";
    case ErrorCode::NotSober: return "NotSober";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::BijectionFailure: return "BijectionFailure";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
  }
  return "Unknown";
}

namespace {

std::size_t initial_guard() {
  if (const char* env = std::getenv("MTLAB_SIZE_GUARD")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (...) {
    }
  }
  return 20;
}

std::atomic<std::size_t>& guard_value() {
  static std::atomic<std::size_t> value{initial_guard()};
  return value;
}

}  // namespace

std::size_t size_guard() { return guard_value().load(); }
void set_size_guard(std::size_t bound) { guard_value().store(bound); }
bool within_size_guard(std::size_t n) { return n <= size_guard(); }

void require_size_guard(std::size_t n, std::string_view what) {
  if (!within_size_guard(n))
    throw Error(ErrorCode::SizeGuardExceeded,
                std::string(what) + " needs " + std::to_string(n) + " elements, guard is " +
                    std::to_string(size_guard()));
}

}  // namespace mtlab
