#pragma once

#include <stdexcept>
#include <string>

namespace bsdv {

/// Failure categories surfaced by the library.  Every throw site uses one of
/// these codes so callers (and the CLI) can map failures deterministically.
enum class ErrorCode {
    shape_mismatch,         // operand dimensions/symmetry class violated
    out_of_disc,            // polydisc coordinate with |zeta| >= 1
    singular_denominator,   // Moebius denominator numerically singular
    not_orthogonal,         // isotropy rotation matrix fails O(n) test
    non_scalar_result,      // octonion scalar product left a non-e0 residue
    stencil_out_of_domain,  // FD stencil escaped the domain after max shrinks
    step_underflow,         // FD step fell below the representable floor
    not_hermitian,          // eigensolver input fails the Hermitian test
    outside_domain,         // evaluation point not inside the domain
    section_escaped_domain, // bundle section image left the fiber domain
    unsupported_domain,     // check not defined for the requested kind
    config_error            // malformed token / flag combination
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::shape_mismatch: return "shape_mismatch";
    case ErrorCode::out_of_disc: return "out_of_disc";
    case ErrorCode::singular_denominator: return "singular_denominator";
    case ErrorCode::not_orthogonal: return "not_orthogonal";
    case ErrorCode::non_scalar_result: return "non_scalar_result";
    case ErrorCode::stencil_out_of_domain: return "stencil_out_of_domain";
    case ErrorCode::step_underflow: return "step_underflow";
    case ErrorCode::not_hermitian: return "not_hermitian";
    case ErrorCode::outside_domain: return "outside_domain";
    case ErrorCode::section_escaped_domain: return "section_escaped_domain";
    case ErrorCode::unsupported_domain: return "unsupported_domain";
    case ErrorCode::config_error: return "config_error";
    }
    return "unknown";
}

} // namespace bsdv
