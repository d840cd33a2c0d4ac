#pragma once

#include <stdexcept>
#include <string>

namespace hoheat {

/// Failure categories surfaced by evaluators and samplers.
enum class Errc {
    invalid_order,   // equation order m < 2 or incompatible with a method
    invalid_time,    // t <= 0
    invalid_argument,
    pole,            // gamma function pole
    range,           // series cannot certify the requested tolerance
    method_range,    // argument outside the safe range of the chosen method
    oracle_failure,  // oracle-grade extrapolation did not converge
    numeric,         // stencil/quadrature breakdown
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_order: return "invalid-order";
        case Errc::invalid_time: return "invalid-time";
        case Errc::invalid_argument: return "invalid-argument";
        case Errc::pole: return "pole-error";
        case Errc::range: return "range-error";
        case Errc::method_range: return "method-range-error";
        case Errc::oracle_failure: return "oracle-failure";
        case Errc::numeric: return "numeric-error";
    }
    return "unknown-error";
}

}  // namespace hoheat
