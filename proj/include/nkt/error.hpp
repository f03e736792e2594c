#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nkt {

enum class errc {
  zero_denominator,
  unbound_indeterminate,
  division_by_zero,
  nonlinear_in_variable,
  invalid_model,
  unevaluated_coefficient,
  sasakian_input,
  zero_deformation,
  non_real_radical,
  parse_error,
  invalid_argument,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::unbound_indeterminate: return "UnboundIndeterminate";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::nonlinear_in_variable: return "NonlinearInVariable";
    case errc::invalid_model: return "InvalidModel";
    case errc::unevaluated_coefficient: return "UnevaluatedCoefficient";
    case errc::sasakian_input: return "SasakianInput";
    case errc::zero_deformation: return "ZeroDeformation";
    case errc::non_real_radical: return "NonRealRadical";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace nkt
