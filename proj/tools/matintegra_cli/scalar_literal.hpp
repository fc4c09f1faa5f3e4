#pragma once

// Text form of exact scalars:
//
//   literal := [sign] term [(+|-) term]
//   term    := number | [number] "i"
//   number  := digits ["/" digits] | digits "." [digits] [exponent] | digits exponent
//
// Decimals are converted exactly ("0.1" is 1/10). format_scalar produces the
// canonical form, which parse_scalar maps back to the identical value.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "matintegra/exact_complex.hpp"

namespace matintegra::cli {

class ScalarParseError : public std::invalid_argument {
public:
    ScalarParseError(const std::string& message, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

ExactComplex parse_scalar(std::string_view text);

std::string format_scalar(const ExactComplex& z);

}  // namespace matintegra::cli
