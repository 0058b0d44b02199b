#include "poldif/errors.hpp"

#include <utility>

namespace poldif {

ZeroOperator::ZeroOperator(bool rhs_is_zero)
    : Error(rhs_is_zero ? "operator p is zero: every polynomial solves p(D)f = 0"
                        : "operator p is zero: p(D)f = q has no solution for q != 0"),
      rhs_is_zero_(rhs_is_zero) {}

ParseError::ParseError(const std::string& message, std::size_t position,
                       std::vector<std::string> expected)
    : Error(message), position_(position), expected_(std::move(expected)) {}

}  // namespace poldif
