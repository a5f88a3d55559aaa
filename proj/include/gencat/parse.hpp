#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gencat/logic.hpp"

namespace gencat {

/// Syntax error at a byte offset of the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Formulas: identifiers are propositional variables, T and F the constants,
/// `x=y` an equation; `/\` binds tighter than `\/`, both associate to the
/// right, parentheses group.
Formula parse_formula(std::string_view text);

/// Terms: id(A), pi1(A,B), pi2(A,B), bang(A), pair(f,g), comp(g,f),
/// in1(A,B), in2(A,B), cobang(A), copair(f,g), refl(x), sym(x,y),
/// trans(x,y,z), meet(f,g), join(f,g).
ArrowTerm parse_term(std::string_view text);

}  // namespace gencat
