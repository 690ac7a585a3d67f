#ifndef JMULT_PARSER_HPP
#define JMULT_PARSER_HPP

#include <stdexcept>
#include <string>

#include "jmult/polynomial.hpp"

namespace jmult {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Grammar:
///   expr   := ['-'|'+'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := uint | var | '(' expr ')'
/// Variable names match [A-Za-z][A-Za-z0-9_]*; whitespace is insignificant.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

} // namespace jmult

#endif
