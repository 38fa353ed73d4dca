#pragma once

#include "fwforge/ncalg/bracket_expr.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fwforge::ncalg {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := RATIONAL | 'm^' INT | 'm' | 'beta' | 'E' | 'O'
//           | 'comm(' expr ',' expr ')' | 'acomm(' expr ',' expr ')'
//           | 'pow(' expr ',' NAT ')' | 'epsfun(' NAME ')' | '(' expr ')'
// A term that opens with a rational literal may omit '*' between factors,
// which is how canonical word sums ("-1/8 m^-3 beta O E") are written.
BracketExpr parseExpr(std::string_view text);

std::string formatBracket(const BracketExpr& t);

} // namespace fwforge::ncalg
