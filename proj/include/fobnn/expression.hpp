#pragma once

#include "fobnn/network.hpp"
#include "fobnn/term.hpp"

#include <functional>
#include <string_view>

namespace fobnn {

/// Maps an identifier (with `primed` set for `X'`) to a leaf term. Throws
/// InputError for unknown names; the parser fills in the position.
using IdentifierResolver = std::function<Term(std::string_view name, bool primed)>;

/// Infix arithmetic over + - * / with the usual precedence, left
/// associativity, unary minus as `0 - t`, and parentheses.
///
/// `line` and `column_offset` locate `text` inside a larger document for
/// error messages.
Term parse_expression(std::string_view text, const IdentifierResolver& resolve, int line = 1,
                      int column_offset = 0);

}  // namespace fobnn
