#ifndef M0NLAB_EXPR_HPP
#define M0NLAB_EXPR_HPP

#include <string>

#include "m0nlab/chow.hpp"

namespace m0nlab {

// Tiny expression grammar over the Chow ring:
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := atom ('^' uint)?
//   atom    := 'D{' labels '}' | 'psi(' label ')' | int | '(' expr ')' | '-' atom
// Labels are decimal marked-point labels 0..n, comma-separated.
// Throws ExprError on malformed input.
struct ExprError : std::invalid_argument {
    explicit ExprError(const std::string& what) : std::invalid_argument(what) {}
};

ChowClass parse_chow_expr(const std::string& text, int n);

} // namespace m0nlab

#endif
