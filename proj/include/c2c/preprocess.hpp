#pragma once

#include <string>
#include <vector>

#include "c2c/lexer.hpp"
#include "c2c/vocab.hpp"

namespace c2c {

// Rewrites every `for`/`if` to FOR<n>/IF<n>, where n-1 counts enclosing
// constructs of the same kind, and inserts a matching ENDFOR<n>/ENDIF<n>
// token at the close of the construct's block. Braced bodies close at their
// `}`; braceless bodies close after the body statement's `;` (or after a
// nested construct's END). All other tokens pass through unchanged.
//
// If the token stream is not block-balanced around an ordered identifier the
// input is returned unmodified and a diagnostic is appended.
std::vector<Token> order_identifiers(const std::vector<Token>& tokens,
                                     std::vector<std::string>* diagnostics = nullptr);

// Per-position index into the token-weight matrix; shares the source
// vocabulary's id space, with UNK for out-of-vocabulary tokens.
std::vector<int> token_indices(const std::vector<Token>& tokens, const Vocabulary& vocab);

}  // namespace c2c
