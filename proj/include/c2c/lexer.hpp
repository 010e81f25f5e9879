#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace c2c {

enum class TokenKind {
    kSymbol,             // operator / punctuation from the dictionary
    kKeyword,            // reserved word (other than for/if)
    kControlIdentifier,  // for, if, and their ordered forms FOR1, IF2, ENDFOR1, ...
    kVariable,           // everything else that looks like an identifier
    kLiteral,            // number, string, or char literal
};

struct Token {
    std::string text;
    TokenKind kind = TokenKind::kVariable;

    bool operator==(const Token&) const = default;
};

// Fixed operator/keyword tables. The dictionary is fixed at build time; its
// hash is stamped into checkpoints so tokenization is reproducible.
struct SymbolDictionary {
    std::set<std::string, std::less<>> symbols;
    std::set<std::string, std::less<>> keywords;

    bool is_symbol(std::string_view t) const { return symbols.count(t) > 0; }
    bool is_keyword(std::string_view t) const { return keywords.count(t) > 0; }

    static const SymbolDictionary& builtin();

    // Parses the shipped plain-text resource: one entry per line under
    // [symbols] / [keywords] section headers.
    static SymbolDictionary load(const std::string& path);

    // Canonical text used for the version stamp (sections sorted, one entry per line).
    std::string canonical_text() const;
    std::uint32_t version() const;
};

// True for "for"/"if" and the ordered forms FOR<n>, IF<n>, ENDFOR<n>, ENDIF<n>.
bool is_control_text(std::string_view text);

// Splits code into raw token texts: identifiers, number literals, quoted
// literals kept whole, and longest-match operators. Whitespace and comments
// are dropped. An unterminated string literal is closed at end of line and a
// diagnostic is appended.
std::vector<std::string> lex(std::string_view code, std::vector<std::string>* diagnostics = nullptr);

TokenKind classify_token(std::string_view text, const SymbolDictionary& dict);

// lex + classify in one pass.
std::vector<Token> lex_classified(std::string_view code, const SymbolDictionary& dict,
                                  std::vector<std::string>* diagnostics = nullptr);

}  // namespace c2c
