#include "c2c/lexer.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "c2c/errors.hpp"
#include "c2c/rng.hpp"

namespace c2c {

namespace {

constexpr std::array kSymbols = {
    // multi-character operators (lexed longest-match)
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--", "==", "!=", "<=", ">=", "&&",
    "||", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
    // single characters
    "{", "}", "(", ")", "[", "]", ";", ",", ".", "=", "+", "-", "*", "/", "%", "!", "<", ">",
    "&", "|", "^", "~", "?", ":", "@", "$", "#", "\\", "`",
};

constexpr std::array kKeywords = {
    "abstract",   "assert",       "boolean",  "break",      "byte",      "case",     "catch",
    "char",       "class",        "const",    "continue",   "default",   "do",       "double",
    "else",       "enum",         "extends",  "final",      "finally",   "float",    "for",
    "goto",       "if",           "implements", "import",   "instanceof", "int",     "interface",
    "long",       "native",       "new",      "package",    "private",   "protected", "public",
    "return",     "short",        "static",   "strictfp",   "super",     "switch",   "synchronized",
    "this",       "throw",        "throws",   "transient",  "try",       "void",     "volatile",
    "while",      "true",         "false",    "null",
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

const SymbolDictionary& SymbolDictionary::builtin() {
    static const SymbolDictionary dict = [] {
        SymbolDictionary d;
        for (const char* s : kSymbols) d.symbols.insert(s);
        for (const char* k : kKeywords) d.keywords.insert(k);
        return d;
    }();
    return dict;
}

SymbolDictionary SymbolDictionary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open dictionary file: " + path);
    SymbolDictionary d;
    std::string line;
    enum class Section { kNone, kSymbols, kKeywords } section = Section::kNone;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line == "[symbols]") {
            section = Section::kSymbols;
        } else if (line == "[keywords]") {
            section = Section::kKeywords;
        } else if (section == Section::kSymbols) {
            d.symbols.insert(line);
        } else if (section == Section::kKeywords) {
            d.keywords.insert(line);
        } else {
            throw DataError("dictionary entry before section header: " + line);
        }
    }
    return d;
}

std::string SymbolDictionary::canonical_text() const {
    std::ostringstream out;
    out << "[symbols]\n";
    for (const auto& s : symbols) out << s << '\n';
    out << "[keywords]\n";
    for (const auto& k : keywords) out << k << '\n';
    return out.str();
}

std::uint32_t SymbolDictionary::version() const { return fnv1a32(canonical_text()); }

bool is_control_text(std::string_view text) {
    if (text == "for" || text == "if") return true;
    std::string_view rest;
    if (text.starts_with("ENDFOR"))
        rest = text.substr(6);
    else if (text.starts_with("ENDIF"))
        rest = text.substr(5);
    else if (text.starts_with("FOR"))
        rest = text.substr(3);
    else if (text.starts_with("IF"))
        rest = text.substr(2);
    else
        return false;
    if (rest.empty() || rest[0] == '0') return false;
    for (char c : rest)
        if (!is_digit(c)) return false;
    return true;
}

std::vector<std::string> lex(std::string_view code, std::vector<std::string>* diagnostics) {
    std::vector<std::string> out;
    const auto& dict = SymbolDictionary::builtin();
    std::size_t i = 0;
    std::size_t line = 1;
    const std::size_t n = code.size();

    auto diag = [&](const std::string& msg) {
        if (diagnostics) diagnostics->push_back(msg);
    };

    while (i < n) {
        const char c = code[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        // comments are never tokens
        if (c == '/' && i + 1 < n && code[i + 1] == '/') {
            while (i < n && code[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && code[i + 1] == '*') {
            i += 2;
            while (i + 1 < n && !(code[i] == '*' && code[i + 1] == '/')) {
                if (code[i] == '\n') ++line;
                ++i;
            }
            i = (i + 1 < n) ? i + 2 : n;
            continue;
        }
        if (c == '"' || c == '\'') {
            const char quote = c;
            std::size_t j = i + 1;
            bool closed = false;
            while (j < n && code[j] != '\n') {
                if (code[j] == '\\' && j + 1 < n) {
                    j += 2;
                    continue;
                }
                if (code[j] == quote) {
                    closed = true;
                    ++j;
                    break;
                }
                ++j;
            }
            if (!closed) diag("unterminated literal closed at end of line " + std::to_string(line));
            out.emplace_back(code.substr(i, j - i));
            i = j;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i + 1;
            while (j < n && is_ident_char(code[j])) ++j;
            out.emplace_back(code.substr(i, j - i));
            i = j;
            continue;
        }
        if (is_digit(c)) {
            std::size_t j = i + 1;
            while (j < n) {
                const char d = code[j];
                if (is_ident_char(d) || d == '.') {
                    ++j;
                } else if ((d == '+' || d == '-') && (code[j - 1] == 'e' || code[j - 1] == 'E') &&
                           j + 1 < n && is_digit(code[j + 1])) {
                    ++j;  // exponent sign, e.g. 1.5e-3
                } else {
                    break;
                }
            }
            out.emplace_back(code.substr(i, j - i));
            i = j;
            continue;
        }
        // operator, longest match first
        bool matched = false;
        for (std::size_t len = 4; len >= 1; --len) {
            if (i + len > n) continue;
            std::string_view cand = code.substr(i, len);
            if (dict.is_symbol(cand)) {
                out.emplace_back(cand);
                i += len;
                matched = true;
                break;
            }
        }
        if (!matched) {
            // stray byte: emit as a one-character token so lexing is total
            out.emplace_back(code.substr(i, 1));
            ++i;
        }
    }
    return out;
}

TokenKind classify_token(std::string_view text, const SymbolDictionary& dict) {
    if (is_control_text(text)) return TokenKind::kControlIdentifier;
    if (dict.is_symbol(text)) return TokenKind::kSymbol;
    if (dict.is_keyword(text)) return TokenKind::kKeyword;
    if (!text.empty() && (is_digit(text[0]) || text[0] == '"' || text[0] == '\''))
        return TokenKind::kLiteral;
    return TokenKind::kVariable;
}

std::vector<Token> lex_classified(std::string_view code, const SymbolDictionary& dict,
                                  std::vector<std::string>* diagnostics) {
    std::vector<Token> out;
    for (auto& text : lex(code, diagnostics)) {
        TokenKind kind = classify_token(text, dict);
        out.push_back(Token{std::move(text), kind});
    }
    return out;
}

}  // namespace c2c
