#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "c2c/lexer.hpp"
#include "c2c/preprocess.hpp"
#include "c2c/vocab.hpp"

using namespace c2c;

namespace {

std::vector<std::string> texts(const std::vector<Token>& tokens) {
    std::vector<std::string> out;
    for (const Token& t : tokens) out.push_back(t.text);
    return out;
}

std::vector<Token> lex_ordered(std::string_view code, std::vector<std::string>* diags = nullptr) {
    return order_identifiers(lex_classified(code, SymbolDictionary::builtin(), diags), diags);
}

}  // namespace

TEST_CASE("lex splits identifiers, numbers, operators") {
    CHECK(lex("int i=0;") == std::vector<std::string>{"int", "i", "=", "0", ";"});
    CHECK(lex("i<=n && flag") == std::vector<std::string>{"i", "<=", "n", "&&", "flag"});
    CHECK(lex("\"a b\"") == std::vector<std::string>{"\"a b\""});
    CHECK(lex("x>>>=1") == std::vector<std::string>{"x", ">>>=", "1"});
    CHECK(lex("a/*no*/b // end") == std::vector<std::string>{"a", "b"});
    CHECK(lex("1.5e-3f + .x") == std::vector<std::string>{"1.5e-3f", "+", ".", "x"});
}

TEST_CASE("unterminated string closes at line end with a diagnostic") {
    std::vector<std::string> diags;
    auto toks = lex("s = \"open\nnext", &diags);
    CHECK(toks == std::vector<std::string>{"s", "=", "\"open", "next"});
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("unterminated") != std::string::npos);
}

TEST_CASE("lexing space-joined token texts reproduces the token list") {
    for (const char* code : {"int i = 0; while(i<n){ swap(a[i], a[i+1]); i++; }",
                             "for (int j=0;j<9;j++) total += data[j]*2;",
                             "if (x >= 10 && y != 0) { z = \"str lit\"; }"}) {
        auto first = lex(code);
        std::string joined;
        for (const auto& t : first) {
            joined += t;
            joined.push_back(' ');
        }
        CHECK(lex(joined) == first);
    }
}

TEST_CASE("classify_token partitions all lexer outputs") {
    const auto& dict = SymbolDictionary::builtin();
    CHECK(classify_token("{", dict) == TokenKind::kSymbol);
    CHECK(classify_token("myCounter", dict) == TokenKind::kVariable);
    CHECK(classify_token("int", dict) == TokenKind::kKeyword);
    CHECK(classify_token("for", dict) == TokenKind::kControlIdentifier);
    CHECK(classify_token("if", dict) == TokenKind::kControlIdentifier);
    CHECK(classify_token("FOR2", dict) == TokenKind::kControlIdentifier);
    CHECK(classify_token("ENDIF1", dict) == TokenKind::kControlIdentifier);
    CHECK(classify_token("FOR0", dict) == TokenKind::kVariable);   // labels start at 1
    CHECK(classify_token("FORx", dict) == TokenKind::kVariable);
    CHECK(classify_token("42", dict) == TokenKind::kLiteral);
    CHECK(classify_token("\"s\"", dict) == TokenKind::kLiteral);
    CHECK(classify_token("'c'", dict) == TokenKind::kLiteral);
    CHECK(classify_token("while", dict) == TokenKind::kKeyword);
}

TEST_CASE("symbol and keyword sets are disjoint") {
    const auto& dict = SymbolDictionary::builtin();
    for (const auto& s : dict.symbols) CHECK(!dict.is_keyword(s));
}

TEST_CASE("identifier ordering: bubble sort figure") {
    const char* code = R"(
for (i = 0; i < len - 1; i++) {
  for (j = 0; j < len - 1 - i; j++) {
    if (arr[j] > arr[j + 1]) {
      temp = arr[j];
      arr[j] = arr[j + 1];
      arr[j + 1] = temp;
    }
  }
}
)";
    auto toks = texts(lex_ordered(code));

    std::vector<std::string> control;
    for (const auto& t : toks)
        if (t.rfind("FOR", 0) == 0 || t.rfind("IF", 0) == 0 || t.rfind("END", 0) == 0)
            control.push_back(t);
    CHECK(control == std::vector<std::string>{"FOR1", "FOR2", "IF1", "ENDIF1", "ENDFOR2",
                                              "ENDFOR1"});
    // END markers sit directly after their closing brace
    for (std::size_t i = 0; i < toks.size(); ++i)
        if (toks[i].rfind("END", 0) == 0) CHECK(toks[i - 1] == "}");
}

TEST_CASE("ordering is the identity on control-free code") {
    auto tokens = lex_classified("while (a < b) { a += 1; }", SymbolDictionary::builtin());
    CHECK(order_identifiers(tokens) == tokens);
}

TEST_CASE("sibling loops share the same depth label") {
    auto toks = texts(lex_ordered("for (;;) { a(); } for (;;) { b(); }"));
    std::size_t for1 = 0, endfor1 = 0;
    for (const auto& t : toks) {
        if (t == "FOR1") ++for1;
        if (t == "ENDFOR1") ++endfor1;
        CHECK(t != "FOR2");
    }
    CHECK(for1 == 2);
    CHECK(endfor1 == 2);
}

TEST_CASE("braceless bodies close after the statement semicolon") {
    CHECK(texts(lex_ordered("if (a) x = 1;")) ==
          std::vector<std::string>{"IF1", "(", "a", ")", "x", "=", "1", ";", "ENDIF1"});
    CHECK(texts(lex_ordered("if (a) if (b) x();")) ==
          std::vector<std::string>{"IF1", "(", "a", ")", "IF2", "(", "b", ")", "x", "(", ")",
                                   ";", "ENDIF2", "ENDIF1"});
    CHECK(texts(lex_ordered("for (i=0;i<n;i++) sum += i;")) ==
          std::vector<std::string>{"FOR1", "(", "i", "=", "0", ";", "i", "<", "n", ";", "i",
                                   "++", ")", "sum", "+=", "i", ";", "ENDFOR1"});
}

TEST_CASE("unbalanced block passes through unmodified with a diagnostic") {
    std::vector<std::string> diags;
    auto tokens = lex_classified("if (a) {", SymbolDictionary::builtin());
    CHECK(order_identifiers(tokens, &diags) == tokens);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("unbalanced") != std::string::npos);
}

TEST_CASE("ordering preserves non-control tokens and adds one END per construct") {
    const char* code = "void f() { for (;;) { if (x) { y(); } } }";
    auto before = lex_classified(code, SymbolDictionary::builtin());
    auto after = order_identifiers(before);
    CHECK(after.size() == before.size() + 2);  // one END each for FOR1 and IF1

    std::vector<std::string> non_control_before, non_control_after;
    for (const auto& t : before)
        if (t.kind != TokenKind::kControlIdentifier) non_control_before.push_back(t.text);
    for (const auto& t : after)
        if (t.kind != TokenKind::kControlIdentifier) non_control_after.push_back(t.text);
    CHECK(non_control_before == non_control_after);
}

TEST_CASE("labels depend only on nesting ancestry") {
    auto deep = texts(lex_ordered("for (;;) { pre(); if (c) { x(); } post(); }"));
    auto shallow = texts(lex_ordered("for (;;) { if (c) { x(); } }"));
    auto pick = [](const std::vector<std::string>& v) {
        std::vector<std::string> out;
        for (const auto& t : v)
            if (t[0] == 'F' || t[0] == 'I' || t[0] == 'E') out.push_back(t);
        return out;
    };
    CHECK(pick(deep) == pick(shallow));
}

TEST_CASE("token_indices share the source vocabulary id space") {
    Vocabulary v = Vocabulary::build({{"for", "x", "x", "y"}}, 50);
    auto tokens = lex_classified("x y z", SymbolDictionary::builtin());
    auto idx = token_indices(tokens, v);
    REQUIRE(idx.size() == 3);
    CHECK(idx[0] == v.id("x"));
    CHECK(idx[1] == v.id("y"));
    CHECK(idx[2] == Vocabulary::kUnk);  // OOV
}

TEST_CASE("dictionary resource round-trips through the text format") {
    const auto& builtin = SymbolDictionary::builtin();
    CHECK(builtin.version() != 0);
    CHECK(builtin.canonical_text().find("[symbols]") == 0);
}
