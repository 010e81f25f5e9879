#include "c2c/preprocess.hpp"

#include <string>

namespace c2c {

namespace {

struct OpenEntry {
    enum class Type { kPlainBrace, kFor, kIf };
    enum class Phase {
        kAwaitHeader,  // construct token seen, '(' not yet
        kHeader,       // inside the (...) header
        kAwaitBody,    // header closed, body not started
        kBodyBrace,    // braced body, closes at matching '}'
        kBodyStmt,     // single-statement body, closes at ';' or nested END
    };
    Type type = Type::kPlainBrace;
    Phase phase = Phase::kAwaitBody;
    int label = 0;
    std::size_t header_open_depth = 0;  // paren depth when the header '(' opened
    std::size_t stmt_paren_depth = 0;   // paren depth when the statement body began
    std::size_t stmt_stack_size = 0;    // stack size when the statement body began
};

using Type = OpenEntry::Type;
using Phase = OpenEntry::Phase;

bool is_ctrl(const OpenEntry& e) { return e.type != Type::kPlainBrace; }

Token end_token(const OpenEntry& e) {
    std::string text = (e.type == Type::kFor ? "ENDFOR" : "ENDIF") + std::to_string(e.label);
    return Token{std::move(text), TokenKind::kControlIdentifier};
}

}  // namespace

std::vector<Token> order_identifiers(const std::vector<Token>& tokens,
                                     std::vector<std::string>* diagnostics) {
    std::vector<Token> out;
    out.reserve(tokens.size() + 8);
    std::vector<OpenEntry> stack;
    std::size_t paren_depth = 0;
    bool has_ctrl = false;
    bool malformed = false;

    auto close_top = [&] {  // pop a ctrl entry, emit END, close stmt-bodied parents
        out.push_back(end_token(stack.back()));
        stack.pop_back();
        while (!stack.empty() && is_ctrl(stack.back()) &&
               stack.back().phase == Phase::kBodyStmt &&
               stack.back().stmt_stack_size == stack.size()) {
            out.push_back(end_token(stack.back()));
            stack.pop_back();
        }
    };

    for (const Token& tok : tokens) {
        const std::string& t = tok.text;

        // any non-'{' token arriving while a construct awaits its body starts
        // a single-statement body
        if (!stack.empty() && is_ctrl(stack.back()) && stack.back().phase == Phase::kAwaitBody &&
            t != "{" && t != ";") {
            stack.back().phase = Phase::kBodyStmt;
            stack.back().stmt_paren_depth = paren_depth;
            stack.back().stmt_stack_size = stack.size();
        }

        if (t == "for" || t == "if") {
            has_ctrl = true;
            const Type type = (t == "for") ? Type::kFor : Type::kIf;
            int label = 1;
            for (const auto& e : stack)
                if (e.type == type) ++label;
            out.push_back(Token{(type == Type::kFor ? "FOR" : "IF") + std::to_string(label),
                                TokenKind::kControlIdentifier});
            OpenEntry e;
            e.type = type;
            e.phase = Phase::kAwaitHeader;
            e.label = label;
            stack.push_back(e);
            continue;
        }

        if (t == "(") {
            ++paren_depth;
            if (!stack.empty() && is_ctrl(stack.back()) &&
                stack.back().phase == Phase::kAwaitHeader) {
                stack.back().phase = Phase::kHeader;
                stack.back().header_open_depth = paren_depth;
            }
            out.push_back(tok);
            continue;
        }

        if (t == ")") {
            out.push_back(tok);
            if (paren_depth == 0) {
                malformed = true;
                break;
            }
            if (!stack.empty() && is_ctrl(stack.back()) && stack.back().phase == Phase::kHeader &&
                stack.back().header_open_depth == paren_depth) {
                stack.back().phase = Phase::kAwaitBody;
            }
            --paren_depth;
            continue;
        }

        if (t == "{") {
            out.push_back(tok);
            if (!stack.empty() && is_ctrl(stack.back()) &&
                stack.back().phase == Phase::kAwaitBody) {
                stack.back().phase = Phase::kBodyBrace;
            } else {
                stack.push_back(OpenEntry{});  // plain block
            }
            continue;
        }

        if (t == "}") {
            out.push_back(tok);
            if (!stack.empty() && stack.back().type == Type::kPlainBrace) {
                stack.pop_back();
            } else if (!stack.empty() && is_ctrl(stack.back()) &&
                       stack.back().phase == Phase::kBodyBrace) {
                close_top();
            } else {
                malformed = true;
                break;
            }
            continue;
        }

        if (t == ";") {
            out.push_back(tok);
            while (!stack.empty() && is_ctrl(stack.back())) {
                const OpenEntry& top = stack.back();
                if (top.phase == Phase::kAwaitBody) {
                    // `if (a) ;` — the semicolon is the whole body
                    out.push_back(end_token(top));
                    stack.pop_back();
                } else if (top.phase == Phase::kBodyStmt && top.stmt_paren_depth == paren_depth &&
                           top.stmt_stack_size == stack.size()) {
                    out.push_back(end_token(top));
                    stack.pop_back();
                } else {
                    break;
                }
            }
            continue;
        }

        out.push_back(tok);
    }

    if (!stack.empty() || paren_depth != 0) malformed = true;

    if (malformed) {
        if (has_ctrl) {
            if (diagnostics)
                diagnostics->push_back("unbalanced block around for/if; identifier ordering skipped");
            return tokens;
        }
        return tokens;  // nothing to order anyway
    }
    return out;
}

std::vector<int> token_indices(const std::vector<Token>& tokens, const Vocabulary& vocab) {
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const Token& t : tokens) out.push_back(vocab.id(t.text));
    return out;
}

}  // namespace c2c
