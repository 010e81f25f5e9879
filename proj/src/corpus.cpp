#include "c2c/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "c2c/lexer.hpp"

namespace c2c {

namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string normalize_ws(std::string_view s) {
    std::string out;
    bool in_space = true;  // also trims leading space
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out.push_back(' ');
            in_space = false;
            out.push_back(c);
        }
    }
    return out;
}

// Strips per-line leading whitespace and decorative asterisks of a block
// comment body, then normalizes whitespace.
std::string clean_block_body(std::string_view body) {
    std::string joined;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t eol = body.find('\n', pos);
        std::string_view line = body.substr(pos, eol == std::string_view::npos ? body.size() - pos
                                                                               : eol - pos);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        while (i < line.size() && line[i] == '*') ++i;
        joined.append(line.substr(i));
        joined.push_back(' ');
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return normalize_ws(joined);
}

}  // namespace

ScanResult scan_source(std::string_view src) {
    ScanResult res;
    res.code.assign(src);
    res.shape.assign(src);
    std::size_t line = 1;
    std::size_t i = 0;
    const std::size_t n = src.size();

    auto blank = [&](std::string& buf, std::size_t from, std::size_t to) {
        for (std::size_t k = from; k < to; ++k)
            if (buf[k] != '\n') buf[k] = ' ';
    };

    while (i < n) {
        const char c = src[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '/') {
            CommentSegment seg;
            seg.style = CommentStyle::kLine;
            seg.begin = i;
            seg.start_line = seg.end_line = line;
            std::size_t j = i + 2;
            while (j < n && src[j] != '\n') ++j;
            seg.end = j;
            seg.text = normalize_ws(src.substr(i + 2, j - (i + 2)));
            res.comments.push_back(std::move(seg));
            blank(res.code, i, j);
            blank(res.shape, i, j);
            i = j;
            continue;
        }
        if (c == '/' && i + 1 < n && src[i + 1] == '*') {
            CommentSegment seg;
            seg.style = (i + 2 < n && src[i + 2] == '*' && !(i + 3 < n && src[i + 3] == '/'))
                            ? CommentStyle::kJavadoc
                            : CommentStyle::kBlock;
            seg.begin = i;
            seg.start_line = line;
            const std::size_t body_start = i + (seg.style == CommentStyle::kJavadoc ? 3 : 2);
            std::size_t j = body_start;
            bool closed = false;
            while (j < n) {
                if (src[j] == '\n') ++line;
                if (src[j] == '*' && j + 1 < n && src[j + 1] == '/') {
                    closed = true;
                    break;
                }
                ++j;
            }
            seg.end_line = line;
            const std::size_t body_end = j;
            seg.end = closed ? j + 2 : n;
            if (!closed)
                res.diagnostics.push_back("unterminated block comment truncated at end of file");
            seg.text = clean_block_body(src.substr(body_start, body_end - body_start));
            res.comments.push_back(std::move(seg));
            blank(res.code, i, seg.end > n ? n : seg.end);
            blank(res.shape, i, seg.end > n ? n : seg.end);
            i = closed ? j + 2 : n;
            continue;
        }
        if (c == '"' || c == '\'') {
            const char quote = c;
            std::size_t j = i + 1;
            while (j < n && src[j] != '\n') {
                if (src[j] == '\\' && j + 1 < n) {
                    j += 2;
                    continue;
                }
                if (src[j] == quote) {
                    ++j;
                    break;
                }
                ++j;
            }
            blank(res.shape, i + 1, j > i + 1 ? j - 1 : i + 1);
            i = j;
            continue;
        }
        ++i;
    }
    return res;
}

std::vector<Snippet> extract_snippets(const RawFile& file, std::vector<std::string>* diagnostics) {
    static const std::set<std::string_view> kNotMethodNames = {
        "if", "for", "while", "switch", "catch", "synchronized", "do",  "else",
        "try", "return", "new", "throw", "assert", "super", "this",
    };

    ScanResult scan = scan_source(file.contents);
    const std::string& shape = scan.shape;
    const std::string& code = scan.code;
    const std::size_t n = shape.size();
    std::vector<Snippet> out;

    auto line_of = [&](std::size_t pos) {
        return 1 + static_cast<std::size_t>(std::count(code.begin(), code.begin() + pos, '\n'));
    };

    auto prev_word = [&](std::size_t pos) -> std::string_view {
        std::size_t e = pos;
        while (e > 0 && std::isspace(static_cast<unsigned char>(shape[e - 1]))) --e;
        std::size_t b = e;
        while (b > 0 && is_ident_char(shape[b - 1])) --b;
        return std::string_view(shape).substr(b, e - b);
    };

    std::size_t i = 0;
    while (i < n) {
        if (shape[i] != '(') {
            ++i;
            continue;
        }
        // name directly before the '('
        std::size_t name_end = i;
        while (name_end > 0 && std::isspace(static_cast<unsigned char>(shape[name_end - 1])))
            --name_end;
        std::size_t name_begin = name_end;
        while (name_begin > 0 && is_ident_char(shape[name_begin - 1])) --name_begin;
        if (name_begin == name_end) {
            ++i;
            continue;
        }
        std::string_view name = std::string_view(shape).substr(name_begin, name_end - name_begin);
        if (kNotMethodNames.count(name) > 0 || prev_word(name_begin) == "new" ||
            (name_begin > 0 && shape[name_begin - 1] == '.')) {
            ++i;
            continue;
        }

        // match the parameter list
        std::size_t j = i;
        int paren = 0;
        for (; j < n; ++j) {
            if (shape[j] == '(') ++paren;
            if (shape[j] == ')') {
                --paren;
                if (paren == 0) {
                    ++j;
                    break;
                }
            }
        }
        if (paren != 0) {
            ++i;
            continue;
        }

        // skip "throws X, Y" and whitespace; a ';' here means abstract/declaration
        std::size_t open_brace = std::string::npos;
        for (std::size_t k = j; k < n; ++k) {
            const char d = shape[k];
            if (d == '{') {
                open_brace = k;
                break;
            }
            if (d == ';' || d == '(' || d == ')' || d == '}' || d == '=') break;
        }
        if (open_brace == std::string::npos) {
            i = j;
            continue;
        }

        // method body: match braces on the literal-blanked view
        int depth = 0;
        std::size_t end = std::string::npos;
        for (std::size_t k = open_brace; k < n; ++k) {
            if (shape[k] == '{') ++depth;
            if (shape[k] == '}') {
                --depth;
                if (depth == 0) {
                    end = k + 1;
                    break;
                }
            }
        }
        if (end == std::string::npos) {
            if (diagnostics)
                diagnostics->push_back(file.path + ": unbalanced braces at end of file; rest skipped");
            break;
        }

        // signature starts after the previous ';', '{', '}' (or file start)
        std::size_t begin = name_begin;
        while (begin > 0 && shape[begin - 1] != ';' && shape[begin - 1] != '{' &&
               shape[begin - 1] != '}')
            --begin;
        while (begin < name_begin && std::isspace(static_cast<unsigned char>(shape[begin]))) ++begin;

        Snippet s;
        s.begin = begin;
        s.end = end;
        s.start_line = line_of(begin);
        // comment characters were blanked in `code`; splice them out entirely
        std::string text;
        text.reserve(end - begin);
        std::size_t ci = 0;  // comment cursor
        for (std::size_t k = begin; k < end; ++k) {
            while (ci < scan.comments.size() && scan.comments[ci].end <= k) ++ci;
            if (ci < scan.comments.size() && k >= scan.comments[ci].begin &&
                k < scan.comments[ci].end)
                continue;
            text.push_back(code[k]);
        }
        s.text = std::move(text);
        out.push_back(std::move(s));
        i = end;
    }

    if (diagnostics)
        for (const auto& d : scan.diagnostics) diagnostics->push_back(file.path + ": " + d);
    return out;
}

std::vector<CommentSegment> extract_comments(const RawFile& file,
                                             std::vector<std::string>* diagnostics) {
    ScanResult scan = scan_source(file.contents);
    std::vector<CommentSegment> out;
    for (const CommentSegment& seg : scan.comments) {
        if (!out.empty() && out.back().style == CommentStyle::kLine &&
            seg.style == CommentStyle::kLine && seg.start_line == out.back().end_line + 1) {
            CommentSegment& prev = out.back();
            if (!seg.text.empty()) {
                if (!prev.text.empty()) prev.text.push_back(' ');
                prev.text += seg.text;
            }
            prev.end_line = seg.end_line;
            prev.end = seg.end;
            continue;
        }
        out.push_back(seg);
    }
    if (diagnostics)
        for (const auto& d : scan.diagnostics) diagnostics->push_back(file.path + ": " + d);
    return out;
}

std::vector<std::string> split_terms(std::string_view token_text) {
    std::vector<std::string> out;
    std::string term;
    for (std::size_t i = 0; i < token_text.size(); ++i) {
        const char c = token_text[i];
        if (c == '_') {
            if (!term.empty()) out.push_back(std::move(term));
            term.clear();
            continue;
        }
        term.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        // boundary: lowercase/digit run followed by an uppercase letter
        if (i + 1 < token_text.size()) {
            const unsigned char cur = static_cast<unsigned char>(c);
            const unsigned char nxt = static_cast<unsigned char>(token_text[i + 1]);
            if ((std::islower(cur) || std::isdigit(cur)) && std::isupper(nxt)) {
                out.push_back(std::move(term));
                term.clear();
            }
        }
    }
    if (!term.empty()) out.push_back(std::move(term));
    return out;
}

std::vector<std::string> comment_words(std::string_view comment) {
    std::vector<std::string> out;
    std::string word;
    for (char c : comment) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!word.empty()) {
            out.push_back(std::move(word));
            word.clear();
        }
    }
    if (!word.empty()) out.push_back(std::move(word));
    return out;
}

namespace {

std::set<std::string> snippet_term_set(const Snippet& s) {
    std::set<std::string> terms;
    for (const Token& tok : lex_classified(s.text, SymbolDictionary::builtin())) {
        if (tok.kind != TokenKind::kVariable) continue;
        for (auto& t : split_terms(tok.text)) terms.insert(std::move(t));
    }
    return terms;
}

}  // namespace

std::vector<PairRecord> match_pairs(const std::string& file_path,
                                    const std::vector<Snippet>& snippets,
                                    const std::vector<CommentSegment>& comments) {
    struct Candidate {
        std::size_t shared;
        bool precedes;         // comment ends before the snippet starts
        std::size_t distance;  // line distance (absolute)
        std::size_t comment_idx;
        std::size_t snippet_idx;
    };

    std::vector<std::set<std::string>> terms;
    terms.reserve(snippets.size());
    for (const Snippet& s : snippets) terms.push_back(snippet_term_set(s));

    std::vector<Candidate> cands;
    for (std::size_t ci = 0; ci < comments.size(); ++ci) {
        std::set<std::string> words;
        for (auto& w : comment_words(comments[ci].text)) words.insert(std::move(w));
        for (std::size_t si = 0; si < snippets.size(); ++si) {
            std::size_t shared = 0;
            for (const auto& w : words) shared += terms[si].count(w);
            if (shared == 0) continue;
            const bool precedes = comments[ci].end_line < snippets[si].start_line;
            const std::size_t dist = precedes
                                         ? snippets[si].start_line - comments[ci].end_line
                                         : comments[ci].end_line - snippets[si].start_line;
            cands.push_back({shared, precedes, dist, ci, si});
        }
    }

    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.shared != b.shared) return a.shared > b.shared;
        if (a.precedes != b.precedes) return a.precedes;  // preceding comments first
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.comment_idx != b.comment_idx) return a.comment_idx < b.comment_idx;
        return a.snippet_idx < b.snippet_idx;
    });

    std::vector<bool> comment_used(comments.size(), false);
    std::vector<bool> snippet_used(snippets.size(), false);
    std::vector<std::pair<std::size_t, PairRecord>> picked;  // keyed by snippet line
    for (const Candidate& c : cands) {
        if (comment_used[c.comment_idx] || snippet_used[c.snippet_idx]) continue;
        comment_used[c.comment_idx] = true;
        snippet_used[c.snippet_idx] = true;
        const Snippet& s = snippets[c.snippet_idx];
        PairRecord rec;
        rec.id = file_path + ":" + std::to_string(s.start_line);
        rec.code = s.text;
        rec.comment = comments[c.comment_idx].text;
        rec.shared_terms = c.shared;
        picked.emplace_back(s.start_line, std::move(rec));
    }
    std::sort(picked.begin(), picked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<PairRecord> out;
    out.reserve(picked.size());
    for (auto& [line, rec] : picked) out.push_back(std::move(rec));
    return out;
}

std::pair<std::vector<PairRecord>, CleaningReport> clean_pairs(
    const std::vector<PairRecord>& pairs, std::size_t min_shared) {
    auto is_ascii = [](const std::string& s) {
        for (unsigned char c : s)
            if (c >= 128) return false;
        return true;
    };

    CleaningReport report;
    report.input_pairs = pairs.size();
    std::vector<PairRecord> kept;
    for (const PairRecord& p : pairs) {
        if (!is_ascii(p.code) || !is_ascii(p.comment)) {
            ++report.removed_non_ascii;
            continue;
        }
        if (p.shared_terms < min_shared) {
            ++report.removed_low_overlap;
            continue;
        }
        kept.push_back(p);
    }
    report.kept = kept.size();
    return {std::move(kept), report};
}

}  // namespace c2c
