#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace c2c {

struct RawFile {
    std::string path;
    std::string contents;
};

enum class CommentStyle { kLine, kBlock, kJavadoc };

struct CommentSegment {
    std::string text;  // markers and leading asterisks stripped, whitespace-normalized
    CommentStyle style = CommentStyle::kLine;
    std::size_t start_line = 0;  // 1-based
    std::size_t end_line = 0;
    std::size_t begin = 0;  // raw char span, including markers
    std::size_t end = 0;
};

struct Snippet {
    std::string text;  // comment characters spliced out
    std::size_t start_line = 0;
    std::size_t begin = 0;  // raw char span (may enclose comment spans; those
    std::size_t end = 0;    // characters are not part of the snippet text)
};

struct PairRecord {
    std::string id;  // "<path>:<snippet start line>"
    std::string code;
    std::string comment;
    std::size_t shared_terms = 0;
};

struct CleaningReport {
    std::size_t input_pairs = 0;
    std::size_t removed_non_ascii = 0;
    std::size_t removed_low_overlap = 0;
    std::size_t kept = 0;
};

// Single pass over a source file: comment segments plus two comment-free
// views of the code (one verbatim, one with literal contents blanked so
// structural scans cannot be fooled by braces in strings).
struct ScanResult {
    std::string code;    // comments replaced by spaces (newlines kept)
    std::string shape;   // as `code`, with string/char literal bodies also blanked
    std::vector<CommentSegment> comments;
    std::vector<std::string> diagnostics;
};

ScanResult scan_source(std::string_view contents);

// Maximal brace-balanced method-like blocks (`<modifiers> <type> name(args) {...}`),
// in source order. A block left unclosed at end of file is dropped with a
// diagnostic; earlier blocks are kept.
std::vector<Snippet> extract_snippets(const RawFile& file,
                                      std::vector<std::string>* diagnostics = nullptr);

// `//` line runs (consecutive lines merged), `/* */` and `/** */` blocks.
std::vector<CommentSegment> extract_comments(const RawFile& file,
                                             std::vector<std::string>* diagnostics = nullptr);

// camelCase / underscore splitting, lowercased; digits stay with their run.
std::vector<std::string> split_terms(std::string_view token_text);

// Lowercased word set of a natural-language comment.
std::vector<std::string> comment_words(std::string_view comment);

// Greedy 1:1 matching by descending shared-term count; ties prefer the
// nearest preceding comment. Unmatched items are dropped. Resulting pairs are
// ordered by snippet start line.
std::vector<PairRecord> match_pairs(const std::string& file_path,
                                    const std::vector<Snippet>& snippets,
                                    const std::vector<CommentSegment>& comments);

// Drops pairs with any non-ASCII byte and pairs with shared_terms < min_shared.
std::pair<std::vector<PairRecord>, CleaningReport> clean_pairs(
    const std::vector<PairRecord>& pairs, std::size_t min_shared = 3);

}  // namespace c2c
