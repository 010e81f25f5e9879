#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace c2c {

using TokenList = std::vector<std::string>;

// Corpus-level BLEU. bleu[n-1] is the cumulative n-gram score in [0,1]:
// BP * exp((1/n) sum_{k<=n} ln p_k), 0 when any p_k is 0 (no smoothing).
struct BleuReport {
    std::array<double, 4> bleu{};        // BLEU-1..4
    std::array<double, 4> precisions{};  // modified n-gram precisions p_1..p_4
    double brevity_penalty = 0.0;
};

// Single reference per candidate; clipped matches and counts are summed over
// the corpus before dividing. An empty candidate contributes zero matches and
// its lengths.
BleuReport bleu(const std::vector<TokenList>& candidates,
                const std::vector<TokenList>& references);

struct MeteorStats {
    std::size_t matches = 0;
    std::size_t chunks = 0;
    std::size_t cand_len = 0;
    std::size_t ref_len = 0;
};

struct MeteorReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_mean = 0.0;   // 10PR / (R + 9P)
    double penalty = 0.0;  // 0.5 (chunks/matches)^3
    double score = 0.0;    // f_mean (1 - penalty)
};

// Exact-match unigram alignment maximizing matches and, among those,
// minimizing chunks. Chunk minimization is exact up to `exact_limit` tokens
// per side (branch and bound), greedy left-to-right beyond.
MeteorStats meteor_align(const TokenList& candidate, const TokenList& reference,
                         std::size_t exact_limit = 50);

MeteorReport meteor_from_stats(const MeteorStats& stats);

MeteorReport meteor(const TokenList& candidate, const TokenList& reference);

// Micro-average: matches, chunks and lengths summed over the corpus, the
// formulas applied once.
MeteorReport corpus_meteor(const std::vector<std::pair<TokenList, TokenList>>& pairs);

}  // namespace c2c
