#include "c2c/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "c2c/errors.hpp"

namespace c2c {

namespace {

// n-grams keyed by the joined token text (separator cannot appear in tokens
// produced by whitespace splitting)
std::unordered_map<std::string, std::size_t> ngram_counts(const TokenList& tokens, std::size_t n) {
    std::unordered_map<std::string, std::size_t> counts;
    if (tokens.size() < n) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key = tokens[i];
        for (std::size_t k = 1; k < n; ++k) {
            key.push_back('\x1f');
            key += tokens[i + k];
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace

BleuReport bleu(const std::vector<TokenList>& candidates,
                const std::vector<TokenList>& references) {
    if (candidates.empty() || candidates.size() != references.size())
        throw DataError("bleu: need equally many candidates and references (>= 1)");

    constexpr std::size_t kMaxN = 4;
    std::array<std::size_t, kMaxN> matched{};
    std::array<std::size_t, kMaxN> total{};
    std::size_t cand_len = 0, ref_len = 0;

    for (std::size_t i = 0; i < candidates.size(); ++i) {
        cand_len += candidates[i].size();
        ref_len += references[i].size();
        for (std::size_t n = 1; n <= kMaxN; ++n) {
            auto cand = ngram_counts(candidates[i], n);
            auto ref = ngram_counts(references[i], n);
            for (const auto& [gram, count] : cand) {
                total[n - 1] += count;
                auto it = ref.find(gram);
                if (it != ref.end()) matched[n - 1] += std::min(count, it->second);
            }
        }
    }

    BleuReport report;
    report.brevity_penalty =
        cand_len == 0 ? 0.0
                      : std::min(1.0, std::exp(1.0 - static_cast<double>(ref_len) /
                                                         static_cast<double>(cand_len)));
    for (std::size_t n = 1; n <= kMaxN; ++n) {
        report.precisions[n - 1] =
            total[n - 1] == 0 ? 0.0
                              : static_cast<double>(matched[n - 1]) /
                                    static_cast<double>(total[n - 1]);
        double log_sum = 0.0;
        bool zero = false;
        for (std::size_t k = 1; k <= n; ++k) {
            if (report.precisions[k - 1] <= 0.0) {
                zero = true;
                break;
            }
            log_sum += std::log(report.precisions[k - 1]);
        }
        report.bleu[n - 1] =
            zero ? 0.0 : report.brevity_penalty * std::exp(log_sum / static_cast<double>(n));
    }
    return report;
}

// ---------------------------------------------------------------------------
// METEOR
// ---------------------------------------------------------------------------

namespace {

// Search state for exact chunk minimization over maximum matchings.
struct ChunkSearch {
    const TokenList& cand;
    const TokenList& ref;
    // per candidate position: indices of equal reference tokens
    std::vector<std::vector<std::size_t>> options;
    // per word: how many matches the maximum matching must still make, and how
    // many candidate occurrences of that word remain (to know if skips are legal)
    std::unordered_map<std::string, std::size_t> need;
    std::unordered_map<std::string, std::size_t> cand_remaining;
    std::vector<bool> ref_used;
    std::size_t best_chunks;
    std::size_t budget = 2'000'000;  // node cap; the greedy seed stays valid if hit

    ChunkSearch(const TokenList& c, const TokenList& r) : cand(c), ref(r) {
        std::unordered_map<std::string, std::vector<std::size_t>> ref_positions;
        std::unordered_map<std::string, std::size_t> ref_count, cand_count;
        for (std::size_t j = 0; j < ref.size(); ++j) {
            ref_positions[ref[j]].push_back(j);
            ++ref_count[ref[j]];
        }
        for (const auto& w : cand) ++cand_count[w];
        options.resize(cand.size());
        for (std::size_t i = 0; i < cand.size(); ++i) {
            auto it = ref_positions.find(cand[i]);
            if (it != ref_positions.end()) options[i] = it->second;
        }
        for (const auto& [w, cc] : cand_count) {
            auto it = ref_count.find(w);
            if (it != ref_count.end()) need[w] = std::min(cc, it->second);
            cand_remaining[w] = cc;
        }
        ref_used.assign(ref.size(), false);
        best_chunks = cand.size() + 1;  // any alignment beats this
    }

    std::size_t total_need() const {
        std::size_t n = 0;
        for (const auto& [w, k] : need) n += k;
        return n;
    }

    // i: candidate position; prev_j: reference position of the previous match
    // (or npos); in_chunk: whether the previous candidate position matched
    void dfs(std::size_t i, std::size_t prev_j, bool prev_matched, std::size_t chunks,
             std::size_t remaining) {
        if (chunks >= best_chunks || budget == 0) return;
        --budget;
        if (remaining == 0) {
            best_chunks = chunks;
            return;
        }
        if (i >= cand.size()) return;

        const std::string& w = cand[i];
        auto need_it = need.find(w);
        const bool word_needed = need_it != need.end() && need_it->second > 0;

        if (word_needed) {
            // prefer the continuation of the current chunk, then left-to-right
            std::vector<std::size_t> order;
            order.reserve(options[i].size());
            const std::size_t continue_j = prev_matched ? prev_j + 1 : ref.size();
            if (continue_j < ref.size() && ref[continue_j] == w && !ref_used[continue_j])
                order.push_back(continue_j);
            for (std::size_t j : options[i])
                if (!ref_used[j] && j != continue_j) order.push_back(j);

            for (std::size_t j : order) {
                const bool contiguous = prev_matched && j == prev_j + 1;
                ref_used[j] = true;
                --need_it->second;
                --cand_remaining[w];
                dfs(i + 1, j, true, chunks + (contiguous ? 0 : 1), remaining - 1);
                ++cand_remaining[w];
                ++need_it->second;
                ref_used[j] = false;
            }
        }

        // skipping this occurrence is legal only if the word's quota can still
        // be met by later candidate occurrences
        const std::size_t have_later =
            cand_remaining.count(w) ? cand_remaining[w] - 1 : 0;
        if (!word_needed || need_it->second <= have_later) {
            if (cand_remaining.count(w)) --cand_remaining[w];
            dfs(i + 1, prev_j, false, chunks, remaining);
            if (cand_remaining.count(w)) ++cand_remaining[w];
        }
    }
};

MeteorStats greedy_align(const TokenList& cand, const TokenList& ref) {
    std::unordered_map<std::string, std::size_t> ref_count, cand_count, need;
    std::unordered_map<std::string, std::vector<std::size_t>> ref_positions;
    for (std::size_t j = 0; j < ref.size(); ++j) {
        ++ref_count[ref[j]];
        ref_positions[ref[j]].push_back(j);
    }
    for (const auto& w : cand) ++cand_count[w];
    for (const auto& [w, cc] : cand_count) {
        auto it = ref_count.find(w);
        if (it != ref_count.end()) need[w] = std::min(cc, it->second);
    }

    MeteorStats stats;
    stats.cand_len = cand.size();
    stats.ref_len = ref.size();
    std::vector<bool> used(ref.size(), false);
    std::size_t prev_j = ref.size();
    bool prev_matched = false;
    std::unordered_map<std::string, std::size_t> remaining = cand_count;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        const std::string& w = cand[i];
        auto need_it = need.find(w);
        --remaining[w];
        if (need_it == need.end() || need_it->second == 0) {
            prev_matched = false;
            continue;
        }
        // must we match here to fill the quota?
        const bool forced = need_it->second > remaining[w];
        // prefer continuing the chunk
        std::size_t chosen = ref.size();
        const std::size_t cont = prev_matched ? prev_j + 1 : ref.size();
        if (cont < ref.size() && ref[cont] == w && !used[cont]) {
            chosen = cont;
        } else if (forced) {
            for (std::size_t j : ref_positions[w])
                if (!used[j]) {
                    chosen = j;
                    break;
                }
        }
        if (chosen == ref.size()) {
            prev_matched = false;
            continue;
        }
        used[chosen] = true;
        --need_it->second;
        ++stats.matches;
        if (!(prev_matched && chosen == prev_j + 1)) ++stats.chunks;
        prev_j = chosen;
        prev_matched = true;
    }
    // any unfilled quota gets matched arbitrarily (each is its own chunk)
    for (const auto& [w, k] : need) {
        if (k == 0) continue;
        std::size_t left = k;
        for (std::size_t j : ref_positions[w]) {
            if (left == 0) break;
            if (!used[j]) {
                used[j] = true;
                ++stats.matches;
                ++stats.chunks;
                --left;
            }
        }
    }
    return stats;
}

}  // namespace

MeteorStats meteor_align(const TokenList& candidate, const TokenList& reference,
                         std::size_t exact_limit) {
    MeteorStats greedy = greedy_align(candidate, reference);
    if (candidate.size() > exact_limit || reference.size() > exact_limit) return greedy;
    if (greedy.matches == 0 || greedy.chunks <= 1) return greedy;

    ChunkSearch search(candidate, reference);
    search.best_chunks = greedy.chunks;  // achievable seed; DFS can only improve
    search.dfs(0, reference.size(), false, 0, greedy.matches);
    greedy.chunks = search.best_chunks;
    return greedy;
}

MeteorReport meteor_from_stats(const MeteorStats& stats) {
    MeteorReport r;
    if (stats.matches == 0 || stats.cand_len == 0 || stats.ref_len == 0) return r;
    r.precision = static_cast<double>(stats.matches) / static_cast<double>(stats.cand_len);
    r.recall = static_cast<double>(stats.matches) / static_cast<double>(stats.ref_len);
    r.f_mean = 10.0 * r.precision * r.recall / (r.recall + 9.0 * r.precision);
    const double frag = static_cast<double>(stats.chunks) / static_cast<double>(stats.matches);
    r.penalty = 0.5 * frag * frag * frag;
    r.score = r.f_mean * (1.0 - r.penalty);
    return r;
}

MeteorReport meteor(const TokenList& candidate, const TokenList& reference) {
    return meteor_from_stats(meteor_align(candidate, reference));
}

MeteorReport corpus_meteor(const std::vector<std::pair<TokenList, TokenList>>& pairs) {
    if (pairs.empty()) throw DataError("corpus_meteor: need at least one pair");
    MeteorStats total;
    for (const auto& [cand, ref] : pairs) {
        MeteorStats s = meteor_align(cand, ref);
        total.matches += s.matches;
        total.chunks += s.chunks;
        total.cand_len += s.cand_len;
        total.ref_len += s.ref_len;
    }
    return meteor_from_stats(total);
}

}  // namespace c2c
