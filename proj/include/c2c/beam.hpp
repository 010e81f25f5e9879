#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "c2c/errors.hpp"
#include "c2c/model.hpp"

namespace c2c {

struct Hypothesis {
    std::vector<int> tokens;  // emitted ids, GO/EOS excluded
    double logprob = 0.0;
    bool finished = false;
};

// Breadth-limited best-first decoding over an arbitrary step function.
//
//   expand(state, y_prev) -> {log-probabilities over the vocabulary, next state}
//
// Per step the top `beam_width` extensions survive; a hypothesis finishes on
// EOS and competes by total log probability (no length normalization).
// Hypotheses still alive after max_len steps compete without an EOS factor.
// PAD and GO are never proposed. Ties break deterministically by token id,
// then by parent order.
template <class State, class Expand>
Hypothesis beam_decode(const State& init, Expand&& expand, std::size_t beam_width,
                       std::size_t max_len) {
    if (beam_width < 1) throw ConfigError("beam width must be >= 1");

    struct Live {
        std::vector<int> tokens;
        double logprob = 0.0;
        State state;
        int last = Vocabulary::kGo;
    };
    struct Cand {
        double logprob;
        std::size_t parent;
        int token;
    };

    std::vector<Live> live;
    live.push_back(Live{{}, 0.0, init, Vocabulary::kGo});
    Hypothesis best;
    bool have_best = false;

    auto offer = [&](std::vector<int> tokens, double logprob, bool finished) {
        if (!have_best || logprob > best.logprob) {
            best = Hypothesis{std::move(tokens), logprob, finished};
            have_best = true;
        }
    };

    for (std::size_t step = 0; step < max_len && !live.empty(); ++step) {
        std::vector<State> states(live.size());
        std::vector<Cand> cands;
        for (std::size_t h = 0; h < live.size(); ++h) {
            auto [lp, next] = expand(live[h].state, live[h].last);
            states[h] = std::move(next);
            for (std::size_t tok = 0; tok < lp.size(); ++tok) {
                if (tok == Vocabulary::kPad || tok == Vocabulary::kGo) continue;
                cands.push_back({live[h].logprob + lp[tok], h, static_cast<int>(tok)});
            }
        }

        const std::size_t keep = std::min(beam_width, cands.size());
        std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(keep),
                          cands.end(), [](const Cand& a, const Cand& b) {
                              if (a.logprob != b.logprob) return a.logprob > b.logprob;
                              if (a.token != b.token) return a.token < b.token;
                              return a.parent < b.parent;
                          });

        std::vector<Live> next_live;
        for (std::size_t c = 0; c < keep; ++c) {
            const Cand& cand = cands[c];
            if (cand.token == Vocabulary::kEos) {
                offer(live[cand.parent].tokens, cand.logprob, true);
                continue;
            }
            Live nl;
            nl.tokens = live[cand.parent].tokens;
            nl.tokens.push_back(cand.token);
            nl.logprob = cand.logprob;
            nl.state = states[cand.parent];
            nl.last = cand.token;
            next_live.push_back(std::move(nl));
        }
        live = std::move(next_live);
    }

    for (Live& h : live) offer(std::move(h.tokens), h.logprob, false);
    return best;
}

// log softmax with max subtraction
Vec log_softmax(const Vec& logits);

// Beam decoding over the trained model; returns the best hypothesis with its
// total log probability. The context mode is the one stored in params.dims.
Hypothesis beam_search_scored(const ModelParams& params, std::span<const int> src_ids,
                              std::span<const int> token_idx, std::size_t beam_width,
                              std::size_t max_len);

// As above, returning just the token ids (GO/EOS stripped).
std::vector<int> beam_search(const ModelParams& params, std::span<const int> src_ids,
                             std::span<const int> token_idx, std::size_t beam_width,
                             std::size_t max_len);

// Greedy argmax decoding (equivalent to beam width 1).
std::vector<int> greedy_decode(const ModelParams& params, std::span<const int> src_ids,
                               std::span<const int> token_idx, std::size_t max_len);

}  // namespace c2c
