#include "c2c/beam.hpp"

#include <cmath>

namespace c2c {

Vec log_softmax(const Vec& logits) {
    double m = logits[0];
    for (double x : logits)
        if (x > m) m = x;
    double sum = 0.0;
    for (double x : logits) sum += std::exp(x - m);
    const double lse = m + std::log(sum);
    Vec out(logits.size());
    for (std::size_t i = 0; i < logits.size(); ++i) out[i] = logits[i] - lse;
    return out;
}

namespace {

struct ModelStepper {
    const ModelParams& p;
    const Matrix enc_top;
    const Matrix weights;

    std::pair<Vec, DecoderState> operator()(const DecoderState& state, int y_prev) const {
        DecoderState next = state;
        Vec scores = attention_scores(p.attn, next.h.back(), enc_top);
        Vec alpha = attention_weights(scores);
        Vec ctx = context_vector(alpha, weights, enc_top, p.dims.mode);
        Vec logits = decoder_step(p, next, y_prev, ctx);
        return {log_softmax(logits), std::move(next)};
    }
};

}  // namespace

Hypothesis beam_search_scored(const ModelParams& params, std::span<const int> src_ids,
                              std::span<const int> token_idx, std::size_t beam_width,
                              std::size_t max_len) {
    EncodeResult enc = encode(params, src_ids, token_idx);
    DecoderState init{std::move(enc.final_state)};
    ModelStepper stepper{params, std::move(enc.top_states), std::move(enc.weights)};
    return beam_decode(init, stepper, beam_width, max_len);
}

std::vector<int> beam_search(const ModelParams& params, std::span<const int> src_ids,
                             std::span<const int> token_idx, std::size_t beam_width,
                             std::size_t max_len) {
    return beam_search_scored(params, src_ids, token_idx, beam_width, max_len).tokens;
}

std::vector<int> greedy_decode(const ModelParams& params, std::span<const int> src_ids,
                               std::span<const int> token_idx, std::size_t max_len) {
    EncodeResult enc = encode(params, src_ids, token_idx);
    DecoderState state{std::move(enc.final_state)};
    std::vector<int> out;
    int prev = Vocabulary::kGo;
    for (std::size_t step = 0; step < max_len; ++step) {
        Vec scores = attention_scores(params.attn, state.h.back(), enc.top_states);
        Vec alpha = attention_weights(scores);
        Vec ctx = context_vector(alpha, enc.weights, enc.top_states, params.dims.mode);
        Vec logits = decoder_step(params, state, prev, ctx);

        int argmax = -1;
        double best = 0.0;
        for (std::size_t tok = 0; tok < logits.size(); ++tok) {
            if (tok == Vocabulary::kPad || tok == Vocabulary::kGo) continue;
            if (argmax < 0 || logits[tok] > best) {
                argmax = static_cast<int>(tok);
                best = logits[tok];
            }
        }
        if (argmax == Vocabulary::kEos) break;
        out.push_back(argmax);
        prev = argmax;
    }
    return out;
}

}  // namespace c2c
