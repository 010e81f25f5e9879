#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "c2c/tensor.hpp"
#include "c2c/vocab.hpp"

namespace c2c {

// How token weights enter the context vector:
//   baseline        c_t = sum_i a_i e_i
//   additive        c_t = sum_i a_i (w_i + e_i)
//   multiplicative  c_t = sum_i a_i (w_i (.) e_i)
enum class ContextMode : std::uint32_t { kBaseline = 0, kAdditive = 1, kMultiplicative = 2 };

const char* context_mode_name(ContextMode mode);

struct ModelDims {
    std::size_t src_vocab = 0;
    std::size_t tgt_vocab = 0;
    std::size_t embed = 0;
    std::size_t hidden = 0;
    std::size_t layers = 3;
    ContextMode mode = ContextMode::kMultiplicative;
    std::uint32_t dict_version = 0;
};

// One GRU layer. Gate matrices act on the concatenation [h_prev, x].
struct GruParams {
    Matrix w_z, w_r, w_h;  // hidden x (hidden + input)
    Vec b_z, b_r, b_h;     // hidden
};

struct AttentionParams {
    Matrix w_d;  // hidden x hidden, projects the previous top decoder state
    Matrix w_e;  // hidden x hidden, projects an encoder state
    Vec v;       // hidden
    Matrix f;    // src_vocab x hidden token-weight rows
};

struct ModelParams {
    ModelDims dims;
    Matrix e_src, e_tgt;  // vocab x embed
    std::vector<GruParams> encoder, decoder;
    AttentionParams attn;
    Matrix w_out;  // tgt_vocab x hidden
    Vec b_out;

    std::size_t enc_input_dim(std::size_t layer) const {
        return layer == 0 ? dims.embed : dims.hidden;
    }
    // the top decoder layer also consumes the context vector
    std::size_t dec_input_dim(std::size_t layer) const {
        std::size_t base = layer == 0 ? dims.embed : dims.hidden;
        return layer + 1 == dims.layers ? base + dims.hidden : base;
    }

    // Matrices ~ U(-0.08, 0.08), biases zero. F starts at the combination
    // identity of its mode (ones for multiplicative/baseline, zeros for
    // additive) and is never drawn from the RNG, so the non-F weights are
    // identical across modes for a given seed.
    static ModelParams init(const ModelDims& dims, std::uint64_t seed);

    // All-zero parameter set of the same shapes (gradient accumulator).
    static ModelParams zeros_like(const ModelParams& p);
};

// Canonical tensor traversal: checkpoint order, gradient-clip order.
template <class Params, class Fn>
void visit_tensors(Params& p, Fn&& fn) {
    fn("embed.src", p.e_src.a);
    fn("embed.tgt", p.e_tgt.a);
    auto visit_stack = [&](const char* prefix, auto& layers) {
        for (std::size_t l = 0; l < layers.size(); ++l) {
            const std::string base = std::string(prefix) + "." + std::to_string(l) + ".";
            fn(base + "wz", layers[l].w_z.a);
            fn(base + "wr", layers[l].w_r.a);
            fn(base + "wh", layers[l].w_h.a);
            fn(base + "bz", layers[l].b_z);
            fn(base + "br", layers[l].b_r);
            fn(base + "bh", layers[l].b_h);
        }
    };
    visit_stack("enc", p.encoder);
    visit_stack("dec", p.decoder);
    fn("attn.wd", p.attn.w_d.a);
    fn("attn.we", p.attn.w_e.a);
    fn("attn.v", p.attn.v);
    fn("out.w", p.w_out.a);
    fn("out.b", p.b_out);
    fn("attn.f", p.attn.f.a);
}

// ---------------------------------------------------------------------------
// Forward computation
// ---------------------------------------------------------------------------

// h = (1-z) (.) h_prev + z (.) h~, per the GRU update rules. Throws
// ComputeError on non-finite inputs.
Vec gru_cell(const GruParams& p, const Vec& h_prev, const Vec& x);

struct EncodeResult {
    Matrix top_states;             // T x hidden, top-layer state per position
    Matrix weights;                // T x hidden, w_i = F[token_idx[i]]
    std::vector<Vec> final_state;  // last hidden state of every layer
};

EncodeResult encode(const ModelParams& p, std::span<const int> src_ids,
                    std::span<const int> token_idx);

// s_i = v . tanh(W_d d_top_prev + W_e e_i)
Vec attention_scores(const AttentionParams& p, const Vec& d_top_prev, const Matrix& top_states);

// softmax with max subtraction
Vec attention_weights(const Vec& scores);

Vec context_vector(const Vec& alpha, const Matrix& weights, const Matrix& top_states,
                   ContextMode mode);

struct DecoderState {
    std::vector<Vec> h;  // one vector per layer
};

// Runs one decoder step (embedding of y_prev through the layer stack, context
// concatenated into the top layer) and returns the output logits.
Vec decoder_step(const ModelParams& p, DecoderState& state, int y_prev, const Vec& context);

// ---------------------------------------------------------------------------
// Batched loss with a full activation trace for exact gradients
// ---------------------------------------------------------------------------

struct GruLayerTrace {
    std::vector<Vec> h, z, r, hbar;  // indexed by time step
};

struct ExampleTrace {
    std::vector<int> src_ids, token_idx;  // real length, no padding
    std::vector<int> dec_inputs, golds;   // teacher-forced inputs and targets
    std::vector<GruLayerTrace> enc, dec;
    Matrix enc_top;               // T x hidden
    Matrix weights;               // T x hidden
    std::vector<Vec> alpha;       // per step
    std::vector<Matrix> att_u;    // per step: T x hidden tanh activations
    std::vector<Vec> context;     // per step
    std::vector<Vec> probs;       // per step: softmax over target vocab
};

struct ForwardTrace {
    ContextMode mode = ContextMode::kBaseline;
    std::size_t n_targets = 0;  // non-PAD gold positions
    double loss = 0.0;
    std::vector<ExampleTrace> examples;

    // The stored per-step distributions reproduce the loss bit for bit.
    double replay_loss() const;
};

struct ForwardResult {
    double loss = 0.0;
    ForwardTrace trace;
};

// Mean masked cross-entropy under teacher forcing. The batch must come from a
// single bucket; gold PAD positions carry no loss. Throws DataError when the
// batch has no non-PAD targets.
ForwardResult forward_loss(const ModelParams& p, std::span<const Example> batch, ContextMode mode);

}  // namespace c2c
