#include "c2c/model.hpp"

#include <cmath>
#include <string>

#include "c2c/errors.hpp"
#include "c2c/kernels.hpp"
#include "c2c/lexer.hpp"
#include "c2c/rng.hpp"

namespace c2c {

const char* context_mode_name(ContextMode mode) {
    switch (mode) {
        case ContextMode::kBaseline: return "baseline";
        case ContextMode::kAdditive: return "additive";
        case ContextMode::kMultiplicative: return "multiplicative";
    }
    return "unknown";
}

namespace {

GruParams make_gru(std::size_t hidden, std::size_t input) {
    GruParams g;
    g.w_z = Matrix(hidden, hidden + input);
    g.w_r = Matrix(hidden, hidden + input);
    g.w_h = Matrix(hidden, hidden + input);
    g.b_z.assign(hidden, 0.0);
    g.b_r.assign(hidden, 0.0);
    g.b_h.assign(hidden, 0.0);
    return g;
}

void fill_uniform(std::vector<double>& v, Rng& rng, double lo, double hi) {
    for (double& x : v) x = rng.uniform(lo, hi);
}

}  // namespace

ModelParams ModelParams::init(const ModelDims& dims, std::uint64_t seed) {
    ModelParams p;
    p.dims = dims;
    if (p.dims.dict_version == 0) p.dims.dict_version = SymbolDictionary::builtin().version();
    p.e_src = Matrix(dims.src_vocab, dims.embed);
    p.e_tgt = Matrix(dims.tgt_vocab, dims.embed);
    for (std::size_t l = 0; l < dims.layers; ++l)
        p.encoder.push_back(make_gru(dims.hidden, p.enc_input_dim(l)));
    for (std::size_t l = 0; l < dims.layers; ++l)
        p.decoder.push_back(make_gru(dims.hidden, p.dec_input_dim(l)));
    p.attn.w_d = Matrix(dims.hidden, dims.hidden);
    p.attn.w_e = Matrix(dims.hidden, dims.hidden);
    p.attn.v.assign(dims.hidden, 0.0);
    p.attn.f = Matrix(dims.src_vocab, dims.hidden,
                      dims.mode == ContextMode::kAdditive ? 0.0 : 1.0);
    p.w_out = Matrix(dims.tgt_vocab, dims.hidden);
    p.b_out.assign(dims.tgt_vocab, 0.0);

    constexpr double kInitRange = 0.08;
    Rng rng(derive_seed(seed, /*stream=*/1, /*counter=*/0));
    fill_uniform(p.e_src.a, rng, -kInitRange, kInitRange);
    fill_uniform(p.e_tgt.a, rng, -kInitRange, kInitRange);
    for (auto* stack : {&p.encoder, &p.decoder}) {
        for (GruParams& g : *stack) {
            fill_uniform(g.w_z.a, rng, -kInitRange, kInitRange);
            fill_uniform(g.w_r.a, rng, -kInitRange, kInitRange);
            fill_uniform(g.w_h.a, rng, -kInitRange, kInitRange);
        }
    }
    fill_uniform(p.attn.w_d.a, rng, -kInitRange, kInitRange);
    fill_uniform(p.attn.w_e.a, rng, -kInitRange, kInitRange);
    fill_uniform(p.attn.v, rng, -kInitRange, kInitRange);
    fill_uniform(p.w_out.a, rng, -kInitRange, kInitRange);
    return p;
}

ModelParams ModelParams::zeros_like(const ModelParams& p) {
    ModelParams z;
    z.dims = p.dims;
    z.e_src = Matrix(p.e_src.rows, p.e_src.cols);
    z.e_tgt = Matrix(p.e_tgt.rows, p.e_tgt.cols);
    auto zero_gru = [](const GruParams& g) {
        GruParams out;
        out.w_z = Matrix(g.w_z.rows, g.w_z.cols);
        out.w_r = Matrix(g.w_r.rows, g.w_r.cols);
        out.w_h = Matrix(g.w_h.rows, g.w_h.cols);
        out.b_z.assign(g.b_z.size(), 0.0);
        out.b_r.assign(g.b_r.size(), 0.0);
        out.b_h.assign(g.b_h.size(), 0.0);
        return out;
    };
    for (const GruParams& g : p.encoder) z.encoder.push_back(zero_gru(g));
    for (const GruParams& g : p.decoder) z.decoder.push_back(zero_gru(g));
    z.attn.w_d = Matrix(p.attn.w_d.rows, p.attn.w_d.cols);
    z.attn.w_e = Matrix(p.attn.w_e.rows, p.attn.w_e.cols);
    z.attn.v.assign(p.attn.v.size(), 0.0);
    z.attn.f = Matrix(p.attn.f.rows, p.attn.f.cols);
    z.w_out = Matrix(p.w_out.rows, p.w_out.cols);
    z.b_out.assign(p.b_out.size(), 0.0);
    return z;
}

// ---------------------------------------------------------------------------
// Forward
// ---------------------------------------------------------------------------

namespace {

// z = sigma(W_z [h,x] + b_z); r = sigma(W_r [h,x] + b_r)
// h~ = tanh(W_h [r (.) h, x] + b_h); h' = (1-z) (.) h + z (.) h~
Vec gru_cell_traced(const GruParams& p, const Vec& h_prev, const Vec& x, Vec* z_out, Vec* r_out,
                    Vec* hbar_out) {
    const std::size_t hidden = h_prev.size();
    if (!all_finite(h_prev.data(), hidden) || !all_finite(x.data(), x.size()))
        throw ComputeError("non-finite input to gru_cell");

    const Vec hx = concat(h_prev, x);
    Vec z(hidden), r(hidden);
    kern::matvec(p.w_z.a.data(), hidden, hx.size(), hx.data(), z.data());
    kern::matvec(p.w_r.a.data(), hidden, hx.size(), hx.data(), r.data());
    for (std::size_t i = 0; i < hidden; ++i) {
        z[i] = sigmoid(z[i] + p.b_z[i]);
        r[i] = sigmoid(r[i] + p.b_r[i]);
    }

    Vec rh(hidden);
    kern::hadamard(r.data(), h_prev.data(), rh.data(), hidden);
    const Vec rhx = concat(rh, x);
    Vec hbar(hidden);
    kern::matvec(p.w_h.a.data(), hidden, rhx.size(), rhx.data(), hbar.data());
    for (std::size_t i = 0; i < hidden; ++i) hbar[i] = std::tanh(hbar[i] + p.b_h[i]);

    Vec h(hidden);
    for (std::size_t i = 0; i < hidden; ++i) h[i] = (1.0 - z[i]) * h_prev[i] + z[i] * hbar[i];

    if (z_out) *z_out = std::move(z);
    if (r_out) *r_out = std::move(r);
    if (hbar_out) *hbar_out = std::move(hbar);
    return h;
}

Vec embedding_row(const Matrix& table, int id, const char* what) {
    if (id < 0 || static_cast<std::size_t>(id) >= table.rows)
        throw DataError(std::string(what) + " id out of range: " + std::to_string(id));
    return Vec(table.row(static_cast<std::size_t>(id)),
               table.row(static_cast<std::size_t>(id)) + table.cols);
}

}  // namespace

Vec gru_cell(const GruParams& p, const Vec& h_prev, const Vec& x) {
    return gru_cell_traced(p, h_prev, x, nullptr, nullptr, nullptr);
}

namespace {

EncodeResult encode_traced(const ModelParams& p, std::span<const int> src_ids,
                           std::span<const int> token_idx, std::vector<GruLayerTrace>* trace) {
    const std::size_t t_len = src_ids.size();
    const std::size_t hidden = p.dims.hidden;
    if (t_len == 0 || t_len != token_idx.size())
        throw DataError("encode: empty input or misaligned token indices");

    EncodeResult res;
    res.top_states = Matrix(t_len, hidden);
    res.weights = Matrix(t_len, hidden);
    if (trace) trace->assign(p.dims.layers, GruLayerTrace{});

    std::vector<Vec> h(p.dims.layers, Vec(hidden, 0.0));
    for (std::size_t t = 0; t < t_len; ++t) {
        Vec x = embedding_row(p.e_src, src_ids[t], "source token");
        for (std::size_t l = 0; l < p.dims.layers; ++l) {
            Vec z, r, hbar;
            Vec h_new = gru_cell_traced(p.encoder[l], h[l], x,
                                        trace ? &z : nullptr, trace ? &r : nullptr,
                                        trace ? &hbar : nullptr);
            if (trace) {
                (*trace)[l].z.push_back(std::move(z));
                (*trace)[l].r.push_back(std::move(r));
                (*trace)[l].hbar.push_back(std::move(hbar));
                (*trace)[l].h.push_back(h_new);
            }
            h[l] = std::move(h_new);
            x = h[l];
        }
        std::copy(h.back().begin(), h.back().end(), res.top_states.row(t));

        const int w_idx = token_idx[t];
        if (w_idx < 0 || static_cast<std::size_t>(w_idx) >= p.attn.f.rows)
            throw DataError("token weight id out of range: " + std::to_string(w_idx));
        std::copy(p.attn.f.row(static_cast<std::size_t>(w_idx)),
                  p.attn.f.row(static_cast<std::size_t>(w_idx)) + hidden, res.weights.row(t));
    }
    res.final_state = std::move(h);
    return res;
}

}  // namespace

EncodeResult encode(const ModelParams& p, std::span<const int> src_ids,
                    std::span<const int> token_idx) {
    return encode_traced(p, src_ids, token_idx, nullptr);
}

namespace {

Vec attention_scores_traced(const AttentionParams& p, const Vec& d_top_prev,
                            const Matrix& top_states, Matrix* u_trace) {
    const std::size_t t_len = top_states.rows;
    const std::size_t hidden = top_states.cols;
    Vec query(hidden);
    kern::matvec(p.w_d.a.data(), hidden, hidden, d_top_prev.data(), query.data());

    if (u_trace) *u_trace = Matrix(t_len, hidden);
    Vec scores(t_len);
    Vec u(hidden);
    for (std::size_t i = 0; i < t_len; ++i) {
        kern::matvec(p.w_e.a.data(), hidden, hidden, top_states.row(i), u.data());
        for (std::size_t k = 0; k < hidden; ++k) u[k] = std::tanh(u[k] + query[k]);
        scores[i] = kern::dot(p.v.data(), u.data(), hidden);
        if (u_trace) std::copy(u.begin(), u.end(), u_trace->row(i));
    }
    return scores;
}

}  // namespace

Vec attention_scores(const AttentionParams& p, const Vec& d_top_prev, const Matrix& top_states) {
    return attention_scores_traced(p, d_top_prev, top_states, nullptr);
}

Vec attention_weights(const Vec& scores) { return softmax(scores); }

Vec context_vector(const Vec& alpha, const Matrix& weights, const Matrix& top_states,
                   ContextMode mode) {
    const std::size_t hidden = top_states.cols;
    Vec ctx(hidden, 0.0);
    Vec combined(hidden);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const double* e = top_states.row(i);
        const double* w = weights.row(i);
        switch (mode) {
            case ContextMode::kMultiplicative: kern::hadamard(w, e, combined.data(), hidden); break;
            case ContextMode::kAdditive: kern::add(w, e, combined.data(), hidden); break;
            case ContextMode::kBaseline: std::copy(e, e + hidden, combined.begin()); break;
        }
        kern::axpy(alpha[i], combined.data(), ctx.data(), hidden);
    }
    return ctx;
}

namespace {

Vec decoder_step_traced(const ModelParams& p, DecoderState& state, int y_prev, const Vec& context,
                        std::vector<GruLayerTrace>* trace) {
    Vec x = embedding_row(p.e_tgt, y_prev, "target token");
    for (std::size_t l = 0; l < p.dims.layers; ++l) {
        if (l + 1 == p.dims.layers) x = concat(x, context);
        Vec z, r, hbar;
        Vec h_new = gru_cell_traced(p.decoder[l], state.h[l], x, trace ? &z : nullptr,
                                    trace ? &r : nullptr, trace ? &hbar : nullptr);
        if (trace) {
            (*trace)[l].z.push_back(std::move(z));
            (*trace)[l].r.push_back(std::move(r));
            (*trace)[l].hbar.push_back(std::move(hbar));
            (*trace)[l].h.push_back(h_new);
        }
        state.h[l] = std::move(h_new);
        x = state.h[l];
    }
    Vec logits(p.dims.tgt_vocab);
    kern::matvec(p.w_out.a.data(), p.dims.tgt_vocab, p.dims.hidden, state.h.back().data(),
                 logits.data());
    for (std::size_t i = 0; i < logits.size(); ++i) logits[i] += p.b_out[i];
    return logits;
}

}  // namespace

Vec decoder_step(const ModelParams& p, DecoderState& state, int y_prev, const Vec& context) {
    return decoder_step_traced(p, state, y_prev, context, nullptr);
}

double ForwardTrace::replay_loss() const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const ExampleTrace& ex : examples) {
        for (std::size_t t = 0; t < ex.golds.size(); ++t) {
            sum += -std::log(ex.probs[t][static_cast<std::size_t>(ex.golds[t])]);
            ++count;
        }
    }
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

ForwardResult forward_loss(const ModelParams& p, std::span<const Example> batch,
                           ContextMode mode) {
    ForwardResult res;
    res.trace.mode = mode;
    double loss_sum = 0.0;
    std::size_t n_targets = 0;

    for (const Example& example : batch) {
        ExampleTrace ext;
        ext.src_ids.assign(example.src_ids.begin(),
                           example.src_ids.begin() + static_cast<std::ptrdiff_t>(example.src_len));
        ext.token_idx.assign(example.token_idx.begin(),
                             example.token_idx.begin() +
                                 static_cast<std::ptrdiff_t>(example.src_len));

        // teacher forcing: inputs are gold shifted right by GO
        for (std::size_t t = 0; t + 1 < example.tgt_len; ++t) {
            ext.dec_inputs.push_back(example.tgt_ids[t]);
            ext.golds.push_back(example.tgt_ids[t + 1]);
        }
        if (ext.golds.empty()) continue;

        EncodeResult enc = encode_traced(p, ext.src_ids, ext.token_idx, &ext.enc);
        ext.enc_top = std::move(enc.top_states);
        ext.weights = std::move(enc.weights);

        DecoderState dec_state{enc.final_state};
        ext.dec.assign(p.dims.layers, GruLayerTrace{});
        for (std::size_t t = 0; t < ext.dec_inputs.size(); ++t) {
            const Vec& query = dec_state.h.back();  // d_{top, t-1}
            Matrix u;
            Vec scores = attention_scores_traced(p.attn, query, ext.enc_top, &u);
            Vec alpha = attention_weights(scores);
            Vec ctx = context_vector(alpha, ext.weights, ext.enc_top, mode);
            Vec logits = decoder_step_traced(p, dec_state, ext.dec_inputs[t], ctx, &ext.dec);

            Vec probs = softmax(logits);
            const int gold = ext.golds[t];
            if (gold < 0 || static_cast<std::size_t>(gold) >= probs.size())
                throw DataError("gold id out of range");
            loss_sum += -std::log(probs[static_cast<std::size_t>(gold)]);
            ++n_targets;

            ext.att_u.push_back(std::move(u));
            ext.alpha.push_back(std::move(alpha));
            ext.context.push_back(std::move(ctx));
            ext.probs.push_back(std::move(probs));
        }
        res.trace.examples.push_back(std::move(ext));
    }

    if (n_targets == 0) throw DataError("forward_loss: batch has no non-PAD targets");
    res.loss = loss_sum / static_cast<double>(n_targets);
    res.trace.loss = res.loss;
    res.trace.n_targets = n_targets;
    return res;
}

}  // namespace c2c
