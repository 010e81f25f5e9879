#include "c2c/backward.hpp"

#include <cassert>

#include "c2c/kernels.hpp"

namespace c2c {

namespace {

// Reverse of one gru_cell evaluation. dh is the loss gradient at the cell
// output; parameter gradients accumulate into `g`, input gradients into
// dh_prev_acc / dx_acc.
void gru_backward(const GruParams& p, GruParams& g, const Vec& h_prev, const Vec& x, const Vec& z,
                  const Vec& r, const Vec& hbar, const Vec& dh, Vec& dh_prev_acc, Vec& dx_acc) {
    const std::size_t hidden = h_prev.size();
    const std::size_t input = x.size();

    Vec da_z(hidden), da_h(hidden), drh(hidden);
    for (std::size_t i = 0; i < hidden; ++i) {
        const double dhi = dh[i];
        da_z[i] = dhi * (hbar[i] - h_prev[i]) * z[i] * (1.0 - z[i]);
        da_h[i] = dhi * z[i] * (1.0 - hbar[i] * hbar[i]);
        dh_prev_acc[i] += dhi * (1.0 - z[i]);
    }

    // candidate path: hbar = tanh(W_h [r (.) h_prev, x] + b_h)
    Vec rh(hidden);
    kern::hadamard(r.data(), h_prev.data(), rh.data(), hidden);
    const Vec rhx = concat(rh, x);
    kern::outer_acc(da_h.data(), hidden, rhx.data(), hidden + input, g.w_h.a.data());
    for (std::size_t i = 0; i < hidden; ++i) g.b_h[i] += da_h[i];

    Vec d_rhx(hidden + input, 0.0);
    kern::matvec_t_acc(p.w_h.a.data(), hidden, hidden + input, da_h.data(), d_rhx.data());
    Vec da_r(hidden);
    for (std::size_t i = 0; i < hidden; ++i) {
        drh[i] = d_rhx[i];
        dh_prev_acc[i] += drh[i] * r[i];
        da_r[i] = drh[i] * h_prev[i] * r[i] * (1.0 - r[i]);
    }
    for (std::size_t k = 0; k < input; ++k) dx_acc[k] += d_rhx[hidden + k];

    // gate paths share the concatenated input [h_prev, x]
    const Vec hx = concat(h_prev, x);
    kern::outer_acc(da_z.data(), hidden, hx.data(), hidden + input, g.w_z.a.data());
    kern::outer_acc(da_r.data(), hidden, hx.data(), hidden + input, g.w_r.a.data());
    for (std::size_t i = 0; i < hidden; ++i) {
        g.b_z[i] += da_z[i];
        g.b_r[i] += da_r[i];
    }
    Vec d_hx(hidden + input, 0.0);
    kern::matvec_t_acc(p.w_z.a.data(), hidden, hidden + input, da_z.data(), d_hx.data());
    kern::matvec_t_acc(p.w_r.a.data(), hidden, hidden + input, da_r.data(), d_hx.data());
    for (std::size_t i = 0; i < hidden; ++i) dh_prev_acc[i] += d_hx[i];
    for (std::size_t k = 0; k < input; ++k) dx_acc[k] += d_hx[hidden + k];
}

struct ExampleBackward {
    const ModelParams& p;
    ModelParams& g;
    const ExampleTrace& ex;
    ContextMode mode;
    double inv_n;  // 1 / (total non-PAD targets in the batch)

    std::size_t hidden;
    std::size_t layers;
    std::size_t t_len;   // source length
    std::size_t k_len;   // decoded steps
    Matrix d_enc_top;    // gradient wrt each top-layer encoder state

    ExampleBackward(const ModelParams& params, ModelParams& grads, const ExampleTrace& trace,
                    ContextMode m, double inv_n_targets)
        : p(params),
          g(grads),
          ex(trace),
          mode(m),
          inv_n(inv_n_targets),
          hidden(params.dims.hidden),
          layers(params.dims.layers),
          t_len(trace.src_ids.size()),
          k_len(trace.dec_inputs.size()),
          d_enc_top(trace.src_ids.size(), params.dims.hidden) {}

    const Vec& dec_state_before(std::size_t layer, std::size_t t) const {
        return t == 0 ? ex.enc[layer].h[t_len - 1] : ex.dec[layer].h[t - 1];
    }

    Vec embed_row(const Matrix& table, int id) const {
        const double* r = table.row(static_cast<std::size_t>(id));
        return Vec(r, r + table.cols);
    }

    // context and score paths for one decoder step; dq_acc collects the
    // gradient wrt the query state d_{top, t-1}.
    void attention_backward(std::size_t t, const Vec& dc, Vec& dq_acc) {
        const Vec& alpha = ex.alpha[t];
        const Matrix& u = ex.att_u[t];
        const Vec& q = dec_state_before(layers - 1, t);

        // context combination
        Vec d_alpha(t_len);
        Vec g_i(hidden);
        for (std::size_t i = 0; i < t_len; ++i) {
            const double* e = ex.enc_top.row(i);
            const double* w = ex.weights.row(i);
            double* de = d_enc_top.row(i);
            double* dw = g.attn.f.row(static_cast<std::size_t>(ex.token_idx[i]));
            switch (mode) {
                case ContextMode::kMultiplicative:
                    kern::hadamard(w, e, g_i.data(), hidden);
                    for (std::size_t k = 0; k < hidden; ++k) {
                        de[k] += alpha[i] * dc[k] * w[k];
                        dw[k] += alpha[i] * dc[k] * e[k];
                    }
                    break;
                case ContextMode::kAdditive:
                    kern::add(w, e, g_i.data(), hidden);
                    for (std::size_t k = 0; k < hidden; ++k) {
                        de[k] += alpha[i] * dc[k];
                        dw[k] += alpha[i] * dc[k];
                    }
                    break;
                case ContextMode::kBaseline:
                    std::copy(e, e + hidden, g_i.begin());
                    kern::axpy(alpha[i], dc.data(), de, hidden);
                    break;
            }
            d_alpha[i] = kern::dot(dc.data(), g_i.data(), hidden);
        }

        // softmax: ds_i = a_i (d_alpha_i - sum_j a_j d_alpha_j)
        double mix = 0.0;
        for (std::size_t i = 0; i < t_len; ++i) mix += alpha[i] * d_alpha[i];
        Vec ds(t_len);
        for (std::size_t i = 0; i < t_len; ++i) ds[i] = alpha[i] * (d_alpha[i] - mix);

        // scores: s_i = v . tanh(W_d q + W_e e_i)
        Vec da(hidden);
        for (std::size_t i = 0; i < t_len; ++i) {
            const double* u_i = u.row(i);
            kern::axpy(ds[i], u_i, g.attn.v.data(), hidden);
            for (std::size_t k = 0; k < hidden; ++k)
                da[k] = ds[i] * p.attn.v[k] * (1.0 - u_i[k] * u_i[k]);
            kern::outer_acc(da.data(), hidden, q.data(), hidden, g.attn.w_d.a.data());
            kern::outer_acc(da.data(), hidden, ex.enc_top.row(i), hidden, g.attn.w_e.a.data());
            kern::matvec_t_acc(p.attn.w_d.a.data(), hidden, hidden, da.data(), dq_acc.data());
            kern::matvec_t_acc(p.attn.w_e.a.data(), hidden, hidden, da.data(), d_enc_top.row(i));
        }
    }

    // Returns the gradients wrt the decoder initial states (= encoder finals).
    std::vector<Vec> run_decoder() {
        std::vector<Vec> dd(layers, Vec(hidden, 0.0));
        std::vector<Vec> dd_prev(layers, Vec(hidden, 0.0));

        for (std::size_t t = k_len; t-- > 0;) {
            // logits = W_o d_top + b_o; dlogits = (softmax - onehot) / N
            Vec dlogits = ex.probs[t];
            dlogits[static_cast<std::size_t>(ex.golds[t])] -= 1.0;
            kern::scale(inv_n, dlogits.data(), dlogits.size());

            const Vec& d_top = ex.dec[layers - 1].h[t];
            kern::outer_acc(dlogits.data(), dlogits.size(), d_top.data(), hidden,
                            g.w_out.a.data());
            for (std::size_t i = 0; i < dlogits.size(); ++i) g.b_out[i] += dlogits[i];
            kern::matvec_t_acc(p.w_out.a.data(), dlogits.size(), hidden, dlogits.data(),
                               dd[layers - 1].data());

            Vec dc(hidden, 0.0);
            for (std::size_t l = layers; l-- > 0;) {
                const Vec& h_prev = dec_state_before(l, t);
                Vec base_x = l == 0 ? embed_row(p.e_tgt, ex.dec_inputs[t]) : ex.dec[l - 1].h[t];
                const bool top = (l + 1 == layers);
                const Vec x = top ? concat(base_x, ex.context[t]) : std::move(base_x);

                Vec dx(x.size(), 0.0);
                gru_backward(p.decoder[l], g.decoder[l], h_prev, x, ex.dec[l].z[t], ex.dec[l].r[t],
                             ex.dec[l].hbar[t], dd[l], dd_prev[l], dx);

                const std::size_t base_len = x.size() - (top ? hidden : 0);
                if (top)
                    for (std::size_t k = 0; k < hidden; ++k) dc[k] += dx[base_len + k];
                if (l > 0) {
                    for (std::size_t k = 0; k < base_len; ++k) dd[l - 1][k] += dx[k];
                } else {
                    double* row = g.e_tgt.row(static_cast<std::size_t>(ex.dec_inputs[t]));
                    for (std::size_t k = 0; k < base_len; ++k) row[k] += dx[k];
                }
            }

            attention_backward(t, dc, dd_prev[layers - 1]);

            dd.swap(dd_prev);
            for (Vec& v : dd_prev) std::fill(v.begin(), v.end(), 0.0);
        }
        return dd;
    }

    void run_encoder(std::vector<Vec> d_init) {
        std::vector<Vec> denc(layers, Vec(hidden, 0.0));
        std::vector<Vec> denc_prev(layers, Vec(hidden, 0.0));
        const Vec zeros(hidden, 0.0);

        for (std::size_t t = t_len; t-- > 0;) {
            for (std::size_t k = 0; k < hidden; ++k)
                denc[layers - 1][k] += d_enc_top.at(t, k);
            if (t == t_len - 1)
                for (std::size_t l = 0; l < layers; ++l)
                    for (std::size_t k = 0; k < hidden; ++k) denc[l][k] += d_init[l][k];

            for (std::size_t l = layers; l-- > 0;) {
                const Vec& h_prev = t == 0 ? zeros : ex.enc[l].h[t - 1];
                const Vec x =
                    l == 0 ? embed_row(p.e_src, ex.src_ids[t]) : ex.enc[l - 1].h[t];
                Vec dx(x.size(), 0.0);
                gru_backward(p.encoder[l], g.encoder[l], h_prev, x, ex.enc[l].z[t], ex.enc[l].r[t],
                             ex.enc[l].hbar[t], denc[l], denc_prev[l], dx);
                if (l > 0) {
                    for (std::size_t k = 0; k < x.size(); ++k) denc[l - 1][k] += dx[k];
                } else {
                    double* row = g.e_src.row(static_cast<std::size_t>(ex.src_ids[t]));
                    for (std::size_t k = 0; k < x.size(); ++k) row[k] += dx[k];
                }
            }

            denc.swap(denc_prev);
            for (Vec& v : denc_prev) std::fill(v.begin(), v.end(), 0.0);
        }
    }

    void run() { run_encoder(run_decoder()); }
};

}  // namespace

ModelParams backward(const ForwardTrace& trace, const ModelParams& params) {
    ModelParams grads = ModelParams::zeros_like(params);
    const double inv_n = 1.0 / static_cast<double>(trace.n_targets);
    for (const ExampleTrace& ex : trace.examples) {
        ExampleBackward eb(params, grads, ex, trace.mode, inv_n);
        eb.run();
    }
    return grads;
}

}  // namespace c2c
