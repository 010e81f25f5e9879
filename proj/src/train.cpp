#include "c2c/train.hpp"
#include <cstdio>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "c2c/backward.hpp"
#include "c2c/errors.hpp"
#include "c2c/kernels.hpp"
#include "c2c/rng.hpp"

namespace c2c {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<Bucket> parse_buckets(const std::string& value) {
    // "40:15,55:20,70:40,220:60"
    std::vector<Bucket> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError("bad bucket spec: " + item);
        Bucket b;
        b.src_cap = std::stoul(item.substr(0, colon));
        b.tgt_cap = std::stoul(item.substr(colon + 1));
        if (b.src_cap == 0 || b.tgt_cap == 0) throw ConfigError("bucket caps must be positive");
        if (!out.empty() && (b.src_cap <= out.back().src_cap || b.tgt_cap <= out.back().tgt_cap))
            throw ConfigError("buckets must be strictly increasing in both caps");
        out.push_back(b);
    }
    if (out.empty()) throw ConfigError("empty bucket list");
    return out;
}

ContextMode parse_mode(const std::string& value) {
    if (value == "baseline") return ContextMode::kBaseline;
    if (value == "additive") return ContextMode::kAdditive;
    if (value == "multiplicative") return ContextMode::kMultiplicative;
    throw ConfigError("unknown context mode: " + value);
}

bool parse_bool(const std::string& value) {
    if (value == "true" || value == "1" || value == "on") return true;
    if (value == "false" || value == "0" || value == "off") return false;
    throw ConfigError("expected a boolean, got: " + value);
}

}  // namespace

TrainingConfig TrainingConfig::preset(const std::string& name) {
    TrainingConfig c;
    if (name == "desk") {
        c.embed = 32;
        c.hidden = 64;
    } else if (name == "full") {
        c.embed = 512;
        c.hidden = 1024;
        c.max_iters = 90000;
    } else {
        throw ConfigError("unknown preset: " + name + " (expected desk or full)");
    }
    return c;
}

void TrainingConfig::apply_line(const std::string& raw) {
    const std::size_t eq = raw.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value, got: " + raw);
    const std::string key = trim(raw.substr(0, eq));
    const std::string value = trim(raw.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError("expected key = value, got: " + raw);

    if (key == "preset") {
        const TrainingConfig base = preset(value);
        embed = base.embed;
        hidden = base.hidden;
        if (value == "full") max_iters = base.max_iters;
    } else if (key == "lr0") {
        lr0 = std::stod(value);
    } else if (key == "decay") {
        decay = std::stod(value);
        if (decay <= 0.0 || decay >= 1.0) throw ConfigError("decay must be in (0,1)");
    } else if (key == "patience") {
        patience = std::stoul(value);
        if (patience < 1) throw ConfigError("patience must be >= 1");
    } else if (key == "clip") {
        clip = std::stod(value);
    } else if (key == "buckets") {
        buckets = parse_buckets(value);
    } else if (key == "embed") {
        embed = std::stoul(value);
    } else if (key == "hidden") {
        hidden = std::stoul(value);
    } else if (key == "layers") {
        layers = std::stoul(value);
        if (layers < 1) throw ConfigError("layers must be >= 1");
    } else if (key == "batch") {
        batch = std::stoul(value);
        if (batch < 1) throw ConfigError("batch must be >= 1");
    } else if (key == "max_iters") {
        max_iters = std::stoul(value);
    } else if (key == "beam") {
        beam = std::stoul(value);
        if (beam < 1) throw ConfigError("beam must be >= 1");
    } else if (key == "checkpoint_every") {
        checkpoint_every = std::stoul(value);
    } else if (key == "vocab_cap") {
        vocab_cap = std::stoul(value);
    } else if (key == "seed") {
        seed = std::stoull(value);
    } else if (key == "mode") {
        mode = parse_mode(value);
    } else if (key == "ident_order") {
        ident_order = parse_bool(value);
    } else {
        throw ConfigError("unknown config key: " + key);
    }
}

TrainingConfig TrainingConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config file: " + path);
    TrainingConfig c;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        c.apply_line(line);
    }
    return c;
}

AblationConfig build_ablation_config(int row) {
    switch (row) {
        case 1: return {false, ContextMode::kBaseline};
        case 2: return {true, ContextMode::kBaseline};
        case 3: return {true, ContextMode::kAdditive};
        case 4: return {true, ContextMode::kMultiplicative};
        default: throw ConfigError("ablation row out of range: " + std::to_string(row));
    }
}

LrState adapt_lr(LrState state, double new_loss, const TrainingConfig& config) {
    if (new_loss < state.best_loss) {
        state.best_loss = new_loss;
        state.iters_since_improvement = 0;
        return state;
    }
    ++state.iters_since_improvement;
    if (state.iters_since_improvement >= config.patience) {
        state.current_lr *= config.decay;
        state.iters_since_improvement = 0;
    }
    return state;
}

void sgd_step(ModelParams& params, const ModelParams& grads, double lr, double clip,
              std::vector<std::string>* diagnostics) {
    double norm_sq = 0.0;
    visit_tensors(grads, [&](const std::string&, const Vec& g) {
        norm_sq += kern::norm_sq(g.data(), g.size());
    });
    if (!std::isfinite(norm_sq)) {
        if (diagnostics) diagnostics->push_back("non-finite gradient; step skipped");
        return;
    }
    const double norm = std::sqrt(norm_sq);
    double step = -lr;
    if (clip > 0.0 && norm > clip) step *= clip / norm;

    // walk parameters and gradients in lockstep (same canonical order)
    std::vector<std::pair<const std::string, const Vec*>> g_list;
    visit_tensors(grads, [&](const std::string& name, const Vec& g) {
        g_list.emplace_back(name, &g);
    });
    std::size_t i = 0;
    visit_tensors(params, [&](const std::string& name, Vec& theta) {
        if (i >= g_list.size() || g_list[i].first != name)
            throw ComputeError("gradient/parameter tensor mismatch at " + name);
        kern::axpy(step, g_list[i].second->data(), theta.data(), theta.size());
        ++i;
    });
}

std::map<std::string, Vec> encode_opt_state(std::size_t iter, const LrState& lr) {
    return {{kOptStateTensor,
             Vec{static_cast<double>(iter), lr.current_lr, lr.best_loss,
                 static_cast<double>(lr.iters_since_improvement)}}};
}

TrainResult train_loop(const TrainingConfig& config, const ModelDims& dims,
                       const std::vector<Example>& examples, const TrainOptions& options) {
    if (examples.empty()) throw ConfigError("train_loop: empty dataset");

    // group example indices per bucket, in bucket-list order
    std::vector<std::vector<std::size_t>> by_bucket(config.buckets.size());
    for (std::size_t i = 0; i < examples.size(); ++i) {
        bool placed = false;
        for (std::size_t b = 0; b < config.buckets.size(); ++b) {
            if (examples[i].bucket == config.buckets[b]) {
                by_bucket[b].push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) throw ConfigError("example assigned to a bucket outside the configured list");
    }
    std::vector<std::size_t> cumulative;  // for proportional bucket sampling
    std::size_t total = 0;
    for (const auto& bucket : by_bucket) {
        total += bucket.size();
        cumulative.push_back(total);
    }

    TrainResult res;
    std::size_t start_iter = 0;
    LrState lr_state = make_lr_state(config);
    if (options.resume) {
        res.params = options.resume->params;
        auto it = options.resume->extra.find(kOptStateTensor);
        if (it != options.resume->extra.end() && it->second.size() == 4) {
            start_iter = static_cast<std::size_t>(it->second[0]);
            lr_state.current_lr = it->second[1];
            lr_state.best_loss = it->second[2];
            lr_state.iters_since_improvement = static_cast<std::size_t>(it->second[3]);
        }
    } else {
        res.params = ModelParams::init(dims, config.seed);
    }

    res.iterations = start_iter;

    auto save = [&](std::size_t iter, const LrState& lr) {
        std::map<std::string, Vec> extra = options.extra_tensors;
        extra.merge(encode_opt_state(iter, lr));
        save_checkpoint(options.checkpoint_path, res.params, extra);
    };

    std::vector<std::string> diagnostics;
    for (std::size_t iter = start_iter + 1; iter <= config.max_iters; ++iter) {
        Rng rng(derive_seed(config.seed, /*stream=*/2, iter));

        const std::size_t pick = static_cast<std::size_t>(rng.below(total));
        std::size_t bucket_idx = 0;
        while (pick >= cumulative[bucket_idx]) ++bucket_idx;
        const auto& pool = by_bucket[bucket_idx];

        std::vector<Example> batch;
        batch.reserve(config.batch);
        for (std::size_t k = 0; k < config.batch; ++k)
            batch.push_back(examples[pool[rng.below(pool.size())]]);

        ForwardResult fwd = forward_loss(res.params, batch, config.mode);
        ModelParams grads = backward(fwd.trace, res.params);
        lr_state = adapt_lr(lr_state, fwd.loss, config);
        sgd_step(res.params, grads, lr_state.current_lr, config.clip, &diagnostics);

        if (options.log)
            options.log->push_back({iter, bucket_idx, fwd.loss, lr_state.current_lr});
        res.iterations = iter;

        if (!options.checkpoint_path.empty() && config.checkpoint_every > 0 &&
            iter % config.checkpoint_every == 0 && iter != config.max_iters) {
            save(iter, lr_state);
        }
        if (options.should_stop && options.should_stop(iter, res.params)) break;
    }

    for (const std::string& d : diagnostics) std::fprintf(stderr, "warning: %s\n", d.c_str());

    res.lr_state = lr_state;
    if (!options.checkpoint_path.empty()) save(res.iterations, lr_state);
    return res;
}

}  // namespace c2c
