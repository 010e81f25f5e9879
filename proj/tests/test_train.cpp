#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "c2c/errors.hpp"
#include "c2c/rng.hpp"
#include "c2c/train.hpp"

using namespace c2c;

namespace {

Example make_ex(std::vector<int> src, std::vector<int> tgt_inner, Bucket bucket) {
    Example ex;
    ex.id = "e" + std::to_string(src[0]);
    ex.src_len = src.size();
    ex.tgt_len = tgt_inner.size() + 2;
    ex.src_ids = std::move(src);
    ex.src_ids.resize(bucket.src_cap, Vocabulary::kPad);
    ex.token_idx = ex.src_ids;
    ex.tgt_ids.push_back(Vocabulary::kGo);
    for (int t : tgt_inner) ex.tgt_ids.push_back(t);
    ex.tgt_ids.push_back(Vocabulary::kEos);
    ex.tgt_ids.resize(bucket.tgt_cap, Vocabulary::kPad);
    ex.bucket = bucket;
    return ex;
}

// a small copy-task dataset: target repeats a function of the source ids
std::vector<Example> toy_dataset(const Bucket& bucket, std::size_t vocab) {
    std::vector<Example> out;
    for (int a = 4; a < static_cast<int>(vocab); ++a) {
        const int b = 4 + (a + 1) % static_cast<int>(vocab - 4);
        out.push_back(make_ex({a, b}, {a, b}, bucket));
    }
    return out;
}

TrainingConfig tiny_config() {
    TrainingConfig c;
    c.embed = 4;
    c.hidden = 8;
    c.layers = 3;
    c.batch = 4;
    c.max_iters = 30;
    c.buckets = {{6, 6}};
    c.checkpoint_every = 0;
    c.seed = 5;
    return c;
}

ModelDims dims_for(const TrainingConfig& c, std::size_t vocab) {
    ModelDims d;
    d.src_vocab = vocab;
    d.tgt_vocab = vocab;
    d.embed = c.embed;
    d.hidden = c.hidden;
    d.layers = c.layers;
    d.mode = c.mode;
    return d;
}

}  // namespace

TEST_CASE("adapt_lr: improvements hold the rate, stale windows decay it") {
    TrainingConfig config;
    config.patience = 3000;

    LrState st = make_lr_state(config);
    st = adapt_lr(st, 5.0, config);  // first observation improves on +inf
    CHECK(st.current_lr == 0.5);
    CHECK(st.best_loss == 5.0);

    // improvement before the window closes keeps lr at 0.5
    for (int i = 0; i < 2999; ++i) st = adapt_lr(st, 5.0, config);
    st = adapt_lr(st, 4.0, config);
    CHECK(st.current_lr == 0.5);
    CHECK(st.iters_since_improvement == 0);

    // 3000 consecutive non-improving iterations -> one decay
    for (int i = 0; i < 3000; ++i) st = adapt_lr(st, 4.0, config);
    CHECK(st.current_lr == doctest::Approx(0.495).epsilon(1e-12));
    CHECK(st.iters_since_improvement == 0);

    // a second full stale window compounds
    for (int i = 0; i < 3000; ++i) st = adapt_lr(st, 4.0, config);
    CHECK(st.current_lr == doctest::Approx(0.5 * 0.99 * 0.99).epsilon(1e-12));
}

TEST_CASE("lr is non-increasing across any loss stream") {
    TrainingConfig config;
    config.patience = 5;
    LrState st = make_lr_state(config);
    Rng rng(3);
    double prev = st.current_lr;
    for (int i = 0; i < 500; ++i) {
        st = adapt_lr(st, rng.uniform(0.0, 10.0), config);
        CHECK(st.current_lr <= prev);
        prev = st.current_lr;
    }
}

TEST_CASE("sgd_step: zero gradients and zero lr are fixed points") {
    ModelDims d = dims_for(tiny_config(), 10);
    ModelParams p = ModelParams::init(d, 1);
    ModelParams zero = ModelParams::zeros_like(p);
    ModelParams before = p;
    sgd_step(p, zero, 0.5, 5.0);
    CHECK(p.e_src.a == before.e_src.a);
    CHECK(p.w_out.a == before.w_out.a);

    ModelParams grads = ModelParams::zeros_like(p);
    grads.e_src.a[0] = 1.0;
    sgd_step(p, grads, 0.0, 5.0);
    CHECK(p.e_src.a == before.e_src.a);
}

TEST_CASE("sgd_step matches a hand-computed quadratic update") {
    // L(theta) = 0.5 theta^2 on two scalars: grad = theta
    ModelDims d = dims_for(tiny_config(), 10);
    ModelParams p = ModelParams::init(d, 2);
    ModelParams grads = ModelParams::zeros_like(p);
    const double t0 = p.e_src.a[0], t1 = p.e_src.a[1];
    grads.e_src.a[0] = t0;
    grads.e_src.a[1] = t1;
    sgd_step(p, grads, 0.1, 1e9);  // clip inactive
    CHECK(p.e_src.a[0] == doctest::Approx(t0 - 0.1 * t0).epsilon(1e-15));
    CHECK(p.e_src.a[1] == doctest::Approx(t1 - 0.1 * t1).epsilon(1e-15));
}

TEST_CASE("sgd_step clips the global norm") {
    ModelDims d = dims_for(tiny_config(), 10);
    ModelParams p = ModelParams::init(d, 3);
    ModelParams grads = ModelParams::zeros_like(p);
    grads.e_src.a[0] = 30.0;
    grads.e_src.a[1] = 40.0;  // norm 50
    const double t0 = p.e_src.a[0];
    sgd_step(p, grads, 1.0, 5.0);  // scaled by 5/50
    CHECK(p.e_src.a[0] == doctest::Approx(t0 - 3.0).epsilon(1e-12));
}

TEST_CASE("sgd_step skips non-finite gradients with a diagnostic") {
    ModelDims d = dims_for(tiny_config(), 10);
    ModelParams p = ModelParams::init(d, 4);
    ModelParams before = p;
    ModelParams grads = ModelParams::zeros_like(p);
    grads.e_src.a[0] = std::nan("");
    std::vector<std::string> diags;
    sgd_step(p, grads, 0.5, 5.0, &diags);
    CHECK(p.e_src.a == before.e_src.a);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("non-finite") != std::string::npos);
}

TEST_CASE("train_loop drops the loss under the uniform baseline") {
    TrainingConfig config = tiny_config();
    config.max_iters = 150;
    const std::size_t vocab = 12;
    auto data = toy_dataset(config.buckets[0], vocab);

    std::vector<TrainLogEntry> log;
    TrainOptions opts;
    opts.log = &log;
    train_loop(config, dims_for(config, vocab), data, opts);

    REQUIRE(log.size() == config.max_iters);
    const double uniform = std::log(static_cast<double>(vocab));
    CHECK(log.front().loss == doctest::Approx(uniform).epsilon(0.05));
    CHECK(log.back().loss < uniform);
}

TEST_CASE("desk preset drops below the uniform baseline within 200 iterations") {
    // 100 pairs, dims 32/64, bucket (40,15)
    TrainingConfig config;
    config.embed = 32;
    config.hidden = 64;
    config.batch = 4;
    config.max_iters = 200;
    config.buckets = {{40, 15}};
    config.checkpoint_every = 0;
    config.seed = 13;

    const std::size_t vocab = 40;
    std::vector<Example> data;
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        std::vector<int> src, tgt;
        for (std::size_t k = 0, n = 3 + rng.below(10); k < n; ++k)
            src.push_back(4 + static_cast<int>(rng.below(vocab - 4)));
        for (std::size_t k = 0, n = 2 + rng.below(6); k < n; ++k)
            tgt.push_back(4 + static_cast<int>(rng.below(vocab - 4)));
        data.push_back(make_ex(std::move(src), std::move(tgt), {40, 15}));
    }

    std::vector<TrainLogEntry> log;
    TrainOptions opts;
    opts.log = &log;
    train_loop(config, dims_for(config, vocab), data, opts);
    REQUIRE(log.size() == 200);
    CHECK(log.back().loss < std::log(static_cast<double>(vocab)));
}

TEST_CASE("same seed gives an identical loss trajectory") {
    TrainingConfig config = tiny_config();
    const std::size_t vocab = 10;
    auto data = toy_dataset(config.buckets[0], vocab);

    std::vector<TrainLogEntry> log1, log2;
    TrainOptions o1, o2;
    o1.log = &log1;
    o2.log = &log2;
    auto r1 = train_loop(config, dims_for(config, vocab), data, o1);
    auto r2 = train_loop(config, dims_for(config, vocab), data, o2);
    REQUIRE(log1.size() == log2.size());
    for (std::size_t i = 0; i < log1.size(); ++i) {
        CHECK(log1[i].loss == log2[i].loss);
        CHECK(log1[i].bucket_index == log2[i].bucket_index);
    }
    CHECK(r1.params.w_out.a == r2.params.w_out.a);
}

TEST_CASE("checkpoint reload resumes with the identical next-step loss") {
    namespace fs = std::filesystem;
    const std::string ckpt = (fs::temp_directory_path() / "c2c_resume_test.ckpt").string();

    TrainingConfig config = tiny_config();
    config.max_iters = 20;
    config.checkpoint_every = 10;
    const std::size_t vocab = 10;
    auto data = toy_dataset(config.buckets[0], vocab);

    std::vector<TrainLogEntry> full_log;
    TrainOptions full_opts;
    full_opts.log = &full_log;
    full_opts.checkpoint_path = ckpt;
    train_loop(config, dims_for(config, vocab), data, full_opts);

    // rerun the first half only, then resume from its checkpoint
    TrainingConfig half = config;
    half.max_iters = 10;
    std::vector<TrainLogEntry> half_log;
    TrainOptions half_opts;
    half_opts.log = &half_log;
    half_opts.checkpoint_path = ckpt;
    train_loop(half, dims_for(config, vocab), data, half_opts);

    Checkpoint saved = load_checkpoint(ckpt);
    std::vector<TrainLogEntry> resume_log;
    TrainOptions resume_opts;
    resume_opts.log = &resume_log;
    resume_opts.resume = &saved;
    train_loop(config, dims_for(config, vocab), data, resume_opts);

    REQUIRE(resume_log.size() == 10);
    for (std::size_t i = 0; i < resume_log.size(); ++i) {
        CHECK(resume_log[i].iter == full_log[10 + i].iter);
        CHECK(resume_log[i].loss == full_log[10 + i].loss);
    }
    std::remove(ckpt.c_str());
}

TEST_CASE("resuming at max_iters keeps the optimizer state intact") {
    namespace fs = std::filesystem;
    const std::string ckpt = (fs::temp_directory_path() / "c2c_resume_edge.ckpt").string();

    TrainingConfig config = tiny_config();
    config.max_iters = 8;
    const std::size_t vocab = 10;
    auto data = toy_dataset(config.buckets[0], vocab);

    TrainOptions opts;
    opts.checkpoint_path = ckpt;
    train_loop(config, dims_for(config, vocab), data, opts);

    Checkpoint saved = load_checkpoint(ckpt);
    TrainOptions resume_opts;
    resume_opts.checkpoint_path = ckpt;
    resume_opts.resume = &saved;
    auto res = train_loop(config, dims_for(config, vocab), data, resume_opts);
    CHECK(res.iterations == 8);  // no new steps, the resumed count stands

    Checkpoint resaved = load_checkpoint(ckpt);
    CHECK(resaved.extra.at(kOptStateTensor)[0] == 8.0);
    CHECK(resaved.params.w_out.a == saved.params.w_out.a);
    std::remove(ckpt.c_str());
}

TEST_CASE("empty dataset is a configuration error") {
    TrainingConfig config = tiny_config();
    CHECK_THROWS_AS(train_loop(config, dims_for(config, 10), {}, {}), ConfigError);
}

TEST_CASE("ablation rows map to the table configurations") {
    CHECK(build_ablation_config(1).ident_order == false);
    CHECK(build_ablation_config(1).mode == ContextMode::kBaseline);
    CHECK(build_ablation_config(2).ident_order == true);
    CHECK(build_ablation_config(2).mode == ContextMode::kBaseline);
    CHECK(build_ablation_config(3).mode == ContextMode::kAdditive);
    CHECK(build_ablation_config(4).mode == ContextMode::kMultiplicative);
    CHECK(build_ablation_config(3).ident_order == true);
    CHECK(build_ablation_config(4).ident_order == true);
    CHECK_THROWS_AS(build_ablation_config(0), ConfigError);
    CHECK_THROWS_AS(build_ablation_config(5), ConfigError);
}

TEST_CASE("config files parse key = value lines and reject unknown keys") {
    namespace fs = std::filesystem;
    const std::string path = (fs::temp_directory_path() / "c2c_cfg_test.cfg").string();
    {
        std::ofstream out(path);
        out << "# toy settings\n"
            << "preset = desk\n"
            << "lr0 = 0.25\n"
            << "batch = 8\n"
            << "buckets = 10:5,20:9\n"
            << "mode = additive\n";
    }
    TrainingConfig c = TrainingConfig::from_file(path);
    CHECK(c.embed == 32);
    CHECK(c.hidden == 64);
    CHECK(c.lr0 == 0.25);
    CHECK(c.batch == 8);
    REQUIRE(c.buckets.size() == 2);
    CHECK(c.buckets[1].tgt_cap == 9);
    CHECK(c.mode == ContextMode::kAdditive);

    {
        std::ofstream out(path);
        out << "no_such_key = 1\n";
    }
    CHECK_THROWS_AS(TrainingConfig::from_file(path), ConfigError);
    std::remove(path.c_str());

    TrainingConfig full = TrainingConfig::preset("full");
    CHECK(full.embed == 512);
    CHECK(full.hidden == 1024);
    CHECK_THROWS_AS(TrainingConfig::preset("huge"), ConfigError);
}
