// c2c: code-to-comment translation toolkit.
//
// Pipeline: prepare -> preprocess -> train -> infer / eval / ablate.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "c2c/backward.hpp"
#include "c2c/beam.hpp"
#include "c2c/checkpoint.hpp"
#include "c2c/corpus.hpp"
#include "c2c/errors.hpp"
#include "c2c/io.hpp"
#include "c2c/lexer.hpp"
#include "c2c/metrics.hpp"
#include "c2c/model.hpp"
#include "c2c/preprocess.hpp"
#include "c2c/train.hpp"
#include "c2c/vocab.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

using namespace c2c;

void print_diagnostics(const std::vector<std::string>& diags) {
    for (const auto& d : diags) std::cerr << "warning: " << d << "\n";
}

std::string format_double(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// ---------------------------------------------------------------------------
// prepare
// ---------------------------------------------------------------------------

int cmd_prepare(const std::string& src_dir, const std::string& out_path,
                std::size_t min_shared) {
    if (!fs::is_directory(src_dir)) throw DataError("not a directory: " + src_dir);

    std::vector<std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(src_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".java")
            files.push_back(entry.path().generic_string());
    }
    std::sort(files.begin(), files.end());

    std::vector<std::string> diags;
    std::vector<PairRecord> pairs;
    for (const std::string& path : files) {
        RawFile file{fs::relative(path, src_dir).generic_string(), read_text_file(path)};
        if (file.contents.empty()) {
            diags.push_back(file.path + ": empty file skipped");
            continue;
        }
        auto snippets = extract_snippets(file, &diags);
        auto comments = extract_comments(file, &diags);
        auto matched = match_pairs(file.path, snippets, comments);
        pairs.insert(pairs.end(), matched.begin(), matched.end());
    }

    auto [kept, report] = clean_pairs(pairs, min_shared);
    write_pairs_jsonl(out_path, kept);

    print_diagnostics(diags);
    std::cerr << "prepare: " << files.size() << " files, " << report.input_pairs
              << " matched pairs, kept " << report.kept << " (removed " << report.removed_non_ascii
              << " non-ascii, " << report.removed_low_overlap << " low-overlap)\n";

    ordered_json config;
    config["src"] = src_dir;
    config["min_shared"] = min_shared;
    write_manifest(out_path, "prepare", config, 0, files, {out_path});
    return 0;
}

// ---------------------------------------------------------------------------
// preprocess
// ---------------------------------------------------------------------------

struct Preprocessed {
    std::vector<TokenRecord> records;
    Vocabulary src_vocab;
    Vocabulary tgt_vocab;
};

Preprocessed preprocess_pairs(const std::vector<PairRecord>& pairs, bool ident_order,
                              std::size_t vocab_cap, std::vector<std::string>* diags) {
    Preprocessed out;
    std::vector<std::vector<std::string>> src_streams, tgt_streams;
    for (const PairRecord& p : pairs) {
        auto tokens = lex_classified(p.code, SymbolDictionary::builtin(), diags);
        if (ident_order) tokens = order_identifiers(tokens, diags);
        TokenRecord rec;
        rec.id = p.id;
        for (const Token& t : tokens) rec.src_tokens.push_back(t.text);
        rec.tgt_tokens = comment_words(p.comment);
        src_streams.push_back(rec.src_tokens);
        tgt_streams.push_back(rec.tgt_tokens);
        out.records.push_back(std::move(rec));
    }
    out.src_vocab = Vocabulary::build(src_streams, vocab_cap);
    out.tgt_vocab = Vocabulary::build(tgt_streams, vocab_cap);
    for (TokenRecord& rec : out.records) rec.token_idx = out.src_vocab.encode(rec.src_tokens);
    return out;
}

int cmd_preprocess(const std::string& in_path, const std::string& out_path, bool ident_order,
                   std::size_t vocab_cap) {
    auto pairs = read_pairs_jsonl(in_path);
    if (pairs.empty()) throw DataError("no pairs in " + in_path);

    std::vector<std::string> diags;
    Preprocessed pre = preprocess_pairs(pairs, ident_order, vocab_cap, &diags);
    write_tokens_jsonl(out_path, pre.records);
    pre.src_vocab.save(out_path + ".src.vocab");
    pre.tgt_vocab.save(out_path + ".tgt.vocab");

    print_diagnostics(diags);
    std::cerr << "preprocess: " << pre.records.size() << " pairs, source vocab "
              << pre.src_vocab.size() << ", target vocab " << pre.tgt_vocab.size() << "\n";

    ordered_json config;
    config["in"] = in_path;
    config["ident_order"] = ident_order;
    config["vocab_cap"] = vocab_cap;
    write_manifest(out_path, "preprocess", config, 0, {in_path},
                   {out_path, out_path + ".src.vocab", out_path + ".tgt.vocab"});
    return 0;
}

// ---------------------------------------------------------------------------
// train
// ---------------------------------------------------------------------------

std::vector<Example> build_examples(const std::vector<TokenRecord>& records,
                                    const Vocabulary& src_vocab, const Vocabulary& tgt_vocab,
                                    const std::vector<Bucket>& buckets, std::size_t* skipped) {
    std::vector<Example> examples;
    for (const TokenRecord& r : records) {
        auto ex = make_example(r.id, r.src_tokens, r.tgt_tokens, src_vocab, tgt_vocab, buckets);
        if (ex)
            examples.push_back(std::move(*ex));
        else if (skipped)
            ++*skipped;
    }
    return examples;
}

ordered_json config_json(const TrainingConfig& c) {
    ordered_json j;
    j["lr0"] = c.lr0;
    j["decay"] = c.decay;
    j["patience"] = c.patience;
    j["clip"] = c.clip;
    std::string buckets;
    for (const Bucket& b : c.buckets) {
        if (!buckets.empty()) buckets += ",";
        buckets += std::to_string(b.src_cap) + ":" + std::to_string(b.tgt_cap);
    }
    j["buckets"] = buckets;
    j["embed"] = c.embed;
    j["hidden"] = c.hidden;
    j["layers"] = c.layers;
    j["batch"] = c.batch;
    j["max_iters"] = c.max_iters;
    j["beam"] = c.beam;
    j["checkpoint_every"] = c.checkpoint_every;
    j["vocab_cap"] = c.vocab_cap;
    j["seed"] = c.seed;
    j["mode"] = context_mode_name(c.mode);
    j["ident_order"] = c.ident_order;
    return j;
}

void write_train_log(const std::string& path, const std::vector<TrainLogEntry>& log) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write training log: " + path);
    out << "iter,bucket,loss,lr\n";
    char buf[128];
    for (const TrainLogEntry& e : log) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%.17g,%.17g\n", e.iter, e.bucket_index, e.loss,
                      e.lr);
        out << buf;
    }
}

int cmd_train(const std::string& data_path, const std::string& config_path,
              const std::string& out_path, int ablation_row, std::int64_t seed_flag,
              const std::string& resume_path) {
    TrainingConfig config =
        config_path.empty() ? TrainingConfig{} : TrainingConfig::from_file(config_path);
    if (ablation_row != 0) {
        const AblationConfig ab = build_ablation_config(ablation_row);
        config.mode = ab.mode;
        config.ident_order = ab.ident_order;
        if (!ab.ident_order)
            std::cerr << "note: ablation row 1 assumes data preprocessed with --no-ident-order\n";
    }
    if (seed_flag >= 0) config.seed = static_cast<std::uint64_t>(seed_flag);

    auto records = read_tokens_jsonl(data_path);
    Vocabulary src_vocab = Vocabulary::load(data_path + ".src.vocab");
    Vocabulary tgt_vocab = Vocabulary::load(data_path + ".tgt.vocab");

    std::size_t skipped = 0;
    auto examples = build_examples(records, src_vocab, tgt_vocab, config.buckets, &skipped);
    if (skipped > 0)
        std::cerr << "note: " << skipped << " pairs exceed every bucket and were skipped\n";
    if (examples.empty()) throw DataError("no trainable examples in " + data_path);

    ModelDims dims;
    dims.src_vocab = src_vocab.size();
    dims.tgt_vocab = tgt_vocab.size();
    dims.embed = config.embed;
    dims.hidden = config.hidden;
    dims.layers = config.layers;
    dims.mode = config.mode;

    TrainOptions options;
    options.checkpoint_path = out_path;
    std::vector<TrainLogEntry> log;
    options.log = &log;
    options.extra_tensors["prep.ident_order"] = Vec{config.ident_order ? 1.0 : 0.0};
    Checkpoint resume;
    if (!resume_path.empty()) {
        resume = load_checkpoint(resume_path);
        if (resume.params.dims.src_vocab != dims.src_vocab ||
            resume.params.dims.tgt_vocab != dims.tgt_vocab)
            throw DataError("resume checkpoint dimensions do not match the data vocabularies");
        options.resume = &resume;
    }

    TrainResult result = train_loop(config, dims, examples, options);

    write_train_log(out_path + ".train.csv", log);
    src_vocab.save(out_path + ".src.vocab");
    tgt_vocab.save(out_path + ".tgt.vocab");

    std::cerr << "train: " << result.iterations << " iterations, final lr "
              << result.lr_state.current_lr << ", last loss "
              << (log.empty() ? 0.0 : log.back().loss) << "\n";

    std::vector<std::string> inputs{data_path, data_path + ".src.vocab",
                                    data_path + ".tgt.vocab"};
    if (!config_path.empty()) inputs.push_back(config_path);
    write_manifest(out_path, "train", config_json(config), config.seed, inputs,
                   {out_path, out_path + ".train.csv", out_path + ".src.vocab",
                    out_path + ".tgt.vocab"});
    return 0;
}

// ---------------------------------------------------------------------------
// infer / eval
// ---------------------------------------------------------------------------

struct LoadedModel {
    Checkpoint ckpt;
    Vocabulary src_vocab;
    Vocabulary tgt_vocab;
    bool ident_order = true;
};

LoadedModel load_model(const std::string& model_path) {
    LoadedModel m;
    m.ckpt = load_checkpoint(model_path);
    m.src_vocab = Vocabulary::load(model_path + ".src.vocab");
    m.tgt_vocab = Vocabulary::load(model_path + ".tgt.vocab");
    if (m.src_vocab.size() != m.ckpt.params.dims.src_vocab ||
        m.tgt_vocab.size() != m.ckpt.params.dims.tgt_vocab)
        throw DataError("vocabulary files do not match checkpoint dimensions");
    auto it = m.ckpt.extra.find("prep.ident_order");
    if (it != m.ckpt.extra.end() && !it->second.empty()) m.ident_order = it->second[0] != 0.0;
    return m;
}

int cmd_infer(const std::string& model_path, const std::string& in_path, std::size_t beam_width,
              std::size_t max_len, const std::string& out_path) {
    LoadedModel m = load_model(model_path);

    std::vector<std::string> diags;
    auto tokens = lex_classified(read_text_file(in_path), SymbolDictionary::builtin(), &diags);
    if (m.ident_order) tokens = order_identifiers(tokens, &diags);
    print_diagnostics(diags);
    if (tokens.empty()) throw DataError("no tokens in " + in_path);

    std::vector<int> src_ids;
    for (const Token& t : tokens) src_ids.push_back(m.src_vocab.id(t.text));
    const std::vector<int>& token_idx = src_ids;  // shared id space

    auto ids = beam_search(m.ckpt.params, src_ids, token_idx, beam_width, max_len);
    std::string comment;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) comment += ' ';
        comment += m.tgt_vocab.token(ids[i]);
    }
    std::cout << comment << "\n";

    if (!out_path.empty()) {
        write_text_file(out_path, comment + "\n");
        ordered_json config;
        config["model"] = model_path;
        config["beam"] = beam_width;
        config["max_len"] = max_len;
        write_manifest(out_path, "infer", config, 0, {model_path, in_path}, {out_path});
    }
    return 0;
}

struct EvalScores {
    BleuReport bleu_report;
    MeteorReport meteor_report;
    std::vector<std::tuple<std::string, double, double>> per_pair;  // id, bleu4, meteor
};

EvalScores evaluate_records(const ModelParams& params, const Vocabulary& src_vocab,
                            const Vocabulary& tgt_vocab, const std::vector<TokenRecord>& records,
                            std::size_t beam_width, std::size_t max_len) {
    EvalScores scores;
    std::vector<TokenList> candidates, references;
    std::vector<std::pair<TokenList, TokenList>> meteor_pairs;
    for (const TokenRecord& r : records) {
        std::vector<int> src_ids = src_vocab.encode(r.src_tokens);
        auto ids = beam_search(params, src_ids, src_ids, beam_width, max_len);
        TokenList cand = tgt_vocab.decode(ids);
        candidates.push_back(cand);
        references.push_back(r.tgt_tokens);
        meteor_pairs.emplace_back(cand, r.tgt_tokens);

        const double pair_bleu4 = bleu({cand}, {r.tgt_tokens}).bleu[3];
        const double pair_meteor = meteor(cand, r.tgt_tokens).score;
        scores.per_pair.emplace_back(r.id, pair_bleu4, pair_meteor);
    }
    scores.bleu_report = bleu(candidates, references);
    scores.meteor_report = corpus_meteor(meteor_pairs);
    return scores;
}

int cmd_eval(const std::string& model_path, const std::string& data_path,
             const std::string& out_path, std::size_t beam_width, std::size_t max_len,
             const std::string& per_pair_csv) {
    LoadedModel m = load_model(model_path);
    auto records = read_tokens_jsonl(data_path);
    if (records.empty()) throw DataError("no records in " + data_path);

    EvalScores scores = evaluate_records(m.ckpt.params, m.src_vocab, m.tgt_vocab, records,
                                         beam_width, max_len);

    ordered_json report;
    report["bleu"] = scores.bleu_report.bleu;
    report["brevity_penalty"] = scores.bleu_report.brevity_penalty;
    ordered_json met;
    met["precision"] = scores.meteor_report.precision;
    met["recall"] = scores.meteor_report.recall;
    met["fMean"] = scores.meteor_report.f_mean;
    met["penalty"] = scores.meteor_report.penalty;
    met["score"] = scores.meteor_report.score;
    report["meteor"] = met;
    write_text_file(out_path, report.dump(2) + "\n");

    if (!per_pair_csv.empty()) {
        std::ofstream csv(per_pair_csv, std::ios::binary | std::ios::trunc);
        if (!csv) throw DataError("cannot write " + per_pair_csv);
        csv << "id,bleu_4,meteor\n";
        for (const auto& [id, b4, met_score] : scores.per_pair)
            csv << id << "," << format_double(b4, 6) << "," << format_double(met_score, 6)
                << "\n";
    }

    std::cout << "BLEU-1..4: ";
    for (double b : scores.bleu_report.bleu) std::cout << format_double(b, 4) << " ";
    std::cout << " (x100: ";
    for (double b : scores.bleu_report.bleu) std::cout << format_double(100.0 * b, 2) << " ";
    std::cout << ")\nMETEOR: " << format_double(scores.meteor_report.score, 4)
              << " (x100: " << format_double(100.0 * scores.meteor_report.score, 2) << ")\n";

    ordered_json config;
    config["model"] = model_path;
    config["beam"] = beam_width;
    config["max_len"] = max_len;
    std::vector<std::string> outputs{out_path};
    if (!per_pair_csv.empty()) outputs.push_back(per_pair_csv);
    write_manifest(out_path, "eval", config, 0, {model_path, data_path}, outputs);
    return 0;
}

// ---------------------------------------------------------------------------
// ablate
// ---------------------------------------------------------------------------

int cmd_ablate(const std::string& data_path, const std::string& config_path,
               const std::string& out_path, std::vector<int> rows, std::int64_t seed_flag) {
    TrainingConfig base =
        config_path.empty() ? TrainingConfig{} : TrainingConfig::from_file(config_path);
    if (seed_flag >= 0) base.seed = static_cast<std::uint64_t>(seed_flag);
    if (rows.empty()) rows = {1, 2, 3, 4};
    for (int r : rows) build_ablation_config(r);  // validate early

    auto pairs = read_pairs_jsonl(data_path);
    if (pairs.empty()) throw DataError("no pairs in " + data_path);

    std::vector<PairRecord> train_pairs, test_pairs;
    for (const PairRecord& p : pairs) {
        const int slot = split_slot(p.id);
        if (slot <= 7)
            train_pairs.push_back(p);
        else if (slot == 9)
            test_pairs.push_back(p);
    }
    if (train_pairs.empty()) train_pairs = pairs;
    if (test_pairs.empty()) {
        std::cerr << "note: empty test split; evaluating on the training split\n";
        test_pairs = train_pairs;
    }

    static const char* kIdent[] = {"", "w/o", "w/", "w/", "w/"};
    static const char* kToken[] = {"", "w/o", "w/o", "w/", "w/"};
    static const char* kAttn[] = {"", "w/o", "w/o", "+", "x"};

    std::ofstream csv(out_path, std::ios::binary | std::ios::trunc);
    if (!csv) throw DataError("cannot write " + out_path);
    csv << "row,bleu_1,bleu_2,bleu_3,bleu_4,meteor,ident,token,global_attention\n";

    for (int row : rows) {
        const AblationConfig ab = build_ablation_config(row);
        try {
            std::vector<std::string> diags;
            Preprocessed train_pre =
                preprocess_pairs(train_pairs, ab.ident_order, base.vocab_cap, &diags);

            std::size_t skipped = 0;
            auto examples = build_examples(train_pre.records, train_pre.src_vocab,
                                           train_pre.tgt_vocab, base.buckets, &skipped);
            if (examples.empty()) throw DataError("no trainable examples for row");

            TrainingConfig config = base;
            config.mode = ab.mode;
            config.ident_order = ab.ident_order;

            ModelDims dims;
            dims.src_vocab = train_pre.src_vocab.size();
            dims.tgt_vocab = train_pre.tgt_vocab.size();
            dims.embed = config.embed;
            dims.hidden = config.hidden;
            dims.layers = config.layers;
            dims.mode = config.mode;

            TrainResult result = train_loop(config, dims, examples, {});

            // test pairs preprocessed with the row's ordering, encoded with the
            // row's training vocabulary
            std::vector<std::string> test_diags;
            std::vector<TokenRecord> test_records;
            for (const PairRecord& p : test_pairs) {
                auto tokens = lex_classified(p.code, SymbolDictionary::builtin(), &test_diags);
                if (ab.ident_order) tokens = order_identifiers(tokens, &test_diags);
                TokenRecord rec;
                rec.id = p.id;
                for (const Token& t : tokens) rec.src_tokens.push_back(t.text);
                rec.tgt_tokens = comment_words(p.comment);
                test_records.push_back(std::move(rec));
            }
            EvalScores scores =
                evaluate_records(result.params, train_pre.src_vocab, train_pre.tgt_vocab,
                                 test_records, config.beam, /*max_len=*/60);

            csv << row;
            for (double b : scores.bleu_report.bleu)
                csv << "," << format_double(100.0 * b, 2);
            csv << "," << format_double(scores.meteor_report.score, 4) << "," << kIdent[row]
                << "," << kToken[row] << "," << kAttn[row] << "\n";
            std::cerr << "ablate row " << row << ": BLEU-4 "
                      << format_double(100.0 * scores.bleu_report.bleu[3], 2) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "ablate row " << row << " failed: " << e.what() << "\n";
            csv << row << ",failed,failed,failed,failed,failed," << kIdent[row] << ","
                << kToken[row] << "," << kAttn[row] << "\n";
        }
    }
    csv.close();

    ordered_json config = config_json(base);
    config["rows"] = rows;
    std::vector<std::string> inputs{data_path};
    if (!config_path.empty()) inputs.push_back(config_path);
    write_manifest(out_path, "ablate", config, base.seed, inputs, {out_path});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"c2c: translate code snippets to natural-language comments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("c2c ") + c2c::kToolVersion +
                                          " (checkpoint format " +
                                          std::to_string(c2c::kCheckpointVersion) + ")");

    // prepare
    auto* prepare = app.add_subcommand("prepare", "mine (code, comment) pairs from .java files");
    std::string prep_src, prep_out;
    std::size_t min_shared = 3;
    prepare->add_option("--src", prep_src, "directory of .java files")->required();
    prepare->add_option("--out", prep_out, "output pairs.jsonl")->required();
    prepare->add_option("--min-shared", min_shared, "minimum shared terms (default 3)");

    // preprocess
    auto* preprocess = app.add_subcommand("preprocess", "lex pairs into model-ready tokens");
    std::string pp_in, pp_out;
    bool no_ident_order = false;
    std::size_t vocab_cap = 50000;
    preprocess->add_option("--in", pp_in, "pairs.jsonl from prepare")->required();
    preprocess->add_option("--out", pp_out, "output tokens.jsonl")->required();
    preprocess->add_flag("--no-ident-order", no_ident_order, "skip identifier ordering");
    preprocess->add_option("--vocab-cap", vocab_cap, "vocabulary size cap per side");

    // train
    auto* train = app.add_subcommand("train", "train the translation model");
    std::string tr_data, tr_config, tr_out, tr_resume;
    int ablation_row = 0;
    std::int64_t tr_seed = -1;
    train->add_option("--data", tr_data, "tokens.jsonl from preprocess")->required();
    train->add_option("--config", tr_config, "key = value config file");
    train->add_option("--out", tr_out, "output checkpoint path")->required();
    train->add_option("--ablation", ablation_row, "ablation table row 1..4")
        ->check(CLI::Range(1, 4));
    train->add_option("--seed", tr_seed, "random seed (overrides config)");
    train->add_option("--resume", tr_resume, "checkpoint to resume from");

    // infer
    auto* infer = app.add_subcommand("infer", "generate a comment for a code snippet");
    std::string in_model, in_path, in_out;
    std::size_t in_beam = 5, in_max_len = 60;
    infer->add_option("--model", in_model, "trained checkpoint")->required();
    infer->add_option("--in", in_path, "file holding the code snippet")->required();
    infer->add_option("--beam", in_beam, "beam width (default 5)");
    infer->add_option("--max-len", in_max_len, "maximum comment length");
    infer->add_option("--out", in_out, "also write the comment to this file");

    // eval
    auto* eval = app.add_subcommand("eval", "score a model with BLEU and METEOR");
    std::string ev_model, ev_data, ev_out, ev_csv;
    std::size_t ev_beam = 5, ev_max_len = 60;
    eval->add_option("--model", ev_model, "trained checkpoint")->required();
    eval->add_option("--data", ev_data, "tokens.jsonl with references")->required();
    eval->add_option("--out", ev_out, "output report.json")->required();
    eval->add_option("--beam", ev_beam, "beam width (default 5)");
    eval->add_option("--max-len", ev_max_len, "maximum comment length");
    eval->add_option("--per-pair", ev_csv, "also write per-pair scores to this CSV");

    // ablate
    auto* ablate = app.add_subcommand("ablate", "train and score the ablation table rows");
    std::string ab_data, ab_config, ab_out;
    std::vector<int> ab_rows;
    std::int64_t ab_seed = -1;
    ablate->add_option("--data", ab_data, "pairs.jsonl from prepare")->required();
    ablate->add_option("--config", ab_config, "key = value config file");
    ablate->add_option("--out", ab_out, "output CSV table")->required();
    ablate->add_option("--rows", ab_rows, "rows to run (default 1 2 3 4)")
        ->check(CLI::Range(1, 4));
    ablate->add_option("--seed", ab_seed, "random seed shared by all rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1; --help/--version exit 0
    }

    try {
        if (prepare->parsed()) return cmd_prepare(prep_src, prep_out, min_shared);
        if (preprocess->parsed()) return cmd_preprocess(pp_in, pp_out, !no_ident_order, vocab_cap);
        if (train->parsed())
            return cmd_train(tr_data, tr_config, tr_out, ablation_row, tr_seed, tr_resume);
        if (infer->parsed()) return cmd_infer(in_model, in_path, in_beam, in_max_len, in_out);
        if (eval->parsed()) return cmd_eval(ev_model, ev_data, ev_out, ev_beam, ev_max_len, ev_csv);
        if (ablate->parsed()) return cmd_ablate(ab_data, ab_config, ab_out, ab_rows, ab_seed);
    } catch (const c2c::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
