#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "c2c/corpus.hpp"

namespace c2c {

inline constexpr const char* kToolVersion = "0.1.0";

// One preprocessed pair as stored in tokens.jsonl.
struct TokenRecord {
    std::string id;
    std::vector<std::string> src_tokens;
    std::vector<int> token_idx;
    std::vector<std::string> tgt_tokens;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// {"id":..., "code":..., "comment":...}, one object per line, key order fixed.
void write_pairs_jsonl(const std::string& path, const std::vector<PairRecord>& pairs);
std::vector<PairRecord> read_pairs_jsonl(const std::string& path);

// {"id":..., "src_tokens":[...], "token_idx":[...], "tgt_tokens":[...]}
void write_tokens_jsonl(const std::string& path, const std::vector<TokenRecord>& records);
std::vector<TokenRecord> read_tokens_jsonl(const std::string& path);

// Stable 80/10/10 split by pair id: 0..7 train, 8 validation, 9 test.
int split_slot(const std::string& id);

// Reproducibility manifest written beside every produced output file.
void write_manifest(const std::string& output_path, const std::string& command,
                    const nlohmann::ordered_json& config, std::uint64_t seed,
                    const std::vector<std::string>& input_paths,
                    const std::vector<std::string>& output_paths);

}  // namespace c2c
