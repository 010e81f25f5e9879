#include "c2c/io.hpp"

#include <fstream>
#include <sstream>

#include "c2c/errors.hpp"
#include "c2c/rng.hpp"

namespace c2c {

using nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + path);
    out << content;
    if (!out) throw DataError("failed while writing file: " + path);
}

void write_pairs_jsonl(const std::string& path, const std::vector<PairRecord>& pairs) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + path);
    for (const PairRecord& p : pairs) {
        ordered_json obj;
        obj["id"] = p.id;
        obj["code"] = p.code;
        obj["comment"] = p.comment;
        out << obj.dump() << '\n';
    }
}

std::vector<PairRecord> read_pairs_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<PairRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad JSON: " + e.what());
        }
        PairRecord p;
        p.id = obj.at("id").get<std::string>();
        p.code = obj.at("code").get<std::string>();
        p.comment = obj.at("comment").get<std::string>();
        out.push_back(std::move(p));
    }
    return out;
}

void write_tokens_jsonl(const std::string& path, const std::vector<TokenRecord>& records) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write file: " + path);
    for (const TokenRecord& r : records) {
        ordered_json obj;
        obj["id"] = r.id;
        obj["src_tokens"] = r.src_tokens;
        obj["token_idx"] = r.token_idx;
        obj["tgt_tokens"] = r.tgt_tokens;
        out << obj.dump() << '\n';
    }
}

std::vector<TokenRecord> read_tokens_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<TokenRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw DataError(path + ":" + std::to_string(lineno) + ": bad JSON: " + e.what());
        }
        TokenRecord r;
        r.id = obj.at("id").get<std::string>();
        r.src_tokens = obj.at("src_tokens").get<std::vector<std::string>>();
        r.token_idx = obj.at("token_idx").get<std::vector<int>>();
        r.tgt_tokens = obj.at("tgt_tokens").get<std::vector<std::string>>();
        if (r.src_tokens.size() != r.token_idx.size())
            throw DataError(path + ":" + std::to_string(lineno) +
                            ": src_tokens and token_idx lengths differ");
        out.push_back(std::move(r));
    }
    return out;
}

int split_slot(const std::string& id) { return static_cast<int>(fnv1a64(id) % 10); }

void write_manifest(const std::string& output_path, const std::string& command,
                    const ordered_json& config, std::uint64_t seed,
                    const std::vector<std::string>& input_paths,
                    const std::vector<std::string>& output_paths) {
    ordered_json m;
    m["command"] = command;
    m["config"] = config;
    m["seed"] = seed;
    ordered_json inputs = ordered_json::array();
    for (const auto& p : input_paths) {
        ordered_json entry;
        entry["path"] = p;
        char digest[32];
        std::snprintf(digest, sizeof digest, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(read_text_file(p))));
        entry["fnv1a64"] = digest;
        inputs.push_back(entry);
    }
    m["inputs"] = inputs;
    m["outputs"] = output_paths;
    m["tool_version"] = kToolVersion;
    write_text_file(output_path + ".manifest.json", m.dump(2) + "\n");
}

}  // namespace c2c
