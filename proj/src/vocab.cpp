#include "c2c/vocab.hpp"

#include <algorithm>
#include <fstream>

#include "c2c/errors.hpp"

namespace c2c {

namespace {
const char* kSpecialNames[] = {"<pad>", "<go>", "<eos>", "<unk>"};
}

std::vector<int> Vocabulary::encode(const std::vector<std::string>& tokens) const {
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(id(t));
    return out;
}

std::vector<std::string> Vocabulary::decode(const std::vector<int>& ids) const {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(token(i));
    return out;
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& streams,
                             std::size_t cap) {
    if (cap < static_cast<std::size_t>(kNumSpecials) + 1)
        throw ConfigError("vocabulary cap must be at least 5");

    struct Entry {
        std::size_t count = 0;
        std::size_t first_seen = 0;
    };
    std::unordered_map<std::string, Entry> counts;
    std::size_t position = 0;
    for (const auto& stream : streams) {
        for (const auto& token : stream) {
            auto [it, inserted] = counts.try_emplace(token);
            if (inserted) it->second.first_seen = position;
            ++it->second.count;
            ++position;
        }
    }

    std::vector<const std::pair<const std::string, Entry>*> order;
    order.reserve(counts.size());
    for (const auto& kv : counts) order.push_back(&kv);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        if (a->second.count != b->second.count) return a->second.count > b->second.count;
        return a->second.first_seen < b->second.first_seen;
    });

    Vocabulary v;
    for (const char* name : kSpecialNames) v.id_to_token.emplace_back(name);
    const std::size_t keep = std::min(order.size(), cap - kNumSpecials);
    for (std::size_t i = 0; i < keep; ++i) {
        v.token_to_id.emplace(order[i]->first, static_cast<int>(v.id_to_token.size()));
        v.id_to_token.push_back(order[i]->first);
    }
    return v;
}

void Vocabulary::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write vocabulary file: " + path);
    for (const auto& t : id_to_token) out << t << '\n';
}

Vocabulary Vocabulary::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open vocabulary file: " + path);
    Vocabulary v;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno < kNumSpecials) {
            if (line != kSpecialNames[lineno])
                throw DataError("vocabulary file missing special header: " + path);
            v.id_to_token.emplace_back(line);
        } else {
            v.token_to_id.emplace(line, static_cast<int>(v.id_to_token.size()));
            v.id_to_token.push_back(line);
        }
        ++lineno;
    }
    if (lineno < kNumSpecials) throw DataError("vocabulary file truncated: " + path);
    return v;
}

std::vector<Bucket> default_buckets() {
    return {{40, 15}, {55, 20}, {70, 40}, {220, 60}};
}

std::optional<Bucket> assign_bucket(std::size_t src_len, std::size_t tgt_len,
                                    const std::vector<Bucket>& buckets) {
    for (const Bucket& b : buckets) {
        if (src_len <= b.src_cap && tgt_len <= b.tgt_cap) return b;
    }
    return std::nullopt;
}

std::optional<Example> make_example(std::string id, const std::vector<std::string>& src_tokens,
                                    const std::vector<std::string>& tgt_tokens,
                                    const Vocabulary& src_vocab, const Vocabulary& tgt_vocab,
                                    const std::vector<Bucket>& buckets) {
    const std::size_t src_len = src_tokens.size();
    const std::size_t tgt_len = tgt_tokens.size() + 2;  // GO ... EOS
    auto bucket = assign_bucket(src_len, tgt_len, buckets);
    if (!bucket || src_len == 0) return std::nullopt;

    Example ex;
    ex.id = std::move(id);
    ex.bucket = *bucket;
    ex.src_len = src_len;
    ex.tgt_len = tgt_len;

    ex.src_ids = src_vocab.encode(src_tokens);
    ex.token_idx = ex.src_ids;  // shared id space with the token-weight matrix
    ex.src_ids.resize(bucket->src_cap, Vocabulary::kPad);
    ex.token_idx.resize(bucket->src_cap, Vocabulary::kPad);

    ex.tgt_ids.reserve(bucket->tgt_cap);
    ex.tgt_ids.push_back(Vocabulary::kGo);
    for (const auto& t : tgt_tokens) ex.tgt_ids.push_back(tgt_vocab.id(t));
    ex.tgt_ids.push_back(Vocabulary::kEos);
    ex.tgt_ids.resize(bucket->tgt_cap, Vocabulary::kPad);
    return ex;
}

}  // namespace c2c
