#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace c2c {

// Token<->id map with fixed special ids. Ids 0..3 are PAD/GO/EOS/UNK; real
// tokens start at 4, ordered by descending corpus frequency (ties: first seen).
struct Vocabulary {
    static constexpr int kPad = 0;
    static constexpr int kGo = 1;
    static constexpr int kEos = 2;
    static constexpr int kUnk = 3;
    static constexpr int kNumSpecials = 4;

    std::vector<std::string> id_to_token;  // [0..3] are the special names
    std::unordered_map<std::string, int> token_to_id;

    std::size_t size() const { return id_to_token.size(); }

    int id(std::string_view token) const {
        auto it = token_to_id.find(std::string(token));
        return it == token_to_id.end() ? kUnk : it->second;
    }

    const std::string& token(int id) const { return id_to_token.at(static_cast<std::size_t>(id)); }

    std::vector<int> encode(const std::vector<std::string>& tokens) const;
    std::vector<std::string> decode(const std::vector<int>& ids) const;

    // Keeps the cap-4 most frequent tokens. cap < 5 is a configuration error.
    static Vocabulary build(const std::vector<std::vector<std::string>>& streams, std::size_t cap);

    // Plain text: 4 special header lines, then one token per line (line k
    // after the header holds id k+4).
    void save(const std::string& path) const;
    static Vocabulary load(const std::string& path);
};

struct Bucket {
    std::size_t src_cap = 0;
    std::size_t tgt_cap = 0;

    bool operator==(const Bucket&) const = default;
};

// (40,15),(55,20),(70,40),(220,60)
std::vector<Bucket> default_buckets();

// First (and therefore minimal) bucket that fits both lengths; buckets must be
// strictly increasing in both caps. tgt_len counts the GO/EOS framing.
std::optional<Bucket> assign_bucket(std::size_t src_len, std::size_t tgt_len,
                                    const std::vector<Bucket>& buckets);

// One model-ready training pair, padded to its bucket.
struct Example {
    std::string id;
    std::vector<int> src_ids;    // length = bucket.src_cap, PAD-right
    std::vector<int> token_idx;  // aligned with src_ids
    std::vector<int> tgt_ids;    // GO ... EOS, PAD-right to bucket.tgt_cap
    std::size_t src_len = 0;     // real source length
    std::size_t tgt_len = 0;     // real target length including GO and EOS
    Bucket bucket;
};

// Returns nullopt when no bucket fits.
std::optional<Example> make_example(std::string id, const std::vector<std::string>& src_tokens,
                                    const std::vector<std::string>& tgt_tokens,
                                    const Vocabulary& src_vocab, const Vocabulary& tgt_vocab,
                                    const std::vector<Bucket>& buckets);

}  // namespace c2c
