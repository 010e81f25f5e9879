#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "c2c/errors.hpp"
#include "c2c/rng.hpp"
#include "c2c/vocab.hpp"

using namespace c2c;

TEST_CASE("build orders by frequency, ties by first occurrence") {
    Vocabulary v = Vocabulary::build({{"a", "b", "a", "a"}}, 6);
    CHECK(v.id("a") == 4);
    CHECK(v.id("b") == 5);
    CHECK(v.size() == 6);

    // equal frequency: first seen gets the smaller id
    Vocabulary tie = Vocabulary::build({{"x", "y", "x", "y"}}, 10);
    CHECK(tie.id("x") == 4);
    CHECK(tie.id("y") == 5);
}

TEST_CASE("cap cuts the tail and small caps are rejected") {
    Vocabulary v = Vocabulary::build({{"a", "a", "b", "c"}}, 6);  // keeps 2 tokens
    CHECK(v.id("a") == 4);
    CHECK(v.id("b") == 5);
    CHECK(v.id("c") == Vocabulary::kUnk);
    CHECK_THROWS_AS(Vocabulary::build({{"a"}}, 4), ConfigError);
}

TEST_CASE("encode decode round-trips in-vocabulary tokens") {
    Vocabulary v = Vocabulary::build({{"alpha", "beta", "gamma"}}, 100);
    const std::vector<std::string> in{"alpha", "gamma", "beta"};
    CHECK(v.decode(v.encode(in)) == in);
}

TEST_CASE("vocabulary file round-trip preserves ids") {
    Vocabulary v = Vocabulary::build({{"one", "two", "two", "three"}}, 100);
    const auto path = (std::filesystem::temp_directory_path() / "c2c_vocab_test.txt").string();
    v.save(path);
    Vocabulary loaded = Vocabulary::load(path);
    CHECK(loaded.size() == v.size());
    for (const auto& t : {"one", "two", "three"}) CHECK(loaded.id(t) == v.id(t));
    std::remove(path.c_str());
}

TEST_CASE("identical corpus bytes give identical id assignment") {
    const std::vector<std::vector<std::string>> corpus{{"m", "n", "m"}, {"o", "n"}};
    Vocabulary a = Vocabulary::build(corpus, 64);
    Vocabulary b = Vocabulary::build(corpus, 64);
    CHECK(a.id_to_token == b.id_to_token);
}

TEST_CASE("assign_bucket returns the first fitting bucket, boundaries inclusive") {
    const auto buckets = default_buckets();
    CHECK(assign_bucket(38, 14, buckets) == Bucket{40, 15});
    CHECK(assign_bucket(40, 15, buckets) == Bucket{40, 15});
    CHECK(assign_bucket(41, 10, buckets) == Bucket{55, 20});
    CHECK(assign_bucket(300, 10, buckets) == std::nullopt);
    CHECK(assign_bucket(10, 59, buckets) == Bucket{220, 60});
}

TEST_CASE("assign_bucket matches a linear minimal-fit oracle on random pairs") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        // random strictly-increasing bucket list
        std::vector<Bucket> buckets;
        std::size_t s = 0, t = 0;
        const std::size_t count = 1 + rng.below(5);
        for (std::size_t i = 0; i < count; ++i) {
            s += 1 + rng.below(30);
            t += 1 + rng.below(12);
            buckets.push_back({s, t});
        }
        for (int q = 0; q < 5; ++q) {
            const std::size_t src = rng.below(s + 10);
            const std::size_t tgt = rng.below(t + 5);
            auto got = assign_bucket(src, tgt, buckets);
            // oracle: scan every bucket, keep the minimal fitting one
            std::optional<Bucket> expect;
            for (const Bucket& b : buckets)
                if (src <= b.src_cap && tgt <= b.tgt_cap) {
                    if (!expect || (b.src_cap < expect->src_cap && b.tgt_cap < expect->tgt_cap))
                        expect = b;
                }
            CHECK(got == expect);
        }
    }
}

TEST_CASE("make_example pads right and strips back to the original ids") {
    Vocabulary sv = Vocabulary::build({{"a", "b", "c"}}, 100);
    Vocabulary tv = Vocabulary::build({{"x", "y"}}, 100);
    auto ex = make_example("p1", {"a", "c", "b"}, {"y", "x"}, sv, tv, default_buckets());
    REQUIRE(ex.has_value());
    CHECK(ex->bucket == Bucket{40, 15});
    CHECK(ex->src_ids.size() == 40);
    CHECK(ex->tgt_ids.size() == 15);
    CHECK(ex->src_len == 3);
    CHECK(ex->tgt_len == 4);
    CHECK(ex->src_ids[2] == sv.id("b"));
    CHECK(ex->src_ids[3] == Vocabulary::kPad);
    CHECK(ex->token_idx == ex->src_ids);

    // padding round-trip
    std::vector<int> src(ex->src_ids.begin(), ex->src_ids.begin() + 3);
    CHECK(src == sv.encode({"a", "c", "b"}));
    CHECK(ex->tgt_ids[0] == Vocabulary::kGo);
    CHECK(ex->tgt_ids[3] == Vocabulary::kEos);
    for (std::size_t i = 4; i < ex->tgt_ids.size(); ++i)
        CHECK(ex->tgt_ids[i] == Vocabulary::kPad);

    // no PAD before a real token
    bool seen_pad = false;
    for (int id : ex->src_ids) {
        if (id == Vocabulary::kPad) seen_pad = true;
        else CHECK(!seen_pad);
    }
}

TEST_CASE("make_example rejects sources that fit no bucket") {
    Vocabulary sv = Vocabulary::build({{"a"}}, 100);
    Vocabulary tv = Vocabulary::build({{"x"}}, 100);
    std::vector<std::string> longsrc(300, "a");
    CHECK(make_example("p", longsrc, {"x"}, sv, tv, default_buckets()) == std::nullopt);
}
