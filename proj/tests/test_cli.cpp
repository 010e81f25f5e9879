#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "c2c/io.hpp"
#include "c2c/lexer.hpp"

using namespace c2c;
namespace fs = std::filesystem;

namespace {

const std::string kCli = C2C_CLI_PATH;
const std::string kData = C2C_DATA_DIR;

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("c2c_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("prepare on the mini corpus is deterministic and matches the golden file") {
    TempDir tmp;
    const std::string out1 = tmp.path("pairs1.jsonl");
    const std::string out2 = tmp.path("pairs2.jsonl");
    CHECK(run("prepare --src " + kData + "/mini_corpus --out " + out1) == 0);
    CHECK(run("prepare --src " + kData + "/mini_corpus --out " + out2) == 0);

    const std::string bytes = read_text_file(out1);
    CHECK(bytes == read_text_file(out2));
    CHECK(bytes == read_text_file(kData + "/golden/pairs.golden.jsonl"));

    // manifest written beside the output
    CHECK(fs::exists(out1 + ".manifest.json"));
}

TEST_CASE("unknown flags exit 1 and write nothing") {
    TempDir tmp;
    const std::string out = tmp.path("nothing.jsonl");
    CHECK(run("prepare --src " + kData + "/mini_corpus --out " + out + " --no-such-flag") == 1);
    CHECK(!fs::exists(out));
    CHECK(run("definitely-not-a-subcommand") == 1);
}

TEST_CASE("infer with a missing checkpoint exits 2") {
    TempDir tmp;
    const std::string snippet = tmp.path("code.txt");
    write_text_file(snippet, "int getWidth() { return width; }\n");
    CHECK(run("infer --model " + tmp.path("missing.ckpt") + " --in " + snippet) == 2);
}

TEST_CASE("full pipeline: prepare, preprocess, train, infer, eval") {
    TempDir tmp;
    const std::string pairs = tmp.path("pairs.jsonl");
    const std::string tokens = tmp.path("tokens.jsonl");
    const std::string model = tmp.path("model.ckpt");
    const std::string report = tmp.path("report.json");
    const std::string cfg = tmp.path("train.cfg");
    write_text_file(cfg,
                    "embed = 8\nhidden = 12\nbatch = 4\nmax_iters = 12\n"
                    "checkpoint_every = 0\nseed = 7\n");

    REQUIRE(run("prepare --src " + kData + "/mini_corpus --out " + pairs) == 0);
    REQUIRE(run("preprocess --in " + pairs + " --out " + tokens) == 0);
    CHECK(fs::exists(tokens + ".src.vocab"));
    CHECK(fs::exists(tokens + ".tgt.vocab"));

    REQUIRE(run("train --data " + tokens + " --config " + cfg + " --out " + model) == 0);
    CHECK(fs::exists(model));
    CHECK(fs::exists(model + ".train.csv"));
    CHECK(fs::exists(model + ".src.vocab"));

    const std::string snippet = tmp.path("code.txt");
    write_text_file(snippet, "public int getWidth() { return width; }\n");
    const std::string comment = tmp.path("comment.txt");
    REQUIRE(run("infer --model " + model + " --in " + snippet + " --beam 2 --out " + comment) ==
            0);
    CHECK(fs::exists(comment));

    REQUIRE(run("eval --model " + model + " --data " + tokens + " --out " + report +
                " --beam 1 --max-len 10") == 0);
    const std::string rep = read_text_file(report);
    CHECK(rep.find("\"bleu\"") != std::string::npos);
    CHECK(rep.find("\"meteor\"") != std::string::npos);
    CHECK(rep.find("\"fMean\"") != std::string::npos);

    // training log has the CSV header
    CHECK(read_text_file(model + ".train.csv").rfind("iter,bucket,loss,lr\n", 0) == 0);
}

TEST_CASE("ablate runs rows deterministically") {
    TempDir tmp;
    const std::string pairs = tmp.path("pairs.jsonl");
    const std::string cfg = tmp.path("ab.cfg");
    const std::string csv1 = tmp.path("ab1.csv");
    const std::string csv2 = tmp.path("ab2.csv");
    write_text_file(cfg,
                    "embed = 6\nhidden = 8\nbatch = 4\nmax_iters = 6\n"
                    "checkpoint_every = 0\nbeam = 1\n");

    REQUIRE(run("prepare --src " + kData + "/mini_corpus --out " + pairs) == 0);
    REQUIRE(run("ablate --data " + pairs + " --config " + cfg + " --out " + csv1 +
                " --rows 2 --rows 4 --seed 11") == 0);
    REQUIRE(run("ablate --data " + pairs + " --config " + cfg + " --out " + csv2 +
                " --rows 2 --rows 4 --seed 11") == 0);

    const std::string table = read_text_file(csv1);
    CHECK(table == read_text_file(csv2));
    CHECK(table.rfind("row,bleu_1,bleu_2,bleu_3,bleu_4,meteor,ident,token,global_attention\n",
                      0) == 0);
    CHECK(table.find("\n2,") != std::string::npos);
    CHECK(table.find("\n4,") != std::string::npos);
}

TEST_CASE("the shipped dictionary resource matches the built-in tables") {
    auto shipped = c2c::SymbolDictionary::load(kData + "/dictionary.txt");
    const auto& builtin = c2c::SymbolDictionary::builtin();
    CHECK(shipped.symbols == builtin.symbols);
    CHECK(shipped.keywords == builtin.keywords);
    CHECK(shipped.version() == builtin.version());
}

TEST_CASE("--version prints tool and checkpoint format versions") {
    const int status = std::system((kCli + " --version > /dev/null 2>&1").c_str());
    CHECK(WEXITSTATUS(status) == 0);
}
