#include "c2c/checkpoint.hpp"

#include <cstring>
#include <fstream>

#include "c2c/errors.hpp"

namespace c2c {

namespace {

void write_u32(std::ofstream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

void write_u64(std::ofstream& out, std::uint64_t v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t read_u32(std::ifstream& in, const std::string& path) {
    std::uint32_t v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof v))
        throw DataError("truncated checkpoint: " + path);
    return v;
}

std::uint64_t read_u64(std::ifstream& in, const std::string& path) {
    std::uint64_t v = 0;
    if (!in.read(reinterpret_cast<char*>(&v), sizeof v))
        throw DataError("truncated checkpoint: " + path);
    return v;
}

void write_tensor(std::ofstream& out, const std::string& name, const Vec& data) {
    write_u32(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    write_u64(out, data.size());
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size() * sizeof(double)));
}

}  // namespace

void save_checkpoint(const std::string& path, const ModelParams& params,
                     const std::map<std::string, Vec>& extra) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write checkpoint: " + path);

    out.write(kCheckpointMagic, 4);
    write_u32(out, kCheckpointVersion);
    write_u32(out, static_cast<std::uint32_t>(params.dims.src_vocab));
    write_u32(out, static_cast<std::uint32_t>(params.dims.tgt_vocab));
    write_u32(out, static_cast<std::uint32_t>(params.dims.embed));
    write_u32(out, static_cast<std::uint32_t>(params.dims.hidden));
    write_u32(out, static_cast<std::uint32_t>(params.dims.layers));
    write_u32(out, static_cast<std::uint32_t>(params.dims.mode));
    write_u32(out, params.dims.dict_version);

    std::size_t count = extra.size();
    visit_tensors(params, [&](const std::string&, const Vec&) { ++count; });
    write_u32(out, static_cast<std::uint32_t>(count));

    visit_tensors(params,
                  [&](const std::string& name, const Vec& data) { write_tensor(out, name, data); });
    for (const auto& [name, data] : extra) write_tensor(out, name, data);
    if (!out) throw DataError("failed while writing checkpoint: " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open checkpoint: " + path);

    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kCheckpointMagic, 4) != 0)
        throw DataError("not a checkpoint file (bad magic): " + path);
    const std::uint32_t version = read_u32(in, path);
    if (version != kCheckpointVersion)
        throw DataError("unsupported checkpoint version " + std::to_string(version) + ": " + path);

    ModelDims dims;
    dims.src_vocab = read_u32(in, path);
    dims.tgt_vocab = read_u32(in, path);
    dims.embed = read_u32(in, path);
    dims.hidden = read_u32(in, path);
    dims.layers = read_u32(in, path);
    const std::uint32_t mode = read_u32(in, path);
    if (mode > 2) throw DataError("bad context mode in checkpoint: " + path);
    dims.mode = static_cast<ContextMode>(mode);
    dims.dict_version = read_u32(in, path);

    const std::uint32_t count = read_u32(in, path);
    std::map<std::string, Vec> tensors;
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::uint32_t name_len = read_u32(in, path);
        std::string name(name_len, '\0');
        if (!in.read(name.data(), name_len)) throw DataError("truncated checkpoint: " + path);
        const std::uint64_t n = read_u64(in, path);
        Vec data(n);
        if (!in.read(reinterpret_cast<char*>(data.data()),
                     static_cast<std::streamsize>(n * sizeof(double))))
            throw DataError("truncated checkpoint: " + path);
        if (!tensors.emplace(std::move(name), std::move(data)).second)
            throw DataError("duplicate tensor name in checkpoint: " + path);
    }

    Checkpoint ckpt;
    ckpt.params = ModelParams::init(dims, /*seed=*/0);
    visit_tensors(ckpt.params, [&](const std::string& name, Vec& dest) {
        auto it = tensors.find(name);
        if (it == tensors.end()) throw DataError("checkpoint missing tensor " + name + ": " + path);
        if (it->second.size() != dest.size())
            throw DataError("checkpoint tensor " + name + " has wrong size: " + path);
        dest = std::move(it->second);
        tensors.erase(it);
    });
    ckpt.extra = std::move(tensors);
    return ckpt;
}

}  // namespace c2c
