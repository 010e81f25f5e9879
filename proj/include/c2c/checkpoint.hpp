#pragma once

#include <map>
#include <string>

#include "c2c/model.hpp"

namespace c2c {

inline constexpr char kCheckpointMagic[4] = {'C', '2', 'C', '1'};
inline constexpr std::uint32_t kCheckpointVersion = 1;

// Binary checkpoint: magic "C2C1", format version, dimension header (vocab
// sizes, embed, hidden, layers, mode, dictionary stamp), then named tensors
// as length-prefixed row-major 64-bit float arrays. Round-trips byte-exactly.
//
// `extra` carries non-model tensors (e.g. the optimizer state) and is written
// after the model tensors, sorted by name.
void save_checkpoint(const std::string& path, const ModelParams& params,
                     const std::map<std::string, Vec>& extra = {});

struct Checkpoint {
    ModelParams params;
    std::map<std::string, Vec> extra;
};

Checkpoint load_checkpoint(const std::string& path);

}  // namespace c2c
