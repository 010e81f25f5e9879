#pragma once

#include "c2c/model.hpp"

namespace c2c {

// Exact reverse-mode gradients of the masked mean cross-entropy with respect
// to every tensor in ModelParams, including the token-weight matrix F.
//
// `params` must be the exact parameters that produced `trace`; mutating them
// in between leaves the result undefined.
ModelParams backward(const ForwardTrace& trace, const ModelParams& params);

}  // namespace c2c
