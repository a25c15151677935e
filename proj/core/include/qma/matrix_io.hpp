#pragma once

#include <string>

#include "qma/tensor.hpp"

namespace qma {

/// JSON matrix format:
///   {"dim": N, "sites": p, "entries": [["q", "0", ...], ...]}
/// entries are row-major scalar strings in the scalar grammar.
TensorOperator matrix_from_json(const std::string& json_text);
TensorOperator matrix_from_file(const std::string& path);
std::string matrix_to_json(const TensorOperator& op);

}  // namespace qma
