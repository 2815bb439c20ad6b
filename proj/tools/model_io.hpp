#pragma once

#include <optional>
#include <string>

#include "deltaspin/spinspace.hpp"

namespace deltaspin {

/// Parsed model document: either the ten spin-1/2 parameters or an explicit
/// (n, h) pair, plus statistics and an optional particle count. Complex
/// numbers are always two-element [re, im] arrays in the file.
struct ModelFile {
    std::optional<SpinHalfParams> spin_half;
    std::optional<int> explicit_n;
    std::optional<Matrix> explicit_h;
    Statistics statistics = Statistics::Bose;
    std::optional<int> N;

    int n() const { return spin_half ? 2 : *explicit_n; }
    Matrix h() const;
};

/// Loads and validates a JSON model file. Throws ParseError with a field
/// diagnostic on any structural problem.
ModelFile load_model_file(const std::string& path);

/// Instantiates the many-body model with the given particle count.
ManyBodyModel to_model(const ModelFile& file, int N);

/// FNV-1a 64-bit digest of the file bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

}  // namespace deltaspin
