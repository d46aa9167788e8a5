#pragma once

#include <string>
#include <string_view>

#include "umf/mfcore.hpp"

namespace umf {

/// Parsed MF file. The matrix is not verified against the potential.
struct MfDocument {
    FieldSpec field;
    RingPtr ring;
    Poly potential;
    RingMatrix matrix;
};

/// Format:
///   field: 2^k modulus <bits>
///   ring: <v1>,<v2>,... laurent:<0|1>,...
///   potential: <poly>
///   size: n            (or `size: r x c` for a rectangular morphism)
///   <r rows of comma-separated entries, optional trailing ';'>
/// Lines starting with '#' are comments.
MfDocument parse_mf(std::string_view text);
MfDocument load_mf(const std::string& path);

/// Canonical text; parse_mf(format_mf(d)) reproduces d.
std::string format_mf(const MfDocument& doc);
std::string format_mf(const UngradedMF& mf);

std::string read_file(const std::string& path);

}  // namespace umf
