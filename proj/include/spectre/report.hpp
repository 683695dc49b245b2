#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "spectre/lattice.hpp"

namespace spectre {

using ordered_json = nlohmann::ordered_json;

// 64-bit FNV-1a over the raw bytes.
std::uint64_t fnv1a64(const std::string& bytes);

// "fnv1a64:" followed by 16 lowercase hex digits.
std::string hash_tag(const std::string& bytes);

struct DiagramInput {
    Support support;
    std::string hash;  // hash_tag of the file bytes
};

// Read and validate a diagram description {"vars": n, "support": [[...], ...]}.
// Parse and schema problems are reported with the file path and, for malformed
// JSON, the line/column where parsing stopped.
DiagramInput load_diagram(const std::string& path);

// Fixed 12-significant-digit rendering used for every floating-point column.
std::string format_real(double x);

// Reports are ordered JSON documents of the shape
//   {"command": ..., "input_hash": ..., "meta": {...},
//    "columns": [...], "rows": [[...], ...]}
// with rationals carried as "num/den" strings.  The two renderers below are
// deterministic: equal documents yield byte-identical text.
ordered_json make_report(const std::string& command, const std::string& input_hash);

std::string render_json(const ordered_json& report);
std::string render_csv(const ordered_json& report);

// Write to the given path, or to stdout when the path is empty.
void emit_report(const ordered_json& report, const std::string& format, const std::string& out_path);

}  // namespace spectre
