#pragma once

// JSON file formats.
//
//   system:    {"n": 3, "w": 1, "diagonals": {"-1": [...], "0": [...], "1": [...]}, "rhs": [...]}
//   solution:  {"solution": ["p/q", ...], "det": "p/q", "substituted_pivots": [1, ...], ...}
//   reduction: {"w_from": 3, "w_to": 2, "ops_counted": 760, "reference_ops": 1278, "n": 40}
//
// Entries are strings "p/q" or JSON integers.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "symband/band.hpp"
#include "symband/reduce.hpp"
#include "symband/solver.hpp"

namespace symband {

/// Throws ParseError for schema violations and ShapeError for offset-key mismatches.
SystemText system_text_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const ExactSystem& sys);
nlohmann::json solution_to_json(const SolveResult<Rational>& r);
nlohmann::json solution_to_json(const SolveResult<double>& r);
nlohmann::json report_to_json(const ReductionReport& r);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Reads and validates a system file. Throws ParseError on unreadable or malformed JSON.
AnySystem read_system_file(const std::filesystem::path& path, Backend backend, StorageKind storage);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace symband
