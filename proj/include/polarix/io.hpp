#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarix/analysis.hpp"

namespace polarix {

inline constexpr const char* kSweepSchema = "polarix.sweep/1";

enum class OutputFormat { Csv, Json, Both };

OutputFormat parse_format(std::string_view text);

/**
 * Long-format CSV: one row per grid point, columns = constants + axes + metrics (+ `preset`).
 * `.` decimals, `,` separators, `\n` endings, 17 significant digits; missing values are
 * empty fields. All parts must share the same column names.
 */
void write_csv(std::ostream& os, const std::vector<SweepResult>& parts, const std::string& preset,
               bool preset_column = true);

/// JSON document: schema tag, preset, resolved run configuration and every part's grid.
nlohmann::json sweep_document(const std::vector<SweepResult>& parts, const std::string& preset,
                              const nlohmann::json& run_config);

/// Writes <dir>/<preset>.csv and/or .json and returns the paths written.
std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir,
                                                 const std::vector<SweepResult>& parts,
                                                 const std::string& preset, OutputFormat format,
                                                 const nlohmann::json& run_config,
                                                 bool preset_column = true);

}  // namespace polarix
