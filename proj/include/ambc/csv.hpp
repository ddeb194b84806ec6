#pragma once

#include <filesystem>
#include <string>

#include "ambc/sweep.hpp"

namespace ambc {

inline constexpr std::size_t kResultColumns = 8;

// Comment lines with units and the SNR convention, the header row, then one
// row per successful axis point. Byte-identical for identical results.
std::string format_csv(const SweepResult& result);

// format_spec of the run plus `#` lines with run metadata, skip counters and
// failed rows.
std::string format_manifest(const SweepResult& result);

// Writes the CSV to `path` and the manifest to `path` + ".manifest".
// Throws Error naming the path on I/O failure.
void emit_csv(const SweepResult& result, const std::filesystem::path& path);

std::filesystem::path manifest_path(const std::filesystem::path& csv_path);

}  // namespace ambc
