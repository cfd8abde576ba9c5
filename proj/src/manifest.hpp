#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace rmt::cli {

/// UTC timestamp, ISO 8601 seconds resolution.
std::string utc_now_iso8601();

/// Writes dir/manifest.json atomically (temp file + rename) so a manifest is
/// only ever visible after every data row of the run has been written.
void write_manifest(const std::string& dir, const nlohmann::json& manifest);

}  // namespace rmt::cli
