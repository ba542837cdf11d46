#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "xdom/model.hpp"

namespace xdom {

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Little-endian binary: magic, version, mode/head tags, K, image size,
/// stride, config echo (JSON text), weight arrays, trailing FNV-1a checksum.
void save_checkpoint(const DualHeadModel& model, const std::filesystem::path& path,
                     const nlohmann::json& config_echo = nlohmann::json::object());

/// Throws a load error on truncation, corruption or version mismatch, and a
/// mode error when `expected_mode` is given and differs from the stored tag.
DualHeadModel load_checkpoint(const std::filesystem::path& path, std::optional<ModelMode> expected_mode = std::nullopt,
                              nlohmann::json* config_echo = nullptr);

}  // namespace xdom
