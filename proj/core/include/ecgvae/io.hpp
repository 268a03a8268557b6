#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace ecgvae {

// Reads a whole file; throws data_error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Write-temp-rename so readers never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

// FNV-1a 64-bit, used for the artifact checksums in run manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

// Little-endian scalar encoding for the binary payload formats.
void append_le_f32(std::string& buf, float v);
void append_le_f64(std::string& buf, double v);
float read_le_f32(const char* p);
double read_le_f64(const char* p);

// Fixed CSV float formatting ("%.12g") so reruns are byte-identical.
std::string csv_double(double v);

}  // namespace ecgvae
