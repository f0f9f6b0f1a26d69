#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "so3fft/core.hpp"

namespace so3 {

// Binary layout shared by both files:
//   4 bytes magic ("SOFC" coefficients, "SOFG" samples)
//   u32 LE format version
//   u32 LE bandwidth
//   payload: (re, im) pairs as LE binary64, in the in-memory layout order
inline constexpr std::uint32_t kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_coefficients(const std::filesystem::path& path, const So3Coefficients& c);
So3Coefficients read_coefficients(const std::filesystem::path& path);

void write_samples(const std::filesystem::path& path, const So3SampleGrid& g);
So3SampleGrid read_samples(const std::filesystem::path& path);

}  // namespace so3
