#include "so3fft/io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <span>

namespace so3 {
namespace {

constexpr char kCoeffMagic[4] = {'S', 'O', 'F', 'C'};
constexpr char kGridMagic[4] = {'S', 'O', 'F', 'G'};

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char buf[4];
  for (int i = 0; i < 4; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char buf[4];
  in.read(reinterpret_cast<char*>(buf), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(buf[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& out, double d) {
  const auto bits = std::bit_cast<std::uint64_t>(d);
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 8);
}

double get_f64(std::istream& in) {
  unsigned char buf[8];
  in.read(reinterpret_cast<char*>(buf), 8);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

void write_file(const std::filesystem::path& path, const char (&magic)[4], Bandwidth b,
                std::span<const Complex> data) {
  for (const auto& z : data) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw FormatError("refusing to persist non-finite value to " + path.string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out.write(magic, 4);
  put_u32(out, kFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(b.value()));
  for (const auto& z : data) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

// Returns the bandwidth from the header; leaves the stream at the payload.
Bandwidth read_header(std::istream& in, const std::filesystem::path& path,
                      const char (&magic)[4]) {
  char got[4];
  in.read(got, 4);
  if (!in || std::memcmp(got, magic, 4) != 0)
    throw FormatError("bad magic in " + path.string());
  const auto version = get_u32(in);
  if (version != kFormatVersion)
    throw FormatError("unsupported format version " + std::to_string(version) + " in " +
                      path.string());
  const auto b = get_u32(in);
  if (!in || b < 1 || b > (1u << 12)) throw FormatError("bad bandwidth in " + path.string());
  return Bandwidth(static_cast<int>(b));
}

void read_payload(std::istream& in, const std::filesystem::path& path, std::span<Complex> data) {
  for (auto& z : data) {
    const double re = get_f64(in);
    const double im = get_f64(in);
    z = {re, im};
  }
  if (!in) throw FormatError("truncated payload in " + path.string());
  if (in.peek() != std::char_traits<char>::eof())
    throw FormatError("trailing bytes in " + path.string());
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  return in;
}

}  // namespace

void write_coefficients(const std::filesystem::path& path, const So3Coefficients& c) {
  write_file(path, kCoeffMagic, c.bandwidth, c.data);
}

So3Coefficients read_coefficients(const std::filesystem::path& path) {
  auto in = open_in(path);
  So3Coefficients c(read_header(in, path, kCoeffMagic));
  read_payload(in, path, c.data);
  return c;
}

void write_samples(const std::filesystem::path& path, const So3SampleGrid& g) {
  write_file(path, kGridMagic, g.bandwidth, g.data);
}

So3SampleGrid read_samples(const std::filesystem::path& path) {
  auto in = open_in(path);
  So3SampleGrid g(read_header(in, path, kGridMagic));
  read_payload(in, path, g.data);
  return g;
}

}  // namespace so3
