#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dgx/error.hpp"

namespace dgx {

// Index container framing (".dgx"): little-endian, magic "DGX1", 32-bit
// version, then tagged sections with a 64-bit payload length prefix.
// Array payloads store each element at the smallest of {8,16,32,64} bits
// that fits the largest value; the width is recorded in the section header.

inline constexpr char kMagic[4] = {'D', 'G', 'X', '1'};
inline constexpr uint32_t kFormatVersion = 1;

// Number of bits needed to represent v itself (at least 1).
inline uint32_t bit_width_of(uint64_t v) {
  uint32_t w = 1;
  while (v >>= 1) ++w;
  return w;
}

// Smallest of {8,16,32,64} that holds every value up to max_value.
inline uint32_t storage_width(uint64_t max_value) {
  if (max_value < (1ull << 8)) return 8;
  if (max_value < (1ull << 16)) return 16;
  if (max_value < (1ull << 32)) return 32;
  return 64;
}

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void u8(uint8_t v);
  void u32(uint32_t v);
  void u64(uint64_t v);
  void bytes(const void* data, size_t len);

  // Integer array with per-array width header: u8 width, u64 count, payload.
  void array_u32(const std::vector<uint32_t>& a);
  void array_u64(const std::vector<uint64_t>& a);

 private:
  std::ostream& out_;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  uint8_t u8();
  uint32_t u32();
  uint64_t u64();
  void bytes(void* data, size_t len);

  std::vector<uint32_t> array_u32();
  std::vector<uint64_t> array_u64();

 private:
  std::istream& in_;
};

// A section is written by buffering its payload so the length prefix is exact.
struct Section {
  std::string tag;  // exactly 4 bytes
  std::string payload;
};

void write_header(std::ostream& out);
void write_section(std::ostream& out, const std::string& tag, const std::string& payload);

// Reads the container header; fails with io_error on bad magic/version.
void read_header(std::istream& in);

// Reads the next section, or returns false at EOF.
bool read_section(std::istream& in, Section& sec);

}  // namespace dgx
