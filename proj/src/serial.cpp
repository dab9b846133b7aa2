#include "dgx/serial.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>

namespace dgx {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_collection: return "EmptyCollection";
    case Errc::forbidden_byte: return "ForbiddenByte";
    case Errc::out_of_bounds: return "OutOfBounds";
    case Errc::empty_array: return "EmptyArray";
    case Errc::contract_violation: return "ContractViolation";
    case Errc::empty_input: return "EmptyInput";
    case Errc::malformed_grammar: return "MalformedGrammar";
    case Errc::malformed_input: return "MalformedInput";
    case Errc::not_monotone: return "NotMonotone";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::wrong_mode: return "WrongMode";
    case Errc::missing_freqs: return "MissingFreqs";
    case Errc::source_too_short: return "SourceTooShort";
    case Errc::empty_distribution: return "EmptyDistribution";
    case Errc::pattern_length_exceeds_docs: return "PatternLengthExceedsDocs";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

void Writer::u8(uint8_t v) { out_.put(static_cast<char>(v)); }

void Writer::u32(uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out_.write(b, 4);
}

void Writer::u64(uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out_.write(b, 8);
}

void Writer::bytes(const void* data, size_t len) {
  out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
}

namespace {

template <typename T>
void write_array(Writer& w, const std::vector<T>& a) {
  uint64_t max_value = 0;
  for (T v : a) max_value = std::max<uint64_t>(max_value, v);
  uint32_t width = storage_width(max_value);
  w.u8(static_cast<uint8_t>(width));
  w.u64(a.size());
  for (T v : a) {
    uint64_t x = v;
    for (uint32_t i = 0; i < width; i += 8) w.u8(static_cast<uint8_t>((x >> i) & 0xff));
  }
}

template <typename T>
std::vector<T> read_array(Reader& r) {
  uint32_t width = r.u8();
  if (width != 8 && width != 16 && width != 32 && width != 64)
    fail(Errc::io_error, "bad array width " + std::to_string(width));
  uint64_t count = r.u64();
  std::vector<T> a;
  a.reserve(count);
  for (uint64_t k = 0; k < count; ++k) {
    uint64_t x = 0;
    for (uint32_t i = 0; i < width; i += 8) x |= static_cast<uint64_t>(r.u8()) << i;
    if (x > std::numeric_limits<T>::max()) fail(Errc::io_error, "array value overflows element type");
    a.push_back(static_cast<T>(x));
  }
  return a;
}

}  // namespace

void Writer::array_u32(const std::vector<uint32_t>& a) { write_array(*this, a); }
void Writer::array_u64(const std::vector<uint64_t>& a) { write_array(*this, a); }

uint8_t Reader::u8() {
  int c = in_.get();
  if (c == EOF) fail(Errc::io_error, "unexpected end of input");
  return static_cast<uint8_t>(c);
}

uint32_t Reader::u32() {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(u8()) << (8 * i);
  return v;
}

uint64_t Reader::u64() {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(u8()) << (8 * i);
  return v;
}

void Reader::bytes(void* data, size_t len) {
  in_.read(static_cast<char*>(data), static_cast<std::streamsize>(len));
  if (static_cast<size_t>(in_.gcount()) != len) fail(Errc::io_error, "unexpected end of input");
}

std::vector<uint32_t> Reader::array_u32() { return read_array<uint32_t>(*this); }
std::vector<uint64_t> Reader::array_u64() { return read_array<uint64_t>(*this); }

void write_header(std::ostream& out) {
  out.write(kMagic, 4);
  Writer w(out);
  w.u32(kFormatVersion);
}

void write_section(std::ostream& out, const std::string& tag, const std::string& payload) {
  if (tag.size() != 4) fail(Errc::io_error, "section tag must be 4 bytes: " + tag);
  out.write(tag.data(), 4);
  Writer w(out);
  w.u64(payload.size());
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

void read_header(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (in.gcount() != 4 || std::string(magic, 4) != std::string(kMagic, 4))
    fail(Errc::io_error, "not a DGX1 index file");
  Reader r(in);
  uint32_t version = r.u32();
  if (version != kFormatVersion)
    fail(Errc::io_error, "unsupported index version " + std::to_string(version));
}

bool read_section(std::istream& in, Section& sec) {
  char tag[4];
  in.read(tag, 4);
  if (in.gcount() == 0) return false;
  if (in.gcount() != 4) fail(Errc::io_error, "truncated section tag");
  sec.tag.assign(tag, 4);
  Reader r(in);
  uint64_t len = r.u64();
  sec.payload.resize(len);
  if (len > 0) r.bytes(sec.payload.data(), len);
  return true;
}

}  // namespace dgx
