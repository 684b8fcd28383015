#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aidetect {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct ChecksumMismatch : FormatError { using FormatError::FormatError; };
struct GenerationFailed : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct EmptyTrajectory : Error { using Error::Error; };
struct MissingStats : Error { using Error::Error; };
struct TooFewTrials : Error { using Error::Error; };
struct BackwardBeforeForward : Error { using Error::Error; };
struct EmptyGrid : Error { using Error::Error; };
struct IncompatibleSpecs : Error { using Error::Error; };
struct BadChannels : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Seeding and random numbers
//
// All randomness flows through Rng (xoshiro256**), seeded explicitly.
// Implemented here rather than with <random> distributions so that the
// generated streams are identical across standard library implementations.
// ---------------------------------------------------------------------------

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Deterministic per-stage / per-item seed derivation: one master seed
// reproduces an entire pipeline.
inline uint64_t derive_seed(uint64_t master, std::string_view tag, uint64_t index = 0) {
  uint64_t s = master ^ fnv1a64(tag);
  splitmix64(s);
  s ^= 0x9e3779b97f4a7c15ull * (index + 1);
  return splitmix64(s);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : state_) w = splitmix64(sm);
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, bound).
  uint64_t below(uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Inclusive integer range.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::array<uint64_t, 4> state_{};
};

// ---------------------------------------------------------------------------
// Little-endian byte IO + CRC32 (used by the binary pack and checkpoint
// formats; explicit so files are byte-stable across hosts).
// ---------------------------------------------------------------------------

using Bytes = std::vector<uint8_t>;

inline void put_u8(Bytes& b, uint8_t v) { b.push_back(v); }

inline void put_u16_le(Bytes& b, uint16_t v) {
  b.push_back(static_cast<uint8_t>(v & 0xff));
  b.push_back(static_cast<uint8_t>(v >> 8));
}

inline void put_u32_le(Bytes& b, uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xff));
}

inline void put_u64_le(Bytes& b, uint64_t v) {
  for (int i = 0; i < 8; ++i) b.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xff));
}

inline void put_f32_le(Bytes& b, float v) {
  uint32_t bits;
  std::memcpy(&bits, &v, 4);
  put_u32_le(b, bits);
}

class ByteReader {
 public:
  ByteReader(const uint8_t* data, size_t size) : data_(data), size_(size) {}
  explicit ByteReader(const Bytes& b) : ByteReader(b.data(), b.size()) {}

  uint8_t u8() { return data_[need(1)]; }

  uint16_t u16_le() {
    size_t o = need(2);
    return static_cast<uint16_t>(data_[o] | (data_[o + 1] << 8));
  }

  uint32_t u32_le() {
    size_t o = need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(data_[o + i]) << (8 * i);
    return v;
  }

  uint64_t u64_le() {
    size_t o = need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(data_[o + i]) << (8 * i);
    return v;
  }

  float f32_le() {
    uint32_t bits = u32_le();
    float v;
    std::memcpy(&v, &bits, 4);
    return v;
  }

  std::string str(size_t len) {
    size_t o = need(len);
    return std::string(reinterpret_cast<const char*>(data_) + o, len);
  }

  size_t pos() const { return pos_; }
  size_t remaining() const { return size_ - pos_; }

 private:
  size_t need(size_t n) {
    if (pos_ + n > size_) throw FormatError("truncated input");
    size_t o = pos_;
    pos_ += n;
    return o;
  }
  const uint8_t* data_;
  size_t size_;
  size_t pos_ = 0;
};

class Crc32 {
 public:
  void update(const uint8_t* data, size_t n) {
    uint32_t c = ~crc_;
    for (size_t i = 0; i < n; ++i) {
      c ^= data[i];
      for (int k = 0; k < 8; ++k) c = (c >> 1) ^ (0xedb88320u & (0u - (c & 1u)));
    }
    crc_ = ~c;
  }
  void update(const Bytes& b) { update(b.data(), b.size()); }
  uint32_t value() const { return crc_; }

  static uint32_t of(const uint8_t* data, size_t n) {
    Crc32 c;
    c.update(data, n);
    return c.value();
  }

 private:
  uint32_t crc_ = 0;
};

}  // namespace aidetect
