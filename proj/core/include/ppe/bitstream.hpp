#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ppe {

// One bit per element, each 0 or 1.
using BitString = std::vector<std::uint8_t>;

class BitWriter {
 public:
  // Appends the low `width` bits of `value`, most significant first.
  void Write(std::uint64_t value, int width);
  // Two's complement in `width` bits; the value must fit.
  void WriteSigned(std::int64_t value, int width);
  void Append(std::span<const std::uint8_t> bits);

  const BitString& bits() const& { return bits_; }
  BitString bits() && { return std::move(bits_); }
  std::size_t size() const { return bits_.size(); }

 private:
  BitString bits_;
};

// Reads fields back in the order BitWriter wrote them. Running past the end
// throws kTruncatedStream.
class BitReader {
 public:
  explicit BitReader(std::span<const std::uint8_t> bits) : bits_(bits) {}

  std::uint64_t Read(int width);
  std::int64_t ReadSigned(int width);
  std::span<const std::uint8_t> Take(std::size_t count);

  std::size_t remaining() const { return bits_.size() - pos_; }
  std::size_t position() const { return pos_; }

 private:
  std::span<const std::uint8_t> bits_;
  std::size_t pos_ = 0;
};

// Bytes to bits, most significant bit of each byte first.
BitString BytesToBits(std::span<const std::uint8_t> bytes);
// Inverse of BytesToBits; a trailing partial byte is zero-padded.
std::vector<std::uint8_t> BitsToBytes(std::span<const std::uint8_t> bits);

}  // namespace ppe
