#include "ppe/bitstream.hpp"

#include <string>

#include "ppe/error.hpp"

namespace ppe {

void BitWriter::Write(std::uint64_t value, int width) {
  if (width < 0 || width > 64 || (width < 64 && (value >> width) != 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "value does not fit in " + std::to_string(width) + " bits");
  }
  for (int b = width - 1; b >= 0; --b) {
    bits_.push_back(static_cast<std::uint8_t>((value >> b) & 1u));
  }
}

void BitWriter::WriteSigned(std::int64_t value, int width) {
  const std::int64_t lo = -(std::int64_t{1} << (width - 1));
  const std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
  if (value < lo || value > hi) {
    throw Error(ErrorCode::kInvalidArgument,
                "signed value " + std::to_string(value) + " does not fit in " +
                    std::to_string(width) + " bits");
  }
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  Write(static_cast<std::uint64_t>(value) & mask, width);
}

void BitWriter::Append(std::span<const std::uint8_t> bits) {
  bits_.insert(bits_.end(), bits.begin(), bits.end());
}

std::uint64_t BitReader::Read(int width) {
  if (static_cast<std::size_t>(width) > remaining()) {
    throw Error(ErrorCode::kTruncatedStream,
                "embedded stream ends " +
                    std::to_string(static_cast<std::size_t>(width) - remaining()) +
                    " bits early");
  }
  std::uint64_t v = 0;
  for (int b = 0; b < width; ++b) v = (v << 1) | (bits_[pos_++] & 1u);
  return v;
}

std::int64_t BitReader::ReadSigned(int width) {
  const std::uint64_t raw = Read(width);
  const std::uint64_t sign = std::uint64_t{1} << (width - 1);
  return (raw & sign) ? static_cast<std::int64_t>(raw) -
                            (static_cast<std::int64_t>(sign) << 1)
                      : static_cast<std::int64_t>(raw);
}

std::span<const std::uint8_t> BitReader::Take(std::size_t count) {
  if (count > remaining()) {
    throw Error(ErrorCode::kTruncatedStream,
                "embedded stream ends " + std::to_string(count - remaining()) +
                    " bits early");
  }
  auto out = bits_.subspan(pos_, count);
  pos_ += count;
  return out;
}

BitString BytesToBits(std::span<const std::uint8_t> bytes) {
  BitString bits;
  bits.reserve(bytes.size() * 8);
  for (const std::uint8_t byte : bytes) {
    for (int b = 7; b >= 0; --b) bits.push_back((byte >> b) & 1u);
  }
  return bits;
}

std::vector<std::uint8_t> BitsToBytes(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k]) bytes[k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
  }
  return bytes;
}

}  // namespace ppe
