#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppe/bitstream.hpp"
#include "ppe/histogram.hpp"
#include "ppe/image.hpp"
#include "ppe/lattice.hpp"
#include "ppe/predictor.hpp"

namespace ppe {

// ---------------------------------------------------------------------------
// Location map

struct MapEntry {
  std::uint32_t index = 0;  // linear pixel index, row-major
  bool was_white = false;   // original value: 255 if set, 0 otherwise

  bool operator==(const MapEntry&) const = default;
};

struct LocationMap {
  std::vector<MapEntry> entries;  // strictly increasing index

  bool operator==(const LocationMap&) const = default;
};

// Width of the map's bit-length field.
inline constexpr int kMapLengthBits = 20;
inline constexpr std::size_t kMaxMapBits = (std::size_t{1} << kMapLengthBits) - 1;

// ceil(log2(width * height)) bits per index.
int MapIndexBits(int width, int height);

struct SweepResult {
  GrayImage adjusted;
  LocationMap map;
};

// Pulls every interior 0 up to 1 and every interior 255 down to 254 so a
// +-1 change can never leave [0, 255]. Throws kPathologicalBoundary when the
// resulting map would not fit its 20-bit length field.
SweepResult BoundarySweep(const GrayImage& img);

// Entries only; the 20-bit length prefix is written by the stream builder.
BitString EncodeLocationMap(const LocationMap& map, int width, int height);
LocationMap DecodeLocationMap(std::span<const std::uint8_t> bits, int width,
                              int height);

// ---------------------------------------------------------------------------
// Embedded header

inline constexpr std::uint32_t kHeaderMagic = 0xA7;
inline constexpr std::uint32_t kHeaderVersion = 1;
inline constexpr int kParamBits = 12;
inline constexpr int kBitCountBits = 24;
inline constexpr std::uint32_t kMaxPassBits = (1u << kBitCountBits) - 1;

struct PassHeader {
  ShiftParams params;
  std::uint32_t bit_count = 0;

  bool operator==(const PassHeader&) const = default;
};

struct StegoHeader {
  std::vector<PassHeader> passes;  // one or two, cross pass first

  bool operator==(const StegoHeader&) const = default;
};

// 8-bit magic, 4-bit version, 2-bit pass count, then per pass lp, lz, rp, rz
// (12-bit two's complement) and a 24-bit payload count. MSB first.
constexpr std::size_t HeaderBitLength(int pass_count) {
  return 14 + 72 * static_cast<std::size_t>(pass_count);
}

BitString EncodeHeader(const StegoHeader& header);
// Throws kNotStegoImage on a magic/version/pass-count mismatch.
StegoHeader DecodeHeader(std::span<const std::uint8_t> bits);

// Pixels whose LSBs hold the header: the first `count` margin pixels in
// raster order. For images at least HeaderBitLength(2) pixels wide these are
// all in row 0.
std::vector<Site> HeaderSites(int width, int height, std::size_t count);

// Reads and decodes the header from a marked image's LSBs.
StegoHeader ReadHeader(const GrayImage& marked);

// ---------------------------------------------------------------------------
// Single pass

struct PassOutcome {
  std::size_t visited = 0;   // sequence positions walked
  std::size_t modified = 0;  // pixels actually changed
};

// Histogram-shifting embed over an ordered PPE sequence of `img`. Stops right
// after the last bit is consumed. Throws kCapacityExceeded if the sequence
// ends first.
PassOutcome EmbedPass(GrayImage& img, std::span<const PeRecord> sequence,
                      const ShiftParams& params,
                      std::span<const std::uint8_t> bits);

// Same, computing the ordered sequence for `target` itself.
PassOutcome EmbedPass(GrayImage& img, Parity target, const ShiftParams& params,
                      std::span<const std::uint8_t> bits);

struct ExtractOutcome {
  BitString bits;
  std::size_t visited = 0;
};

// Inverse of EmbedPass: restores `img` in place and returns the bits. Throws
// kCorruptStego if the sequence runs out or a pixel would leave [0, 255].
ExtractOutcome ExtractPass(GrayImage& img, Parity target,
                           const ShiftParams& params, std::size_t bit_count);

// ---------------------------------------------------------------------------
// Whole pipeline

struct EmbedOptions {
  int passes = 2;                  // 1: cross only, 2: cross then dot
  std::uint64_t step = 0;          // parameter-search step L; 0 means rho
  std::optional<std::string> key;  // XOR-scrambles the secret when set
};

struct PassReport {
  Parity target = Parity::kCross;
  ShiftParams params;
  std::uint64_t rho = 0;  // stream bits carried by this pass
  std::size_t prefix_length = 0;
  std::size_t visited = 0;
  std::size_t modified = 0;
};

struct EmbedResult {
  GrayImage marked;
  std::vector<PassReport> passes;
  LocationMap map;
  std::size_t overhead_bits = 0;  // carried LSBs + map length + map
  double psnr = 0.0;
};

// Throws kCapacityTooSmall when parameter selection fails for some pass.
EmbedResult Embed(const GrayImage& cover, std::span<const std::uint8_t> secret,
                  const EmbedOptions& options = {});

struct ExtractResult {
  BitString secret;
  GrayImage recovered;
  StegoHeader header;
};

ExtractResult Extract(const GrayImage& marked,
                      const std::optional<std::string>& key = std::nullopt);

// Keyed pseudorandom pad used to scramble the secret.
BitString KeyedPad(const std::string& key, std::size_t length);

}  // namespace ppe
