#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ppe/bitstream.hpp"
#include "ppe/histogram.hpp"
#include "ppe/image.hpp"

namespace ppe {

// xorshift64* generator for reproducible pseudo-random secrets.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t Next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

 private:
  std::uint64_t state_;
};

BitString RandomBits(std::uint64_t seed, std::size_t count);

struct ModificationCheck {
  bool ok = true;
  int max_abs_diff = 0;
  std::size_t changed_pixels = 0;
  std::string detail;  // first violation, empty when ok
};

// Checks a marked image against the boundary-swept cover: every change is at
// most 1, interior changes only touch the parities embedded by `passes`, and
// margin changes only touch header-pixel LSBs.
ModificationCheck CheckModificationBound(const GrayImage& adjusted,
                                         const GrayImage& marked, int passes);

struct BenchConfig {
  std::vector<std::filesystem::path> images;
  std::vector<std::uint64_t> payloads;  // bits, ascending
  int passes = 2;
  std::uint64_t step = 0;  // 0 selects rho
  std::uint64_t seed = 0x5EED5EED5EEDull;
  std::filesystem::path workdir;  // marked images are written here
  unsigned threads = 0;           // 0 selects hardware concurrency
};

struct BenchRow {
  std::string image;
  std::uint64_t payload_bits = 0;
  int passes = 0;
  double psnr_db = 0.0;
  std::vector<ShiftParams> params;  // one per pass
  double seconds = 0.0;
  int max_abs_diff = 0;
};

// Embeds a pseudo-random secret for every (image, payload) cell, reloads the
// marked file from disk, verifies extraction and the modification bound, and
// records PSNR. Any round-trip failure throws. Rows follow input order.
std::vector<BenchRow> RunBench(const BenchConfig& config);

// "image,payload_bits,passes,psnr_db,lp1,lz1,rp1,rz1,lp2,lz2,rp2,rz2,seconds"
// preceded by '#' comment lines recording the seed and step.
void WriteBenchCsv(std::ostream& out, const BenchConfig& config,
                   const std::vector<BenchRow>& rows);

}  // namespace ppe
