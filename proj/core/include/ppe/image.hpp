#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ppe {

// Smallest side length that leaves a nonempty embeddable interior.
inline constexpr int kMinEmbeddableSide = 8;

// 8-bit grayscale raster, row-major. Pixel (row, col) is u_{row,col}.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::uint8_t fill = 0);
  GrayImage(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t operator()(int row, int col) const {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }
  std::uint8_t& operator()(int row, int col) {
    return pixels_[static_cast<std::size_t>(row) * width_ + col];
  }

  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint8_t> pixels() noexcept { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Binary PGM ("P5", maxval 255). Comment lines are accepted anywhere in the
// header. Images with a side shorter than `min_side` are rejected with
// kImageTooSmall; pass kMinEmbeddableSide when the image is headed for the
// codec.
GrayImage LoadPgm(std::span<const std::uint8_t> bytes, int min_side = 1);

// Canonical "P5\n<w> <h>\n255\n" followed by the raster.
std::vector<std::uint8_t> SavePgm(const GrayImage& img);

GrayImage ReadPgmFile(const std::filesystem::path& path, int min_side = 1);
void WritePgmFile(const std::filesystem::path& path, const GrayImage& img);

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes);

// Sum of squared per-pixel differences.
std::uint64_t SquaredErrorSum(const GrayImage& a, const GrayImage& b);

// 10*log10(255^2 / MSE) in dB; +infinity when the images are identical.
double Psnr(const GrayImage& a, const GrayImage& b);

// "inf" for the infinite marker, otherwise fixed with `precision` decimals.
std::string FormatDecibels(double db, int precision = 2);

}  // namespace ppe
