#include "ppe/image.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <utility>

#include "ppe/error.hpp"

namespace ppe {

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be positive");
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

GrayImage::GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "image dimensions must be positive");
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel count does not match width*height");
  }
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments, then reads one unsigned decimal.
  long ReadNumber(const char* field) {
    SkipSpaceAndComments();
    long value = 0;
    std::size_t digits = 0;
    while (pos_ < bytes_.size() && IsDigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw Error(ErrorCode::kMalformedHeader,
                    std::string("PGM ") + field + " is too large");
      }
      ++pos_;
      ++digits;
    }
    if (digits == 0) {
      throw Error(ErrorCode::kMalformedHeader,
                  std::string("PGM header is missing ") + field);
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  void ConsumeRasterSeparator() {
    if (pos_ >= bytes_.size() || !IsSpace(bytes_[pos_])) {
      throw Error(ErrorCode::kMalformedHeader,
                  "PGM maxval must be followed by one whitespace byte");
    }
    ++pos_;
  }

  std::size_t position() const { return pos_; }
  void Advance(std::size_t n) { pos_ += n; }

 private:
  static bool IsDigit(std::uint8_t c) { return c >= '0' && c <= '9'; }
  static bool IsSpace(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }

  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage LoadPgm(std::span<const std::uint8_t> bytes, int min_side) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(ErrorCode::kBadMagic, "not a binary PGM (missing P5 magic)");
  }
  HeaderReader reader(bytes);
  reader.Advance(2);
  const long width = reader.ReadNumber("width");
  const long height = reader.ReadNumber("height");
  const long maxval = reader.ReadNumber("maxval");
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::kMalformedHeader, "PGM dimensions must be nonzero");
  }
  if (maxval != 255) {
    throw Error(ErrorCode::kUnsupportedMaxval,
                "unsupported maxval " + std::to_string(maxval));
  }
  reader.ConsumeRasterSeparator();
  if (width < min_side || height < min_side) {
    throw Error(ErrorCode::kImageTooSmall,
                "image is " + std::to_string(width) + "x" +
                    std::to_string(height) + ", minimum side is " +
                    std::to_string(min_side));
  }
  const std::size_t count = static_cast<std::size_t>(width) * height;
  const std::size_t start = reader.position();
  if (bytes.size() - start < count) {
    throw Error(ErrorCode::kTruncatedRaster,
                "PGM raster holds " + std::to_string(bytes.size() - start) +
                    " of " + std::to_string(count) + " bytes");
  }
  std::vector<std::uint8_t> pixels(bytes.begin() + start,
                                   bytes.begin() + start + count);
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::move(pixels));
}

std::vector<std::uint8_t> SavePgm(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

std::vector<std::uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw Error(ErrorCode::kIoError, "short write to " + path.string());
  }
}

GrayImage ReadPgmFile(const std::filesystem::path& path, int min_side) {
  return LoadPgm(ReadFileBytes(path), min_side);
}

void WritePgmFile(const std::filesystem::path& path, const GrayImage& img) {
  WriteFileBytes(path, SavePgm(img));
}

std::uint64_t SquaredErrorSum(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw Error(ErrorCode::kDimensionMismatch, "image dimensions differ");
  }
  std::uint64_t sum = 0;
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  for (std::size_t k = 0; k < pa.size(); ++k) {
    const int d = static_cast<int>(pa[k]) - static_cast<int>(pb[k]);
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

double Psnr(const GrayImage& a, const GrayImage& b) {
  const std::uint64_t sse = SquaredErrorSum(a, b);
  if (sse == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sse) / static_cast<double>(a.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

std::string FormatDecibels(double db, int precision) {
  if (std::isinf(db)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, db);
  return buf;
}

}  // namespace ppe
