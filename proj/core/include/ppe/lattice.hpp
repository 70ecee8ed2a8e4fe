#pragma once

#include <cstddef>
#include <vector>

#include "ppe/image.hpp"

namespace ppe {

struct Site {
  int row = 0;
  int col = 0;

  bool operator==(const Site&) const = default;
};

// Checkerboard class of a pixel. Cross sites have odd row+col.
enum class Parity { kCross, kDot };

inline constexpr Parity ParityOf(Site s) {
  return ((s.row + s.col) & 1) ? Parity::kCross : Parity::kDot;
}

inline constexpr Parity Opposite(Parity p) {
  return p == Parity::kCross ? Parity::kDot : Parity::kCross;
}

const char* ParityName(Parity p);

// Sites closer than this to any border are never embedded: a target's
// axial neighbors are themselves predicted from their diagonal neighbors,
// so context reaches Chebyshev distance 2.
inline constexpr int kMargin = 2;

inline bool InInterior(int width, int height, Site s) {
  return s.row >= kMargin && s.row <= height - 1 - kMargin &&
         s.col >= kMargin && s.col <= width - 1 - kMargin;
}

inline std::size_t LinearIndex(int width, Site s) {
  return static_cast<std::size_t>(s.row) * width + s.col;
}

// Interior sites of the given parity in row-major order.
std::vector<Site> EmbeddableSites(int width, int height, Parity target);

inline std::vector<Site> EmbeddableSites(const GrayImage& img, Parity target) {
  return EmbeddableSites(img.width(), img.height(), target);
}

// Pixels outside the interior (the two-pixel frame), row-major.
std::vector<Site> MarginSites(int width, int height);

}  // namespace ppe
