#include "ppe/lattice.hpp"

namespace ppe {

const char* ParityName(Parity p) {
  return p == Parity::kCross ? "cross" : "dot";
}

std::vector<Site> EmbeddableSites(int width, int height, Parity target) {
  std::vector<Site> sites;
  if (width < 2 * kMargin + 1 || height < 2 * kMargin + 1) return sites;
  const int rows = height - 2 * kMargin;
  const int cols = width - 2 * kMargin;
  sites.reserve(static_cast<std::size_t>(rows) * cols / 2 + 1);
  for (int i = kMargin; i <= height - 1 - kMargin; ++i) {
    // First column in this row with the requested parity.
    int j = kMargin;
    if (ParityOf({i, j}) != target) ++j;
    for (; j <= width - 1 - kMargin; j += 2) sites.push_back({i, j});
  }
  return sites;
}

std::vector<Site> MarginSites(int width, int height) {
  std::vector<Site> sites;
  for (int i = 0; i < height; ++i) {
    for (int j = 0; j < width; ++j) {
      if (!InInterior(width, height, {i, j})) sites.push_back({i, j});
    }
  }
  return sites;
}

}  // namespace ppe
