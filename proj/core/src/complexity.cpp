#include "ppe/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ppe/error.hpp"

namespace ppe {

namespace {

std::int64_t KeyUnchecked(const GrayImage& img, int i, int j) {
  const int up = img(i - 1, j);
  const int right = img(i, j + 1);
  const int down = img(i + 1, j);
  const int left = img(i, j - 1);
  const int diffs[6] = {
      std::abs(up - right),   std::abs(up - down),    std::abs(up - left),
      std::abs(right - down), std::abs(right - left), std::abs(down - left),
  };
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  for (const int d : diffs) {
    sum += d;
    sum_sq += static_cast<std::int64_t>(d) * d;
  }
  return 6 * sum_sq - sum * sum;
}

}  // namespace

std::int64_t ComplexityKey(const GrayImage& img, Site site) {
  if (site.row < 1 || site.col < 1 || site.row > img.height() - 2 ||
      site.col > img.width() - 2) {
    throw Error(ErrorCode::kSiteOutOfRange,
                "local complexity needs all four axial neighbours");
  }
  return KeyUnchecked(img, site.row, site.col);
}

double LocalComplexity(const GrayImage& img, Site site) {
  return std::sqrt(static_cast<double>(ComplexityKey(img, site))) / 6.0;
}

std::vector<PeRecord> OrderedPpeSequence(const GrayImage& img, Parity target) {
  std::vector<PeRecord> records = PpeRecords(img, target);
  for (PeRecord& r : records) {
    r.complexity_key = KeyUnchecked(img, r.site.row, r.site.col);
    r.epsilon = std::sqrt(static_cast<double>(r.complexity_key)) / 6.0;
  }
  // Records arrive in raster order, so a stable sort keeps raster tie-breaks.
  std::stable_sort(records.begin(), records.end(),
                   [](const PeRecord& a, const PeRecord& b) {
                     return a.complexity_key < b.complexity_key;
                   });
  return records;
}

}  // namespace ppe
