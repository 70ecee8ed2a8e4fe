#include "ppe/predictor.hpp"

#include <string>

#include "ppe/error.hpp"

namespace ppe {

namespace {

int Square(int v) { return v * v; }

// Rounds (s''*u' + s'*u'')/(s' + s'') using the doubled means.
int WeightedPrediction(const SitePrediction& p) {
  const std::int64_t den = p.first_spread + p.second_spread;
  if (den == 0) {
    return static_cast<int>(RoundDiv(p.first_sum + p.second_sum, 4));
  }
  const std::int64_t num =
      p.second_spread * p.first_sum + p.first_spread * p.second_sum;
  return static_cast<int>(RoundDiv(num, 2 * den));
}

[[noreturn]] void ThrowOutOfRange(const char* what, Site s) {
  throw Error(ErrorCode::kSiteOutOfRange,
              std::string(what) + ": site (" + std::to_string(s.row) + ", " +
                  std::to_string(s.col) + ") lacks the required context");
}

SitePrediction DiagonalUnchecked(const GrayImage& img, int i, int j) {
  const int nw = img(i - 1, j - 1);
  const int se = img(i + 1, j + 1);
  const int ne = img(i - 1, j + 1);
  const int sw = img(i + 1, j - 1);
  const int x2 = 2 * img(i, j);

  SitePrediction p;
  p.first_sum = nw + se;
  p.second_sum = ne + sw;
  p.spread_scale = 12;
  p.first_spread =
      Square(2 * nw - x2) + Square(p.first_sum - x2) + Square(2 * se - x2);
  p.second_spread =
      Square(2 * ne - x2) + Square(p.second_sum - x2) + Square(2 * sw - x2);
  p.predicted = WeightedPrediction(p);
  return p;
}

SitePrediction AxialUnchecked(const GrayImage& img, int i, int j) {
  const int left = img(i, j - 1);
  const int right = img(i, j + 1);
  const int up = img(i - 1, j);
  const int down = img(i + 1, j);

  SitePrediction p;
  p.first_sum = left + right;
  p.second_sum = up + down;
  p.spread_scale = 48;
  // Everything scaled by 4 so the centre (u' + u'')/2 is an integer.
  const int c4 = p.first_sum + p.second_sum;
  p.first_spread = Square(4 * left - c4) + Square(2 * p.first_sum - c4) +
                   Square(4 * right - c4);
  p.second_spread = Square(4 * up - c4) + Square(2 * p.second_sum - c4) +
                    Square(4 * down - c4);
  p.predicted = WeightedPrediction(p);
  return p;
}

int DiagonalError(const GrayImage& img, int i, int j) {
  return img(i, j) - DiagonalUnchecked(img, i, j).predicted;
}

}  // namespace

double SitePrediction::weight() const {
  const std::int64_t den = first_spread + second_spread;
  if (den == 0) return 0.5;
  return static_cast<double>(second_spread) / static_cast<double>(den);
}

SitePrediction PredictAxial(const GrayImage& img, Site site) {
  if (!InInterior(img.width(), img.height(), site)) {
    ThrowOutOfRange("axial prediction", site);
  }
  return AxialUnchecked(img, site.row, site.col);
}

SitePrediction PredictDiagonal(const GrayImage& img, Site site) {
  if (site.row < 1 || site.col < 1 || site.row > img.height() - 2 ||
      site.col > img.width() - 2) {
    ThrowOutOfRange("diagonal prediction", site);
  }
  return DiagonalUnchecked(img, site.row, site.col);
}

PeRecord PpeOf(const GrayImage& img, Site site) {
  const SitePrediction axial = PredictAxial(img, site);
  const int i = site.row;
  const int j = site.col;
  const int neighbour_sum = DiagonalError(img, i - 1, j) +
                            DiagonalError(img, i, j + 1) +
                            DiagonalError(img, i + 1, j) +
                            DiagonalError(img, i, j - 1);
  PeRecord r;
  r.site = site;
  r.predicted = axial.predicted;
  r.error = img(i, j) - axial.predicted;
  r.predicted_error = static_cast<int>(RoundDiv(neighbour_sum, 4));
  r.ppe = r.error - r.predicted_error;
  return r;
}

std::vector<PeRecord> PpeRecords(const GrayImage& img, Parity target) {
  const std::vector<Site> sites = EmbeddableSites(img, target);
  std::vector<PeRecord> records;
  records.reserve(sites.size());
  if (sites.empty()) return records;

  // Diagonal PEs of every context pixel that neighbours an interior site,
  // i.e. rows/cols 1..n-2. Cells of the target parity stay unused.
  const int w = img.width();
  const int h = img.height();
  std::vector<int> context_error(static_cast<std::size_t>(w) * h, 0);
  for (int i = 1; i <= h - 2; ++i) {
    for (int j = 1; j <= w - 2; ++j) {
      if (ParityOf({i, j}) == target) continue;
      context_error[static_cast<std::size_t>(i) * w + j] =
          DiagonalError(img, i, j);
    }
  }
  auto ce = [&](int i, int j) {
    return context_error[static_cast<std::size_t>(i) * w + j];
  };

  for (const Site s : sites) {
    const int i = s.row;
    const int j = s.col;
    const SitePrediction axial = AxialUnchecked(img, i, j);
    const int neighbour_sum =
        ce(i - 1, j) + ce(i, j + 1) + ce(i + 1, j) + ce(i, j - 1);
    PeRecord r;
    r.site = s;
    r.predicted = axial.predicted;
    r.error = img(i, j) - axial.predicted;
    r.predicted_error = static_cast<int>(RoundDiv(neighbour_sum, 4));
    r.ppe = r.error - r.predicted_error;
    records.push_back(r);
  }
  return records;
}

}  // namespace ppe
