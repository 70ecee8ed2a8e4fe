#pragma once

#include <cstdint>
#include <vector>

#include "ppe/image.hpp"
#include "ppe/lattice.hpp"

namespace ppe {

// Nearest integer to num/den (den > 0), ties away from zero. Shared by every
// rounding step so sender and receiver agree bit for bit.
constexpr std::int64_t RoundDiv(std::int64_t num, std::int64_t den) {
  return num >= 0 ? (2 * num + den) / (2 * den)
                  : -((-2 * num + den) / (2 * den));
}

// Intermediates of a two-direction weighted interpolation.
//
// Directional means and spreads are held as exact integers: `first_sum` is
// 2*u', `second_sum` is 2*u'', and the spreads are the directional variances
// multiplied by `spread_scale` (48 for the axial predictor, 12 for the
// diagonal one). The weight w = s''/(s'+s'') and the rounded prediction are
// derived from these without floating point.
struct SitePrediction {
  int first_sum = 0;
  int second_sum = 0;
  std::int64_t first_spread = 0;
  std::int64_t second_spread = 0;
  std::int64_t spread_scale = 1;
  int predicted = 0;  // u+

  double first_mean() const { return first_sum / 2.0; }
  double second_mean() const { return second_sum / 2.0; }
  double first_variance() const {
    return static_cast<double>(first_spread) / spread_scale;
  }
  double second_variance() const {
    return static_cast<double>(second_spread) / spread_scale;
  }
  // 1/2 when both spreads vanish.
  double weight() const;
};

// Prediction-error chain of one target site: e = u - u+, e' from the four
// neighbouring PEs, PPE e+ = e - e'. `complexity_key` and `epsilon` are
// filled in by the complexity sort.
struct PeRecord {
  Site site;
  int predicted = 0;        // u+
  int error = 0;            // e
  int predicted_error = 0;  // e'
  int ppe = 0;              // e+
  std::int64_t complexity_key = 0;
  double epsilon = 0.0;

  // u+ + e', the part of the pixel the embedder never touches.
  int base() const { return predicted + predicted_error; }
};

// Horizontal/vertical interpolation from the four axial neighbours, with
// spreads centred on (u' + u'')/2. Requires an interior site.
SitePrediction PredictAxial(const GrayImage& img, Site site);

// Diagonal interpolation (NW-SE first, NE-SW second) with spreads centred on
// the site's own stored value. Requires all four diagonal neighbours.
SitePrediction PredictDiagonal(const GrayImage& img, Site site);

// Full PPE chain for one interior site.
PeRecord PpeOf(const GrayImage& img, Site site);

// PPE records for every embeddable site of `target`, raster order. Context
// predictions are computed once and shared between the targets that use
// them.
std::vector<PeRecord> PpeRecords(const GrayImage& img, Parity target);

}  // namespace ppe
