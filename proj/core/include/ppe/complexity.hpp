#pragma once

#include <cstdint>
#include <vector>

#include "ppe/image.hpp"
#include "ppe/lattice.hpp"
#include "ppe/predictor.hpp"

namespace ppe {

// 6*sum(r^2) - (sum r)^2 over the six pairwise absolute differences of the
// four axial neighbours. Equals 36*epsilon^2, so it orders sites exactly as
// the local complexity does while staying an integer.
std::int64_t ComplexityKey(const GrayImage& img, Site site);

// Population standard deviation of the six pairwise neighbour differences.
double LocalComplexity(const GrayImage& img, Site site);

// All embeddable sites of `target` with their PPE records, ascending
// complexity, ties in raster order. Only context-parity pixels feed the
// result, so the receiver rebuilds the same sequence from a marked image.
std::vector<PeRecord> OrderedPpeSequence(const GrayImage& img, Parity target);

}  // namespace ppe
