#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace ppe {

// Tally of PPE values. Every PPE lies in [-510, 510].
class PpeHistogram {
 public:
  static constexpr int kMinValue = -510;
  static constexpr int kMaxValue = 510;

  void Add(int value);
  std::uint32_t count(int value) const {
    if (value < kMinValue || value > kMaxValue) return 0;
    return bins_[static_cast<std::size_t>(value - kMinValue)];
  }
  std::uint64_t total() const noexcept { return total_; }

  // Largest h(x) + h(y) over distinct bins x != y.
  std::uint64_t TopTwoSum() const;

 private:
  std::array<std::uint32_t, kMaxValue - kMinValue + 1> bins_{};
  std::uint64_t total_ = 0;
};

PpeHistogram BuildHistogram(std::span<const int> ppes);

// Two peak-zero bin pairs; valid parameters satisfy
// left_zero < left_peak < right_peak < right_zero.
struct ShiftParams {
  int left_peak = 0;
  int left_zero = 0;
  int right_peak = 0;
  int right_zero = 0;

  bool IsOrdered() const {
    return left_zero < left_peak && left_peak < right_peak &&
           right_peak < right_zero;
  }
  bool operator==(const ShiftParams&) const = default;
};

struct ZeroBins {
  int left = 0;
  int right = 0;
  bool operator==(const ZeroBins&) const = default;
};

struct PeakChoice {
  int left = 0;
  int right = 0;
  std::uint64_t shifted_mass = 0;  // sum of h over [lz, left) and (right, rz]
  double objective = 0.0;          // rho/2 + shifted_mass

  bool operator==(const PeakChoice&) const = default;
};

// Empty bin closest to zero on the negative side, and the empty bin closest
// to zero among x > 1. Throws kHistogramSaturated if either side is full.
ZeroBins FindZeroBins(const PpeHistogram& h);

// Pair lz < xl < xr < rz with h(xl) + h(xr) >= rho minimising the shifted
// mass. Ties go to the larger xl, then the smaller xr. Prefix sums make each
// candidate O(1), so the search is quadratic in rz - lz.
// Throws kInsufficientCapacity if no pair can carry rho bits.
PeakChoice SelectPeaks(const PpeHistogram& h, ZeroBins zeros,
                       std::uint64_t rho);

// Reference implementation of SelectPeaks: enumerates every pair and sums the
// shifted bins directly. Used by the tests.
PeakChoice SelectPeaksOracle(const PpeHistogram& h, ZeroBins zeros,
                             std::uint64_t rho);

struct SelectionConfig {
  std::uint64_t rho = 1;    // bits to embed
  std::uint64_t step = 1;   // L, prefix growth between evaluations
};

struct ParameterSelection {
  ShiftParams params;
  std::size_t prefix_length = 0;  // k at which the parameters were found
  double objective = 0.0;
};

// Grows the histogram over the ordered PPE sequence and evaluates it at every
// multiple of the step and at the end. The first prefix with a usable pair of
// bins wins. Throws kSelectionFailure if the whole sequence is not enough.
ParameterSelection SelectParameters(std::span<const int> ordered_ppes,
                                    SelectionConfig cfg);

}  // namespace ppe
