#include "ppe/histogram.hpp"

#include <string>
#include <vector>

#include "ppe/error.hpp"

namespace ppe {

void PpeHistogram::Add(int value) {
  if (value < kMinValue || value > kMaxValue) {
    throw Error(ErrorCode::kValueOutOfRange,
                "PPE value " + std::to_string(value) + " outside [-510, 510]");
  }
  ++bins_[static_cast<std::size_t>(value - kMinValue)];
  ++total_;
}

std::uint64_t PpeHistogram::TopTwoSum() const {
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  for (const std::uint32_t c : bins_) {
    if (c > first) {
      second = first;
      first = c;
    } else if (c > second) {
      second = c;
    }
  }
  return first + second;
}

PpeHistogram BuildHistogram(std::span<const int> ppes) {
  PpeHistogram h;
  for (const int v : ppes) h.Add(v);
  return h;
}

ZeroBins FindZeroBins(const PpeHistogram& h) {
  ZeroBins z;
  bool found_left = false;
  for (int x = -1; x >= PpeHistogram::kMinValue; --x) {
    if (h.count(x) == 0) {
      z.left = x;
      found_left = true;
      break;
    }
  }
  bool found_right = false;
  for (int x = 2; x <= PpeHistogram::kMaxValue; ++x) {
    if (h.count(x) == 0) {
      z.right = x;
      found_right = true;
      break;
    }
  }
  if (!found_left || !found_right) {
    throw Error(ErrorCode::kHistogramSaturated,
                std::string("histogram saturated: no empty bin on the ") +
                    (found_left ? "positive" : "negative") + " side");
  }
  return z;
}

namespace {

void CheckZeros(ZeroBins zeros) {
  if (zeros.left >= zeros.right) {
    throw Error(ErrorCode::kInvalidArgument, "zero bins out of order");
  }
}

[[noreturn]] void ThrowInsufficient(std::uint64_t rho) {
  throw Error(ErrorCode::kInsufficientCapacity,
              "insufficient capacity: no peak pair carries " +
                  std::to_string(rho) + " bits");
}

}  // namespace

PeakChoice SelectPeaks(const PpeHistogram& h, ZeroBins zeros,
                       std::uint64_t rho) {
  CheckZeros(zeros);
  const int lz = zeros.left;
  const int rz = zeros.right;
  // prefix[k] = sum of h over [lz, lz + k).
  const int span = rz - lz + 1;
  std::vector<std::uint64_t> prefix(static_cast<std::size_t>(span) + 1, 0);
  for (int k = 0; k < span; ++k) {
    prefix[k + 1] = prefix[k] + h.count(lz + k);
  }
  const std::uint64_t all = prefix[span];

  bool found = false;
  PeakChoice best;
  // Descending xl then ascending xr; only strict improvements replace the
  // incumbent, which realises the tie-break order.
  for (int xl = rz - 2; xl > lz; --xl) {
    const std::uint64_t left_mass = prefix[xl - lz];
    for (int xr = xl + 1; xr < rz; ++xr) {
      if (std::uint64_t{h.count(xl)} + h.count(xr) < rho) continue;
      const std::uint64_t right_mass = all - prefix[xr - lz + 1];
      const std::uint64_t mass = left_mass + right_mass;
      if (!found || mass < best.shifted_mass) {
        best.left = xl;
        best.right = xr;
        best.shifted_mass = mass;
        found = true;
      }
    }
  }
  if (!found) ThrowInsufficient(rho);
  best.objective = static_cast<double>(rho) / 2.0 +
                   static_cast<double>(best.shifted_mass);
  return best;
}

PeakChoice SelectPeaksOracle(const PpeHistogram& h, ZeroBins zeros,
                             std::uint64_t rho) {
  CheckZeros(zeros);
  bool found = false;
  PeakChoice best;
  auto better = [](const PeakChoice& a, const PeakChoice& b) {
    if (a.shifted_mass != b.shifted_mass) return a.shifted_mass < b.shifted_mass;
    if (a.left != b.left) return a.left > b.left;
    return a.right < b.right;
  };
  for (int xl = zeros.left + 1; xl < zeros.right; ++xl) {
    for (int xr = xl + 1; xr < zeros.right; ++xr) {
      if (std::uint64_t{h.count(xl)} + h.count(xr) < rho) continue;
      PeakChoice c;
      c.left = xl;
      c.right = xr;
      for (int k = zeros.left; k < xl; ++k) c.shifted_mass += h.count(k);
      for (int k = xr + 1; k <= zeros.right; ++k) c.shifted_mass += h.count(k);
      if (!found || better(c, best)) {
        best = c;
        found = true;
      }
    }
  }
  if (!found) ThrowInsufficient(rho);
  best.objective = static_cast<double>(rho) / 2.0 +
                   static_cast<double>(best.shifted_mass);
  return best;
}

ParameterSelection SelectParameters(std::span<const int> ordered_ppes,
                                    SelectionConfig cfg) {
  if (cfg.rho == 0 || cfg.step == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "selection needs rho >= 1 and step >= 1");
  }
  const std::size_t total = ordered_ppes.size();
  PpeHistogram h;
  for (std::size_t k = 1; k <= total; ++k) {
    h.Add(ordered_ppes[k - 1]);
    if (k % cfg.step != 0 && k != total) continue;
    if (h.TopTwoSum() < cfg.rho) continue;
    // A prefix can pass the capacity test and still have no usable pair
    // between its zero bins; keep growing in that case.
    try {
      const ZeroBins zeros = FindZeroBins(h);
      const PeakChoice peaks = SelectPeaks(h, zeros, cfg.rho);
      ParameterSelection sel;
      sel.params = {peaks.left, zeros.left, peaks.right, zeros.right};
      sel.prefix_length = k;
      sel.objective = peaks.objective;
      return sel;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kHistogramSaturated &&
          e.code() != ErrorCode::kInsufficientCapacity) {
        throw;
      }
    }
  }
  throw Error(ErrorCode::kSelectionFailure,
              "parameter selection failed: " + std::to_string(total) +
                  " PPEs cannot carry " + std::to_string(cfg.rho) + " bits");
}

}  // namespace ppe
