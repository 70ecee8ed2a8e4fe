#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppe {

// Every failure surfaced by the library carries one of these codes. The CLI
// prints ErrorName(code) so scripts can match on it.
enum class ErrorCode {
  kBadMagic,              // PGM magic is not "P5"
  kUnsupportedMaxval,     // PGM maxval other than 255
  kMalformedHeader,       // PGM header tokens missing or non-numeric
  kTruncatedRaster,       // fewer raster bytes than width*height
  kImageTooSmall,         // width or height below 8
  kDimensionMismatch,     // psnr / diff on differently sized images
  kSiteOutOfRange,        // predictor evaluated outside its context window
  kValueOutOfRange,       // PPE outside the histogram domain
  kHistogramSaturated,    // no empty bin on one side of the histogram
  kInsufficientCapacity,  // no peak pair can carry the payload
  kSelectionFailure,      // Algorithm-1 style search exhausted the sequence
  kCapacityTooSmall,      // embed: the cover cannot host the payload
  kCapacityExceeded,      // embed_pass ran out of sites (internal)
  kPathologicalBoundary,  // location map longer than its length field allows
  kNotStegoImage,         // header magic/version mismatch
  kCorruptStego,          // pass ran out of sites before all bits were read
  kTruncatedStream,       // embedded stream shorter than its own fields
  kMapIndexOutOfRange,    // location map entry outside the image
  kInvalidArgument,
  kIoError,
};

std::string_view ErrorName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ppe
