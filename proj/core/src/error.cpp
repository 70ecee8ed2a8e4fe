#include "ppe/error.hpp"

namespace ppe {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadMagic: return "bad_magic";
    case ErrorCode::kUnsupportedMaxval: return "unsupported_maxval";
    case ErrorCode::kMalformedHeader: return "malformed_header";
    case ErrorCode::kTruncatedRaster: return "truncated_raster";
    case ErrorCode::kImageTooSmall: return "image_too_small";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kSiteOutOfRange: return "site_out_of_range";
    case ErrorCode::kValueOutOfRange: return "value_out_of_range";
    case ErrorCode::kHistogramSaturated: return "histogram_saturated";
    case ErrorCode::kInsufficientCapacity: return "insufficient_capacity";
    case ErrorCode::kSelectionFailure: return "selection_failure";
    case ErrorCode::kCapacityTooSmall: return "capacity_too_small";
    case ErrorCode::kCapacityExceeded: return "capacity_exceeded";
    case ErrorCode::kPathologicalBoundary: return "pathological_boundary_density";
    case ErrorCode::kNotStegoImage: return "not_stego_image";
    case ErrorCode::kCorruptStego: return "corrupt_stego_image";
    case ErrorCode::kTruncatedStream: return "truncated_stream";
    case ErrorCode::kMapIndexOutOfRange: return "map_index_out_of_range";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIoError: return "io_error";
  }
  return "unknown";
}

}  // namespace ppe
