#include "ppe/codec.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <utility>

#include "ppe/complexity.hpp"
#include "ppe/error.hpp"

namespace ppe {

// ---------------------------------------------------------------------------
// Location map

int MapIndexBits(int width, int height) {
  const std::uint64_t n = static_cast<std::uint64_t>(width) * height;
  return n <= 1 ? 1 : static_cast<int>(std::bit_width(n - 1));
}

SweepResult BoundarySweep(const GrayImage& img) {
  SweepResult out{img, {}};
  const int w = img.width();
  const int h = img.height();
  for (int i = kMargin; i <= h - 1 - kMargin; ++i) {
    for (int j = kMargin; j <= w - 1 - kMargin; ++j) {
      std::uint8_t& v = out.adjusted(i, j);
      if (v != 0 && v != 255) continue;
      out.map.entries.push_back(
          {static_cast<std::uint32_t>(LinearIndex(w, {i, j})), v == 255});
      v = (v == 255) ? 254 : 1;
    }
  }
  const std::size_t bits =
      out.map.entries.size() * static_cast<std::size_t>(MapIndexBits(w, h) + 1);
  if (bits > kMaxMapBits) {
    throw Error(ErrorCode::kPathologicalBoundary,
                "pathological boundary density: location map needs " +
                    std::to_string(bits) + " bits");
  }
  return out;
}

BitString EncodeLocationMap(const LocationMap& map, int width, int height) {
  const int index_bits = MapIndexBits(width, height);
  BitWriter out;
  for (const MapEntry& e : map.entries) {
    out.Write(e.index, index_bits);
    out.Write(e.was_white ? 1 : 0, 1);
  }
  return std::move(out).bits();
}

LocationMap DecodeLocationMap(std::span<const std::uint8_t> bits, int width,
                              int height) {
  const int index_bits = MapIndexBits(width, height);
  const std::size_t entry_bits = static_cast<std::size_t>(index_bits) + 1;
  if (bits.size() % entry_bits != 0) {
    throw Error(ErrorCode::kCorruptStego,
                "location map length is not a whole number of entries");
  }
  const std::uint64_t pixel_count = static_cast<std::uint64_t>(width) * height;
  LocationMap map;
  BitReader in(bits);
  while (in.remaining() > 0) {
    MapEntry e;
    const std::uint64_t index = in.Read(index_bits);
    e.was_white = in.Read(1) != 0;
    if (index >= pixel_count) {
      throw Error(ErrorCode::kMapIndexOutOfRange,
                  "location map index " + std::to_string(index) +
                      " outside a " + std::to_string(pixel_count) +
                      "-pixel image");
    }
    if (!map.entries.empty() && index <= map.entries.back().index) {
      throw Error(ErrorCode::kCorruptStego,
                  "location map indices are not increasing");
    }
    e.index = static_cast<std::uint32_t>(index);
    map.entries.push_back(e);
  }
  return map;
}

// ---------------------------------------------------------------------------
// Header

BitString EncodeHeader(const StegoHeader& header) {
  const std::size_t pass_count = header.passes.size();
  if (pass_count != 1 && pass_count != 2) {
    throw Error(ErrorCode::kInvalidArgument, "header needs one or two passes");
  }
  BitWriter out;
  out.Write(kHeaderMagic, 8);
  out.Write(kHeaderVersion, 4);
  out.Write(pass_count, 2);
  for (const PassHeader& p : header.passes) {
    out.WriteSigned(p.params.left_peak, kParamBits);
    out.WriteSigned(p.params.left_zero, kParamBits);
    out.WriteSigned(p.params.right_peak, kParamBits);
    out.WriteSigned(p.params.right_zero, kParamBits);
    out.Write(p.bit_count, kBitCountBits);
  }
  return std::move(out).bits();
}

StegoHeader DecodeHeader(std::span<const std::uint8_t> bits) {
  BitReader in(bits);
  const std::uint64_t magic = in.Read(8);
  const std::uint64_t version = in.Read(4);
  const std::uint64_t pass_count = in.Read(2);
  if (magic != kHeaderMagic || version != kHeaderVersion ||
      (pass_count != 1 && pass_count != 2)) {
    throw Error(ErrorCode::kNotStegoImage, "not a PPE-RDH image");
  }
  StegoHeader header;
  for (std::uint64_t p = 0; p < pass_count; ++p) {
    PassHeader ph;
    ph.params.left_peak = static_cast<int>(in.ReadSigned(kParamBits));
    ph.params.left_zero = static_cast<int>(in.ReadSigned(kParamBits));
    ph.params.right_peak = static_cast<int>(in.ReadSigned(kParamBits));
    ph.params.right_zero = static_cast<int>(in.ReadSigned(kParamBits));
    ph.bit_count = static_cast<std::uint32_t>(in.Read(kBitCountBits));
    if (!ph.params.IsOrdered()) {
      throw Error(ErrorCode::kCorruptStego,
                  "header shift parameters are out of order");
    }
    header.passes.push_back(ph);
  }
  return header;
}

std::vector<Site> HeaderSites(int width, int height, std::size_t count) {
  std::vector<Site> sites;
  sites.reserve(count);
  for (int i = 0; i < height && sites.size() < count; ++i) {
    for (int j = 0; j < width && sites.size() < count; ++j) {
      if (!InInterior(width, height, {i, j})) sites.push_back({i, j});
    }
  }
  if (sites.size() < count) {
    throw Error(ErrorCode::kCapacityTooSmall,
                "image margin holds " + std::to_string(sites.size()) +
                    " pixels, header needs " + std::to_string(count));
  }
  return sites;
}

namespace {

BitString ReadLsbs(const GrayImage& img, std::span<const Site> sites) {
  BitString bits;
  bits.reserve(sites.size());
  for (const Site s : sites) bits.push_back(img(s.row, s.col) & 1u);
  return bits;
}

void WriteLsbs(GrayImage& img, std::span<const Site> sites,
               std::span<const std::uint8_t> bits) {
  for (std::size_t k = 0; k < sites.size(); ++k) {
    std::uint8_t& v = img(sites[k].row, sites[k].col);
    v = static_cast<std::uint8_t>((v & 0xFEu) | (bits[k] & 1u));
  }
}

void ClearLsbs(GrayImage& img, std::span<const Site> sites) {
  for (const Site s : sites) img(s.row, s.col) &= 0xFEu;
}

int Sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

StegoHeader ReadHeader(const GrayImage& marked) {
  if (marked.width() < kMinEmbeddableSide ||
      marked.height() < kMinEmbeddableSide) {
    throw Error(ErrorCode::kNotStegoImage, "not a PPE-RDH image");
  }
  const std::size_t margin =
      MarginSites(marked.width(), marked.height()).size();
  if (margin < HeaderBitLength(1)) {
    throw Error(ErrorCode::kNotStegoImage, "not a PPE-RDH image");
  }
  const auto prefix_sites = HeaderSites(marked.width(), marked.height(), 14);
  const BitString prefix = ReadLsbs(marked, prefix_sites);
  BitReader in(prefix);
  in.Read(12);
  const auto pass_count = static_cast<int>(in.Read(2));
  // Any other pass count is rejected by DecodeHeader.
  const std::size_t length = HeaderBitLength(pass_count == 2 ? 2 : 1);
  if (length > margin) {
    throw Error(ErrorCode::kNotStegoImage, "not a PPE-RDH image");
  }
  const auto sites = HeaderSites(marked.width(), marked.height(), length);
  return DecodeHeader(ReadLsbs(marked, sites));
}

// ---------------------------------------------------------------------------
// Single pass

PassOutcome EmbedPass(GrayImage& img, std::span<const PeRecord> sequence,
                      const ShiftParams& params,
                      std::span<const std::uint8_t> bits) {
  PassOutcome out;
  if (bits.empty()) return out;
  if (!params.IsOrdered()) {
    throw Error(ErrorCode::kInvalidArgument, "shift parameters out of order");
  }
  const int lp = params.left_peak;
  const int lz = params.left_zero;
  const int rp = params.right_peak;
  const int rz = params.right_zero;
  const int mid2 = lp + rp;  // twice the midpoint

  std::size_t next_bit = 0;
  for (const PeRecord& r : sequence) {
    ++out.visited;
    const int e = r.ppe;
    int marked = e;
    if (e == lp || e == rp) {
      marked = e + Sign(2 * e - mid2) * bits[next_bit++];
    } else if ((e >= lz && e < lp) || (e > rp && e <= rz)) {
      marked = e + Sign(2 * e - mid2);
    }
    if (marked != e) {
      const int value = r.base() + marked;
      if (value < 0 || value > 255) {
        throw Error(ErrorCode::kCapacityExceeded,
                    "marked pixel leaves [0, 255]; boundary sweep missing?");
      }
      img(r.site.row, r.site.col) = static_cast<std::uint8_t>(value);
      ++out.modified;
    }
    if (next_bit == bits.size()) return out;
  }
  throw Error(ErrorCode::kCapacityExceeded,
              "capacity exceeded: " + std::to_string(bits.size() - next_bit) +
                  " bits left after the last site");
}

PassOutcome EmbedPass(GrayImage& img, Parity target, const ShiftParams& params,
                      std::span<const std::uint8_t> bits) {
  const std::vector<PeRecord> sequence = OrderedPpeSequence(img, target);
  return EmbedPass(img, sequence, params, bits);
}

ExtractOutcome ExtractPass(GrayImage& img, Parity target,
                           const ShiftParams& params, std::size_t bit_count) {
  ExtractOutcome out;
  if (bit_count == 0) return out;
  if (!params.IsOrdered()) {
    throw Error(ErrorCode::kCorruptStego, "shift parameters out of order");
  }
  const int lp = params.left_peak;
  const int lz = params.left_zero;
  const int rp = params.right_peak;
  const int rz = params.right_zero;
  const int mid2 = lp + rp;

  out.bits.reserve(bit_count);
  const std::vector<PeRecord> sequence = OrderedPpeSequence(img, target);
  for (const PeRecord& r : sequence) {
    ++out.visited;
    const int marked = img(r.site.row, r.site.col) - r.base();
    int original = marked;
    if (marked == lp || marked == rp) {
      out.bits.push_back(0);
    } else if (marked == lp - 1 || marked == rp + 1) {
      out.bits.push_back(1);
      original = marked - Sign(2 * marked - mid2);
    } else if ((marked >= lz && marked < lp) || (marked > rp && marked <= rz)) {
      original = marked - Sign(2 * marked - mid2);
    }
    if (original != marked) {
      const int value = r.base() + original;
      if (value < 0 || value > 255) {
        throw Error(ErrorCode::kCorruptStego,
                    "corrupt or truncated stego image: recovered pixel out of "
                    "range");
      }
      img(r.site.row, r.site.col) = static_cast<std::uint8_t>(value);
    }
    if (out.bits.size() == bit_count) return out;
  }
  throw Error(ErrorCode::kCorruptStego,
              "corrupt or truncated stego image: read " +
                  std::to_string(out.bits.size()) + " of " +
                  std::to_string(bit_count) + " bits");
}

// ---------------------------------------------------------------------------
// Whole pipeline

BitString KeyedPad(const std::string& key, std::size_t length) {
  // FNV-1a of the key seeds the generator.
  std::uint64_t seed = 0xcbf29ce484222325ull;
  for (const unsigned char c : key) {
    seed ^= c;
    seed *= 0x100000001b3ull;
  }
  std::mt19937_64 gen(seed);
  BitString pad(length);
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < length; ++k) {
    if (k % 64 == 0) word = gen();
    pad[k] = static_cast<std::uint8_t>((word >> (63 - k % 64)) & 1u);
  }
  return pad;
}

namespace {

void XorInPlace(BitString& bits, const std::string& key) {
  const BitString pad = KeyedPad(key, bits.size());
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] ^= pad[k];
}

Parity PassTarget(std::size_t pass) {
  return pass == 0 ? Parity::kCross : Parity::kDot;
}

// Parameters recorded for a pass that carries nothing.
constexpr ShiftParams kIdleParams{0, -1, 1, 2};

}  // namespace

EmbedResult Embed(const GrayImage& cover, std::span<const std::uint8_t> secret,
                  const EmbedOptions& options) {
  if (cover.width() < kMinEmbeddableSide ||
      cover.height() < kMinEmbeddableSide) {
    throw Error(ErrorCode::kImageTooSmall,
                "cover must be at least 8x8 pixels");
  }
  if (options.passes != 1 && options.passes != 2) {
    throw Error(ErrorCode::kInvalidArgument, "passes must be 1 or 2");
  }
  const int w = cover.width();
  const int h = cover.height();

  SweepResult swept = BoundarySweep(cover);
  const std::size_t header_bits = HeaderBitLength(options.passes);
  const std::vector<Site> header_sites = HeaderSites(w, h, header_bits);

  GrayImage work = std::move(swept.adjusted);
  const BitString carried = ReadLsbs(work, header_sites);
  ClearLsbs(work, header_sites);

  BitString payload(secret.begin(), secret.end());
  if (options.key) XorInPlace(payload, *options.key);
  const std::size_t first_share =
      options.passes == 2 ? (payload.size() + 1) / 2 : payload.size();

  const BitString map_bits = EncodeLocationMap(swept.map, w, h);
  BitWriter first;
  first.Append(carried);
  first.Write(map_bits.size(), kMapLengthBits);
  first.Append(map_bits);
  const std::size_t overhead = first.size();
  first.Append(std::span(payload).first(first_share));

  std::vector<BitString> streams;
  streams.push_back(std::move(first).bits());
  if (options.passes == 2) {
    streams.emplace_back(payload.begin() + first_share, payload.end());
  }

  EmbedResult result;
  result.map = std::move(swept.map);
  result.overhead_bits = overhead;
  StegoHeader header;
  for (std::size_t p = 0; p < streams.size(); ++p) {
    const BitString& stream = streams[p];
    if (stream.size() > kMaxPassBits) {
      throw Error(ErrorCode::kCapacityTooSmall,
                  "pass stream of " + std::to_string(stream.size()) +
                      " bits exceeds the header's 24-bit count");
    }
    PassReport report;
    report.target = PassTarget(p);
    report.rho = stream.size();
    report.params = kIdleParams;
    if (!stream.empty()) {
      const std::vector<PeRecord> sequence =
          OrderedPpeSequence(work, report.target);
      std::vector<int> ppes;
      ppes.reserve(sequence.size());
      for (const PeRecord& r : sequence) ppes.push_back(r.ppe);
      const std::uint64_t step = options.step ? options.step : stream.size();
      ParameterSelection sel;
      try {
        sel = SelectParameters(ppes, {stream.size(), step});
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSelectionFailure) throw;
        throw Error(ErrorCode::kCapacityTooSmall,
                    std::string("image capacity too small for payload (") +
                        ParityName(report.target) + " pass needs " +
                        std::to_string(stream.size()) + " bits)");
      }
      report.params = sel.params;
      report.prefix_length = sel.prefix_length;
      const PassOutcome pass = EmbedPass(work, sequence, sel.params, stream);
      report.visited = pass.visited;
      report.modified = pass.modified;
    }
    header.passes.push_back(
        {report.params, static_cast<std::uint32_t>(stream.size())});
    result.passes.push_back(report);
  }

  WriteLsbs(work, header_sites, EncodeHeader(header));
  result.psnr = Psnr(cover, work);
  result.marked = std::move(work);
  return result;
}

ExtractResult Extract(const GrayImage& marked,
                      const std::optional<std::string>& key) {
  ExtractResult result;
  result.header = ReadHeader(marked);
  const int w = marked.width();
  const int h = marked.height();
  const int pass_count = static_cast<int>(result.header.passes.size());
  const std::vector<Site> header_sites =
      HeaderSites(w, h, HeaderBitLength(pass_count));

  GrayImage work = marked;
  ClearLsbs(work, header_sites);

  std::vector<BitString> streams(pass_count);
  for (int p = pass_count - 1; p >= 0; --p) {
    const PassHeader& ph = result.header.passes[p];
    streams[p] =
        ExtractPass(work, PassTarget(p), ph.params, ph.bit_count).bits;
  }

  BitReader first(streams[0]);
  const auto carried = first.Take(header_sites.size());
  const std::size_t map_length = first.Read(kMapLengthBits);
  const LocationMap map = DecodeLocationMap(first.Take(map_length), w, h);
  const auto first_share = first.Take(first.remaining());

  WriteLsbs(work, header_sites, carried);
  for (const MapEntry& e : map.entries) {
    const Site s{static_cast<int>(e.index / w), static_cast<int>(e.index % w)};
    std::uint8_t& v = work(s.row, s.col);
    if (!InInterior(w, h, s) || v != (e.was_white ? 254 : 1)) {
      throw Error(ErrorCode::kCorruptStego,
                  "location map entry does not match the recovered image");
    }
    v = e.was_white ? 255 : 0;
  }

  result.secret.assign(first_share.begin(), first_share.end());
  for (int p = 1; p < pass_count; ++p) {
    result.secret.insert(result.secret.end(), streams[p].begin(),
                         streams[p].end());
  }
  if (key) XorInPlace(result.secret, *key);
  result.recovered = std::move(work);
  return result;
}

}  // namespace ppe
