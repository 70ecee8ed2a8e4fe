#include "ppe/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "ppe/codec.hpp"
#include "ppe/error.hpp"
#include "ppe/lattice.hpp"

namespace ppe {

BitString RandomBits(std::uint64_t seed, std::size_t count) {
  Xorshift64Star gen(seed);
  BitString bits(count);
  std::uint64_t word = 0;
  for (std::size_t k = 0; k < count; ++k) {
    if (k % 64 == 0) word = gen.Next();
    bits[k] = static_cast<std::uint8_t>((word >> (k % 64)) & 1u);
  }
  return bits;
}

ModificationCheck CheckModificationBound(const GrayImage& adjusted,
                                         const GrayImage& marked, int passes) {
  if (adjusted.width() != marked.width() ||
      adjusted.height() != marked.height()) {
    throw Error(ErrorCode::kDimensionMismatch, "image dimensions differ");
  }
  ModificationCheck check;
  const int w = marked.width();
  const int h = marked.height();
  const auto header = HeaderSites(w, h, HeaderBitLength(passes));
  const auto is_header = [&](Site s) {
    return std::find(header.begin(), header.end(), s) != header.end();
  };
  auto fail = [&](Site s, const std::string& why) {
    if (check.ok) {
      check.detail = why + " at (" + std::to_string(s.row) + ", " +
                     std::to_string(s.col) + ")";
    }
    check.ok = false;
  };
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      const int a = adjusted(i, j);
      const int b = marked(i, j);
      if (a == b) continue;
      ++check.changed_pixels;
      const Site s{i, j};
      check.max_abs_diff = std::max(check.max_abs_diff, std::abs(a - b));
      if (std::abs(a - b) > 1) fail(s, "change larger than 1");
      if (InInterior(w, h, s)) {
        if (passes == 1 && ParityOf(s) != Parity::kCross) {
          fail(s, "dot pixel changed by a cross-only embedding");
        }
      } else if (!is_header(s) || (a ^ b) != 1) {
        fail(s, "margin pixel changed outside the header LSBs");
      }
    }
  }
  return check;
}

namespace {

struct Cell {
  std::size_t image;
  std::uint64_t payload;
};

BenchRow RunCell(const BenchConfig& config, const GrayImage& cover,
                 const std::filesystem::path& path, std::uint64_t payload) {
  BenchRow row;
  row.image = path.stem().string();
  row.payload_bits = payload;
  row.passes = config.passes;

  const BitString secret = RandomBits(config.seed, payload);
  EmbedOptions options;
  options.passes = config.passes;
  options.step = config.step;

  const auto start = std::chrono::steady_clock::now();
  const EmbedResult embedded = Embed(cover, secret, options);
  const auto marked_path =
      config.workdir / (row.image + "_" + std::to_string(payload) + "_p" +
                        std::to_string(config.passes) + ".pgm");
  WritePgmFile(marked_path, embedded.marked);
  const GrayImage reloaded = ReadPgmFile(marked_path);
  const ExtractResult extracted = Extract(reloaded);
  const auto stop = std::chrono::steady_clock::now();

  if (extracted.secret != secret) {
    throw Error(ErrorCode::kCorruptStego,
                "bench: secret mismatch for " + row.image + " @ " +
                    std::to_string(payload));
  }
  if (extracted.recovered != cover) {
    throw Error(ErrorCode::kCorruptStego,
                "bench: cover not recovered for " + row.image + " @ " +
                    std::to_string(payload));
  }
  const ModificationCheck mod = CheckModificationBound(
      BoundarySweep(cover).adjusted, reloaded, config.passes);
  if (!mod.ok) {
    throw Error(ErrorCode::kCorruptStego,
                "bench: modification bound violated for " + row.image + ": " +
                    mod.detail);
  }

  row.psnr_db = Psnr(ReadPgmFile(path), reloaded);
  for (const PassReport& p : embedded.passes) row.params.push_back(p.params);
  row.seconds = std::chrono::duration<double>(stop - start).count();
  row.max_abs_diff = mod.max_abs_diff;
  return row;
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  if (config.passes != 1 && config.passes != 2) {
    throw Error(ErrorCode::kInvalidArgument, "passes must be 1 or 2");
  }
  if (!std::is_sorted(config.payloads.begin(), config.payloads.end())) {
    throw Error(ErrorCode::kInvalidArgument, "payloads must be ascending");
  }
  std::filesystem::create_directories(config.workdir);

  std::vector<GrayImage> covers;
  for (const auto& path : config.images) {
    covers.push_back(ReadPgmFile(path, kMinEmbeddableSide));
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (const std::uint64_t p : config.payloads) cells.push_back({i, p});
  }

  std::vector<BenchRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      try {
        const Cell& c = cells[k];
        rows[k] = RunCell(config, covers[c.image], config.images[c.image],
                          c.payload);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(cells.size(), 1));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

void WriteBenchCsv(std::ostream& out, const BenchConfig& config,
                   const std::vector<BenchRow>& rows) {
  out << "# ppe_rdh bench\n";
  out << "# seed=" << config.seed << " step="
      << (config.step ? std::to_string(config.step) : std::string("rho"))
      << " secret=xorshift64*\n";
  out << "image,payload_bits,passes,psnr_db,lp1,lz1,rp1,rz1,lp2,lz2,rp2,rz2,"
         "seconds\n";
  for (const BenchRow& r : rows) {
    out << r.image << ',' << r.payload_bits << ',' << r.passes << ','
        << FormatDecibels(r.psnr_db, 4);
    for (std::size_t p = 0; p < 2; ++p) {
      if (p < r.params.size()) {
        const ShiftParams& s = r.params[p];
        out << ',' << s.left_peak << ',' << s.left_zero << ',' << s.right_peak
            << ',' << s.right_zero;
      } else {
        out << ",,,,";
      }
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.4f", r.seconds);
    out << ',' << secs << '\n';
  }
}

}  // namespace ppe
