#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppe/bench.hpp"
#include "ppe/bitstream.hpp"
#include "ppe/codec.hpp"
#include "ppe/error.hpp"
#include "ppe/image.hpp"

namespace fs = std::filesystem;

namespace {

std::optional<std::string> OptionalKey(const std::string& key) {
  if (key.empty()) return std::nullopt;
  return key;
}

void PrintParams(std::ostream& out, const ppe::ShiftParams& p) {
  out << "lp=" << p.left_peak << " lz=" << p.left_zero
      << " rp=" << p.right_peak << " rz=" << p.right_zero;
}

int RunEmbed(const fs::path& cover_path, const fs::path& data_path,
             const fs::path& out_path, int passes, std::uint64_t step,
             const std::string& key) {
  const ppe::GrayImage cover =
      ppe::ReadPgmFile(cover_path, ppe::kMinEmbeddableSide);
  const auto bytes = ppe::ReadFileBytes(data_path);
  const ppe::BitString secret = ppe::BytesToBits(bytes);

  ppe::EmbedOptions options;
  options.passes = passes;
  options.step = step;
  options.key = OptionalKey(key);
  const ppe::EmbedResult result = ppe::Embed(cover, secret, options);
  ppe::WritePgmFile(out_path, result.marked);

  std::cout << "embedded " << secret.size() << " bits, overhead "
            << result.overhead_bits << " bits, psnr "
            << ppe::FormatDecibels(result.psnr) << " dB\n";
  for (std::size_t i = 0; i < result.passes.size(); ++i) {
    const auto& pass = result.passes[i];
    std::cout << "pass " << i + 1 << " (" << ppe::ParityName(pass.target)
              << "): ";
    PrintParams(std::cout, pass.params);
    std::cout << " bits=" << pass.rho << " modified=" << pass.modified
              << "\n";
  }
  return 0;
}

int RunExtract(const fs::path& marked_path, const fs::path& out_path,
               const fs::path& data_path, const std::string& key) {
  const ppe::GrayImage marked =
      ppe::ReadPgmFile(marked_path, ppe::kMinEmbeddableSide);
  const ppe::ExtractResult result = ppe::Extract(marked, OptionalKey(key));
  ppe::WritePgmFile(out_path, result.recovered);
  if (!data_path.empty()) {
    ppe::WriteFileBytes(data_path, ppe::BitsToBytes(result.secret));
  }
  std::cout << "extracted " << result.secret.size() << " bits\n";
  return 0;
}

int RunInfo(const fs::path& path) {
  const ppe::GrayImage marked = ppe::ReadPgmFile(path, ppe::kMinEmbeddableSide);
  const ppe::StegoHeader header = ppe::ReadHeader(marked);
  std::cout << "passes " << header.passes.size() << "\n";
  for (std::size_t i = 0; i < header.passes.size(); ++i) {
    std::cout << "pass " << i + 1 << ": ";
    PrintParams(std::cout, header.passes[i].params);
    std::cout << " bits=" << header.passes[i].bit_count << "\n";
  }
  return 0;
}

int RunPsnr(const fs::path& a, const fs::path& b) {
  const double db = ppe::Psnr(ppe::ReadPgmFile(a), ppe::ReadPgmFile(b));
  std::cout << ppe::FormatDecibels(db, 4) << "\n";
  return 0;
}

int RunBenchCommand(ppe::BenchConfig config, const fs::path& out_path) {
  if (config.workdir.empty()) {
    config.workdir = fs::temp_directory_path() / "ppe_rdh_bench";
  }
  fs::create_directories(config.workdir);
  const auto rows = ppe::RunBench(config);
  if (out_path.empty()) {
    ppe::WriteBenchCsv(std::cout, config, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw ppe::Error(ppe::ErrorCode::kIoError,
                       "cannot open " + out_path.string());
    }
    ppe::WriteBenchCsv(out, config, rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible data hiding in grayscale PGM images"};
  app.require_subcommand(1);

  fs::path cover, data, out, marked;
  int passes = 2;
  std::uint64_t step = 0;
  std::string key;

  auto* embed = app.add_subcommand("embed", "Hide a file inside a cover image");
  embed->add_option("--cover", cover, "Cover image (binary PGM)")->required();
  embed->add_option("--data", data, "Secret file")->required();
  embed->add_option("--out", out, "Marked image to write")->required();
  embed->add_option("--passes", passes, "1 or 2")->check(CLI::Range(1, 2));
  embed->add_option("--step", step, "Parameter search step, 0 for automatic");
  embed->add_option("--key", key, "Scrambling key");

  auto* extract =
      app.add_subcommand("extract", "Recover the secret and the cover");
  extract->add_option("--marked", marked, "Marked image")->required();
  extract->add_option("--out", out, "Recovered cover to write")->required();
  extract->add_option("--data", data, "Where to write the secret");
  extract->add_option("--key", key, "Scrambling key");

  fs::path info_path;
  auto* info = app.add_subcommand("info", "Print the embedded header");
  info->add_option("image", info_path, "Marked image")->required();

  fs::path psnr_a, psnr_b;
  auto* psnr = app.add_subcommand("psnr", "PSNR between two images in dB");
  psnr->add_option("a", psnr_a)->required();
  psnr->add_option("b", psnr_b)->required();

  ppe::BenchConfig bench_config;
  fs::path bench_out;
  auto* bench = app.add_subcommand("bench", "Payload/distortion sweep to CSV");
  bench->add_option("--images", bench_config.images, "Cover images")
      ->required();
  bench->add_option("--payloads", bench_config.payloads, "Payloads in bits")
      ->required();
  bench->add_option("--passes", bench_config.passes, "1 or 2")
      ->check(CLI::Range(1, 2));
  bench->add_option("--step", bench_config.step, "Parameter search step");
  bench->add_option("--seed", bench_config.seed, "Secret generator seed");
  bench->add_option("--workdir", bench_config.workdir,
                    "Directory for marked images");
  bench->add_option("--threads", bench_config.threads, "Worker threads");
  bench->add_option("--out", bench_out, "CSV file, stdout if omitted");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*embed) return RunEmbed(cover, data, out, passes, step, key);
    if (*extract) return RunExtract(marked, out, data, key);
    if (*info) return RunInfo(info_path);
    if (*psnr) return RunPsnr(psnr_a, psnr_b);
    if (*bench) return RunBenchCommand(bench_config, bench_out);
  } catch (const ppe::Error& e) {
    std::cerr << "error: " << ppe::ErrorName(e.code()) << ": " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
