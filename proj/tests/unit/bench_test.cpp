#include "ppe/bench.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <sstream>
#include <string>

#include "ppe/codec.hpp"
#include "ppe/error.hpp"
#include "test_support.hpp"

namespace ppe {
namespace {

namespace fs = std::filesystem;
using ::ppe::testing::SmoothImage;

class BenchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ppe_bench_test_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    WritePgmFile(dir_ / "smooth.pgm", SmoothImage(96, 96, 1, 2.0));
    WritePgmFile(dir_ / "rough.pgm", SmoothImage(128, 96, 2, 4.0));
  }
  void TearDown() override { fs::remove_all(dir_); }

  BenchConfig Config(int passes) const {
    BenchConfig c;
    c.images = {dir_ / "smooth.pgm", dir_ / "rough.pgm"};
    c.payloads = {0, 100, 400};
    c.passes = passes;
    c.workdir = dir_ / "work";
    c.threads = 3;
    return c;
  }

  fs::path dir_;
};

TEST(RandomBitsTest, Reproducible) {
  EXPECT_EQ(RandomBits(42, 1000), RandomBits(42, 1000));
  EXPECT_NE(RandomBits(42, 1000), RandomBits(43, 1000));
  const BitString bits = RandomBits(7, 10000);
  std::size_t ones = 0;
  for (auto b : bits) ones += b;
  EXPECT_GT(ones, 4700u);
  EXPECT_LT(ones, 5300u);
}

TEST(ModificationBoundTest, AcceptsRealEmbedding) {
  const GrayImage cover = SmoothImage(64, 64, 3, 2.0);
  for (int passes : {1, 2}) {
    EmbedOptions opt;
    opt.passes = passes;
    const EmbedResult res = Embed(cover, RandomBits(3, 300), opt);
    const ModificationCheck check =
        CheckModificationBound(BoundarySweep(cover).adjusted, res.marked, passes);
    EXPECT_TRUE(check.ok) << check.detail;
    EXPECT_EQ(check.max_abs_diff, 1);
    EXPECT_GT(check.changed_pixels, 0u);
  }
}

TEST(ModificationBoundTest, FlagsViolations) {
  const GrayImage base(32, 32, 100);

  GrayImage jump = base;
  jump(5, 5) = 102;
  EXPECT_FALSE(CheckModificationBound(base, jump, 2).ok);

  GrayImage dot = base;
  dot(5, 5) = 101;  // (5 + 5) even: dot
  EXPECT_FALSE(CheckModificationBound(base, dot, 1).ok);
  EXPECT_TRUE(CheckModificationBound(base, dot, 2).ok);

  GrayImage margin = base;
  margin(31, 31) = 101;
  EXPECT_FALSE(CheckModificationBound(base, margin, 2).ok);

  GrayImage header = base;
  header(0, 3) = 101;
  EXPECT_TRUE(CheckModificationBound(base, header, 2).ok);
  header(0, 4) = 99;  // 100 -> 99 touches more than the LSB
  EXPECT_FALSE(CheckModificationBound(base, header, 2).ok);
}

TEST_F(BenchTest, RowsFollowInputOrder) {
  const BenchConfig cfg = Config(2);
  const auto rows = RunBench(cfg);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].image, "smooth");
  EXPECT_EQ(rows[3].image, "rough");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    EXPECT_EQ(rows[k].payload_bits, cfg.payloads[k % 3]);
    EXPECT_EQ(rows[k].params.size(), 2u);
    EXPECT_LE(rows[k].max_abs_diff, 1);
    EXPECT_TRUE(fs::exists(cfg.workdir /
                           (rows[k].image + "_" +
                            std::to_string(rows[k].payload_bits) + "_p2.pgm")));
  }
  EXPECT_GT(rows[1].psnr_db, rows[2].psnr_db);
}

TEST_F(BenchTest, CsvLayout) {
  const BenchConfig cfg = Config(1);
  const auto rows = RunBench(cfg);
  std::ostringstream out;
  WriteBenchCsv(out, cfg, rows);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line[0], '#');
  std::getline(in, line);
  EXPECT_NE(line.find("seed=" + std::to_string(cfg.seed)), std::string::npos);
  std::getline(in, line);
  EXPECT_EQ(line,
            "image,payload_bits,passes,psnr_db,lp1,lz1,rp1,rz1,lp2,lz2,rp2,rz2,"
            "seconds");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("smooth,0,1,", 0), 0u);
  EXPECT_NE(line.find(",,,,"), std::string::npos);
  int data_lines = 1;
  while (std::getline(in, line)) ++data_lines;
  EXPECT_EQ(data_lines, 6);
}

TEST_F(BenchTest, RejectsDescendingPayloads) {
  BenchConfig cfg = Config(2);
  cfg.payloads = {400, 100};
  EXPECT_THROW(RunBench(cfg), Error);
}

TEST_F(BenchTest, InfeasiblePayloadAborts) {
  BenchConfig cfg = Config(2);
  cfg.payloads = {100, 200000};
  try {
    RunBench(cfg);
    FAIL() << "expected a throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapacityTooSmall);
  }
}

}  // namespace
}  // namespace ppe
