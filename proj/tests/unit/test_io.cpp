#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "romanoff/cache.hpp"
#include "romanoff/serialize.hpp"

using namespace romanoff;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::path(testing::TempDir()) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Json, MomentReportKeysSorted) {
  MomentReport r;
  r.lhs = 2.5;
  r.rhs_core = 1.0;
  r.implied_constant = 2.5;
  r.parameters = {{"s", 1.0}, {"alpha", 0.5}};
  r.notes = {"note"};
  const std::string text = to_json(r).dump();
  EXPECT_EQ(text,
            R"({"implied_constant":2.5,"lhs":2.5,"notes":["note"],"parameters":{"alpha":0.5,"s":1.0},"rhs_core":1.0})");
}

TEST(Json, GammaBoundNull) {
  EXPECT_TRUE(to_json(incomplete_gamma(2, 0.5))["bound"].is_null());
  EXPECT_TRUE(to_json(incomplete_gamma(2, 1.5))["bound"].is_number());
}

TEST(Json, ExtremalExactMean) {
  const FactorSieve sieve(1000);
  const ExtremalSet s = construct_extremal_set(1000, 2.2, 6.9, sieve);
  const Json j = to_json(s);
  EXPECT_EQ(j["Q"], "15");
  EXPECT_EQ(j["count"], 33u);
  EXPECT_EQ(j["mean_ratio_exact"], rational_text(s.mean_ratio));
  EXPECT_DOUBLE_EQ(j["forced_ratio"].get<double>(), 1.875);
}

TEST(Json, RoundTripDoubles) {
  for (double v : {0.1, 1.0 / 3, 1e-300, 123456789.125, std::ldexp(1.0, -40)}) {
    EXPECT_EQ(Json::parse(Json(v).dump()).get<double>(), v);
  }
}

TEST(Csv, Census) {
  CongruenceCensus c;
  c.modulus = 3;
  c.counts = {0, 4, 7};
  EXPECT_EQ(census_csv(c), "residue,count\n0,0\n1,4\n2,7\n");
}

TEST(Csv, AlphaSweepMatchesJsonDigits) {
  const FactorSieve sieve(1'000'000);
  const auto rows = alpha_sweep(1'000'000, std::vector<double>{0.5}, sieve);
  const std::string csv = alpha_sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "alpha,y,z,Q,count,mean_ratio,empirical_c");
  EXPECT_NE(csv.find(to_json(rows[0])["mean_ratio"].dump()), std::string::npos);
}

TEST(Cache, RoundTrip) {
  const fs::path dir = fresh_dir("romanoff_cache_rt");
  const FactorSieve built(50'000);
  const fs::path file = sieve_cache_path(dir, 50'000);
  EXPECT_EQ(file.filename(), "spf-50000.bin");
  ASSERT_TRUE(write_sieve_cache(file, built));
  EXPECT_FALSE(fs::exists(file.string() + ".tmp"));
  EXPECT_EQ(fs::file_size(file), 32 + 4 * 50'001u);
  const auto loaded = read_sieve_cache(file, 50'000);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->table(), built.table());
  EXPECT_EQ(loaded->primes(), built.primes());
  EXPECT_FALSE(read_sieve_cache(file, 49'999).has_value());
  EXPECT_FALSE(read_sieve_cache(dir / "missing.bin", 50'000).has_value());
  fs::remove_all(dir);
}

TEST(Cache, RejectsCorruption) {
  const fs::path dir = fresh_dir("romanoff_cache_bad");
  const fs::path file = sieve_cache_path(dir, 10'000);
  ASSERT_TRUE(write_sieve_cache(file, FactorSieve(10'000)));
  {
    std::fstream f(file, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(32 + 4 * 97);
    const u32 junk = 5;
    f.write(reinterpret_cast<const char*>(&junk), sizeof junk);
  }
  EXPECT_FALSE(read_sieve_cache(file, 10'000).has_value());  // checksum mismatch
  fs::resize_file(file, 40);
  EXPECT_FALSE(read_sieve_cache(file, 10'000).has_value());
  {
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    f << "NOTACACHEFILE";
  }
  EXPECT_FALSE(read_sieve_cache(file, 10'000).has_value());
  fs::remove_all(dir);
}

TEST(Cache, LoadOrBuildUsesEnv) {
  const fs::path dir = fresh_dir("romanoff_cache_env");
  ::setenv("ROMANOFF_LAB_CACHE", dir.c_str(), 1);
  const FactorSieve first = load_or_build_sieve(20'000);
  const fs::path file = sieve_cache_path(dir, 20'000);
  EXPECT_TRUE(fs::exists(file));
  const FactorSieve second = load_or_build_sieve(20'000);
  EXPECT_EQ(first.table(), second.table());
  {
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    f << "garbage";
  }
  const FactorSieve rebuilt = load_or_build_sieve(20'000);
  EXPECT_EQ(rebuilt.table(), first.table());
  EXPECT_TRUE(read_sieve_cache(file, 20'000).has_value());
  EXPECT_THROW(load_or_build_sieve(2'000, 1'000), CapacityError);
  ::unsetenv("ROMANOFF_LAB_CACHE");
  EXPECT_EQ(load_or_build_sieve(100).limit(), 100u);
  fs::remove_all(dir);
}
