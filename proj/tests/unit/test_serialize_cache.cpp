#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "hallbase/cache.hpp"
#include "hallbase/errors.hpp"
#include "hallbase/serialize.hpp"

using namespace hallbase;
using namespace fixtures;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hallbase_test_" + name)).string();
}

}  // namespace

TEST(Serialize, BigInts) {
  EXPECT_EQ(bigint_to_json(BigInt(42)), json(42));
  const BigInt big = BigInt(1) << 100;
  EXPECT_TRUE(bigint_to_json(big).is_string());
  EXPECT_EQ(bigint_from_json(bigint_to_json(big)), big);
  EXPECT_EQ(bigint_from_json(bigint_to_json(-big)), -big);
}

TEST(Serialize, Partitions) {
  const auto& lab = a2_lab();
  const auto p = lab.simple(1) + lab.root({1, 1}, 2);
  const auto j = partition_to_json(p);
  EXPECT_EQ(j, json::parse(R"({"2":1,"3":2})"));
  EXPECT_EQ(partition_from_json(lab.rs(), j), p);
  EXPECT_EQ(parse_partition(lab.rs(), R"({"3":1})"), lab.root({1, 1}));
  EXPECT_EQ(parse_partition(lab.rs(), "{}"), lab.rs().zero());
  EXPECT_THROW(parse_partition(lab.rs(), R"({"4":1})"), InputError);
  EXPECT_THROW(parse_partition(lab.rs(), R"({"1":-1})"), InputError);
  EXPECT_THROW(parse_partition(lab.rs(), R"({"x":1})"), InputError);
  EXPECT_THROW(parse_partition(lab.rs(), R"({"1":"a"})"), InputError);
  EXPECT_THROW(parse_partition(lab.rs(), "{"), InputError);
  const auto& d = d4_lab();
  EXPECT_EQ(parse_partition(d.rs(), R"({"12":1})"), d.root({1, 1, 1, 2}));
}

TEST(Serialize, Polynomials) {
  const IntPoly p({1, 0, -3});
  EXPECT_EQ(intpoly_to_json(p), json::parse(R"({"coeffs":[1,0,-3]})"));
  EXPECT_EQ(intpoly_from_json(intpoly_to_json(p)), p);
  const LaurentPoly l(-2, {1, 0, 5});
  EXPECT_EQ(laurent_to_json(l), json::parse(R"({"lo":-2,"coeffs":[1,0,5]})"));
  EXPECT_EQ(laurent_from_json(laurent_to_json(l)), l);
  EXPECT_EQ(laurent_from_json(laurent_to_json(LaurentPoly())), LaurentPoly());
}

TEST(Serialize, UPlusRoundTrip) {
  const auto& lab = a3_lab();
  for (const auto& w : words_up_to(3, 3)) {
    const auto m = lab.basis.monomial(w);
    EXPECT_EQ(uplus_from_json(lab.rs(), uplus_to_json(lab.rs(), m)), m);
  }
  EXPECT_EQ(word_to_json(Word{1, 2, 4}), json("1,2,4"));
}

TEST(Serialize, TransitionMatrix) {
  const auto& lab = a2_lab();
  const auto f = lab.basis.transition_matrix({1, 1}, lab.basis.directed_representatives({1, 1}));
  const auto j = transition_to_json(lab.rs(), f);
  ASSERT_EQ(j.at("entries").size(), 2u);
  EXPECT_EQ(j.at("representatives"), json::parse(R"(["2,1","1,2"])"));
  EXPECT_EQ(laurent_from_json(j.at("entries")[0][1]), LaurentPoly::monomial(-1));
}

TEST(Cache, StoreThenLoadIsIdentity) {
  Lab source(a3());
  for (const auto& w : words_up_to(3, 3)) source.engine.gamma_word(w);
  const auto path = temp_path("roundtrip.json");
  cache_store(source.engine, path);
  Lab target(a3());
  EXPECT_TRUE(cache_load(target.engine, path));
  EXPECT_EQ(cache_to_json(target.engine), cache_to_json(source.engine));
  std::filesystem::remove(path);
  EXPECT_FALSE(cache_load(target.engine, path));
}

TEST(Cache, RejectsStaleForeignAndCorruptFiles) {
  Lab lab(a2());
  lab.engine.gamma_word(Word{1, 2});
  auto data = cache_to_json(lab.engine);
  auto stale = data;
  stale["version"] = kCacheFormatVersion + 1;
  EXPECT_THROW(cache_from_json(lab.engine, stale), InputError);
  auto other = data;
  other["format"] = "something-else";
  EXPECT_THROW(cache_from_json(lab.engine, other), InputError);
  Lab a3lab(a3());
  EXPECT_THROW(cache_from_json(a3lab.engine, data), InputError);
  const auto path = temp_path("corrupt.json");
  {
    std::ofstream out(path);
    out << "{\"format\": \"hallbase-cache\", ";
  }
  EXPECT_THROW(cache_load(lab.engine, path), InputError);
  std::filesystem::remove(path);
}

TEST(Cache, VerifyDetectsTampering) {
  Lab lab(a3());
  for (const auto& w : words_up_to(3, 3)) lab.engine.gamma_word(w);
  const auto data = cache_to_json(lab.engine);
  const auto ok = verify_cache(lab.rt, data);
  EXPECT_EQ(ok.checked, 3u);
  EXPECT_TRUE(ok.mismatches.empty());
  auto bad = data;
  for (auto& r : bad["rows"])
    for (auto& e : r["entries"]) e["coeffs"] = json::array({7, 7});
  for (auto& c : bad["columns"])
    for (auto& e : c["entries"]) e["coeffs"] = json::array({7, 7});
  const auto caught = verify_cache(lab.rt, bad);
  EXPECT_EQ(caught.mismatches.size(), caught.checked);
  EXPECT_GT(caught.checked, 0u);
}

TEST(Cache, LoadedValuesDoNotChangeResults) {
  Lab source(d4());
  const Word w{1, 2, 3, 4, 4};
  const auto expect = source.engine.gamma_word(w);
  Lab target(d4());
  cache_from_json(target.engine, cache_to_json(source.engine));
  EXPECT_EQ(target.engine.gamma_word(w), expect);
  EXPECT_EQ(target.engine.stats().census_tallies + target.engine.stats().extension_tallies, 0u);
}
