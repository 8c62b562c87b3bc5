#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hallbase/errors.hpp"
#include "hallbase/order.hpp"

using namespace hallbase;
using namespace fixtures;

namespace {

IntPoly q_plus_one() { return IntPoly({1, 1}); }

std::map<KostantPartition, BigInt> counts(std::initializer_list<std::pair<KostantPartition, int>> items) {
  std::map<KostantPartition, BigInt> out;
  for (const auto& [k, v] : items) out.emplace(k, v);
  return out;
}

}  // namespace

TEST(QuantumIntegers, Values) {
  EXPECT_EQ(quantum_integer(2), q_plus_one());
  EXPECT_TRUE(quantum_factorial(1).is_one());
  EXPECT_EQ(quantum_factorial(3), q_plus_one() * IntPoly({1, 1, 1}));
  EXPECT_EQ(gaussian_binomial_poly(4, 2), IntPoly({1, 1, 2, 1, 1}));
}

TEST(QuantumIntegers, InterpolationRejectsNonIntegral) {
  EXPECT_THROW(interpolate({1, 3}, {0, 1}), VerificationError);
  EXPECT_EQ(interpolate({2, 3, 5}, {3, 4, 6}), q_plus_one());
}

TEST(HallCounts, LayerExamples) {
  const auto& lab = a2_lab();
  const auto lambda = lab.simple(1, 2) + lab.root({1, 1});
  const auto ss = lab.simple(1) + lab.simple(2);
  EXPECT_EQ(lab.engine.count_layer(lambda, 1, 2, 2), counts({{lab.root({1, 1}), 4}, {ss, 3}}));
  EXPECT_EQ(lab.engine.count_layer_reference(lambda, 1, 2, 2), counts({{lab.root({1, 1}), 4}, {ss, 3}}));
  for (std::uint32_t p : {2u, 3u, 7u})
    EXPECT_EQ(lab.engine.count_layer(lab.root({1, 1}), 1, 1, p), counts({{lab.simple(2), 1}}));
  EXPECT_TRUE(lab.engine.count_layer(lab.root({1, 1}), 2, 1, 2).empty());
}

TEST(HallPolys, LayerExamples) {
  const auto& lab = a2_lab();
  EXPECT_EQ(lab.engine.layer_poly(lab.simple(1, 2), 1, 1), (PolyMap{{lab.simple(1), q_plus_one()}}));
  const auto lambda = lab.simple(1, 2) + lab.root({1, 1});
  EXPECT_EQ(lab.engine.layer_poly(lambda, 1, 2),
            (PolyMap{{lab.root({1, 1}), IntPoly::monomial(2)}, {lab.simple(1) + lab.simple(2), q_plus_one()}}));
  EXPECT_EQ(lab.engine.layer_poly(lab.root({1, 1}), 1, 1), (PolyMap{{lab.simple(2), IntPoly::constant(1)}}));
}

TEST(HallPolys, GammaAndPhiExamples) {
  const auto& lab = a2_lab();
  const auto ss = lab.simple(1) + lab.simple(2);
  EXPECT_EQ(lab.engine.gamma_at(Word{1, 1, 2, 1}, lab.simple(1, 2) + lab.root({1, 1})), q_plus_one());
  EXPECT_EQ(lab.engine.gamma_word(Word{1, 2}),
            (PolyMap{{lab.root({1, 1}), IntPoly::constant(1)}, {ss, IntPoly::constant(1)}}));
  EXPECT_EQ(lab.engine.phi_word(Word{1, 1}), (PolyMap{{lab.simple(1, 2), q_plus_one()}}));
  EXPECT_EQ(lab.engine.phi_word(Word{2, 1}), (PolyMap{{ss, IntPoly::constant(1)}}));
  const auto& d = d4_lab();
  EXPECT_TRUE(d.engine.gamma_at(Word{1, 2, 3, 4, 4}, d.root({1, 1, 1, 2})).is_one());
}

TEST(HallPolys, GeneralExamples) {
  const auto& lab = a2_lab();
  EXPECT_TRUE(lab.engine.general_hall(lab.root({1, 1}), lab.simple(1), lab.simple(2)).is_one());
  EXPECT_EQ(lab.engine.general_hall(lab.simple(1, 2), lab.simple(1), lab.simple(1)), q_plus_one());
  EXPECT_TRUE(lab.engine.general_hall(lab.root({1, 1}), lab.simple(2), lab.simple(1)).is_zero());
}

TEST(HallPolys, LengthBound) {
  Lab lab(a2(), HallOptions{Route::Auto, 3, 1});
  EXPECT_THROW(lab.engine.general_hall_all(lab.simple(1, 2), lab.simple(2, 2)), ResourceError);
}

TEST(HallCounts, RoutesAgreeWithBruteForce) {
  // Every route to F^λ_{μν}(p) against brute-force subspace enumeration.
  for (Lab* lab : {&a2_lab(), &a3_lab()}) {
    const auto parts = partitions_up_to(*lab, 3);
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        if (lab->rs().length(mu) + lab->rs().length(nu) > 4) continue;
        const auto d = lab->rs().dimvec(mu) + lab->rs().dimvec(nu);
        for (std::uint32_t p : {2u, 3u}) {
          const auto ext = lab->engine.count_extensions(mu, nu, p);
          for (const auto& lambda : lab->rs().partitions(d)) {
            const BigInt brute = hall_number_oracle(lab->rt, lambda, mu, nu, p);
            const auto it = ext.find(lambda);
            EXPECT_EQ(it == ext.end() ? BigInt(0) : it->second, brute);
            EXPECT_EQ(lab->engine.count_submodules(lambda, mu, nu, p), brute);
          }
        }
      }
  }
}

TEST(HallCounts, LayerRoutesAgree) {
  for (Lab* lab : {&a2_lab(), &a3_lab(), &d4_lab()}) {
    const int n = lab->rt.quiver().vertex_count();
    for (const auto& lambda : partitions_up_to(*lab, 4))
      for (int j = 1; j <= n; ++j)
        for (int e = 1; e <= lab->rs().dimvec(lambda).at_vertex(j); ++e)
          for (std::uint32_t p : {2u, 3u}) {
            const auto fast = lab->engine.count_layer(lambda, j, e, p);
            EXPECT_EQ(fast, lab->engine.count_layer_reference(lambda, j, e, p));
            for (const auto& [nu, c] : fast) {
              const auto col = lab->engine.count_column(j, e, nu, p);
              ASSERT_TRUE(col.count(lambda));
              EXPECT_EQ(col.at(lambda), c);
              EXPECT_EQ(lab->engine.count_extensions(lab->rs().semisimple_at(j, e), nu, p).at(lambda), c);
            }
          }
  }
}

TEST(HallPolys, RoutesGiveTheSamePolynomials) {
  Lab census(d4(), HallOptions{Route::Census, 6, 1});
  Lab extension(d4(), HallOptions{Route::Extension, 6, 1});
  for (const auto& lambda : partitions_up_to(census, 4))
    for (int j = 1; j <= 4; ++j)
      for (int e = 1; e <= census.rs().dimvec(lambda).at_vertex(j); ++e)
        EXPECT_EQ(census.engine.layer_poly(lambda, j, e), extension.engine.layer_poly(lambda, j, e));
  for (const auto& mu : partitions_up_to(census, 2))
    for (const auto& nu : partitions_up_to(census, 2))
      EXPECT_EQ(census.engine.general_hall_all(mu, nu), extension.engine.general_hall_all(mu, nu));
}

TEST(HallPolys, HeldOutPrimeBeyondFittingPoints) {
  // Evaluate every layer row at a prime the fit never saw.
  for (Lab* lab : {&a2_lab(), &a3_lab()}) {
    const int n = lab->rt.quiver().vertex_count();
    for (const auto& lambda : partitions_up_to(*lab, 4))
      for (int j = 1; j <= n; ++j)
        for (int e = 1; e <= lab->rs().dimvec(lambda).at_vertex(j); ++e) {
          const auto row = lab->engine.layer_poly(lambda, j, e);
          const auto direct = lab->engine.count_layer_reference(lambda, j, e, 23);
          for (const auto& [nu, c] : direct) {
            ASSERT_TRUE(row.count(nu));
            EXPECT_EQ(row.at(nu).eval(23), c);
          }
          EXPECT_EQ(row.size(), direct.size());
        }
  }
}

TEST(HallPolys, ExtraHeldOutPrimesAgree) {
  Lab strict(a3(), HallOptions{Route::Auto, 6, 3});
  const auto& lab = a3_lab();
  for (const auto& w : words_up_to(3, 4)) EXPECT_EQ(strict.engine.gamma_word(w), lab.engine.gamma_word(w));
  EXPECT_GT(strict.engine.stats().held_out_checks, 0u);
}

TEST(HallPolys, AutomorphismCounts) {
  const auto& lab = a2_lab();
  EXPECT_EQ(automorphism_count(lab.rt, lab.simple(1, 2), 2), BigInt(6));
  EXPECT_EQ(automorphism_count(lab.rt, lab.simple(1) + lab.simple(2), 3), BigInt(4));
  EXPECT_EQ(automorphism_count(lab.rt, lab.simple(1) + lab.root({1, 1}), 2), BigInt(2));
}

TEST(HallProperty, LetterProductsMatchLayerFactorization) {
  for (Lab* lab : {&a2_lab(), &a3_lab()})
    for (const auto& w : words_up_to(lab->rt.quiver().vertex_count(), 5))
      EXPECT_EQ(lab->engine.phi_word(w), lab->engine.phi_letters(w)) << w.str();
}

TEST(HallProperty, SupportIsTheLowerSetOfTheGenericExtension) {
  for (Lab* lab : {&a2_lab(), &a3_lab()})
    for (const auto& w : words_up_to(lab->rt.quiver().vertex_count(), 5)) {
      const auto phi = lab->engine.phi_word(w);
      const auto top = lab->monoid.wp(w);
      std::vector<KostantPartition> expect;
      for (const auto& l : lab->rs().partitions(w.content(lab->rt.quiver().vertex_count())))
        if (leq(lab->rt, l, top)) expect.push_back(l);
      std::vector<KostantPartition> got;
      for (const auto& [l, p] : phi) {
        got.push_back(l);
        EXPECT_FALSE(p.is_zero());
        EXPECT_TRUE(p.has_nonnegative_coeffs());
        EXPECT_EQ(lab->rs().dimvec(l), w.content(lab->rt.quiver().vertex_count()));
      }
      EXPECT_EQ(got, expect) << w.str();
      for (const auto& [l, p] : phi)
        for (const auto& m : lab->rs().partitions(lab->rs().dimvec(l)))
          if (leq(lab->rt, m, l)) EXPECT_TRUE(phi.count(m));
    }
}

TEST(HallProperty, ExtensionSupportMatchesInterpolation) {
  for (Lab* lab : {&a2_lab(), &a3_lab(), &d4_lab()}) {
    const auto parts = partitions_up_to(*lab, 2);
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        std::vector<KostantPartition> expect;
        for (const auto& [l, p] : lab->engine.general_hall_all(mu, nu)) expect.push_back(l);
        EXPECT_EQ(lab->engine.extension_support(mu, nu), expect);
      }
  }
}

TEST(HallProperty, GeneralPolynomialsSumToSubmoduleCounts) {
  // Σ_μ F^λ_{μν} over quotients equals the number of submodules isomorphic to M(ν).
  const auto& lab = a3_lab();
  for (const auto& lambda : partitions_up_to(lab, 3))
    for (const auto& nu : partitions_up_to(lab, 2)) {
      const auto dn = lab.rs().dimvec(nu), dl = lab.rs().dimvec(lambda);
      if (!dn.fits_in(dl) || dn == dl) continue;
      BigInt total = 0;
      for (const auto& mu : lab.rs().partitions(dl - dn)) total += lab.engine.general_hall(lambda, mu, nu).eval(2);
      const Rep x = lab.rt.build(lambda, 2);
      const BigInt brute = count_subreps_oracle(lab.rt.quiver(), x, dn, [&](const std::vector<modp::Matrix>& b) {
        return lab.rt.identify(sub_and_quotient(lab.rt.quiver(), x, b).first) == nu;
      });
      EXPECT_EQ(total, brute);
    }
}

TEST(HallCache, ExportImportRoundTrip) {
  Lab source(a3());
  for (const auto& w : words_up_to(3, 3)) source.engine.gamma_word(w);
  source.engine.layer_poly(source.rs().semisimple({2, 1, 0}), 1, 1);
  const auto data = source.engine.export_cache();
  Lab target(a3());
  target.engine.import_cache(data);
  EXPECT_EQ(target.engine.export_cache(), data);
  target.engine.import_cache(data);
  auto bad = data;
  ASSERT_FALSE(bad["columns"].empty());
  bad["columns"][0]["entries"][0]["coeffs"] = nlohmann::json::array({99});
  EXPECT_THROW(target.engine.import_cache(bad), VerificationError);
}
