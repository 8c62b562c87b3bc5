#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "hallbase/errors.hpp"
#include "hallbase/order.hpp"
#include "hallbase/type_a.hpp"

using namespace hallbase;
using namespace fixtures;

namespace {

std::vector<Word> words(std::initializer_list<const char*> items, int n) {
  std::vector<Word> out;
  for (const char* s : items) out.push_back(parse_word(s, n));
  return out;
}

KostantPartition d4_indecomposable() { return d4_lab().root({1, 1, 1, 2}); }

}  // namespace

TEST(Monoid, StarSimpleExamples) {
  const auto& lab = a2_lab();
  EXPECT_EQ(lab.monoid.star_simple(1, lab.simple(2)), lab.root({1, 1}));
  EXPECT_EQ(lab.monoid.star_simple(2, lab.simple(1)), lab.simple(1) + lab.simple(2));
  EXPECT_EQ(lab.monoid.star_simple(1, lab.rs().zero()), lab.simple(1));
}

TEST(Monoid, StarExamples) {
  const auto& lab = a2_lab();
  EXPECT_EQ(lab.monoid.star(lab.simple(1), lab.simple(2)), lab.root({1, 1}));
  EXPECT_EQ(lab.monoid.star(lab.simple(2), lab.simple(1)), lab.simple(1) + lab.simple(2));
  EXPECT_EQ(lab.monoid.star(lab.root({1, 1}), lab.rs().zero()), lab.root({1, 1}));
  EXPECT_EQ(lab.monoid.star(lab.rs().zero(), lab.simple(2, 2)), lab.simple(2, 2));
}

TEST(Monoid, WpExamples) {
  const auto& lab = a2_lab();
  EXPECT_EQ(lab.monoid.wp(Word{1, 2}), lab.root({1, 1}));
  EXPECT_EQ(lab.monoid.wp(Word{}), lab.rs().zero());
  EXPECT_EQ(lab.monoid.wp(Word{1, 1, 2, 1}), lab.simple(1, 2) + lab.root({1, 1}));
  EXPECT_EQ(d4_lab().monoid.wp(Word{1, 2, 3, 4, 4}), d4_indecomposable());
  const auto& l3 = a3_lab();
  EXPECT_EQ(l3.monoid.wp(Word{1, 2, 3}), l3.root({1, 1, 1}));
}

TEST(Monoid, FibreExamples) {
  const auto& lab = a2_lab();
  EXPECT_EQ(lab.monoid.fibre(lab.root({1, 1})), words({"12"}, 2));
  EXPECT_EQ(lab.monoid.fibre(lab.simple(1) + lab.simple(2)), words({"21"}, 2));
  EXPECT_EQ(lab.monoid.fibre(lab.rs().zero()), std::vector<Word>{Word{}});
  auto expect = words({"12344", "13244", "21344", "23144", "31244", "32144", "12434", "13424", "21434", "23414",
                       "31424", "32414"},
                      4);
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(d4_lab().monoid.fibre(d4_indecomposable()), expect);
}

TEST(Monoid, FibreCap) {
  Lab lab(a2());
  MonoidWords capped(lab.engine, 1);
  EXPECT_THROW(capped.fibre(lab.simple(1, 2) + lab.root({1, 1})), ResourceError);
}

TEST(Monoid, DistinguishedExamples) {
  const auto& lab = a2_lab();
  EXPECT_FALSE(lab.monoid.is_distinguished(Word{1, 1, 2, 1}));
  EXPECT_TRUE(lab.monoid.is_distinguished(Word{1, 2}));
  EXPECT_TRUE(d4_lab().monoid.is_distinguished(Word{1, 2, 4, 3, 4}));
  for (const auto& w : d4_lab().monoid.fibre(d4_indecomposable())) EXPECT_TRUE(d4_lab().monoid.is_distinguished(w));
}

TEST(Monoid, DirectedWordExamples) {
  const auto& lab = a2_lab();
  EXPECT_EQ(lab.monoid.directed_word(lab.root({1, 1})), (Word{1, 2}));
  EXPECT_EQ(lab.monoid.directed_word(lab.simple(1) + lab.simple(2)), (Word{2, 1}));
  EXPECT_EQ(d4_lab().monoid.directed_word(d4_indecomposable()), (Word{1, 2, 3, 4, 4}));
}

TEST(Monoid, AllDirectedWordsExamples) {
  auto expect = words({"12344", "13244", "21344", "23144", "31244", "32144"}, 4);
  std::sort(expect.begin(), expect.end());
  auto got = d4_lab().monoid.all_directed_words(d4_indecomposable());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expect);
  const auto& lab = a2_lab();
  EXPECT_EQ(lab.monoid.all_directed_words(lab.root({1, 1})), words({"12"}, 2));
  for (Lab* l : {&a2_lab(), &a3_lab(), &d4_lab()})
    for (int i = 1; i <= l->rt.quiver().vertex_count(); ++i)
      EXPECT_EQ(l->monoid.all_directed_words(l->simple(i)), std::vector<Word>{Word{i}});
}

TEST(Monoid, DirectedPartitionValidation) {
  const auto& lab = a2_lab();
  const auto ss = lab.simple(1) + lab.simple(2);
  const int s1 = lab.rs().simple(1), s2 = lab.rs().simple(2);
  EXPECT_EQ(lab.monoid.check_directed_partition(ss, {{s2}, {s1}}), "");
  EXPECT_NE(lab.monoid.check_directed_partition(ss, {{s1}, {s2}}), "");
  EXPECT_NE(lab.monoid.check_directed_partition(ss, {{s1, s2}}), "");
  EXPECT_NE(lab.monoid.check_directed_partition(ss, {{s2}}), "");
  EXPECT_THROW(lab.monoid.directed_word(ss, {{s1}, {s2}}, {1, 2}), InputError);
}

TEST(TypeA, Recognition) {
  EXPECT_TRUE(is_linear_a(a2()));
  EXPECT_TRUE(is_linear_a(a3()));
  EXPECT_FALSE(is_linear_a(d4()));
  EXPECT_FALSE(is_linear_a(Quiver(2, {{2, 1}})));
  EXPECT_THROW(TypeA{d4_lab().rs()}, InputError);
}

TEST(TypeA, SigmaExamples) {
  const auto& lab = a2_lab();
  const TypeA ta(lab.rs());
  EXPECT_EQ(ta.sigma(1, lab.simple(2)), lab.root({1, 1}));
  EXPECT_EQ(ta.sigma(2, lab.rs().zero()), lab.simple(2));
  EXPECT_EQ(ta.at(lab.root({1, 1}), 1, 2), 1);
  const auto& l3 = a3_lab();
  const TypeA t3(l3.rs());
  EXPECT_EQ(t3.sigma(1, l3.root({0, 1, 1})), l3.root({1, 1, 1}));
  EXPECT_EQ(t3.wp(Word{1, 2, 3}), l3.root({1, 1, 1}));
}

TEST(TypeA, WpAndDistinguishedExamples) {
  const auto& lab = a2_lab();
  const TypeA ta(lab.rs());
  EXPECT_EQ(ta.wp(Word{1, 1, 2, 1}), lab.simple(1, 2) + lab.root({1, 1}));
  EXPECT_FALSE(ta.is_distinguished(Word{1, 1, 2, 1}));
  EXPECT_TRUE(ta.is_distinguished(Word{1, 2}));
}

TEST(MonoidProperty, AssociativityAndIdentity) {
  for (Lab* lab : {&a2_lab(), &a3_lab()}) {
    const auto parts = partitions_up_to(*lab, 3);
    const auto zero = lab->rs().zero();
    for (const auto& a : parts) {
      EXPECT_EQ(lab->monoid.star(a, zero), a);
      EXPECT_EQ(lab->monoid.star(zero, a), a);
    }
    for (const auto& a : parts)
      for (const auto& b : parts)
        for (const auto& c : parts) {
          if (lab->rs().length(a) + lab->rs().length(b) + lab->rs().length(c) > (lab == &a2_lab() ? 5 : 4)) continue;
          EXPECT_EQ(lab->monoid.star(lab->monoid.star(a, b), c), lab->monoid.star(a, lab->monoid.star(b, c)));
        }
  }
}

TEST(MonoidProperty, SplitCriterion) {
  for (Lab* lab : {&a2_lab(), &a3_lab(), &d4_lab()}) {
    const auto parts = partitions_up_to(*lab, 2);
    for (const auto& mu : parts)
      for (const auto& nu : parts) {
        int obstruction = 0;
        for (int b : mu.support())
          for (int g : nu.support()) obstruction += mu[b] * nu[g] * lab->rt.ext(b, g);
        const auto s = lab->monoid.star(mu, nu);
        if (obstruction == 0) {
          EXPECT_EQ(s, mu + nu);
        } else {
          EXPECT_TRUE(less(lab->rt, mu + nu, s));
        }
      }
  }
}

TEST(MonoidProperty, OrderCompatibility) {
  for (Lab* lab : {&a2_lab(), &a3_lab()}) {
    const auto parts = partitions_up_to(*lab, 2);
    for (const auto& mu : parts)
      for (const auto& nu : parts)
        for (const auto& mu2 : lab->rs().partitions(lab->rs().dimvec(mu)))
          for (const auto& nu2 : lab->rs().partitions(lab->rs().dimvec(nu)))
            if (leq(lab->rt, mu2, mu) && leq(lab->rt, nu2, nu))
              EXPECT_TRUE(leq(lab->rt, lab->monoid.star(mu2, nu2), lab->monoid.star(mu, nu)));
  }
}

TEST(MonoidProperty, WpIsAFoldOfSimples) {
  for (Lab* lab : {&a2_lab(), &a3_lab(), &d4_lab()})
    for (const auto& w : words_up_to(lab->rt.quiver().vertex_count(), 4)) {
      KostantPartition acc = lab->rs().zero();
      for (std::size_t k = w.size(); k-- > 0;) acc = lab->monoid.star(lab->simple(w[k]), acc);
      const auto got = lab->monoid.wp(w);
      EXPECT_EQ(got, acc);
      EXPECT_EQ(lab->rs().length(got), static_cast<int>(w.size()));
    }
}

TEST(MonoidProperty, FibresPartitionWordsOfEachContent) {
  for (Lab* lab : {&a2_lab(), &a3_lab()}) {
    const int n = lab->rt.quiver().vertex_count();
    for (const auto& d : dims_up_to(n, 5)) {
      std::set<Word> seen;
      std::size_t total = 0;
      for (const auto& lambda : lab->rs().partitions(d)) {
        const auto fib = lab->monoid.fibre(lambda);
        bool any_distinguished = false;
        for (const auto& w : fib) {
          EXPECT_EQ(lab->monoid.wp(w), lambda);
          EXPECT_TRUE(seen.insert(w).second);
          any_distinguished = any_distinguished || lab->monoid.is_distinguished(w);
        }
        EXPECT_TRUE(any_distinguished);
        total += fib.size();
      }
      EXPECT_EQ(total, words_with_content(d).size());
      EXPECT_EQ(seen.size(), words_with_content(d).size());
    }
  }
}

TEST(MonoidProperty, DirectedWordsGenerateEveryPartition) {
  for (Lab* lab : {&a2_lab(), &a3_lab(), &d4_lab()})
    for (const auto& lambda : partitions_up_to(*lab, 4)) {
      const Word w = lab->monoid.directed_word(lambda);
      EXPECT_EQ(lab->monoid.wp(w), lambda);
      EXPECT_TRUE(lab->monoid.is_distinguished(w));
      EXPECT_EQ(lab->monoid.check_directed_partition(lambda, lab->monoid.default_directed_partition(lambda)), "");
      for (const auto& x : lab->monoid.all_directed_words(lambda)) {
        EXPECT_EQ(lab->monoid.wp(x), lambda);
        EXPECT_TRUE(lab->monoid.is_distinguished(x));
      }
    }
}

TEST(MonoidProperty, DistinguishedMeansGammaOne) {
  for (Lab* lab : {&a2_lab(), &a3_lab()})
    for (const auto& w : words_up_to(lab->rt.quiver().vertex_count(), 4))
      EXPECT_EQ(lab->monoid.is_distinguished(w), lab->engine.gamma_at(w, lab->monoid.wp(w)).is_one());
}

TEST(MonoidProperty, TypeACrossOracle) {
  for (Lab* lab : {&a2_lab(), &a3_lab()}) {
    const TypeA ta(lab->rs());
    for (const auto& w : words_up_to(lab->rt.quiver().vertex_count(), 5)) {
      EXPECT_EQ(ta.wp(w), lab->monoid.wp(w)) << w.str();
      EXPECT_EQ(ta.is_distinguished(w), lab->monoid.is_distinguished(w)) << w.str();
    }
  }
  Lab a4(Quiver(4, {{1, 2}, {2, 3}, {3, 4}}));
  const TypeA t4(a4.rs());
  for (const auto& w : words_up_to(4, 4)) {
    EXPECT_EQ(t4.wp(w), a4.monoid.wp(w)) << w.str();
    EXPECT_EQ(t4.is_distinguished(w), a4.monoid.is_distinguished(w)) << w.str();
  }
}

TEST(MonoidProperty, OrderMatchesHallNonvanishing) {
  // λ ≤ μ exactly when some word in the fibre of μ has φ_w^λ ≠ 0.
  for (Lab* lab : {&a2_lab(), &a3_lab()})
    for (const auto& d : dims_up_to(lab->rt.quiver().vertex_count(), 3)) {
      const auto& parts = lab->rs().partitions(d);
      for (const auto& mu : parts) {
        std::set<KostantPartition> reached;
        for (const auto& w : lab->monoid.fibre(mu))
          for (const auto& [l, p] : lab->engine.phi_word(w)) reached.insert(l);
        for (const auto& lambda : parts) EXPECT_EQ(leq(lab->rt, lambda, mu), reached.count(lambda) == 1);
      }
    }
}
