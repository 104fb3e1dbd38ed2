#include <gtest/gtest.h>

#include <random>
#include <set>

#include "../support/convert.hpp"
#include "permcover/cyclic_code.hpp"
#include "permcover/errors.hpp"
#include "permcover/oracle.hpp"

using namespace permcover;

namespace {

std::vector<Value> anchors_marked(const ExposureEvidence& e) {
  std::vector<Value> out;
  for (std::size_t v = 0; v < e.covered_anchor.size(); ++v) {
    if (e.covered_anchor[v]) out.push_back(static_cast<Value>(v + 1));
  }
  return out;
}

}  // namespace

TEST(CyclicGroupCode, Generation) {
  const auto g3 = generate_gn(3).codewords();
  EXPECT_EQ(std::set<Permutation>(g3.begin(), g3.end()),
            (std::set<Permutation>{P({1, 2, 3}), P({2, 3, 1}), P({3, 1, 2})}));
  EXPECT_EQ(generate_gn(1).codewords(), std::vector<Permutation>{P({1})});
  EXPECT_TRUE(generate_gn(7).contains(P({3, 4, 5, 6, 7, 1, 2})));
  EXPECT_EQ(generate_gn(7).power(2), P({3, 4, 5, 6, 7, 1, 2}));
  EXPECT_FALSE(generate_gn(7).contains(P({3, 4, 5, 6, 7, 2, 1})));
  EXPECT_FALSE(generate_gn(3).contains(P({1, 2})));
  EXPECT_THROW(CyclicGroupCode(0), DomainError);
}

TEST(CyclicGroupCode, MatchesRotationsAndIsAGroup) {
  for (int n = 1; n <= 9; ++n) {
    const auto words = to_ref(generate_gn(static_cast<std::size_t>(n)).to_explicit());
    auto expected = ref::rotations(n);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(words, expected);
    const std::set<ref::Perm> set(words.begin(), words.end());
    for (const auto& a : words) {
      for (const auto& b : words) EXPECT_TRUE(set.count(ref::compose(a, b)));
    }
  }
}

TEST(CyclicGroupCode, AnchorIndexing) {
  const CyclicGroupCode g(7);
  for (Value v = 1; v <= 7; ++v) {
    const auto c = g.codeword_with_anchor(v);
    EXPECT_EQ(c(v), 1);
    EXPECT_TRUE(g.contains(c));
  }
}

TEST(RadiusFormulas, KnownValues) {
  EXPECT_EQ(radius_gn(7), 4);
  EXPECT_EQ(radius_gn(1), 0);
  EXPECT_EQ(radius_gn(2), 0);
  EXPECT_EQ(radius_gn(3), 1);
  EXPECT_EQ(radius_gn(12), 8);
}

TEST(RadiusFormulas, UpperAndLower) {
  EXPECT_EQ(radius_gn_upper(6), 4);
  EXPECT_EQ(radius_gn_lower(6), 3);
  EXPECT_EQ(radius_gn_upper(7), 4);
  EXPECT_EQ(radius_gn_lower(7), 4);
  EXPECT_EQ(radius_gn_upper(3), 1);
  EXPECT_EQ(radius_gn_lower(3), 1);
  EXPECT_THROW(radius_gn_upper(2), DomainError);
  EXPECT_THROW(radius_gn_lower(2), DomainError);
}

TEST(RadiusFormulas, GapExactlyAtPronicNumbers) {
  for (std::size_t n = 3; n <= 20000; ++n) {
    const auto up = radius_gn_upper(n);
    const auto lo = radius_gn_lower(n);
    const auto t = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    const bool pronic = t * (t + 1) == n;
    EXPECT_EQ(up - lo, pronic ? 1 : 0) << n;
    EXPECT_EQ(radius_gn(n), lo);
  }
}

TEST(RadiusFormulas, NearPerfectSquaresAtScale) {
  // 4n+1 = (2t+1)^2 for n = t(t+1); float rounding would misplace these.
  for (std::uint64_t t : {1000ULL, 30000ULL, 46000ULL}) {
    const auto n = t * (t + 1);
    EXPECT_EQ(radius_gn_upper(n) - radius_gn_lower(n), 1);
    EXPECT_EQ(static_cast<std::uint64_t>(radius_gn(n)), n - (t + 1));
    EXPECT_EQ(static_cast<std::uint64_t>(radius_gn(n - 1)), (n - 1) - t);
  }
}

TEST(RadiusFormulas, MatchReferenceEnumeration) {
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(radius_gn(static_cast<std::size_t>(n)), ref::covering_radius(ref::rotations(n), n)) << n;
  }
}

TEST(ExposureSet, TableOneEntries) {
  const auto a = exposure_set(7, 3, 5, 1);
  ASSERT_TRUE(a.interval);
  EXPECT_EQ(a.interval->as_set(), (std::vector<Value>{6, 7, 1}));
  EXPECT_EQ(exposure_set(7, 3, 3, 6).interval->as_set(), (std::vector<Value>{2, 3}));
  EXPECT_EQ(exposure_set(7, 3, 1, 5).interval->as_set(), (std::vector<Value>{1}));
  EXPECT_EQ(exposure_set(7, 3, 6, 7).interval->as_set(), (std::vector<Value>{4, 5, 6}));
  const auto none = exposure_set(7, 3, 2, 4);
  EXPECT_FALSE(none.interval);
  EXPECT_EQ(none.cardinality(), 0);
}

TEST(ExposureSet, Preconditions) {
  EXPECT_THROW(exposure_set(10, 3, 1, 1), DomainError);
  EXPECT_THROW(exposure_set(7, 3, 0, 1), DomainError);
  EXPECT_THROW(exposure_set(7, 3, 1, 8), DomainError);
}

TEST(ExposureSet, SizesAndMembersMatchEnumeration) {
  for (int n = 4; n <= 10; ++n) {
    const auto rots = ref::rotations(n);
    for (int rt = (n - 1) / 2; rt <= n - 1; ++rt) {
      if (2 * rt < n - 2) continue;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          std::set<Value> expected;
          for (const auto& g : rots) {
            if (std::abs(j - g[static_cast<std::size_t>(i - 1)]) > rt) {
              const auto anchor = std::find(g.begin(), g.end(), 1) - g.begin() + 1;
              expected.insert(static_cast<Value>(anchor));
            }
          }
          const auto rec = exposure_set(static_cast<std::size_t>(n), rt, i, j);
          int formula = 0;
          if (j <= n - rt - 1) formula = n - rt - j;
          if (j >= rt + 2) formula = j - rt - 1;
          EXPECT_EQ(rec.cardinality(), formula);
          std::set<Value> got;
          if (rec.interval) {
            for (auto v : rec.interval->as_set()) got.insert(v);
          }
          EXPECT_EQ(got, expected) << "n=" << n << " rt=" << rt << " i=" << i << " j=" << j;
        }
      }
    }
  }
}

TEST(ExposureSet, UnionBound) {
  std::mt19937_64 rng(23);
  for (int n = 4; n <= 12; ++n) {
    for (int rt = (n - 1) / 2; rt <= n - 1; ++rt) {
      if (2 * rt < n - 2) continue;
      for (int t = 0; t < 200; ++t) {
        const auto f = to_lib(ref::random_perm(n, rng));
        const auto e = is_exposed(f, rt);
        const auto covered = static_cast<int>(anchors_marked(e).size());
        EXPECT_LE(covered, (n - rt - 1) * (n - rt));
      }
    }
  }
}

TEST(IsExposed, Examples) {
  const auto f0 = witness_f0(7);
  EXPECT_TRUE(is_exposed(f0, 3).exposed);
  EXPECT_FALSE(is_exposed(Permutation::identity(7), 4).exposed);
  EXPECT_FALSE(is_exposed(P({5, 2, 6, 3, 1, 7, 4}), 4).exposed);
  // Every completion of [5,?,6,?,1,7,?] is exposed.
  for (const auto& fill : ref::all_perms(3)) {
    const std::vector<int> free_vals{2, 3, 4};
    ref::Perm f{5, 0, 6, 0, 1, 7, 0};
    int k = 0;
    for (auto& slot : f) {
      if (slot == 0) slot = free_vals[static_cast<std::size_t>(fill[static_cast<std::size_t>(k++)] - 1)];
    }
    EXPECT_TRUE(is_exposed(to_lib(f), 3).exposed);
  }
}

TEST(IsExposed, EvidenceMatchesAlgorithmMarks) {
  EXPECT_EQ(anchors_marked(is_exposed(Permutation::identity(7), 4)), (std::vector<Value>{2, 3, 6, 7}));
  EXPECT_EQ(anchors_marked(is_exposed(P({5, 2, 6, 3, 1, 7, 4}), 4)), (std::vector<Value>{3, 5, 6, 7}));
}

TEST(IsExposed, AgreesWithDistanceEverywhere) {
  for (int n = 1; n <= 7; ++n) {
    const auto rots = ref::rotations(n);
    ref::for_each_perm(n, [&](const ref::Perm& f) {
      const auto d = ref::distance_to(f, rots);
      for (int rt = 0; rt < n; ++rt) {
        const auto e = is_exposed(to_lib(f), rt);
        ASSERT_EQ(e.exposed, d > rt) << "n=" << n << " rt=" << rt;
        for (std::size_t v = 0; v < rots.size(); ++v) {
          const auto& g = rots[v];
          const auto anchor = static_cast<std::size_t>(std::find(g.begin(), g.end(), 1) - g.begin());
          ASSERT_EQ(e.covered_anchor[anchor], ref::distance(f, g) > rt);
        }
      }
    });
  }
}

TEST(WitnessF0, Values) {
  EXPECT_EQ(witness_f0(7), P({5, 2, 6, 3, 1, 7, 4}));
  EXPECT_EQ(witness_f0(3), P({2, 1, 3}));
  EXPECT_THROW(witness_f0(2), DomainError);
  const auto m = witness_f0_mappings(7);
  EXPECT_EQ(m, (std::vector<std::pair<Value, Value>>{{1, 5}, {3, 6}, {6, 7}, {5, 1}}));
}

TEST(WitnessF0, DistanceEqualsRadius) {
  for (int n = 3; n <= 9; ++n) {
    const auto f0 = to_ref(witness_f0(static_cast<std::size_t>(n)));
    EXPECT_EQ(ref::distance_to(f0, ref::rotations(n)), radius_gn(static_cast<std::size_t>(n))) << n;
  }
  for (std::size_t n = 10; n <= 12; ++n) {
    EXPECT_EQ(distance_to_code(witness_f0(n), CyclicGroupCode(n).to_explicit()), radius_gn(n)) << n;
  }
}

TEST(WitnessF0, ExposedAtLargeN) {
  for (std::size_t n : {50u, 56u, 200u, 1000u, 4096u}) {
    const auto f0 = witness_f0(n);
    EXPECT_TRUE(is_exposed(f0, radius_gn(n) - 1).exposed) << n;
  }
}

TEST(CoverCodeword, Examples) {
  EXPECT_EQ(cover_codeword(Permutation::identity(7)), Permutation::identity(7));
  const auto f = P({5, 2, 6, 3, 1, 7, 4});
  EXPECT_EQ(cover_codeword(f), Permutation::identity(7));
  EXPECT_EQ(linf_distance(f, cover_codeword(f)), 4);
  EXPECT_EQ(cover_codeword_anchor(f), 1);
  EXPECT_EQ(cover_codeword(P({1})), P({1}));
  EXPECT_THROW(cover_codeword(Permutation{}), DomainError);
}

TEST(CoverCodeword, ExhaustiveSmallN) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = radius_gn(static_cast<std::size_t>(n));
    const CyclicGroupCode g(static_cast<std::size_t>(n));
    ref::for_each_perm(n, [&](const ref::Perm& f) {
      const auto c = cover_codeword(to_lib(f));
      ASSERT_TRUE(g.contains(c));
      ASSERT_LE(ref::distance(f, to_ref(c)), r);
    });
  }
}

TEST(CoverCodeword, CodewordsCoverThemselves) {
  for (std::size_t n = 3; n <= 40; ++n) {
    const CyclicGroupCode g(n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_LE(linf_distance(g.power(k), cover_codeword(g.power(k))), radius_gn(n));
    }
  }
}

TEST(CoverCodeword, RandomMidSizes) {
  std::mt19937_64 rng(29);
  for (int n : {50, 500, 5000}) {
    const auto r = radius_gn(static_cast<std::size_t>(n));
    for (int t = 0; t < 10000; ++t) {
      const auto f = to_lib(ref::random_perm(n, rng));
      ASSERT_LE(linf_distance(f, cover_codeword(f)), r) << "n=" << n;
    }
  }
}
