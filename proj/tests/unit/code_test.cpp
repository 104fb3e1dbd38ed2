#include <gtest/gtest.h>

#include "../support/convert.hpp"
#include "permcover/code.hpp"
#include "permcover/cyclic_code.hpp"
#include "permcover/descriptor.hpp"
#include "permcover/errors.hpp"
#include "permcover/relabel.hpp"

using namespace permcover;

TEST(ExplicitCode, SortsAndDeduplicates) {
  const ExplicitCode c({P({2, 1, 3}), P({1, 2, 3}), P({2, 1, 3})});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.length(), 3u);
  EXPECT_EQ(c.codewords().front(), P({1, 2, 3}));
  EXPECT_TRUE(c.contains(P({2, 1, 3})));
  EXPECT_FALSE(c.contains(P({3, 2, 1})));
  EXPECT_THROW(ExplicitCode({P({1}), P({1, 2})}), DimensionError);
  EXPECT_TRUE(ExplicitCode{}.empty());
}

TEST(GenerateGroup, Closures) {
  EXPECT_EQ(generate_group(4, {}).size(), 1u);
  EXPECT_EQ(generate_group(4, {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{1, 2, 3, 4}})}).size(),
            24u);
  EXPECT_EQ(generate_group(7, {CyclicGroupCode(7).power(1)}), CyclicGroupCode(7).to_explicit());
  EXPECT_THROW(generate_group(3, {P({1, 2})}), DimensionError);
}

TEST(Descriptor, MaterializeAndDescribe) {
  const CodeDescriptor g = CyclicFamily{7, std::nullopt};
  EXPECT_EQ(code_length(g), 7u);
  EXPECT_EQ(describe(g), "G_7");
  EXPECT_EQ(materialize(g), CyclicGroupCode(7).to_explicit());

  const auto h = Permutation::from_cycles(5, {{1, 2}});
  const CodeDescriptor gh = CyclicFamily{5, h};
  EXPECT_EQ(describe(gh), "G_5^(1,2)");
  EXPECT_EQ(materialize(gh), gn_relabeled(5, h));

  const CodeDescriptor d = DihedralFamily{6};
  EXPECT_EQ(describe(d), "D_6");
  EXPECT_EQ(materialize(d).size(), 12u);

  const CodeDescriptor c = ComposedCodeSpec::uniform(5, 3, BlockKind::cyclic, BlockKind::cyclic);
  EXPECT_EQ(describe(c), "C(5,3)");
  EXPECT_EQ(code_length(c), 5u);
  EXPECT_EQ(materialize(c).size(), 60u);

  const CodeDescriptor e = ExplicitCode({P({1, 2})});
  EXPECT_EQ(code_length(e), 2u);
}
