#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "fixtures.hpp"
#include "hopfact/hopfact.hpp"
#include "oracles.hpp"

using namespace hopfact;
using fixtures::a2;
using fixtures::m2;
using fixtures::r4;
using fixtures::r4s;
using fixtures::x;
using fixtures::y;

namespace {

ActHom constant_y() { return ActHom(a2(), a2(), {y, y}); }

std::vector<Index> sorted(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(ValidateAct, A2IsValid) {
  auto a = a2();
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a.act(x, 1), y);
  EXPECT_EQ(a.act(y, 1), y);
}

TEST(ValidateAct, SwapIsNotAnAct) {
  try {
    validate_act(m2(), 2, std::vector<Index>{0, 1, 1, 0});
    FAIL();
  } catch (AssociativityAxiomFails const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::associativity_axiom_fails);
  }
}

TEST(ValidateAct, IdentityMustActTrivially) {
  try {
    validate_act(m2(), 2, std::vector<Index>{1, 1, 1, 1});
    FAIL();
  } catch (IdentityAxiomFails const& e) {
    EXPECT_EQ(e.a, 0u);
  }
}

TEST(ValidateAct, EntryOutOfRange) {
  try {
    validate_act(m2(), 2, std::vector<Index>{0, 2, 1, 1});
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::entry_out_of_range);
  }
}

TEST(ValidateAct, TrivialMonoidAcceptsIdentityColumns) {
  EXPECT_NO_THROW(validate_act(Monoid(), 5, std::vector<Index>{0, 1, 2, 3, 4}));
}

TEST(RegularAct, Examples) {
  EXPECT_EQ(regular_act(Monoid()).size(), 1u);
  auto z = fixtures::z4_regular();
  EXPECT_EQ(z.size(), 4u);
  EXPECT_EQ(z.act(r4(2), r4(2)), r4(0));
  auto m = regular_act(m2());
  EXPECT_EQ(m.act(0, 1), 1u);
  EXPECT_EQ(m.act(1, 1), 1u);
}

TEST(ActHom, RejectsNonEquivariantMap) {
  EXPECT_THROW(ActHom(a2(), a2(), {y, x}), Error);
  EXPECT_THROW(ActHom(a2(), a2(), {x}), Error);
}

TEST(Compose, Examples) {
  auto id = identity_hom(a2());
  EXPECT_EQ(power(id, 7).map(), id.map());
  EXPECT_EQ(power(constant_y(), 2).map(), constant_y().map());
  EXPECT_EQ(power(fixtures::lambda4(2), 2).map(), fixtures::lambda4(0).map());
  EXPECT_THROW(power(id, 0), Error);
  EXPECT_THROW(compose(identity_hom(fixtures::z4_regular()), id), Error);
}

TEST(Compose, PowersAdd) {
  for (auto const& a : fixtures::acts_up_to(2, 3)) {
    for (auto const& f : endomorphisms(a)) {
      for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) {
          EXPECT_EQ(power(f, i + j).map(),
                    compose(power(f, i), power(f, j)).map());
        }
      }
    }
  }
}

TEST(ImageSubact, Examples) {
  EXPECT_EQ(image_subact(identity_hom(a2())).members(),
            (std::vector<Index>{x, y}));
  EXPECT_EQ(image_subact(constant_y()).members(), (std::vector<Index>{y}));
  EXPECT_EQ(image_subact(fixtures::lambda4(2)).members(),
            sorted(r4s({0, 2})));
}

TEST(Subact, RejectsUnclosedSubset) {
  EXPECT_THROW(Subact(a2(), {x}), Error);
  EXPECT_THROW(Subact(a2(), {}), Error);
}

TEST(SubactGenerated, Examples) {
  std::vector<Index> gx{x};
  EXPECT_EQ(subact_generated(a2(), gx).members(), (std::vector<Index>{x, y}));
  auto g2 = r4s({2});
  EXPECT_EQ(subact_generated(fixtures::z4_regular(), g2).members(),
            sorted(r4s({0, 2})));
  EXPECT_EQ(minimal_generating_set(a2()), (std::vector<Index>{x}));
}

TEST(SubactGenerated, MinimalGeneratingSetMatchesExhaustiveSearch) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    EXPECT_EQ(minimal_generating_set(a), oracle::minimal_generating_set(a));
  }
}

TEST(Subacts, EnumerationMatchesSubsetFilter) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    std::set<std::vector<Index>> got;
    for (auto const& b : enumerate_subacts(a)) {
      got.insert(b.members());
    }
    EXPECT_EQ(got, oracle::subacts(a));
  }
}

TEST(FullyInvariant, Examples) {
  auto a = a2();
  EXPECT_TRUE(is_fully_invariant(a, Subact(a, {y})));
  EXPECT_TRUE(is_fully_invariant(a, whole_act(a)));
  auto z = fixtures::z4_regular();
  EXPECT_TRUE(is_fully_invariant(z, Subact(z, r4s({0, 2}))));
}

TEST(ReesQuotient, Examples) {
  auto a = a2();
  auto q = rees_quotient(a, Subact(a, {y}));
  EXPECT_EQ(q.act.size(), 2u);
  EXPECT_EQ(q.projection(y), 0u);
  EXPECT_EQ(q.projection(x), 1u);
  EXPECT_EQ(q.act.act(1, 1), 0u);

  EXPECT_EQ(rees_quotient(whole_act(a)).act.size(), 1u);

  auto z = fixtures::z4_regular();
  auto qz = rees_quotient(Subact(z, r4s({0, 2})));
  EXPECT_EQ(qz.act.size(), 3u);
  EXPECT_THROW(rees_quotient(z, Subact(a, {y})), Error);
}

TEST(QuotientByCongruence, Examples) {
  auto a = a2();
  auto qd = quotient_by_congruence(a, Partition::discrete(2));
  EXPECT_TRUE(find_isomorphism(qd.act, a).has_value());
  EXPECT_EQ(quotient_by_congruence(a, Partition::single_class(2)).act.size(),
            1u);
  auto z = fixtures::z4_regular();
  auto r2 = left_translation_kernel(z.monoid(), r4(2));
  EXPECT_EQ(quotient_by_congruence(z, r2).act.size(), 2u);
  // {1}{0,2,3} is not closed under multiplication by 3.
  std::vector<Index> bad{0, 1, 1, 1};
  try {
    quotient_by_congruence(z, Partition::from_labels(bad));
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_a_congruence);
  }
}

TEST(QuotientByCongruence, KernelOfProjectionRoundTrips) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    for (auto const& rho : enumerate_congruences(a)) {
      auto q = quotient_by_congruence(rho);
      EXPECT_TRUE(q.projection.is_surjective());
      EXPECT_EQ(kernel_congruence(q.projection), rho);
    }
  }
}

TEST(QuotientByCongruence, HomomorphismTheorem) {
  // A / K_f is isomorphic to im f, for every hom between small acts.
  auto acts = fixtures::acts_up_to(2, 3);
  for (auto const& a : acts) {
    for (auto const& b : acts) {
      if (!(a.monoid() == b.monoid())) {
        continue;
      }
      for (auto const& f : homomorphisms(a, b)) {
        auto q = quotient_by_congruence(kernel_congruence(f));
        auto im = as_act(image_subact(f));
        EXPECT_TRUE(find_isomorphism(q.act, im.act).has_value());
      }
    }
  }
}

TEST(AsAct, InclusionIsInjectiveHom) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    for (auto const& b : enumerate_subacts(a)) {
      auto e = as_act(b);
      EXPECT_TRUE(e.inclusion.is_injective());
      EXPECT_EQ(e.inclusion.map(), b.members());
      EXPECT_NO_THROW(ActHom(e.act, a, e.inclusion.map()));
    }
  }
}
