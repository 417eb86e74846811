#include <gtest/gtest.h>

#include <set>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "hopfact/hopfact.hpp"
#include "oracles.hpp"

using namespace hopfact;
using fixtures::a2;
using fixtures::r4;
using fixtures::y;

namespace {

constexpr Criterion all_criteria[] = {Criterion::stable_tail,
                                      Criterion::consecutive,
                                      Criterion::complement};

ActHom constant_y() { return ActHom(a2(), a2(), {y, y}); }

using Pairs = std::set<std::pair<Index, Index>>;

std::vector<Index> apply_n(std::vector<Index> const& f, std::size_t n) {
  std::vector<Index> out(f.size());
  for (Index x = 0; x < f.size(); ++x) {
    Index v = x;
    for (std::size_t k = 0; k < n; ++k) {
      v = f[v];
    }
    out[x] = v;
  }
  return out;
}

Pairs kernel_pairs(std::vector<Index> const& g) {
  Pairs out;
  for (Index p = 0; p < g.size(); ++p) {
    for (Index q = 0; q < g.size(); ++q) {
      if (g[p] == g[q]) {
        out.emplace(p, q);
      }
    }
  }
  return out;
}

Pairs image_pairs(std::vector<Index> const& g) {
  std::set<Index> im(g.begin(), g.end());
  Pairs out;
  for (Index p = 0; p < g.size(); ++p) {
    for (Index q = 0; q < g.size(); ++q) {
      if (p == q || (im.contains(p) && im.contains(q))) {
        out.emplace(p, q);
      }
    }
  }
  return out;
}

template <typename F>
std::size_t first_equal(std::vector<Index> const& f, F pairs_of) {
  for (std::size_t n = 1;; ++n) {
    if (pairs_of(apply_n(f, n)) == pairs_of(apply_n(f, n + 1))) {
      return n;
    }
  }
}

}  // namespace

TEST(ChainIndex, Examples) {
  auto id = identity_hom(a2());
  EXPECT_EQ(k_chain_index(id).index, 1u);
  EXPECT_EQ(i_chain_index(id).index, 1u);
  EXPECT_EQ(k_chain_index(fixtures::lambda4(2)).index, 2u);
  EXPECT_EQ(i_chain_index(fixtures::lambda4(2)).index, 2u);
  EXPECT_TRUE(k_chain_index(fixtures::lambda4(2)).stable.is_universal());
  EXPECT_EQ(k_chain_index(constant_y()).index, 1u);
  EXPECT_EQ(i_chain_index(constant_y()).index, 1u);
}

TEST(ChainIndex, MatchesPointwiseOracleAndBound) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    for (auto const& f : endomorphisms(a)) {
      auto k = k_chain_index(f).index;
      auto i = i_chain_index(f).index;
      EXPECT_EQ(k, first_equal(f.map(), kernel_pairs));
      EXPECT_EQ(i, first_equal(f.map(), image_pairs));
      EXPECT_GE(k, 1u);
      EXPECT_GE(i, 1u);
      EXPECT_LE(k, a.size());
      EXPECT_LE(i, a.size());
    }
  }
}

TEST(ChainIndex, RejectsNonEndomorphism) {
  auto p = as_act(Subact(a2(), {y})).act;
  EXPECT_THROW(k_chain_index(ActHom(p, a2(), {y})), Error);
  EXPECT_THROW(i_chain_index(ActHom(p, a2(), {y})), Error);
}

TEST(Hopfian, Examples) {
  for (auto const& a : {a2(), fixtures::z4_regular(),
                        fixtures::point(fixtures::m2())}) {
    EXPECT_TRUE(is_hopfian(a));
    EXPECT_TRUE(is_co_hopfian(a));
    EXPECT_TRUE(is_fitting(a));
  }
}

TEST(StrongCriteria, Examples) {
  for (auto c : all_criteria) {
    EXPECT_EQ(is_strongly_hopfian(a2(), c), (StrongVerdict{true, 1}));
    EXPECT_EQ(is_strongly_co_hopfian(a2(), c), (StrongVerdict{true, 1}));
    auto p = fixtures::point(fixtures::z4());
    EXPECT_EQ(is_strongly_hopfian(p, c), (StrongVerdict{true, 1}));
    EXPECT_EQ(is_strongly_co_hopfian(p, c), (StrongVerdict{true, 1}));
  }
  auto z = fixtures::z4_regular();
  EXPECT_EQ(is_strongly_hopfian(z, Criterion::consecutive),
            (StrongVerdict{true, 2}));
  EXPECT_EQ(is_strongly_hopfian(z, Criterion::complement),
            (StrongVerdict{true, 2}));
  EXPECT_EQ(is_strongly_co_hopfian(z, Criterion::consecutive),
            (StrongVerdict{true, 2}));
}

TEST(StrongCriteria, AgreeOnCorpus) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    auto endos = endomorphisms(a);
    for (bool kernel_side : {true, false}) {
      auto r = criteria_report(endos, kernel_side);
      EXPECT_TRUE(r.booleans_agree());
      EXPECT_TRUE(r.indices_agree());
    }
  }
}

TEST(StrongCriteria, StrongImpliesPlain) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    auto endos = endomorphisms(a);
    if (is_strongly_hopfian(endos, Criterion::consecutive).holds) {
      EXPECT_TRUE(is_hopfian(endos));
    }
    if (is_strongly_co_hopfian(endos, Criterion::consecutive).holds) {
      EXPECT_TRUE(is_co_hopfian(endos));
    }
  }
}

TEST(StrongCriteria, SurjectiveAndInjectiveLemmas) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    for (auto const& f : endomorphisms(a)) {
      // Stabilized chains exist on finite acts, so the lemmas reduce to:
      // surjective implies injective and conversely.
      EXPECT_EQ(f.is_surjective(), f.is_injective());
      if (f.is_surjective()) {
        EXPECT_TRUE(k_chain_index(f).stable.is_diagonal());
      }
      if (f.is_injective()) {
        EXPECT_TRUE(i_chain_index(f).stable.is_universal());
      }
    }
  }
}

TEST(ChainConditions, Examples) {
  auto s = chain_conditions(fixtures::point(Monoid()));
  EXPECT_TRUE(s.noetherian && s.artinian);
  EXPECT_EQ(s.lattice_size, 1u);
  EXPECT_EQ(s.max_chain_length, 1u);

  auto t = chain_conditions(fixtures::trivial_act(3));
  EXPECT_EQ(t.lattice_size, 5u);
  EXPECT_EQ(t.max_chain_length, 3u);

  auto a = chain_conditions(a2());
  EXPECT_EQ(a.lattice_size, 2u);
  EXPECT_EQ(a.max_chain_length, 2u);

  // Partition lattice of a 4-set: 15 elements, longest chain 4.
  auto f = chain_conditions(fixtures::trivial_act(4));
  EXPECT_EQ(f.lattice_size, 15u);
  EXPECT_EQ(f.max_chain_length, 4u);
}

TEST(QuasiInjective, Examples) {
  EXPECT_TRUE(is_quasi_injective(fixtures::point(fixtures::m2())).holds);
  EXPECT_TRUE(is_quasi_injective(a2()).holds);
  EXPECT_TRUE(is_quasi_injective(fixtures::z4_regular()).holds);
}

TEST(QuasiInjective, CounterexamplesDoNotExtend) {
  std::size_t failures = 0;
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    auto q = is_quasi_injective(a);
    if (q.holds) {
      continue;
    }
    ++failures;
    auto const& c = *q.counterexample;
    for (auto const& h : endomorphisms(a)) {
      bool agrees = true;
      for (Index i = 0; i < c.subact.size(); ++i) {
        agrees = agrees && h(c.subact.members()[i]) == c.map(i);
      }
      EXPECT_FALSE(agrees);
    }
  }
  EXPECT_GT(failures, 0u);
}

TEST(QuasiProjective, Examples) {
  EXPECT_TRUE(is_quasi_projective(fixtures::point(fixtures::m2())).holds);
  EXPECT_TRUE(is_quasi_projective(fixtures::z4_regular()).holds);
  EXPECT_TRUE(is_quasi_projective(a2()).holds);
}

TEST(QuasiProjective, CounterexamplesDoNotLift) {
  std::size_t failures = 0;
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    auto q = is_quasi_projective(a);
    if (q.holds) {
      continue;
    }
    ++failures;
    auto const& c = *q.counterexample;
    auto pi = quotient_by_congruence(c.congruence).projection;
    for (auto const& h : endomorphisms(a)) {
      EXPECT_NE(compose(pi, h).map(), c.map.map());
    }
  }
  EXPECT_GT(failures, 0u);
}

TEST(MonoidHopf, Examples) {
  auto t = monoid_hopf_properties(Monoid());
  EXPECT_TRUE(t.strongly_hopfian && t.strongly_co_hopfian);
  EXPECT_EQ(t.elements[0].r_index, 1u);
  EXPECT_EQ(t.elements[0].co_index, 1u);

  auto z = monoid_hopf_properties(fixtures::z4());
  EXPECT_TRUE(z.strongly_hopfian && z.strongly_co_hopfian);
  auto const& two = z.elements[r4(2)];
  EXPECT_EQ(two.r_index, 2u);
  EXPECT_EQ(two.co_index, 2u);
  auto z4 = fixtures::z4();
  EXPECT_EQ(element_power(z4, r4(2), 2),
            z4.product(element_power(z4, r4(2), 3), two.co_witness));
}

TEST(MonoidHopf, AgreesWithRegularAct) {
  for (auto const& m : fixtures::monoids_up_to(4)) {
    auto report = monoid_hopf_properties(m);
    auto reg = regular_act(m);
    EXPECT_EQ(report.strongly_hopfian, is_strongly_hopfian(reg).holds);
    EXPECT_EQ(report.strongly_co_hopfian, is_strongly_co_hopfian(reg).holds);
    for (Index s = 0; s < m.size(); ++s) {
      EXPECT_EQ(report.elements[s].r_index,
                oracle::r_index(m, s, m.size() + 1));
    }
  }
}

TEST(MonoidHopf, TruncatedFamilyIndexEqualsDepth) {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto t = truncated_example36(2, n);
    EXPECT_EQ(r_chain_index(t.monoid, t.x), n);
    EXPECT_EQ(oracle::truncated_r_index(2, n), n);
    EXPECT_EQ(oracle::r_index(t.monoid, t.x, 64), n);
  }
  auto t = truncated_example36(3, 2);
  EXPECT_EQ(r_chain_index(t.monoid, t.x), 2u);
  EXPECT_EQ(oracle::truncated_r_index(3, 2), 2u);
}

TEST(Classify, Examples) {
  auto a = classify(a2());
  EXPECT_EQ(a.report.end_size, 2u);
  EXPECT_TRUE(a.report.fitting);
  EXPECT_TRUE(a.report.quasi_injective && a.report.quasi_projective);
  EXPECT_EQ(a.report.lattice_size, 2u);
  EXPECT_EQ(a.chains.size(), 2u);

  auto z = classify(fixtures::z4_regular());
  EXPECT_EQ(z.report.end_size, 4u);
  EXPECT_EQ(z.report.strongly_hopfian_index, 2u);
  EXPECT_EQ(z.report.strongly_co_hopfian_index, 2u);
  EXPECT_EQ(z.report.lattice_size, 5u);
  EXPECT_EQ(z.report.max_chain_length, 4u);
  EXPECT_TRUE(z.report.end_commutative && z.report.end_strongly_pi_regular);
}

TEST(Classify, ReportInvariants) {
  for (auto const& a : fixtures::acts_up_to(3, 4)) {
    auto c = classify(a);
    auto const& r = c.report;
    EXPECT_EQ(r.fitting, r.strongly_hopfian && r.strongly_co_hopfian);
    if (r.strongly_hopfian) {
      EXPECT_TRUE(r.hopfian);
    }
    if (r.strongly_co_hopfian) {
      EXPECT_TRUE(r.co_hopfian);
    }
    if (r.end_strongly_pi_regular) {
      EXPECT_TRUE(r.strongly_hopfian && r.strongly_co_hopfian);
    }
    std::size_t kmax = 0;
    std::size_t imax = 0;
    for (auto const& ch : c.chains) {
      kmax = std::max(kmax, ch.k_index);
      imax = std::max(imax, ch.i_index);
    }
    EXPECT_EQ(r.strongly_hopfian_index, kmax);
    EXPECT_EQ(r.strongly_co_hopfian_index, imax);
  }
}
