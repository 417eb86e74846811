#ifndef HOPFACT_DECIDERS_HPP_
#define HOPFACT_DECIDERS_HPP_

// Deciders for the Hopfian family of properties of finite acts, and the
// exact chain-stabilization indices behind them.
//
// For an endomorphism f the kernel chain K_f <= K_{f^2} <= ... increases and
// the image chain I_f >= I_{f^2} >= ... decreases.  The k-index (i-index) of
// f is the least n with K_{f^n} = K_{f^{n+1}} (I_{f^n} = I_{f^{n+1}}).  The
// act-level index of a "strongly" property is the maximum of the per
// endomorphism indices.

#include <algorithm>  // for max
#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <span>       // for span
#include <stdexcept>  // for logic_error
#include <utility>    // for move
#include <vector>     // for vector

#include "act.hpp"
#include "congruence.hpp"
#include "endomorphisms.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "relation.hpp"

namespace hopfact {

enum class Criterion {
  // The chain is constant from n on, checked against every later power.
  stable_tail = 1,
  // K_{f^n} = K_{f^{n+1}} (resp. I_{f^n} = I_{f^{n+1}}).
  consecutive = 2,
  // I n K = Delta (resp. I v K = A x A) at f^n.
  complement = 3,
};

namespace detail {

// Kernels and images of f, f^2, ..., f^{horizon}; index 0 holds f^1.
struct PowerChain {
  std::vector<Partition> kernels;
  std::vector<Partition> images;
};

// Powers past 2|A| add nothing: a transformation of an n-set has index at
// most n, and a monotone chain that is eventually periodic is eventually
// constant.
inline std::size_t chain_horizon(std::size_t carrier) {
  return 2 * carrier + 1;
}

inline PowerChain power_chain(ActHom const& f) {
  std::size_t const n = f.source().size();
  std::size_t const horizon = chain_horizon(n);
  PowerChain chain;
  std::vector<Index> power = f.map();
  for (std::size_t e = 1; e <= horizon; ++e) {
    chain.kernels.push_back(Partition::kernel_of(power, n));
    std::vector<bool> hit(n, false);
    for (auto v : power) {
      hit[v] = true;
    }
    std::vector<Index> image;
    for (Index a = 0; a < n; ++a) {
      if (hit[a]) {
        image.push_back(a);
      }
    }
    chain.images.push_back(Partition::with_block(n, image));
    for (auto& v : power) {
      v = f(v);
    }
  }
  return chain;
}

// Least n (1-based) with chain[n-1] == chain[n], or nullopt.
inline std::optional<std::size_t> first_repeat(
    std::vector<Partition> const& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (chain[i] == chain[i + 1]) {
      return i + 1;
    }
  }
  return std::nullopt;
}

// Least n with chain[n-1] == chain[m-1] for every later m in range.
inline std::optional<std::size_t> first_stable_tail(
    std::vector<Partition> const& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    bool stable = true;
    for (std::size_t j = i + 1; j < chain.size() && stable; ++j) {
      stable = chain[i] == chain[j];
    }
    if (stable && i + 1 < chain.size()) {
      return i + 1;
    }
  }
  return std::nullopt;
}

inline bool joins_to_universal(Partition const& x, Partition const& y) {
  DisjointSets sets(x.carrier_size());
  auto const xr = x.representatives();
  auto const yr = y.representatives();
  for (Index a = 0; a < x.carrier_size(); ++a) {
    sets.unite(a, xr[x.label(a)]);
    sets.unite(a, yr[y.label(a)]);
  }
  return Partition::from_disjoint_sets(sets).is_single_class();
}

inline std::optional<std::size_t> first_index(PowerChain const& chain,
                                              Criterion criterion,
                                              bool kernel_side) {
  auto const& seq = kernel_side ? chain.kernels : chain.images;
  switch (criterion) {
    case Criterion::stable_tail:
      return first_stable_tail(seq);
    case Criterion::consecutive:
      return first_repeat(seq);
    case Criterion::complement:
      for (std::size_t i = 0; i < chain.kernels.size(); ++i) {
        bool const ok =
            kernel_side
                ? intersect(chain.images[i], chain.kernels[i]).is_discrete()
                : joins_to_universal(chain.images[i], chain.kernels[i]);
        if (ok) {
          return i + 1;
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

struct ChainIndex {
  std::size_t index = 0;
  Congruence stable;
};

/// Least n >= 1 with K_{f^n} = K_{f^{n+1}}, plus the stable kernel.
inline ChainIndex k_chain_index(ActHom const& f) {
  if (!f.is_endomorphism()) {
    throw Error(ErrorKind::source_target_mismatch,
                "chain indices are defined for endomorphisms");
  }
  auto const chain = detail::power_chain(f);
  auto const n = detail::first_repeat(chain.kernels);
  if (!n || detail::first_stable_tail(chain.kernels) != n) {
    throw std::logic_error("kernel chain did not stabilize within 2|A|");
  }
  return {*n, Congruence::from_valid(f.source(), chain.kernels[*n - 1])};
}

/// Least n >= 1 with I_{f^n} = I_{f^{n+1}}, plus the stable image congruence.
inline ChainIndex i_chain_index(ActHom const& f) {
  if (!f.is_endomorphism()) {
    throw Error(ErrorKind::source_target_mismatch,
                "chain indices are defined for endomorphisms");
  }
  auto const chain = detail::power_chain(f);
  auto const n = detail::first_repeat(chain.images);
  if (!n || detail::first_stable_tail(chain.images) != n) {
    throw std::logic_error("image chain did not stabilize within 2|A|");
  }
  return {*n, Congruence::from_valid(f.source(), chain.images[*n - 1])};
}

inline bool is_hopfian(std::span<ActHom const> endos) {
  for (auto const& f : endos) {
    if (f.is_surjective() && !f.is_injective()) {
      return false;
    }
  }
  return true;
}

inline bool is_co_hopfian(std::span<ActHom const> endos) {
  for (auto const& f : endos) {
    if (f.is_injective() && !f.is_surjective()) {
      return false;
    }
  }
  return true;
}

inline bool is_hopfian(Act const& a,
                       std::size_t budget = default_search_budget) {
  return is_hopfian(endomorphisms(a, budget));
}

inline bool is_co_hopfian(Act const& a,
                          std::size_t budget = default_search_budget) {
  return is_co_hopfian(endomorphisms(a, budget));
}

struct StrongVerdict {
  bool holds = false;
  std::size_t index = 0;  // max over f of the least n; 0 when !holds

  friend bool operator==(StrongVerdict const&, StrongVerdict const&) = default;
};

namespace detail {

inline StrongVerdict strong_property(std::span<ActHom const> endos,
                                     Criterion criterion, bool kernel_side) {
  StrongVerdict v{true, 1};
  for (auto const& f : endos) {
    auto const n = first_index(power_chain(f), criterion, kernel_side);
    if (!n) {
      return {false, 0};
    }
    v.index = std::max(v.index, *n);
  }
  return v;
}

}  // namespace detail

inline StrongVerdict is_strongly_hopfian(std::span<ActHom const> endos,
                                         Criterion criterion) {
  return detail::strong_property(endos, criterion, true);
}

inline StrongVerdict is_strongly_co_hopfian(std::span<ActHom const> endos,
                                            Criterion criterion) {
  return detail::strong_property(endos, criterion, false);
}

inline StrongVerdict is_strongly_hopfian(
    Act const& a, Criterion criterion = Criterion::consecutive,
    std::size_t budget = default_search_budget) {
  return is_strongly_hopfian(endomorphisms(a, budget), criterion);
}

inline StrongVerdict is_strongly_co_hopfian(
    Act const& a, Criterion criterion = Criterion::consecutive,
    std::size_t budget = default_search_budget) {
  return is_strongly_co_hopfian(endomorphisms(a, budget), criterion);
}

inline bool is_fitting(std::span<ActHom const> endos) {
  return is_strongly_hopfian(endos, Criterion::consecutive).holds &&
         is_strongly_co_hopfian(endos, Criterion::consecutive).holds;
}

inline bool is_fitting(Act const& a,
                       std::size_t budget = default_search_budget) {
  return is_fitting(endomorphisms(a, budget));
}

struct ChainConditions {
  bool noetherian = false;
  bool artinian = false;
  std::size_t lattice_size = 0;
  std::size_t max_chain_length = 0;  // counted in congruences
};

/// Longest chain in the lattice given in canonical order (finer first).
inline std::size_t longest_chain(std::span<Congruence const> lattice) {
  std::vector<std::size_t> length(lattice.size(), 1);
  std::size_t best = 0;
  for (std::size_t j = 0; j < lattice.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (lattice[i].num_classes() > lattice[j].num_classes() &&
          lattice[i].is_contained_in(lattice[j])) {
        length[j] = std::max(length[j], length[i] + 1);
      }
    }
    best = std::max(best, length[j]);
  }
  return best;
}

/// Finite lattices satisfy both chain conditions; the evidence reported is
/// the lattice size and its longest chain.
inline ChainConditions chain_conditions(
    Act const& a, std::size_t carrier_cap = default_congruence_cap) {
  auto const lattice = enumerate_congruences(a, carrier_cap);
  // A finite lattice has no infinite strictly monotone chain.
  return {true, true, lattice.size(), longest_chain(lattice)};
}

struct QuasiInjectiveCounterexample {
  Subact subact;
  ActHom map;  // from as_act(subact).act into A
};

struct QuasiInjectivity {
  bool holds = true;
  std::optional<QuasiInjectiveCounterexample> counterexample;
};

/// Every homomorphism from a subact B into A extends to an endomorphism.
inline QuasiInjectivity is_quasi_injective(
    Act const& a, std::span<ActHom const> endos,
    std::size_t budget = default_search_budget) {
  for (auto const& b : enumerate_subacts(a)) {
    auto const embedded = as_act(b);
    for (auto const& f : homomorphisms(embedded.act, a, budget)) {
      bool extends = false;
      for (auto const& h : endos) {
        bool agrees = true;
        for (Index i = 0; i < b.size() && agrees; ++i) {
          agrees = h(b.members()[i]) == f(i);
        }
        if (agrees) {
          extends = true;
          break;
        }
      }
      if (!extends) {
        return {false, QuasiInjectiveCounterexample{b, f}};
      }
    }
  }
  return {};
}

inline QuasiInjectivity is_quasi_injective(
    Act const& a, std::size_t budget = default_search_budget) {
  return is_quasi_injective(a, endomorphisms(a, budget), budget);
}

struct QuasiProjectiveCounterexample {
  Congruence congruence;
  ActHom map;  // from A into A / congruence
};

struct QuasiProjectivity {
  bool holds = true;
  std::optional<QuasiProjectiveCounterexample> counterexample;
};

/// Every homomorphism A -> A/rho lifts through the canonical epimorphism.
inline QuasiProjectivity is_quasi_projective(
    Act const& a, std::span<ActHom const> endos,
    std::size_t carrier_cap = default_congruence_cap,
    std::size_t budget = default_search_budget) {
  for (auto const& rho : enumerate_congruences(a, carrier_cap)) {
    auto const q = quotient_by_congruence(rho);
    for (auto const& f : homomorphisms(a, q.act, budget)) {
      bool lifts = false;
      for (auto const& h : endos) {
        bool agrees = true;
        for (Index x = 0; x < a.size() && agrees; ++x) {
          agrees = q.projection(h(x)) == f(x);
        }
        if (agrees) {
          lifts = true;
          break;
        }
      }
      if (!lifts) {
        return {false, QuasiProjectiveCounterexample{rho, f}};
      }
    }
  }
  return {};
}

inline QuasiProjectivity is_quasi_projective(
    Act const& a, std::size_t carrier_cap = default_congruence_cap,
    std::size_t budget = default_search_budget) {
  return is_quasi_projective(a, endomorphisms(a, budget), carrier_cap, budget);
}

struct ElementHopfData {
  std::size_t r_index = 0;  // least n with r(s^n) = r(s^{n+1}); 0 if none
  std::size_t co_index = 0;  // least n with s^n in s^{n+1} S; 0 if none
  Index co_witness = 0;      // least t with s^n = s^{n+1} t
};

struct MonoidHopfReport {
  bool strongly_hopfian = true;
  bool strongly_co_hopfian = true;
  std::vector<ElementHopfData> elements;
};

/// Least n with r(s^n) = r(s^{n+1}), searched up to |M| + 1.
inline std::optional<std::size_t> r_chain_index(Monoid const& m, Index s) {
  Index power = s;
  Partition current = left_translation_kernel(m, power);
  for (std::size_t n = 1; n <= m.size() + 1; ++n) {
    Index const next_power = m.product(power, s);
    Partition next = left_translation_kernel(m, next_power);
    if (next == current) {
      return n;
    }
    power = next_power;
    current = std::move(next);
  }
  return std::nullopt;
}

/// Strong (co-)Hopficity of S_S read off the monoid directly, per element.
inline MonoidHopfReport monoid_hopf_properties(Monoid const& m) {
  MonoidHopfReport report;
  report.elements.resize(m.size());
  for (Index s = 0; s < m.size(); ++s) {
    auto& data = report.elements[s];
    if (auto n = r_chain_index(m, s)) {
      data.r_index = *n;
    } else {
      report.strongly_hopfian = false;
    }
    Index power = s;
    for (std::size_t n = 1; n <= m.size() + 1 && data.co_index == 0; ++n) {
      Index const next_power = m.product(power, s);
      for (Index t = 0; t < m.size(); ++t) {
        if (m.product(next_power, t) == power) {
          data.co_index = n;
          data.co_witness = t;
          break;
        }
      }
      power = next_power;
    }
    if (data.co_index == 0) {
      report.strongly_co_hopfian = false;
    }
  }
  return report;
}

struct ChainReport {
  Index endomorphism = 0;  // position in lexicographic End(A)
  std::size_t k_index = 0;
  std::size_t i_index = 0;
  Congruence stable_kernel;
  Congruence stable_image;
};

struct PropertyReport {
  std::size_t act_size = 0;
  std::size_t end_size = 0;
  bool hopfian = false;
  bool co_hopfian = false;
  bool strongly_hopfian = false;
  std::size_t strongly_hopfian_index = 0;
  bool strongly_co_hopfian = false;
  std::size_t strongly_co_hopfian_index = 0;
  bool fitting = false;
  bool noetherian = false;
  bool artinian = false;
  bool quasi_injective = false;
  bool quasi_projective = false;
  bool end_commutative = false;
  bool end_strongly_pi_regular = false;
  std::size_t lattice_size = 0;
  std::size_t max_chain_length = 0;
};

/// The three criteria for one side, reported side by side.
struct CriteriaReport {
  StrongVerdict stable_tail;
  StrongVerdict consecutive;
  StrongVerdict complement;

  [[nodiscard]] bool booleans_agree() const noexcept {
    return stable_tail.holds == consecutive.holds &&
           consecutive.holds == complement.holds;
  }
  [[nodiscard]] bool indices_agree() const noexcept {
    return stable_tail.index == consecutive.index;
  }
};

struct Classification {
  PropertyReport report;
  std::vector<ChainReport> chains;
  CriteriaReport hopfian_criteria;
  CriteriaReport co_hopfian_criteria;
};

struct ClassifyOptions {
  std::size_t congruence_cap = default_congruence_cap;
  std::size_t search_budget = default_search_budget;
};

inline CriteriaReport criteria_report(std::span<ActHom const> endos,
                                      bool kernel_side) {
  return {detail::strong_property(endos, Criterion::stable_tail, kernel_side),
          detail::strong_property(endos, Criterion::consecutive, kernel_side),
          detail::strong_property(endos, Criterion::complement, kernel_side)};
}

inline Classification classify(Act const& a, ClassifyOptions options = {}) {
  Classification out;
  auto const end = end_monoid(a, options.search_budget);
  auto const& endos = end.elements();
  auto& r = out.report;
  r.act_size = a.size();
  r.end_size = end.size();
  r.hopfian = is_hopfian(endos);
  r.co_hopfian = is_co_hopfian(endos);
  out.hopfian_criteria = criteria_report(endos, true);
  out.co_hopfian_criteria = criteria_report(endos, false);
  r.strongly_hopfian = out.hopfian_criteria.consecutive.holds;
  r.strongly_hopfian_index = out.hopfian_criteria.consecutive.index;
  r.strongly_co_hopfian = out.co_hopfian_criteria.consecutive.holds;
  r.strongly_co_hopfian_index = out.co_hopfian_criteria.consecutive.index;
  r.fitting = r.strongly_hopfian && r.strongly_co_hopfian;
  auto const cc = chain_conditions(a, options.congruence_cap);
  r.noetherian = cc.noetherian;
  r.artinian = cc.artinian;
  r.lattice_size = cc.lattice_size;
  r.max_chain_length = cc.max_chain_length;
  r.quasi_injective =
      is_quasi_injective(a, endos, options.search_budget).holds;
  r.quasi_projective = is_quasi_projective(a, endos, options.congruence_cap,
                                           options.search_budget)
                           .holds;
  r.end_commutative = end.is_commutative();
  r.end_strongly_pi_regular = is_strongly_pi_regular(end).holds;
  for (Index i = 0; i < endos.size(); ++i) {
    auto k = k_chain_index(endos[i]);
    auto im = i_chain_index(endos[i]);
    out.chains.push_back(ChainReport{i, k.index, im.index, std::move(k.stable),
                                     std::move(im.stable)});
  }
  return out;
}

}  // namespace hopfact

#endif  // HOPFACT_DECIDERS_HPP_
