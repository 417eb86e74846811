#ifndef HOPFACT_ENDOMORPHISMS_HPP_
#define HOPFACT_ENDOMORPHISMS_HPP_

// Homomorphism search between finite acts, the endomorphism monoid, retracts
// and strong pi-regularity.
//
// Composition convention throughout: (g o f)(a) = g(f(a)).  With this
// convention End(S_S) = {lambda_a} and lambda_a o lambda_b = lambda_{ab}.

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <map>        // for map
#include <numeric>    // for iota
#include <optional>   // for optional
#include <span>       // for span
#include <string>     // for to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "act.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace hopfact {

inline constexpr std::size_t default_search_budget = 1'000'000;
// Largest End(A) materialized with a composition table.
inline constexpr std::size_t end_monoid_cap = 1024;

namespace detail {

// allowed, when non-empty, is a |source| x |target| mask: f(x) = y is
// admissible only if allowed[x * |target| + y].
class HomSearch {
 public:
  HomSearch(Act const& source, Act const& target, std::size_t budget,
            std::vector<bool> allowed = {})
      : source_(source),
        target_(target),
        budget_(budget),
        generators_(minimal_generating_set(source)),
        allowed_(std::move(allowed)),
        map_(source.size(), unset) {}

  std::vector<std::vector<Index>> run() {
    descend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  static constexpr Index unset = static_cast<Index>(-1);

  void descend(std::size_t depth) {
    if (depth == generators_.size()) {
      if (is_equivariant()) {
        found_.push_back(map_);
      }
      return;
    }
    Index const g = generators_[depth];
    std::size_t const n = source_.monoid().size();
    for (Index b = 0; b < target_.size(); ++b) {
      if (++nodes_ > budget_) {
        throw Error(ErrorKind::search_budget_exceeded,
                    "homomorphism search exceeded " + std::to_string(budget_) +
                        " nodes");
      }
      std::size_t const mark = trail_.size();
      bool ok = true;
      // Assigning f(g) = b forces f(g s) = b s for every s.
      for (Index s = 0; s < n && ok; ++s) {
        Index const x = source_.act(g, s);
        Index const y = target_.act(b, s);
        if (!allowed_.empty() && !allowed_[x * target_.size() + y]) {
          ok = false;
        } else if (map_[x] == unset) {
          map_[x] = y;
          trail_.push_back(x);
        } else if (map_[x] != y) {
          ok = false;
        }
      }
      if (ok) {
        descend(depth + 1);
      }
      while (trail_.size() > mark) {
        map_[trail_.back()] = unset;
        trail_.pop_back();
      }
    }
  }

  [[nodiscard]] bool is_equivariant() const {
    for (Index a = 0; a < source_.size(); ++a) {
      for (Index s = 0; s < source_.monoid().size(); ++s) {
        if (map_[source_.act(a, s)] != target_.act(map_[a], s)) {
          return false;
        }
      }
    }
    return true;
  }

  Act const& source_;
  Act const& target_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Index> generators_;
  std::vector<bool> allowed_;
  std::vector<Index> map_;
  std::vector<Index> trail_;
  std::vector<std::vector<Index>> found_;
};

}  // namespace detail

/// All homomorphisms source -> target, ordered lexicographically by map.
inline std::vector<ActHom> homomorphisms(
    Act const& source, Act const& target,
    std::size_t budget = default_search_budget) {
  if (!(source.monoid() == target.monoid())) {
    throw Error(ErrorKind::invalid_argument,
                "acts are over different monoids");
  }
  auto maps = detail::HomSearch(source, target, budget).run();
  std::vector<ActHom> out;
  out.reserve(maps.size());
  for (auto& m : maps) {
    out.push_back(ActHom::from_valid_map(source, target, std::move(m)));
  }
  return out;
}

/// Homomorphisms f with allowed[x * |target| + f(x)] for every x.
inline std::vector<ActHom> constrained_homomorphisms(
    Act const& source, Act const& target, std::vector<bool> allowed,
    std::size_t budget = default_search_budget) {
  if (!(source.monoid() == target.monoid())) {
    throw Error(ErrorKind::invalid_argument,
                "acts are over different monoids");
  }
  if (allowed.size() != source.size() * target.size()) {
    throw Error(ErrorKind::invalid_argument, "mask has the wrong shape");
  }
  auto maps =
      detail::HomSearch(source, target, budget, std::move(allowed)).run();
  std::vector<ActHom> out;
  out.reserve(maps.size());
  for (auto& m : maps) {
    out.push_back(ActHom::from_valid_map(source, target, std::move(m)));
  }
  return out;
}

inline std::vector<ActHom> endomorphisms(
    Act const& a, std::size_t budget = default_search_budget) {
  return homomorphisms(a, a, budget);
}

/// End(A) with its composition table.  Positions refer to `elements`, which
/// are in lexicographic map order; `monoid` is the same structure relabeled
/// so that the identity sits at index 0.
class EndMonoid {
 public:
  explicit EndMonoid(std::vector<ActHom> elements)
      : elements_(std::move(elements)) {
    std::size_t const k = elements_.size();
    if (k > end_monoid_cap) {
      throw Error(ErrorKind::carrier_too_large,
                  "End(A) has " + std::to_string(k) +
                      " elements; the composition table is capped at " +
                      std::to_string(end_monoid_cap));
    }
    std::map<std::vector<Index>, Index> position;
    for (Index i = 0; i < k; ++i) {
      position.emplace(elements_[i].map(), i);
    }
    table_.resize(k * k);
    std::vector<Index> composite;
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) {
        auto const& g = elements_[i].map();
        auto const& f = elements_[j].map();
        composite.resize(f.size());
        for (Index a = 0; a < f.size(); ++a) {
          composite[a] = g[f[a]];
        }
        table_[i * k + j] = position.at(composite);
      }
    }
    std::vector<Index> id(elements_.front().source().size());
    std::iota(id.begin(), id.end(), Index{0});
    identity_ = position.at(id);

    to_monoid_.resize(k);
    std::iota(to_monoid_.begin(), to_monoid_.end(), Index{0});
    std::swap(to_monoid_[0], to_monoid_[identity_]);
    std::vector<Index> relabeled(k * k);
    for (Index i = 0; i < k; ++i) {
      for (Index j = 0; j < k; ++j) {
        relabeled[i * k + j] =
            to_monoid_[table_[to_monoid_[i] * k + to_monoid_[j]]];
      }
    }
    monoid_ = Monoid::from_valid_table(k, std::move(relabeled));
  }

  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] std::vector<ActHom> const& elements() const noexcept {
    return elements_;
  }
  [[nodiscard]] ActHom const& element(Index i) const { return elements_[i]; }
  [[nodiscard]] Index identity() const noexcept { return identity_; }

  /// Position of elements[i] o elements[j].
  [[nodiscard]] Index compose(Index i, Index j) const noexcept {
    return table_[i * elements_.size() + j];
  }

  [[nodiscard]] Index power(Index i, std::size_t n) const noexcept {
    Index result = i;
    for (std::size_t e = 1; e < n; ++e) {
      result = compose(result, i);
    }
    return result;
  }

  [[nodiscard]] Monoid const& monoid() const noexcept { return monoid_; }
  /// to_monoid()[position] = index in monoid() (an involution).
  [[nodiscard]] std::vector<Index> const& to_monoid() const noexcept {
    return to_monoid_;
  }

  [[nodiscard]] bool is_commutative() const noexcept {
    std::size_t const k = elements_.size();
    for (Index i = 0; i < k; ++i) {
      for (Index j = i + 1; j < k; ++j) {
        if (table_[i * k + j] != table_[j * k + i]) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  std::vector<ActHom> elements_;
  std::vector<Index> table_;
  Index identity_ = 0;
  std::vector<Index> to_monoid_;
  Monoid monoid_;
};

inline EndMonoid end_monoid(Act const& a,
                            std::size_t budget = default_search_budget) {
  return EndMonoid(endomorphisms(a, budget));
}

inline bool is_commutative(EndMonoid const& e) { return e.is_commutative(); }

/// f(B) inside B for every endomorphism f of B's parent.
inline bool is_fully_invariant(Subact const& b,
                               std::size_t budget = default_search_budget) {
  auto const endos = endomorphisms(b.parent(), budget);
  return is_invariant_under(b, endos);
}

inline bool is_fully_invariant(Act const& a, Subact const& b,
                               std::size_t budget = default_search_budget) {
  if (!(b.parent() == a)) {
    throw Error(ErrorKind::parent_mismatch, "subact belongs to another act");
  }
  return is_fully_invariant(b, budget);
}

struct RetractPair {
  ActHom section;     // gamma: A -> B
  ActHom retraction;  // pi: B -> A, pi o gamma = id_A
};

struct RetractResult {
  RetractPair first;                 // first pair in search order
  std::optional<RetractPair> proper;  // first pair with gamma non-bijective
};

/// Whether A is a retract of B.  Search order: gamma lexicographic, then pi.
inline std::optional<RetractResult> is_retract_of(
    Act const& a, Act const& b, std::size_t budget = default_search_budget) {
  if (a.size() > b.size() || !(a.monoid() == b.monoid())) {
    return std::nullopt;
  }
  std::optional<RetractResult> result;
  for (auto const& gamma : homomorphisms(a, b, budget)) {
    if (!gamma.is_injective()) {
      continue;
    }
    bool const proper = !gamma.is_surjective();
    if (result && (!proper || result->proper)) {
      continue;
    }
    // pi is pinned on im gamma by pi(gamma(x)) = x.
    std::vector<bool> allowed(b.size() * a.size(), true);
    for (Index x = 0; x < a.size(); ++x) {
      for (Index y = 0; y < a.size(); ++y) {
        allowed[gamma(x) * a.size() + y] = y == x;
      }
    }
    auto pis = constrained_homomorphisms(b, a, std::move(allowed), budget);
    if (pis.empty()) {
      continue;
    }
    if (!result) {
      result = RetractResult{{gamma, pis.front()}, std::nullopt};
    }
    if (proper) {
      result->proper = RetractPair{gamma, pis.front()};
      break;
    }
  }
  return result;
}

/// An isomorphism a -> b if one exists (the lexicographically first).
inline std::optional<ActHom> find_isomorphism(
    Act const& a, Act const& b, std::size_t budget = default_search_budget) {
  if (a.size() != b.size() || !(a.monoid() == b.monoid())) {
    return std::nullopt;
  }
  for (auto& h : homomorphisms(a, b, budget)) {
    if (h.is_injective()) {
      return std::move(h);
    }
  }
  return std::nullopt;
}

struct PiRegularWitness {
  std::size_t n = 0;
  Index g = 0;  // position in EndMonoid::elements()
};

struct PiRegularity {
  bool holds = false;
  // One entry per element; nullopt where no witness exists.
  std::vector<std::optional<PiRegularWitness>> witnesses;
};

/// f^n = g f^{n+1} = f^{n+1} g for every f; n ascending, then g in order.
inline PiRegularity is_strongly_pi_regular(EndMonoid const& e) {
  std::size_t const k = e.size();
  PiRegularity result{true, {}};
  result.witnesses.resize(k);
  for (Index f = 0; f < k; ++f) {
    Index fn = f;
    for (std::size_t n = 1; n <= k && !result.witnesses[f]; ++n) {
      Index const fn1 = e.compose(fn, f);
      for (Index g = 0; g < k; ++g) {
        if (e.compose(g, fn1) == fn && e.compose(fn1, g) == fn) {
          result.witnesses[f] = PiRegularWitness{n, g};
          break;
        }
      }
      fn = fn1;
    }
    if (!result.witnesses[f]) {
      result.holds = false;
    }
  }
  return result;
}

/// For a surjection h: A -> B, the first endomorphism f of B (position in
/// `end_b`) for which no endomorphism g of A satisfies f o h = h o g.
/// Since h is onto, g determines f; so collect the maps that some g induces
/// and look each f up.
inline std::optional<Index> first_non_induced_endomorphism(
    ActHom const& h, std::span<ActHom const> end_a,
    std::span<ActHom const> end_b) {
  std::size_t const n = h.source().size();
  std::size_t const m = h.target().size();
  std::set<std::vector<Index>> induced;
  std::vector<Index> f(m);
  for (auto const& g : end_a) {
    std::fill(f.begin(), f.end(), static_cast<Index>(-1));
    bool consistent = true;
    for (Index x = 0; x < n && consistent; ++x) {
      Index const value = h(g(x));
      Index& slot = f[h(x)];
      consistent = slot == static_cast<Index>(-1) || slot == value;
      slot = value;
    }
    if (consistent) {
      induced.insert(f);
    }
  }
  for (Index fi = 0; fi < end_b.size(); ++fi) {
    if (!induced.contains(end_b[fi].map())) {
      return fi;
    }
  }
  return std::nullopt;
}

/// Whether h: A -> B has a section, i.e. some sigma: B -> A with h o sigma
/// = id_B.
inline bool has_section(ActHom const& h,
                        std::size_t budget = default_search_budget) {
  std::size_t const n = h.source().size();
  std::vector<bool> allowed(h.target().size() * n, false);
  for (Index x = 0; x < n; ++x) {
    allowed[h(x) * n + x] = true;
  }
  return !constrained_homomorphisms(h.target(), h.source(),
                                    std::move(allowed), budget)
              .empty();
}

}  // namespace hopfact

#endif  // HOPFACT_ENDOMORPHISMS_HPP_
