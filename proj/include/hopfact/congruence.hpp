#ifndef HOPFACT_CONGRUENCE_HPP_
#define HOPFACT_CONGRUENCE_HPP_

// Congruences on finite acts: closure, the standard congruences attached to
// subacts and homomorphisms, lattice operations, and enumeration.

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <set>        // for set
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "act.hpp"
#include "error.hpp"
#include "relation.hpp"

namespace hopfact {

inline constexpr std::size_t default_congruence_cap = 8;

class Congruence {
 public:
  /// Throws not_a_congruence if `partition` is not action-compatible.
  Congruence(Act parent, Partition partition)
      : parent_(std::move(parent)), partition_(std::move(partition)) {
    if (!is_compatible(parent_, partition_)) {
      throw Error(ErrorKind::not_a_congruence,
                  "partition is not compatible with the action");
    }
  }

  static Congruence from_valid(Act parent, Partition partition) {
    return Congruence(Unchecked{}, std::move(parent), std::move(partition));
  }

  [[nodiscard]] Act const& parent() const noexcept { return parent_; }
  [[nodiscard]] Partition const& partition() const noexcept {
    return partition_;
  }
  [[nodiscard]] std::size_t num_classes() const noexcept {
    return partition_.num_classes();
  }
  [[nodiscard]] bool related(Index a, Index b) const noexcept {
    return partition_.related(a, b);
  }
  [[nodiscard]] std::vector<std::vector<Index>> classes() const {
    return partition_.classes();
  }
  [[nodiscard]] bool is_diagonal() const noexcept {
    return partition_.is_discrete();
  }
  [[nodiscard]] bool is_universal() const noexcept {
    return partition_.is_single_class();
  }
  /// Containment as sets of pairs.
  [[nodiscard]] bool is_contained_in(Congruence const& other) const {
    return partition_.refines(other.partition_);
  }

  friend bool operator==(Congruence const& x, Congruence const& y) noexcept {
    return x.partition_ == y.partition_ && x.parent_ == y.parent_;
  }

 private:
  struct Unchecked {};
  Congruence(Unchecked, Act parent, Partition partition)
      : parent_(std::move(parent)), partition_(std::move(partition)) {}

  Act parent_;
  Partition partition_;
};

inline Congruence diagonal_congruence(Act const& a) {
  return Congruence::from_valid(a, Partition::discrete(a.size()));
}

inline Congruence universal_congruence(Act const& a) {
  return Congruence::from_valid(a, Partition::single_class(a.size()));
}

namespace detail {

// Merges each pending pair, and for every merge queues the translated pairs
// (x s, y s).  Every generating edge of the final partition then has all of
// its translates inside the partition, which is exactly compatibility.
inline Partition close_pairs(Act const& a,
                             std::vector<std::pair<Index, Index>> pending) {
  DisjointSets sets(a.size());
  std::size_t const n = a.monoid().size();
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    if (!sets.unite(x, y)) {
      continue;
    }
    for (Index s = 1; s < n; ++s) {
      Index const xs = a.act(x, s);
      Index const ys = a.act(y, s);
      if (xs != ys) {
        pending.emplace_back(xs, ys);
      }
    }
  }
  return Partition::from_disjoint_sets(sets);
}

}  // namespace detail

/// Least congruence containing the relation r.
inline Congruence congruence_closure(Act const& a, Relation const& r) {
  if (r.carrier_size() != a.size()) {
    throw Error(ErrorKind::invalid_argument,
                "relation and act have different carriers");
  }
  std::vector<std::pair<Index, Index>> pending;
  for (auto [x, y] : r.pairs()) {
    if (x != y) {
      pending.emplace_back(x, y);
    }
  }
  return Congruence::from_valid(a, detail::close_pairs(a, std::move(pending)));
}

inline Congruence principal_congruence(Act const& a, Index x, Index y) {
  if (x >= a.size() || y >= a.size()) {
    throw Error(ErrorKind::entry_out_of_range, "element out of range");
  }
  std::vector<std::pair<Index, Index>> pending;
  if (x != y) {
    pending.emplace_back(x, y);
  }
  return Congruence::from_valid(a, detail::close_pairs(a, std::move(pending)));
}

/// K_f = {(a, b) : f(a) = f(b)}, a congruence on the source of f.
inline Congruence kernel_congruence(ActHom const& f) {
  return Congruence::from_valid(
      f.source(), Partition::kernel_of(f.map(), f.target().size()));
}

/// I_f = (im f x im f) u Delta for an endomorphism f.
inline Congruence image_congruence(ActHom const& f) {
  if (!f.is_endomorphism()) {
    throw Error(ErrorKind::source_target_mismatch,
                "image congruence is defined for endomorphisms");
  }
  return Congruence::from_valid(
      f.source(), Partition::with_block(f.source().size(),
                                        image_subact(f).members()));
}

/// rho_B: B collapses to one class, everything else stays a singleton.
inline Congruence rees_congruence(Subact const& b) {
  return Congruence::from_valid(
      b.parent(), Partition::with_block(b.parent().size(), b.members()));
}

inline Congruence meet(Congruence const& x, Congruence const& y) {
  if (!(x.parent() == y.parent())) {
    throw Error(ErrorKind::parent_mismatch,
                "congruences live on different acts");
  }
  return Congruence::from_valid(x.parent(),
                                intersect(x.partition(), y.partition()));
}

/// Least congruence containing both; closing the union suffices because
/// each argument is already action-compatible.
inline Congruence join(Congruence const& x, Congruence const& y) {
  if (!(x.parent() == y.parent())) {
    throw Error(ErrorKind::parent_mismatch,
                "congruences live on different acts");
  }
  DisjointSets sets(x.parent().size());
  auto const x_reps = x.partition().representatives();
  auto const y_reps = y.partition().representatives();
  for (Index a = 0; a < x.parent().size(); ++a) {
    sets.unite(a, x_reps[x.partition().label(a)]);
    sets.unite(a, y_reps[y.partition().label(a)]);
  }
  return Congruence::from_valid(x.parent(), Partition::from_disjoint_sets(sets));
}

/// Canonical order: more classes first, then lexicographic label vector.
inline bool canonical_less(Congruence const& x, Congruence const& y) {
  if (x.num_classes() != y.num_classes()) {
    return x.num_classes() > y.num_classes();
  }
  return x.partition() < y.partition();
}

/// Every congruence of `a`, in canonical order.  Generated as the closure of
/// the principal congruences under joins.
inline std::vector<Congruence> enumerate_congruences(
    Act const& a, std::size_t carrier_cap = default_congruence_cap) {
  if (a.size() > carrier_cap) {
    throw Error(ErrorKind::carrier_too_large,
                "act has " + std::to_string(a.size()) +
                    " elements; congruence enumeration is capped at " +
                    std::to_string(carrier_cap));
  }
  std::vector<Congruence> principals;
  std::set<Partition> principal_seen;
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = x + 1; y < a.size(); ++y) {
      auto c = principal_congruence(a, x, y);
      if (principal_seen.insert(c.partition()).second) {
        principals.push_back(std::move(c));
      }
    }
  }
  std::set<Partition> seen{Partition::discrete(a.size())};
  std::vector<Congruence> all{diagonal_congruence(a)};
  std::vector<Congruence> frontier;
  for (auto const& p : principals) {
    if (seen.insert(p.partition()).second) {
      all.push_back(p);
      frontier.push_back(p);
    }
  }
  while (!frontier.empty()) {
    auto current = std::move(frontier.back());
    frontier.pop_back();
    for (auto const& p : principals) {
      if (p.is_contained_in(current)) {
        continue;
      }
      auto next = join(current, p);
      if (seen.insert(next.partition()).second) {
        all.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

inline Quotient quotient_by_congruence(Congruence const& rho) {
  return quotient_by_congruence(rho.parent(), rho.partition());
}

}  // namespace hopfact

#endif  // HOPFACT_CONGRUENCE_HPP_
