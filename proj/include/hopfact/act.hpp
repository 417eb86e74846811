#ifndef HOPFACT_ACT_HPP_
#define HOPFACT_ACT_HPP_

// Finite right acts over a finite monoid, subacts, homomorphisms between
// acts, and the Rees and general quotient constructions.

#include <algorithm>  // for sort, unique, all_of
#include <cstddef>    // for size_t
#include <memory>     // for shared_ptr
#include <numeric>    // for iota
#include <set>        // for set
#include <span>       // for span
#include <string>     // for to_string
#include <utility>    // for move
#include <vector>     // for vector

#include "error.hpp"
#include "monoid.hpp"
#include "relation.hpp"

namespace hopfact {

class Act {
 public:
  [[nodiscard]] Monoid const& monoid() const noexcept { return monoid_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }

  /// a . s
  [[nodiscard]] Index act(Index a, Index s) const noexcept {
    return (*action_)[a * monoid_.size() + s];
  }

  [[nodiscard]] std::span<Index const> row(Index a) const noexcept {
    return {action_->data() + a * monoid_.size(), monoid_.size()};
  }

  [[nodiscard]] std::span<Index const> table() const noexcept {
    return *action_;
  }

  friend bool operator==(Act const& x, Act const& y) noexcept {
    return x.action_ == y.action_ ||
           (x.size_ == y.size_ && x.monoid_ == y.monoid_ &&
            *x.action_ == *y.action_);
  }

  // Callers guarantee the act axioms; see validate_act.
  static Act from_valid_table(Monoid monoid, std::size_t size,
                              std::vector<Index> action) {
    return Act(std::move(monoid), size, std::move(action));
  }

 private:
  Act(Monoid monoid, std::size_t size, std::vector<Index> action)
      : monoid_(std::move(monoid)),
        size_(size),
        action_(std::make_shared<std::vector<Index> const>(std::move(action))) {
  }

  Monoid monoid_;
  std::size_t size_;
  std::shared_ptr<std::vector<Index> const> action_;
};

/// Row-major action table: entry (a, s) at a * |S| + s.
inline Act validate_act(Monoid const& m, std::size_t size,
                        std::span<Index const> action) {
  std::size_t const n = m.size();
  if (size == 0 || action.size() != size * n) {
    throw Error(ErrorKind::entry_out_of_range,
                "action table must be a non-empty size x |S| array");
  }
  for (auto v : action) {
    if (v >= size) {
      throw Error(ErrorKind::entry_out_of_range,
                  "action entry " + std::to_string(v) + " is out of range");
    }
  }
  auto at = [&](Index a, Index s) { return action[a * n + s]; };
  for (Index a = 0; a < size; ++a) {
    if (at(a, Monoid::identity()) != a) {
      throw IdentityAxiomFails(a);
    }
  }
  for (Index a = 0; a < size; ++a) {
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        if (at(a, m.product(s, t)) != at(at(a, s), t)) {
          throw AssociativityAxiomFails(a, s, t);
        }
      }
    }
  }
  return Act::from_valid_table(m, size, {action.begin(), action.end()});
}

inline Act validate_act(Monoid const& m, std::size_t size,
                        std::vector<std::vector<Index>> const& rows) {
  if (rows.size() != size) {
    throw Error(ErrorKind::entry_out_of_range,
                "expected " + std::to_string(size) + " rows");
  }
  std::vector<Index> flat;
  for (auto const& row : rows) {
    if (row.size() != m.size()) {
      throw Error(ErrorKind::entry_out_of_range,
                  "expected " + std::to_string(m.size()) +
                      " entries per row");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_act(m, size, flat);
}

/// S acting on itself by right multiplication.
inline Act regular_act(Monoid const& m) {
  auto table = m.table();
  return Act::from_valid_table(m, m.size(), {table.begin(), table.end()});
}

/// Equivariant map between two acts over the same monoid.
class ActHom {
 public:
  /// Throws invalid_argument unless `map` is an equivariant map.
  ActHom(Act source, Act target, std::vector<Index> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {
    if (!(source_.monoid() == target_.monoid())) {
      throw Error(ErrorKind::invalid_argument,
                  "homomorphism between acts over different monoids");
    }
    if (map_.size() != source_.size()) {
      throw Error(ErrorKind::invalid_argument, "map has the wrong length");
    }
    for (auto v : map_) {
      if (v >= target_.size()) {
        throw Error(ErrorKind::entry_out_of_range, "map value out of range");
      }
    }
    for (Index a = 0; a < source_.size(); ++a) {
      for (Index s = 0; s < source_.monoid().size(); ++s) {
        if (map_[source_.act(a, s)] != target_.act(map_[a], s)) {
          throw Error(ErrorKind::invalid_argument,
                      "map is not equivariant at (a=" + std::to_string(a) +
                          ", s=" + std::to_string(s) + ")");
        }
      }
    }
  }

  // Callers guarantee equivariance.
  static ActHom from_valid_map(Act source, Act target,
                               std::vector<Index> map) {
    return ActHom(Unchecked{}, std::move(source), std::move(target),
                  std::move(map));
  }

  [[nodiscard]] Act const& source() const noexcept { return source_; }
  [[nodiscard]] Act const& target() const noexcept { return target_; }
  [[nodiscard]] std::vector<Index> const& map() const noexcept {
    return map_;
  }
  [[nodiscard]] Index operator()(Index a) const noexcept { return map_[a]; }

  [[nodiscard]] bool is_endomorphism() const noexcept {
    return source_ == target_;
  }

  [[nodiscard]] bool is_injective() const {
    std::vector<bool> hit(target_.size(), false);
    for (auto v : map_) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  [[nodiscard]] bool is_surjective() const {
    std::vector<bool> hit(target_.size(), false);
    std::size_t count = 0;
    for (auto v : map_) {
      if (!hit[v]) {
        hit[v] = true;
        ++count;
      }
    }
    return count == target_.size();
  }

  friend bool operator==(ActHom const& f, ActHom const& g) noexcept {
    return f.map_ == g.map_ && f.source_ == g.source_ &&
           f.target_ == g.target_;
  }

 private:
  struct Unchecked {};
  ActHom(Unchecked, Act source, Act target, std::vector<Index> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {}

  Act source_;
  Act target_;
  std::vector<Index> map_;
};

inline ActHom identity_hom(Act const& a) {
  std::vector<Index> map(a.size());
  std::iota(map.begin(), map.end(), Index{0});
  return ActHom::from_valid_map(a, a, std::move(map));
}

/// (g o f)(a) = g(f(a)).
inline ActHom compose(ActHom const& g, ActHom const& f) {
  if (!(f.target() == g.source())) {
    throw Error(ErrorKind::source_target_mismatch,
                "cannot compose: target of f is not the source of g");
  }
  std::vector<Index> map(f.source().size());
  for (Index a = 0; a < map.size(); ++a) {
    map[a] = g(f(a));
  }
  return ActHom::from_valid_map(f.source(), g.target(), std::move(map));
}

/// f^n for an endomorphism f and n >= 1.
inline ActHom power(ActHom const& f, std::size_t n) {
  if (!f.is_endomorphism()) {
    throw Error(ErrorKind::source_target_mismatch,
                "power is only defined for endomorphisms");
  }
  if (n == 0) {
    throw Error(ErrorKind::invalid_argument, "power needs n >= 1");
  }
  std::vector<Index> map = f.map();
  for (std::size_t i = 1; i < n; ++i) {
    for (auto& v : map) {
      v = f(v);
    }
  }
  return ActHom::from_valid_map(f.source(), f.target(), std::move(map));
}

/// A non-empty subset of an act closed under the action; members ascending.
class Subact {
 public:
  /// Throws invalid_argument unless `members` is non-empty and closed.
  Subact(Act parent, std::vector<Index> members)
      : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    if (members_.empty()) {
      throw Error(ErrorKind::invalid_argument, "subacts are non-empty");
    }
    if (members_.back() >= parent_.size()) {
      throw Error(ErrorKind::entry_out_of_range, "member out of range");
    }
    for (auto b : members_) {
      for (auto bs : parent_.row(b)) {
        if (!contains(bs)) {
          throw Error(ErrorKind::invalid_argument,
                      "subset is not closed under the action");
        }
      }
    }
  }

  [[nodiscard]] Act const& parent() const noexcept { return parent_; }
  [[nodiscard]] std::vector<Index> const& members() const noexcept {
    return members_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
  [[nodiscard]] bool contains(Index a) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), a);
  }
  [[nodiscard]] bool is_whole() const noexcept {
    return members_.size() == parent_.size();
  }

  friend bool operator==(Subact const& x, Subact const& y) noexcept {
    return x.members_ == y.members_ && x.parent_ == y.parent_;
  }

 private:
  Act parent_;
  std::vector<Index> members_;
};

inline Subact whole_act(Act const& a) {
  std::vector<Index> all(a.size());
  std::iota(all.begin(), all.end(), Index{0});
  return Subact(a, std::move(all));
}

inline Subact image_subact(ActHom const& f) {
  return Subact(f.target(), f.map());
}

/// Smallest subact containing `generators`, i.e. the union of x S.
inline Subact subact_generated(Act const& a,
                               std::span<Index const> generators) {
  if (generators.empty()) {
    throw Error(ErrorKind::invalid_argument, "generating set is empty");
  }
  std::vector<bool> in(a.size(), false);
  std::vector<Index> members;
  for (auto x : generators) {
    if (x >= a.size()) {
      throw Error(ErrorKind::entry_out_of_range, "generator out of range");
    }
    for (auto xs : a.row(x)) {
      if (!in[xs]) {
        in[xs] = true;
        members.push_back(xs);
      }
    }
  }
  return Subact(a, std::move(members));
}

/// A generating set of least cardinality, lexicographically smallest among
/// those.  Orders elements by a <= b iff a in bS; a minimum generating set
/// picks exactly one element from each maximal class of that preorder, so
/// taking the least element of each maximal class is optimal.
inline std::vector<Index> minimal_generating_set(Act const& a) {
  std::size_t const n = a.size();
  // reach[b][c]: c in bS.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Index b = 0; b < n; ++b) {
    for (auto c : a.row(b)) {
      reach[b][c] = true;
    }
  }
  std::vector<Index> generators;
  for (Index b = 0; b < n; ++b) {
    bool maximal = true;
    bool least_in_class = true;
    for (Index c = 0; c < n && maximal; ++c) {
      if (c == b || !reach[c][b]) {
        continue;
      }
      if (!reach[b][c]) {
        maximal = false;  // bS is strictly inside cS
      } else if (c < b) {
        least_in_class = false;
      }
    }
    if (maximal && least_in_class) {
      generators.push_back(b);
    }
  }
  return generators;
}

/// Every subact of `a`, as sorted member lists in lexicographic order.
inline std::vector<Subact> enumerate_subacts(Act const& a) {
  std::size_t const n = a.size();
  std::vector<std::vector<bool>> cyclic(n, std::vector<bool>(n, false));
  for (Index b = 0; b < n; ++b) {
    for (auto c : a.row(b)) {
      cyclic[b][c] = true;
    }
  }
  // Every subact is a union of cyclic subacts; close under unions.
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> frontier;
  for (Index b = 0; b < n; ++b) {
    if (seen.insert(cyclic[b]).second) {
      frontier.push_back(cyclic[b]);
    }
  }
  while (!frontier.empty()) {
    auto current = std::move(frontier.back());
    frontier.pop_back();
    for (Index b = 0; b < n; ++b) {
      if (current[b]) {
        continue;
      }
      auto next = current;
      for (Index c = 0; c < n; ++c) {
        next[c] = next[c] || cyclic[b][c];
      }
      if (seen.insert(next).second) {
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<std::vector<Index>> lists;
  for (auto const& mask : seen) {
    std::vector<Index> members;
    for (Index b = 0; b < n; ++b) {
      if (mask[b]) {
        members.push_back(b);
      }
    }
    lists.push_back(std::move(members));
  }
  std::sort(lists.begin(), lists.end());
  std::vector<Subact> out;
  out.reserve(lists.size());
  for (auto& members : lists) {
    out.emplace_back(a, std::move(members));
  }
  return out;
}

/// A subact viewed as an act in its own right, with the inclusion map.
/// Element i of the new act is the i-th smallest member.
struct EmbeddedSubact {
  Act act;
  ActHom inclusion;
};

inline EmbeddedSubact as_act(Subact const& b) {
  Act const& parent = b.parent();
  auto const& members = b.members();
  std::vector<Index> position(parent.size(), 0);
  for (Index i = 0; i < members.size(); ++i) {
    position[members[i]] = i;
  }
  std::size_t const n = parent.monoid().size();
  std::vector<Index> action(members.size() * n);
  for (Index i = 0; i < members.size(); ++i) {
    for (Index s = 0; s < n; ++s) {
      action[i * n + s] = position[parent.act(members[i], s)];
    }
  }
  Act sub = Act::from_valid_table(parent.monoid(), members.size(),
                                  std::move(action));
  ActHom inclusion = ActHom::from_valid_map(sub, parent, members);
  return {std::move(sub), std::move(inclusion)};
}

/// Whether f(B) is inside B for each of the given endomorphisms.
inline bool is_invariant_under(Subact const& b,
                               std::span<ActHom const> endomorphisms) {
  return std::all_of(endomorphisms.begin(), endomorphisms.end(),
                     [&](ActHom const& f) {
                       return std::all_of(
                           b.members().begin(), b.members().end(),
                           [&](Index x) { return b.contains(f(x)); });
                     });
}

/// Whether a partition of the carrier is compatible with the action.
inline bool is_compatible(Act const& a, Partition const& p) {
  if (p.carrier_size() != a.size()) {
    return false;
  }
  auto const reps = p.representatives();
  for (Index x = 0; x < a.size(); ++x) {
    Index const r = reps[p.label(x)];
    if (r == x) {
      continue;
    }
    for (Index s = 0; s < a.monoid().size(); ++s) {
      if (!p.related(a.act(x, s), a.act(r, s))) {
        return false;
      }
    }
  }
  return true;
}

struct Quotient {
  Act act;
  ActHom projection;
};

/// A / rho.  Class i of the quotient is the class whose smallest member is
/// the i-th smallest among class minima.
inline Quotient quotient_by_congruence(Act const& a, Partition const& rho) {
  if (!is_compatible(a, rho)) {
    throw Error(ErrorKind::not_a_congruence,
                "partition is not compatible with the action");
  }
  std::size_t const n = a.monoid().size();
  auto const reps = rho.representatives();
  std::vector<Index> action(rho.num_classes() * n);
  for (Index c = 0; c < rho.num_classes(); ++c) {
    for (Index s = 0; s < n; ++s) {
      action[c * n + s] = rho.label(a.act(reps[c], s));
    }
  }
  Act q = Act::from_valid_table(a.monoid(), rho.num_classes(),
                                std::move(action));
  ActHom pi = ActHom::from_valid_map(a, q, rho.labels());
  return {std::move(q), std::move(pi)};
}

/// A / B: B collapses to element 0, the rest keep their relative order.
inline Quotient rees_quotient(Subact const& b) {
  Act const& a = b.parent();
  std::vector<Index> label(a.size(), 0);
  Index next = 1;
  for (Index x = 0; x < a.size(); ++x) {
    if (!b.contains(x)) {
      label[x] = next++;
    }
  }
  std::size_t const n = a.monoid().size();
  std::size_t const size = next;
  std::vector<Index> action(size * n);
  for (Index s = 0; s < n; ++s) {
    action[s] = 0;
  }
  for (Index x = 0; x < a.size(); ++x) {
    if (!b.contains(x)) {
      for (Index s = 0; s < n; ++s) {
        action[label[x] * n + s] = label[a.act(x, s)];
      }
    }
  }
  Act q = Act::from_valid_table(a.monoid(), size, std::move(action));
  ActHom pi = ActHom::from_valid_map(a, q, std::move(label));
  return {std::move(q), std::move(pi)};
}

inline Quotient rees_quotient(Act const& a, Subact const& b) {
  if (!(b.parent() == a)) {
    throw Error(ErrorKind::parent_mismatch, "subact belongs to another act");
  }
  return rees_quotient(b);
}

}  // namespace hopfact

#endif  // HOPFACT_ACT_HPP_
