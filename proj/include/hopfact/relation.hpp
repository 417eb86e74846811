#ifndef HOPFACT_RELATION_HPP_
#define HOPFACT_RELATION_HPP_

// Binary relations and partitions on a finite carrier {0, ..., n - 1}.
//
// Relation is a bit-packed n x n matrix with set-of-pairs semantics and is
// used for closure inputs and for the chain-style oracle checks.  Partition
// is the normal form for equivalence relations: a restricted growth string,
// where label(a) is the ordinal of a's class when classes are ordered by
// their smallest member.  Two partitions are equal iff their label vectors
// are equal.

#include <algorithm>  // for max, fill
#include <bit>        // for popcount
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <numeric>    // for iota
#include <span>       // for span
#include <utility>    // for pair
#include <vector>     // for vector

#include "error.hpp"

namespace hopfact {

class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n)
      : n_(n), words_per_row_((n + 63) / 64), bits_(n * words_per_row_, 0) {}

  static Relation diagonal(std::size_t n) {
    Relation r(n);
    for (Index a = 0; a < n; ++a) {
      r.insert(a, a);
    }
    return r;
  }

  static Relation universal(std::size_t n) {
    Relation r(n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        r.insert(a, b);
      }
    }
    return r;
  }

  [[nodiscard]] std::size_t carrier_size() const noexcept { return n_; }

  [[nodiscard]] bool contains(Index a, Index b) const noexcept {
    return (bits_[a * words_per_row_ + b / 64] >> (b % 64)) & 1U;
  }

  void insert(Index a, Index b) noexcept {
    bits_[a * words_per_row_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }

  void erase(Index a, Index b) noexcept {
    bits_[a * words_per_row_ + b / 64] &= ~(std::uint64_t{1} << (b % 64));
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : bits_) {
      total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
  }

  [[nodiscard]] std::vector<std::pair<Index, Index>> pairs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        if (contains(a, b)) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }

  Relation& operator|=(Relation const& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] |= other.bits_[i];
    }
    return *this;
  }

  Relation& operator&=(Relation const& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] &= other.bits_[i];
    }
    return *this;
  }

  friend Relation operator|(Relation lhs, Relation const& rhs) {
    return lhs |= rhs;
  }
  friend Relation operator&(Relation lhs, Relation const& rhs) {
    return lhs &= rhs;
  }

  [[nodiscard]] bool is_subset_of(Relation const& other) const noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if ((bits_[i] & ~other.bits_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] bool is_reflexive() const noexcept {
    for (Index a = 0; a < n_; ++a) {
      if (!contains(a, a)) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] bool is_symmetric() const noexcept {
    for (Index a = 0; a < n_; ++a) {
      for (Index b = a + 1; b < n_; ++b) {
        if (contains(a, b) != contains(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  // Row-wise: for every (a, b), row(b) must be a subset of row(a).
  [[nodiscard]] bool is_transitive() const noexcept {
    for (Index a = 0; a < n_; ++a) {
      for (Index b = 0; b < n_; ++b) {
        if (!contains(a, b)) {
          continue;
        }
        for (std::size_t w = 0; w < words_per_row_; ++w) {
          if ((bits_[b * words_per_row_ + w] &
               ~bits_[a * words_per_row_ + w]) != 0) {
            return false;
          }
        }
      }
    }
    return true;
  }

  [[nodiscard]] bool is_equivalence() const noexcept {
    return is_reflexive() && is_symmetric() && is_transitive();
  }

  friend bool operator==(Relation const&, Relation const&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Union-find over {0, ..., n - 1} with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns false if x and y were already in the same set.
  bool unite(Index x, Index y) noexcept {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (size_[x] < size_[y]) {
      std::swap(x, y);
    }
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  [[nodiscard]] std::size_t element_count() const noexcept {
    return parent_.size();
  }

 private:
  std::vector<Index> parent_;
  std::vector<std::size_t> size_;
};

class Partition {
 public:
  Partition() = default;

  /// Kernel of a map given as a table: a ~ b iff map[a] == map[b].
  static Partition kernel_of(std::span<Index const> map, std::size_t codomain) {
    Partition p;
    p.labels_.resize(map.size());
    std::vector<Index> first(codomain, static_cast<Index>(-1));
    Index next = 0;
    for (Index a = 0; a < map.size(); ++a) {
      Index& slot = first[map[a]];
      if (slot == static_cast<Index>(-1)) {
        slot = next++;
      }
      p.labels_[a] = slot;
    }
    p.num_classes_ = next;
    return p;
  }

  static Partition from_disjoint_sets(DisjointSets& sets) {
    std::vector<Index> roots(sets.element_count());
    for (Index a = 0; a < roots.size(); ++a) {
      roots[a] = sets.find(a);
    }
    return kernel_of(roots, roots.size());
  }

  /// Requires r to be an equivalence relation.
  static Partition from_equivalence(Relation const& r) {
    std::size_t const n = r.carrier_size();
    std::vector<Index> rep(n);
    for (Index a = 0; a < n; ++a) {
      Index b = 0;
      while (!r.contains(a, b)) {
        ++b;
      }
      rep[a] = b;
    }
    return kernel_of(rep, n);
  }

  /// Accepts any label vector; canonicalizes it.
  static Partition from_labels(std::span<Index const> labels) {
    std::size_t codomain = 0;
    for (auto l : labels) {
      codomain = std::max(codomain, l + 1);
    }
    return kernel_of(labels, codomain);
  }

  static Partition discrete(std::size_t n) {
    Partition p;
    p.labels_.resize(n);
    std::iota(p.labels_.begin(), p.labels_.end(), Index{0});
    p.num_classes_ = n;
    return p;
  }

  static Partition single_class(std::size_t n) {
    Partition p;
    p.labels_.assign(n, 0);
    p.num_classes_ = n == 0 ? 0 : 1;
    return p;
  }

  /// Partition with one distinguished block; everything else a singleton.
  static Partition with_block(std::size_t n, std::span<Index const> block) {
    std::vector<Index> keys(n);
    std::iota(keys.begin(), keys.end(), Index{0});
    if (!block.empty()) {
      Index const rep = *std::min_element(block.begin(), block.end());
      for (auto b : block) {
        keys[b] = rep;
      }
    }
    return kernel_of(keys, n);
  }

  [[nodiscard]] std::size_t carrier_size() const noexcept {
    return labels_.size();
  }
  [[nodiscard]] std::size_t num_classes() const noexcept {
    return num_classes_;
  }
  [[nodiscard]] Index label(Index a) const noexcept { return labels_[a]; }
  [[nodiscard]] std::vector<Index> const& labels() const noexcept {
    return labels_;
  }
  [[nodiscard]] bool related(Index a, Index b) const noexcept {
    return labels_[a] == labels_[b];
  }

  [[nodiscard]] bool is_discrete() const noexcept {
    return num_classes_ == labels_.size();
  }
  [[nodiscard]] bool is_single_class() const noexcept {
    return num_classes_ <= 1;
  }

  /// Classes in canonical order, members ascending.
  [[nodiscard]] std::vector<std::vector<Index>> classes() const {
    std::vector<std::vector<Index>> out(num_classes_);
    for (Index a = 0; a < labels_.size(); ++a) {
      out[labels_[a]].push_back(a);
    }
    return out;
  }

  /// Smallest member of each class, indexed by class label.
  [[nodiscard]] std::vector<Index> representatives() const {
    std::vector<Index> out(num_classes_, static_cast<Index>(-1));
    for (Index a = labels_.size(); a-- > 0;) {
      out[labels_[a]] = a;
    }
    return out;
  }

  /// Containment of the corresponding equivalence relations.
  [[nodiscard]] bool refines(Partition const& coarser) const {
    std::vector<Index> image(num_classes_, static_cast<Index>(-1));
    for (Index a = 0; a < labels_.size(); ++a) {
      Index& slot = image[labels_[a]];
      if (slot == static_cast<Index>(-1)) {
        slot = coarser.labels_[a];
      } else if (slot != coarser.labels_[a]) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] Relation to_relation() const {
    Relation r(labels_.size());
    for (Index a = 0; a < labels_.size(); ++a) {
      for (Index b = 0; b < labels_.size(); ++b) {
        if (labels_[a] == labels_[b]) {
          r.insert(a, b);
        }
      }
    }
    return r;
  }

  friend bool operator==(Partition const& x, Partition const& y) noexcept {
    return x.labels_ == y.labels_;
  }
  friend auto operator<=>(Partition const& x, Partition const& y) noexcept {
    return x.labels_ <=> y.labels_;
  }

 private:
  std::vector<Index> labels_;
  std::size_t num_classes_ = 0;
};

/// Classwise intersection of two partitions of the same carrier.
inline Partition intersect(Partition const& x, Partition const& y) {
  std::vector<Index> keys(x.carrier_size());
  std::size_t const width = y.num_classes();
  for (Index a = 0; a < keys.size(); ++a) {
    keys[a] = x.label(a) * width + y.label(a);
  }
  return Partition::kernel_of(keys, x.num_classes() * width);
}

}  // namespace hopfact

#endif  // HOPFACT_RELATION_HPP_
