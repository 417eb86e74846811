#ifndef HOPFACT_MONOID_HPP_
#define HOPFACT_MONOID_HPP_

// Finite monoids given by their multiplication tables.
//
// A Monoid is immutable and cheap to copy (the table is shared).  Every
// Monoid produced by this library has its identity at index 0; tables given
// with the identity elsewhere are relabeled by the transposition (0 e).

#include <cstddef>     // for size_t
#include <memory>      // for shared_ptr, make_shared
#include <numeric>     // for iota
#include <optional>    // for optional
#include <span>        // for span
#include <string>      // for to_string
#include <utility>     // for move, swap
#include <vector>      // for vector

#include "error.hpp"
#include "relation.hpp"

namespace hopfact {

inline constexpr std::size_t default_size_cap = 4096;

class Monoid {
 public:
  /// The one-element monoid.
  Monoid() : Monoid(1, std::vector<Index>{0}) {}

  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] static constexpr Index identity() noexcept { return 0; }

  [[nodiscard]] Index product(Index s, Index t) const noexcept {
    return (*table_)[s * size_ + t];
  }

  [[nodiscard]] std::span<Index const> row(Index s) const noexcept {
    return {table_->data() + s * size_, size_};
  }

  [[nodiscard]] std::span<Index const> table() const noexcept {
    return *table_;
  }

  [[nodiscard]] bool is_commutative() const noexcept {
    for (Index s = 0; s < size_; ++s) {
      for (Index t = s + 1; t < size_; ++t) {
        if (product(s, t) != product(t, s)) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(Monoid const& x, Monoid const& y) noexcept {
    return x.table_ == y.table_ ||
           (x.size_ == y.size_ && *x.table_ == *y.table_);
  }

  // Callers guarantee the monoid axioms with identity 0; see validate_monoid.
  static Monoid from_valid_table(std::size_t size, std::vector<Index> table) {
    return Monoid(size, std::move(table));
  }

 private:
  Monoid(std::size_t size, std::vector<Index> table)
      : size_(size),
        table_(std::make_shared<std::vector<Index> const>(std::move(table))) {}

  std::size_t size_;
  std::shared_ptr<std::vector<Index> const> table_;
};

struct ValidatedMonoid {
  Monoid monoid;
  // relabel[original index] = index in `monoid`.
  std::vector<Index> relabel;
};

/// Checks the monoid axioms on a row-major table and normalizes the identity
/// to index 0.  Throws NotAssociative (with a witness in the original
/// labels), or Error with kind no_identity or entry_out_of_range.
inline ValidatedMonoid validate_monoid(std::size_t size,
                                       std::span<Index const> table) {
  if (size == 0 || table.size() != size * size) {
    throw Error(ErrorKind::entry_out_of_range,
                "monoid table must be a non-empty size x size array");
  }
  for (auto v : table) {
    if (v >= size) {
      throw Error(ErrorKind::entry_out_of_range,
                  "table entry " + std::to_string(v) + " is out of range");
    }
  }
  auto mul = [&](Index s, Index t) { return table[s * size + t]; };

  std::optional<Index> identity;
  for (Index e = 0; e < size && !identity; ++e) {
    bool ok = true;
    for (Index s = 0; s < size && ok; ++s) {
      ok = mul(e, s) == s && mul(s, e) == s;
    }
    if (ok) {
      identity = e;
    }
  }
  if (!identity) {
    throw Error(ErrorKind::no_identity, "table has no two-sided identity");
  }

  for (Index s = 0; s < size; ++s) {
    for (Index t = 0; t < size; ++t) {
      Index const st = mul(s, t);
      for (Index u = 0; u < size; ++u) {
        if (mul(st, u) != mul(s, mul(t, u))) {
          throw NotAssociative(s, t, u);
        }
      }
    }
  }

  std::vector<Index> relabel(size);
  std::iota(relabel.begin(), relabel.end(), Index{0});
  std::swap(relabel[0], relabel[*identity]);
  // relabel is an involution, so it is its own inverse.
  std::vector<Index> normalized(size * size);
  for (Index s = 0; s < size; ++s) {
    for (Index t = 0; t < size; ++t) {
      normalized[s * size + t] = relabel[mul(relabel[s], relabel[t])];
    }
  }
  return {Monoid::from_valid_table(size, std::move(normalized)),
          std::move(relabel)};
}

inline ValidatedMonoid validate_monoid(
    std::size_t size, std::vector<std::vector<Index>> const& rows) {
  std::vector<Index> flat;
  flat.reserve(size * size);
  if (rows.size() != size) {
    throw Error(ErrorKind::entry_out_of_range,
                "expected " + std::to_string(size) + " rows");
  }
  for (auto const& row : rows) {
    if (row.size() != size) {
      throw Error(ErrorKind::entry_out_of_range,
                  "expected " + std::to_string(size) + " entries per row");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_monoid(size, flat);
}

/// s^n for n >= 1.
inline Index element_power(Monoid const& m, Index s, std::size_t n) {
  if (n == 0 || s >= m.size()) {
    throw Error(ErrorKind::invalid_argument,
                "element_power needs n >= 1 and s in range");
  }
  Index result = s;
  for (std::size_t i = 1; i < n; ++i) {
    result = m.product(result, s);
  }
  return result;
}

/// Kernel of the left translation x -> s x, in partition form.
inline Partition left_translation_kernel(Monoid const& m, Index s) {
  return Partition::kernel_of(m.row(s), m.size());
}

/// r(s) = {(x, y) : s x = s y}.
inline Relation right_relation(Monoid const& m, Index s) {
  Relation r(m.size());
  auto const row = m.row(s);
  for (Index x = 0; x < m.size(); ++x) {
    for (Index y = 0; y < m.size(); ++y) {
      if (row[x] == row[y]) {
        r.insert(x, y);
      }
    }
  }
  return r;
}

// Product carriers use a mixed-radix encoding with the first factor most
// significant: (i_1, ..., i_k) -> ((i_1 n_2 + i_2) n_3 + ...) + i_k.

inline Index encode_product_index(std::span<std::size_t const> radices,
                                  std::span<Index const> components) {
  Index result = 0;
  for (std::size_t i = 0; i < radices.size(); ++i) {
    result = result * radices[i] + components[i];
  }
  return result;
}

inline std::vector<Index> decode_product_index(
    std::span<std::size_t const> radices, Index index) {
  std::vector<Index> out(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    out[i] = index % radices[i];
    index /= radices[i];
  }
  return out;
}

inline Monoid direct_product(std::span<Monoid const> factors,
                             std::size_t size_cap = default_size_cap) {
  if (factors.empty()) {
    throw Error(ErrorKind::invalid_argument,
                "direct product needs at least one factor");
  }
  std::vector<std::size_t> radices;
  std::size_t total = 1;
  for (auto const& f : factors) {
    radices.push_back(f.size());
    total *= f.size();
    if (total > size_cap) {
      throw Error(ErrorKind::size_overflow,
                  "direct product exceeds the size cap of " +
                      std::to_string(size_cap));
    }
  }
  std::vector<std::vector<Index>> decoded(total);
  for (Index i = 0; i < total; ++i) {
    decoded[i] = decode_product_index(radices, i);
  }
  std::vector<Index> table(total * total);
  std::vector<Index> component(factors.size());
  for (Index x = 0; x < total; ++x) {
    for (Index y = 0; y < total; ++y) {
      for (std::size_t k = 0; k < factors.size(); ++k) {
        component[k] = factors[k].product(decoded[x][k], decoded[y][k]);
      }
      table[x * total + y] = encode_product_index(radices, component);
    }
  }
  // Identity is the all-zero tuple, which encodes to 0.
  return Monoid::from_valid_table(total, std::move(table));
}

// Residues of Z/m under multiplication.  The identity 1 is swapped with 0 so
// that index 0 is the identity; all other residues keep their value.

inline Index zmod_index_of(std::size_t m, std::size_t residue) {
  residue %= m;
  if (m == 1) {
    return 0;
  }
  if (residue == 1) {
    return 0;
  }
  if (residue == 0) {
    return 1;
  }
  return residue;
}

inline std::size_t zmod_residue_of(std::size_t m, Index index) {
  if (m == 1) {
    return 0;
  }
  if (index == 0) {
    return 1;
  }
  if (index == 1) {
    return 0;
  }
  return index;
}

inline Monoid zmod_mult_monoid(std::size_t m,
                               std::size_t size_cap = default_size_cap) {
  if (m == 0) {
    throw Error(ErrorKind::invalid_argument, "modulus must be at least 1");
  }
  if (m > size_cap) {
    throw Error(ErrorKind::size_overflow, "modulus exceeds the size cap");
  }
  std::vector<Index> table(m * m);
  for (Index x = 0; x < m; ++x) {
    for (Index y = 0; y < m; ++y) {
      auto const prod = (zmod_residue_of(m, x) * zmod_residue_of(m, y)) % m;
      table[x * m + y] = zmod_index_of(m, prod);
    }
  }
  return Monoid::from_valid_table(m, std::move(table));
}

inline bool is_prime(std::size_t p) noexcept {
  if (p < 2) {
    return false;
  }
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

/// The finite truncation prod_{n=1..N} (Z/p^n, *) together with the element
/// whose n-th coordinate is p mod p^n.
struct TruncatedProduct {
  Monoid monoid;
  Index x = 0;
  std::vector<std::size_t> moduli;  // p, p^2, ..., p^N

  [[nodiscard]] Index encode(std::span<std::size_t const> residues) const {
    std::vector<Index> components(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
      components[k] = zmod_index_of(moduli[k], residues[k]);
    }
    return encode_product_index(moduli, components);
  }

  [[nodiscard]] std::vector<std::size_t> decode(Index index) const {
    auto components = decode_product_index(moduli, index);
    std::vector<std::size_t> residues(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k) {
      residues[k] = zmod_residue_of(moduli[k], components[k]);
    }
    return residues;
  }
};

inline TruncatedProduct truncated_example36(
    std::size_t p, std::size_t depth, std::size_t size_cap = default_size_cap) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::not_prime, std::to_string(p) + " is not prime");
  }
  if (depth == 0) {
    throw Error(ErrorKind::invalid_argument, "depth must be at least 1");
  }
  TruncatedProduct result;
  std::vector<Monoid> factors;
  std::size_t modulus = 1;
  std::size_t total = 1;
  for (std::size_t n = 1; n <= depth; ++n) {
    modulus *= p;
    total *= modulus;
    if (total > size_cap) {
      throw Error(ErrorKind::size_overflow,
                  "truncated product exceeds the size cap of " +
                      std::to_string(size_cap));
    }
    result.moduli.push_back(modulus);
    factors.push_back(zmod_mult_monoid(modulus, size_cap));
  }
  result.monoid = direct_product(factors, size_cap);
  std::vector<std::size_t> residues(depth, p);
  result.x = result.encode(residues);
  return result;
}

}  // namespace hopfact

#endif  // HOPFACT_MONOID_HPP_
