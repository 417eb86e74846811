#ifndef HOPFACT_ENUMERATE_HPP_
#define HOPFACT_ENUMERATE_HPP_

// Exhaustive enumeration of small monoids and acts up to isomorphism, and a
// seeded generator for larger random acts.
//
// Isomorphism classes are represented by canonical forms: the
// lexicographically least table over all carrier relabelings (for monoids,
// relabelings that fix the identity at 0).

#include <algorithm>  // for next_permutation, min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <numeric>    // for iota
#include <random>     // for mt19937_64
#include <set>        // for set
#include <utility>    // for move
#include <vector>     // for vector

#include "act.hpp"
#include "congruence.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "relation.hpp"

namespace hopfact {

inline constexpr std::size_t max_enumerated_monoid_size = 4;
inline constexpr std::size_t max_enumerated_act_size = 6;

/// Least relabeled table over permutations fixing 0.
inline std::vector<Index> canonical_monoid_table(Monoid const& m) {
  std::size_t const n = m.size();
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> best;
  std::vector<Index> candidate(n * n);
  do {
    // perm maps old labels to new labels.
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        candidate[perm[s] * n + perm[t]] = perm[m.product(s, t)];
      }
    }
    if (best.empty() || candidate < best) {
      best = candidate;
    }
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

/// Least relabeled action table over all carrier permutations.
inline std::vector<Index> canonical_act_table(Act const& a) {
  std::size_t const m = a.size();
  std::size_t const n = a.monoid().size();
  std::vector<Index> perm(m);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> best;
  std::vector<Index> candidate(m * n);
  do {
    for (Index x = 0; x < m; ++x) {
      for (Index s = 0; s < n; ++s) {
        candidate[perm[x] * n + s] = perm[a.act(x, s)];
      }
    }
    if (best.empty() || candidate < best) {
      best = candidate;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Act canonical_act(Act const& a) {
  return Act::from_valid_table(a.monoid(), a.size(), canonical_act_table(a));
}

/// All monoids of exactly n elements up to isomorphism, in canonical-table
/// order.
inline std::vector<Monoid> enumerate_monoids(std::size_t n) {
  if (n == 0 || n > max_enumerated_monoid_size) {
    throw Error(ErrorKind::size_too_large,
                "monoid enumeration supports sizes 1.." +
                    std::to_string(max_enumerated_monoid_size));
  }
  // Free entries are (s, t) with s, t >= 1, filled in row-major order; a
  // triple is checked as soon as every product it needs is known.
  std::vector<Index> table(n * n, 0);
  for (Index s = 0; s < n; ++s) {
    table[s] = s;
    table[s * n] = s;
  }
  std::vector<std::pair<Index, Index>> cells;
  for (Index s = 1; s < n; ++s) {
    for (Index t = 1; t < n; ++t) {
      cells.emplace_back(s, t);
    }
  }
  std::vector<bool> known(n * n, false);
  for (Index s = 0; s < n; ++s) {
    known[s] = known[s * n] = true;
  }
  auto consistent = [&] {
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        if (!known[s * n + t]) {
          continue;
        }
        Index const st = table[s * n + t];
        for (Index u = 0; u < n; ++u) {
          if (!known[st * n + u] || !known[t * n + u]) {
            continue;
          }
          Index const tu = table[t * n + u];
          if (!known[s * n + tu]) {
            continue;
          }
          if (table[st * n + u] != table[s * n + tu]) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::set<std::vector<Index>> canonical;
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == cells.size()) {
      auto m = Monoid::from_valid_table(n, table);
      canonical.insert(canonical_monoid_table(m));
      return;
    }
    auto [s, t] = cells[depth];
    known[s * n + t] = true;
    for (Index v = 0; v < n; ++v) {
      table[s * n + t] = v;
      if (consistent()) {
        self(self, depth + 1);
      }
    }
    known[s * n + t] = false;
  };
  recurse(recurse, 0);

  std::vector<Monoid> out;
  for (auto const& t : canonical) {
    out.push_back(Monoid::from_valid_table(n, t));
  }
  return out;
}

/// All acts of exactly m elements over `monoid` up to act isomorphism, in
/// canonical-table order.
inline std::vector<Act> enumerate_acts(Monoid const& monoid, std::size_t m) {
  if (m == 0 || m > max_enumerated_act_size) {
    throw Error(ErrorKind::size_too_large,
                "act enumeration supports sizes 1.." +
                    std::to_string(max_enumerated_act_size));
  }
  std::size_t const n = monoid.size();
  // transformation[s] is the column of s: x -> x s.
  std::vector<std::vector<Index>> transformation(
      n, std::vector<Index>(m, 0));
  std::iota(transformation[0].begin(), transformation[0].end(), Index{0});

  // x (s t) = (x s) t for every pair with s, t, st all assigned (< depth).
  auto consistent = [&](Index assigned) {
    for (Index s = 0; s <= assigned; ++s) {
      for (Index t = 0; t <= assigned; ++t) {
        Index const st = monoid.product(s, t);
        if (st > assigned) {
          continue;
        }
        for (Index x = 0; x < m; ++x) {
          if (transformation[st][x] !=
              transformation[t][transformation[s][x]]) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::set<std::vector<Index>> canonical;
  std::vector<Index> action(m * n);
  auto recurse = [&](auto&& self, Index s) -> void {
    if (s == n) {
      for (Index x = 0; x < m; ++x) {
        for (Index u = 0; u < n; ++u) {
          action[x * n + u] = transformation[u][x];
        }
      }
      canonical.insert(
          canonical_act_table(Act::from_valid_table(monoid, m, action)));
      return;
    }
    auto& column = transformation[s];
    std::fill(column.begin(), column.end(), Index{0});
    while (true) {
      if (consistent(s)) {
        self(self, s + 1);
      }
      // Next transformation in odometer order.
      std::size_t pos = 0;
      while (pos < m && ++column[pos] == m) {
        column[pos++] = 0;
      }
      if (pos == m) {
        break;
      }
    }
  };
  recurse(recurse, 1);

  std::vector<Act> out;
  for (auto const& t : canonical) {
    out.push_back(Act::from_valid_table(monoid, m, t));
  }
  return out;
}

/// The free act on k generators: carrier {(i, s)} encoded as i |S| + s,
/// with (i, s) t = (i, s t).
inline Act free_act(Monoid const& monoid, std::size_t generators) {
  std::size_t const n = monoid.size();
  std::vector<Index> action(generators * n * n);
  for (Index i = 0; i < generators; ++i) {
    for (Index s = 0; s < n; ++s) {
      for (Index t = 0; t < n; ++t) {
        action[(i * n + s) * n + t] = i * n + monoid.product(s, t);
      }
    }
  }
  return Act::from_valid_table(monoid, generators * n, std::move(action));
}

/// A random act with min_size..max_size elements, drawn as a quotient of a
/// free act by the congruence generated by random pairs.  Candidates of the
/// wrong size are rejected.  Uses raw engine output so the stream is the
/// same on every standard library.
inline Act random_act(Monoid const& monoid, std::mt19937_64& rng,
                      std::size_t min_size, std::size_t max_size,
                      std::size_t max_attempts = 10'000) {
  auto below = [&](std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
  };
  std::size_t const n = monoid.size();
  std::size_t const max_generators = std::max<std::size_t>(1, max_size);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    std::size_t const k = 1 + below(max_generators);
    if (k * n < min_size) {
      continue;
    }
    Act const free = free_act(monoid, k);
    Relation pairs(free.size());
    std::size_t const count = below(free.size() + 1);
    for (std::size_t i = 0; i < count; ++i) {
      pairs.insert(below(free.size()), below(free.size()));
    }
    auto const rho = congruence_closure(free, pairs);
    if (rho.num_classes() < min_size || rho.num_classes() > max_size) {
      continue;
    }
    return canonical_act(quotient_by_congruence(rho).act);
  }
  throw Error(ErrorKind::search_budget_exceeded,
              "could not draw a random act of the requested size");
}

}  // namespace hopfact

#endif  // HOPFACT_ENUMERATE_HPP_
