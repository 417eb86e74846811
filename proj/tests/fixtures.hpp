#ifndef HOPFACT_TESTS_FIXTURES_HPP_
#define HOPFACT_TESTS_FIXTURES_HPP_

// Named small objects shared by the test files.

#include <set>
#include <vector>

#include "hopfact/hopfact.hpp"

namespace fixtures {

using hopfact::Act;
using hopfact::Index;
using hopfact::Monoid;

// M2 = {1, e}, e e = e.
inline Monoid m2() { return Monoid::from_valid_table(2, {0, 1, 1, 1}); }

// A2 = {x, y} over M2 with x e = y, y e = y.
inline constexpr Index x = 0;
inline constexpr Index y = 1;
inline Act a2() {
  return hopfact::validate_act(m2(), 2, std::vector<Index>{0, 1, 1, 1});
}

inline Act point(Monoid const& m) {
  return Act::from_valid_table(m, 1, std::vector<Index>(m.size(), 0));
}

inline Monoid z4() { return hopfact::zmod_mult_monoid(4); }
inline Act z4_regular() { return hopfact::regular_act(z4()); }

// Index of residue r in Z/4.
inline Index r4(std::size_t r) { return hopfact::zmod_index_of(4, r); }

inline std::vector<Index> r4s(std::initializer_list<std::size_t> residues) {
  std::vector<Index> out;
  for (auto r : residues) {
    out.push_back(r4(r));
  }
  return out;
}

// Classes of a partition on Z/4 indices, rewritten as residue sets.
inline std::set<std::set<std::size_t>> residue_classes(
    hopfact::Partition const& p) {
  std::set<std::set<std::size_t>> out;
  for (auto const& cls : p.classes()) {
    std::set<std::size_t> residues;
    for (auto i : cls) {
      residues.insert(hopfact::zmod_residue_of(4, i));
    }
    out.insert(residues);
  }
  return out;
}

// The left translation x -> a x on regular Z/4, by residue a.
inline hopfact::ActHom lambda4(std::size_t a) {
  auto const reg = z4_regular();
  std::vector<Index> map(4);
  for (Index i = 0; i < 4; ++i) {
    map[i] = reg.monoid().product(r4(a), i);
  }
  return hopfact::ActHom(reg, reg, map);
}

// The trivial monoid acting trivially on n points.
inline Act trivial_act(std::size_t n) {
  std::vector<Index> table(n);
  for (Index i = 0; i < n; ++i) {
    table[i] = i;
  }
  return Act::from_valid_table(Monoid(), n, table);
}

// All monoids of size <= max_size.
inline std::vector<Monoid> monoids_up_to(std::size_t max_size) {
  std::vector<Monoid> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (auto& m : hopfact::enumerate_monoids(n)) {
      out.push_back(m);
    }
  }
  return out;
}

// All acts of size <= max_act over monoids of size <= max_monoid.
inline std::vector<Act> acts_up_to(std::size_t max_monoid,
                                   std::size_t max_act) {
  std::vector<Act> out;
  for (auto const& m : monoids_up_to(max_monoid)) {
    for (std::size_t k = 1; k <= max_act; ++k) {
      for (auto& a : hopfact::enumerate_acts(m, k)) {
        out.push_back(a);
      }
    }
  }
  return out;
}

}  // namespace fixtures

#endif  // HOPFACT_TESTS_FIXTURES_HPP_
