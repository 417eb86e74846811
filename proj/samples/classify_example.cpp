// Builds a small act in code, classifies it and prints the JSON report.

#include <iostream>

#include "hopfact/hopfact.hpp"

int main() {
  using namespace hopfact;

  // Z/4 under multiplication, acting on itself.
  Monoid const z4 = zmod_mult_monoid(4);
  Act const regular = regular_act(z4);

  auto const endos = endomorphisms(regular);
  auto const result = classify(regular);
  std::cout << render_classification(to_json("Z4 regular", result, endos));

  // The kernel chain of left multiplication by 2 stabilizes at n = 2.
  for (auto const& f : endos) {
    if (f(zmod_index_of(4, 1)) == zmod_index_of(4, 2)) {
      std::cout << "\nk-index of lambda_2: " << k_chain_index(f).index << "\n";
    }
  }
  return 0;
}
