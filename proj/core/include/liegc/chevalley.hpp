#pragma once

#include <map>
#include <vector>

#include "liegc/root_system.hpp"

namespace liegc {

/// Integer structure constants of the Chevalley basis {h_i} ∪ {e_a}:
///   [e_a, e_b] = N(a,b) e_{a+b},   [e_a, e_{-a}] = h_a (the coroot),
///   [h, e_b] = b(h) e_b.
/// Signs fixed by N(a,b) = +(p+1) on extraspecial pairs; everything else
/// follows from antisymmetry, N(-a,-b) = -N(a,b) and the Jacobi rotation
/// rule for a+b+c = 0.
struct ChevalleyData {
  const RootSystem* rs = nullptr;
  std::map<std::pair<int, int>, Rational> table;     // all composable ordered pairs
  std::vector<std::vector<Rational>> coroot_coords;  // h_a over the simple coroots

  Rational N(int a, int b) const;
  // p of the a-string through b: max{k >= 0 : b - k a is a root}
  int string_p(int a, int b) const;

  static ChevalleyData build(const RootSystem& rs);
};

}  // namespace liegc
