#pragma once

#include <cstddef>
#include <vector>

#include "surf/cyclic.hpp"

namespace surf {

// For piecewise-geodesic loops spelled by cyclically reduced words
// mu = u_1..u_m and nu = v_1..v_n, the pairs of parameter values where the
// two loops agree decompose into components over the m x n grid of base
// pairs (k, l). Two neighbouring base pairs are joined exactly when the
// letters traversed agree:
//   parallel      (k, l) -- (k+1, l+1)  iff  u_{k+1} =  v_{l+1}
//   antiparallel  (k, l) -- (k+1, l-1)  iff  u_{k+1} =  v_l^{-1}
// with all subscripts cyclic. Cyclic reducedness forbids a grid point from
// joining both a parallel and an antiparallel edge, so every component is an
// isolated point, a finite diagonal run, or a full wrap-around diagonal.

enum class ComponentKind {
  Isolated,
  ParallelRun,
  AntiparallelRun,
  InfiniteParallel,
  InfiniteAntiparallel,
};

/// One component of the common-value-pair set.
///
/// Finite runs use the anchor convention in which the letter matches sit at
/// offsets r = 1..q from the anchor (k, l): a parallel run (k, l, q) has
/// u_{k+r} = v_{l+r} and covers base pairs (k+r, l+r) for r = 0..q; an
/// antiparallel run (k, l, -q) has u_{k+r} = v_{l+q+1-r}^{-1} and covers
/// (k+r, l+q-r) for r = 0..q. Isolated components are the single pair
/// (k, l). Infinite components cover the whole diagonal orbit through
/// (k, l); their anchor is the row-major least covered pair.
struct ComponentData {
  int anchor_k = 1;
  int anchor_l = 1;
  ComponentKind kind = ComponentKind::Isolated;
  int run = 0;  // q for finite runs, otherwise 0

  friend bool operator==(const ComponentData&, const ComponentData&) noexcept = default;
};

inline bool is_infinite(ComponentKind k) noexcept {
  return k == ComponentKind::InfiniteParallel || k == ComponentKind::InfiniteAntiparallel;
}

/// Signed run value used for ordering and display: +q for parallel runs,
/// -q for antiparallel runs, 0 for isolated points; infinite components sit
/// at the extremes.
long long signed_run(const ComponentData& c) noexcept;

/// Number of base pairs the component covers.
std::size_t covered_points(const ComponentData& c, std::size_t m, std::size_t n);

/// The base pairs covered by the component, each reduced into [1,m] x [1,n].
std::vector<std::pair<int, int>> covered_pairs(const ComponentData& c, std::size_t m,
                                               std::size_t n);

/// Partitions the m x n grid into components. Throws if either word is
/// empty or the genera differ. The result is sorted by (k, l, signed run).
std::vector<ComponentData> enumerate_components(const CyclicWord& mu, const CyclicWord& nu);

/// Components of the pair (mu, mu) over the full ordered m x m grid; the
/// diagonal always contributes a wrap-around parallel component.
std::vector<ComponentData> self_components(const CyclicWord& mu);

}  // namespace surf
