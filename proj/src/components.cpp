#include "surf/components.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace surf {
namespace {

int norm1(long long x, std::size_t mod) {
  const long long m = static_cast<long long>(mod);
  long long r = (x - 1) % m;
  if (r < 0) r += m;
  return static_cast<int>(r + 1);
}

struct Grid {
  std::size_t m, n;
  std::vector<char> covered;
  Grid(std::size_t m_, std::size_t n_) : m(m_), n(n_), covered(m_ * n_, 0) {}
  char& at(int k, int l) {
    return covered[static_cast<std::size_t>(k - 1) * n + static_cast<std::size_t>(l - 1)];
  }
};

}  // namespace

long long signed_run(const ComponentData& c) noexcept {
  switch (c.kind) {
    case ComponentKind::Isolated: return 0;
    case ComponentKind::ParallelRun: return c.run;
    case ComponentKind::AntiparallelRun: return -static_cast<long long>(c.run);
    case ComponentKind::InfiniteParallel: return std::numeric_limits<long long>::max() / 2;
    case ComponentKind::InfiniteAntiparallel: return std::numeric_limits<long long>::min() / 2;
  }
  return 0;
}

std::vector<std::pair<int, int>> covered_pairs(const ComponentData& c, std::size_t m,
                                               std::size_t n) {
  std::vector<std::pair<int, int>> out;
  const long long L = std::lcm(static_cast<long long>(m), static_cast<long long>(n));
  switch (c.kind) {
    case ComponentKind::Isolated:
      out.emplace_back(c.anchor_k, c.anchor_l);
      break;
    case ComponentKind::ParallelRun:
      for (int r = 0; r <= c.run; ++r)
        out.emplace_back(norm1(c.anchor_k + r, m), norm1(c.anchor_l + r, n));
      break;
    case ComponentKind::AntiparallelRun:
      for (int r = 0; r <= c.run; ++r)
        out.emplace_back(norm1(c.anchor_k + r, m), norm1(c.anchor_l + c.run - r, n));
      break;
    case ComponentKind::InfiniteParallel:
      for (long long t = 0; t < L; ++t)
        out.emplace_back(norm1(c.anchor_k + t, m), norm1(c.anchor_l + t, n));
      break;
    case ComponentKind::InfiniteAntiparallel:
      for (long long t = 0; t < L; ++t)
        out.emplace_back(norm1(c.anchor_k + t, m), norm1(c.anchor_l - t, n));
      break;
  }
  return out;
}

std::size_t covered_points(const ComponentData& c, std::size_t m, std::size_t n) {
  if (is_infinite(c.kind))
    return static_cast<std::size_t>(std::lcm(static_cast<long long>(m), static_cast<long long>(n)));
  return static_cast<std::size_t>(c.run) + 1;
}

std::vector<ComponentData> enumerate_components(const CyclicWord& mu, const CyclicWord& nu) {
  if (mu.empty() || nu.empty())
    throw std::invalid_argument("component enumeration needs nonempty words");
  if (!(mu.genus() == nu.genus()))
    throw std::invalid_argument("genus mismatch in component enumeration");

  const std::size_t m = mu.size();
  const std::size_t n = nu.size();
  const long long L = std::lcm(static_cast<long long>(m), static_cast<long long>(n));
  const auto u = [&](long long k) { return mu.cyclic_letter(k); };
  const auto v = [&](long long l) { return nu.cyclic_letter(l); };

  Grid grid(m, n);
  std::vector<ComponentData> comps;

  for (int k = 1; k <= static_cast<int>(m); ++k) {
    for (int l = 1; l <= static_cast<int>(n); ++l) {
      if (grid.at(k, l)) continue;

      const bool fwd_par = u(k + 1) == v(l + 1);
      const bool bwd_par = u(k) == v(l);
      const bool fwd_anti = u(k + 1) == v(l).inverse();
      const bool bwd_anti = u(k) == v(l + 1).inverse();
      if ((fwd_par || bwd_par) && (fwd_anti || bwd_anti))
        throw std::logic_error("grid point joins both run directions; input not cyclically reduced?");

      ComponentData comp;
      if (fwd_par || bwd_par) {
        // Walk back to the start of the diagonal run.
        long long a = k, b = l, back = 0;
        while (back < L && u(a) == v(b)) {
          --a;
          --b;
          ++back;
        }
        if (back == L) {
          comp = ComponentData{k, l, ComponentKind::InfiniteParallel, 0};
        } else {
          int q = 0;
          while (q < L && u(a + q + 1) == v(b + q + 1)) ++q;
          comp = ComponentData{norm1(a, m), norm1(b, n), ComponentKind::ParallelRun, q};
        }
      } else if (fwd_anti || bwd_anti) {
        // Walk up-left to the head of the antidiagonal run.
        long long a = k, b = l, back = 0;
        while (back < L && u(a) == v(b + 1).inverse()) {
          --a;
          ++b;
          ++back;
        }
        if (back == L) {
          comp = ComponentData{k, l, ComponentKind::InfiniteAntiparallel, 0};
        } else {
          int q = 0;
          while (q < L && u(a + q + 1) == v(b - q).inverse()) ++q;
          comp = ComponentData{norm1(a, m), norm1(b - q, n), ComponentKind::AntiparallelRun, q};
        }
      } else {
        comp = ComponentData{k, l, ComponentKind::Isolated, 0};
      }

      for (auto [ck, cl] : covered_pairs(comp, m, n)) {
        if (grid.at(ck, cl))
          throw std::logic_error("component enumeration covered a grid point twice");
        grid.at(ck, cl) = true;
      }
      comps.push_back(comp);
    }
  }

  std::sort(comps.begin(), comps.end(), [](const ComponentData& x, const ComponentData& y) {
    if (x.anchor_k != y.anchor_k) return x.anchor_k < y.anchor_k;
    if (x.anchor_l != y.anchor_l) return x.anchor_l < y.anchor_l;
    return signed_run(x) < signed_run(y);
  });
  return comps;
}

std::vector<ComponentData> self_components(const CyclicWord& mu) {
  return enumerate_components(mu, mu);
}

}  // namespace surf
