#include "surf/grid_svg.hpp"

#include <fstream>
#include <sstream>

namespace surf {
namespace {

constexpr double kCell = 40.0;
constexpr double kMargin = 50.0;

struct Frame {
  std::size_t m, n;
  double width() const { return 2 * kMargin + kCell * static_cast<double>(m - 1); }
  double height() const { return 2 * kMargin + kCell * static_cast<double>(n - 1); }
  double x(double k) const { return kMargin + (k - 1) * kCell; }
  double y(double l) const { return height() - (kMargin + (l - 1) * kCell); }
};

const char* color_for(int index) {
  if (index > 0) return "#c62828";
  if (index < 0) return "#1565c0";
  return "#555555";
}

void line(std::ostream& os, const Frame& f, double k0, double l0, double k1, double l1,
          const char* color) {
  os << "  <line x1=\"" << f.x(k0) << "\" y1=\"" << f.y(l0) << "\" x2=\"" << f.x(k1)
     << "\" y2=\"" << f.y(l1) << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
}

void dot(std::ostream& os, const Frame& f, double k, double l, double r, const char* color) {
  os << "  <circle cx=\"" << f.x(k) << "\" cy=\"" << f.y(l) << "\" r=\"" << r << "\" fill=\""
     << color << "\"/>\n";
}

}  // namespace

std::string render_grid_svg(const std::vector<IndexedComponent>& components, std::size_t m,
                            std::size_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("grid dimensions must be positive");
  const Frame f{m, n};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width() << "\" height=\""
     << f.height() << "\" viewBox=\"0 0 " << f.width() << ' ' << f.height() << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t l = 1; l <= n; ++l)
      dot(os, f, static_cast<double>(k), static_cast<double>(l), 2.5, "#bbbbbb");

  for (const auto& [data, index] : components) {
    const char* color = color_for(index);
    os << " <g class=\"component\" data-kind=\"" << static_cast<int>(data.kind) << "\" data-q=\""
       << signed_run(data) << "\">\n";
    const auto pairs = covered_pairs(data, m, n);
    if (data.kind == ComponentKind::Isolated) {
      dot(os, f, pairs[0].first, pairs[0].second, 6, color);
    } else {
      const bool parallel = data.kind == ComponentKind::ParallelRun ||
                            data.kind == ComponentKind::InfiniteParallel;
      const double dl = parallel ? 1.0 : -1.0;
      const std::size_t steps = is_infinite(data.kind) ? pairs.size() : pairs.size() - 1;
      for (std::size_t t = 0; t < steps; ++t) {
        const auto [k0, l0] = pairs[t];
        const auto [k1, l1] = pairs[(t + 1) % pairs.size()];
        if (k1 == k0 + 1 && l1 == l0 + dl) {
          line(os, f, k0, l0, k1, l1, color);
        } else {
          // The step wraps around the torus grid; draw two half stubs.
          line(os, f, k0, l0, k0 + 0.5, l0 + 0.5 * dl, color);
          line(os, f, k1 - 0.5, l1 - 0.5 * dl, k1, l1, color);
        }
      }
      for (const auto& [pk, pl] : pairs) dot(os, f, pk, pl, 4, color);
    }
    if (index != 0) {
      const auto [lk, ll] = pairs[pairs.size() / 2];
      os << "  <text x=\"" << f.x(lk) + 8 << "\" y=\"" << f.y(ll) - 8
         << "\" font-size=\"16\" fill=\"" << color << "\">" << (index > 0 ? "+1" : "-1")
         << "</text>\n";
    }
    os << " </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void emit_grid_svg(const std::vector<IndexedComponent>& components, std::size_t m, std::size_t n,
                   const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << render_grid_svg(components, m, n);
  if (!out.good()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace surf
