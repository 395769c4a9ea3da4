// loopint: minimal geometric intersection numbers of loops on closed
// orientable surfaces of genus >= 2, computed from words in the standard
// generators. Words are signed integers: "4 3 4 -1" means c4 c3 c4 c1^-1.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "surf/basis_check.hpp"
#include "surf/grid_svg.hpp"
#include "surf/hyperbolic.hpp"
#include "surf/intersection.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct Options {
  int genus = 2;
  std::string word, word1, word2;
  int max_s = 3;
  double tol = 1e-8;
  std::string svg_path;
  bool pretty = false;
};

void print(const ordered_json& j, bool pretty) {
  std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
}

ordered_json component_json(const surf::IndexedComponent& ic) {
  ordered_json j;
  j["k"] = ic.data.anchor_k;
  j["l"] = ic.data.anchor_l;
  switch (ic.data.kind) {
    case surf::ComponentKind::InfiniteParallel: j["q"] = "inf+"; break;
    case surf::ComponentKind::InfiniteAntiparallel: j["q"] = "inf-"; break;
    default: j["q"] = static_cast<int>(surf::signed_run(ic.data)); break;
  }
  j["index"] = ic.index;
  return j;
}

ordered_json components_json(const std::vector<surf::IndexedComponent>& comps) {
  ordered_json arr = ordered_json::array();
  for (const auto& ic : comps) arr.push_back(component_json(ic));
  return arr;
}

int run_reduce(const Options& opt) {
  const surf::Genus g(opt.genus);
  const surf::Word w = surf::parse_word(opt.word, g);
  const surf::Word nf = surf::normal_form(w);
  ordered_json j;
  j["genus"] = opt.genus;
  j["word"] = surf::format_word(w);
  j["normal_form"] = surf::format_word(nf);
  j["length"] = nf.size();
  print(j, opt.pretty);
  return kExitOk;
}

int run_cyclic_reduce(const Options& opt) {
  const surf::Genus g(opt.genus);
  const surf::CyclicWord cw = surf::cyclic_normal_form(surf::parse_word(opt.word, g));
  ordered_json j;
  j["genus"] = opt.genus;
  j["representative"] = surf::format_word(cw.word());
  j["length"] = cw.size();
  if (cw.empty()) {
    j["root"] = "";
    j["exponent"] = 0;
  } else {
    const auto pd = surf::prime_decomposition(cw);
    j["root"] = surf::format_word(pd.root);
    j["exponent"] = pd.exponent;
  }
  print(j, opt.pretty);
  return kExitOk;
}

// Keeps the caller's word as the class representative when it is already
// cyclically reduced, so component anchors refer to the letters as typed.
surf::CyclicWord class_representative(const surf::Word& w) {
  if (surf::is_cyclically_reduced(w)) return surf::CyclicWord(w);
  return surf::cyclic_normal_form(w);
}

// Trivial classes have no grid to draw.
void maybe_emit_svg(const Options& opt, const std::vector<surf::IndexedComponent>& comps,
                    std::size_t m, std::size_t n) {
  if (opt.svg_path.empty()) return;
  if (m == 0 || n == 0) {
    std::cerr << "note: no grid to draw for a nullhomotopic loop; svg skipped\n";
    return;
  }
  surf::emit_grid_svg(comps, m, n, opt.svg_path);
}

int run_classes(const Options& opt) {
  const surf::Genus g(opt.genus);
  const surf::CyclicWord mu = class_representative(surf::parse_word(opt.word1, g));
  const surf::CyclicWord nu = class_representative(surf::parse_word(opt.word2, g));
  std::vector<surf::IndexedComponent> comps;
  if (!mu.empty() && !nu.empty()) comps = surf::indexed_components(mu, nu);
  maybe_emit_svg(opt, comps, mu.size(), nu.size());
  print(components_json(comps), opt.pretty);
  return kExitOk;
}

int run_intersect(const Options& opt) {
  const surf::Genus g(opt.genus);
  const auto report = surf::intersection_report(surf::parse_word(opt.word1, g),
                                                surf::parse_word(opt.word2, g));
  ordered_json j;
  j["result"] = report.result;
  j["essential_count"] = report.essential_count;
  j["exponents"] = {report.exponent_a, report.exponent_b};
  j["representatives"] = {surf::format_word(report.representative_a),
                          surf::format_word(report.representative_b)};
  j["components"] = components_json(report.components);
  maybe_emit_svg(opt, report.components, report.representative_a.size(),
                 report.representative_b.size());
  print(j, opt.pretty);
  return kExitOk;
}

int run_self_intersect(const Options& opt) {
  const surf::Genus g(opt.genus);
  const auto report = surf::self_intersection_report(surf::parse_word(opt.word, g));
  ordered_json j;
  j["result"] = report.result;
  j["essential_count"] = report.essential_count;
  j["exponent"] = report.exponent;
  j["representative"] = surf::format_word(report.representative);
  j["components"] = components_json(report.components);
  maybe_emit_svg(opt, report.components, report.representative.size(),
                 report.representative.size());
  print(j, opt.pretty);
  return kExitOk;
}

int run_verify_basis(const Options& opt) {
  const surf::Genus g(opt.genus);
  const auto report = surf::verify_basis(g, opt.max_s);
  ordered_json j;
  j["pairs_checked"] = report.pairs_checked;
  j["compositions_found"] = report.compositions_found;
  ordered_json failures = ordered_json::array();
  for (const auto& c : report.failures) {
    ordered_json f;
    f["rule_a"] = {c.rule_a.family, c.rule_a.j, c.rule_a.s};
    f["rule_b"] = {c.rule_b.family, c.rule_b.j, c.rule_b.s};
    f["left"] = surf::format_word(c.left);
    f["right"] = surf::format_word(c.right);
    failures.push_back(f);
  }
  if (report.inclusions_found != 0)
    failures.push_back({{"inclusions_found", report.inclusions_found}});
  j["failures"] = failures;
  print(j, opt.pretty);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int run_verify_hyperbolic(const Options& opt) {
  const surf::Genus g(opt.genus);
  const auto report = surf::verify_hyperbolic(g);
  ordered_json j;
  j["fixed_point_max_error"] = report.fixed_point_max_error;
  j["relation_error"] = report.relation_error;
  j["translation_length"] = report.translation_length;
  print(j, opt.pretty);
  const bool ok = report.fixed_point_max_error <= opt.tol && report.relation_error <= opt.tol;
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal intersection and self-intersection numbers of loops on closed surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json-pretty", opt.pretty, "indent JSON output");

  const auto add_genus = [&](CLI::App* cmd) {
    cmd->add_option("--genus", opt.genus, "surface genus (>= 2)")->required();
  };

  auto* reduce = app.add_subcommand("reduce", "reduced form of a word");
  add_genus(reduce);
  reduce->add_option("--word", opt.word, "word to reduce")->required();

  auto* cyc = app.add_subcommand("cyclic-reduce", "cyclically reduced class representative");
  add_genus(cyc);
  cyc->add_option("--word", opt.word, "word to reduce")->required();

  auto* classes = app.add_subcommand("classes", "common value classes of two loops");
  add_genus(classes);
  classes->add_option("--word1", opt.word1)->required();
  classes->add_option("--word2", opt.word2)->required();
  classes->add_option("--svg", opt.svg_path, "write the component grid as SVG");

  auto* intersect = app.add_subcommand("intersect", "minimal geometric intersection number");
  add_genus(intersect);
  intersect->add_option("--word1", opt.word1)->required();
  intersect->add_option("--word2", opt.word2)->required();
  intersect->add_option("--svg", opt.svg_path, "write the component grid as SVG");

  auto* self = app.add_subcommand("self-intersect", "minimal self-intersection number");
  add_genus(self);
  self->add_option("--word", opt.word)->required();
  self->add_option("--svg", opt.svg_path, "write the component grid as SVG");

  auto* vb = app.add_subcommand("verify-basis", "check the rewriting system's compositions");
  add_genus(vb);
  vb->add_option("--max-s", opt.max_s, "bound on the repetition parameter")->check(CLI::PositiveNumber);

  auto* vh = app.add_subcommand("verify-hyperbolic", "check the numeric isometry model");
  add_genus(vh);
  vh->add_option("--tol", opt.tol, "tolerance for the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (opt.genus < 2) {
      std::cerr << "error: genus must be >= 2\n";
      return kExitUsage;
    }
    if (reduce->parsed()) return run_reduce(opt);
    if (cyc->parsed()) return run_cyclic_reduce(opt);
    if (classes->parsed()) return run_classes(opt);
    if (intersect->parsed()) return run_intersect(opt);
    if (self->parsed()) return run_self_intersect(opt);
    if (vb->parsed()) return run_verify_basis(opt);
    if (vh->parsed()) return run_verify_hyperbolic(opt);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
