// geoinv: generate, evaluate and verify moment invariants of weighted point
// clouds in n-dimensional space.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.

#include "geoinv/harness.hpp"
#include "geoinv/invariants.hpp"
#include "geoinv/poly.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace geoinv;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p:k[,p:k...]"
std::vector<std::pair<int, int>> parse_parts(const std::string& s) {
  std::vector<std::pair<int, int>> parts;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    const size_t colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bad --parts item '" + item + "', expected p:k");
    try {
      size_t p1 = 0, p2 = 0;
      const int p = std::stoi(item.substr(0, colon), &p1);
      const int k = std::stoi(item.substr(colon + 1), &p2);
      if (p1 != colon || p2 != item.size() - colon - 1) throw std::invalid_argument(item);
      parts.emplace_back(p, k);
    } catch (const std::exception&) {
      throw UsageError("bad --parts item '" + item + "', expected p:k");
    }
  }
  if (parts.empty()) throw UsageError("empty --parts");
  return parts;
}

// "parts;parts..."
std::vector<std::vector<std::pair<int, int>>> parse_exclude(const std::string& s) {
  std::vector<std::vector<std::pair<int, int>>> items;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ';'))
    if (!item.empty()) items.push_back(parse_parts(item));
  return items;
}

std::string parts_to_string(const std::vector<std::pair<int, int>>& parts) {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << '(' << parts[i].first << ',' << parts[i].second << ')';
  }
  return os.str();
}

// Known rows for --exclude-products: for each listed decomposition, generate
// the same-class invariants of both sides of every 2-way component split and
// expand all cross products into the target basis.
std::vector<std::vector<Rat>> product_rows(const BasisDescriptor& target, InvariantClass cls,
                                           PlaneSet planes,
                                           const std::vector<std::vector<std::pair<int, int>>>& items) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& item : items) {
    auto sorted_item = item;
    std::sort(sorted_item.begin(), sorted_item.end());
    if (sorted_item != target.parts())
      throw UsageError("--exclude-products item " + parts_to_string(item) +
                       " does not match the target descriptor " + parts_to_string(target.parts()));
    if (sorted_item.size() < 2)
      throw UsageError("--exclude-products items need at least two components");
    const size_t c = sorted_item.size();
    for (size_t mask = 1; mask + 1 < (1u << c); ++mask) {
      if ((mask & 1u) == 0) continue;  // fix component 0 on side A: unordered splits
      std::vector<std::pair<int, int>> pa, pb;
      for (size_t j = 0; j < c; ++j)
        (mask >> j & 1u ? pa : pb).push_back(sorted_item[j]);
      const BasisDescriptor da = product_basis(target.dim(), pa);
      const BasisDescriptor db = product_basis(target.dim(), pb);
      const auto ia = cls == InvariantClass::rotation ? rotation_invariants(da, planes)
                                                      : affine_invariants(da, planes);
      const auto ib = cls == InvariantClass::rotation ? rotation_invariants(db, planes)
                                                      : affine_invariants(db, planes);
      for (const auto& a : ia)
        for (const auto& b : ib) rows.push_back(expand_product(a, b, target));
    }
  }
  return rows;
}

struct Options {
  int dim = 0;
  std::string parts;
  std::string cls = "affine";
  std::string planes = "fan";
  std::string exclude;
  std::string points;
  std::string invariants;
  std::string out;
  int trials = 100;
  double tol = 1e-8;
  uint64_t seed = 1;
};

int cmd_generate(const Options& opt) {
  const auto parts = parse_parts(opt.parts);
  const InvariantClass cls = invariant_class_from(opt.cls);
  const PlaneSet planes = opt.planes == "all" ? PlaneSet::all : PlaneSet::fan;
  const BasisDescriptor desc = product_basis(opt.dim, parts);

  GenerationReport rep;
  std::vector<InvariantPolynomial> invs;
  if (cls == InvariantClass::scale) {
    if (!opt.exclude.empty()) throw UsageError("--exclude-products applies to rotation/affine only");
    const ScaleSelection sel = select_scale_invariant(desc);
    invs = scale_invariants(desc);
    rep.basis_size = desc.size();
    rep.selected = static_cast<int>(sel.selected.size());
    rep.d = sel.d;
  } else {
    const auto known = product_rows(desc, cls, planes, parse_exclude(opt.exclude));
    invs = independent_invariants(desc, known, cls, planes, &rep);
  }

  std::cout << "generate seed=" << opt.seed << " dim=" << opt.dim << " parts="
            << parts_to_string(desc.parts()) << " class=" << to_string(cls) << " planes="
            << (planes == PlaneSet::all ? "all" : "fan") << "\n";
  std::cout << "basis=" << rep.basis_size;
  if (rep.selected >= 0) std::cout << " selected=" << rep.selected << " d=" << rep.d;
  if (cls != InvariantClass::scale)
    std::cout << " pruned=" << rep.pruned_rows << "x" << rep.pruned_cols << " kernel=" << rep.kernel_dim;
  std::cout << "\n";
  std::cout << "invariants=" << invs.size() << "\n";

  save_invariants_file(opt.out, invs, opt.dim);
  std::cout << "wrote " << opt.out << "\n";
  return kExitOk;
}

int cmd_eval(const Options& opt) {
  const auto invs = load_invariants_file(opt.invariants);
  if (invs.empty()) {
    std::cout << "eval seed=" << opt.seed << " invariants=0\n";
    return kExitOk;
  }
  const int dim = invs.front().dim;
  const PointCloud cloud = load_point_cloud_file(opt.points, dim);
  int max_order = 0;
  for (const auto& inv : invs) max_order = std::max(max_order, inv.max_order());
  const MomentTable table = central_moments(cloud, max_order);

  std::cout << "eval seed=" << opt.seed << " points=" << opt.points << " invariants=" << invs.size()
            << "\n";
  std::cout.precision(17);
  for (size_t i = 0; i < invs.size(); ++i)
    std::cout << i << " class=" << to_string(invs[i].cls) << " d=" << invs[i].denominator_power
              << " desc=" << parts_to_string(invs[i].desc_parts) << " value=" << evaluate(invs[i], table)
              << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const auto invs = load_invariants_file(opt.invariants);
  std::optional<TransformClass> only;
  if (!opt.cls.empty() && opt.cls != "auto") only = transform_class_from(opt.cls);

  PointCloud cloud = [&] {
    if (!opt.points.empty()) {
      const int dim = invs.empty() ? opt.dim : invs.front().dim;
      return load_point_cloud_file(opt.points, dim >= 2 ? std::optional<int>(dim) : std::nullopt);
    }
    if (invs.empty()) throw UsageError("nothing to verify");
    return random_cloud(invs.front().dim, 500, opt.seed);
  }();

  std::ostringstream doc;
  doc << "verify seed=" << opt.seed << " trials=" << opt.trials << " tol=" << opt.tol << " points="
      << (opt.points.empty() ? "<synthetic>" : opt.points) << "\n";

  const TransformClass all_classes[] = {TransformClass::rotation, TransformClass::scale,
                                        TransformClass::translation, TransformClass::affine};
  bool ok = true;
  int checked = 0;
  for (const TransformClass tc : all_classes) {
    if (only && *only != tc) continue;
    std::vector<InvariantPolynomial> subset;
    std::vector<size_t> subset_index;
    for (size_t i = 0; i < invs.size(); ++i)
      if (classes_compatible(invs[i].cls, tc)) {
        subset.push_back(invs[i]);
        subset_index.push_back(i);
      }
    if (subset.empty()) continue;
    InvarianceReport rep = check_invariance(subset, cloud, tc, opt.trials, opt.tol, opt.seed);
    for (size_t k = 0; k < rep.rows.size(); ++k) rep.rows[k].index = static_cast<int>(subset_index[k]);
    doc << rep.text();
    ok = ok && rep.all_passed();
    checked += static_cast<int>(subset.size());
  }
  if (only && checked < static_cast<int>(invs.size()))
    doc << "skipped=" << invs.size() - static_cast<size_t>(checked) << " (class incompatible with "
        << to_string(*only) << " transforms)\n";
  doc << "overall=" << (ok ? "pass" : "fail") << "\n";

  std::cout << doc.str();
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw UsageError("cannot open report file: " + opt.out);
    f << doc.str();
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moment invariant generator for n-dimensional point clouds"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* gen = app.add_subcommand("generate", "derive invariants for a moment vector");
  gen->add_option("--dim", opt.dim, "space dimension n (>= 2)")->required();
  gen->add_option("--parts", opt.parts, "descriptor parts p:k[,p:k...]")->required();
  gen->add_option("--class", opt.cls, "scale|rotation|affine")->required();
  gen->add_option("--planes", opt.planes, "fan (n-1 planes, default) or all")
      ->check(CLI::IsMember({"fan", "all"}));
  gen->add_option("--exclude-products", opt.exclude,
                  "remove invariants that are products over these part splits (parts;parts...)");
  gen->add_option("--out", opt.out, "output invariant file")->required();
  gen->add_option("--seed", opt.seed, "echoed in the report");

  CLI::App* ev = app.add_subcommand("eval", "evaluate invariants on a point cloud");
  ev->add_option("--invariants", opt.invariants, "invariant file")->required();
  ev->add_option("--points", opt.points, "point cloud file")->required();
  ev->add_option("--seed", opt.seed, "echoed in the report");

  CLI::App* ver = app.add_subcommand("verify", "check invariance under random transforms");
  ver->add_option("--invariants", opt.invariants, "invariant file")->required();
  ver->add_option("--points", opt.points, "point cloud file (default: seeded synthetic cloud)");
  ver->add_option("--class", opt.cls, "restrict to one transform class")
      ->check(CLI::IsMember({"rotation", "scale", "translation", "affine", "auto"}))
      ->default_val("auto");
  ver->add_option("--trials", opt.trials, "random transforms per class");
  ver->add_option("--tol", opt.tol, "max relative error");
  ver->add_option("--seed", opt.seed, "RNG seed, echoed for replay");
  ver->add_option("--out", opt.out, "also write the report to this file");
  ver->add_option("--dim", opt.dim, "expected cloud dimension (checked against the file)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(opt);
    if (ev->parsed()) return cmd_eval(opt);
    if (ver->parsed()) return cmd_verify(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
