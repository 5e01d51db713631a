#include "geoinv/moments.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace geoinv {

namespace {

constexpr int kCompensatedThreshold = 100000;

struct Accumulator {
  double sum = 0.0, comp = 0.0;
  bool compensated = false;
  void add(double v) {
    if (!compensated) {
      sum += v;
      return;
    }
    const double t = sum + v;  // Neumaier
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

}  // namespace

PointCloud::PointCloud(int dim) : dim_(dim) {
  if (dim < 2) throw std::invalid_argument("invalid-dimension: point cloud needs dim >= 2");
}

void PointCloud::add(std::span<const double> coords, double weight) {
  if (static_cast<int>(coords.size()) != dim_)
    throw std::invalid_argument("dimension-mismatch: point has wrong coordinate count");
  coords_.insert(coords_.end(), coords.begin(), coords.end());
  weights_.push_back(weight);
}

std::span<const double> PointCloud::point(int i) const {
  return {coords_.data() + static_cast<size_t>(i) * static_cast<size_t>(dim_), static_cast<size_t>(dim_)};
}

void PointCloud::set_weight(int i, double w) { weights_.at(static_cast<size_t>(i)) = w; }

double PointCloud::total_weight() const {
  double t = 0.0;
  for (double w : weights_) t += w;
  return t;
}

void PointCloud::reserve(int n) {
  coords_.reserve(static_cast<size_t>(n) * static_cast<size_t>(dim_));
  weights_.reserve(static_cast<size_t>(n));
}

MomentTable::MomentTable(int dim, int max_order) : dim_(dim), max_order_(max_order) {
  if (dim < 2) throw std::invalid_argument("invalid-dimension: moment table needs dim >= 2");
  if (max_order < 0) throw std::invalid_argument("max_order must be >= 0");
  centroid_.assign(static_cast<size_t>(dim), 0.0);
  for (int p = 0; p <= max_order; ++p) {
    index_lists_.push_back(enumerate_order(dim, p));
    std::map<std::vector<int>, int> pos;
    for (int i = 0; i < static_cast<int>(index_lists_.back().size()); ++i)
      pos.emplace(index_lists_.back()[static_cast<size_t>(i)].exponents(), i);
    positions_.push_back(std::move(pos));
    values_.emplace_back(index_lists_.back().size(), 0.0);
  }
}

double MomentTable::mu0() const { return values_.at(0).at(0); }

void MomentTable::set_centroid(std::vector<double> c) {
  if (static_cast<int>(c.size()) != dim_) throw std::invalid_argument("dimension-mismatch in centroid");
  centroid_ = std::move(c);
}

double MomentTable::at(const MultiIndex& idx) const {
  if (idx.dim() != dim_) throw std::invalid_argument("dimension-mismatch in moment lookup");
  const int p = idx.order();
  if (p > max_order_)
    throw std::out_of_range("insufficient-order: moment " + idx.str() + " beyond table order " +
                            std::to_string(max_order_));
  return values_[static_cast<size_t>(p)][static_cast<size_t>(positions_[static_cast<size_t>(p)].at(idx.exponents()))];
}

void MomentTable::set(const MultiIndex& idx, double v) {
  const int p = idx.order();
  if (p > max_order_) throw std::out_of_range("insufficient-order in moment table set");
  values_[static_cast<size_t>(p)][static_cast<size_t>(positions_[static_cast<size_t>(p)].at(idx.exponents()))] = v;
}

const std::vector<MultiIndex>& MomentTable::indices(int order) const {
  return index_lists_.at(static_cast<size_t>(order));
}

std::vector<double> centroid(const PointCloud& cloud) {
  const int n = cloud.dim();
  const bool comp = cloud.size() >= kCompensatedThreshold;
  Accumulator w0;
  std::vector<Accumulator> first(static_cast<size_t>(n));
  w0.compensated = comp;
  for (auto& a : first) a.compensated = comp;
  for (int i = 0; i < cloud.size(); ++i) {
    const double w = cloud.weight(i);
    w0.add(w);
    auto x = cloud.point(i);
    for (int j = 0; j < n; ++j) first[static_cast<size_t>(j)].add(w * x[static_cast<size_t>(j)]);
  }
  const double total = w0.value();
  if (!(total > 0.0)) throw std::invalid_argument("degenerate-cloud: total weight <= 0");
  std::vector<double> c(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) c[static_cast<size_t>(j)] = first[static_cast<size_t>(j)].value() / total;
  return c;
}

MomentTable central_moments(const PointCloud& cloud, int max_order) {
  const int n = cloud.dim();
  MomentTable table(n, max_order);
  const std::vector<double> c = centroid(cloud);  // throws on degenerate clouds
  table.set_centroid(c);

  const bool comp = cloud.size() >= kCompensatedThreshold;
  std::vector<std::vector<Accumulator>> acc;
  for (int p = 0; p <= max_order; ++p) {
    acc.emplace_back(table.indices(p).size());
    for (auto& a : acc.back()) a.compensated = comp;
  }

  std::vector<double> powers(static_cast<size_t>(n) * static_cast<size_t>(max_order + 1));
  for (int i = 0; i < cloud.size(); ++i) {
    const double w = cloud.weight(i);
    auto x = cloud.point(i);
    for (int j = 0; j < n; ++j) {
      double pw = 1.0;
      const double dx = x[static_cast<size_t>(j)] - c[static_cast<size_t>(j)];
      for (int k = 0; k <= max_order; ++k) {
        powers[static_cast<size_t>(j) * static_cast<size_t>(max_order + 1) + static_cast<size_t>(k)] = pw;
        pw *= dx;
      }
    }
    for (int p = 0; p <= max_order; ++p) {
      const auto& idxs = table.indices(p);
      for (size_t t = 0; t < idxs.size(); ++t) {
        double term = w;
        for (int j = 0; j < n; ++j)
          term *= powers[static_cast<size_t>(j) * static_cast<size_t>(max_order + 1) +
                         static_cast<size_t>(idxs[t][j])];
        acc[static_cast<size_t>(p)][t].add(term);
      }
    }
  }
  for (int p = 0; p <= max_order; ++p) {
    const auto& idxs = table.indices(p);
    for (size_t t = 0; t < idxs.size(); ++t) table.set(idxs[t], acc[static_cast<size_t>(p)][t].value());
  }
  return table;
}

std::vector<std::pair<MultiIndex, double>> uniform_scale_normalize(const MomentTable& table) {
  const double mu0 = table.mu0();
  if (!(mu0 > 0.0)) throw std::invalid_argument("degenerate-cloud: mu_0 <= 0");
  const int n = table.dim();
  std::vector<std::pair<MultiIndex, double>> out;
  for (int p = 0; p <= table.max_order(); ++p) {
    const double denom = std::pow(mu0, static_cast<double>(p + n) / static_cast<double>(n));
    for (const auto& idx : table.indices(p)) out.emplace_back(idx, table.at(idx) / denom);
  }
  return out;
}

namespace {

bool parse_double(const std::string& tok, double& out) {
  size_t pos = 0;
  try {
    out = std::stod(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace

PointCloud load_point_cloud(std::istream& in, std::optional<int> expected_dim) {
  std::optional<int> dim = expected_dim;
  bool declared = expected_dim.has_value();
  std::optional<PointCloud> cloud;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      // optional `# dim=N` directive, honored only before any data line
      std::istringstream hs(line.substr(first + 1));
      std::string word;
      if (hs >> word && word.rfind("dim=", 0) == 0 && !cloud && !declared) {
        try {
          dim = std::stoi(word.substr(4));
        } catch (const std::exception&) {
          throw std::invalid_argument("malformed-file: bad dim directive at line " + std::to_string(lineno));
        }
        declared = true;
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<double> vals;
    std::string tok;
    while (ls >> tok) {
      double v;
      if (!parse_double(tok, v))
        throw std::invalid_argument("malformed-file: bad number '" + tok + "' at line " + std::to_string(lineno));
      vals.push_back(v);
    }
    if (!dim) dim = static_cast<int>(vals.size());
    if (*dim < 2)
      throw std::invalid_argument("invalid-dimension: inferred dim < 2 at line " + std::to_string(lineno));
    if (!cloud) cloud.emplace(*dim);
    const size_t n = static_cast<size_t>(*dim);
    if (vals.size() == n) {
      cloud->add(std::span<const double>(vals.data(), n), 1.0);
    } else if (vals.size() == n + 1 && declared) {
      // a weight column is only unambiguous when the dimension was declared
      cloud->add(std::span<const double>(vals.data(), n), vals[n]);
    } else {
      throw std::invalid_argument("malformed-file: expected " + std::to_string(*dim) +
                                  (declared ? " or " + std::to_string(*dim + 1) : std::string()) +
                                  " columns at line " + std::to_string(lineno));
    }
  }
  if (!cloud) throw std::invalid_argument("malformed-file: no data lines");
  return *cloud;
}

PointCloud load_point_cloud_file(const std::string& path, std::optional<int> expected_dim) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open point file: " + path);
  return load_point_cloud(in, expected_dim);
}

void write_point_cloud(std::ostream& out, const PointCloud& cloud) {
  out << "# dim=" << cloud.dim() << "\n";
  out.precision(17);
  for (int i = 0; i < cloud.size(); ++i) {
    auto x = cloud.point(i);
    for (int j = 0; j < cloud.dim(); ++j) out << x[static_cast<size_t>(j)] << ' ';
    out << cloud.weight(i) << "\n";
  }
}

}  // namespace geoinv
