#pragma once

#include "geoinv/multiindex.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace geoinv {

/// Discrete weighted point set in n-dimensional space.
class PointCloud {
 public:
  explicit PointCloud(int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(weights_.size()); }
  void add(std::span<const double> coords, double weight = 1.0);
  std::span<const double> point(int i) const;
  double weight(int i) const { return weights_[static_cast<size_t>(i)]; }
  void set_weight(int i, double w);
  double total_weight() const;
  void reserve(int n);

 private:
  int dim_ = 0;
  std::vector<double> coords_;  // point-major
  std::vector<double> weights_;
};

/// Central moments mu_{p1...pn} of an object, all orders <= max_order,
/// keyed by multi-index in the canonical per-order enumeration.
class MomentTable {
 public:
  MomentTable() = default;
  MomentTable(int dim, int max_order);

  int dim() const { return dim_; }
  int max_order() const { return max_order_; }
  double mu0() const;
  const std::vector<double>& centroid() const { return centroid_; }
  void set_centroid(std::vector<double> c);

  /// Throws insufficient-order when the index order exceeds max_order.
  double at(const MultiIndex& idx) const;
  void set(const MultiIndex& idx, double v);
  const std::vector<MultiIndex>& indices(int order) const;

 private:
  int dim_ = 0, max_order_ = -1;
  std::vector<double> centroid_;
  std::vector<std::vector<MultiIndex>> index_lists_;          // per order
  std::vector<std::map<std::vector<int>, int>> positions_;    // per order
  std::vector<std::vector<double>> values_;                   // per order
};

/// Gravity center; throws degenerate-cloud when total weight <= 0.
std::vector<double> centroid(const PointCloud& cloud);

/// Central moments up to max_order. Summation switches to compensated
/// accumulation for clouds of 1e5 points or more.
MomentTable central_moments(const PointCloud& cloud, int max_order);

/// mu_p / mu_0^{(p+n)/n} for every stored moment; invariant to uniform scale.
std::vector<std::pair<MultiIndex, double>> uniform_scale_normalize(const MomentTable& table);

/// Point-cloud text format: one point per line, n whitespace-separated
/// coordinates and an optional trailing weight (default 1.0). Lines starting
/// with '#' are ignored; a leading `# dim=N` directive fixes the dimension.
/// Without a known dimension, it is inferred as the column count of the
/// first data line and all lines must then carry exactly n columns.
PointCloud load_point_cloud(std::istream& in, std::optional<int> expected_dim = std::nullopt);
PointCloud load_point_cloud_file(const std::string& path, std::optional<int> expected_dim = std::nullopt);
void write_point_cloud(std::ostream& out, const PointCloud& cloud);

}  // namespace geoinv
