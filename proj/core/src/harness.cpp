#include "geoinv/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace geoinv {

double Rng::gaussian() {
  if (have_cached_) {
    have_cached_ = false;
    return cached_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * 3.14159265358979323846 * u2;
  cached_ = r * std::sin(a);
  have_cached_ = true;
  return r * std::cos(a);
}

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string_view to_string(TransformClass c) {
  switch (c) {
    case TransformClass::rotation: return "rotation";
    case TransformClass::scale: return "scale";
    case TransformClass::affine: return "affine";
    case TransformClass::translation: return "translation";
  }
  return "?";
}

TransformClass transform_class_from(std::string_view s) {
  if (s == "rotation") return TransformClass::rotation;
  if (s == "scale") return TransformClass::scale;
  if (s == "affine") return TransformClass::affine;
  if (s == "translation") return TransformClass::translation;
  throw std::invalid_argument("unknown transform class: " + std::string(s));
}

namespace {

// row-major helpers for small dense matrices
std::vector<double> mat_mul(const std::vector<double>& a, const std::vector<double>& b, int n) {
  std::vector<double> c(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double av = a[static_cast<size_t>(i * n + k)];
      if (av == 0.0) continue;
      for (int j = 0; j < n; ++j) c[static_cast<size_t>(i * n + j)] += av * b[static_cast<size_t>(k * n + j)];
    }
  return c;
}

double determinant(std::vector<double> m, int n) {
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[static_cast<size_t>(r * n + c)]) > std::abs(m[static_cast<size_t>(piv * n + c)])) piv = r;
    if (m[static_cast<size_t>(piv * n + c)] == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m[static_cast<size_t>(piv * n + j)], m[static_cast<size_t>(c * n + j)]);
      det = -det;
    }
    det *= m[static_cast<size_t>(c * n + c)];
    for (int r = c + 1; r < n; ++r) {
      const double f = m[static_cast<size_t>(r * n + c)] / m[static_cast<size_t>(c * n + c)];
      for (int j = c; j < n; ++j) m[static_cast<size_t>(r * n + j)] -= f * m[static_cast<size_t>(c * n + j)];
    }
  }
  return det;
}

// Orthonormalizes a random Gaussian matrix (two Gram-Schmidt passes over the
// columns) and fixes det = +1 by flipping the last column when needed.
std::vector<double> random_rotation(int n, Rng& rng) {
  std::vector<double> q(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (double& v : q) v = rng.gaussian();
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 0; c < n; ++c) {
      for (int prev = 0; prev < c; ++prev) {
        double dot = 0.0;
        for (int r = 0; r < n; ++r) dot += q[static_cast<size_t>(r * n + c)] * q[static_cast<size_t>(r * n + prev)];
        for (int r = 0; r < n; ++r) q[static_cast<size_t>(r * n + c)] -= dot * q[static_cast<size_t>(r * n + prev)];
      }
      double norm = 0.0;
      for (int r = 0; r < n; ++r) norm += q[static_cast<size_t>(r * n + c)] * q[static_cast<size_t>(r * n + c)];
      norm = std::sqrt(norm);
      if (norm < 1e-12) {
        // astronomically unlikely degenerate draw; replace the column
        for (int r = 0; r < n; ++r) q[static_cast<size_t>(r * n + c)] = rng.gaussian();
        --c;
        continue;
      }
      for (int r = 0; r < n; ++r) q[static_cast<size_t>(r * n + c)] /= norm;
    }
  }
  if (determinant(q, n) < 0.0)
    for (int r = 0; r < n; ++r) q[static_cast<size_t>(r * n + (n - 1))] = -q[static_cast<size_t>(r * n + (n - 1))];
  return q;
}

}  // namespace

TransformSpec random_transform(int dim, TransformClass cls, uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("invalid-dimension: dim must be >= 2");
  TransformSpec t;
  t.cls = cls;
  t.dim = dim;
  t.seed = seed;
  t.offset.assign(static_cast<size_t>(dim), 0.0);
  Rng rng(mix_seed(seed, static_cast<uint64_t>(cls) + 101));

  const auto identity = [dim] {
    std::vector<double> m(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0.0);
    for (int j = 0; j < dim; ++j) m[static_cast<size_t>(j * dim + j)] = 1.0;
    return m;
  };
  const auto random_scale = [&] {
    std::vector<double> diag(static_cast<size_t>(dim));
    for (double& s : diag) s = std::exp2(rng.uniform(-2.0, 2.0));  // [0.25, 4]
    return diag;
  };

  switch (cls) {
    case TransformClass::rotation:
      t.matrix = random_rotation(dim, rng);
      t.det = 1.0;
      break;
    case TransformClass::scale: {
      t.scale_diag = random_scale();
      t.matrix = identity();
      t.det = 1.0;
      for (int j = 0; j < dim; ++j) {
        t.matrix[static_cast<size_t>(j * dim + j)] = t.scale_diag[static_cast<size_t>(j)];
        t.det *= t.scale_diag[static_cast<size_t>(j)];
      }
      break;
    }
    case TransformClass::affine: {
      t.rot1 = random_rotation(dim, rng);
      t.scale_diag = random_scale();
      t.rot2 = random_rotation(dim, rng);
      std::vector<double> s(static_cast<size_t>(dim) * static_cast<size_t>(dim), 0.0);
      t.det = 1.0;
      for (int j = 0; j < dim; ++j) {
        s[static_cast<size_t>(j * dim + j)] = t.scale_diag[static_cast<size_t>(j)];
        t.det *= t.scale_diag[static_cast<size_t>(j)];
      }
      t.matrix = mat_mul(t.rot2, mat_mul(s, t.rot1, dim), dim);
      break;
    }
    case TransformClass::translation:
      t.matrix = identity();
      t.det = 1.0;
      for (double& o : t.offset) o = rng.uniform(-1.0, 1.0);
      break;
  }
  return t;
}

PointCloud apply(const TransformSpec& t, const PointCloud& cloud) {
  if (t.dim != cloud.dim()) throw std::invalid_argument("dimension-mismatch: transform vs cloud");
  const int n = t.dim;
  const double wscale = std::abs(t.det);
  PointCloud out(n);
  out.reserve(cloud.size());
  std::vector<double> y(static_cast<size_t>(n));
  for (int i = 0; i < cloud.size(); ++i) {
    const auto x = cloud.point(i);
    for (int r = 0; r < n; ++r) {
      double v = t.offset[static_cast<size_t>(r)];
      for (int c = 0; c < n; ++c) v += t.matrix[static_cast<size_t>(r * n + c)] * x[static_cast<size_t>(c)];
      y[static_cast<size_t>(r)] = v;
    }
    out.add(y, cloud.weight(i) * wscale);
  }
  return out;
}

PointCloud normalized_cloud(const PointCloud& cloud) {
  const std::vector<double> c = centroid(cloud);
  const int n = cloud.dim();
  double sq = 0.0, wt = 0.0;
  for (int i = 0; i < cloud.size(); ++i) {
    const auto x = cloud.point(i);
    double r2 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double d = x[static_cast<size_t>(j)] - c[static_cast<size_t>(j)];
      r2 += d * d;
    }
    sq += cloud.weight(i) * r2;
    wt += cloud.weight(i);
  }
  const double rms = std::sqrt(sq / wt);
  const double inv = rms > 0.0 ? 1.0 / rms : 1.0;
  PointCloud out(n);
  out.reserve(cloud.size());
  std::vector<double> y(static_cast<size_t>(n));
  for (int i = 0; i < cloud.size(); ++i) {
    const auto x = cloud.point(i);
    for (int j = 0; j < n; ++j) y[static_cast<size_t>(j)] = (x[static_cast<size_t>(j)] - c[static_cast<size_t>(j)]) * inv;
    out.add(y, cloud.weight(i));
  }
  return out;
}

PointCloud random_cloud(int dim, int count, uint64_t seed) {
  Rng rng(mix_seed(seed, 7));
  PointCloud out(dim);
  out.reserve(count);
  std::vector<double> x(static_cast<size_t>(dim));
  for (int i = 0; i < count; ++i) {
    for (double& v : x) v = rng.gaussian();
    out.add(x, rng.uniform(0.5, 1.5));
  }
  return out;
}

bool classes_compatible(InvariantClass inv, TransformClass transform) {
  switch (transform) {
    case TransformClass::rotation: return inv == InvariantClass::rotation || inv == InvariantClass::affine;
    case TransformClass::scale: return inv == InvariantClass::scale || inv == InvariantClass::affine;
    case TransformClass::translation: return inv == InvariantClass::affine;
    case TransformClass::affine: return inv == InvariantClass::affine;
  }
  return false;
}

bool InvarianceReport::all_passed() const {
  for (const auto& r : rows)
    if (!r.passed) return false;
  return true;
}

std::string InvarianceReport::text() const {
  std::ostringstream os;
  os << "transform=" << to_string(transform) << " trials=" << trials << " tol=" << tol
     << " seed=" << seed << "\n";
  for (const auto& r : rows)
    os << "inv=" << r.index << " class=" << to_string(r.cls) << " max_rel_err=" << r.max_rel_err
       << " pass=" << (r.passed ? 1 : 0) << "\n";
  os << "result=" << (all_passed() ? "pass" : "fail") << "\n";
  return os.str();
}

InvarianceReport check_invariance(std::span<const InvariantPolynomial> invs, const PointCloud& cloud,
                                  TransformClass transform, int trials, double tol, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (const auto& inv : invs)
    if (!classes_compatible(inv.cls, transform))
      throw std::invalid_argument("incompatible-class: " + std::string(to_string(inv.cls)) +
                                  " invariant cannot be checked under " +
                                  std::string(to_string(transform)) + " transforms");

  InvarianceReport report;
  report.transform = transform;
  report.trials = trials;
  report.tol = tol;
  report.seed = seed;
  if (invs.empty()) return report;

  int max_order = 0;
  for (const auto& inv : invs) max_order = std::max(max_order, inv.max_order());

  const PointCloud base = normalized_cloud(cloud);
  const MomentTable t0 = central_moments(base, max_order);
  std::vector<double> baseline;
  baseline.reserve(invs.size());
  for (const auto& inv : invs) baseline.push_back(evaluate(inv, t0));

  std::vector<double> max_err(invs.size(), 0.0);
  for (int trial = 0; trial < trials; ++trial) {
    const TransformSpec ts = random_transform(base.dim(), transform, mix_seed(seed, static_cast<uint64_t>(trial)));
    const MomentTable tt = central_moments(apply(ts, base), max_order);
    for (size_t i = 0; i < invs.size(); ++i) {
      const double v = evaluate(invs[i], tt);
      const double rel = std::abs(v - baseline[i]) / std::max(std::abs(baseline[i]), 1e-12);
      max_err[i] = std::max(max_err[i], rel);
    }
  }
  for (size_t i = 0; i < invs.size(); ++i)
    report.rows.push_back({static_cast<int>(i), invs[i].cls, max_err[i], max_err[i] <= tol});
  return report;
}

}  // namespace geoinv
