#include "asymass/quad/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "asymass/errors.hpp"

namespace asymass {

Rule1d gauss_legendre(int order, double a, double b) {
  if (order < 1) throw ConfigError("Gauss-Legendre order must be positive");
  Rule1d rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order == 1 ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[order - 1 - i] = mid + half * x;
    rule.weights[i] = rule.weights[order - 1 - i] = half * w;
  }
  return rule;
}

Rule1d periodic_trapezoid(int count) {
  if (count < 1) throw ConfigError("azimuthal node count must be positive");
  Rule1d rule;
  const double h = 2.0 * std::numbers::pi / count;
  for (int i = 0; i < count; ++i) {
    rule.nodes.push_back(i * h);
    rule.weights.push_back(h);
  }
  return rule;
}

QuadratureRule QuadratureRule::defaults(int n) {
  if (n <= 3) return {48, 96, 32};
  return {16, 32, 12};
}

namespace {

Rule1d composite_radial(const SurfacePatch& patch, int order) {
  std::vector<double> cuts{patch.inner};
  for (double b : patch.breakpoints)
    if (b > patch.inner && b < patch.outer) cuts.push_back(b);
  cuts.push_back(patch.outer);
  std::sort(cuts.begin(), cuts.end());
  Rule1d out;
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const Rule1d piece = gauss_legendre(order, cuts[s], cuts[s + 1]);
    out.nodes.insert(out.nodes.end(), piece.nodes.begin(), piece.nodes.end());
    out.weights.insert(out.weights.end(), piece.weights.begin(), piece.weights.end());
  }
  return out;
}

// Angular axes of S^k: k-1 polar angles then the azimuth. When `half` the
// top polar angle is restricted to [0, pi/2].
void push_sphere_axes(std::vector<Rule1d>& axes, int k, bool half, const QuadratureRule& r) {
  for (int a = 0; a < k - 1; ++a)
    axes.push_back(gauss_legendre(r.polar, 0.0, (a == 0 && half) ? 0.5 * std::numbers::pi
                                                                   : std::numbers::pi));
  axes.push_back(periodic_trapezoid(r.azimuth));
}

}  // namespace

ProductRule::ProductRule(const SurfacePatch& patch, const QuadratureRule& rule) {
  const int n = patch.dim;
  if (n < 3 || n > kMaxDim)
    throw ConfigError("quadrature supports dimensions 3.." + std::to_string(kMaxDim));
  switch (patch.kind) {
    case PatchKind::hemisphere:
      push_sphere_axes(axes_, n - 1, true, rule);
      break;
    case PatchKind::corner_sphere:
      push_sphere_axes(axes_, n - 2, false, rule);
      break;
    case PatchKind::boundary_annulus:
      axes_.push_back(composite_radial(patch, rule.radial));
      push_sphere_axes(axes_, n - 2, false, rule);
      break;
    case PatchKind::half_annulus:
      axes_.push_back(composite_radial(patch, rule.radial));
      push_sphere_axes(axes_, n - 1, true, rule);
      break;
  }
  for (const auto& a : axes_) size_ *= a.nodes.size();
}

double ProductRule::node(std::size_t i, double* params) const {
  double w = 1.0;
  for (int a = static_cast<int>(axes_.size()) - 1; a >= 0; --a) {
    const std::size_t m = axes_[a].nodes.size();
    const std::size_t j = i % m;
    i /= m;
    params[a] = axes_[a].nodes[j];
    w *= axes_[a].weights[j];
  }
  return w;
}

Integral integrate_patch(const SurfacePatch& patch, const QuadratureRule& rule,
                         const std::function<double(const Embedding&)>& fn,
                         const Parallelism& par) {
  return integrate_patch_scaled(
      patch, rule,
      [&](const Embedding& e) {
        const double v = fn(e);
        return Integral{v, std::abs(v)};
      },
      par);
}

Integral integrate_patch_scaled(const SurfacePatch& patch, const QuadratureRule& rule,
                                const std::function<Integral(const Embedding&)>& fn,
                                const Parallelism& par) {
  const ProductRule product(patch, rule);
  const std::size_t total = product.size();
  const std::size_t block = std::max<std::size_t>(1, par.block);
  const std::size_t blocks = (total + block - 1) / block;
  std::vector<Integral> partial(blocks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    double params[kMaxDim];
    for (std::size_t b = next++; b < blocks; b = next++) {
      try {
        Integral acc;
        const std::size_t end = std::min(total, (b + 1) * block);
        for (std::size_t i = b * block; i < end; ++i) {
          const double w = product.node(i, params);
          const Embedding e = embed(patch, params);
          const Integral v = fn(e);
          if (!std::isfinite(v.value) || !std::isfinite(v.magnitude)) {
            std::ostringstream os;
            os << "non-finite integrand on " << to_string(patch.kind) << " at node (";
            for (int k = 0; k < e.x.size(); ++k) os << (k ? ", " : "") << e.x(k);
            os << ")";
            throw EvaluationError(os.str());
          }
          acc.value += w * v.value;
          acc.magnitude += std::abs(w) * v.magnitude;
        }
        partial[b] = acc;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = blocks;
      }
    }
  };

  int workers = par.workers > 0 ? par.workers
                                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  workers = static_cast<int>(std::min<std::size_t>(workers, blocks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Integral total_sum;
  for (const auto& p : partial) {
    total_sum.value += p.value;
    total_sum.magnitude += p.magnitude;
  }
  return total_sum;
}

double areal_density(const Embedding& e, const Mat& g) {
  Mat t(e.x.size(), e.count);
  for (int a = 0; a < e.count; ++a) t.col(a) = e.tangents[a];
  const Mat pulled = t.transpose() * g * t;
  return std::sqrt(std::max(0.0, pulled.determinant()));
}

Integral integrate_surface(const std::function<double(const Point&)>& f,
                           const SurfacePatch& patch, const QuadratureRule& rule,
                           const MetricField& measure, const Parallelism& par) {
  return integrate_patch(
      patch, rule,
      [&](const Embedding& e) { return f(e.x) * areal_density(e, measure.value(e.x)); }, par);
}

Integral integrate_bulk(const std::function<double(const Point&)>& f,
                        const SurfacePatch& patch, const QuadratureRule& rule,
                        const MetricField& measure, const Parallelism& par) {
  return integrate_surface(f, patch, rule, measure, par);
}

}  // namespace asymass
