#include "asymass/geomcore/tensor_calculus.hpp"

#include <sstream>

namespace asymass {

namespace {

std::string describe(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p(i);
  os << ")";
  return os.str();
}

}  // namespace

Mat inverse_metric(const Mat& g, const Point& p) {
  Eigen::LLT<Mat> llt(g);
  if (llt.info() != Eigen::Success || !g.allFinite())
    throw SingularMetricError("metric is not positive definite at " + describe(p));
  Mat inv = llt.solve(identity(static_cast<int>(g.rows())));
  return 0.5 * (inv + inv.transpose());
}

LocalGeometry local_geometry(const MetricField& metric, const Point& p, int order) {
  const int n = metric.dim();
  const MetricJet jet = metric.evaluate(p, order);
  LocalGeometry geo;
  geo.n = n;
  geo.order = order;
  geo.p = p;
  geo.g = jet.g;
  geo.ginv = inverse_metric(jet.g, p);
  geo.dg = jet.dg;
  if (order < 1) return geo;

  // Lowered symbols Gamma_{l,ij} stored as lowered[l](i, j).
  Christoffel lowered;
  for (int l = 0; l < n; ++l) {
    lowered[l] = Mat(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        lowered[l](i, j) = 0.5 * (jet.dg[i](j, l) + jet.dg[j](i, l) - jet.dg[l](i, j));
  }
  for (int k = 0; k < n; ++k) {
    geo.gamma[k] = zero_mat(n);
    for (int l = 0; l < n; ++l) geo.gamma[k] += geo.ginv(k, l) * lowered[l];
  }
  if (order < 2) return geo;

  geo.d2g = jet.d2g;
  for (int m = 0; m < n; ++m) {
    const Mat dginv = -geo.ginv * jet.dg[m] * geo.ginv;
    Christoffel dlowered;
    for (int l = 0; l < n; ++l) {
      dlowered[l] = Mat(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dlowered[l](i, j) =
              0.5 * (jet.d2g[m][i](j, l) + jet.d2g[m][j](i, l) - jet.d2g[m][l](i, j));
    }
    for (int k = 0; k < n; ++k) {
      Mat acc = zero_mat(n);
      for (int l = 0; l < n; ++l) acc += dginv(k, l) * lowered[l] + geo.ginv(k, l) * dlowered[l];
      geo.dgamma[m][k] = acc;
    }
  }
  return geo;
}

Christoffel christoffel(const MetricField& metric, const Point& p) {
  return local_geometry(metric, p, 1).gamma;
}

Curvature curvature(const LocalGeometry& geo) {
  if (geo.order < 2) throw DifferentiationError("curvature needs second derivatives");
  const int n = geo.n;
  Curvature out;
  out.ricci = zero_mat(n);
  for (int j = 0; j < n; ++j)
    for (int l = j; l < n; ++l) {
      double r = 0.0;
      for (int k = 0; k < n; ++k) {
        r += geo.dgamma[k][k](l, j) - geo.dgamma[l][k](k, j);
        for (int q = 0; q < n; ++q)
          r += geo.gamma[k](k, q) * geo.gamma[q](l, j) - geo.gamma[k](l, q) * geo.gamma[q](k, j);
      }
      out.ricci(j, l) = out.ricci(l, j) = r;
    }
  out.scalar = (geo.ginv.array() * out.ricci.array()).sum();
  return out;
}

Curvature curvature(const MetricField& metric, const Point& p) {
  return curvature(local_geometry(metric, p, 2));
}

Mat einstein_tensor(const LocalGeometry& geo) {
  const Curvature c = curvature(geo);
  return c.ricci - 0.5 * c.scalar * geo.g;
}

Mat einstein_tensor(const MetricField& metric, const Point& p) {
  return einstein_tensor(local_geometry(metric, p, 2));
}

MatGrad covariant_derivative(const LocalGeometry& geo, const Mat& k, const MatGrad& dk) {
  const int n = geo.n;
  MatGrad out;
  for (int c = 0; c < n; ++c) {
    // nabla_c K_ij = d_c K_ij - Gamma^l_ci K_lj - Gamma^l_cj K_il
    Mat m = dk[c];
    for (int l = 0; l < n; ++l) {
      const auto row = geo.gamma[l].row(c);  // Gamma^l_{c.}
      m -= row.transpose() * k.row(l) + k.col(l) * row;
    }
    out[c] = m;
  }
  return out;
}

Vec div_sym2(const LocalGeometry& geo, const Mat& k, const MatGrad& dk) {
  const int n = geo.n;
  const MatGrad nabla = covariant_derivative(geo, k, dk);
  Vec out = zero_vec(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < n; ++c) out(j) += geo.ginv(i, c) * nabla[c](i, j);
  return out;
}

Vec div_sym2(const MetricField& metric, const Sym2Field& k, const Point& p) {
  const LocalGeometry geo = local_geometry(metric, p, 1);
  return div_sym2(geo, k.value(p), k.derivative(p, metric.backend()));
}

KillingDeformation killing_deformation(const LocalGeometry& geo, const Vec& y,
                                       const Mat& jacobian) {
  const int n = geo.n;
  // (L_Y g)_ij = Y^k d_k g_ij + g_kj d_i Y^k + g_ik d_j Y^k
  Mat lie = geo.g * jacobian;  // (i, j) -> g_ik d_j Y^k
  lie += lie.transpose().eval();
  for (int k = 0; k < n; ++k) lie += y(k) * geo.dg[k];
  KillingDeformation out;
  out.full = 0.5 * lie;
  out.div = jacobian.trace();
  for (int k = 0; k < n; ++k) out.div += geo.gamma[k].row(k).dot(y);
  out.trace_free = out.full - (out.div / n) * geo.g;
  return out;
}

KillingDeformation killing_deformation(const MetricField& metric, const VectorField& y,
                                       const Point& p) {
  const LocalGeometry geo = local_geometry(metric, p, 1);
  return killing_deformation(geo, y.value(p), y.jacobian(p, metric.backend()));
}

Mat covariant_hessian(const LocalGeometry& geo, const Vec& grad, const Mat& hess) {
  Mat out = hess;
  for (int k = 0; k < geo.n; ++k) out -= grad(k) * geo.gamma[k];
  return out;
}

double inner_sym2(const Mat& ginv, const Mat& k, const Mat& l) {
  return (ginv * k * ginv).cwiseProduct(l).sum();
}

}  // namespace asymass
