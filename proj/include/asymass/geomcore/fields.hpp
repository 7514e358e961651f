#pragma once

#include <functional>
#include <vector>

#include "asymass/geomcore/backend.hpp"
#include "asymass/geomcore/jet.hpp"
#include "asymass/geomcore/metric_field.hpp"
#include "asymass/geomcore/types.hpp"

namespace asymass {

/// Scalar field with an optional jet evaluator. When the jet is present and
/// the backend is analytic, gradients and Hessians are exact.
class ScalarField {
 public:
  using ValueFn = std::function<double(const Point&)>;
  using JetFn = std::function<Jet(const std::vector<Jet>&)>;

  ScalarField() = default;
  ScalarField(int dim, ValueFn value) : dim_(dim), value_(std::move(value)) {}
  static ScalarField from_jets(int dim, JetFn fn);

  int dim() const { return dim_; }
  bool has_jet() const { return static_cast<bool>(jet_); }
  double value(const Point& p) const { return value_(p); }
  Vec gradient(const Point& p, const Backend& backend = {}) const;
  Mat hessian(const Point& p, const Backend& backend = {}) const;

 private:
  int dim_ = 0;
  ValueFn value_;
  JetFn jet_;
};

/// Vector field (contravariant components) with optional jet evaluator.
class VectorField {
 public:
  using ValueFn = std::function<Vec(const Point&)>;
  using JetFn = std::function<std::vector<Jet>(const std::vector<Jet>&)>;

  VectorField() = default;
  VectorField(int dim, ValueFn value) : dim_(dim), value_(std::move(value)) {}
  static VectorField from_jets(int dim, JetFn fn);

  int dim() const { return dim_; }
  bool has_jet() const { return static_cast<bool>(jet_); }
  Vec value(const Point& p) const { return value_(p); }
  /// J(i, k) = d_k Y^i.
  Mat jacobian(const Point& p, const Backend& backend = {}) const;

 private:
  int dim_ = 0;
  ValueFn value_;
  JetFn jet_;
};

/// Symmetric covariant 2-tensor field with optional jet evaluator.
class Sym2Field {
 public:
  using ValueFn = std::function<Mat(const Point&)>;
  using JetFn = std::function<JetSym(const std::vector<Jet>&)>;

  Sym2Field() = default;
  Sym2Field(int dim, ValueFn value) : dim_(dim), value_(std::move(value)) {}
  static Sym2Field from_jets(int dim, JetFn fn);
  /// The metric itself viewed as a symmetric 2-tensor field.
  static Sym2Field from_metric(const MetricField& metric);

  int dim() const { return dim_; }
  bool has_jet() const { return static_cast<bool>(jet_); }
  Mat value(const Point& p) const { return value_(p); }
  /// out[k] = d_k K.
  MatGrad derivative(const Point& p, const Backend& backend = {}) const;

 private:
  int dim_ = 0;
  ValueFn value_;
  JetFn jet_;
  std::function<MatGrad(const Point&)> exact_derivative_;
};

}  // namespace asymass
