#include "curvekit/jet.hpp"

#include <cmath>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {
double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}
}  // namespace

double Jet::derivative(int k) const { return factorial(k) * c_[k]; }

Jet Jet::operator+(const Jet& o) const {
  Jet r(order());
  r.c_ = c_ + o.c_;
  return r;
}

Jet Jet::operator-(const Jet& o) const {
  Jet r(order());
  r.c_ = c_ - o.c_;
  return r;
}

Jet Jet::operator*(const Jet& o) const {
  const int n = order();
  Jet r(n);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int i = 0; i <= k; ++i) s += c_[i] * o.c_[k - i];
    r.c_[k] = s;
  }
  return r;
}

Jet Jet::operator/(const Jet& o) const {
  const int n = order();
  if (o.c_[0] == 0.0) throw NumericDomainError("jet division by zero constant term");
  Jet q(n);
  for (int k = 0; k <= n; ++k) {
    double s = c_[k];
    for (int i = 0; i < k; ++i) s -= q.c_[i] * o.c_[k - i];
    q.c_[k] = s / o.c_[0];
  }
  return q;
}

Jet Jet::operator*(double s) const {
  Jet r(order());
  r.c_ = c_ * s;
  return r;
}

Jet Jet::sqrt() const {
  const int n = order();
  if (!(c_[0] > 0.0)) throw NumericDomainError("jet sqrt of non-positive constant term");
  Jet s(n);
  s.c_[0] = std::sqrt(c_[0]);
  for (int k = 1; k <= n; ++k) {
    double acc = c_[k];
    for (int i = 1; i < k; ++i) acc -= s.c_[i] * s.c_[k - i];
    s.c_[k] = acc / (2.0 * s.c_[0]);
  }
  return s;
}

Jet dot(const VectorJet& a, const VectorJet& b) {
  Jet r(a.front().order());
  for (size_t i = 0; i < a.size(); ++i) r = r + a[i] * b[i];
  return r;
}

VectorJet curve_jet(const ParametricCurve& curve, double t, int shift, int order) {
  const int dim = curve.dimension();
  VectorJet jet(dim, Jet(order));
  double kfact = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfact *= k;
    const Vector d = (shift + k == 0) ? curve.position(t) : curve.derivative(t, shift + k);
    for (int i = 0; i < dim; ++i) jet[i].coeff(k) = d[i] / kfact;
  }
  return jet;
}

}  // namespace curvekit
