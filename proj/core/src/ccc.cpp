#include "curvekit/ccc.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// m-th derivative of the block (a cos(w t), a sin(w t)): a phase shift by
// m*pi/2, kept exact through the (m mod 4) case split.
void block_derivative(double a, double w, double t, int m, double* out) {
  const double f = a * std::pow(w, m);
  const double c = std::cos(w * t);
  const double s = std::sin(w * t);
  switch (m % 4) {
    case 0: out[0] = f * c;  out[1] = f * s;  break;
    case 1: out[0] = -f * s; out[1] = f * c;  break;
    case 2: out[0] = -f * c; out[1] = -f * s; break;
    default: out[0] = f * s; out[1] = -f * c; break;
  }
}
}  // namespace

void CCCSpec::validate() const {
  if (!(a1 > 0.0)) throw SpecValidationError("a1 must be positive");
  if (!(a2 > 0.0)) throw SpecValidationError("a2 must be positive");
  if (!(scale > 0.0)) throw SpecValidationError("scale must be positive");
  if (m1 < 1 || m2 < 1) {
    throw SpecValidationError("m1, m2 must be positive integers (zero windings are prohibited)");
  }
  if (m1 == m2) {
    throw SpecValidationError("m1, m2 must be coprime and distinct (m1 = m2 gives a circle)");
  }
  if (std::gcd(m1, m2) != 1) {
    throw SpecValidationError("m1, m2 must be coprime and distinct");
  }
}

double closed_form_speed(const CCCSpec& spec) {
  const double w1 = spec.alpha1(), w2 = spec.alpha2();
  return std::sqrt(spec.a1 * spec.a1 * w1 * w1 + spec.a2 * spec.a2 * w2 * w2);
}

ClosedFormCurvatures closed_form_curvatures(const CCCSpec& spec) {
  spec.validate();
  const double w1 = spec.alpha1(), w2 = spec.alpha2();
  const double u = spec.a1 * spec.a1 * w1 * w1;
  const double v = spec.a2 * spec.a2 * w2 * w2;
  const double S = u + v;                      // (ds/dt)^2
  const double R = u * w1 * w1 + v * w2 * w2;  // a1^2 w1^4 + a2^2 w2^4
  ClosedFormCurvatures k;
  k.k1 = std::sqrt(R) / S;
  k.k2 = spec.a1 * spec.a2 * w1 * w2 * std::abs(w1 * w1 - w2 * w2) / (S * std::sqrt(R));
  k.k3 = w1 * w2 / std::sqrt(R);
  return k;
}

double minimal_period(const CCCSpec& spec) {
  spec.validate();
  return kTwoPi * spec.m1 / spec.alpha1();
}

double total_mixed_curvature_exact(const CCCSpec& spec) {
  spec.validate();
  const double m1 = spec.m1, m2 = spec.m2;
  return kTwoPi * std::sqrt(m1 * m1 + m2 * m2);
}

ParametricCurve make_torus_curve(double a1, double alpha1, double a2, double alpha2,
                                 double period, std::string label) {
  auto deriv = [a1, alpha1, a2, alpha2](double t, int order) -> Vector {
    Vector d(4);
    block_derivative(a1, alpha1, t, order, d.data());
    block_derivative(a2, alpha2, t, order, d.data() + 2);
    return d;
  };
  auto pos = [deriv](double t) -> Vector { return deriv(t, 0); };
  return ParametricCurve::analytic(4, period, pos, deriv, std::move(label));
}

ParametricCurve make_ccc(const CCCSpec& spec) {
  spec.validate();
  std::ostringstream label;
  label << "ccc(a1=" << spec.a1 << ",a2=" << spec.a2 << ",m1=" << spec.m1 << ",m2=" << spec.m2
        << ",scale=" << spec.scale << ")";
  return make_torus_curve(spec.a1, spec.alpha1(), spec.a2, spec.alpha2(), minimal_period(spec),
                          label.str());
}

std::vector<MinimalValueResult> minimal_admissible_values(int search_bound, int count) {
  if (search_bound < 3) throw SpecValidationError("search bound must be >= 3");
  // Key on the integer m1^2 + m2^2 so equal values group exactly.
  std::map<long, std::vector<std::pair<int, int>>> by_norm;
  for (int m1 = 1; m1 <= search_bound; ++m1) {
    for (int m2 = 1; m2 <= search_bound; ++m2) {
      if (m1 == m2 || std::gcd(m1, m2) != 1) continue;
      by_norm[static_cast<long>(m1) * m1 + static_cast<long>(m2) * m2].emplace_back(m1, m2);
    }
  }
  std::vector<MinimalValueResult> ranked;
  for (const auto& [norm, pairs] : by_norm) {
    if (static_cast<int>(ranked.size()) == count) break;
    ranked.push_back({kTwoPi * std::sqrt(static_cast<double>(norm)), pairs});
  }
  return ranked;
}

MinimalValueResult minimal_admissible_value(int search_bound) {
  return minimal_admissible_values(search_bound, 1).front();
}

double EvenCCCSpec::period() const { return kTwoPi / scale; }

void EvenCCCSpec::validate() const {
  if (amplitudes.size() < 2) throw SpecValidationError("need at least two frequency blocks");
  if (amplitudes.size() != m.size()) {
    throw SpecValidationError("amplitude and winding lists must have equal length");
  }
  if (!(scale > 0.0)) throw SpecValidationError("scale must be positive");
  for (double a : amplitudes) {
    if (!(a > 0.0)) throw SpecValidationError("amplitudes must be positive");
  }
  int g = 0;
  for (int mi : m) {
    if (mi < 1) throw SpecValidationError("windings must be positive integers");
    g = std::gcd(g, mi);
  }
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = i + 1; j < m.size(); ++j) {
      if (m[i] == m[j]) throw SpecValidationError("windings must be pairwise distinct");
    }
  }
  if (g != 1) throw SpecValidationError("windings must have overall gcd 1 (period not minimal)");
}

ParametricCurve make_even_ccc(const EvenCCCSpec& spec) {
  spec.validate();
  const int n = spec.blocks();
  std::vector<double> amps = spec.amplitudes;
  std::vector<double> freqs(n);
  for (int i = 0; i < n; ++i) freqs[i] = spec.alpha(i);
  auto deriv = [amps, freqs, n](double t, int order) -> Vector {
    Vector d(2 * n);
    for (int i = 0; i < n; ++i) block_derivative(amps[i], freqs[i], t, order, d.data() + 2 * i);
    return d;
  };
  auto pos = [deriv](double t) -> Vector { return deriv(t, 0); };
  std::ostringstream label;
  label << "even_ccc(n=" << n << ",m=";
  for (int i = 0; i < n; ++i) label << (i ? "," : "") << spec.m[i];
  label << ",scale=" << spec.scale << ")";
  return ParametricCurve::analytic(2 * n, spec.period(), pos, deriv, label.str());
}

}  // namespace curvekit
