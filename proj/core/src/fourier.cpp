#include "curvekit/fourier.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "curvekit/errors.hpp"

namespace curvekit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

FourierCurveSpec FourierCurveSpec::zero(int harmonics) {
  FourierCurveSpec s;
  s.harmonics = harmonics;
  for (int i = 0; i < 4; ++i) {
    s.cos_coeffs[i].assign(harmonics, 0.0);
    s.sin_coeffs[i].assign(harmonics, 0.0);
  }
  return s;
}

void FourierCurveSpec::validate() const {
  if (harmonics < 1) throw SpecValidationError("need at least one harmonic");
  bool any = false;
  for (int i = 0; i < 4; ++i) {
    if (static_cast<int>(cos_coeffs[i].size()) != harmonics ||
        static_cast<int>(sin_coeffs[i].size()) != harmonics) {
      throw SpecValidationError("coefficient lists must have length H per coordinate");
    }
    for (double c : cos_coeffs[i]) any = any || c != 0.0;
    for (double d : sin_coeffs[i]) any = any || d != 0.0;
  }
  if (!any) throw SpecValidationError("all coefficients vanish: not a curve");
}

Eigen::VectorXd FourierCurveSpec::pack() const {
  Eigen::VectorXd p(parameter_count());
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int h = 0; h < harmonics; ++h) p[k++] = cos_coeffs[i][h];
    for (int h = 0; h < harmonics; ++h) p[k++] = sin_coeffs[i][h];
  }
  return p;
}

FourierCurveSpec FourierCurveSpec::unpack(const Eigen::VectorXd& params, int harmonics) {
  if (params.size() != 8 * harmonics) {
    throw SpecValidationError("parameter vector length does not match 8*H");
  }
  FourierCurveSpec s = zero(harmonics);
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int h = 0; h < harmonics; ++h) s.cos_coeffs[i][h] = params[k++];
    for (int h = 0; h < harmonics; ++h) s.sin_coeffs[i][h] = params[k++];
  }
  return s;
}

ParametricCurve make_fourier_curve(const FourierCurveSpec& spec, bool check_regularity) {
  spec.validate();
  const FourierCurveSpec s = spec;
  auto deriv = [s](double t, int order) -> Vector {
    Vector out = Vector::Zero(4);
    for (int h = 1; h <= s.harmonics; ++h) {
      const double f = std::pow(static_cast<double>(h), order);
      const double c = std::cos(h * t);
      const double sn = std::sin(h * t);
      // d^m/dt^m of (a cos ht + b sin ht), exact through the phase case split
      double cc, ss;
      switch (order % 4) {
        case 0: cc = c;   ss = sn;  break;
        case 1: cc = -sn; ss = c;   break;
        case 2: cc = -c;  ss = -sn; break;
        default: cc = sn; ss = -c;  break;
      }
      for (int i = 0; i < 4; ++i) {
        out[i] += f * (s.cos_coeffs[i][h - 1] * cc + s.sin_coeffs[i][h - 1] * ss);
      }
    }
    return out;
  };
  auto pos = [deriv](double t) -> Vector { return deriv(t, 0); };
  std::ostringstream label;
  label << "fourier(H=" << s.harmonics << ")";
  ParametricCurve curve = ParametricCurve::analytic(4, kTwoPi, pos, deriv, label.str());
  if (check_regularity) {
    for (int i = 0; i < 256; ++i) {
      const double sp = curve.speed(kTwoPi * i / 256);
      if (sp < kFourierSpeedFloor) {
        throw IrregularCurveError("fourier curve speed " + std::to_string(sp) +
                                  " below floor at sample " + std::to_string(i));
      }
    }
  }
  return curve;
}

FourierCurveSpec fourier_embedding(const CCCSpec& spec) {
  spec.validate();
  if (spec.scale != 1.0) {
    throw SpecValidationError("fourier embedding requires scale = 1 (period 2*pi)");
  }
  FourierCurveSpec s = FourierCurveSpec::zero(std::max(spec.m1, spec.m2));
  s.cos_coeffs[0][spec.m1 - 1] = spec.a1;
  s.sin_coeffs[1][spec.m1 - 1] = spec.a1;
  s.cos_coeffs[2][spec.m2 - 1] = spec.a2;
  s.sin_coeffs[3][spec.m2 - 1] = spec.a2;
  return s;
}

FourierCurveSpec lifted_to(const FourierCurveSpec& spec, int harmonics) {
  spec.validate();
  if (harmonics < spec.harmonics) {
    throw SpecValidationError("cannot lift a spec into fewer harmonics");
  }
  FourierCurveSpec out = FourierCurveSpec::zero(harmonics);
  for (int i = 0; i < 4; ++i) {
    for (int h = 0; h < spec.harmonics; ++h) {
      out.cos_coeffs[i][h] = spec.cos_coeffs[i][h];
      out.sin_coeffs[i][h] = spec.sin_coeffs[i][h];
    }
  }
  return out;
}

FourierCurveSpec perturbed(const FourierCurveSpec& spec, std::uint64_t seed, double magnitude) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-magnitude, magnitude);
  FourierCurveSpec out = spec;
  for (int i = 0; i < 4; ++i) {
    for (int h = 0; h < spec.harmonics; ++h) out.cos_coeffs[i][h] += u(rng);
    for (int h = 0; h < spec.harmonics; ++h) out.sin_coeffs[i][h] += u(rng);
  }
  return out;
}

}  // namespace curvekit
