#include "dunkl/dunkl3d.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {

namespace {

// sin^p(x) and its first two derivatives, written to avoid 0 * inf at the poles.
struct PowerEval {
  double value;
  double d1;
  double d2;
};

PowerEval sin_power(int p, double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  switch (p) {
    case 0:
      return {1.0, 0.0, 0.0};
    case 1:
      return {s, c, -s};
    default: {
      const double sp2 = std::pow(s, p - 2);
      return {sp2 * s * s, p * sp2 * s * c, p * (p - 1) * sp2 * c * c - p * sp2 * s * s};
    }
  }
}

PowerEval cos_flag(int a, double x) {
  if (a == 0) return {1.0, 0.0, 0.0};
  return {std::cos(x), -std::sin(x), -std::cos(x)};
}

PowerEval sin_flag(int a, double x) {
  if (a == 0) return {1.0, 0.0, 0.0};
  return {std::sin(x), std::cos(x), -std::sin(x)};
}

PowerEval product(const PowerEval& f, const PowerEval& g) {
  return {f.value * g.value, f.d1 * g.value + f.value * g.d1, f.d2 * g.value + 2.0 * f.d1 * g.d1 + f.value * g.d2};
}

// g(x) * P(cos 2x) with derivatives in x.
AngularEval with_jacobi(const PowerEval& g, int degree, double a, double b, double x) {
  const double u = std::cos(2.0 * x);
  const double du = -2.0 * std::sin(2.0 * x);
  const double d2u = -4.0 * u;
  const auto p = specfun::jacobi(degree, a, b, u);
  const double p2 = specfun::jacobi_second_derivative(degree, a, b, u);
  const double pd1 = p.derivative * du;
  const double pd2 = p2 * du * du + p.derivative * d2u;
  return {g.value * p.value, g.d1 * p.value + g.value * pd1, g.d2 * p.value + 2.0 * g.d1 * pd1 + g.value * pd2};
}

struct AzimuthalParams {
  int degree;
  double alpha;
  double beta;
};

AzimuthalParams azimuthal_params(const Dunkl3DModel& model, const StateSpec3D& spec) {
  const int a1 = odd_flag(spec.s[0]);
  const int a2 = odd_flag(spec.s[1]);
  return {azimuthal_degree(spec), model.mu()[1] + a2 - 0.5, model.mu()[0] + a1 - 0.5};
}

AzimuthalParams polar_params(const Dunkl3DModel& model, const StateSpec3D& spec) {
  const int a3 = odd_flag(spec.s[2]);
  return {polar_degree(spec), spec.m.twice() + model.mu()[0] + model.mu()[1], model.mu()[2] + a3 - 0.5};
}

// Integral over u in [-1, 1] of (1-u)^alpha (1+u)^beta P^2 du by exact Gauss-Jacobi quadrature.
double jacobi_square_norm(const AzimuthalParams& p) {
  const auto rule = specfun::gauss_jacobi(p.degree + 2, p.alpha, p.beta);
  return rule.integrate([&](double u) {
    const double v = specfun::jacobi(p.degree, p.alpha, p.beta, u).value;
    return v * v;
  });
}

Normalization3D compute_normalization(const Dunkl3DModel& model, const StateSpec3D& spec) {
  // Under u = cos 2x, cos^2 x = (1+u)/2, sin^2 x = (1-u)/2 and dx = du / (2 sqrt(1-u^2)), so
  // each quarter (azimuthal) or half (polar) period contributes 2^{-(alpha+beta+2)} J.
  const auto az = azimuthal_params(model, spec);
  const double az_full = 4.0 * std::exp2(-(az.alpha + az.beta + 2.0)) * jacobi_square_norm(az);
  const auto po = polar_params(model, spec);
  const double po_full = 2.0 * std::exp2(-(po.alpha + po.beta + 2.0)) * jacobi_square_norm(po);

  // Integral of Upsilon^2 over kappa with u = kappa^2/hbar:
  //   C^2 hbar^{sigma+1} / 2 * integral u^sigma e^{-u} L^2 du.
  const double sigma = separation_constants(model, spec).sigma;
  const auto rule = specfun::gauss_laguerre(spec.n_r + 2, sigma);
  const double lag = rule.integrate([&](double u) {
    const double v = specfun::laguerre(spec.n_r, sigma, u).value;
    return v * v;
  });
  const double radial_sq = 0.5 * std::pow(model.hbar(), sigma + 1.0) * lag;
  return {1.0 / std::sqrt(radial_sq), 1.0 / std::sqrt(po_full), 1.0 / std::sqrt(az_full)};
}

using CacheKey = std::tuple<double, double, double, double, int, int, int, int, int, int>;

CacheKey cache_key(const Dunkl3DModel& model, const StateSpec3D& spec) {
  return {model.mu()[0], model.mu()[1], model.mu()[2], model.hbar(), spec.n_r, spec.l.twice(), spec.m.twice(),
          sign(spec.s[0]), sign(spec.s[1]), sign(spec.s[2])};
}

class NormalizationCache {
 public:
  Normalization3D get(const Dunkl3DModel& model, const StateSpec3D& spec) {
    const auto key = cache_key(model, spec);
    {
      std::shared_lock lock(mutex_);
      if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    }
    // Computed outside the lock; racing initializers produce the same value.
    const auto value = compute_normalization(model, spec);
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(key, value).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<CacheKey, Normalization3D> entries_;
};

NormalizationCache& normalization_cache() {
  static NormalizationCache cache;
  return cache;
}

}  // namespace

HalfInteger HalfInteger::from_double(double v) {
  const double twice = 2.0 * v;
  if (!std::isfinite(twice) || twice != std::round(twice) || std::abs(twice) > 1e9) {
    throw DomainError("value " + std::to_string(v) + " is not an integer or half-integer");
  }
  return HalfInteger(static_cast<int>(std::lround(twice)));
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

Dunkl3DModel::Dunkl3DModel(std::array<double, 3> mu, double hbar) : mu_(mu), hbar_(hbar) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(mu[i] >= 0.0) || !std::isfinite(mu[i])) {
      throw DomainError("Dunkl3DModel: mu" + std::to_string(i + 1) + " must be a finite value >= 0, got " +
                        std::to_string(mu[i]));
    }
  }
  if (!(hbar > 0.0)) throw DomainError("Dunkl3DModel: hbar must be positive");
}

void validate(const StateSpec3D& spec) {
  if (spec.n_r < 0) throw DomainError("StateSpec3D: n_r must be non-negative");
  if (spec.m.twice() < 0) throw DomainError("StateSpec3D: m must be non-negative");
  if (spec.l.twice() < 0) throw DomainError("StateSpec3D: l must be non-negative");
  const bool mixed = sign(spec.s[0]) * sign(spec.s[1]) == -1;
  if (mixed && spec.m.is_integer()) {
    throw DomainError("StateSpec3D: m must be a positive half-integer when s1*s2 = -1, got m=" + spec.m.to_string());
  }
  if (!mixed && !spec.m.is_integer()) {
    throw DomainError("StateSpec3D: m must be an integer when s1*s2 = +1, got m=" + spec.m.to_string());
  }
  if (spec.s[2] == Parity::odd && spec.l.is_integer()) {
    throw DomainError("StateSpec3D: l must be a positive half-integer when s3 = -1, got l=" + spec.l.to_string());
  }
  if (spec.s[2] == Parity::even && !spec.l.is_integer()) {
    throw DomainError("StateSpec3D: l must be an integer when s3 = +1, got l=" + spec.l.to_string());
  }
  if (spec.m.twice() - odd_flag(spec.s[0]) - odd_flag(spec.s[1]) < 0) {
    throw DomainError("StateSpec3D: azimuthal Jacobi degree m - (a1+a2)/2 is negative (m >= 1 when s1 = s2 = -1)");
  }
}

int azimuthal_degree(const StateSpec3D& spec) {
  validate(spec);
  return (spec.m.twice() - odd_flag(spec.s[0]) - odd_flag(spec.s[1])) / 2;
}

int polar_degree(const StateSpec3D& spec) {
  validate(spec);
  return (spec.l.twice() - odd_flag(spec.s[2])) / 2;
}

SeparationConstants separation_constants(const Dunkl3DModel& model, const StateSpec3D& spec) {
  validate(spec);
  const auto& mu = model.mu();
  const double m = spec.m.value();
  const double lm = spec.l.value() + m;
  const double k_sq = 4.0 * m * (m + mu[0] + mu[1]);
  const double q_sq = 4.0 * lm * (lm + mu[0] + mu[1] + mu[2] + 0.5);
  const double delta = model.delta();
  return {k_sq, q_sq, std::sqrt(0.25 + delta * (delta - 1.0) + q_sq)};
}

double eigenvalue_3d(const Dunkl3DModel& model, const StateSpec3D& spec) {
  return model.hbar() * (2.0 * spec.n_r + separation_constants(model, spec).sigma + 1.0);
}

Normalization3D normalization_constants_3d(const Dunkl3DModel& model, const StateSpec3D& spec) {
  validate(spec);
  return normalization_cache().get(model, spec);
}

AngularEval azimuthal_eigenfunction(const Dunkl3DModel& model, const StateSpec3D& spec, double phi) {
  const auto p = azimuthal_params(model, spec);
  const auto g = product(cos_flag(odd_flag(spec.s[0]), phi), sin_flag(odd_flag(spec.s[1]), phi));
  const auto f = with_jacobi(g, p.degree, p.alpha, p.beta, phi);
  const double c = normalization_constants_3d(model, spec).azimuthal;
  return {c * f.value, c * f.d1, c * f.d2};
}

AngularEval polar_eigenfunction(const Dunkl3DModel& model, const StateSpec3D& spec, double theta) {
  const auto p = polar_params(model, spec);
  const auto g = product(cos_flag(odd_flag(spec.s[2]), theta), sin_power(spec.m.twice(), theta));
  const auto f = with_jacobi(g, p.degree, p.alpha, p.beta, theta);
  const double c = normalization_constants_3d(model, spec).polar;
  return {c * f.value, c * f.d1, c * f.d2};
}

double radial_eigenfunction(const Dunkl3DModel& model, const StateSpec3D& spec, double kappa) {
  if (!(kappa >= 0.0)) throw DomainError("radial_eigenfunction: kappa must be non-negative");
  const double sigma = separation_constants(model, spec).sigma;
  const double u = kappa * kappa / model.hbar();
  const double c = normalization_constants_3d(model, spec).radial;
  return c * std::pow(kappa, sigma + 0.5) * std::exp(-0.5 * u) * specfun::laguerre(spec.n_r, sigma, u).value;
}

double phase_3d(const Dunkl3DModel& model, const StateSpec3D& spec, const dynamics::TrajectoryPoint& at) {
  return -(eigenvalue_3d(model, spec) / model.hbar()) * at.theta;
}

double phase_3d(const Dunkl3DModel& model, const StateSpec3D& spec, const dynamics::PinneyTrajectory& trajectory,
                double t) {
  return -(eigenvalue_3d(model, spec) / model.hbar()) * dynamics::phase_base(trajectory, t);
}

std::complex<double> wavefunction_3d(const Dunkl3DModel& model, const StateSpec3D& spec, double r, double theta,
                                     double phi, const dynamics::TrajectoryPoint& at) {
  if (!(r > 0.0)) throw DomainError("wavefunction_3d: r must be positive");
  // With kappa = r/rho, the integral of |psi|^2 r^{2 delta} dr equals the integral of
  // Upsilon^2 dkappa exactly when the amplitude carries rho^{-1/2}.
  const double amplitude = std::pow(at.rho, -0.5) * std::pow(r, -model.delta()) *
                           radial_eigenfunction(model, spec, r / at.rho) * polar_eigenfunction(model, spec, theta).value *
                           azimuthal_eigenfunction(model, spec, phi).value;
  const double chirp = at.mass * at.rho_dot * r * r / (2.0 * model.hbar() * at.rho);
  return std::polar(1.0, chirp + phase_3d(model, spec, at)) * amplitude;
}

double angular_weight(const Dunkl3DModel& model, double theta, double phi) {
  const auto& mu = model.mu();
  const auto pw = [](double base, double e) { return e == 0.0 ? 1.0 : std::pow(std::abs(base), e); };
  return pw(std::sin(theta), 2.0 * (mu[0] + mu[1])) * pw(std::cos(theta), 2.0 * mu[2]) *
         pw(std::sin(phi), 2.0 * mu[1]) * pw(std::cos(phi), 2.0 * mu[0]) * std::sin(theta);
}

double radial_weight(const Dunkl3DModel& model, double r) { return std::pow(r, 2.0 * model.delta()); }

}  // namespace dunkl
