#include <boost/math/interpolators/makima.hpp>
#include <cmath>
#include <string>

#include "dunkl/dynamics.hpp"
#include "dunkl/errors.hpp"

namespace dunkl::dynamics {

struct Tabulated::Interpolant {
  boost::math::interpolators::makima<std::vector<double>> spline;
};

Tabulated::Tabulated(std::vector<double> times, std::vector<double> values)
    : times_(std::move(times)), values_(std::move(values)) {
  if (times_.size() != values_.size()) throw DomainError("tabulated profile: times/values length mismatch");
  if (times_.size() < 4) throw DomainError("tabulated profile: need at least 4 samples");
  for (std::size_t i = 1; i < times_.size(); ++i) {
    if (!(times_[i] > times_[i - 1])) throw DomainError("tabulated profile: times must be strictly increasing");
  }
  auto x = times_;
  auto y = values_;
  spline_ = std::make_shared<const Interpolant>(
      Interpolant{boost::math::interpolators::makima<std::vector<double>>(std::move(x), std::move(y))});
}

double Tabulated::value(double t) const {
  if (t < times_.front() || t > times_.back()) {
    throw DomainError("tabulated profile: t = " + std::to_string(t) + " outside table range");
  }
  return spline_->spline(t);
}

double Tabulated::derivative(double t) const {
  if (t < times_.front() || t > times_.back()) {
    throw DomainError("tabulated profile: t = " + std::to_string(t) + " outside table range");
  }
  return spline_->spline.prime(t);
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ProfileValue evaluate_profile(const TimeProfile& profile, double t) {
  return std::visit(
      overloaded{
          [](const Constant& p) { return ProfileValue{p.c, 0.0}; },
          [t](const Linear& p) { return ProfileValue{p.c0 + p.rate * t, p.rate}; },
          [t](const Exponential& p) {
            const double v = p.c0 * std::exp(p.gamma * t);
            return ProfileValue{v, p.gamma * v};
          },
          [t](const Sinusoidal& p) {
            return ProfileValue{p.c0 * (1.0 + p.amplitude * std::cos(p.rate * t)),
                                -p.c0 * p.amplitude * p.rate * std::sin(p.rate * t)};
          },
          [t](const Tabulated& p) { return ProfileValue{p.value(t), p.derivative(t)}; },
      },
      profile);
}

std::string_view profile_kind(const TimeProfile& profile) {
  return std::visit(overloaded{
                        [](const Constant&) { return std::string_view{"constant"}; },
                        [](const Linear&) { return std::string_view{"linear"}; },
                        [](const Exponential&) { return std::string_view{"exponential"}; },
                        [](const Sinusoidal&) { return std::string_view{"sinusoidal"}; },
                        [](const Tabulated&) { return std::string_view{"tabulated"}; },
                    },
                    profile);
}

Scenario::Scenario(TimeProfile mass, TimeProfile frequency, FrequencyForm form, double hbar,
                   double t_end)
    : mass_(std::move(mass)), frequency_(std::move(frequency)), form_(form), hbar_(hbar), t_end_(t_end) {
  if (!(hbar_ > 0.0)) throw DomainError("scenario: hbar must be positive");
  if (!(t_end_ > 0.0)) throw DomainError("scenario: t_end must exceed t0 = 0");
  // A profile dipping non-positive strictly between samples goes unnoticed.
  constexpr int kSamples = 1000;
  for (int i = 0; i < kSamples; ++i) {
    const double t = t_end_ * i / (kSamples - 1);
    if (!(evaluate_profile(mass_, t).value > 0.0)) {
      throw DomainError("scenario: mass profile not positive at t = " + std::to_string(t));
    }
    if (!(evaluate_profile(frequency_, t).value > 0.0)) {
      throw DomainError(std::string("scenario: ") + (form_ == FrequencyForm::omega ? "omega" : "omega^2") +
                        " profile not positive at t = " + std::to_string(t));
    }
  }
}

Scenario Scenario::stationary(double mass, double omega, double hbar, double t_end) {
  return Scenario(Constant{mass}, Constant{omega}, FrequencyForm::omega, hbar, t_end);
}

double Scenario::omega_sq(double t) const {
  const double f = evaluate_profile(frequency_, t).value;
  return form_ == FrequencyForm::omega ? f * f : f;
}

double Scenario::omega(double t) const {
  const double f = evaluate_profile(frequency_, t).value;
  return form_ == FrequencyForm::omega ? f : std::sqrt(f);
}

}  // namespace dunkl::dynamics
