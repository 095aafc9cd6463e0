#include "classcoupler/distributions.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace classcoupler {

Normal_params::Normal_params(double mean, double variance) : mean{mean}, variance{variance} {
  if (!(variance > 0.0) || !std::isfinite(variance) || !std::isfinite(mean)) {
    throw std::invalid_argument{"normal variance must be finite and > 0, got " + std::to_string(variance)};
  }
}

Inv_gamma_params::Inv_gamma_params(double shape, double rate) : shape{shape}, rate{rate} {
  if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate)) {
    throw std::invalid_argument{"inverse gamma shape and rate must be finite and > 0"};
  }
}

Atom_mixture_prior::Atom_mixture_prior(double atom_weight, double atom_location, Normal_params slab)
    : atom_weight{atom_weight}, atom_location{atom_location}, slab{slab} {
  if (!(atom_weight > 0.0 && atom_weight < 1.0)) {
    throw std::invalid_argument{"atom weight must lie in (0, 1), got " + std::to_string(atom_weight)};
  }
  if (!std::isfinite(atom_location)) {
    throw std::invalid_argument{"atom location must be finite"};
  }
}

auto uniform01(Uniform_stream& stream) -> double { return stream.uniform01(); }

auto normal_sample(Uniform_stream& stream, const Normal_params& params) -> double {
  auto u1 = stream.uniform_open01();
  auto u2 = stream.uniform01();
  auto radius = std::sqrt(-2.0 * std::log(u1));
  auto z = radius * std::cos(2.0 * std::numbers::pi * u2);
  return params.mean + std::sqrt(params.variance) * z;
}

auto normal_logpdf(double x, const Normal_params& params) -> double {
  auto d = x - params.mean;
  return -0.5 * (std::log(2.0 * std::numbers::pi * params.variance) + d * d / params.variance);
}

auto invgamma_sample(Uniform_stream& stream, const Inv_gamma_params& params) -> double {
  auto u = stream.uniform_open01();
  // Shape 1 is the exponential, whose quantile has a closed form.
  auto precision = params.shape == 1.0
      ? -std::log1p(-u) / params.rate
      : boost::math::gamma_p_inv(params.shape, u) / params.rate;
  return 1.0 / precision;
}

auto invgamma_logpdf(double v, const Inv_gamma_params& params) -> double {
  if (!(v > 0.0)) {
    throw std::domain_error{"inverse gamma density needs v > 0, got " + std::to_string(v)};
  }
  return params.shape * std::log(params.rate) - std::lgamma(params.shape)
       - (params.shape + 1.0) * std::log(v) - params.rate / v;
}

}  // namespace classcoupler
