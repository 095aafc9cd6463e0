#pragma once

#include "classcoupler/random_stream.h"

namespace classcoupler {

struct Normal_params {
  double mean;
  double variance;

  Normal_params(double mean, double variance);
};

// Inverse gamma on v, parametrized through the reciprocal: 1/v ~ Gamma(shape, rate),
// so E[1/v] = shape/rate and Var[1/v] = shape/rate^2.
struct Inv_gamma_params {
  double shape;
  double rate;

  Inv_gamma_params(double shape, double rate);
};

// p * delta_{atom_location} + (1 - p) * N(slab)
struct Atom_mixture_prior {
  double atom_weight;
  double atom_location;
  Normal_params slab;

  Atom_mixture_prior(double atom_weight, double atom_location, Normal_params slab);
};

// Uniform variate on [0, 1). Consumes one word of the stream.
auto uniform01(Uniform_stream& stream) -> double;

// Box-Muller; consumes exactly two words of the stream.
auto normal_sample(Uniform_stream& stream, const Normal_params& params) -> double;
auto normal_logpdf(double x, const Normal_params& params) -> double;

// Inverse-CDF of the reciprocal gamma; consumes exactly one word of the stream.
auto invgamma_sample(Uniform_stream& stream, const Inv_gamma_params& params) -> double;
// Throws std::domain_error for v <= 0.
auto invgamma_logpdf(double v, const Inv_gamma_params& params) -> double;

}  // namespace classcoupler
