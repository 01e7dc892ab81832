#include "mhilb/params.hpp"

#include <cmath>
#include <stdexcept>

#include "mhilb/reduce.hpp"

namespace mhilb {

double conjugate_exponent(double p) {
  if (!(std::isfinite(p) && p > 1.0)) {
    throw std::domain_error("conjugate_exponent: p must be a finite real > 1");
  }
  return 1.0 + 1.0 / (p - 1.0);
}

OperatorParams::OperatorParams(double p_, double alpha_, double beta_,
                               double gamma_, double mu_, double nu_)
    : p(p_), alpha(alpha_), beta(beta_), gamma(gamma_), mu(mu_), nu(nu_),
      p_conj(conjugate_exponent(p_)) {
  if (!(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0)) {
    throw std::domain_error("OperatorParams: alpha must lie in (0, 1]");
  }
  if (!(std::isfinite(beta) && beta > 0.0 && beta <= 1.0)) {
    throw std::domain_error("OperatorParams: beta must lie in (0, 1]");
  }
  if (!(std::isfinite(gamma) && gamma > 0.0)) {
    throw std::domain_error("OperatorParams: gamma must be positive");
  }
  if (!std::isfinite(mu) || !std::isfinite(nu)) {
    throw std::domain_error("OperatorParams: mu and nu must be finite");
  }
}

WeightedSequence::WeightedSequence(std::vector<double> values)
    : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::domain_error("WeightedSequence: entries must be finite");
    }
  }
}

double lp_norm(const WeightedSequence& a, double p) {
  if (!(std::isfinite(p) && p > 1.0)) {
    throw std::domain_error("lp_norm: p must be a finite real > 1");
  }
  PairwiseStream stream;
  double buf[kReduceBlock];
  std::span<const double> xs = a.values();
  std::size_t i = 0;
  while (i < xs.size()) {
    const std::size_t n =
        xs.size() - i < kReduceBlock ? xs.size() - i : kReduceBlock;
    if (p == 2.0) {
      for (std::size_t j = 0; j < n; ++j) buf[j] = xs[i + j] * xs[i + j];
    } else {
      for (std::size_t j = 0; j < n; ++j) buf[j] = std::pow(std::fabs(xs[i + j]), p);
    }
    for (std::size_t j = n; j < kReduceBlock; ++j) buf[j] = 0.0;
    stream.push(reduce_block(buf));
    i += n;
  }
  return std::pow(stream.total(), 1.0 / p);
}

WeightedSequence extremal_sequence(const OperatorParams& params, double eps,
                                   std::int64_t N) {
  if (!(std::isfinite(eps) && eps > 0.0)) {
    throw std::domain_error("extremal_sequence: eps must be positive");
  }
  if (N < WeightedSequence::kStartIndex) {
    throw std::domain_error("extremal_sequence: N must be >= 2");
  }
  const double inv_p = 1.0 / params.p;
  const double head = std::pow(eps, inv_p);
  const double log_exp = -(1.0 + params.beta * eps) / params.p;
  std::vector<double> vals(static_cast<std::size_t>(N - 1));
  for (std::int64_t n = 2; n <= N; ++n) {
    const double dn = static_cast<double>(n);
    vals[static_cast<std::size_t>(n - 2)] =
        head * std::pow(dn, -inv_p) * std::pow(std::log(dn), log_exp);
  }
  return WeightedSequence(std::move(vals));
}

} // namespace mhilb
