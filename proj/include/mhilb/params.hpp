#ifndef MHILB_PARAMS_HPP
#define MHILB_PARAMS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mhilb {

/// Conjugate exponent p' with 1/p + 1/p' = 1. Throws std::domain_error for
/// p <= 1. Involutive to within 1 ulp.
double conjugate_exponent(double p);

/// Parameter tuple (p, alpha, beta, gamma, mu, nu) of the generalized
/// kernel family, plus the derived conjugate exponent. Single source of
/// truth for every kernel evaluation.
///
/// mu and nu are deliberately unconstrained here; the classifier decides
/// what the admissible ranges mean. The remaining fields are validated:
/// p > 1, 0 < alpha <= 1, 0 < beta <= 1, gamma > 0.
struct OperatorParams {
  double p;
  double alpha;
  double beta;
  double gamma;
  double mu;
  double nu;
  double p_conj;

  OperatorParams(double p_, double alpha_, double beta_, double gamma_,
                 double mu_, double nu_);

  /// Exponent on the boundary of the bounded region, 1 + (mu - nu)/p.
  double critical_gamma() const { return 1.0 + (mu - nu) / p; }

  /// True when both weight exponents lie in the open interval (-1, p-1).
  bool weights_in_range() const {
    return mu > -1.0 && mu < p - 1.0 && nu > -1.0 && nu < p - 1.0;
  }

  /// Copy with a different gamma.
  OperatorParams with_gamma(double g) const {
    return OperatorParams(p, alpha, beta, g, mu, nu);
  }
};

/// Finite real sequence a_2, a_3, ..., a_{N}; the index origin is pinned at
/// 2 (the kernels are singular at index 1).
class WeightedSequence {
 public:
  static constexpr std::int64_t kStartIndex = 2;

  WeightedSequence() = default;
  explicit WeightedSequence(std::vector<double> values);

  std::int64_t last_index() const {
    return kStartIndex + static_cast<std::int64_t>(values_.size()) - 1;
  }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  /// a_n for n in [2, last_index()].
  double at(std::int64_t n) const { return values_[static_cast<std::size_t>(n - kStartIndex)]; }

  std::span<const double> values() const { return values_; }
  std::vector<double>& mutable_values() { return values_; }

 private:
  std::vector<double> values_;
};

/// (sum |a_n|^p)^{1/p} with the deterministic fixed-tree reduction.
/// Throws std::domain_error for p <= 1.
double lp_norm(const WeightedSequence& a, double p);

/// The near-extremizing family
///   a_n = eps^{1/p} n^{-1/p} (log n)^{-(1 + beta*eps)/p},  n = 2..N.
/// Entries are strictly positive and strictly decreasing for n >= 3.
WeightedSequence extremal_sequence(const OperatorParams& params, double eps,
                                   std::int64_t N);

} // namespace mhilb

#endif
