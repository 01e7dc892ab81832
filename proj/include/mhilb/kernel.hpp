#ifndef MHILB_KERNEL_HPP
#define MHILB_KERNEL_HPP

#include <cstdint>
#include <variant>

#include "mhilb/measure.hpp"
#include "mhilb/params.hpp"

namespace mhilb {

/// Kernel of the generalized family: entry(m, n) =
///   (log m)^{[(alpha-1)+alpha mu]/p} (log n)^{[(beta-1)-(p'-1) beta nu]/p'}
///   / ( m^{1/p} n^{1/p'} [(log m)^alpha + (log n)^beta]^gamma ).
struct StandardKernel {
  OperatorParams params;
};

/// Measure-weighted kernel: entry(m, n) =
///   (log m)^{mu/p} (log n)^{-nu/p} lambda[m n] / ( m^{1/p} n^{1/p'} ),
/// where lambda[k] is the Beta-type moment of the measure.
struct MeasureKernel {
  double p;
  double mu;
  double nu;
  double gamma;
  double p_conj;
  Measure measure;
};

/// Tagged choice of kernel family. All entries are nonnegative; standard
/// entries are strictly positive.
class KernelSpec {
 public:
  static KernelSpec standard(const OperatorParams& params) {
    return KernelSpec(StandardKernel{params});
  }
  static KernelSpec with_measure(double p, double mu, double nu, double gamma,
                                 Measure measure);

  bool is_standard() const {
    return std::holds_alternative<StandardKernel>(spec_);
  }
  const StandardKernel* standard_kernel() const {
    return std::get_if<StandardKernel>(&spec_);
  }
  const MeasureKernel* measure_kernel() const {
    return std::get_if<MeasureKernel>(&spec_);
  }

  double exponent() const;   // p
  double conjugate() const;  // p'

 private:
  explicit KernelSpec(StandardKernel k) : spec_(std::move(k)) {}
  explicit KernelSpec(MeasureKernel k) : spec_(std::move(k)) {}
  std::variant<StandardKernel, MeasureKernel> spec_;
};

/// Single kernel entry, m, n >= 2.
double entry(const KernelSpec& spec, std::int64_t m, std::int64_t n);

/// b_m = sum_{n=2}^{N} entry(m, n) a_n for m = 2 .. row_count+1, where N is
/// a's last index. Matrix-free: per-index factors are cached, entries are
/// streamed, and each row uses the fixed-tree reduction, so results are
/// bitwise reproducible and exactly linear in a.
WeightedSequence apply_truncated(const KernelSpec& spec,
                                 const WeightedSequence& a,
                                 std::int64_t row_count);

/// Same contraction against the transposed kernel: c_n = sum_m entry(m, n) y_m
/// for n = 2 .. col_count+1, with m running over y's index range.
WeightedSequence apply_transposed(const KernelSpec& spec,
                                  const WeightedSequence& y,
                                  std::int64_t col_count);

} // namespace mhilb

#endif
