#ifndef MHILB_MEASURE_HPP
#define MHILB_MEASURE_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mhilb {

/// Point mass w at position t, 0 < t < 1. Masses at t = 0 are rejected:
/// the moment integrand t^{log n - 1} is non-integrable there for n < e.
struct Atom {
  double t;
  double w;
};

/// Constant density c on [a, b), 0 <= a < b <= 1, c >= 0.
struct Piece {
  double a;
  double b;
  double c;
};

/// Positive measure on [0, 1): finitely many atoms plus a piecewise
/// constant density. Pieces must be disjoint; they are stored sorted.
/// The empty measure (zero mass) is allowed.
class Measure {
 public:
  Measure() = default;
  Measure(std::vector<Atom> atoms, std::vector<Piece> pieces);

  std::span<const Atom> atoms() const { return atoms_; }
  std::span<const Piece> pieces() const { return pieces_; }
  double total_mass() const;
  bool empty() const { return atoms_.empty() && pieces_.empty(); }

  /// Unit density on [0, 1).
  static Measure lebesgue();

 private:
  std::vector<Atom> atoms_;
  std::vector<Piece> pieces_;
};

/// Beta-type moment
///   lambda[n] = int_{[0,1)} t^{log n - 1} (1 - t)^{gamma - 1} dlambda(t),
/// n >= 2, gamma > 0. Atoms are summed directly; density pieces reduce to
/// regularized incomplete Beta differences.
double moment(const Measure& measure, double gamma, std::int64_t n);

/// lambda([t, 1)), t in [0, 1).
double tail_mass(const Measure& measure, double t);

/// tau([t, 1)) for dtau(u) = (1 - u)^{gamma - 1} dlambda(u), gamma > 0.
double weighted_tail_mass(const Measure& measure, double gamma, double t);

/// Supremum scan of tail(t)/(1-t)^s with its witness. `constant` is the
/// supremum over the candidate set (atom positions, piece endpoints, and a
/// uniform grid of 1e4 points up to 1 - 1e-6); `is_carleson` is decided
/// analytically per piece, so the verdict is exact for this measure class
/// even though the constant is a finite-candidate approximation.
struct CarlesonReport {
  double s;
  double constant;
  double witness_t;
  bool is_carleson;
};

CarlesonReport carleson_constant(const Measure& measure, bool gamma_weighted,
                                 double gamma, double s);

/// min/max of lambda[n] (log n)^gamma over the given n values.
struct MomentDecayReport {
  double min_value;
  double max_value;
  std::vector<std::pair<std::int64_t, double>> values;
};

MomentDecayReport moment_decay_check(const Measure& measure, double gamma,
                                     std::span<const std::int64_t> n_values);

} // namespace mhilb

#endif
