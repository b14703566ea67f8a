#pragma once

// Neron-Severi lattice model: an integral symmetric form of signature
// (1, rho - 1), the positive cone, and bounded enumeration of classes.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "thetawalls/exact.hpp"

namespace thetawalls {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

struct DivisorClass {
  IntVector coords;

  friend bool operator==(const DivisorClass &, const DivisorClass &) = default;
  friend bool operator<(const DivisorClass &a, const DivisorClass &b) { return a.coords < b.coords; }
};

DivisorClass make_class(std::initializer_list<long> coords);

class NSLattice {
 public:
  /// gram must be square and symmetric (NotSymmetric / DimensionMismatch otherwise).
  explicit NSLattice(IntMatrix gram);

  std::size_t rank() const { return gram_.size(); }
  const IntMatrix &gram() const { return gram_; }

 private:
  IntMatrix gram_;
};

/// Counts of positive, negative and zero entries after congruent
/// diagonalization over Q.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric rational matrix.
Inertia inertia(std::vector<std::vector<Rational>> m);

Integer pair(const NSLattice &L, const DivisorClass &x, const DivisorClass &y);

/// Signature is exactly (1, rho - 1); degenerate forms are rejected.
bool verify_signature(const NSLattice &L);

bool in_positive_cone(const NSLattice &L, const DivisorClass &x, const DivisorClass &h);

/// (D.H)^2 >= D^2 H^2.
bool hodge_inequality_holds(const NSLattice &L, const DivisorClass &D, const DivisorClass &H);

inline constexpr std::uint64_t kDefaultBallCellCap = 10'000'000;

/// Integer box radius per coordinate implied by the norm bound
/// ||M||^2 <= 2 a^2 / x0^2 for the form ||M||^2 = 2 (M.x0)^2 / x0^2 - M.M.
IntVector ball_box(const NSLattice &L, const DivisorClass &x0, const Rational &a);

/// The orthogonalized norm 2 (M.x0)^2 / x0^2 - M.M (positive definite).
Rational ball_norm_sq(const NSLattice &L, const DivisorClass &x0, const DivisorClass &M);

/// All integral M with 0 < M.x0 <= a and M.M > 0, sorted lexicographically.
std::vector<DivisorClass> enumerate_ball(const NSLattice &L, const DivisorClass &x0,
                                         const Rational &a,
                                         std::uint64_t cell_cap = kDefaultBallCellCap);

/// Sign of (2M - K).h: +1 on Amp+_M, 0 on the face Amp0_M, -1 on Amp-_M.
int cone_side(const NSLattice &L, const DivisorClass &M, const DivisorClass &K,
              const DivisorClass &h);

/// The Gram matrix of comps under the lattice form has no positive eigenvalue.
bool negative_semidefinite_span(const NSLattice &L, const std::vector<DivisorClass> &comps);

}  // namespace thetawalls
