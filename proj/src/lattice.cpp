#include "thetawalls/lattice.hpp"

#include <algorithm>
#include <utility>

#include "thetawalls/error.hpp"

namespace thetawalls {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

void check_dim(const NSLattice &L, const DivisorClass &x) {
  if (x.coords.size() != L.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "class of length " + std::to_string(x.coords.size()) +
                                                  " in a lattice of rank " +
                                                  std::to_string(L.rank()));
  }
}

void require_ample_proxy(const NSLattice &L, const DivisorClass &h) {
  if (pair(L, h, h) <= 0) throw Error(ErrorKind::BadAmpleProxy, "h.h must be positive");
}

// Gauss-Jordan inverse of a nonsingular rational matrix.
RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::InvalidArgument, "singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

DivisorClass make_class(std::initializer_list<long> coords) {
  DivisorClass out;
  for (long c : coords) out.coords.emplace_back(c);
  return out;
}

NSLattice::NSLattice(IntMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "empty Gram matrix");
  for (const auto &row : gram_) {
    if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "Gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorKind::NotSymmetric, "Gram matrix is not symmetric");
    }
  }
}

Inertia inertia(RatMatrix m) {
  // Congruent diagonalization: symmetric row/column operations only.
  const std::size_t n = m.size();
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(m[piv][piv]) == 0) ++piv;
    if (piv == n) {
      // No nonzero diagonal left; a nonzero off-diagonal entry m[i][j]
      // becomes a diagonal one after adding row/column j to i.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(m[i][j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        out.zero += n - k;
        return out;
      }
      for (std::size_t c = 0; c < n; ++c) m[pi][c] += m[pj][c];
      for (std::size_t r = 0; r < n; ++r) m[r][pi] += m[r][pj];
      piv = pi;
    }
    if (piv != k) {
      std::swap(m[piv], m[k]);
      for (auto &row : m) std::swap(row[piv], row[k]);
    }
    const Rational p = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      const Rational f = m[i][k] / p;
      for (std::size_t c = k; c < n; ++c) m[i][c] -= f * m[k][c];
      for (std::size_t r = k; r < n; ++r) m[r][i] -= f * m[r][k];
    }
    (sgn(p) > 0 ? out.positive : out.negative) += 1;
  }
  return out;
}

Integer pair(const NSLattice &L, const DivisorClass &x, const DivisorClass &y) {
  check_dim(L, x);
  check_dim(L, y);
  Integer acc = 0;
  const auto &g = L.gram();
  for (std::size_t i = 0; i < L.rank(); ++i) {
    if (x.coords[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < L.rank(); ++j) row += g[i][j] * y.coords[j];
    acc += x.coords[i] * row;
  }
  return acc;
}

bool verify_signature(const NSLattice &L) {
  RatMatrix m(L.rank(), std::vector<Rational>(L.rank()));
  for (std::size_t i = 0; i < L.rank(); ++i) {
    for (std::size_t j = 0; j < L.rank(); ++j) m[i][j] = L.gram()[i][j];
  }
  const Inertia in = inertia(std::move(m));
  return in.positive == 1 && in.zero == 0 && in.negative == L.rank() - 1;
}

bool in_positive_cone(const NSLattice &L, const DivisorClass &x, const DivisorClass &h) {
  require_ample_proxy(L, h);
  return pair(L, x, x) > 0 && pair(L, x, h) > 0;
}

bool hodge_inequality_holds(const NSLattice &L, const DivisorClass &D, const DivisorClass &H) {
  require_ample_proxy(L, H);
  const Integer dh = pair(L, D, H);
  return dh * dh >= pair(L, D, D) * pair(L, H, H);
}

Rational ball_norm_sq(const NSLattice &L, const DivisorClass &x0, const DivisorClass &M) {
  const Integer mx = pair(L, M, x0);
  return Rational(2 * mx * mx, pair(L, x0, x0)) - Rational(pair(L, M, M));
}

IntVector ball_box(const NSLattice &L, const DivisorClass &x0, const Rational &a) {
  check_dim(L, x0);
  require_ample_proxy(L, x0);
  const std::size_t n = L.rank();
  const Integer x0sq = pair(L, x0, x0);
  IntVector g(n, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i] += L.gram()[i][j] * x0.coords[j];
  }
  // Gram of the positive definite form 2 (M.x0)^2 / x0^2 - M.M.
  RatMatrix form(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      form[i][j] = make_rational(2 * g[i] * g[j], x0sq) - Rational(L.gram()[i][j]);
    }
  }
  const RatMatrix inv = inverse(std::move(form));
  const Rational radius_sq = 2 * a * a / Rational(x0sq);
  IntVector box(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational bound = radius_sq * inv[i][i];
    box[i] = floor_sqrt(bound);
  }
  return box;
}

std::vector<DivisorClass> enumerate_ball(const NSLattice &L, const DivisorClass &x0,
                                         const Rational &a, std::uint64_t cell_cap) {
  check_dim(L, x0);
  require_ample_proxy(L, x0);
  if (sgn(a) <= 0) throw Error(ErrorKind::InvalidArgument, "height bound must be positive");
  const IntVector box = ball_box(L, x0, a);

  Integer cells = 1;
  for (const Integer &b : box) cells *= 2 * b + 1;
  if (cells > Integer(std::to_string(cell_cap))) {
    throw Error(ErrorKind::BoundTooLarge, "ball box has " + cells.get_str() + " cells, cap is " +
                                              std::to_string(cell_cap));
  }

  const std::size_t n = L.rank();
  std::vector<DivisorClass> out;
  DivisorClass m;
  m.coords.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.coords[i] = -box[i];
  // Odometer over the box; lexicographic order falls out of the iteration.
  while (true) {
    const Integer height = pair(L, m, x0);
    if (height > 0 && Rational(height) <= a && pair(L, m, m) > 0) out.push_back(m);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (m.coords[k] < box[k]) {
        ++m.coords[k];
        for (std::size_t j = k + 1; j < n; ++j) m.coords[j] = -box[j];
        break;
      }
      if (k == 0) return out;
    }
  }
}

int cone_side(const NSLattice &L, const DivisorClass &M, const DivisorClass &K,
              const DivisorClass &h) {
  check_dim(L, M);
  check_dim(L, K);
  check_dim(L, h);
  DivisorClass d;
  d.coords.resize(L.rank());
  for (std::size_t i = 0; i < L.rank(); ++i) d.coords[i] = 2 * M.coords[i] - K.coords[i];
  return sgn(pair(L, d, h));
}

bool negative_semidefinite_span(const NSLattice &L, const std::vector<DivisorClass> &comps) {
  if (comps.empty()) throw Error(ErrorKind::InvalidArgument, "empty component list");
  const std::size_t k = comps.size();
  RatMatrix m(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      m[i][j] = pair(L, comps[i], comps[j]);
      m[j][i] = m[i][j];
    }
  }
  return inertia(std::move(m)).positive == 0;
}

}  // namespace thetawalls
