#pragma once

#include "ellbundle/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ellbundle {

using LatticeVector = std::vector<std::int64_t>;

/// Numerical Neron-Severi lattice of an elliptic surface over a curve:
/// generators include "sigma" and "f" with sigma^2 = -deg L, sigma f = 1,
/// f^2 = 0, and an ample class H0 with H0 f > 0.
class SurfaceLattice {
 public:
  /// Throws DomainError("lattice") when an invariant fails.
  SurfaceLattice(std::vector<std::string> generators, std::vector<std::vector<std::int64_t>> gram, LatticeVector h0,
                 std::int64_t deg_l);

  /// sigma, f with sigma^2 = -1 and H0 = sigma + 2f (rational elliptic surface).
  static SurfaceLattice rational_elliptic();

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
  const LatticeVector& h0() const { return h0_; }
  std::int64_t deg_l() const { return deg_l_; }
  int rank() const { return static_cast<int>(generators_.size()); }

  std::int64_t dot(const LatticeVector& u, const LatticeVector& v) const;
  LatticeVector sigma() const;
  LatticeVector fiber() const;
  /// H0 + t f, scaled by the denominator of t so it stays integral.
  LatticeVector polarization(const Rational& t) const;
  /// D . (H0 + t f), exact.
  Rational dot_polarization(const LatticeVector& d, const Rational& t) const;

 private:
  void require_length(const LatticeVector& v) const;

  std::vector<std::string> generators_;
  std::vector<std::vector<std::int64_t>> gram_;
  LatticeVector h0_;
  std::int64_t deg_l_;
  int sigma_;
  int f_;
};

struct BundleNumerics {
  int rank;
  LatticeVector c1;
  std::int64_t c2;
};

/// c1 . polarization / rank. Requires rank > 0 and polarization . f >= 0.
Rational slope(const SurfaceLattice& lattice, const BundleNumerics& w, const LatticeVector& polarization);

/// B(W) = 2 r c2 - (r - 1) c1^2.
std::int64_t bogomolov(const SurfaceLattice& lattice, const BundleNumerics& w);

/// Numerics of V' + V'': ranks and c1 add, c2 = c2' + c2'' + c1' c1''.
BundleNumerics whitney_sum(const SurfaceLattice& lattice, const BundleNumerics& sub, const BundleNumerics& quotient);

/// D = r' c1(V'') - r'' c1(V').
LatticeVector destabilizing_difference(const BundleNumerics& sub, const BundleNumerics& quotient);

/// B(V) = n/r' B(V') + n/r'' B(V'') - D^2 / (r' r''), checked exactly for
/// V = V' + V''.
bool bogomolov_identity_check(const SurfaceLattice& lattice, const BundleNumerics& sub, const BundleNumerics& quotient);

/// When B(V'), B(V'') >= 0: D^2 >= -r' r'' B(V) (with c1(V) = 0 this is
/// -r' r'' 2 n c2(V)). Returns true when the hypothesis fails.
bool d2_bound_check(const SurfaceLattice& lattice, const BundleNumerics& sub, const BundleNumerics& quotient);

/// t0 = n^3 c2 / 4. Throws DomainError("range") for c2 < 0 or n < 1.
Rational stability_threshold(int n, std::int64_t c2);

/// All D in [-bound, bound]^rank with D f > 0, -(n^3/2) c2 <= D^2 < 0 and
/// D (H0 + t f) <= 0. An empty result certifies only the box.
std::vector<LatticeVector> wall_search(const SurfaceLattice& lattice, int n, std::int64_t c2, const Rational& t,
                                       int bound);

/// c2 + e for an allowable modification. Throws DomainError("range") for
/// e >= 0 and DomainError("bogomolov") if the result would be negative.
std::int64_t allowable_modification_c2(std::int64_t c2, std::int64_t e);

/// Applies allowable_modification_c2 with the same e while the result stays
/// nonnegative; returns c2 and every later value.
std::vector<std::int64_t> modification_sequence(std::int64_t c2, std::int64_t e);

}  // namespace ellbundle
