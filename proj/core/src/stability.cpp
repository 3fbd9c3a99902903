#include "ellbundle/stability.hpp"

#include "ellbundle/error.hpp"

#include <algorithm>

namespace ellbundle {

SurfaceLattice::SurfaceLattice(std::vector<std::string> generators, std::vector<std::vector<std::int64_t>> gram,
                               LatticeVector h0, std::int64_t deg_l)
    : generators_(std::move(generators)), gram_(std::move(gram)), h0_(std::move(h0)), deg_l_(deg_l) {
  const std::size_t k = generators_.size();
  if (k < 2) throw DomainError("lattice", "a surface lattice needs at least sigma and f");
  if (gram_.size() != k) throw DomainError("lattice", "Gram matrix has the wrong size");
  for (const auto& row : gram_) {
    if (row.size() != k) throw DomainError("lattice", "Gram matrix must be square");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw DomainError("lattice", "Gram matrix must be symmetric");
    }
  }
  auto find = [this](const std::string& name) {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) throw DomainError("lattice", "missing generator " + name);
    return static_cast<int>(it - generators_.begin());
  };
  sigma_ = find("sigma");
  f_ = find("f");
  const auto s = static_cast<std::size_t>(sigma_);
  const auto f = static_cast<std::size_t>(f_);
  if (gram_[s][s] != -deg_l_ || gram_[s][f] != 1 || gram_[f][f] != 0) {
    throw DomainError("lattice", "need sigma^2 = -deg L, sigma f = 1, f^2 = 0");
  }
  require_length(h0_);
  if (dot(h0_, fiber()) <= 0) throw DomainError("lattice", "H0 . f must be positive");
}

SurfaceLattice SurfaceLattice::rational_elliptic() {
  return SurfaceLattice({"sigma", "f"}, {{-1, 1}, {1, 0}}, {1, 2}, 1);
}

void SurfaceLattice::require_length(const LatticeVector& v) const {
  if (v.size() != generators_.size()) throw DomainError("lattice", "vector length does not match the lattice rank");
}

std::int64_t SurfaceLattice::dot(const LatticeVector& u, const LatticeVector& v) const {
  require_length(u);
  require_length(v);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) total += u[i] * gram_[i][j] * v[j];
  }
  return total;
}

LatticeVector SurfaceLattice::sigma() const {
  LatticeVector v(generators_.size(), 0);
  v[static_cast<std::size_t>(sigma_)] = 1;
  return v;
}

LatticeVector SurfaceLattice::fiber() const {
  LatticeVector v(generators_.size(), 0);
  v[static_cast<std::size_t>(f_)] = 1;
  return v;
}

LatticeVector SurfaceLattice::polarization(const Rational& t) const {
  const auto num = static_cast<std::int64_t>(numerator(t));
  const auto den = static_cast<std::int64_t>(denominator(t));
  LatticeVector v = h0_;
  for (auto& x : v) x *= den;
  v[static_cast<std::size_t>(f_)] += num;
  return v;
}

Rational SurfaceLattice::dot_polarization(const LatticeVector& d, const Rational& t) const {
  return Rational(dot(d, h0_)) + t * dot(d, fiber());
}

Rational slope(const SurfaceLattice& lattice, const BundleNumerics& w, const LatticeVector& polarization) {
  if (w.rank <= 0) throw DomainError("range", "slope needs positive rank");
  if (lattice.dot(polarization, lattice.fiber()) < 0) {
    throw DomainError("range", "polarization must have nonnegative fiber degree");
  }
  return Rational(lattice.dot(w.c1, polarization), w.rank);
}

std::int64_t bogomolov(const SurfaceLattice& lattice, const BundleNumerics& w) {
  return 2 * w.rank * w.c2 - (w.rank - 1) * lattice.dot(w.c1, w.c1);
}

BundleNumerics whitney_sum(const SurfaceLattice& lattice, const BundleNumerics& sub, const BundleNumerics& quotient) {
  LatticeVector c1(sub.c1.size());
  for (std::size_t i = 0; i < c1.size(); ++i) c1[i] = sub.c1[i] + quotient.c1[i];
  return {sub.rank + quotient.rank, c1, sub.c2 + quotient.c2 + lattice.dot(sub.c1, quotient.c1)};
}

LatticeVector destabilizing_difference(const BundleNumerics& sub, const BundleNumerics& quotient) {
  LatticeVector d(sub.c1.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = sub.rank * quotient.c1[i] - quotient.rank * sub.c1[i];
  return d;
}

namespace {

void require_ranks(const BundleNumerics& sub, const BundleNumerics& quotient) {
  if (sub.rank <= 0 || quotient.rank <= 0) throw DomainError("range", "ranks must be positive");
}

}  // namespace

bool bogomolov_identity_check(const SurfaceLattice& lattice, const BundleNumerics& sub,
                              const BundleNumerics& quotient) {
  require_ranks(sub, quotient);
  const BundleNumerics v = whitney_sum(lattice, sub, quotient);
  const LatticeVector d = destabilizing_difference(sub, quotient);
  const Rational rhs = Rational(v.rank, sub.rank) * bogomolov(lattice, sub) +
                       Rational(v.rank, quotient.rank) * bogomolov(lattice, quotient) -
                       Rational(lattice.dot(d, d), sub.rank * quotient.rank);
  return Rational(bogomolov(lattice, v)) == rhs;
}

bool d2_bound_check(const SurfaceLattice& lattice, const BundleNumerics& sub, const BundleNumerics& quotient) {
  require_ranks(sub, quotient);
  if (bogomolov(lattice, sub) < 0 || bogomolov(lattice, quotient) < 0) return true;
  const BundleNumerics v = whitney_sum(lattice, sub, quotient);
  const LatticeVector d = destabilizing_difference(sub, quotient);
  return lattice.dot(d, d) >= -static_cast<std::int64_t>(sub.rank) * quotient.rank * bogomolov(lattice, v);
}

Rational stability_threshold(int n, std::int64_t c2) {
  if (n < 1) throw DomainError("range", "rank must be positive");
  if (c2 < 0) throw DomainError("range", "c2 must be nonnegative");
  return Rational(static_cast<std::int64_t>(n) * n * n * c2, 4);
}

std::vector<LatticeVector> wall_search(const SurfaceLattice& lattice, int n, std::int64_t c2, const Rational& t,
                                       int bound) {
  if (bound < 0) throw DomainError("range", "box bound must be nonnegative");
  if (n < 1) throw DomainError("range", "rank must be positive");
  const Rational lower = -Rational(static_cast<std::int64_t>(n) * n * n * c2, 2);
  const auto k = static_cast<std::size_t>(lattice.rank());
  const LatticeVector f = lattice.fiber();
  std::vector<LatticeVector> out;
  LatticeVector d(k, -bound);
  while (true) {
    if (lattice.dot(d, f) > 0) {
      const std::int64_t d2 = lattice.dot(d, d);
      if (d2 < 0 && Rational(d2) >= lower && lattice.dot_polarization(d, t) <= 0) out.push_back(d);
    }
    std::size_t i = 0;
    while (i < k && d[i] == bound) d[i++] = -bound;
    if (i == k) break;
    ++d[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t allowable_modification_c2(std::int64_t c2, std::int64_t e) {
  if (e >= 0) throw DomainError("range", "an allowable modification has e < 0");
  if (c2 + e < 0) throw DomainError("bogomolov", "c2 would become negative");
  return c2 + e;
}

std::vector<std::int64_t> modification_sequence(std::int64_t c2, std::int64_t e) {
  if (e >= 0) throw DomainError("range", "an allowable modification has e < 0");
  if (c2 < 0) throw DomainError("bogomolov", "c2 must be nonnegative");
  std::vector<std::int64_t> seq{c2};
  while (seq.back() + e >= 0) seq.push_back(allowable_modification_c2(seq.back(), e));
  return seq;
}

}  // namespace ellbundle
