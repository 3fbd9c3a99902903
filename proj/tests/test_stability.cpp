#include <doctest.h>

#include "ellbundle/error.hpp"
#include "ellbundle/json_io.hpp"
#include "ellbundle/stability.hpp"

#include <algorithm>
#include <fstream>
#include <random>

using namespace ellbundle;

namespace {

SurfaceLattice load(const std::string& name) {
  std::ifstream in(std::string(ELLBUNDLE_TEST_DATA) + "/lattices/" + name);
  REQUIRE(in.good());
  return json_io::lattice_from_json(json_io::json::parse(in));
}

std::vector<SurfaceLattice> shipped() {
  return {load("rational_elliptic.json"), load("degree_two.json"), load("rank_three.json")};
}

// every vector of the box [-b, b]^k
template <typename F>
void for_box(int k, int b, F&& visit) {
  LatticeVector d(static_cast<std::size_t>(k), -b);
  while (true) {
    visit(d);
    std::size_t i = 0;
    while (i < d.size() && d[i] == b) d[i++] = -b;
    if (i == d.size()) return;
    ++d[i];
  }
}

}  // namespace

TEST_CASE("lattice invariants") {
  const auto re = SurfaceLattice::rational_elliptic();
  CHECK(re.dot(re.sigma(), re.sigma()) == -1);
  CHECK(re.dot(re.sigma(), re.fiber()) == 1);
  CHECK(re.dot(re.fiber(), re.fiber()) == 0);
  CHECK(json_io::to_json(re) == json_io::to_json(load("rational_elliptic.json")));
  CHECK_THROWS_AS(SurfaceLattice({"sigma", "f"}, {{-1, 1}, {0, 0}}, {1, 2}, 1), DomainError);
  CHECK_THROWS_AS(SurfaceLattice({"sigma", "f"}, {{-2, 1}, {1, 0}}, {1, 2}, 1), DomainError);
  CHECK_THROWS_AS(SurfaceLattice({"sigma", "f"}, {{-1, 1}, {1, 0}}, {0, 1}, 1), DomainError);
  CHECK_THROWS_AS(SurfaceLattice({"sigma", "g"}, {{-1, 1}, {1, 0}}, {1, 2}, 1), DomainError);
}

TEST_CASE("slopes") {
  const auto re = SurfaceLattice::rational_elliptic();
  for (int n = 1; n <= 4; ++n) {
    CHECK(slope(re, {n, {0, 0}, 0}, {1, 2}) == 0);
    CHECK(slope(re, {n, {0, 1}, 0}, {1, 0}) == Rational(1, n));
    CHECK(slope(re, {n, {1, 0}, 0}, {0, 1}) == Rational(1, n));
  }
  CHECK_THROWS_AS(slope(re, {0, {0, 0}, 0}, {1, 2}), DomainError);
  CHECK_THROWS_AS(slope(re, {1, {0, 0}, 0}, {-1, 0}), DomainError);
  // classes pulled back from the base have fiber degree zero
  for (const auto& lat : shipped()) {
    for (int m = -3; m <= 3; ++m) {
      LatticeVector c1(static_cast<std::size_t>(lat.rank()), 0);
      c1[1] = m;
      CHECK(slope(lat, {2, c1, 0}, lat.fiber()) == 0);
    }
  }
}

TEST_CASE("Bogomolov numbers") {
  const auto re = SurfaceLattice::rational_elliptic();
  CHECK(bogomolov(re, {2, {0, 0}, 1}) == 4);
  CHECK(bogomolov(re, {1, {1, 3}, 5}) == 10);
  CHECK(bogomolov(re, {3, {0, 1}, 2}) == 12);
}

TEST_CASE("Bogomolov identity on random splits") {
  const auto lat = load("rank_three.json");
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> r(1, 3);
  int bound_cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const BundleNumerics a{1, {c(rng), c(rng), c(rng)}, c(rng)};
    const BundleNumerics b{1, {c(rng), c(rng), c(rng)}, c(rng)};
    REQUIRE(bogomolov_identity_check(lat, a, b));
    const BundleNumerics ga{r(rng), {c(rng), c(rng), c(rng)}, c(rng)};
    const BundleNumerics gb{r(rng), {c(rng), c(rng), c(rng)}, c(rng)};
    REQUIRE(bogomolov_identity_check(lat, ga, gb));
    REQUIRE(d2_bound_check(lat, ga, gb));
    if (bogomolov(lat, ga) >= 0 && bogomolov(lat, gb) >= 0) {
      ++bound_cases;
      // the bound read off directly from the identity
      const auto v = whitney_sum(lat, ga, gb);
      const auto d = destabilizing_difference(ga, gb);
      REQUIRE(lat.dot(d, d) >= -ga.rank * gb.rank * bogomolov(lat, v));
    }
  }
  CHECK(bound_cases > 100);
  const BundleNumerics same{1, {1, 0, 0}, 0};
  CHECK(destabilizing_difference(same, same) == LatticeVector{0, 0, 0});
  CHECK(bogomolov_identity_check(lat, same, same));
}

TEST_CASE("threshold") {
  CHECK(stability_threshold(2, 1) == 2);
  CHECK(stability_threshold(4, 0) == 0);
  CHECK(stability_threshold(3, 4) == 27);
  CHECK_THROWS_AS(stability_threshold(2, -1), DomainError);
}

TEST_CASE("walls on the rational elliptic lattice") {
  const auto re = SurfaceLattice::rational_elliptic();
  CHECK(wall_search(re, 2, 1, 2, 10).empty());
  const auto at0 = wall_search(re, 2, 1, 0, 10);
  REQUIRE_FALSE(at0.empty());
  CHECK(std::find(at0.begin(), at0.end(), LatticeVector{1, -1}) != at0.end());
  for (const auto& d : at0) {
    CHECK(re.dot(d, re.fiber()) > 0);
    CHECK(re.dot(d, d) < 0);
    CHECK(re.dot(d, d) >= -4);
    CHECK(re.dot_polarization(d, 0) <= 0);
  }
  for (int t = 0; t <= 4; ++t) CHECK(wall_search(re, 3, 0, t, 10).empty());
}

TEST_CASE("no walls past the threshold on the shipped lattices") {
  for (const auto& lat : shipped()) {
    const int bound = lat.rank() == 2 ? 20 : 12;
    for (int n = 2; n <= 3; ++n) {
      for (int c2 = 0; c2 <= 2; ++c2) {
        const Rational t0 = stability_threshold(n, c2);
        CHECK(wall_search(lat, n, c2, t0, bound).empty());
        CHECK(wall_search(lat, n, c2, t0 + 1, bound).empty());
      }
    }
  }
}

TEST_CASE("the threshold assumes H0 has fiber degree one") {
  // H0 = 5 sigma + 6 f is ample but H0 . f = 5: D = sigma - f survives t0
  const SurfaceLattice wide({"sigma", "f"}, {{-1, 1}, {1, 0}}, {5, 6}, 1);
  const auto walls = wall_search(wide, 2, 1, stability_threshold(2, 1), 10);
  CHECK(std::find(walls.begin(), walls.end(), LatticeVector{1, -1}) != walls.end());
}

TEST_CASE("Hodge index on the shipped lattices") {
  for (const auto& lat : shipped()) {
    int orthogonal = 0;
    for_box(lat.rank(), 8, [&](const LatticeVector& d) {
      if (lat.dot(d, lat.h0()) != 0) return;
      if (std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x == 0; })) return;
      ++orthogonal;
      REQUIRE(lat.dot(d, d) < 0);
    });
    CHECK(orthogonal > 0);
    CHECK(lat.dot(lat.h0(), lat.h0()) > 0);
  }
}

TEST_CASE("allowable modifications") {
  CHECK(allowable_modification_c2(5, -2) == 3);
  CHECK_THROWS_AS(allowable_modification_c2(5, 0), DomainError);
  CHECK_THROWS_AS(allowable_modification_c2(0, -1), DomainError);
  const auto seq = modification_sequence(3, -1);
  CHECK(seq.front() == 3);
  CHECK(seq.size() - 1 <= 3);
  for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] < seq[i - 1]);
  CHECK(seq.back() >= 0);
  const auto uneven = modification_sequence(7, -3);
  CHECK(uneven.back() >= 0);
  CHECK(uneven.back() + (-3) < 0);
}
