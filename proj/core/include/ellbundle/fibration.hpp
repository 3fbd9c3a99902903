#pragma once

#include "ellbundle/cohomology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ellbundle {

using PicVector = std::vector<std::int64_t>;

/// Pic B modeled as Z^rank, with the classes L and alpha = c1(M).
struct PicModel {
  int rank = 1;
  PicVector L;
  PicVector alpha;
  std::optional<PicVector> H;
  int dim_base = 1;

  /// Throws DomainError("pic") on mismatched lengths or rank < 1.
  void validate() const;
};

struct SectionSpec {
  PicModel pic;
  int n = 2;
  bool is_trivial_section = false;
  bool lies_in_H = false;

  /// Also enforces alpha = 0 for the trivial section and n >= 1.
  void validate() const;
};

/// Ring for a section: RingSpec::surface when dim B = 1, else RingSpec::section.
RingPtr section_ring(const SectionSpec& section, int truncation = default_truncation());

/// e^{-alpha} R(a+n) - R(a) + e^{-sigma}(1 - e^{-alpha}), alpha -> 0 for the
/// trivial section.
GradedClass ch_VAa(const SectionSpec& section, int a, const RingPtr& ring);
GradedClass ch_VAa(const SectionSpec& section, int a);

/// -(n+a-1) alpha + [an + (n^2 - n)/2] L.
PicVector det_VAa(const SectionSpec& section, int a);

/// Evaluates a weight-1 class in the alpha, L generators on the Pic model.
/// Throws DomainError("pic") if the class has a sigma term.
PicVector evaluate_on_base(const GradedClass& weight_one, const SectionSpec& section);

struct TrivialDetSolution {
  int a;         // residue in [0, n)
  PicVector N0;  // -det V_{A,a} / n
};

/// Smallest a in [0, n) with det V_{A,a} divisible by n, if any.
std::optional<TrivialDetSolution> trivial_det_solve(const SectionSpec& section);

/// True iff one of: n odd, L = 0 mod 2, alpha = L mod 2.
bool trivial_det_sufficient(const SectionSpec& section);

/// -(n-1) alpha + (n^2 - n)/2 L + pushforward.
PicVector c1_VA0_twist(const SectionSpec& section, const PicVector& pushforward_c1N);

enum class ParityVerdict { NecessaryHolds, Fails };
std::string to_string(ParityVerdict verdict);

/// NecessaryHolds iff n is even and alpha = L componentwise mod 2.
ParityVerdict symmetric_parity_check(const SectionSpec& section);

struct ReducibleStep {
  GradedClass increment;  // e^{(a+n-1)L - alpha}
  PicVector divisor;      // [D] = alpha - (n-1) L
};

/// Increment ch V_{A,a}(n) - ch V_{A,a}(n-1) and the class of D.
ReducibleStep reducible_step(const SectionSpec& section, int a, const RingPtr& ring);

struct SpectralCoverClass {
  int sigma_multiple;  // n
  PicVector alpha;
};

/// O_Z(n sigma) (x) pi^* M.
SpectralCoverClass spectral_cover_class(const SectionSpec& section);

/// ch(V_n) e^alpha - 1.
GradedClass normal_bundle_ch(const SectionSpec& section, const RingPtr& ring);

/// Restriction of U_a to a fiber slice or a line in it. `degrees` lists the
/// line-bundle summands in descending order; `cotangent` marks an extra
/// summand Omega^1 of P^{n-1} (rank n-1, c1 = -n).
struct SplittingType {
  std::vector<int> degrees;
  bool cotangent = false;
  int n = 0;

  int rank() const;
  int degree_sum() const;
  std::string to_string() const;
};

/// a = a' + n k with a' in [-(n-2), 1].
std::pair<int, int> reduce_twist(int n, int a);

/// Slice P^{n-1} x {e} when a is in [-(n-2), 1] and generic_line is false;
/// a generic line otherwise. Throws DomainError("range") when a is outside
/// [-(n-2), 1] and generic_line is false.
SplittingType splitting_type_slice(int n, int a, bool at_p0, bool generic_line);

/// c2 of V_{A,a} in the surface ring.
GradedClass surface_c2(const SectionSpec& section, int a, const RingPtr& ring);

/// Degree of a weight-2 class on Z over a curve: sigma alpha -> deg alpha,
/// sigma L -> deg L (alpha^2, alpha L, L^2 vanish).
Rational surface_degree(const GradedClass& weight_two, const SectionSpec& section);

}  // namespace ellbundle
