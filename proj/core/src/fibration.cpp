#include "ellbundle/fibration.hpp"

#include "ellbundle/chern_formulas.hpp"
#include "ellbundle/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ellbundle {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

PicVector combine(std::int64_t p, const PicVector& u, std::int64_t q, const PicVector& v) {
  PicVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = p * u[i] + q * v[i];
  return out;
}

GradedClass alpha_of(const SectionSpec& section, const RingPtr& ring) {
  return section.is_trivial_section ? GradedClass(ring) : GradedClass::generator(ring, "alpha");
}

}  // namespace

void PicModel::validate() const {
  if (rank < 1) throw DomainError("pic", "Pic rank must be positive");
  const auto n = static_cast<std::size_t>(rank);
  if (L.size() != n || alpha.size() != n) throw DomainError("pic", "L and alpha need one entry per Pic generator");
  if (H && H->size() != n) throw DomainError("pic", "H needs one entry per Pic generator");
  if (dim_base < 1) throw DomainError("pic", "dim B must be positive");
}

void SectionSpec::validate() const {
  pic.validate();
  if (n < 1) throw DomainError("range", "n must be positive");
  if (is_trivial_section && std::any_of(pic.alpha.begin(), pic.alpha.end(), [](auto v) { return v != 0; })) {
    throw DomainError("pic", "the trivial section has alpha = 0");
  }
}

RingPtr section_ring(const SectionSpec& section, int truncation) {
  section.validate();
  return section.pic.dim_base == 1 ? RingSpec::surface(truncation) : RingSpec::section(truncation);
}

GradedClass ch_VAa(const SectionSpec& section, int a, const RingPtr& ring) {
  section.validate();
  return ch_Ua_formula(ring, section.n, a, alpha_of(section, ring));
}

GradedClass ch_VAa(const SectionSpec& section, int a) { return ch_VAa(section, a, section_ring(section)); }

PicVector det_VAa(const SectionSpec& section, int a) {
  section.validate();
  const std::int64_t n = section.n;
  return combine(-(n + a - 1), section.pic.alpha, a * n + (n * n - n) / 2, section.pic.L);
}

PicVector evaluate_on_base(const GradedClass& weight_one, const SectionSpec& section) {
  section.validate();
  const RingPtr& ring = weight_one.ring();
  PicVector out(static_cast<std::size_t>(section.pic.rank), 0);
  for (const auto& [m, q] : weight_one.terms()) {
    if (weight(m) != 1) throw DomainError("pic", "expected a weight-1 class");
    if (denominator(q) != 1) throw DomainError("pic", "non-integral coefficient");
    const auto c = static_cast<std::int64_t>(numerator(q));
    if (m == ring->generator_monomial(ring->generator_index("alpha"))) {
      out = combine(1, out, c, section.pic.alpha);
    } else if (m == ring->generator_monomial(ring->generator_index("L"))) {
      out = combine(1, out, c, section.pic.L);
    } else {
      throw DomainError("pic", "class has a term not pulled back from the base");
    }
  }
  return out;
}

std::optional<TrivialDetSolution> trivial_det_solve(const SectionSpec& section) {
  section.validate();
  const int n = section.n;
  for (int a = 0; a < n; ++a) {
    const PicVector det = det_VAa(section, a);
    if (std::all_of(det.begin(), det.end(), [n](std::int64_t v) { return mod(v, n) == 0; })) {
      PicVector n0(det.size());
      std::transform(det.begin(), det.end(), n0.begin(), [n](std::int64_t v) { return -v / n; });
      return TrivialDetSolution{a, n0};
    }
  }
  return std::nullopt;
}

bool trivial_det_sufficient(const SectionSpec& section) {
  section.validate();
  const auto& L = section.pic.L;
  const auto& alpha = section.pic.alpha;
  if (section.n % 2 == 1) return true;
  if (std::all_of(L.begin(), L.end(), [](auto v) { return mod(v, 2) == 0; })) return true;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (mod(alpha[i] - L[i], 2) != 0) return false;
  }
  return true;
}

PicVector c1_VA0_twist(const SectionSpec& section, const PicVector& pushforward_c1N) {
  section.validate();
  if (pushforward_c1N.size() != static_cast<std::size_t>(section.pic.rank)) {
    throw DomainError("pic", "pushforward class has the wrong length");
  }
  const std::int64_t n = section.n;
  return combine(1, combine(-(n - 1), section.pic.alpha, (n * n - n) / 2, section.pic.L), 1, pushforward_c1N);
}

std::string to_string(ParityVerdict verdict) {
  return verdict == ParityVerdict::NecessaryHolds ? "Necessary-holds" : "Fails";
}

ParityVerdict symmetric_parity_check(const SectionSpec& section) {
  section.validate();
  if (section.n % 2 != 0) return ParityVerdict::Fails;
  for (std::size_t i = 0; i < section.pic.L.size(); ++i) {
    if (mod(section.pic.alpha[i] - section.pic.L[i], 2) != 0) return ParityVerdict::Fails;
  }
  return ParityVerdict::NecessaryHolds;
}

ReducibleStep reducible_step(const SectionSpec& section, int a, const RingPtr& ring) {
  section.validate();
  if (section.n < 2) throw DomainError("range", "the reducible step needs n >= 2");
  const std::int64_t n = section.n;
  const GradedClass L = GradedClass::generator(ring, "L");
  GradedClass increment = exp(Rational(a + n - 1) * L - alpha_of(section, ring));
  return {std::move(increment), combine(1, section.pic.alpha, -(n - 1), section.pic.L)};
}

SpectralCoverClass spectral_cover_class(const SectionSpec& section) {
  section.validate();
  return {section.n, section.pic.alpha};
}

GradedClass normal_bundle_ch(const SectionSpec& section, const RingPtr& ring) {
  section.validate();
  const GradedClass one = GradedClass::constant(ring, 1);
  if (section.n == 1) return exp(alpha_of(section, ring)) - one;
  return ch_Vn(ring, section.n) * exp(alpha_of(section, ring)) - one;
}

int SplittingType::rank() const { return static_cast<int>(degrees.size()) + (cotangent ? n - 1 : 0); }

int SplittingType::degree_sum() const {
  return std::accumulate(degrees.begin(), degrees.end(), 0) + (cotangent ? -n : 0);
}

std::string SplittingType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < degrees.size();) {
    std::size_t j = i;
    while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
    if (!s.empty()) s += " + ";
    s += "O(" + std::to_string(degrees[i]) + ")";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  if (cotangent) s += (s.empty() ? "" : " + ") + std::string("Omega^1");
  return s;
}

std::pair<int, int> reduce_twist(int n, int a) {
  // k = ceil((a - 1) / n) so that a - n k lies in [2 - n, 1].
  const int num = a - 1;
  int k = num / n;
  if (num % n != 0 && num > 0) ++k;
  return {a - n * k, k};
}

SplittingType splitting_type_slice(int n, int a, bool at_p0, bool generic_line) {
  if (n < 2) throw DomainError("range", "n must be at least 2");
  const bool in_range = a >= -(n - 2) && a <= 1;
  if (!in_range && !generic_line) {
    throw DomainError("range", "outside -(n-2) <= a <= 1 the splitting is known only on a generic line");
  }
  SplittingType out;
  out.n = n;
  const auto [ap, k] = reduce_twist(n, a);
  if (!generic_line) {
    if (a == 1 && at_p0) {
      out.degrees = {0};
      out.cotangent = true;
    } else {
      out.degrees.assign(static_cast<std::size_t>(1 - a), 0);
      out.degrees.insert(out.degrees.end(), static_cast<std::size_t>(n - 1 + a), -1);
    }
    return out;
  }
  if (ap == 1 && at_p0) {
    out.degrees.push_back(-k);
    out.degrees.insert(out.degrees.end(), static_cast<std::size_t>(n - 2), -k - 1);
    out.degrees.push_back(-k - 2);
  } else {
    out.degrees.assign(static_cast<std::size_t>(1 - ap), -k);
    out.degrees.insert(out.degrees.end(), static_cast<std::size_t>(n - 1 + ap), -k - 1);
  }
  std::sort(out.degrees.begin(), out.degrees.end(), std::greater<>());
  return out;
}

GradedClass surface_c2(const SectionSpec& section, int a, const RingPtr& ring) {
  return character_to_chern(ch_VAa(section, a, ring)).part(2);
}

Rational surface_degree(const GradedClass& weight_two, const SectionSpec& section) {
  section.validate();
  if (section.pic.dim_base != 1 || section.pic.rank != 1) {
    throw DomainError("pic", "surface degrees need dim B = 1 and Pic B = Z");
  }
  const RingPtr& ring = weight_two.ring();
  const Monomial sigma = ring->generator_monomial(ring->generator_index("sigma"));
  const Monomial alpha = ring->generator_monomial(ring->generator_index("alpha"));
  const Monomial L = ring->generator_monomial(ring->generator_index("L"));
  Monomial sa{};
  Monomial sl{};
  for (int i = 0; i < kMaxGenerators; ++i) {
    sa[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(sigma[static_cast<std::size_t>(i)] + alpha[static_cast<std::size_t>(i)]);
    sl[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(sigma[static_cast<std::size_t>(i)] + L[static_cast<std::size_t>(i)]);
  }
  Rational total = 0;
  for (const auto& [m, q] : weight_two.terms()) {
    if (weight(m) != 2) throw DomainError("pic", "expected a weight-2 class");
    if (m == sa) {
      total += q * section.pic.alpha[0];
    } else if (m == sl) {
      total += q * section.pic.L[0];
    } else {
      throw DomainError("pic", "weight-2 monomial " + ring->monomial_string(m) + " does not live on a surface");
    }
  }
  return total;
}

}  // namespace ellbundle
