#include "ellbundle/identities.hpp"

#include "ellbundle/chern_formulas.hpp"
#include "ellbundle/error.hpp"
#include "ellbundle/fibration.hpp"

namespace ellbundle {

void SuiteResult::record(bool ok, const std::string& label) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < 10) failures.push_back(label);
}

namespace {

std::string at(int n, const char* key, int v) {
  return "n=" + std::to_string(n) + " " + key + "=" + std::to_string(v);
}

}  // namespace

SuiteResult suite_master(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "master";
  const RingPtr ring = RingSpec::fibration(opt.truncation);
  const GradedClass zeta = GradedClass::generator(ring, "zeta");
  const GradedClass L = GradedClass::generator(ring, "L");
  const GradedClass twist = exp(L - zeta);
  for (int n = opt.nmin; n <= opt.nmax; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      r.record(ch_Ud_fibration(ring, n, d) * twist == ch_Ua_fibration(ring, n, 1 - d), at(n, "d", d));
    }
  }
  return r;
}

SuiteResult suite_recursion(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "recursion";
  const RingPtr ring = RingSpec::fibration(opt.truncation);
  for (int n = opt.nmin; n <= opt.nmax; ++n) {
    for (int a = opt.amin; a <= opt.amax; ++a) {
      r.record(ch_Ua_fibration(ring, n, a) - ch_Ua_fibration(ring, n, a - 1) == modification_increment(ring, n, a),
               at(n, "a", a));
    }
  }
  return r;
}

SuiteResult suite_chern_extraction(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "c1c2";
  const RingPtr ring = RingSpec::fibration(opt.truncation);
  for (int n = opt.nmin; n <= opt.nmax; ++n) {
    for (int a = opt.amin; a <= opt.amax; ++a) {
      const GradedClass c = character_to_chern(ch_Ua_fibration(ring, n, a));
      r.record(c.part(1) == c1_Ua_displayed(ring, n, a), at(n, "a", a) + " c1");
      r.record(c.part(2) == c2_Ua_displayed(ring, n, a), at(n, "a", a) + " c2");
    }
  }
  return r;
}

SuiteResult suite_branches(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "branches";
  const RingPtr ring = RingSpec::fibration(opt.truncation);
  for (int n = opt.nmin; n <= opt.nmax; ++n) {
    for (int a = opt.amin; a <= opt.amax; ++a) {
      const GradedClass c = character_to_chern(ch_Ua_fibration(ring, n, a));
      for (int b = 0; b < 3; ++b) {
        r.record(c_Ua_fibration_branch(ring, n, a, b) == c, at(n, "a", a) + " branch=" + std::to_string(b));
      }
    }
    for (int d = 1; d <= n - 1; ++d) {
      r.record(c_Ud_fibration(ring, n, d) == character_to_chern(ch_Ud_fibration(ring, n, d)), at(n, "d", d));
    }
  }
  return r;
}

SuiteResult suite_specialization(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "specialize";
  const int N = opt.truncation;
  const RingPtr ring = RingSpec::fibration(N);
  for (int n = opt.nmin; n <= opt.nmax; ++n) {
    r.record(character_to_chern(ch_U0_single_curve(n, N)) == c_U0_single_curve(n, N), at(n, "U0", 0));
    r.record(specialize_to_single_curve(ch_Ua_fibration(ring, n, 0), n) == ch_U0_single_curve(n, N),
             at(n, "U0-fib", 0));
    for (int a = opt.amin; a <= opt.amax; ++a) {
      const GradedClass ch = ch_Ua_twist_single_curve(n, a, 0, N);
      r.record(character_to_chern(ch) == c_Ua_single_curve(n, a, N), at(n, "a", a) + " c(U_a)");
      r.record(specialize_to_single_curve(ch_Ua_fibration(ring, n, a), n) == ch, at(n, "a", a) + " ch specialized");
      r.record(specialize_to_single_curve(c_Ua_fibration(ring, n, a), n) == c_Ua_single_curve(n, a, N),
               at(n, "a", a) + " c specialized");
      for (int b = -2; b <= 2; ++b) {
        const GradedClass c1 = character_to_chern(ch_Ua_twist_single_curve(n, a, b, N)).part(1);
        r.record(c1.is_zero() == (a - 1 == n * (b - 1)), at(n, "a", a) + " b=" + std::to_string(b) + " c1");
      }
    }
    const GradedClass chU = ch_U_poincare(n, N);
    r.record(chU == ch_Ua_twist_single_curve(n, 1, 1, N), at(n, "U", 1));
    r.record(character_to_chern(chU) == c_U_poincare(n, N), at(n, "U", 2));
    for (int d = 1; d <= n - 1; ++d) {
      const GradedClass chd = ch_Ud_single_curve(n, d, N);
      r.record(character_to_chern(chd) == c_Ud_single_curve(n, d, N), at(n, "d", d) + " c(U(d))");
      r.record(chd == ch_Ua_twist_single_curve(n, 1 - d, 1, N), at(n, "d", d) + " U(d)=U_{1-d}(1)");
      r.record(specialize_to_single_curve(ch_Ud_fibration(ring, n, d), n) == chd, at(n, "d", d) + " ch specialized");
      r.record(specialize_to_single_curve(c_Ud_fibration(ring, n, d), n) == c_Ud_single_curve(n, d, N),
               at(n, "d", d) + " c specialized");
    }
  }
  return r;
}

SuiteResult suite_section(const SuiteOptions& opt) {
  SuiteResult r;
  r.name = "section";
  // alpha and L as independent basis vectors make the check symbolic.
  SectionSpec generic;
  generic.pic.rank = 2;
  generic.pic.alpha = {1, 0};
  generic.pic.L = {0, 1};
  generic.pic.dim_base = 2;
  SectionSpec trivial = generic;
  trivial.pic.alpha = {0, 0};
  trivial.is_trivial_section = true;
  const RingPtr ring = RingSpec::section(opt.truncation);
  const GradedClass L = GradedClass::generator(ring, "L");
  for (int n = std::max(opt.nmin, 1); n <= opt.nmax; ++n) {
    generic.n = n;
    trivial.n = n;
    for (int a = opt.amin; a <= opt.amax; ++a) {
      const std::string label = at(n, "a", a);
      const GradedClass ch = ch_VAa(generic, a, ring);
      r.record(evaluate_on_base(ch.part(1), generic) == det_VAa(generic, a), label + " det");
      GradedClass quotients(ring);
      for (int i = a; i <= a + n - 1; ++i) quotients += exp(Rational(i) * L);
      r.record(ch_VAa(trivial, a, ring) == quotients, label + " trivial");
      if (n >= 2) {
        SectionSpec smaller = generic;
        smaller.n = n - 1;
        const ReducibleStep step = reducible_step(generic, a, ring);
        r.record(ch - ch_VAa(smaller, a, ring) == step.increment, label + " reducible");
        r.record(step.divisor == PicVector{1, -(n - 1)}, label + " [D]");
      }
    }
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"master", "recursion", "c1c2", "branches", "specialize", "section"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "master") return suite_master(opt);
  if (name == "recursion") return suite_recursion(opt);
  if (name == "c1c2") return suite_chern_extraction(opt);
  if (name == "branches") return suite_branches(opt);
  if (name == "specialize") return suite_specialization(opt);
  if (name == "section") return suite_section(opt);
  throw DomainError("unknown-suite", "unknown identity suite '" + name + "'");
}

}  // namespace ellbundle
