#include "cli.hpp"

#include "ellbundle/chern_formulas.hpp"
#include "ellbundle/identities.hpp"
#include "ellbundle/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

namespace ellbundle::cli {

namespace {

using json_io::json;
using json_io::to_json;

// ---------------------------------------------------------------------------
// Output

class Emitter {
 public:
  Emitter(std::ostream& out, bool as_json) : out_(out), json_(as_json) {}

  void emit(const std::string& text, const json& j) {
    if (json_) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
  }

 private:
  std::ostream& out_;
  bool json_;
};

// ---------------------------------------------------------------------------
// Value parsing

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '(' || c == ')'; }),
          s.end());
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<std::int64_t> parse_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  for (const auto& part : split(strip(s), ',')) {
    const Rational q = parse_rational(part);
    if (denominator(q) != 1) throw DomainError("parse", "expected an integer, got '" + part + "'");
    out.push_back(static_cast<std::int64_t>(numerator(q)));
  }
  return out;
}

Rational parse_q(const std::string& s) { return parse_rational(strip(s)); }

json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw DomainError("io", "cannot read " + arg.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError("json", e.what());
  }
}

Field parse_field(const std::string& s) {
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return Field::prime(std::stoll(s));
  }
  return Field::parse(s);
}

struct CurveArgs {
  std::string g2 = "4";
  std::string g3 = "0";
  std::string field = "Q";

  void install(CLI::App* cmd) {
    cmd->add_option("--g2", g2, "coefficient g2 (rational)")->capture_default_str();
    cmd->add_option("--g3", g3, "coefficient g3 (rational)")->capture_default_str();
    cmd->add_option("--field", field, "Q, GF(p) or a prime p")->capture_default_str();
  }

  WeierstrassCurve curve() const {
    const Field f = parse_field(field);
    return WeierstrassCurve(FieldElem::parse(strip(g2), f), FieldElem::parse(strip(g3), f));
  }
};

CurvePoint parse_point(const WeierstrassCurve& curve, const std::string& text) {
  const std::string s = strip(text);
  if (s == "O" || s == "p0") return curve.identity();
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw DomainError("parse", "points are written 'x,y' or 'O', got '" + text + "'");
  return curve.point(FieldElem::parse(parts[0], curve.field()), FieldElem::parse(parts[1], curve.field()));
}

std::vector<CurvePoint> parse_points(const WeierstrassCurve& curve, const std::string& text) {
  std::vector<CurvePoint> out;
  for (const auto& part : split(text, ';')) {
    if (!strip(part).empty()) out.push_back(parse_point(curve, part));
  }
  return out;
}

// "POINT:r1,r2" with POINT = "x,y", "O" or "F".
AtiyahBundle parse_bundle(const WeierstrassCurve& curve, const std::vector<std::string>& components) {
  std::vector<std::pair<DegreeZeroSheaf, Partition>> comps;
  for (const auto& c : components) {
    const auto colon = c.rfind(':');
    if (colon == std::string::npos) throw DomainError("parse", "components are written 'POINT:parts', got '" + c + "'");
    const std::string point = strip(c.substr(0, colon));
    Partition parts;
    for (auto v : parse_ints(c.substr(colon + 1))) parts.push_back(static_cast<int>(v));
    comps.emplace_back(point == "F" ? DegreeZeroSheaf::torsion_free()
                                    : DegreeZeroSheaf::line_bundle(parse_point(curve, point)),
                       std::move(parts));
  }
  return AtiyahBundle(curve, std::move(comps));
}

json points_json(const std::vector<CurvePoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

std::string points_text(const std::vector<CurvePoint>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : "\n") + p.to_string();
  return s;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string vector_text(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string divisor_class_text(const LinearSystemDivisor& d) {
  if (d.singular_mult() > 0) return "meets the singular point";
  const CurvePoint e = d.class_point();
  const std::string n = std::to_string(d.degree());
  if (e.is_identity()) return "|" + n + "p0|";
  return "|" + std::to_string(d.degree() - 1) + "p0 + e|, e = " + e.to_string();
}

// ---------------------------------------------------------------------------
// Verbs

class Verb {
 public:
  virtual ~Verb() = default;
  virtual void install(CLI::App* cmd) = 0;
  virtual void run(Emitter& out) = 0;
};

// Adds a child whose options may also be given to the parent.
CLI::App* child(CLI::App* parent, const std::string& name, const std::string& description) {
  CLI::App* sub = parent->add_subcommand(name, description);
  sub->fallthrough();
  return sub;
}

class CurveVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    cmd_ = cmd;
    curve_.install(cmd);
    cmd->require_subcommand(1);
    child(cmd, "classify", "fiber type");
    child(cmd, "discriminant", "g2^3 - 27 g3^2");
    child(cmd, "singular-point", "node or cusp");
    auto* add = child(cmd, "add", "P + Q");
    add->add_option("--P", p_, "point x,y or O")->required();
    add->add_option("--Q", q_, "point x,y or O")->required();
    auto* neg = child(cmd, "neg", "-P");
    neg->add_option("--P", p_, "point x,y or O")->required();
    auto* mul = child(cmd, "mul", "k P");
    mul->add_option("--P", p_, "point x,y or O")->required();
    mul->add_option("--k", k_, "integer multiplier")->required();
    auto* tors = child(cmd, "torsion", "n-torsion points");
    tors->add_option("--n", n_, "order")->required();
    auto* lin = child(cmd, "in-linear-system", "is the point multiset in |n p0|");
    lin->add_option("--n", n_, "degree")->required();
    lin->add_option("--points", points_, "points separated by ';'")->required();
    child(cmd, "order", "order of the smooth locus (prime fields)");
  }

  void run(Emitter& out) override {
    const WeierstrassCurve c = curve_.curve();
    const std::string sub = cmd_->get_subcommands().front()->get_name();
    if (sub == "classify") {
      const std::string type = to_string(c.classify());
      const auto s = c.singular_point();
      const auto split_node = c.node_is_split();
      out.emit(type, {{"curve", to_json(c)},
                      {"fiberType", type},
                      {"discriminant", c.discriminant().to_string()},
                      {"singularPoint", s ? to_json(*s) : json(nullptr)},
                      {"nodeSplit", split_node ? json(*split_node) : json(nullptr)}});
    } else if (sub == "discriminant") {
      const std::string d = discriminant(c.g2(), c.g3()).to_string();
      out.emit(d, {{"discriminant", d}});
    } else if (sub == "singular-point") {
      const auto s = c.singular_point();
      out.emit(s ? s->to_string() : "none", {{"singularPoint", s ? to_json(*s) : json(nullptr)}});
    } else if (sub == "add" || sub == "neg" || sub == "mul") {
      const CurvePoint p = parse_point(c, p_);
      const CurvePoint r = sub == "add"   ? c.add(p, parse_point(c, q_))
                           : sub == "neg" ? c.neg(p)
                                          : c.scalar_mul(k_, p);
      out.emit(r.to_string(), {{"point", to_json(r)}, {"text", r.to_string()}});
    } else if (sub == "torsion") {
      const auto pts = c.torsion_points(n_);
      out.emit(points_text(pts) + "\ncount: " + std::to_string(pts.size()),
               {{"points", points_json(pts)}, {"count", pts.size()}});
    } else if (sub == "in-linear-system") {
      const bool in = c.in_linear_system(parse_points(c, points_), n_);
      out.emit(bool_text(in), {{"inLinearSystem", in}});
    } else if (sub == "order") {
      const std::int64_t order = c.smooth_locus_order();
      out.emit(std::to_string(order), {{"order", order}, {"fiberType", to_string(c.classify())}});
    }
  }

 private:
  CLI::App* cmd_ = nullptr;
  CurveArgs curve_;
  std::string p_, q_, points_;
  std::int64_t k_ = 1;
  int n_ = 1;
};

class ZetaVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    cmd_ = cmd;
    curve_.install(cmd);
    cmd->add_option("--component", components_, "component POINT:parts, POINT = x,y | O | F");
    cmd->add_option("--bundle", bundle_json_, "bundle JSON (inline or @file)");
    cmd->require_subcommand(0, 1);
    auto* hom = child(cmd, "hom", "dim Hom(V, W)");
    hom->add_option("--other", other_, "components of W (defaults to V)");
    child(cmd, "regular", "is V regular");
    auto* twist = child(cmd, "twist", "h0(V (x) lambda^-1)");
    twist->add_option("--lambda", lambda_, "point e of lambda = O(e - p0)")->required();
    child(cmd, "dual", "dual bundle");
    child(cmd, "det", "determinant point");
    auto* bound = child(cmd, "h0-bound", "max(mu0, 1) rank for a HN profile");
    bound->add_option("--profile", profile_, "rank:degree pieces separated by ';'")->required();
    bound->add_option("--h0", h0_, "h0 to check against the bound");
  }

  void run(Emitter& out) override {
    const std::string sub = cmd_->get_subcommands().empty() ? "" : cmd_->get_subcommands().front()->get_name();
    if (sub == "h0-bound") {
      std::vector<SlopePiece> pieces;
      for (const auto& part : split(profile_, ';')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw DomainError("parse", "profile pieces are rank:degree");
        pieces.push_back({static_cast<int>(parse_ints(part.substr(0, colon)).at(0)),
                          parse_ints(part.substr(colon + 1)).at(0)});
      }
      const Rational bound = h0_bound(pieces);
      json j = {{"bound", to_string(bound)}};
      std::string text = "bound: " + to_string(bound);
      if (h0_) {
        const bool ok = h0_bound_check(pieces, *h0_);
        j["holds"] = ok;
        text += "\nholds: " + bool_text(ok);
      }
      out.emit(text, j);
      return;
    }
    const AtiyahBundle v = bundle();
    if (sub.empty()) {
      const LinearSystemDivisor d = zeta(v);
      out.emit("divisor: " + d.to_string() + "\nclass: " + divisor_class_text(d),
               {{"divisor", to_json(d)}, {"class", divisor_class_text(d)}});
    } else if (sub == "hom") {
      const AtiyahBundle w = other_.empty() ? v : parse_bundle(v.curve(), other_);
      const int dim = dim_hom(v, w);
      out.emit(std::to_string(dim), {{"dimHom", dim}});
    } else if (sub == "regular") {
      const bool reg = is_regular(v);
      out.emit(bool_text(reg), {{"regular", reg}, {"dimEnd", dim_hom(v, v)}, {"rank", v.rank()}});
    } else if (sub == "twist") {
      const int h = h0_twist(v, DegreeZeroSheaf::line_bundle(parse_point(v.curve(), lambda_)));
      out.emit(std::to_string(h), {{"h0", h}});
    } else if (sub == "dual") {
      const AtiyahBundle d = dual(v);
      out.emit(d.to_string(), to_json(d));
    } else if (sub == "det") {
      const CurvePoint e = det_point(v);
      out.emit(e.to_string(), {{"point", to_json(e)}, {"trivial", e.is_identity()}});
    }
  }

 private:
  AtiyahBundle bundle() const {
    if (!bundle_json_.empty()) return json_io::bundle_from_json(read_json_arg(bundle_json_));
    if (components_.empty()) throw DomainError("usage", "give --component or --bundle");
    return parse_bundle(curve_.curve(), components_);
  }

  CLI::App* cmd_ = nullptr;
  CurveArgs curve_;
  std::vector<std::string> components_, other_;
  std::string bundle_json_, lambda_, profile_;
  std::optional<std::int64_t> h0_;
};

class RegularRepVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    curve_.install(cmd);
    cmd->add_option("--points", points_, "points of the divisor separated by ';'")->required();
  }

  void run(Emitter& out) override {
    const WeierstrassCurve c = curve_.curve();
    const AtiyahBundle v = regular_representative(LinearSystemDivisor::from_points(c, parse_points(c, points_)));
    out.emit(v.to_string(), to_json(v));
  }

 private:
  CurveArgs curve_;
  std::string points_;
};

class SpectralVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    cmd_ = cmd;
    curve_.install(cmd);
    cmd->add_option("--points", points_, "divisor points separated by ';'");
    cmd->require_subcommand(0, 1);
    auto* ram = child(cmd, "ramification", "divisors n e with e in E[n]");
    ram->add_option("--n", n_, "degree")->required();
    auto* sample = child(cmd, "sample", "divisors of |n p0| through e");
    sample->add_option("--n", n_, "degree")->required();
    sample->add_option("--e", e_, "point e")->required();
    sample->add_option("--samples", samples_, "number of samples")->capture_default_str();
    sample->add_option("--seed", seed_, "random seed")->capture_default_str();
    auto* irr = child(cmd, "irreducible", "irreducibility test on a sampled family");
    irr->add_option("--family", family_, "divisors separated by '|', points by ';'")->required();
  }

  void run(Emitter& out) override {
    const WeierstrassCurve c = curve_.curve();
    const std::string sub = cmd_->get_subcommands().empty() ? "" : cmd_->get_subcommands().front()->get_name();
    if (sub.empty()) {
      if (points_.empty()) throw DomainError("usage", "give --points");
      const SpectralFiber f = fiber(LinearSystemDivisor::from_points(c, parse_points(c, points_)));
      std::string text;
      for (const auto& fp : f.points()) {
        text += (text.empty() ? "" : "\n") + fp.point.to_string() + " index " + std::to_string(fp.index);
      }
      text += "\nunramified: " + bool_text(f.is_unramified());
      out.emit(text, {{"points", to_json(f)}, {"unramified", f.is_unramified()}, {"maxIndex", f.max_index()}});
    } else if (sub == "ramification" || sub == "sample") {
      const auto divisors = sub == "ramification" ? full_ramification_locus(c, n_)
                                                  : fiber_of_r(c, n_, parse_point(c, e_), samples_, seed_);
      std::string text;
      json arr = json::array();
      for (const auto& d : divisors) {
        text += d.to_string() + "\n";
        arr.push_back(to_json(d));
      }
      out.emit(text + "count: " + std::to_string(divisors.size()), {{"divisors", arr}, {"count", divisors.size()}});
    } else if (sub == "irreducible") {
      std::vector<LinearSystemDivisor> fam;
      for (const auto& member : split(family_, '|')) {
        fam.push_back(LinearSystemDivisor::from_points(c, parse_points(c, member)));
      }
      const bool irr = cover_is_irreducible(fam);
      out.emit(bool_text(irr), {{"irreducible", irr}, {"samples", fam.size()}});
    }
  }

 private:
  CLI::App* cmd_ = nullptr;
  CurveArgs curve_;
  std::string points_, e_, family_;
  int n_ = 2;
  int samples_ = 10;
  std::uint64_t seed_ = 0;
};

class ChernVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    cmd_ = cmd;
    cmd->add_option("--n", n_, "rank n")->capture_default_str();
    cmd->add_option("--a", a_, "twist a")->capture_default_str();
    cmd->add_option("--d", d_, "extension degree d")->capture_default_str();
    cmd->add_option("--b", b_, "twist b by O(b) (single curve)")->capture_default_str();
    cmd->add_option("--c", c_, "parameter c of the series ratio")->capture_default_str();
    cmd->add_option("--ring", ring_, "fibration | curve | section | surface")->capture_default_str();
    cmd->add_option("--kind", kind_, "ch | c | both")->capture_default_str();
    cmd->add_option("--branch", branch_, "product formula branch 0, 1, 2 for c(U_a)");
    cmd->add_flag("--naive-ranges", naive_, "read empty product ranges as 1");
    cmd->add_flag("--specialize", specialize_, "map L -> 0, sigma -> t, zeta -> h");
    cmd->add_option("--weight", weight_, "print only this weight");
    cmd->add_option("--expr", expr_, "class expression (expr family)");
    cmd->add_option("--truncation", truncation_, "truncation weight N");
    cmd->require_subcommand(1);
    for (const char* fam : {"ua", "ud", "u", "u0", "vn", "wn", "wn-sigma", "increment", "hyperplane", "c1", "c2",
                            "ratio", "expr"}) {
      child(cmd, fam, std::string("family ") + fam);
    }
  }

  void run(Emitter& out) override {
    const int N = truncation_ ? *truncation_ : default_truncation();
    const std::string fam = cmd_->get_subcommands().front()->get_name();
    const bool curve = ring_ == "curve";
    if (!curve && ring_ != "fibration" && fam != "expr") {
      throw DomainError("usage", "--ring must be fibration or curve for family " + fam);
    }
    const RingPtr fib = RingSpec::fibration(N);
    std::optional<GradedClass> ch, c;
    if (fam == "ua" || fam == "u0") {
      const int a = fam == "u0" ? 0 : a_;
      if (curve) {
        ch = ch_Ua_twist_single_curve(n_, a, b_, N);
        if (b_ == 0) c = c_Ua_single_curve(n_, a, N);
      } else {
        ch = ch_Ua_fibration(fib, n_, a);
        c = branch_ ? c_Ua_fibration_branch(fib, n_, a, *branch_, !naive_) : c_Ua_fibration(fib, n_, a);
      }
    } else if (fam == "ud") {
      if (curve) {
        ch = ch_Ud_single_curve(n_, d_, N);
        c = c_Ud_single_curve(n_, d_, N);
      } else {
        ch = ch_Ud_fibration(fib, n_, d_);
        c = c_Ud_fibration(fib, n_, d_);
      }
    } else if (fam == "u") {
      ch = ch_U_poincare(n_, N);
      c = c_U_poincare(n_, N);
    } else if (fam == "vn") {
      ch = ch_Vn(fib, n_);
    } else if (fam == "wn") {
      ch = ch_Wn(fib, n_);
    } else if (fam == "wn-sigma") {
      ch = ch_Wn_on_sigma(fib, n_);
    } else if (fam == "increment") {
      ch = modification_increment(fib, n_, a_);
    } else if (fam == "hyperplane") {
      print_single(out, fam, hyperplane_class(fib, n_));
      return;
    } else if (fam == "c1") {
      print_single(out, fam, c1_Ua_displayed(fib, n_, a_));
      return;
    } else if (fam == "c2") {
      print_single(out, fam, c2_Ua_displayed(fib, n_, a_));
      return;
    } else if (fam == "ratio") {
      print_single(out, fam, series_ratio(c_, GradedClass::generator(fib, "L")));
      return;
    } else if (fam == "expr") {
      if (expr_.empty()) throw DomainError("usage", "give --expr");
      RingPtr ring = fib;
      if (ring_ == "curve") ring = RingSpec::single_curve(n_, N);
      if (ring_ == "section") ring = RingSpec::section(N);
      if (ring_ == "surface") ring = RingSpec::surface(N);
      print_single(out, fam, parse_class(ring, expr_));
      return;
    }
    if (specialize_ && !curve) {
      ch = specialize_to_single_curve(*ch, n_);
      if (c) c = specialize_to_single_curve(*c, n_);
    }
    if (kind_ != "ch" && !c) c = character_to_chern(*ch);
    const auto show = [this](const GradedClass& x) { return weight_ ? x.part(*weight_) : x; };
    json j = {{"family", fam}, {"n", n_}, {"ring", curve || specialize_ ? "curve" : "fibration"}};
    if (kind_ == "ch") {
      j["ch"] = to_json(show(*ch));
      out.emit(show(*ch).to_string(), j);
    } else if (kind_ == "c") {
      j["c"] = to_json(show(*c));
      out.emit(show(*c).to_string(), j);
    } else if (kind_ == "both") {
      j["ch"] = to_json(show(*ch));
      j["c"] = to_json(show(*c));
      j["newtonAgrees"] = character_to_chern(*ch) == *c;
      out.emit("ch = " + show(*ch).to_string() + "\nc = " + show(*c).to_string() +
                   "\nnewton agrees: " + bool_text(character_to_chern(*ch) == *c),
               j);
    } else {
      throw DomainError("usage", "--kind must be ch, c or both");
    }
  }

 private:
  void print_single(Emitter& out, const std::string& fam, const GradedClass& x) {
    const GradedClass shown = weight_ ? x.part(*weight_) : x;
    out.emit(shown.to_string(), {{"family", fam}, {"class", to_json(shown)}});
  }

  CLI::App* cmd_ = nullptr;
  int n_ = 2, a_ = 0, d_ = 1, b_ = 0;
  std::int64_t c_ = 1;
  std::string ring_ = "fibration", kind_ = "ch", expr_;
  std::optional<int> branch_, weight_, truncation_;
  bool naive_ = false, specialize_ = false;
};

class SectionVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    cmd_ = cmd;
    cmd->add_option("--spec", spec_json_, "section JSON (inline or @file)");
    cmd->add_option("--n", n_, "rank n")->capture_default_str();
    cmd->add_option("--L", L_, "class L in Pic B, comma separated")->capture_default_str();
    cmd->add_option("--alpha", alpha_, "class alpha = c1(M)")->capture_default_str();
    cmd->add_option("--dimB", dim_b_, "dimension of B")->capture_default_str();
    cmd->add_flag("--trivial", trivial_, "the trivial section (alpha = 0)");
    cmd->add_option("--a", a_, "twist a")->capture_default_str();
    cmd->add_option("--truncation", truncation_, "truncation weight N");
    cmd->require_subcommand(1);
    child(cmd, "ch", "ch V_{A,a}");
    child(cmd, "det", "det V_{A,a} in Pic B");
    child(cmd, "solve", "a and N0 with trivial determinant");
    auto* twist = child(cmd, "c1-twist", "c1 of V_{A,0}[N]");
    twist->add_option("--pushforward", pushforward_, "(g_A)_* c1(N) in Pic B")->required();
    child(cmd, "parity", "symmetric-bundle parity condition");
    child(cmd, "reducible", "increment and [D] of the reducible recursion");
    child(cmd, "cover-class", "class of the spectral cover");
    child(cmd, "normal-ch", "ch of the normal bundle of the section");
    auto* split_cmd = child(cmd, "splitting", "splitting type on a slice");
    split_cmd->add_flag("--at-p0", at_p0_, "slice over e = p0");
    split_cmd->add_flag("--generic-line", generic_line_, "restrict to a generic line");
    child(cmd, "surface-c2", "c2 of V_{A,a} over a curve");
  }

  void run(Emitter& out) override {
    const std::string sub = cmd_->get_subcommands().front()->get_name();
    if (sub == "splitting") {
      const SplittingType s = splitting_type_slice(n_, a_, at_p0_, generic_line_);
      out.emit(s.to_string() + "\ndegree sum: " + std::to_string(s.degree_sum()), to_json(s));
      return;
    }
    const SectionSpec s = spec();
    const int N = truncation_ ? *truncation_ : default_truncation();
    const RingPtr ring = section_ring(s, N);
    if (sub == "ch") {
      const GradedClass ch = ch_VAa(s, a_, ring);
      out.emit(ch.to_string(), {{"ch", to_json(ch)}});
    } else if (sub == "det") {
      const PicVector det = det_VAa(s, a_);
      const bool agrees = evaluate_on_base(ch_VAa(s, a_, ring).part(1), s) == det;
      out.emit(vector_text(det) + "\nmatches ch1: " + bool_text(agrees), {{"det", det}, {"matchesCh1", agrees}});
    } else if (sub == "solve") {
      const auto sol = trivial_det_solve(s);
      if (!sol) {
        out.emit("no solution", {{"solution", nullptr}});
      } else {
        out.emit("a = " + std::to_string(sol->a) + " mod " + std::to_string(s.n) + "\nN0 = " + vector_text(sol->N0),
                 {{"solution", {{"a", sol->a}, {"N0", sol->N0}}}});
      }
    } else if (sub == "c1-twist") {
      const PicVector c1 = c1_VA0_twist(s, parse_ints(pushforward_));
      out.emit(vector_text(c1), {{"c1", c1}});
    } else if (sub == "parity") {
      const std::string verdict = to_string(symmetric_parity_check(s));
      out.emit(verdict, {{"verdict", verdict}});
    } else if (sub == "reducible") {
      const ReducibleStep step = reducible_step(s, a_, ring);
      SectionSpec smaller = s;
      smaller.n = s.n - 1;
      const bool holds = ch_VAa(s, a_, ring) - ch_VAa(smaller, a_, ring) == step.increment;
      out.emit("increment: " + step.increment.to_string() + "\n[D] = " + vector_text(step.divisor) +
                   "\nholds: " + bool_text(holds),
               {{"increment", to_json(step.increment)}, {"D", step.divisor}, {"holds", holds}});
    } else if (sub == "cover-class") {
      const SpectralCoverClass cc = spectral_cover_class(s);
      out.emit("(" + std::to_string(cc.sigma_multiple) + " sigma, " + vector_text(cc.alpha) + ")",
               {{"sigmaMultiple", cc.sigma_multiple}, {"alpha", cc.alpha}});
    } else if (sub == "normal-ch") {
      const GradedClass ch = normal_bundle_ch(s, ring);
      out.emit(ch.to_string(), {{"ch", to_json(ch)}});
    } else if (sub == "surface-c2") {
      const GradedClass c2 = surface_c2(s, a_, ring);
      const Rational deg = surface_degree(c2, s);
      out.emit(c2.to_string() + "\ndegree: " + to_string(deg), {{"c2", to_json(c2)}, {"degree", to_string(deg)}});
    }
  }

 private:
  SectionSpec spec() const {
    if (!spec_json_.empty()) return json_io::section_from_json(read_json_arg(spec_json_));
    SectionSpec s;
    s.n = n_;
    s.pic.L = parse_ints(L_);
    s.pic.alpha = trivial_ && alpha_ == "0" ? PicVector(s.pic.L.size(), 0) : parse_ints(alpha_);
    s.pic.rank = static_cast<int>(s.pic.L.size());
    s.pic.dim_base = dim_b_;
    s.is_trivial_section = trivial_;
    s.validate();
    return s;
  }

  CLI::App* cmd_ = nullptr;
  std::string spec_json_, L_ = "1", alpha_ = "0", pushforward_;
  int n_ = 2, a_ = 0, dim_b_ = 1;
  bool trivial_ = false, at_p0_ = false, generic_line_ = false;
  std::optional<int> truncation_;
};

BundleNumerics parse_numerics(const std::string& text) {
  // "rank;c1;c2" with c1 comma separated.
  const auto parts = split(text, ';');
  if (parts.size() != 3) throw DomainError("parse", "numerics are written 'rank;c1;c2'");
  return {static_cast<int>(parse_ints(parts[0]).at(0)), parse_ints(parts[1]), parse_ints(parts[2]).at(0)};
}

class StabilityVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    cmd_ = cmd;
    cmd->add_option("--lattice", lattice_, "lattice JSON (inline or @file); default sigma^2 = -1")->capture_default_str();
    cmd->require_subcommand(1);
    auto* slope_cmd = child(cmd, "slope", "c1 . H / rank");
    slope_cmd->add_option("--bundle", w_, "rank;c1;c2")->required();
    slope_cmd->add_option("--polarization", polarization_, "lattice vector")->required();
    auto* bog = child(cmd, "bogomolov", "2 r c2 - (r-1) c1^2");
    bog->add_option("--bundle", w_, "rank;c1;c2")->required();
    auto* ident = child(cmd, "identity", "Bogomolov identity for V' + V''");
    ident->add_option("--sub", w_, "rank;c1;c2 of V'")->required();
    ident->add_option("--quotient", w2_, "rank;c1;c2 of V''")->required();
    auto* thr = child(cmd, "threshold", "t0 = n^3 c2 / 4");
    thr->add_option("--n", n_, "rank")->required();
    thr->add_option("--c2", c2_, "c2")->required();
    auto* walls = child(cmd, "walls", "wall search in a box");
    walls->add_option("--n", n_, "rank")->required();
    walls->add_option("--c2", c2_, "c2")->required();
    walls->add_option("--t", t_, "polarization parameter t (rational)")->required();
    walls->add_option("--bound", bound_, "box bound")->capture_default_str();
    auto* mod = child(cmd, "modify", "c2 after an allowable modification");
    mod->add_option("--c2", c2_, "c2")->required();
    mod->add_option("--e", e_, "degree e < 0")->required();
    auto* seq = child(cmd, "sequence", "iterate allowable modifications");
    seq->add_option("--c2", c2_, "c2")->required();
    seq->add_option("--e", e_, "degree e < 0")->required();
  }

  void run(Emitter& out) override {
    const SurfaceLattice lattice = lattice_ == "rational-elliptic" ? SurfaceLattice::rational_elliptic()
                                                                   : json_io::lattice_from_json(read_json_arg(lattice_));
    const std::string sub = cmd_->get_subcommands().front()->get_name();
    if (sub == "slope") {
      const Rational mu = slope(lattice, parse_numerics(w_), parse_ints(polarization_));
      out.emit(to_string(mu), {{"slope", to_string(mu)}});
    } else if (sub == "bogomolov") {
      const std::int64_t b = bogomolov(lattice, parse_numerics(w_));
      out.emit(std::to_string(b), {{"bogomolov", b}});
    } else if (sub == "identity") {
      const BundleNumerics v1 = parse_numerics(w_);
      const BundleNumerics v2 = parse_numerics(w2_);
      const bool holds = bogomolov_identity_check(lattice, v1, v2);
      const bool bound = d2_bound_check(lattice, v1, v2);
      const LatticeVector d = destabilizing_difference(v1, v2);
      out.emit("identity: " + bool_text(holds) + "\nD = " + vector_text(d) + "\nD^2 bound: " + bool_text(bound),
               {{"identity", holds}, {"D", d}, {"D2", lattice.dot(d, d)}, {"d2Bound", bound}});
    } else if (sub == "threshold") {
      const Rational t0 = stability_threshold(n_, c2_);
      out.emit(to_string(t0), {{"t0", to_string(t0)}});
    } else if (sub == "walls") {
      const auto found = wall_search(lattice, n_, c2_, parse_q(t_), bound_);
      std::string text;
      for (const auto& d : found) {
        text += vector_text(d) + " D^2=" + std::to_string(lattice.dot(d, d)) + "\n";
      }
      out.emit(text + "count: " + std::to_string(found.size()), {{"walls", found}, {"count", found.size()}});
    } else if (sub == "modify") {
      const std::int64_t r = allowable_modification_c2(c2_, e_);
      out.emit(std::to_string(r), {{"c2", r}});
    } else if (sub == "sequence") {
      const auto seq = modification_sequence(c2_, e_);
      out.emit(vector_text(seq), {{"sequence", seq}, {"steps", seq.size() - 1}});
    }
  }

 private:
  CLI::App* cmd_ = nullptr;
  std::string lattice_ = "rational-elliptic", w_, w2_, polarization_, t_ = "0";
  int n_ = 2, bound_ = 10;
  std::int64_t c2_ = 0, e_ = -1;
};

class VerifyVerb : public Verb {
 public:
  void install(CLI::App* cmd) override {
    cmd->add_option("--suite", suite_, "suite name or 'all'")->capture_default_str();
    cmd->add_option("--nmin", opt_.nmin, "smallest n")->capture_default_str();
    cmd->add_option("--nmax", opt_.nmax, "largest n")->capture_default_str();
    cmd->add_option("--amin", opt_.amin, "smallest a")->capture_default_str();
    cmd->add_option("--amax", opt_.amax, "largest a")->capture_default_str();
    cmd->add_option("--truncation", truncation_, "truncation weight N");
  }

  void run(Emitter& out) override {
    opt_.truncation = truncation_ ? *truncation_ : default_truncation();
    std::vector<std::string> names = suite_ == "all" ? suite_names() : std::vector<std::string>{suite_};
    int passed = 0;
    int failed = 0;
    std::string text;
    json arr = json::array();
    for (const auto& name : names) {
      const SuiteResult r = run_suite(name, opt_);
      passed += r.passed;
      failed += r.failed;
      text += name + ": " + std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed\n";
      for (const auto& f : r.failures) text += "  failed: " + f + "\n";
      arr.push_back({{"suite", name}, {"passed", r.passed}, {"failed", r.failed}, {"failures", r.failures}});
    }
    out.emit(text + "total: " + std::to_string(passed) + " passed, " + std::to_string(failed) + " failed",
             {{"suites", arr}, {"passed", passed}, {"failed", failed}});
    if (failed > 0) throw DomainError("identity-failed", std::to_string(failed) + " identity checks failed");
  }

 private:
  std::string suite_ = "all";
  SuiteOptions opt_;
  std::optional<int> truncation_;
};

struct VerbEntry {
  const char* name;
  const char* description;
  std::function<std::unique_ptr<Verb>()> make;
};

const std::vector<VerbEntry>& dispatch_table() {
  static const std::vector<VerbEntry> table = {
      {"curve", "Weierstrass cubic arithmetic", [] { return std::make_unique<CurveVerb>(); }},
      {"zeta", "Atiyah bundles: zeta, Hom, regularity, duals", [] { return std::make_unique<ZetaVerb>(); }},
      {"regular-rep", "regular bundle with a given zeta", [] { return std::make_unique<RegularRepVerb>(); }},
      {"spectral-fiber", "spectral cover fibers and ramification", [] { return std::make_unique<SpectralVerb>(); }},
      {"chern", "Chern classes and characters of universal bundles", [] { return std::make_unique<ChernVerb>(); }},
      {"section", "bundles V_{A,a} attached to a section", [] { return std::make_unique<SectionVerb>(); }},
      {"stability", "elliptic surface stability numerics", [] { return std::make_unique<StabilityVerb>(); }},
      {"verify-identities", "run the identity suites", [] { return std::make_unique<VerifyVerb>(); }},
  };
  return table;
}

}  // namespace

std::vector<std::string> verbs() {
  std::vector<std::string> out;
  for (const auto& v : dispatch_table()) out.emplace_back(v.name);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact calculus for bundles on elliptic curves and elliptic fibrations", "ellbundle"};
  std::string format = "text";
  app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::unique_ptr<Verb>>> installed;
  for (const auto& entry : dispatch_table()) {
    CLI::App* cmd = app.add_subcommand(entry.name, entry.description);
    auto verb = entry.make();
    verb->install(cmd);
    installed.emplace_back(cmd, std::move(verb));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Emitter emitter(out, format == "json");
  for (auto& [cmd, verb] : installed) {
    if (!cmd->parsed()) continue;
    try {
      verb->run(emitter);
      return 0;
    } catch (const DomainError& e) {
      err << json_io::error_json(e).dump() << "\n";
      return e.code() == "usage" ? 2 : 1;
    }
  }
  err << app.help();
  return 2;
}

const std::vector<Route>& routes() {
  static const std::vector<Route> table = {
      {"curve.discriminant", {"curve", "discriminant", "--g2", "4", "--g3", "0"}},
      {"curve.classify", {"curve", "classify", "--g2", "0", "--g3", "0"}},
      {"curve.singular_point", {"curve", "singular-point", "--g2", "3", "--g3", "1"}},
      {"curve.add", {"curve", "add", "--P", "-1,0", "--Q", "0,0"}},
      {"curve.neg", {"curve", "neg", "--P", "1,0"}},
      {"curve.scalar_mul", {"curve", "mul", "--k", "2", "--P", "0,0"}},
      {"curve.torsion_points", {"curve", "torsion", "--n", "2"}},
      {"curve.in_linear_system", {"curve", "in-linear-system", "--n", "3", "--points", "0,0;1,0;-1,0"}},
      {"curve.smooth_locus_order", {"curve", "order", "--g2", "0", "--g3", "0", "--field", "GF(7)"}},
      {"bundles.zeta", {"zeta", "--component", "0,0:1", "--component", "1,0:1", "--component", "-1,0:1"}},
      {"bundles.dim_hom", {"zeta", "hom", "--component", "O:2,1"}},
      {"bundles.is_regular", {"zeta", "regular", "--component", "O:3"}},
      {"bundles.h0_twist", {"zeta", "twist", "--component", "O:2", "--lambda", "O"}},
      {"bundles.dual", {"zeta", "dual", "--component", "0,0:2"}},
      {"bundles.det_point", {"zeta", "det", "--component", "0,0:1", "--component", "1,0:1"}},
      {"bundles.h0_bound_check", {"zeta", "h0-bound", "--profile", "1:2;2:0", "--h0", "6"}},
      {"bundles.regular_representative", {"regular-rep", "--points", "0,0;0,0;O"}},
      {"spectral.fiber", {"spectral-fiber", "--points", "0,0;0,0"}},
      {"spectral.full_ramification_locus", {"spectral-fiber", "ramification", "--n", "2"}},
      {"spectral.fiber_of_r",
       {"spectral-fiber", "sample", "--field", "GF(13)", "--n", "3", "--e", "5,5", "--samples", "5"}},
      {"spectral.cover_is_irreducible", {"spectral-fiber", "irreducible", "--family", "O;0,0;0,0|O;1,0;1,0"}},
      {"cohomology.add_mul_scale", {"chern", "expr", "--expr", "(sigma + L)*sigma + 2*zeta"}},
      {"cohomology.exp", {"chern", "expr", "--expr", "exp(sigma)*sigma"}},
      {"cohomology.series_ratio", {"chern", "ratio", "--c", "3"}},
      {"cohomology.ch_to_c", {"chern", "ua", "--n", "3", "--a", "1", "--kind", "both"}},
      {"chern.ch_U0_singlecurve", {"chern", "u0", "--n", "3", "--ring", "curve"}},
      {"chern.c_U0_singlecurve", {"chern", "u0", "--n", "3", "--ring", "curve", "--kind", "c"}},
      {"chern.ch_Ua_twist_singlecurve", {"chern", "ua", "--n", "4", "--a", "1", "--b", "1", "--ring", "curve"}},
      {"chern.U_poincare", {"chern", "u", "--n", "4", "--kind", "both", "--ring", "curve"}},
      {"chern.ch_Ud_singlecurve", {"chern", "ud", "--n", "3", "--d", "1", "--ring", "curve"}},
      {"chern.c_Ud_singlecurve", {"chern", "ud", "--n", "3", "--d", "1", "--ring", "curve", "--kind", "c"}},
      {"chern.ch_Ud_fibration", {"chern", "ud", "--n", "3", "--d", "2"}},
      {"chern.ch_Ua_fibration", {"chern", "ua", "--n", "3", "--a", "0", "--ring", "fibration"}},
      {"chern.c_Ua_fibration", {"chern", "ua", "--n", "3", "--a", "-4", "--kind", "c", "--branch", "2"}},
      {"chern.c_Ud_fibration", {"chern", "ud", "--n", "4", "--d", "2", "--kind", "c"}},
      {"chern.modification_increment", {"chern", "increment", "--n", "3", "--a", "1"}},
      {"chern.c1_c2_displayed", {"chern", "c2", "--n", "3", "--a", "-1"}},
      {"chern.ch_Vn", {"chern", "vn", "--n", "2"}},
      {"chern.ch_Wn_on_sigma", {"chern", "wn-sigma", "--n", "3"}},
      {"chern.specialize", {"chern", "ua", "--n", "3", "--a", "2", "--specialize"}},
      {"fibration.ch_VAa", {"section", "ch", "--n", "2", "--L", "1", "--alpha", "0", "--trivial"}},
      {"fibration.det_VAa", {"section", "det", "--n", "2", "--a", "1", "--L", "0,1", "--alpha", "1,0", "--dimB", "2"}},
      {"fibration.trivial_det_solve", {"section", "solve", "--n", "2", "--L", "1", "--alpha", "3"}},
      {"fibration.c1_VA0_twist", {"section", "c1-twist", "--n", "2", "--L", "1", "--alpha", "3", "--pushforward", "5"}},
      {"fibration.symmetric_parity_check", {"section", "parity", "--n", "4", "--L", "1", "--alpha", "5"}},
      {"fibration.reducible_step", {"section", "reducible", "--n", "3", "--a", "1", "--L", "1", "--alpha", "2"}},
      {"fibration.spectral_cover_class", {"section", "cover-class", "--n", "3", "--L", "1", "--alpha", "2"}},
      {"fibration.normal_bundle_ch", {"section", "normal-ch", "--n", "2", "--L", "1", "--alpha", "1", "--dimB", "2"}},
      {"fibration.splitting_type_slice", {"section", "splitting", "--n", "3", "--a", "1", "--at-p0", "--generic-line"}},
      {"fibration.surface_c2", {"section", "surface-c2", "--n", "3", "--L", "1", "--alpha", "4"}},
      {"stability.slope", {"stability", "slope", "--bundle", "2;0,1;0", "--polarization", "1,0"}},
      {"stability.bogomolov", {"stability", "bogomolov", "--bundle", "3;0,1;2"}},
      {"stability.bogomolov_identity_check", {"stability", "identity", "--sub", "1;1,0;0", "--quotient", "1;-1,1;0"}},
      {"stability.stability_threshold", {"stability", "threshold", "--n", "2", "--c2", "1"}},
      {"stability.wall_search", {"stability", "walls", "--n", "2", "--c2", "1", "--t", "0"}},
      {"stability.allowable_modification_c2", {"stability", "modify", "--c2", "5", "--e", "-2"}},
      {"stability.modification_sequence", {"stability", "sequence", "--c2", "3", "--e", "-1"}},
      {"cli.verify_identities", {"verify-identities", "--suite", "master", "--nmax", "4"}},
  };
  return table;
}

}  // namespace ellbundle::cli
