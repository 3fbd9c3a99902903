#include "ellbundle/json_io.hpp"

namespace ellbundle::json_io {

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError("json", std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw DomainError("json", std::string(what) + " must be a rational string or an integer");
}

template <typename T>
std::vector<T> vector_of(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError("json", std::string(what) + " must be an array");
  try {
    return j.get<std::vector<T>>();
  } catch (const nlohmann::json::exception&) {
    throw DomainError("json", std::string(what) + " has entries of the wrong type");
  }
}

}  // namespace

json to_json(const WeierstrassCurve& curve) {
  return {{"field", curve.field().name()}, {"g2", curve.g2().to_string()}, {"g3", curve.g3().to_string()}};
}

WeierstrassCurve curve_from_json(const json& j) {
  const Field field = Field::parse(j.contains("field") ? text_of(j.at("field"), "field") : std::string("Q"));
  return WeierstrassCurve(FieldElem::parse(text_of(member(j, "g2"), "g2"), field),
                          FieldElem::parse(text_of(member(j, "g3"), "g3"), field));
}

json to_json(const CurvePoint& p) {
  return {{"X", p.X().to_string()}, {"Y", p.Y().to_string()}, {"Z", p.Z().to_string()}};
}

CurvePoint point_from_json(const WeierstrassCurve& curve, const json& j) {
  const Field& field = curve.field();
  const FieldElem X = FieldElem::parse(text_of(member(j, "X"), "X"), field);
  const FieldElem Y = FieldElem::parse(text_of(member(j, "Y"), "Y"), field);
  const FieldElem Z = FieldElem::parse(text_of(member(j, "Z"), "Z"), field);
  if (Z.is_zero()) {
    if (!X.is_zero() || Y.is_zero()) throw DomainError("off-curve", "the only point at infinity is [0:1:0]");
    return curve.identity();
  }
  return curve.point(X / Z, Y / Z);
}

json to_json(const AtiyahBundle& v) {
  json comps = json::array();
  for (const auto& [sheaf, parts] : v.components()) {
    comps.push_back({{"point", sheaf.is_torsion_free() ? json("F") : to_json(sheaf.point())}, {"partition", parts}});
  }
  return {{"curve", to_json(v.curve())}, {"components", comps}};
}

AtiyahBundle bundle_from_json(const json& j) {
  const WeierstrassCurve curve = curve_from_json(member(j, "curve"));
  std::vector<std::pair<DegreeZeroSheaf, Partition>> comps;
  for (const auto& c : member(j, "components")) {
    const json& p = member(c, "point");
    DegreeZeroSheaf sheaf = p.is_string() && p.get<std::string>() == "F"
                                ? DegreeZeroSheaf::torsion_free()
                                : DegreeZeroSheaf::line_bundle(point_from_json(curve, p));
    comps.emplace_back(std::move(sheaf), vector_of<int>(member(c, "partition"), "partition"));
  }
  return AtiyahBundle(curve, std::move(comps));
}

json to_json(const LinearSystemDivisor& d) {
  json pts = json::array();
  for (const auto& [p, m] : d.smooth_part()) pts.push_back({{"point", to_json(p)}, {"multiplicity", m}});
  json out = {{"curve", to_json(d.curve())},
              {"degree", d.degree()},
              {"points", pts},
              {"singularMult", d.singular_mult()}};
  if (d.singular_mult() == 0) {
    out["classPoint"] = to_json(d.class_point());
    out["inLinearSystem"] = d.in_linear_system();
  }
  return out;
}

LinearSystemDivisor divisor_from_json(const json& j) {
  const WeierstrassCurve curve = curve_from_json(member(j, "curve"));
  std::map<CurvePoint, int> pts;
  for (const auto& entry : member(j, "points")) {
    const int m = entry.contains("multiplicity") ? entry.at("multiplicity").get<int>() : 1;
    pts[point_from_json(curve, member(entry, "point"))] += m;
  }
  const int singular = j.contains("singularMult") ? j.at("singularMult").get<int>() : 0;
  return LinearSystemDivisor(curve, std::move(pts), singular);
}

json to_json(const SpectralFiber& fiber) {
  json out = json::array();
  for (const auto& fp : fiber.points()) out.push_back({{"point", to_json(fp.point)}, {"index", fp.index}});
  return out;
}

json to_json(const GradedClass& x) {
  const auto& gens = x.ring()->generators();
  json terms = json::array();
  for (const auto& [m, q] : x.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (m[i] != 0) mono[gens[i]] = m[i];
    }
    terms.push_back({{"monomial", mono}, {"coefficient", to_string(q)}});
  }
  return {{"generators", gens}, {"truncation", x.ring()->truncation()}, {"terms", terms}, {"text", x.to_string()}};
}

json to_json(const SectionSpec& s) {
  json out = {{"picRank", s.pic.rank},
              {"L", s.pic.L},
              {"alpha", s.pic.alpha},
              {"n", s.n},
              {"dimB", s.pic.dim_base},
              {"flags", {{"trivialSection", s.is_trivial_section}, {"liesInH", s.lies_in_H}}}};
  if (s.pic.H) out["H"] = *s.pic.H;
  return out;
}

SectionSpec section_from_json(const json& j) {
  SectionSpec s;
  s.pic.L = vector_of<std::int64_t>(member(j, "L"), "L");
  s.pic.alpha = j.contains("alpha") ? vector_of<std::int64_t>(j.at("alpha"), "alpha")
                                    : PicVector(s.pic.L.size(), 0);
  s.pic.rank = j.contains("picRank") ? j.at("picRank").get<int>() : static_cast<int>(s.pic.L.size());
  if (j.contains("H")) s.pic.H = vector_of<std::int64_t>(j.at("H"), "H");
  s.pic.dim_base = j.contains("dimB") ? j.at("dimB").get<int>() : 1;
  s.n = member(j, "n").get<int>();
  if (j.contains("flags")) {
    const json& f = j.at("flags");
    s.is_trivial_section = f.value("trivialSection", false);
    s.lies_in_H = f.value("liesInH", false);
  }
  s.validate();
  return s;
}

json to_json(const SurfaceLattice& lattice) {
  return {{"generators", lattice.generators()},
          {"gram", lattice.gram()},
          {"H0", lattice.h0()},
          {"degL", lattice.deg_l()}};
}

SurfaceLattice lattice_from_json(const json& j) {
  return SurfaceLattice(vector_of<std::string>(member(j, "generators"), "generators"),
                        vector_of<std::vector<std::int64_t>>(member(j, "gram"), "gram"),
                        vector_of<std::int64_t>(member(j, "H0"), "H0"), member(j, "degL").get<std::int64_t>());
}

json to_json(const SplittingType& s) {
  return {{"degrees", s.degrees}, {"cotangent", s.cotangent}, {"rank", s.rank()}, {"degreeSum", s.degree_sum()},
          {"text", s.to_string()}};
}

json error_json(const DomainError& e) { return {{"error", e.code()}, {"message", e.what()}}; }

}  // namespace ellbundle::json_io
