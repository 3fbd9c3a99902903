#pragma once

#include "ellbundle/bundles.hpp"
#include "ellbundle/cohomology.hpp"
#include "ellbundle/error.hpp"
#include "ellbundle/fibration.hpp"
#include "ellbundle/spectral.hpp"
#include "ellbundle/stability.hpp"

#include <nlohmann/json.hpp>

namespace ellbundle::json_io {

using nlohmann::json;

/// {field, g2, g3}; rationals as "p/q" strings.
json to_json(const WeierstrassCurve& curve);
WeierstrassCurve curve_from_json(const json& j);

/// {X, Y, Z}.
json to_json(const CurvePoint& p);
CurvePoint point_from_json(const WeierstrassCurve& curve, const json& j);

/// {curve, components: [{point | "F", partition}]}.
json to_json(const AtiyahBundle& v);
AtiyahBundle bundle_from_json(const json& j);

/// {curve, degree, points: [{point, multiplicity}], singularMult, classPoint}.
json to_json(const LinearSystemDivisor& d);
LinearSystemDivisor divisor_from_json(const json& j);

/// [{point, index}].
json to_json(const SpectralFiber& fiber);

/// {generators, truncation, terms: [{monomial: {gen: exp}, coefficient}], text}.
json to_json(const GradedClass& x);

/// {picRank, L, alpha, H?, n, dimB, flags: {trivialSection, liesInH}}.
json to_json(const SectionSpec& s);
SectionSpec section_from_json(const json& j);

/// {generators, gram, H0, degL}.
json to_json(const SurfaceLattice& lattice);
SurfaceLattice lattice_from_json(const json& j);

json to_json(const SplittingType& s);

/// {error: code, message}.
json error_json(const DomainError& e);

}  // namespace ellbundle::json_io
