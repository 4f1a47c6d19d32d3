#pragma once

#include <string>

#include "json.hpp"
#include "mvdual/duality.hpp"
#include "mvdual/finite_algebra.hpp"
#include "mvdual/geometry.hpp"
#include "mvdual/plfunction.hpp"
#include "mvdual/tangent.hpp"
#include "mvdual/term.hpp"

namespace mvd {

using Json = nlohmann::json;

// Wire formats. Rationals travel as "p/q" strings (plain "p" for integers)
// and round-trip bit-exactly. Machine output never contains floating point.
//
//   polyhedron   { "dim": n, "simplices": [ [ ["p/q", ...], ... ], ... ] }
//   presentation { "arity": n, "relations": [ ["s", "t"], ... ] }
//   plfunction   { "arity": n, "cells": [ { "vertices": [...],
//                                           "coeffs": [int, ...],
//                                           "const": int }, ... ] }
//   algebra      { "ambient": N, "elements": [ ["p/q", ...], ... ] }
//   spectrum     { "labels": [...], "points": [...] }
//   germ         { "base": [...], "coeffs": [[...], ...], "i0": n }
//   witness      { "S": simplex, "F": [vertex indices], "lambda": [...] }
//   tangent      { "base": [...], "directions": [[...], ...] }
//   zmap         { "sourceDim": m, "domain": polyhedron or null,
//                  "components": [plfunction, ...] }
//   homspec      { "source": presentation, "target": presentation,
//                  "images": ["term", ...] }

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json poly_to_json(const Polyhedron& p);
Polyhedron poly_from_json(const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json plfunction_to_json(const PLFunction& f);
PLFunction plfunction_from_json(const Json& j);

Json algebra_to_json(const FiniteMVAlgebra& a);
FiniteMVAlgebra algebra_from_json(const Json& j);

Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

Json germ_to_json(const CurveGerm& g);
CurveGerm germ_from_json(const Json& j);

Json witness_to_json(const OutgoingWitness& w);
OutgoingWitness witness_from_json(const Json& j);

Json tangent_to_json(const TangentTuple& t);
TangentTuple tangent_from_json(const Json& j);

Json zmap_to_json(const ZMap& z);
ZMap zmap_from_json(const Json& j);

Json homspec_to_json(const HomSpec& h);
HomSpec homspec_from_json(const Json& j);

// Parse with library error types (positions included).
Json parse_json(const std::string& text);

}  // namespace mvd
