#include "mvdual/json_io.hpp"

namespace mvd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error("json: " + what, 0); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

int int_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_integer()) bad(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

Simplex simplex_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("simplex must be a non-empty vertex array");
    std::vector<Point> verts;
    for (const auto& v : j) verts.push_back(vec_from_json(v));
    return Simplex(std::move(verts));
}

Json simplex_to_json(const Simplex& s) {
    Json out = Json::array();
    for (const auto& v : s.vertices()) out.push_back(vec_to_json(v));
    return out;
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    bad("expected an integer");
}

Json int_to_json(const Int& v) {
    if (!v.fits_slong_p()) bad("integer coefficient out of the JSON range");
    return Json(static_cast<long long>(v.get_si()));
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(std::string("json: ") + e.what(), e.byte);
    }
}

Json rat_to_json(const Rat& r) { return Json(r.str()); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) bad("rational must be a \"p/q\" string");
    return Rat::from_string(j.get<std::string>());
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(rat_to_json(c));
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) bad("coordinate tuple must be an array");
    Vec out;
    for (const auto& c : j) out.push_back(rat_from_json(c));
    return out;
}

Json poly_to_json(const Polyhedron& p) {
    Json out;
    out["dim"] = p.ambient_dim();
    Json simps = Json::array();
    for (const auto& s : p.simplices()) simps.push_back(simplex_to_json(s));
    out["simplices"] = std::move(simps);
    return out;
}

Polyhedron poly_from_json(const Json& j) {
    int dim = int_field(j, "dim");
    const Json& simps = field(j, "simplices");
    if (!simps.is_array()) bad("'simplices' must be an array");
    std::vector<Simplex> out;
    for (const auto& s : simps) {
        Simplex simp = simplex_from_json(s);
        for (const auto& v : simp.vertices())
            if (!in_unit_cube(v)) bad("polyhedron vertex outside [0,1]^n");
        out.push_back(std::move(simp));
    }
    return Polyhedron(dim, std::move(out));
}

Json presentation_to_json(const Presentation& p) {
    Json out;
    out["arity"] = p.arity;
    Json rels = Json::array();
    for (const auto& [s, t] : p.relations) rels.push_back(Json::array({s.str(), t.str()}));
    out["relations"] = std::move(rels);
    return out;
}

Presentation presentation_from_json(const Json& j) {
    int arity = int_field(j, "arity");
    const Json& rels = field(j, "relations");
    if (!rels.is_array()) bad("'relations' must be an array");
    std::vector<std::pair<Term, Term>> out;
    for (const auto& r : rels) {
        if (!r.is_array() || r.size() != 2) bad("each relation must be a [s, t] pair");
        out.emplace_back(parse_term(r[0].get<std::string>()), parse_term(r[1].get<std::string>()));
    }
    return Presentation(arity, std::move(out));
}

Json plfunction_to_json(const PLFunction& f) {
    Json out;
    out["arity"] = f.arity();
    Json cells = Json::array();
    for (const auto& c : f.cells()) {
        Json cell;
        cell["vertices"] = simplex_to_json(c.cell);
        Json coeffs = Json::array();
        for (const auto& k : c.piece.coeffs) coeffs.push_back(int_to_json(k));
        cell["coeffs"] = std::move(coeffs);
        cell["const"] = int_to_json(c.piece.constant);
        cells.push_back(std::move(cell));
    }
    out["cells"] = std::move(cells);
    return out;
}

PLFunction plfunction_from_json(const Json& j) {
    int arity = int_field(j, "arity");
    const Json& cells = field(j, "cells");
    if (!cells.is_array()) bad("'cells' must be an array");
    std::vector<PLCell> out;
    for (const auto& c : cells) {
        Simplex cell = simplex_from_json(field(c, "vertices"));
        AffinePiece piece;
        for (const auto& k : field(c, "coeffs")) piece.coeffs.push_back(int_from_json(k));
        piece.constant = int_from_json(field(c, "const"));
        out.push_back({std::move(cell), std::move(piece)});
    }
    return PLFunction(arity, std::move(out));
}

Json algebra_to_json(const FiniteMVAlgebra& a) {
    Json out;
    out["ambient"] = a.ambient();
    Json elems = Json::array();
    for (const auto& e : a.elements()) elems.push_back(vec_to_json(e));
    out["elements"] = std::move(elems);
    return out;
}

FiniteMVAlgebra algebra_from_json(const Json& j) {
    int ambient = int_field(j, "ambient");
    const Json& elems = field(j, "elements");
    if (!elems.is_array()) bad("'elements' must be an array");
    std::vector<Vec> out;
    for (const auto& e : elems) out.push_back(vec_from_json(e));
    return FiniteMVAlgebra(ambient, std::move(out));
}

Json spectrum_to_json(const Spectrum& s) {
    Json out;
    out["labels"] = s.labels;
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(vec_to_json(p));
    out["points"] = std::move(pts);
    return out;
}

Spectrum spectrum_from_json(const Json& j) {
    Spectrum out;
    const Json& labels = field(j, "labels");
    if (!labels.is_array()) bad("'labels' must be an array");
    for (const auto& l : labels) out.labels.push_back(l.get<std::string>());
    for (const auto& p : field(j, "points")) {
        Point pt = vec_from_json(p);
        if (pt.size() != out.labels.size()) bad("spectrum point arity differs from labels");
        out.points.push_back(std::move(pt));
    }
    return out;
}

Json germ_to_json(const CurveGerm& g) {
    Json out;
    out["base"] = vec_to_json(g.base());
    Json cs = Json::array();
    for (const auto& c : g.coeffs()) cs.push_back(vec_to_json(c));
    out["coeffs"] = std::move(cs);
    out["i0"] = g.i0();
    return out;
}

CurveGerm germ_from_json(const Json& j) {
    Point base = vec_from_json(field(j, "base"));
    std::vector<Vec> coeffs;
    for (const auto& c : field(j, "coeffs")) coeffs.push_back(vec_from_json(c));
    const Json& i0 = field(j, "i0");
    if (!i0.is_number_integer()) bad("'i0' must be an integer");
    return CurveGerm(std::move(base), std::move(coeffs), i0.get<long>());
}

Json witness_to_json(const OutgoingWitness& w) {
    Json out;
    out["S"] = simplex_to_json(w.simplex);
    out["F"] = w.face;
    Json ls = Json::array();
    for (const auto& l : w.lambdas) ls.push_back(rat_to_json(l));
    out["lambda"] = std::move(ls);
    return out;
}

OutgoingWitness witness_from_json(const Json& j) {
    Simplex s = simplex_from_json(field(j, "S"));
    const Json& face = field(j, "F");
    if (!face.is_array()) bad("'F' must be a vertex index array");
    std::vector<int> ixs;
    for (const auto& f : face) {
        if (!f.is_number_integer()) bad("face indices must be integers");
        ixs.push_back(f.get<int>());
    }
    std::vector<Rat> ls;
    for (const auto& l : field(j, "lambda")) ls.push_back(rat_from_json(l));
    return OutgoingWitness(std::move(s), std::move(ixs), std::move(ls));
}

Json tangent_to_json(const TangentTuple& t) {
    Json out;
    out["base"] = vec_to_json(t.base);
    Json dirs = Json::array();
    for (const auto& d : t.directions) dirs.push_back(vec_to_json(d));
    out["directions"] = std::move(dirs);
    return out;
}

TangentTuple tangent_from_json(const Json& j) {
    Point base = vec_from_json(field(j, "base"));
    std::vector<Vec> dirs;
    for (const auto& d : field(j, "directions")) dirs.push_back(vec_from_json(d));
    return TangentTuple(std::move(base), std::move(dirs));
}

Json zmap_to_json(const ZMap& z) {
    Json out;
    out["sourceDim"] = z.source_dim;
    out["domain"] = z.domain ? poly_to_json(*z.domain) : Json(nullptr);
    Json comps = Json::array();
    for (const auto& c : z.components) comps.push_back(plfunction_to_json(c));
    out["components"] = std::move(comps);
    return out;
}

ZMap zmap_from_json(const Json& j) {
    int src = int_field(j, "sourceDim");
    std::optional<Polyhedron> dom;
    const Json& d = field(j, "domain");
    if (!d.is_null()) dom = poly_from_json(d);
    std::vector<PLFunction> comps;
    for (const auto& c : field(j, "components")) comps.push_back(plfunction_from_json(c));
    return ZMap(src, std::move(dom), std::move(comps));
}

Json homspec_to_json(const HomSpec& h) {
    Json out;
    out["source"] = presentation_to_json(h.source);
    out["target"] = presentation_to_json(h.target);
    Json imgs = Json::array();
    for (const auto& t : h.images) imgs.push_back(t.str());
    out["images"] = std::move(imgs);
    return out;
}

HomSpec homspec_from_json(const Json& j) {
    Presentation src = presentation_from_json(field(j, "source"));
    Presentation tgt = presentation_from_json(field(j, "target"));
    std::vector<Term> images;
    for (const auto& t : field(j, "images")) images.push_back(parse_term(t.get<std::string>()));
    return HomSpec(std::move(src), std::move(tgt), std::move(images));
}

}  // namespace mvd
