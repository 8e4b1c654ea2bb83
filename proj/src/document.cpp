#include "gsmash/document.hpp"

#include <fstream>
#include <sstream>

namespace gsmash {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("document: " + what); }

const json& need(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

FieldSpec field_from_json(const json& j) {
  std::string kind = need(j, "kind").get<std::string>();
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime-field") return FieldSpec::prime_field(need(j, "characteristic").get<std::int64_t>());
  bad("unknown field kind '" + kind + "'");
}

json field_to_json(const FieldSpec& f) {
  json j;
  j["kind"] = f.kind == FieldKind::rationals ? "rationals" : "prime-field";
  if (f.kind == FieldKind::prime_field) j["characteristic"] = f.characteristic;
  return j;
}

ExactMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const FieldSpec& f) {
  if (!j.is_array() || j.size() != rows) bad("matrix has wrong row count");
  ExactMatrix m = zero_matrix(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) bad("matrix has wrong column count");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[i][c], f);
  }
  return m;
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Poly poly_from_json(const json& j, const FieldSpec& f) {
  if (!j.is_array()) bad("polynomial must be a coefficient array");
  std::vector<Scalar> coeffs;
  for (const json& c : j) coeffs.push_back(scalar_from_json(c, f));
  return Poly::from_coeffs(f, std::move(coeffs));
}

json poly_to_json(const Poly& p) {
  json a = json::array();
  for (const Scalar& c : p.coeffs()) a.push_back(scalar_to_json(c));
  return a;
}

PolyMatrix poly_matrix_from_json(const json& j, std::size_t n, const FieldSpec& f) {
  if (!j.is_array() || j.size() != n) bad("lattice matrix has wrong row count");
  PolyMatrix m = zero_poly_matrix(n, n, f);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad("lattice matrix has wrong column count");
    for (std::size_t c = 0; c < n; ++c) m(i, c) = poly_from_json(j[i][c], f);
  }
  return m;
}

json poly_matrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json scalar_to_json(const Scalar& s) {
  if (s.field().kind == FieldKind::rationals) return s.str();
  return s.residue();
}

Scalar scalar_from_json(const json& j, const FieldSpec& f) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
  if (j.is_number_integer()) return Scalar::of_int(j.get<std::int64_t>(), f);
  bad("scalar must be a string or an integer");
}

WorkbenchDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  WorkbenchDocument doc;
  doc.field = field_from_json(need(j, "field"));
  {
    const json& jg = need(j, "group");
    std::vector<std::string> elements = need(jg, "elements").get<std::vector<std::string>>();
    std::vector<std::vector<std::size_t>> table =
        need(jg, "table").get<std::vector<std::vector<std::size_t>>>();
    doc.group = group_from_table(elements, table);
  }
  const json& ja = need(j, "algebra");
  if (ja.contains("quiver")) {
    const json& jq = ja["quiver"];
    QuiverPresentation pres;
    pres.vertices = need(jq, "vertices").get<std::vector<std::string>>();
    for (const json& arrow : need(jq, "arrows")) {
      QuiverArrow a;
      a.name = need(arrow, "name").get<std::string>();
      a.source = need(arrow, "source").get<std::string>();
      a.target = need(arrow, "target").get<std::string>();
      a.degree = need(arrow, "degree").get<std::string>();
      pres.arrows.push_back(std::move(a));
    }
    if (jq.contains("relations"))
      for (const json& rel : jq["relations"]) {
        QuiverRelation r;
        for (const json& term : rel) {
          PathTerm t;
          t.coeff = scalar_from_json(need(term, "coeff"), doc.field);
          t.path = need(term, "path").get<std::vector<std::string>>();
          r.terms.push_back(std::move(t));
        }
        pres.relations.push_back(std::move(r));
      }
    pres.nilpotency_bound = need(jq, "nilpotency_bound").get<std::size_t>();
    doc.quiver = std::move(pres);
  } else if (ja.contains("constants")) {
    const json& jc = ja["constants"];
    RawAlgebraPayload raw;
    raw.algebra.field = doc.field;
    raw.algebra.dim = need(jc, "dim").get<std::size_t>();
    raw.algebra.basis_labels = need(jc, "basis_labels").get<std::vector<std::string>>();
    const json& tensor = need(jc, "tensor");
    const std::size_t d = raw.algebra.dim;
    if (tensor.size() != d) bad("tensor has wrong size");
    raw.algebra.constants.assign(d * d * d, Scalar::zero(doc.field));
    for (std::size_t i = 0; i < d; ++i) {
      if (tensor[i].size() != d) bad("tensor has wrong size");
      for (std::size_t jj = 0; jj < d; ++jj) {
        if (tensor[i][jj].size() != d) bad("tensor has wrong size");
        for (std::size_t k = 0; k < d; ++k)
          raw.algebra.c(i, jj, k) = scalar_from_json(tensor[i][jj][k], doc.field);
      }
    }
    const json& unit = need(jc, "unit");
    if (unit.size() != d) bad("unit has wrong length");
    for (const json& u : unit) raw.algebra.unit.push_back(scalar_from_json(u, doc.field));
    raw.degrees = need(jc, "degrees").get<std::vector<std::string>>();
    if (jc.contains("generators"))
      for (const json& g : jc["generators"]) {
        if (g.size() != d) bad("generator has wrong length");
        std::vector<Scalar> v;
        for (const json& x : g) v.push_back(scalar_from_json(x, doc.field));
        raw.algebra.generators.push_back(std::move(v));
      }
    doc.raw = std::move(raw);
  } else {
    bad("algebra must contain 'quiver' or 'constants'");
  }
  if (j.contains("modules"))
    for (auto it = j["modules"].begin(); it != j["modules"].end(); ++it) {
      ModulePayload p;
      p.dim = need(it.value(), "dim").get<std::size_t>();
      for (const json& act : need(it.value(), "action"))
        p.action.push_back(matrix_from_json(act, p.dim, p.dim, doc.field));
      doc.modules[it.key()] = std::move(p);
    }
  if (j.contains("lattices"))
    for (auto it = j["lattices"].begin(); it != j["lattices"].end(); ++it) {
      LatticePayload p;
      p.rank = need(it.value(), "rank").get<std::size_t>();
      for (const json& act : need(it.value(), "action"))
        p.action.push_back(poly_matrix_from_json(act, p.rank, doc.field));
      doc.lattices[it.key()] = std::move(p);
    }
  if (j.contains("meta")) doc.meta = j["meta"];
  return doc;
}

std::string serialize_document(const WorkbenchDocument& doc) {
  json j;
  j["field"] = field_to_json(doc.field);
  {
    json jg;
    jg["elements"] = doc.group.elements;
    jg["table"] = doc.group.table;
    jg["identity"] = doc.group.identity;
    jg["inverses"] = doc.group.inverses;
    j["group"] = std::move(jg);
  }
  if (doc.quiver) {
    json jq;
    jq["vertices"] = doc.quiver->vertices;
    json arrows = json::array();
    for (const QuiverArrow& a : doc.quiver->arrows) {
      json ja;
      ja["name"] = a.name;
      ja["source"] = a.source;
      ja["target"] = a.target;
      ja["degree"] = a.degree;
      arrows.push_back(std::move(ja));
    }
    jq["arrows"] = std::move(arrows);
    json rels = json::array();
    for (const QuiverRelation& r : doc.quiver->relations) {
      json jr = json::array();
      for (const PathTerm& t : r.terms) {
        json jt;
        jt["coeff"] = scalar_to_json(t.coeff);
        jt["path"] = t.path;
        jr.push_back(std::move(jt));
      }
      rels.push_back(std::move(jr));
    }
    jq["relations"] = std::move(rels);
    jq["nilpotency_bound"] = doc.quiver->nilpotency_bound;
    j["algebra"]["quiver"] = std::move(jq);
  } else if (doc.raw) {
    json jc;
    const StructureAlgebra& a = doc.raw->algebra;
    jc["dim"] = a.dim;
    jc["basis_labels"] = a.basis_labels;
    json tensor = json::array();
    for (std::size_t i = 0; i < a.dim; ++i) {
      json plane = json::array();
      for (std::size_t jj = 0; jj < a.dim; ++jj) {
        json row = json::array();
        for (std::size_t k = 0; k < a.dim; ++k) row.push_back(scalar_to_json(a.c(i, jj, k)));
        plane.push_back(std::move(row));
      }
      tensor.push_back(std::move(plane));
    }
    jc["tensor"] = std::move(tensor);
    json unit = json::array();
    for (const Scalar& u : a.unit) unit.push_back(scalar_to_json(u));
    jc["unit"] = std::move(unit);
    jc["degrees"] = doc.raw->degrees;
    if (!a.generators.empty()) {
      json gens = json::array();
      for (const std::vector<Scalar>& g : a.generators) {
        json jg = json::array();
        for (const Scalar& x : g) jg.push_back(scalar_to_json(x));
        gens.push_back(std::move(jg));
      }
      jc["generators"] = std::move(gens);
    }
    j["algebra"]["constants"] = std::move(jc);
  } else {
    bad("document has no algebra");
  }
  if (!doc.modules.empty()) {
    json mods;
    for (const auto& [name, p] : doc.modules) {
      json jm;
      jm["dim"] = p.dim;
      json acts = json::array();
      for (const ExactMatrix& m : p.action) acts.push_back(matrix_to_json(m));
      jm["action"] = std::move(acts);
      mods[name] = std::move(jm);
    }
    j["modules"] = std::move(mods);
  }
  if (!doc.lattices.empty()) {
    json lats;
    for (const auto& [name, p] : doc.lattices) {
      json jl;
      jl["rank"] = p.rank;
      json acts = json::array();
      for (const PolyMatrix& m : p.action) acts.push_back(poly_matrix_to_json(m));
      jl["action"] = std::move(acts);
      lats[name] = std::move(jl);
    }
    j["lattices"] = std::move(lats);
  }
  if (!doc.meta.is_null()) j["meta"] = doc.meta;
  return j.dump(2) + "\n";
}

LoadedDocument load_document(const WorkbenchDocument& doc) {
  LoadedDocument out;
  out.source = doc;
  CheckReport grp = check_group(doc.group);
  if (!grp.ok) bad("group: " + grp.detail);
  if (doc.quiver) {
    LoadedAlgebra la = load_quiver_algebra(*doc.quiver, doc.field);
    std::vector<std::string> labels;
    for (const QuiverArrow& a : doc.quiver->arrows) labels.push_back(a.degree);
    out.gs = grade_loaded_algebra(la, doc.group, labels);
  } else {
    const RawAlgebraPayload& raw = *doc.raw;
    if (raw.algebra.basis_labels.size() != raw.algebra.dim) bad("basis label count mismatch");
    CheckReport alg = check_algebra(raw.algebra);
    if (!alg.ok) bad("algebra: " + alg.detail);
    if (raw.degrees.size() != raw.algebra.dim) bad("degree list length mismatch");
    GradedStructure gs;
    gs.algebra = std::make_shared<StructureAlgebra>(raw.algebra);
    gs.group = doc.group;
    for (const std::string& label : raw.degrees) {
      std::optional<std::size_t> g = doc.group.index_of(label);
      if (!g) bad("unknown group element label '" + label + "'");
      gs.degree.push_back(*g);
    }
    out.gs = std::move(gs);
  }
  CheckReport grading = validate_grading(out.gs);
  if (!grading.ok) bad("grading: " + grading.detail);
  out.algebra = out.gs.algebra;
  for (const auto& [name, p] : doc.modules) {
    if (p.action.size() != out.algebra->dim) bad("module '" + name + "' has wrong action count");
    FDModule m;
    m.algebra = out.algebra;
    m.dim = p.dim;
    m.action = p.action;
    CheckReport r = validate_module(m);
    if (!r.ok) bad("module '" + name + "': " + r.detail);
    out.modules[name] = std::move(m);
  }
  for (const auto& [name, p] : doc.lattices) {
    if (p.action.size() != out.algebra->dim) bad("lattice '" + name + "' has wrong action count");
    Lattice1D l;
    l.algebra = out.algebra;
    l.rank = p.rank;
    l.action = p.action;
    CheckReport r = validate_lattice(l);
    if (!r.ok) bad("lattice '" + name + "': " + r.detail);
    out.lattices[name] = std::move(l);
  }
  return out;
}

LoadedDocument load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document(parse_document(buf.str()));
}

WorkbenchDocument smash_document(const LoadedDocument& doc) {
  SmashProduct sp = smash_product(doc.gs);
  WorkbenchDocument out;
  out.field = doc.source.field;
  out.group = FiniteGroup::trivial();
  RawAlgebraPayload raw;
  raw.algebra = *sp.algebra;
  raw.degrees.assign(sp.algebra->dim, "e");
  out.raw = std::move(raw);
  json meta;
  meta["smash_of"] = doc.source.quiver ? "quiver algebra" : "constants algebra";
  json idems = json::array();
  for (std::size_t g = 0; g < sp.group.size(); ++g) {
    json v = json::array();
    for (const Scalar& x : sp.p_idempotent(g)) v.push_back(scalar_to_json(x));
    idems.push_back(std::move(v));
  }
  meta["p_idempotents"] = std::move(idems);
  json embeds = json::array();
  for (std::size_t i = 0; i < sp.base->dim; ++i) {
    json v = json::array();
    for (const Scalar& x : sp.embed(unit_vector(sp.base->dim, i, sp.base->field)))
      v.push_back(scalar_to_json(x));
    embeds.push_back(std::move(v));
  }
  meta["embed_images"] = std::move(embeds);
  out.meta = std::move(meta);
  return out;
}

}  // namespace gsmash
