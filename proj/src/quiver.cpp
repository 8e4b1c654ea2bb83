#include "gsmash/quiver.hpp"

#include <map>

namespace gsmash {

namespace {

constexpr std::size_t kMaxPaths = 100000;

struct PathEnumeration {
  // all paths of length < bound, ordered by length, trivial paths in vertex
  // order, longer paths lexicographically by arrow index sequence
  std::vector<BasisPath> paths;
  std::map<std::vector<std::size_t>, std::size_t> index_by_arrows;
  std::vector<std::size_t> trivial_index;  // per vertex
};

PathEnumeration enumerate_paths(const QuiverPresentation& pres,
                                const std::vector<std::vector<std::size_t>>& arrows_from,
                                const std::vector<std::pair<std::size_t, std::size_t>>& arrow_ends,
                                std::size_t bound) {
  PathEnumeration e;
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    e.trivial_index.push_back(e.paths.size());
    e.paths.push_back(BasisPath{v, v, {}});
  }
  std::size_t level_begin = 0, level_end = e.paths.size();
  for (std::size_t len = 1; len < bound; ++len) {
    for (std::size_t i = level_begin; i < level_end; ++i) {
      BasisPath p = e.paths[i];
      for (std::size_t a : arrows_from[p.target]) {
        BasisPath q = p;
        q.arrows.push_back(a);
        q.target = arrow_ends[a].second;
        e.index_by_arrows[q.arrows] = e.paths.size();
        e.paths.push_back(std::move(q));
        if (e.paths.size() > kMaxPaths)
          throw std::invalid_argument("path enumeration exceeds the desk-scale bound");
      }
    }
    level_begin = level_end;
    level_end = e.paths.size();
  }
  return e;
}

std::string path_label(const QuiverPresentation& pres, const BasisPath& p) {
  if (p.arrows.empty()) return "e_" + pres.vertices[p.source];
  std::string s;
  for (std::size_t a : p.arrows) {
    if (!s.empty()) s += "*";
    s += pres.arrows[a].name;
  }
  return s;
}

}  // namespace

LoadedAlgebra load_quiver_algebra(const QuiverPresentation& pres, const FieldSpec& field) {
  if (pres.vertices.empty()) throw std::invalid_argument("quiver needs at least one vertex");
  if (pres.nilpotency_bound < 1) throw std::invalid_argument("nilpotency bound must be >= 1");
  std::map<std::string, std::size_t> vertex_index;
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    if (vertex_index.count(pres.vertices[v]))
      throw std::invalid_argument("duplicate vertex label: " + pres.vertices[v]);
    vertex_index[pres.vertices[v]] = v;
  }
  std::map<std::string, std::size_t> arrow_index;
  std::vector<std::pair<std::size_t, std::size_t>> arrow_ends;
  std::vector<std::vector<std::size_t>> arrows_from(pres.vertices.size());
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const QuiverArrow& ar = pres.arrows[a];
    if (arrow_index.count(ar.name)) throw std::invalid_argument("duplicate arrow name: " + ar.name);
    if (!vertex_index.count(ar.source) || !vertex_index.count(ar.target))
      throw std::invalid_argument("arrow " + ar.name + " references an unknown vertex");
    arrow_index[ar.name] = a;
    arrow_ends.emplace_back(vertex_index[ar.source], vertex_index[ar.target]);
    arrows_from[vertex_index[ar.source]].push_back(a);
  }

  // validate relations: terms are composable paths of length >= 2 with common endpoints
  struct ResolvedTerm {
    Scalar coeff;
    std::vector<std::size_t> arrows;
  };
  std::vector<std::vector<ResolvedTerm>> relations;
  for (const QuiverRelation& rel : pres.relations) {
    if (rel.terms.empty()) continue;
    std::vector<ResolvedTerm> terms;
    std::size_t src = 0, tgt = 0;
    bool first = true;
    for (const PathTerm& t : rel.terms) {
      if (t.path.size() < 2)
        throw std::invalid_argument("relation term has length < 2");
      ResolvedTerm rt{t.coeff, {}};
      if (!(t.coeff.field() == field)) throw std::invalid_argument("relation coefficient field mismatch");
      for (const std::string& name : t.path) {
        auto it = arrow_index.find(name);
        if (it == arrow_index.end()) throw std::invalid_argument("unknown arrow in relation: " + name);
        if (!rt.arrows.empty() && arrow_ends[rt.arrows.back()].second != arrow_ends[it->second].first)
          throw std::invalid_argument("inconsistent source/target in a relation");
        rt.arrows.push_back(it->second);
      }
      std::size_t s = arrow_ends[rt.arrows.front()].first;
      std::size_t g = arrow_ends[rt.arrows.back()].second;
      if (first) {
        src = s;
        tgt = g;
        first = false;
      } else if (s != src || g != tgt) {
        throw std::invalid_argument("inconsistent source/target in a relation");
      }
      terms.push_back(std::move(rt));
    }
    relations.push_back(std::move(terms));
  }

  const std::size_t bound = pres.nilpotency_bound;
  PathEnumeration paths = enumerate_paths(pres, arrows_from, arrow_ends, bound + 1);
  // coordinates 0..cut-1 are the paths of length < bound; the tail (length ==
  // bound) is used only for the nilpotency consistency check
  std::size_t cut = 0;
  while (cut < paths.paths.size() && paths.paths[cut].arrows.size() < bound) ++cut;

  auto lookup = [&](const std::vector<std::size_t>& arrows,
                    std::size_t src) -> std::optional<std::size_t> {
    if (arrows.empty()) return paths.trivial_index[src];
    auto it = paths.index_by_arrows.find(arrows);
    if (it == paths.index_by_arrows.end()) return std::nullopt;
    return it->second;
  };

  // spanning set of the relation ideal at coordinates of length <= max_len
  // (longer terms are dropped: they lie in the ideal by the nilpotency bound)
  auto relation_span = [&](std::size_t max_len, std::size_t coord_count) {
    std::vector<std::vector<Scalar>> span;
    for (const std::vector<ResolvedTerm>& rel : relations) {
      std::size_t rel_src = arrow_ends[rel.front().arrows.front()].first;
      std::size_t rel_tgt = arrow_ends[rel.front().arrows.back()].second;
      for (std::size_t pi = 0; pi < paths.paths.size(); ++pi) {
        const BasisPath& prefix = paths.paths[pi];
        if (prefix.target != rel_src) continue;
        for (std::size_t qi = 0; qi < paths.paths.size(); ++qi) {
          const BasisPath& suffix = paths.paths[qi];
          if (suffix.source != rel_tgt) continue;
          std::vector<Scalar> vec(coord_count, Scalar::zero(field));
          bool nonzero = false;
          for (const ResolvedTerm& t : rel) {
            std::vector<std::size_t> arrows = prefix.arrows;
            arrows.insert(arrows.end(), t.arrows.begin(), t.arrows.end());
            arrows.insert(arrows.end(), suffix.arrows.begin(), suffix.arrows.end());
            if (arrows.size() > max_len) continue;
            std::optional<std::size_t> idx = lookup(arrows, prefix.source);
            if (!idx || *idx >= coord_count) continue;
            vec[*idx] = vec[*idx] + t.coeff;
            nonzero = true;
          }
          if (nonzero) span.push_back(std::move(vec));
        }
      }
    }
    return span;
  };

  QuotientSpace quotient(cut, relation_span(bound - 1, cut), field);

  // admissibility: no trivial path or arrow may fall into the ideal
  for (std::size_t v = 0; v < pres.vertices.size(); ++v)
    if (quotient.contains(unit_vector(cut, paths.trivial_index[v], field)))
      throw std::invalid_argument("relation ideal not admissible: trivial path at vertex " +
                                  pres.vertices[v] + " lies in the ideal");
  if (bound >= 2)
    for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
      std::optional<std::size_t> idx = lookup({a}, arrow_ends[a].first);
      if (idx && quotient.contains(unit_vector(cut, *idx, field)))
        throw std::invalid_argument("relation ideal not admissible: arrow " + pres.arrows[a].name +
                                    " lies in the ideal");
    }

  // nilpotency promise: every path of length == bound must reduce to zero
  // modulo the ideal truncated one level higher
  {
    QuotientSpace check(paths.paths.size(), relation_span(bound, paths.paths.size()), field);
    for (std::size_t i = cut; i < paths.paths.size(); ++i)
      if (!check.contains(unit_vector(paths.paths.size(), i, field)))
        throw std::invalid_argument(
            "nilpotency bound violated: path " + path_label(pres, paths.paths[i]) +
            " of length " + std::to_string(bound) + " is not in the relation ideal");
  }

  LoadedAlgebra out;
  StructureAlgebra& alg = out.algebra;
  alg.field = field;
  alg.dim = quotient.dim();
  for (std::size_t k = 0; k < quotient.dim(); ++k) {
    const BasisPath& p = paths.paths[quotient.kept()[k]];
    out.basis_paths.push_back(p);
    alg.basis_labels.push_back(path_label(pres, p));
  }
  alg.constants.assign(alg.dim * alg.dim * alg.dim, Scalar::zero(field));
  // product b_i * b_j: traverse path j, then path i
  for (std::size_t i = 0; i < alg.dim; ++i) {
    const BasisPath& p = out.basis_paths[i];
    for (std::size_t j = 0; j < alg.dim; ++j) {
      const BasisPath& q = out.basis_paths[j];
      if (q.target != p.source) continue;
      std::vector<std::size_t> arrows = q.arrows;
      arrows.insert(arrows.end(), p.arrows.begin(), p.arrows.end());
      if (arrows.size() >= bound) continue;  // in the ideal
      std::optional<std::size_t> idx = lookup(arrows, q.source);
      if (!idx) continue;
      std::vector<Scalar> coords = quotient.coords(unit_vector(cut, *idx, field));
      for (std::size_t k = 0; k < alg.dim; ++k) alg.c(i, j, k) = coords[k];
    }
  }
  alg.unit = zero_vector(alg.dim, field);
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    std::vector<Scalar> coords = quotient.coords(unit_vector(cut, paths.trivial_index[v], field));
    alg.unit = vector_add(alg.unit, coords);
  }
  // generators: trivial paths and arrows
  for (std::size_t k = 0; k < alg.dim; ++k)
    if (out.basis_paths[k].arrows.size() <= 1)
      alg.generators.push_back(unit_vector(alg.dim, k, field));
  return out;
}

}  // namespace gsmash
