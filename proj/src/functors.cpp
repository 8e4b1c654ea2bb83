#include "gsmash/functors.hpp"

namespace gsmash {

FDModule pull_up(const SmashProduct& sp, const FDModule& m) {
  if (!same_algebra(*m.algebra, *sp.base)) throw std::invalid_argument("module is not over the base algebra");
  const FieldSpec& f = sp.base->field;
  const std::size_t n = sp.group.size();
  FDModule out;
  out.algebra = sp.algebra;
  out.dim = n * m.dim;
  for (std::size_t k = 0; k < sp.algebra->dim; ++k) {
    auto [j, h] = sp.unindex(k);
    // b_j p_h: slot h -> slot deg(b_j)*h, block action[j]
    std::size_t to = sp.group.mul(sp.base_degree[j], h);
    ExactMatrix act = zero_matrix(out.dim, out.dim, f);
    act.paste(to * m.dim, h * m.dim, m.action[j]);
    out.action.push_back(std::move(act));
  }
  return out;
}

FDModule push_down(const SmashProduct& sp, const FDModule& n) {
  if (!same_algebra(*n.algebra, *sp.algebra)) throw std::invalid_argument("module is not over the smash product");
  FDModule out;
  out.algebra = sp.base;
  out.dim = n.dim;
  for (std::size_t i = 0; i < sp.base->dim; ++i)
    out.action.push_back(n.act_element(sp.embed(unit_vector(sp.base->dim, i, sp.base->field))));
  return out;
}

FDModule twist_module(const SmashProduct& sp, const FDModule& n, std::size_t x) {
  if (!same_algebra(*n.algebra, *sp.algebra)) throw std::invalid_argument("module is not over the smash product");
  FDModule out;
  out.algebra = n.algebra;
  out.dim = n.dim;
  out.action.resize(sp.algebra->dim, zero_matrix(n.dim, n.dim, sp.algebra->field));
  for (std::size_t k = 0; k < sp.algebra->dim; ++k) {
    auto [j, h] = sp.unindex(k);
    out.action[k] = n.action[sp.index(j, sp.group.mul(h, x))];
  }
  return out;
}

ExactMatrix pull_up_map(const SmashProduct& sp, const ExactMatrix& f) {
  const std::size_t n = sp.group.size();
  ExactMatrix big = zero_matrix(n * f.rows(), n * f.cols(), sp.base->field);
  for (std::size_t g = 0; g < n; ++g) big.paste(g * f.rows(), g * f.cols(), f);
  return big;
}

}  // namespace gsmash
