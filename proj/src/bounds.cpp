#include "gsmash/bounds.hpp"

#include <sstream>

#include "gsmash/homalg.hpp"

namespace gsmash {

BoundsReport compute_bounds(AlgebraPtr a, const std::string& id,
                            std::optional<std::size_t> stable_dim_hint,
                            std::optional<std::size_t> odim_certificate) {
  BoundsReport r;
  r.algebra_id = id;
  r.loewy = loewy_length(*a);
  r.semisimple = r.loewy == 1;
  if (r.semisimple) {
    r.notes.push_back("semisimple; representation-dimension bounds not applicable");
    return r;
  }
  r.self_injective = is_self_injective(a);

  std::size_t lower = 2;
  r.notes.push_back("rep.dim >= 2: non-semisimple algebra");
  if (stable_dim_hint) {
    r.stable_dim_lower = *stable_dim_hint;
    r.stable_dim_lower_external = true;
    if (r.self_injective) {
      lower = std::max(lower, *stable_dim_hint + 2);
      r.notes.push_back("rep.dim >= stable-category dimension + 2 = " +
                        std::to_string(*stable_dim_hint + 2) +
                        " (stable dimension externally supplied via --hint, not computed)");
    } else {
      r.notes.push_back("stable-dim hint ignored for the lower bound: algebra is not self-injective");
    }
  }
  if (odim_certificate) {
    r.odim_lower = *odim_certificate;
    lower = std::max(lower, *odim_certificate + 2);
    r.notes.push_back("rep.dim >= Odim + 2 = " + std::to_string(*odim_certificate + 2) +
                      " (from a lattice certificate)");
  }
  r.repdim_lower = lower;
  if (r.self_injective) {
    r.repdim_upper = r.loewy;
    r.notes.push_back("rep.dim <= Loewy length = " + std::to_string(r.loewy) +
                      " (self-injective upper bracket)");
    r.stable_dim_upper = r.loewy - 2;
    r.notes.push_back("stable-category dimension <= Loewy length - 2 = " +
                      std::to_string(r.loewy - 2));
  } else {
    r.notes.push_back("no upper bracket: the Loewy-length bound needs self-injectivity");
  }
  return r;
}

std::string format_bounds(const BoundsReport& r) {
  std::ostringstream os;
  os << "bounds for " << r.algebra_id << "\n";
  if (r.semisimple) {
    os << "  semisimple; bounds not applicable\n";
    return os.str();
  }
  os << "  Loewy length: " << r.loewy << "\n";
  os << "  self-injective: " << (r.self_injective ? "yes" : "no") << "\n";
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string("unknown");
  };
  os << "  stable-category dimension: [" << opt(r.stable_dim_lower) << ", "
     << opt(r.stable_dim_upper) << "]";
  if (r.stable_dim_lower_external) os << "  (lower bound externally supplied)";
  os << "\n";
  if (r.odim_lower) os << "  Odim lower bound: " << *r.odim_lower << "\n";
  os << "  rep.dim bracket: [" << opt(r.repdim_lower) << ", " << opt(r.repdim_upper) << "]\n";
  for (const std::string& n : r.notes) os << "    - " << n << "\n";
  return os.str();
}

}  // namespace gsmash
