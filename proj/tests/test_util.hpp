#pragma once

#include <string>
#include <vector>

#include "gsmash/graded.hpp"
#include "gsmash/quiver.hpp"

namespace gsmash::testutil {

// Grades a presentation with the degree labels carried by its arrows.
inline GradedStructure graded(const QuiverPresentation& pres, const FieldSpec& f,
                              const FiniteGroup& g) {
  LoadedAlgebra la = load_quiver_algebra(pres, f);
  std::vector<std::string> labels;
  for (const QuiverArrow& a : pres.arrows) labels.push_back(a.degree);
  return grade_loaded_algebra(la, g, labels);
}

// Trivial grading: every arrow in degree e of the one-element group.
inline GradedStructure graded_trivially(const QuiverPresentation& pres, const FieldSpec& f) {
  LoadedAlgebra la = load_quiver_algebra(pres, f);
  std::vector<std::string> labels(pres.arrows.size(), "e");
  return grade_loaded_algebra(la, FiniteGroup::trivial(), labels);
}

inline QuiverPresentation exterior_presentation(std::size_t n, const FieldSpec& f) {
  QuiverPresentation p;
  p.vertices = {"v"};
  for (std::size_t i = 1; i <= n; ++i)
    p.arrows.push_back({"x" + std::to_string(i), "v", "v", "1"});
  for (std::size_t i = 1; i <= n; ++i) {
    std::string xi = "x" + std::to_string(i);
    p.relations.push_back({{{Scalar::one(f), {xi, xi}}}});
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::string xj = "x" + std::to_string(j);
      p.relations.push_back({{{Scalar::one(f), {xi, xj}}, {Scalar::one(f), {xj, xi}}}});
    }
  }
  p.nilpotency_bound = n + 1;
  return p;
}

inline QuiverPresentation a2_presentation() {
  QuiverPresentation p;
  p.vertices = {"1", "2"};
  p.arrows.push_back({"a", "1", "2", "1"});
  p.nilpotency_bound = 2;
  return p;
}

inline QuiverPresentation loop_square_presentation(const FieldSpec& f) {
  QuiverPresentation p;
  p.vertices = {"v"};
  p.arrows.push_back({"x", "v", "v", "1"});
  p.relations.push_back({{{Scalar::one(f), {"x", "x"}}}});
  p.nilpotency_bound = 2;
  return p;
}

inline QuiverPresentation kronecker_presentation() {
  QuiverPresentation p;
  p.vertices = {"1", "2"};
  p.arrows.push_back({"a", "1", "2", "1"});
  p.arrows.push_back({"b", "1", "2", "1"});
  p.nilpotency_bound = 2;
  return p;
}

}  // namespace gsmash::testutil
