#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "gsmash/graded.hpp"
#include "gsmash/lattice.hpp"
#include "gsmash/module.hpp"

namespace gsmash {

// Raw structure-constant algebra payload with degree labels.
struct RawAlgebraPayload {
  StructureAlgebra algebra;
  std::vector<std::string> degrees;
};

struct ModulePayload {
  std::size_t dim = 0;
  std::vector<ExactMatrix> action;
};

struct LatticePayload {
  std::size_t rank = 0;
  std::vector<PolyMatrix> action;
};

// The JSON document: field, group, one algebra (quiver presentation or raw
// constants with degrees), named module and lattice payloads.
struct WorkbenchDocument {
  FieldSpec field;
  FiniteGroup group;
  std::optional<QuiverPresentation> quiver;
  std::optional<RawAlgebraPayload> raw;
  std::map<std::string, ModulePayload> modules;
  std::map<std::string, LatticePayload> lattices;
  nlohmann::json meta;  // optional free-form block, preserved verbatim
};

WorkbenchDocument parse_document(const std::string& text);
std::string serialize_document(const WorkbenchDocument& doc);

// Fully validated computational objects: group axioms, algebra axioms,
// grading, and every payload's module/lattice checks.
struct LoadedDocument {
  WorkbenchDocument source;
  GradedStructure gs;
  AlgebraPtr algebra;
  std::map<std::string, FDModule> modules;
  std::map<std::string, Lattice1D> lattices;
};

LoadedDocument load_document(const WorkbenchDocument& doc);
LoadedDocument load_document_file(const std::string& path);

// Document for a computed smash product: raw constants over the trivial
// grading, with the p_g idempotents and embed images recorded in meta.
WorkbenchDocument smash_document(const LoadedDocument& doc);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j, const FieldSpec& f);

}  // namespace gsmash
