#pragma once

#include "gsmash/document.hpp"

namespace gsmash {

// Built-in example documents: exterior-n, kronecker, kronecker-z2, a2-z2,
// loop-square-z2, each with its standard grading; the Kronecker documents
// carry the rank-2 lattice and a constant control lattice, the loop-square
// document a nilpotent-loop lattice and a constant control.
WorkbenchDocument build_example(const std::string& name, std::size_t n, const FieldSpec& field);

std::vector<std::string> example_names();

}  // namespace gsmash
