#pragma once

#include <iosfwd>
#include <string>

#include "hyperfield/constructions.hpp"
#include "hyperfield/table.hpp"

namespace hyperfield {

/// Reads a ".hf" table: `name:`, `elements:` (index 0 is the zero), `one:`,
/// then `mul:` with n rows of n names and `add:` with n rows of n
/// brace-delimited name lists. Rejects non-symmetric and empty-set entries.
FiniteHyperfield load_hf(std::istream& in, const std::string& origin = "<stream>");
FiniteHyperfield load_hf_file(const std::string& path);

std::string format_hf(const FiniteHyperfield& F);
void save_hf_file(const FiniteHyperfield& F, const std::string& path);

/// Reads a ".phi" map: one `element-name: image-index` line per nonzero
/// element, covering all of them.
PhiMap load_phi(std::istream& in, const FiniteHyperfield& F, const std::string& origin = "<stream>");
PhiMap load_phi_file(const std::string& path, const FiniteHyperfield& F);

std::string format_phi(const FiniteHyperfield& F, const PhiMap& phi);
void save_phi_file(const FiniteHyperfield& F, const PhiMap& phi, const std::string& path);

}  // namespace hyperfield
