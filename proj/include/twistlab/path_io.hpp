// Path and table file formats. Paths load from JSON
// {"n": .., "grid": [..], "samples": [[row-major 2n x 2n], ..]} or from CSV
// with one row per sample, first column t. Tables are two-column CSV (t,
// value).
#pragma once

#include <string>

#include "twistlab/profile.hpp"
#include "twistlab/symplectic_path.hpp"

namespace twistlab {

SymplecticPath load_path_json(const std::string& filename);
SymplecticPath load_path_csv(const std::string& filename);

// Dispatches on extension (.json / anything else -> CSV).
SymplecticPath load_path(const std::string& filename);

void save_path_json(const SymplecticPath& path, const std::string& filename);

FunctionTable load_table_csv(const std::string& filename);
void save_table_csv(const FunctionTable& table, const std::string& filename);

}  // namespace twistlab
