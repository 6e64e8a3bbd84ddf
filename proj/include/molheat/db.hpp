#pragma once

#include <string>
#include <vector>

#include "molheat/materials.hpp"
#include "molheat/spectro.hpp"

namespace molheat {

// CSV loaders for the bundled tables. Columns carry their unit in the header
// (GHz, THz, 1e-30 C m, ...); values are converted to SI on load. Blank cells
// become NaN for optional molecular constants and are invalid elsewhere.
std::vector<Molecule> load_molecules_csv(const std::string& path);
std::vector<MaterialModel> load_materials_csv(const std::string& path);

const Molecule& find_molecule(const std::vector<Molecule>& db, const std::string& name);
const MaterialModel& find_material(const std::vector<MaterialModel>& db,
                                   const std::string& name);

// MOLHEAT_DATA_DIR env var if set, otherwise the directory baked in at build
// time, otherwise "./data".
std::string default_data_dir();

} // namespace molheat
