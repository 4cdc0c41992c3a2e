#pragma once

#include <string>
#include <vector>

#include "bdecat/cfk2cfd.hpp"
#include "bdecat/diagram.hpp"
#include "bdecat/dmodules.hpp"
#include "bdecat/satellite.hpp"

namespace fixtures {

std::string path(const std::string& rel);

bdecat::TypeDStructure type_d(const std::string& name);   // data/typed/<name>.json
bdecat::AInfModule ainf(const std::string& name);         // data/ainf/<name>.json
bdecat::PatternClass pattern(const std::string& name);    // data/ainf/<name>.json
bdecat::CFKComplex cfk(const std::string& name);          // data/cfk/<name>.json
bdecat::BorderedDiagram diagram(const std::string& name); // data/diagrams/<name>.json

const std::vector<std::string>& knot_names();
const std::vector<std::string>& pattern_names();
const std::vector<std::string>& diagram_names();

}  // namespace fixtures
