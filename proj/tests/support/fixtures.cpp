#include "fixtures.hpp"

#include "bdecat/io.hpp"

namespace fixtures {

std::string path(const std::string& rel) { return std::string(BDECAT_DATA_DIR) + "/" + rel; }

bdecat::TypeDStructure type_d(const std::string& name) {
  return bdecat::parse_type_d(bdecat::read_file(path("typed/" + name + ".json")));
}

bdecat::AInfModule ainf(const std::string& name) {
  return bdecat::parse_ainf(bdecat::read_file(path("ainf/" + name + ".json")));
}

bdecat::PatternClass pattern(const std::string& name) {
  return bdecat::parse_pattern(bdecat::read_file(path("ainf/" + name + ".json")));
}

bdecat::CFKComplex cfk(const std::string& name) {
  return bdecat::parse_cfk(bdecat::read_file(path("cfk/" + name + ".json")));
}

bdecat::BorderedDiagram diagram(const std::string& name) {
  return bdecat::parse_diagram(bdecat::read_file(path("diagrams/" + name + ".json")));
}

const std::vector<std::string>& knot_names() {
  static const std::vector<std::string> n{"unknot",   "right_trefoil", "left_trefoil",
                                          "figure_eight", "torus_3_4",  "cable_2_m1_left_trefoil"};
  return n;
}

const std::vector<std::string>& pattern_names() {
  static const std::vector<std::string> n{"core", "synthetic_trefoil_pattern", "synthetic_p_pattern"};
  return n;
}

const std::vector<std::string>& diagram_names() {
  static const std::vector<std::string> n{"solid_torus", "handlebody_13", "handlebody_14",
                                          "twisted_p2",  "twisted_p3",    "rank_deficient"};
  return n;
}

}  // namespace fixtures
