#pragma once

#include <string>

#include "bdecat/cfk2cfd.hpp"
#include "bdecat/diagram.hpp"
#include "bdecat/dmodules.hpp"
#include "bdecat/grothendieck.hpp"
#include "bdecat/pmc.hpp"
#include "bdecat/satellite.hpp"

namespace bdecat {

// All parsers throw Error(ParseError) on malformed input, plus whatever the
// constructed object's own validation throws. Dumps are canonical JSON with
// sorted keys and two-space indentation.

std::string read_file(const std::string& path);

// "torus", "split<k>", a bare matching array or {"matching": [...]}.
Pmc parse_pmc(const std::string& text);
std::string dump_pmc(const Pmc& p);

AlgebraElement parse_expression(const Pmc& pmc, const std::string& expr);
// Coefficient expressions: "1", "rho(a,b;c,d)", torus names such as "rho12",
// strands notation "{1}->{2}:[2]", joined by '+'. The result is restricted to
// the idempotents of src and dst when that leaves it nonzero.
AlgebraElement parse_coefficient(const Pmc& pmc, const std::string& expr, const Subset& left,
                                 const Subset& right);
std::string coefficient_string(const Pmc& pmc, const AlgebraElement& a);

TypeDStructure parse_type_d(const std::string& text);
std::string dump_type_d(const TypeDStructure& n);

AInfModule parse_ainf(const std::string& text);
std::string dump_ainf(const AInfModule& m);

// A-infinity file with an optional "winding" field (default 1).
PatternClass parse_pattern(const std::string& text);

CFKComplex parse_cfk(const std::string& text);
std::string dump_cfk(const CFKComplex& c);

BorderedDiagram parse_diagram(const std::string& text);
std::string dump_diagram(const BorderedDiagram& d);

std::string dump_class(const ExteriorClass& x);
ExteriorClass parse_class(const std::string& text);
std::string dump_laurent(const LaurentHalf& p);
std::string dump_complex(const ChainComplex& c);

}  // namespace bdecat
