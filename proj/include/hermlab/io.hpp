#pragma once

#include <string>

#include "hermlab/coeffs.hpp"
#include "hermlab/spectral.hpp"
#include "hermlab/timefreq.hpp"

namespace hermlab {

// JSON schemas (numbers round trip bit exactly):
//   coefficients  {"d":1,"N":2,"entries":[{"alpha":[0],"re":1.0,"im":0.0}]}
//   grid field    {"d":1,"L":12.0,"n":1024,"values":[[re,im],...]} row major
//   phase field   grid-field layout plus "axes":["x1","y1"] and Lx/Ly/nx/ny
//   symbol        {"family":"oscillatory","beta":2.0,"gamma":1.0}
//   norm record   {"space":"M","p":2.0,"q":2.0,"value":...}

std::string coeffs_to_json(const HermiteCoeffs& c);
HermiteCoeffs coeffs_from_json(const std::string& text);

std::string field_to_json(const GridField& f);
GridField field_from_json(const std::string& text);

std::string phase_field_to_json(const PhasePlaneField& f);
PhasePlaneField phase_field_from_json(const std::string& text);

std::string symbol_to_json(const SpectralSymbol& m);
SpectralSymbol symbol_from_json(const std::string& text);

std::string norm_record_json(const std::string& space, double p, double q, double value);

// 17 significant digits, shortest form that parses back to the same double
std::string format_g17(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace hermlab
