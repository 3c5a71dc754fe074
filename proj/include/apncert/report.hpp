#pragma once

// JSON renderings of the result types. Field elements are hex strings,
// big integers are decimal strings.

#include "apncert/bounds.hpp"
#include "apncert/degstruct.hpp"
#include "apncert/io.hpp"
#include "apncert/uniformity.hpp"

namespace apncert::io {

json to_json(const DerivativeBundle& b);
json to_json(const MorseReport& r);
json to_json(const ScanSummary& s);
json to_json(const DegreeProfile& p);
json to_json(const BoundsReport& r);
json to_json(const StructureReport& r);
json to_json(const DeltaResult& r);
json to_json(const CertifyResult& r);
json to_json(const InterpDegree& r);

}  // namespace apncert::io
