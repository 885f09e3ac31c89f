#pragma once

#include <string>

#include "json.hpp"

#include "dfc/am.hpp"
#include "dfc/constructions.hpp"
#include "dfc/designs.hpp"
#include "dfc/enumerate.hpp"
#include "dfc/galois.hpp"
#include "dfc/linear_code.hpp"
#include "dfc/spectra.hpp"

namespace dfc {

using json = nlohmann::ordered_json;

// Counts serialize as decimal strings: closed-form evaluations overflow
// 64-bit consumers routinely.
json to_json(const WeightDistribution& wd);
json to_json(const SparseSpectrum& s);
json to_json(const Poly& p);                 // coefficient list, lowest first
json to_json(const FieldElement& x);         // integer rep + field descriptor
json to_json(const LinearCode& c);
json to_json(const AMReport& r);
json to_json(const Design& d);
json to_json(const DifferenceFamilyReport& r);
json to_json(const HarnessReport& r);

std::string weights_csv(const WeightDistribution& wd);  // "weight,count" rows
std::string weights_csv(const SparseSpectrum& s);

}  // namespace dfc
