#include "dfc/json_io.hpp"

#include <sstream>

namespace dfc {

json to_json(const WeightDistribution& wd) {
    json counts = json::object();
    for (int i = 0; i <= wd.length; ++i)
        if (wd.counts[static_cast<size_t>(i)] != 0) counts[std::to_string(i)] = to_decimal(wd.counts[static_cast<size_t>(i)]);
    return json{{"q", wd.q}, {"length", wd.length}, {"dim", wd.dim}, {"counts", counts}};
}

json to_json(const SparseSpectrum& s) {
    json counts = json::object();
    counts["0"] = "1";
    for (const auto& [w, c] : s.entries) counts[std::to_string(w)] = to_decimal(c);
    return json{{"q", s.q}, {"length", s.length}, {"dim", s.dim}, {"counts", counts}};
}

json to_json(const Poly& p) {
    json coeffs = json::array();
    for (int c : p.c) coeffs.push_back(c);
    return json{{"p", p.p}, {"coeffs", coeffs}};
}

json to_json(const FieldElement& x) {
    const Field& f = x.field();
    return json{{"rep", x.rep()},
                {"field", json{{"p", f.p()}, {"e", f.e()}, {"modulus", to_json(f.modulus())}}}};
}

json to_json(const LinearCode& c) {
    json rows = json::array();
    for (const auto& r : c.basis) {
        json row = json::array();
        for (uint8_t x : r) row.push_back(static_cast<int>(x));
        rows.push_back(row);
    }
    json j{{"q", c.q}, {"length", c.length}, {"dim", c.dim}, {"generator_rows", rows}};
    if (c.cyclic) {
        j["cyclic"] = json{{"generator", to_json(c.cyclic->generator)}, {"convention", c.cyclic->convention}};
    }
    return j;
}

json to_json(const AMReport& r) {
    return json{{"q", r.q},
                {"v", r.v},
                {"t", r.t},
                {"d", r.d},
                {"d_perp", r.d_perp},
                {"s", r.s},
                {"w", r.w},
                {"w_perp", r.w_perp},
                {"holds", r.holds},
                {"primal_design_weights", r.primal_design_weights},
                {"dual_design_weights", r.dual_design_weights}};
}

json to_json(const Design& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(b);
    return json{{"v", d.v}, {"k", d.k}, {"t", d.t}, {"lambda", to_decimal(d.lambda)}, {"blocks", blocks}};
}

json to_json(const DifferenceFamilyReport& r) {
    json hist = json::object();
    for (int d = 1; d < r.v; ++d) hist[std::to_string(d)] = r.histogram[static_cast<size_t>(d)];
    json j{{"v", r.v}, {"k", r.k}, {"block_count", r.block_count}, {"histogram", hist}};
    if (r.delta)
        j["delta"] = *r.delta;
    else
        j["delta"] = nullptr;
    return j;
}

json to_json(const HarnessReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json j{{"construction", row.construction}, {"conjecture", row.conjecture}, {"weight", row.weight},
               {"t", row.t},       {"status", row.status},           {"block_count", row.block_count}};
        j["lambda"] = row.lambda ? json(to_decimal(*row.lambda)) : json(nullptr);
        if (!row.note.empty()) j["note"] = row.note;
        rows.push_back(j);
    }
    return json{{"m", r.m}, {"notes", r.notes}, {"rows", rows}};
}

std::string weights_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight,count\n";
    for (int i = 0; i <= wd.length; ++i)
        if (wd.counts[static_cast<size_t>(i)] != 0) os << i << ',' << to_decimal(wd.counts[static_cast<size_t>(i)]) << '\n';
    return os.str();
}

std::string weights_csv(const SparseSpectrum& s) {
    std::ostringstream os;
    os << "weight,count\n0,1\n";
    for (const auto& [w, c] : s.entries) os << w << ',' << to_decimal(c) << '\n';
    return os.str();
}

}  // namespace dfc
