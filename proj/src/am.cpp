#include "dfc/am.hpp"

#include "dfc/spectra.hpp"

namespace dfc {

int nonbinary_cutoff(int v, int q, int d) {
    if (q == 2) return v;
    int best = 0;
    for (int w = 1; w <= v; ++w)
        if (w - (w + q - 2) / (q - 1) < d) best = w;
    return best;
}

AMReport am_check(const WeightDistribution& primal, const WeightDistribution& dual, int t) {
    if (primal.q != dual.q || primal.length != dual.length || primal.dim + dual.dim != primal.length)
        throw InconsistentPair("primal/dual weight distributions do not describe a dual pair");
    primal.validate();
    dual.validate();
    if (macwilliams_transform(primal).counts != dual.counts)
        throw InconsistentPair("dual distribution is not the MacWilliams transform of the primal");

    AMReport r;
    r.q = primal.q;
    r.v = primal.length;
    r.t = t;
    r.d = primal.min_nonzero_weight();
    r.d_perp = dual.min_nonzero_weight();
    if (t < 1 || r.d < 0 || t >= r.d)
        throw StrengthTooLarge("need 1 <= t < d, got t=" + std::to_string(t) + " d=" + std::to_string(r.d));

    r.s = 0;
    for (int i = 1; i <= r.v - t; ++i)
        if (dual.counts[static_cast<size_t>(i)] != 0) ++r.s;

    r.w = nonbinary_cutoff(r.v, r.q, r.d);
    r.w_perp = r.d_perp > 0 ? nonbinary_cutoff(r.v, r.q, r.d_perp) : 0;
    r.holds = (r.s <= r.d - t);
    if (!r.holds) return r;

    // binary form: primal weights d..v, dual weights d_perp..v;
    // nonbinary form: primal d..w, dual d_perp..min(v-t, w_perp)
    const int primal_hi = (r.q == 2) ? r.v : r.w;
    const int dual_hi = (r.q == 2) ? r.v : std::min(r.v - t, r.w_perp);
    for (int i = r.d; i <= primal_hi; ++i)
        if (primal.counts[static_cast<size_t>(i)] != 0) r.primal_design_weights.push_back(i);
    if (r.d_perp > 0)
        for (int i = r.d_perp; i <= dual_hi; ++i)
            if (dual.counts[static_cast<size_t>(i)] != 0) r.dual_design_weights.push_back(i);
    return r;
}

DivisibilityResult divisibility_check(int t, int v, int k, const Int& lambda) {
    if (!(1 <= t && t <= k && k <= v)) throw DomainError("need 1 <= t <= k <= v");
    for (int i = 0; i <= t; ++i) {
        Int down = binom(static_cast<uint64_t>(k - i), static_cast<uint64_t>(t - i));
        Int up = lambda * binom(static_cast<uint64_t>(v - i), static_cast<uint64_t>(t - i));
        if (down == 0 || up % down != 0) return {false, i};
    }
    return {true, -1};
}

}  // namespace dfc
