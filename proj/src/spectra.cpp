#include "dfc/spectra.hpp"

#include <algorithm>

namespace dfc {

namespace {

Int exact_div(const Int& a, const Int& b, const char* what) {
    Int out;
    if (!divexact(out, a, b)) throw NonIntegralResult(std::string(what) + ": division is not exact");
    return out;
}

uint64_t to_u64(const Int& x) { return mpz_get_ui(x.get_mpz_t()); }

void check_total(const WeightDistribution& wd, const char* what) {
    Int total = 0;
    for (const Int& c : wd.counts) {
        if (c < 0) throw NonIntegralResult(std::string(what) + ": negative count");
        total += c;
    }
    if (total != int_pow(static_cast<uint64_t>(wd.q), static_cast<uint64_t>(wd.dim)))
        throw NonIntegralResult(std::string(what) + ": counts do not sum to q^kappa");
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw OutOfDomain(msg);
}

}  // namespace

WeightDistribution macwilliams_transform(const WeightDistribution& wd) {
    wd.validate();
    const int v = wd.length, q = wd.q;
    const Int qk = int_pow(static_cast<uint64_t>(q), static_cast<uint64_t>(wd.dim));

    std::vector<Int> qm1(static_cast<size_t>(v) + 1);
    qm1[0] = 1;
    for (int i = 1; i <= v; ++i) qm1[static_cast<size_t>(i)] = qm1[static_cast<size_t>(i) - 1] * (q - 1);

    WeightDistribution out(q, v, v - wd.dim);
    for (int k = 0; k <= v; ++k) {
        Int acc = 0;
        for (int i = 0; i <= v; ++i) {
            if (wd.counts[static_cast<size_t>(i)] == 0) continue;
            Int kra = 0;
            const int jlo = std::max(0, k - (v - i));
            const int jhi = std::min(i, k);
            for (int j = jlo; j <= jhi; ++j) {
                Int term = binom(static_cast<uint64_t>(i), static_cast<uint64_t>(j)) *
                           binom(static_cast<uint64_t>(v - i), static_cast<uint64_t>(k - j)) *
                           qm1[static_cast<size_t>(k - j)];
                if (j & 1)
                    kra -= term;
                else
                    kra += term;
            }
            acc += wd.counts[static_cast<size_t>(i)] * kra;
        }
        if (acc < 0) throw NonIntegralResult("macwilliams: negative dual count (corrupted input distribution)");
        out.counts[static_cast<size_t>(k)] = exact_div(acc, qk, "macwilliams");
    }
    out.validate();
    return out;
}

WeightDistribution macwilliams_transform_naive(const WeightDistribution& wd) {
    wd.validate();
    const int v = wd.length, q = wd.q;
    const Int qk = int_pow(static_cast<uint64_t>(q), static_cast<uint64_t>(wd.dim));

    std::vector<Int> total(static_cast<size_t>(v) + 1, 0);
    for (int i = 0; i <= v; ++i) {
        if (wd.counts[static_cast<size_t>(i)] == 0) continue;
        // (1-z)^i and (1+(q-1)z)^{v-i}, multiplied out
        std::vector<Int> a(static_cast<size_t>(i) + 1);
        for (int j = 0; j <= i; ++j) {
            a[static_cast<size_t>(j)] = binom(static_cast<uint64_t>(i), static_cast<uint64_t>(j));
            if (j & 1) a[static_cast<size_t>(j)] = -a[static_cast<size_t>(j)];
        }
        std::vector<Int> b(static_cast<size_t>(v - i) + 1);
        Int p = 1;
        for (int j = 0; j <= v - i; ++j) {
            b[static_cast<size_t>(j)] = binom(static_cast<uint64_t>(v - i), static_cast<uint64_t>(j)) * p;
            p *= (q - 1);
        }
        for (int x = 0; x <= i; ++x) {
            if (a[static_cast<size_t>(x)] == 0) continue;
            for (int y = 0; y <= v - i; ++y)
                total[static_cast<size_t>(x + y)] +=
                    wd.counts[static_cast<size_t>(i)] * a[static_cast<size_t>(x)] * b[static_cast<size_t>(y)];
        }
    }

    WeightDistribution out(q, v, v - wd.dim);
    for (int k = 0; k <= v; ++k) {
        if (total[static_cast<size_t>(k)] < 0) throw NonIntegralResult("macwilliams(naive): negative dual count");
        out.counts[static_cast<size_t>(k)] = exact_div(total[static_cast<size_t>(k)], qk, "macwilliams(naive)");
    }
    out.validate();
    return out;
}

std::string weight_enumerator_string(const WeightDistribution& wd) {
    std::string s;
    for (int i = 0; i <= wd.length; ++i) {
        const Int& c = wd.counts[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += to_decimal(c);
            continue;
        }
        if (c != 1) s += to_decimal(c);
        s += "z";
        if (i != 1) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// closed forms
// ---------------------------------------------------------------------------

Int SparseSpectrum::total_with_zero() const {
    Int t = 1;
    for (const auto& [w, c] : entries) t += c;
    return t;
}

SparseSpectrum eval_table_form(FormulaTag tag, int m) {
    SparseSpectrum s;
    switch (tag) {
        case FormulaTag::TABLE1_DUAL: {
            require(m >= 5 && m % 2 == 1 && m <= 61, "TABLE1_DUAL needs odd m in [5, 61]");
            const Int big = int_pow(2, static_cast<uint64_t>(m)) - 1;
            const Int t = int_pow(2, static_cast<uint64_t>(m - 1) / 2);
            const Int half = int_pow(2, static_cast<uint64_t>(m - 1));
            const Int low = int_pow(2, static_cast<uint64_t>(m - 3) / 2);
            const uint64_t w2 = 1ull << (m - 1);
            const uint64_t ts = 1ull << ((m - 1) / 2);
            s.q = 2;
            s.length = (1ull << m) - 1;
            s.dim = 2 * m;
            s.entries = {{w2 - ts, big * (t + 1) * low},
                         {w2, big * (half + 1)},
                         {w2 + ts, big * (t - 1) * low}};
            break;
        }
        case FormulaTag::TABLE2_DUAL: {
            require(m >= 3 && m % 2 == 1 && m <= 39, "TABLE2_DUAL needs odd m in [3, 39]");
            const Int p3m = int_pow(3, static_cast<uint64_t>(m));
            const Int p3m1 = int_pow(3, static_cast<uint64_t>(m) - 1);
            const Int t = int_pow(3, static_cast<uint64_t>(m - 1) / 2);
            const uint64_t w2 = 2 * to_u64(p3m1);
            const uint64_t ts = to_u64(t);
            s.q = 3;
            s.length = to_u64(p3m) - 1;
            s.dim = 2 * m;
            s.entries = {{w2 - ts, (p3m - 1) * (p3m1 + t)},
                         {w2, (p3m - 1) * (p3m1 + 1)},
                         {w2 + ts, (p3m - 1) * (p3m1 - t)}};
            break;
        }
        case FormulaTag::TABLE3_EXT_DUAL: {
            require(m >= 3 && m % 2 == 1 && m <= 39, "TABLE3_EXT_DUAL needs odd m in [3, 39]");
            const Int p3m = int_pow(3, static_cast<uint64_t>(m));
            const uint64_t n = to_u64(p3m);
            const uint64_t p3m1 = n / 3;
            const uint64_t ts = to_u64(int_pow(3, static_cast<uint64_t>(m - 1) / 2));
            const Int u = int_pow(3, 2 * static_cast<uint64_t>(m)) - p3m;
            const Int vv = (p3m + 3) * (p3m - 1);
            s.q = 3;
            s.length = n;
            s.dim = 2 * m + 1;
            s.entries = {{2 * p3m1 - ts, u}, {2 * p3m1, vv}, {2 * p3m1 + ts, u}, {n, 2}};
            break;
        }
        case FormulaTag::TABLE_GG2_DUAL: {
            require(m >= 3 && m % 2 == 1 && m <= 39, "TABLE_GG2_DUAL needs odd m in [3, 39]");
            const Int p3m = int_pow(3, static_cast<uint64_t>(m));
            const Int p3m1 = int_pow(3, static_cast<uint64_t>(m) - 1);
            const Int t = int_pow(3, static_cast<uint64_t>(m - 1) / 2);
            const uint64_t w2 = to_u64(p3m1);
            const uint64_t ts = to_u64(t);
            s.q = 3;
            s.length = (to_u64(p3m) - 1) / 2;
            s.dim = 2 * m;
            s.entries = {{w2 - ts, exact_div((p3m1 + t) * (p3m - 1), Int(2), "TABLE_GG2_DUAL")},
                         {w2, (p3m - p3m1 + 1) * (p3m - 1)},
                         {w2 + ts, exact_div((p3m1 - t) * (p3m - 1), Int(2), "TABLE_GG2_DUAL")}};
            break;
        }
        default:
            throw OutOfDomain("eval_table_form expects one of the table tags");
    }
    // the table must account for the whole dual space
    if (s.total_with_zero() != int_pow(static_cast<uint64_t>(s.q), static_cast<uint64_t>(s.dim)))
        throw NonIntegralResult(formula_tag_name(tag) + ": table rows do not sum to q^kappa");
    return s;
}

namespace {

WeightDistribution densify(const SparseSpectrum& s, const char* what) {
    require(s.length <= (1u << 20), std::string(what) + ": length exceeds the dense envelope (use the sparse form)");
    WeightDistribution wd(s.q, static_cast<int>(s.length), s.dim);
    wd.counts[0] = 1;
    for (const auto& [w, c] : s.entries) wd.counts[static_cast<size_t>(w)] = c;
    return wd;
}

// sum over i+j=k of (-1)^i s^j C(wi,i) C(wj,j); spow holds s^0..s^k
Int signed_conv(int k, uint64_t wi, uint64_t wj, const std::vector<Int>* spow) {
    Int acc = 0;
    const int ilo = static_cast<int>(std::max<int64_t>(0, static_cast<int64_t>(k) - static_cast<int64_t>(wj)));
    const int ihi = static_cast<int>(std::min<uint64_t>(wi, static_cast<uint64_t>(k)));
    for (int i = ilo; i <= ihi; ++i) {
        const int j = k - i;
        Int term = binom(wi, static_cast<uint64_t>(i)) * binom(wj, static_cast<uint64_t>(j));
        if (spow) term *= (*spow)[static_cast<size_t>(j)];
        if (i & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

std::vector<Int> powers(int s, uint64_t upto) {
    std::vector<Int> p(upto + 1);
    p[0] = 1;
    for (uint64_t j = 1; j <= upto; ++j) p[j] = p[j - 1] * s;
    return p;
}

WeightDistribution rm_dual(int m) {
    require(m >= 3, "RM_DUAL needs m >= 3");
    require(m <= 13, "RM_DUAL dense evaluation is capped at m = 13");
    const uint64_t n = 1ull << m;
    const Int scale = int_pow(2, static_cast<uint64_t>(m) + 1);
    const Int mid = scale - 2;  // 2^{m+1} - 2
    WeightDistribution wd(2, static_cast<int>(n), static_cast<int>(n) - m - 1);
    for (uint64_t k = 0; 4 * k <= n; ++k) {
        Int num = 2 * binom(n, 4 * k) + mid * binom(n / 2, 2 * k);
        wd.counts[static_cast<size_t>(4 * k)] = exact_div(num, scale, "RM_DUAL");
    }
    for (uint64_t k = 0; 4 * k + 2 <= n; ++k) {
        Int num = 2 * binom(n, 4 * k + 2) - mid * binom(n / 2, 2 * k + 1);
        wd.counts[static_cast<size_t>(4 * k + 2)] = exact_div(num, scale, "RM_DUAL");
    }
    return wd;
}

bool is_prime_power(int q) {
    if (q < 2) return false;
    int p = q;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) {
            while (p % d == 0) p /= d;
            return p == 1;
        }
    return true;  // q itself is prime
}

WeightDistribution hamming(int q, int m) {
    require(is_prime_power(q), "HAMMING needs a prime-power q");
    require(m >= 2, "HAMMING needs m >= 2");
    const Int qm = int_pow(static_cast<uint64_t>(q), static_cast<uint64_t>(m));
    Int vN = (qm - 1) / (q - 1);
    require(vN.fits_ulong_p() && vN.get_ui() <= 8192, "HAMMING dense evaluation is capped at length 8192");
    const uint64_t v = vN.get_ui();
    const uint64_t qpow = to_u64(int_pow(static_cast<uint64_t>(q), static_cast<uint64_t>(m - 1)));
    const uint64_t vp = v - qpow;  // (q^{m-1}-1)/(q-1)
    const Int qm_minus_1 = qm - 1;

    WeightDistribution wd(q, static_cast<int>(v), static_cast<int>(v) - m);
    const std::vector<Int> pm1 = powers(q - 1, v);
    for (uint64_t k = 0; k <= v; ++k) {
        Int acc = 0;
        for (uint64_t i = 0; i <= std::min(vp, k); ++i) {
            const uint64_t j = k - i;
            if (j > qpow) continue;
            Int inner = pm1[k];
            Int second = pm1[i] * qm_minus_1;
            if (j & 1)
                inner -= second;
            else
                inner += second;
            acc += binom(vp, i) * binom(qpow, j) * inner;
        }
        wd.counts[static_cast<size_t>(k)] = exact_div(acc, qm, "HAMMING");
    }
    return wd;
}

WeightDistribution goldlike_primal(int m) {
    require(m >= 5 && m % 2 == 1, "GOLDLIKE_PRIMAL needs odd m >= 5");
    require(m <= 13, "GOLDLIKE_PRIMAL dense evaluation is capped at m = 13");
    const SparseSpectrum dual = eval_table_form(FormulaTag::TABLE1_DUAL, m);
    const uint64_t v = (1ull << m) - 1;
    const uint64_t half = 1ull << (m - 1);
    const uint64_t t = 1ull << ((m - 1) / 2);
    const Int& a = dual.entries[0].second;
    const Int& b = dual.entries[1].second;
    const Int& c = dual.entries[2].second;
    const Int scale = int_pow(2, 2 * static_cast<uint64_t>(m));

    WeightDistribution wd(2, static_cast<int>(v), static_cast<int>(v) - 2 * m);
    for (uint64_t k = 0; k <= v; ++k) {
        Int acc = binom(v, k);
        acc += a * signed_conv(static_cast<int>(k), half - t, half + t - 1, nullptr);
        acc += b * signed_conv(static_cast<int>(k), half, half - 1, nullptr);
        acc += c * signed_conv(static_cast<int>(k), half + t, half - t - 1, nullptr);
        wd.counts[static_cast<size_t>(k)] = exact_div(acc, scale, "GOLDLIKE_PRIMAL");
    }
    return wd;
}

WeightDistribution goldlike_extended(int m) {
    require(m >= 5 && m % 2 == 1, "GOLDLIKE_EXTENDED needs odd m >= 5");
    require(m <= 13, "GOLDLIKE_EXTENDED dense evaluation is capped at m = 13");
    const uint64_t n = 1ull << m;
    const uint64_t half = n / 2;
    const uint64_t t = 1ull << ((m - 1) / 2);
    const Int u = int_pow(2, 2 * static_cast<uint64_t>(m) - 1) - int_pow(2, static_cast<uint64_t>(m) - 1);
    const Int vv = int_pow(2, 2 * static_cast<uint64_t>(m)) + int_pow(2, static_cast<uint64_t>(m)) - 2;
    const Int scale = int_pow(2, 2 * static_cast<uint64_t>(m) + 1);

    WeightDistribution wd(2, static_cast<int>(n), static_cast<int>(n) - 1 - 2 * m);
    for (uint64_t k = 0; k <= n; ++k) {
        Int acc = 0;
        if (k % 2 == 0) {
            acc += 2 * binom(n, k);
            Int term = binom(half, k / 2) * vv;
            if ((k / 2) & 1)
                acc -= term;
            else
                acc += term;
        }
        acc += u * signed_conv(static_cast<int>(k), half - t, half + t, nullptr);
        acc += u * signed_conv(static_cast<int>(k), half + t, half - t, nullptr);
        wd.counts[static_cast<size_t>(k)] = exact_div(acc, scale, "GOLDLIKE_EXTENDED");
    }
    return wd;
}

WeightDistribution ternary_extended(int m) {
    require(m >= 3 && m % 2 == 1, "TERNARY_EXTENDED needs odd m >= 3");
    require(m <= 7, "TERNARY_EXTENDED dense evaluation is capped at m = 7");
    const uint64_t n = to_u64(int_pow(3, static_cast<uint64_t>(m)));
    const uint64_t p3m1 = n / 3;
    const uint64_t t = to_u64(int_pow(3, static_cast<uint64_t>(m - 1) / 2));
    const Int u = int_pow(3, 2 * static_cast<uint64_t>(m)) - n;
    const Int vv = (Int(static_cast<unsigned long>(n)) + 3) * (Int(static_cast<unsigned long>(n)) - 1);
    const Int scale = int_pow(3, 2 * static_cast<uint64_t>(m) + 1);

    WeightDistribution wd(3, static_cast<int>(n), static_cast<int>(n) - 1 - 2 * m);
    const std::vector<Int> pow2 = powers(2, n);
    for (uint64_t k = 0; k <= n; ++k) {
        Int acc = binom(n, k) * (pow2[k] + ((k & 1) ? Int(-2) : Int(2)));
        acc += vv * signed_conv(static_cast<int>(k), 2 * p3m1, p3m1, &pow2);
        acc += u * signed_conv(static_cast<int>(k), 2 * p3m1 - t, p3m1 + t, &pow2);
        acc += u * signed_conv(static_cast<int>(k), 2 * p3m1 + t, p3m1 - t, &pow2);
        wd.counts[static_cast<size_t>(k)] = exact_div(acc, scale, "TERNARY_EXTENDED");
    }
    return wd;
}

WeightDistribution projective_ternary_primal(int m) {
    require(m >= 3 && m % 2 == 1, "PROJECTIVE_TERNARY_PRIMAL needs odd m >= 3");
    require(m <= 9, "PROJECTIVE_TERNARY_PRIMAL dense evaluation is capped at m = 9");
    const SparseSpectrum dual = eval_table_form(FormulaTag::TABLE_GG2_DUAL, m);
    const uint64_t p3m1 = to_u64(int_pow(3, static_cast<uint64_t>(m) - 1));
    const uint64_t t = to_u64(int_pow(3, static_cast<uint64_t>(m - 1) / 2));
    const uint64_t v = (3 * p3m1 - 1) / 2;
    const Int& a = dual.entries[0].second;
    const Int& b = dual.entries[1].second;
    const Int& c = dual.entries[2].second;
    const Int scale = int_pow(3, 2 * static_cast<uint64_t>(m));

    WeightDistribution wd(3, static_cast<int>(v), static_cast<int>(v) - 2 * m);
    const std::vector<Int> pow2 = powers(2, v);
    for (uint64_t k = 0; k <= v; ++k) {
        Int acc = binom(v, k) * pow2[k];
        acc += a * signed_conv(static_cast<int>(k), p3m1 - t, (p3m1 + 2 * t - 1) / 2, &pow2);
        acc += b * signed_conv(static_cast<int>(k), p3m1, (p3m1 - 1) / 2, &pow2);
        acc += c * signed_conv(static_cast<int>(k), p3m1 + t, (p3m1 - 2 * t - 1) / 2, &pow2);
        wd.counts[static_cast<size_t>(k)] = exact_div(acc, scale, "PROJECTIVE_TERNARY_PRIMAL");
    }
    return wd;
}

}  // namespace

WeightDistribution eval_closed_form(const SpectrumFormulaId& f) {
    WeightDistribution wd;
    switch (f.id) {
        case FormulaTag::RM_DUAL: wd = rm_dual(f.m); break;
        case FormulaTag::HAMMING: wd = hamming(f.q, f.m); break;
        case FormulaTag::GOLDLIKE_PRIMAL: wd = goldlike_primal(f.m); break;
        case FormulaTag::GOLDLIKE_EXTENDED: wd = goldlike_extended(f.m); break;
        case FormulaTag::TERNARY_EXTENDED: wd = ternary_extended(f.m); break;
        case FormulaTag::PROJECTIVE_TERNARY_PRIMAL: wd = projective_ternary_primal(f.m); break;
        case FormulaTag::TABLE1_DUAL:
        case FormulaTag::TABLE2_DUAL:
        case FormulaTag::TABLE3_EXT_DUAL:
        case FormulaTag::TABLE_GG2_DUAL:
            wd = densify(eval_table_form(f.id, f.m), formula_tag_name(f.id).c_str());
            break;
        default: throw OutOfDomain("unknown formula tag");
    }
    check_total(wd, formula_tag_name(f.id).c_str());
    return wd;
}

std::string formula_tag_name(FormulaTag t) {
    switch (t) {
        case FormulaTag::RM_DUAL: return "RM_DUAL";
        case FormulaTag::HAMMING: return "HAMMING";
        case FormulaTag::TABLE1_DUAL: return "TABLE1_DUAL";
        case FormulaTag::GOLDLIKE_PRIMAL: return "GOLDLIKE_PRIMAL";
        case FormulaTag::GOLDLIKE_EXTENDED: return "GOLDLIKE_EXTENDED";
        case FormulaTag::TABLE2_DUAL: return "TABLE2_DUAL";
        case FormulaTag::TABLE3_EXT_DUAL: return "TABLE3_EXT_DUAL";
        case FormulaTag::TERNARY_EXTENDED: return "TERNARY_EXTENDED";
        case FormulaTag::TABLE_GG2_DUAL: return "TABLE_GG2_DUAL";
        case FormulaTag::PROJECTIVE_TERNARY_PRIMAL: return "PROJECTIVE_TERNARY_PRIMAL";
    }
    return "?";
}

}  // namespace dfc
