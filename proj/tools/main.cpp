// Command-line surface: build the code families, compute spectra by
// several methods, run the design checks, verify designs exhaustively,
// run the conjecture harness, and reproduce the catalog tables.
//
// Exit codes: 0 ok, 1 domain error, 2 enumeration budget, 3 internal
// inconsistency (mismatching routes or corrupted input).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dfc/am.hpp"
#include "dfc/constructions.hpp"
#include "dfc/designs.hpp"
#include "dfc/enumerate.hpp"
#include "dfc/json_io.hpp"
#include "dfc/spectra.hpp"

using namespace dfc;

namespace {

struct CommonOpts {
    uint64_t budget = 0;  // 0 = default
    int workers = 0;
    bool long_run = false;
    std::string format = "text";
    std::string output;

    EnumerationConfig enum_config() const {
        EnumerationConfig cfg;
        if (budget)
            cfg.budget = budget;
        else if (long_run)
            cfg.budget = 1ull << 36;
        cfg.workers = workers;
        return cfg;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--budget", o.budget, "enumeration budget (max q^k codewords); default DFC_BUDGET or 2^26");
    cmd->add_option("--workers", o.workers, "worker threads for enumeration (default: hardware)");
    cmd->add_flag("--long", o.long_run, "allow long enumerations (raises the default budget to 2^36)");
    cmd->add_option("--format", o.format, "output format: text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", o.output, "write output to a file instead of stdout");
}

void emit(const CommonOpts& o, const std::string& body) {
    if (o.output.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(o.output, std::ios::binary);
        if (!f) throw DomainError("cannot open output file " + o.output);
        f << body;
    }
}

// ---------------------------------------------------------------------------
// code selectors
// ---------------------------------------------------------------------------

struct Selector {
    std::string family;     // gold | kasami | welch | niho1 | niho3 | planar-3h1 | planar-half | raw
    int rm_order = -1;      // --rm R
    bool rm_dual = false;   // --rm-dual: RM(m-2, m)
    bool hamming = false;
    std::string projective;  // bch | two-zero
    int q = 0;
    int m = 0;
    int h = -1;
    int64_t s = -1;
    bool extended = false;
    bool dual_side = false;
};

void add_selector(CLI::App* cmd, Selector& sel) {
    cmd->add_option("--family", sel.family,
                    "two-zero cyclic code family: gold | kasami | welch | niho1 | niho3 | planar-3h1 | "
                    "planar-half | raw");
    cmd->add_option("--rm", sel.rm_order, "Reed-Muller code RM(r, m): order r");
    cmd->add_flag("--rm-dual", sel.rm_dual, "the code RM(m-2, m) (dual of RM(1, m))");
    cmd->add_flag("--hamming", sel.hamming, "Hamming-like cyclic code over GF(q), length (q^m-1)/(q-1)");
    cmd->add_option("--projective", sel.projective, "projective ternary cyclic code: bch | two-zero");
    cmd->add_option("--q", sel.q, "field order (prime)");
    cmd->add_option("--m", sel.m, "extension degree m");
    cmd->add_option("--h", sel.h, "family parameter h");
    cmd->add_option("--s", sel.s, "raw exponent s");
    cmd->add_flag("--extended", sel.extended, "use the extended code");
    cmd->add_flag("--dual", sel.dual_side, "report on the dual code");
}

bool is_binary_two_zero_family(const std::string& f) {
    return f == "gold" || f == "kasami" || f == "welch" || f == "niho1" || f == "niho3";
}

uint64_t selector_exponent(const Selector& sel) {
    if (sel.s >= 0) return static_cast<uint64_t>(sel.s);  // an explicit --s always wins
    if (sel.family == "raw") throw DomainError("--family raw needs --s");
    ExponentSpec e;
    e.m = sel.m;
    e.h = sel.h;
    if (sel.family == "gold") e.family = ExponentFamily::GOLD;
    else if (sel.family == "kasami") e.family = ExponentFamily::KASAMI;
    else if (sel.family == "welch") e.family = ExponentFamily::WELCH;
    else if (sel.family == "niho1") e.family = ExponentFamily::NIHO_1MOD4;
    else if (sel.family == "niho3") e.family = ExponentFamily::NIHO_3MOD4;
    else if (sel.family == "planar-3h1") e.family = ExponentFamily::PLANAR_3H1;
    else if (sel.family == "planar-half") e.family = ExponentFamily::PLANAR_HALF;
    else throw DomainError("unknown family: " + sel.family);
    if ((e.family != ExponentFamily::WELCH && e.family != ExponentFamily::NIHO_1MOD4 &&
         e.family != ExponentFamily::NIHO_3MOD4) &&
        sel.h < 0)
        throw DomainError("--family " + sel.family + " needs --h (or give --s)");
    return exponent_value(e);
}

// the base (primal, unextended) code of a selector
LinearCode base_code(const Selector& sel) {
    if (sel.m <= 0) throw DomainError("--m is required");
    if (!sel.family.empty()) {
        const uint64_t s = selector_exponent(sel);
        if (sel.family == "planar-3h1" || sel.family == "planar-half") return ternary_planar_code(sel.m, s);
        if (sel.family == "raw") {
            if (sel.q == 3) return ternary_planar_code(sel.m, s);
            return binary_two_zero_code(sel.m, s);
        }
        return binary_two_zero_code(sel.m, s);
    }
    if (sel.rm_dual) return reed_muller(sel.m - 2, sel.m);
    if (sel.rm_order >= 0) return reed_muller(sel.rm_order, sel.m);
    if (sel.hamming) {
        if (sel.q < 2) throw DomainError("--hamming needs --q");
        return hamming_like_code(sel.q, sel.m);
    }
    if (sel.projective == "bch") return projective_ternary_bch(sel.m);
    if (sel.projective == "two-zero") return projective_ternary_two_zero(sel.m);
    throw DomainError("no code selected (use --family/--rm/--rm-dual/--hamming/--projective)");
}

LinearCode selected_code(const Selector& sel) {
    LinearCode c = base_code(sel);
    if (sel.extended) c = extend(c);
    if (sel.dual_side) c = dual(c);
    return c;
}

// the catalog formula for a selector, when one exists
std::optional<WeightDistribution> closed_form_for(const Selector& sel) {
    const bool two_zero_binary = !sel.family.empty() && is_binary_two_zero_family(sel.family);
    const bool planar = sel.family == "planar-3h1" || sel.family == "planar-half";
    if (two_zero_binary) {
        if (!sel.extended && !sel.dual_side) return eval_closed_form({FormulaTag::GOLDLIKE_PRIMAL, sel.m});
        if (!sel.extended && sel.dual_side) return eval_closed_form({FormulaTag::TABLE1_DUAL, sel.m});
        if (sel.extended && !sel.dual_side) return eval_closed_form({FormulaTag::GOLDLIKE_EXTENDED, sel.m});
        // extended dual: transform of the extended closed form (exact arithmetic)
        return macwilliams_transform(eval_closed_form({FormulaTag::GOLDLIKE_EXTENDED, sel.m}));
    }
    if (planar) {
        if (!sel.extended && sel.dual_side) return eval_closed_form({FormulaTag::TABLE2_DUAL, sel.m});
        if (sel.extended && !sel.dual_side) return eval_closed_form({FormulaTag::TERNARY_EXTENDED, sel.m});
        if (sel.extended && sel.dual_side) return eval_closed_form({FormulaTag::TABLE3_EXT_DUAL, sel.m});
        return std::nullopt;  // unextended primal: no catalog form
    }
    if (sel.rm_dual && !sel.extended) {
        if (!sel.dual_side) return eval_closed_form({FormulaTag::RM_DUAL, sel.m});
        // dual of RM(m-2,m) is RM(1,m)
        WeightDistribution wd(2, 1 << sel.m, sel.m + 1);
        wd.counts[0] = 1;
        wd.counts[static_cast<size_t>(1 << (sel.m - 1))] = int_pow(2, static_cast<uint64_t>(sel.m) + 1) - 2;
        wd.counts[static_cast<size_t>(1 << sel.m)] = 1;
        return wd;
    }
    if (sel.rm_order == 1 && !sel.extended && !sel.dual_side) {
        WeightDistribution wd(2, 1 << sel.m, sel.m + 1);
        wd.counts[0] = 1;
        wd.counts[static_cast<size_t>(1 << (sel.m - 1))] = int_pow(2, static_cast<uint64_t>(sel.m) + 1) - 2;
        wd.counts[static_cast<size_t>(1 << sel.m)] = 1;
        return wd;
    }
    if (sel.hamming && !sel.extended) {
        if (!sel.dual_side) return eval_closed_form({FormulaTag::HAMMING, sel.m, sel.q});
        // simplex: 1 + (q^m - 1) z^{q^{m-1}}
        const Int qm = int_pow(static_cast<uint64_t>(sel.q), static_cast<uint64_t>(sel.m));
        const Int qm1 = int_pow(static_cast<uint64_t>(sel.q), static_cast<uint64_t>(sel.m - 1));
        Int vI = (qm - 1) / (sel.q - 1);
        WeightDistribution wd(sel.q, static_cast<int>(vI.get_ui()), sel.m);
        wd.counts[0] = 1;
        wd.counts[static_cast<size_t>(qm1.get_ui())] = qm - 1;
        return wd;
    }
    if (!sel.projective.empty() && !sel.extended) {
        if (sel.dual_side) return eval_closed_form({FormulaTag::TABLE_GG2_DUAL, sel.m});
        return eval_closed_form({FormulaTag::PROJECTIVE_TERNARY_PRIMAL, sel.m});
    }
    return std::nullopt;
}

// spectrum of the selected code by enumerating whichever side fits the
// budget, transforming if needed
WeightDistribution spectrum_via_macwilliams(const Selector& sel, const EnumerationConfig& cfg) {
    Selector other = sel;
    other.dual_side = !sel.dual_side;
    return macwilliams_transform(weight_distribution_bruteforce(selected_code(other), cfg));
}

// ---------------------------------------------------------------------------
// spectrum command
// ---------------------------------------------------------------------------

int cmd_spectrum(const Selector& sel, const std::string& method, const CommonOpts& opts) {
    const EnumerationConfig cfg = opts.enum_config();
    std::map<std::string, WeightDistribution> results;

    if (method == "brute" || method == "all") {
        try {
            results["brute"] = weight_distribution_bruteforce(selected_code(sel), cfg);
        } catch (const BudgetExceeded&) {
            if (method == "brute") throw;
        }
    }
    if (method == "macwilliams" || method == "all") {
        try {
            results["macwilliams"] = spectrum_via_macwilliams(sel, cfg);
        } catch (const BudgetExceeded&) {
            if (method == "macwilliams") throw;
        }
    }
    if (method == "closed-form" || method == "all") {
        auto cf = closed_form_for(sel);
        if (cf)
            results["closed-form"] = *cf;
        else if (method == "closed-form")
            throw DomainError("no catalog closed form for this selector");
    }
    if (results.empty()) throw BudgetExceeded("no method could produce a spectrum within the budget");

    bool match = true;
    const WeightDistribution& first = results.begin()->second;
    for (const auto& [name, wd] : results)
        if (wd.counts != first.counts) match = false;

    if (opts.format == "json") {
        json j;
        j["methods"] = json::object();
        for (const auto& [name, wd] : results) j["methods"][name] = to_json(wd);
        j["verdict"] = match ? "match" : "mismatch";
        emit(opts, j.dump(2));
    } else if (opts.format == "csv") {
        emit(opts, weights_csv(first));
    } else {
        std::string body;
        for (const auto& [name, wd] : results)
            body += name + ": " + weight_enumerator_string(wd) + "\n";
        if (results.size() > 1) body += std::string("verdict: ") + (match ? "match" : "mismatch") + "\n";
        emit(opts, body);
    }
    if (!match) throw ConsistencyError("methods disagree");
    return 0;
}

// ---------------------------------------------------------------------------
// designs command
// ---------------------------------------------------------------------------

int cmd_designs(const Selector& sel, int t, const std::string& weights_arg, const CommonOpts& opts,
                const std::string& blocks_out, const std::string& design_out) {
    const EnumerationConfig cfg = opts.enum_config();
    Selector primal_sel = sel;
    primal_sel.dual_side = false;
    Selector dual_sel = sel;
    dual_sel.dual_side = true;

    // spectra for both sides: enumerate the cheaper side, transform
    LinearCode primal = selected_code(primal_sel);
    LinearCode dualc = selected_code(dual_sel);
    WeightDistribution primal_wd, dual_wd;
    if (primal.dim <= dualc.dim) {
        primal_wd = weight_distribution_bruteforce(primal, cfg);
        dual_wd = macwilliams_transform(primal_wd);
    } else {
        dual_wd = weight_distribution_bruteforce(dualc, cfg);
        primal_wd = macwilliams_transform(dual_wd);
    }

    AMReport am = am_check(primal_wd, dual_wd, t);

    const bool on_dual = (weights_arg == "dual");
    const LinearCode& code = on_dual ? dualc : primal;
    const WeightDistribution& wd = on_dual ? dual_wd : primal_wd;
    const std::vector<int>& certified = on_dual ? am.dual_design_weights : am.primal_design_weights;

    std::vector<int> weights;
    if (weights_arg == "all" || weights_arg == "dual") {
        for (int w : wd.nonzero_weights())
            if (w < code.length) weights.push_back(w);
    } else {
        std::string tok;
        for (char ch : weights_arg + ",") {
            if (ch == ',') {
                if (!tok.empty()) {
                    try {
                        weights.push_back(std::stoi(tok));
                    } catch (const std::exception&) {
                        throw DomainError("bad weight list entry: " + tok);
                    }
                }
                tok.clear();
            } else {
                tok += ch;
            }
        }
        if (weights.empty()) throw DomainError("empty weight list");
    }

    json rows = json::array();
    std::string text;
    text += "v=" + std::to_string(code.length) + " t=" + std::to_string(t) +
            " am_holds=" + (am.holds ? "yes" : "no") + " s=" + std::to_string(am.s) +
            " d=" + std::to_string(am.d) + "\n";
    for (int w : weights) {
        json row;
        row["weight"] = w;
        const bool predicted = std::find(certified.begin(), certified.end(), w) != certified.end();
        row["predicted"] = predicted;
        std::string line = "w=" + std::to_string(w) + " predicted=" + (predicted ? "yes" : "no");
        if (wd.counts[static_cast<size_t>(w)] == 0) {
            row["status"] = "EMPTY";
            line += " status=EMPTY";
        } else {
            try {
                SupportSet ss = supports_of_weight(code, w, cfg);
                VerifyResult vr = verify_t_design(code.length, ss.supports, t);
                row["blocks"] = ss.supports.size();
                row["codewords"] = ss.codeword_count;
                if (vr.lambda) {
                    row["status"] = "DESIGN";
                    row["lambda"] = to_decimal(*vr.lambda);
                    Design d = make_design(code.length, w, t, *vr.lambda, ss.supports);
                    row["steiner"] = is_steiner(d);
                    line += " lambda=" + to_decimal(*vr.lambda) + " blocks=" + std::to_string(ss.supports.size()) +
                            (is_steiner(d) ? " steiner" : "");
                    if (!blocks_out.empty() && weights.size() == 1) {
                        std::ofstream f(blocks_out, std::ios::binary);
                        f << blocks_to_text(ss.supports);
                    }
                    if (!design_out.empty() && weights.size() == 1) {
                        std::ofstream f(design_out, std::ios::binary);
                        f << to_json(d).dump(2);
                    }
                } else {
                    row["status"] = "NOT_A_DESIGN";
                    row["witness_low"] = vr.witness->low;
                    row["witness_high"] = vr.witness->high;
                    line += " NOT a t-design";
                }
            } catch (const BudgetExceeded& e) {
                row["status"] = "SKIPPED_BUDGET";
                line += " skipped (budget)";
            }
        }
        rows.push_back(row);
        text += line + "\n";
    }

    if (opts.format == "json") {
        json j;
        j["am"] = to_json(am);
        j["side"] = on_dual ? "dual" : "primal";
        j["rows"] = rows;
        emit(opts, j.dump(2));
    } else {
        emit(opts, text);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// conjectures + reproduce commands
// ---------------------------------------------------------------------------

int cmd_conjectures(int m, const CommonOpts& opts) {
    HarnessReport r = conjecture_harness(m, opts.enum_config());
    if (opts.format == "json") {
        emit(opts, to_json(r).dump(2));
        return 0;
    }
    std::string text;
    for (const auto& note : r.notes) text += "# " + note + "\n";
    for (const auto& row : r.rows) {
        text += row.construction + " conj" + std::to_string(row.conjecture) + " w=" + std::to_string(row.weight) +
                " " + row.status;
        if (row.lambda) text += " lambda=" + to_decimal(*row.lambda) + " b=" + std::to_string(row.block_count);
        if (!row.note.empty()) text += "  (" + row.note + ")";
        text += "\n";
    }
    emit(opts, text);
    return 0;
}

int cmd_reproduce(const std::string& table, int m, const CommonOpts& opts) {
    FormulaTag tag;
    if (table == "1") tag = FormulaTag::TABLE1_DUAL;
    else if (table == "2") tag = FormulaTag::TABLE2_DUAL;
    else if (table == "3") tag = FormulaTag::TABLE3_EXT_DUAL;
    else if (table == "gg2") tag = FormulaTag::TABLE_GG2_DUAL;
    else throw DomainError("--table must be one of 1, 2, 3, gg2");

    SparseSpectrum s = eval_table_form(tag, m);

    // canonical instance whose dual realizes the table
    std::string verdict = "SKIPPED (enumeration over budget)";
    try {
        LinearCode instance;
        switch (tag) {
            case FormulaTag::TABLE1_DUAL: instance = dual(binary_two_zero_code(m, 3)); break;
            case FormulaTag::TABLE2_DUAL: instance = dual(ternary_planar_code(m, 2)); break;
            case FormulaTag::TABLE3_EXT_DUAL: instance = dual(extend(ternary_planar_code(m, 2))); break;
            default: instance = dual(projective_ternary_two_zero(m)); break;
        }
        WeightDistribution wd = weight_distribution_bruteforce(instance, opts.enum_config());
        WeightDistribution dense = eval_closed_form({tag, m});
        verdict = (wd == dense) ? "CONFIRMED by brute force" : "MISMATCH";
        if (verdict == "MISMATCH") throw ConsistencyError("table disagrees with brute-forced instance");
    } catch (const BudgetExceeded&) {
    } catch (const UnsupportedSize& e) {
        verdict = std::string("SKIPPED (") + e.what() + ")";
    } catch (const OutOfDomain& e) {
        verdict = std::string("SKIPPED (") + e.what() + ")";
    }

    if (opts.format == "json") {
        json j = to_json(s);
        j["verdict"] = verdict;
        emit(opts, j.dump(2));
    } else if (opts.format == "csv") {
        emit(opts, weights_csv(s));
    } else {
        std::string text = "weight,count\n0,1\n";
        for (const auto& [w, c] : s.entries) text += std::to_string(w) + "," + to_decimal(c) + "\n";
        text += verdict + "\n";
        emit(opts, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear codes, weight spectra, and block designs"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    Selector sel;
    CommonOpts opts;
    std::string method = "brute";
    int t = 2;
    std::string weights_arg = "all";
    std::string blocks_out;
    std::string design_out;
    int m = 0;
    std::string table;

    CLI::App* spectrum = app.add_subcommand("spectrum", "weight distribution of a code, by one or all methods");
    add_selector(spectrum, sel);
    add_common(spectrum, opts);
    spectrum->add_option("--method", method, "brute | macwilliams | closed-form | all")
        ->check(CLI::IsMember({"brute", "macwilliams", "closed-form", "all"}));

    CLI::App* designs = app.add_subcommand("designs", "predict (Assmus-Mattson) and exhaustively verify designs");
    add_selector(designs, sel);
    add_common(designs, opts);
    designs->add_option("--t", t, "design strength t (default 2)");
    designs->add_option("--weights", weights_arg, "comma list of weights, or: all | dual");
    designs->add_option("--blocks-out", blocks_out, "write the verified block list as text (single weight only)");
    designs->add_option("--design-out", design_out, "write the verified design as JSON (single weight only)");

    CLI::App* conjectures = app.add_subcommand("conjectures", "projective-code conjecture harness");
    conjectures->add_option("--m", m, "odd extension degree")->required();
    add_common(conjectures, opts);

    CLI::App* reproduce = app.add_subcommand("reproduce", "catalog tables with brute-force confirmation");
    reproduce->add_option("--table", table, "1 | 2 | 3 | gg2")->required();
    reproduce->add_option("--m", m, "extension degree")->required();
    add_common(reproduce, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return cmd_spectrum(sel, method, opts);
        if (designs->parsed()) return cmd_designs(sel, t, weights_arg, opts, blocks_out, design_out);
        if (conjectures->parsed()) return cmd_conjectures(m, opts);
        if (reproduce->parsed()) return cmd_reproduce(table, m, opts);
    } catch (const BudgetError& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "error (inconsistency): " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
