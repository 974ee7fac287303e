// Command-line surface: periods, factor, counts, code, partitions, verify.
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 resource budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cyclo;

namespace {

json poly_to_json(const IntPoly& poly) {
    // constant-first coefficient array; big integers as decimal strings
    json arr = json::array();
    for (const auto& c : poly.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json factored_to_json(const FactoredPoly& f) {
    json arr = json::array();
    for (const auto& [poly, mult] : f.factors)
        arr.push_back(json{{"coeffs", poly_to_json(poly)}, {"multiplicity", mult}});
    return arr;
}

json enumerator_to_json(const WeightEnumerator& w) {
    json obj = json::object();
    for (const auto& [weight, count] : w.counts) obj[std::to_string(weight)] = count.get_str();
    return obj;
}

json check_to_json(const verify::Check& c) {
    json obj{{"name", c.name}};
    switch (c.status) {
    case verify::Status::Pass: obj["status"] = "pass"; break;
    case verify::Status::Fail: obj["status"] = "fail"; break;
    case verify::Status::Skip: obj["status"] = "skip"; break;
    }
    if (!c.detail.empty()) obj["detail"] = c.detail;
    return obj;
}

json report_to_json(const verify::InstanceReport& rep) {
    json obj{{"instance", rep.key}, {"kind", rep.kind}};
    if (!rep.case_tag.empty()) obj["case"] = rep.case_tag;
    json info = json::object();
    for (const auto& [k, v] : rep.info) {
        if (info.contains(k)) {
            if (!info[k].is_array()) info[k] = json::array({info[k]});
            info[k].push_back(v);
        } else {
            info[k] = v;
        }
    }
    obj["info"] = info;
    json checks = json::array();
    for (const auto& c : rep.checks) checks.push_back(check_to_json(c));
    obj["checks"] = checks;
    obj["seconds"] = rep.seconds;
    return obj;
}

void emit(const json& payload, bool as_json, const std::string& text,
          const std::string& out_path) {
    std::string body = as_json ? payload.dump(2) : text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << body << "\n";
    } else {
        std::cout << body << "\n";
    }
}

void print_report_text(std::ostream& os, const verify::InstanceReport& rep) {
    os << "== " << rep.kind << " " << rep.key;
    if (!rep.case_tag.empty()) os << "  [" << rep.case_tag << "]";
    os << "\n";
    for (const auto& [k, v] : rep.info) os << "   " << k << ": " << v << "\n";
    for (const auto& c : rep.checks) {
        const char* tag = c.status == verify::Status::Pass ? "PASS"
                          : c.status == verify::Status::Fail ? "FAIL"
                                                             : "SKIP";
        os << "   [" << tag << "] " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
}

struct CommonFlags {
    bool as_json = false;
    std::string out_path;
};

int run(int argc, char** argv) {
    CLI::App app{"exact cyclotomic periods of 2-power order: oracle, closed forms, codes"};
    app.require_subcommand(1);
    app.fallthrough(); // let --json / --out appear after the subcommand

    CommonFlags common;
    app.add_flag("--json", common.as_json, "emit machine-readable JSON");
    app.add_option("--out", common.out_path, "write the report to a file");

    // ---- periods ------------------------------------------------------
    uint64_t p = 0, N = 0, e_arg = 0;
    unsigned s = 0, m_arg = 0, ell = 1, n_arg = 1, k_arg = 1;
    auto* cmd_periods = app.add_subcommand("periods", "period counts and reduced periods");
    cmd_periods->add_option("-p", p, "characteristic")->required();
    cmd_periods->add_option("-s", s, "extension degree")->required();
    auto* opt_e = cmd_periods->add_option("-e", e_arg, "period order (any divisor of q-1)");
    auto* opt_m = cmd_periods->add_option("-m", m_arg, "period order as 2^m");
    opt_e->excludes(opt_m);

    // ---- factor -------------------------------------------------------
    auto* cmd_factor = app.add_subcommand("factor", "closed-form factorization and oracle");
    cmd_factor->add_option("-p", p, "characteristic")->required();
    cmd_factor->add_option("-s", s, "extension degree")->required();
    cmd_factor->add_option("-m", m_arg, "order exponent")->required();

    // ---- counts -------------------------------------------------------
    auto* cmd_counts = app.add_subcommand("counts", "diagonal equation counts");
    cmd_counts->add_option("-p", p, "characteristic")->required();
    cmd_counts->add_option("-s", s, "extension degree")->required();
    cmd_counts->add_option("-m", m_arg, "order exponent")->required();
    cmd_counts->add_option("-n", n_arg, "number of variables")->required();

    // ---- code ---------------------------------------------------------
    auto* cmd_code = app.add_subcommand("code", "irreducible cyclic code weight enumerator");
    cmd_code->add_option("-p", p, "characteristic")->required();
    cmd_code->add_option("-l", ell, "subfield degree")->required();
    cmd_code->add_option("-s", s, "extension degree")->required();
    cmd_code->add_option("-N", N, "coset modulus N")->required();
    uint64_t code_budget = 100000000;
    uint64_t seed = 12345;
    cmd_code->add_option("--budget", code_budget, "max trace tests for full enumeration");
    cmd_code->add_option("--seed", seed, "seed for representative-mode sampling");

    // ---- partitions ---------------------------------------------------
    auto* cmd_partitions = app.add_subcommand("partitions", "quadratic partitions of p^k");
    cmd_partitions->add_option("-p", p, "prime")->required();
    cmd_partitions->add_option("-k", k_arg, "exponent")->required();
    std::string form = "auto";
    cmd_partitions->add_option("--form", form, "2b2 (A^2+2B^2) or sum-of-squares (C^2+D^2)");

    // ---- verify -------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the verification matrix");
    std::string tier = "fast";
    std::string instance_filter;
    uint64_t conv_budget = 10000;
    cmd_verify->add_option("--tier", tier, "fast | full | stretch");
    cmd_verify->add_option("--instance", instance_filter, "only instances matching, e.g. p=3,s=4,m=4");
    cmd_verify->add_option("--budget", conv_budget, "convolution cross-check budget (max q)");
    cmd_verify->add_option("--codes-budget", code_budget, "full-enumeration budget (q*length)");
    cmd_verify->add_option("--seed", seed, "representative-mode sampling seed");

    CLI11_PARSE(app, argc, argv);

    if (cmd_periods->parsed()) {
        if (e_arg == 0 && m_arg == 0)
            throw InvalidInputError("periods: provide -e or -m");
        uint64_t e = e_arg;
        if (m_arg) {
            classify(p, s, m_arg); // validates the 2^m family
            e = 1ull << m_arg;
        }
        FieldDesc field = FieldDesc::build(p, s);
        PeriodCounts pc = period_counts(field, e);
        auto eta = reduced_periods(pc);

        std::ostringstream text;
        json counts_rows = json::array();
        text << "F_" << field.q().get_str() << " = F_" << p << "^" << s
             << ", modulus coeffs low-first [";
        json modulus = json::array();
        for (size_t i = 0; i < field.modulus().size(); ++i) {
            if (i) text << ",";
            text << field.modulus()[i];
            modulus.push_back(field.modulus()[i]);
        }
        text << "], gamma = " << field.elem_to_string(field.gamma()) << "\n";
        text << "counts m[j][c] (rows j = 0.." << e - 1 << "):\n";
        for (const auto& row : pc.m) {
            json jrow = json::array();
            text << "  ";
            for (uint64_t c = 0; c < pc.p; ++c) {
                text << row[c] << (c + 1 < pc.p ? " " : "");
                jrow.push_back(row[c]);
            }
            text << "\n";
            counts_rows.push_back(jrow);
        }
        // match each oracle period to a closed-form entry when one embeds
        // into the cyclotomic ring
        std::vector<std::string> matched(eta.size());
        std::optional<Spectrum> sp;
        if (m_arg) {
            PartitionSet parts = partitions_for_instance(p, s, m_arg, classify(p, s, m_arg));
            sp = spectrum(p, s, m_arg, parts);
            for (size_t j = 0; j < eta.size(); ++j)
                for (const auto& entry : sp->entries) {
                    auto z = entry.value.to_cycloint();
                    if (z && *z == eta[j]) {
                        matched[j] = sp->entry_display(entry);
                        break;
                    }
                }
        }
        json periods_json = json::array();
        text << "reduced periods:\n";
        for (size_t j = 0; j < eta.size(); ++j) {
            const auto& z = eta[j];
            text << "  " << z.to_string();
            if (!matched[j].empty()) text << "   = " << matched[j];
            text << "\n";
            json entry;
            if (z.is_rational_integer()) entry["value"] = z.rational_value().get_str();
            else {
                json coords = json::array();
                for (const auto& c : z.coords()) coords.push_back(c.get_str());
                entry["coords"] = coords;
            }
            if (!matched[j].empty()) entry["closed_form"] = matched[j];
            periods_json.push_back(entry);
        }
        json payload{{"p", p},       {"s", s},           {"e", e},
                     {"q", field.q().get_str()},         {"modulus", modulus},
                     {"counts", counts_rows},            {"reduced_periods", periods_json}};
        if (sp) {
            json spec = json::array();
            text << "closed-form spectrum [" << to_string(sp->tag) << "]:\n";
            for (const auto& entry : sp->entries) {
                text << "  (x" << entry.multiplicity << ") " << sp->entry_display(entry) << "\n";
                spec.push_back(json{{"value", sp->entry_display(entry)},
                                    {"multiplicity", entry.multiplicity}});
            }
            payload["case"] = to_string(sp->tag);
            payload["spectrum"] = spec;
        }
        emit(payload, common.as_json, text.str(), common.out_path);
        return 0;
    }

    if (cmd_factor->parsed()) {
        CaseTag tag = classify(p, s, m_arg);
        PartitionSet parts = partitions_for_instance(p, s, m_arg, tag);
        FactoredPoly fact = factorization(p, s, m_arg, parts);
        IntPoly expanded = fact.expand();
        std::ostringstream text;
        text << "case: " << to_string(tag) << "\n";
        text << "P*_" << (1u << m_arg) << " = " << fact.to_string() << "\n";
        text << "expanded: " << expanded.to_string() << "\n";
        json payload{{"p", p},
                     {"s", s},
                     {"m", m_arg},
                     {"case", to_string(tag)},
                     {"factors", factored_to_json(fact)},
                     {"expanded", poly_to_json(expanded)},
                     {"display", fact.to_string()}};
        emit(payload, common.as_json, text.str(), common.out_path);
        return 0;
    }

    if (cmd_counts->parsed()) {
        CaseTag tag = classify(p, s, m_arg);
        PartitionSet parts = partitions_for_instance(p, s, m_arg, tag);
        Int count = counts_formula(p, s, m_arg, n_arg, parts);
        std::ostringstream text;
        text << "N[x_1^" << (1u << m_arg) << " + ... + x_" << n_arg << "^" << (1u << m_arg)
             << " = 0] over F_" << p << "^" << s << " = " << count.get_str() << "\n";
        json payload{{"p", p}, {"s", s}, {"m", m_arg}, {"n", n_arg}, {"count", count.get_str()}};
        emit(payload, common.as_json, text.str(), common.out_path);
        return 0;
    }

    if (cmd_code->parsed()) {
        FieldDesc field = FieldDesc::build(p, s);
        CodeSpec code = build_code(field, ell, N);
        PartitionSet parts = partitions_for_instance(p, s, code.m, classify(p, s, code.m));
        WeightEnumerator closed = enumerator_closed_form(code, parts);
        std::ostringstream text;
        text << "[" << code.length << "," << code.dim << "] code over F_" << p << "^" << ell
             << ", e = " << code.e << "\n";
        text << "enumerator: " << closed.to_string() << "\n";
        json payload{{"p", p},
                     {"l", ell},
                     {"s", s},
                     {"N", N},
                     {"length", code.length},
                     {"dim", code.dim},
                     {"e", code.e},
                     {"enumerator", enumerator_to_json(closed)}};
        unsigned __int128 work =
            static_cast<unsigned __int128>(field.q_u64()) * code.length;
        if (work <= static_cast<unsigned __int128>(code_budget)) {
            BruteForceOptions bf;
            bf.budget = code_budget;
            bf.seed = seed;
            WeightEnumerator ground = weight_distribution_bruteforce(field, code, bf);
            bool match = ground.counts == closed.counts;
            text << "brute force (full): " << (match ? "match" : "MISMATCH") << "\n";
            payload["bruteforce"] = enumerator_to_json(ground);
            payload["bruteforce_matches"] = match;
            if (!match) {
                emit(payload, common.as_json, text.str(), common.out_path);
                return 1;
            }
        } else {
            text << "brute force skipped (q*length above budget)\n";
        }
        emit(payload, common.as_json, text.str(), common.out_path);
        return 0;
    }

    if (cmd_partitions->parsed()) {
        std::ostringstream text;
        json payload{{"p", p}, {"k", k_arg}};
        if (form == "auto") form = (p % 8 == 3) ? "2b2" : "sum-of-squares";
        if (form == "2b2") {
            auto r = solve_2B2(p, k_arg);
            text << "A=" << r.A << " B=" << r.B << "  (" << p << "^" << k_arg << " = A^2 + 2B^2)\n";
            payload["form"] = "2b2";
            payload["A"] = r.A;
            payload["B"] = r.B;
        } else if (form == "sum-of-squares") {
            auto r = solve_D2(p, k_arg);
            text << "C=" << r.C << " D=" << r.D << "  (" << p << "^" << k_arg << " = C^2 + D^2)\n";
            payload["form"] = "sum-of-squares";
            payload["C"] = r.C;
            payload["D"] = r.D;
        } else {
            throw InvalidInputError("partitions: --form must be 2b2 or sum-of-squares");
        }
        emit(payload, common.as_json, text.str(), common.out_path);
        return 0;
    }

    if (cmd_verify->parsed()) {
        verify::Options vopt;
        if (tier == "fast") vopt.tier = verify::Tier::Fast;
        else if (tier == "full") vopt.tier = verify::Tier::Full;
        else if (tier == "stretch") vopt.tier = verify::Tier::Stretch;
        else throw InvalidInputError("verify: --tier must be fast, full, or stretch");
        vopt.convolution_budget = conv_budget;
        vopt.codes_budget = code_budget;
        vopt.seed = seed;
        if (!instance_filter.empty()) vopt.instance_filter = instance_filter;

        auto reports = verify::run_verification(vopt);
        bool all_ok = true;
        std::ostringstream text;
        json payload = json::array();
        for (const auto& rep : reports) {
            print_report_text(text, rep);
            payload.push_back(report_to_json(rep));
            all_ok = all_ok && rep.all_passed();
        }
        text << (all_ok ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
        emit(payload, common.as_json, text.str(), common.out_path);
        return all_ok ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
