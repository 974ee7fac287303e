#include "cyclo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace cyclo::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

void add_check(InstanceReport& rep, const std::string& name, bool ok,
               const std::string& detail_on_fail = {}) {
    rep.checks.push_back({name, ok ? Status::Pass : Status::Fail, ok ? "" : detail_on_fail});
}

void add_skip(InstanceReport& rep, const std::string& name, const std::string& why) {
    rep.checks.push_back({name, Status::Skip, why});
}

// run `fn` and convert an exception into a failed check
template <typename F>
void guarded(InstanceReport& rep, const std::string& name, F&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        rep.checks.push_back({name, Status::Fail, e.what()});
    }
}

std::vector<CycloInt> sorted_multiset(std::vector<CycloInt> v) {
    std::sort(v.begin(), v.end(), [](const CycloInt& a, const CycloInt& b) {
        return a.coords() < b.coords();
    });
    return v;
}

unsigned max_factor_degree(CaseTag tag) {
    switch (tag) {
    case CaseTag::P3LinearSplit:
    case CaseTag::P5LinearSplit:
    case CaseTag::P3Order8Div4:
    case CaseTag::P5Order4Div4: return 1;
    case CaseTag::P5QuarterSplit: return 4;
    case CaseTag::P5Order4Odd: return 4;
    default: return 2;
    }
}

} // namespace

bool InstanceReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.status != Status::Fail; });
}

InstanceReport verify_factor_instance(const FactorInstance& fi, const Options& opt) {
    Timer timer;
    InstanceReport rep;
    {
        std::ostringstream key;
        key << "p=" << fi.p << ",s=" << fi.s << ",m=" << fi.m;
        rep.key = key.str();
    }
    rep.kind = "factor";
    const unsigned e = 1u << fi.m;

    try {
        const CaseTag tag = classify(fi.p, fi.s, fi.m);
        rep.case_tag = to_string(tag);
        PartitionSet parts = partitions_for_instance(fi.p, fi.s, fi.m, tag);
        for (const auto& [r, ab] : parts.ab)
            rep.info.emplace_back("A_" + std::to_string(r) + ",B_" + std::to_string(r),
                                  std::to_string(ab.A) + "," + std::to_string(ab.B));
        for (const auto& [r, cd] : parts.cd)
            rep.info.emplace_back("C_" + std::to_string(r) + ",D_" + std::to_string(r),
                                  std::to_string(cd.C) + "," + std::to_string(cd.D));

        // spectrum construction enforces the zero-sum and 2^m multiplicity
        Spectrum sp = spectrum(fi.p, fi.s, fi.m, parts);
        add_check(rep, "spectrum-zero-sum", true);
        for (const auto& entry : sp.entries)
            rep.info.emplace_back("period[x" + std::to_string(entry.multiplicity) + "]",
                                  sp.entry_display(entry));

        FactoredPoly fact = factorization(fi.p, fi.s, fi.m, parts);
        rep.info.emplace_back("factorization", fact.to_string());

        {
            Int delta = splitting_count(fi.p, fi.s, fi.m);
            unsigned bound = max_factor_degree(tag);
            bool ok = true;
            for (const auto& [f, mult] : fact.factors)
                ok = ok && static_cast<unsigned>(f.degree()) <= bound;
            // the count of factor slots, weighted by multiplicity, matches
            // delta factors of degree e/delta
            // each slot is a power of one irreducible of total degree e/delta,
            // so deg*mult per distinct factor is a multiple of e/delta
            Int slots = 0;
            for (const auto& [f, mult] : fact.factors)
                slots += div_exact(Int(static_cast<long>(f.degree())) * mult * delta,
                                   Int(static_cast<unsigned long>(e)),
                                   "splitting-degrees: factor block not a multiple of e/delta");
            add_check(rep, "splitting-degrees", ok && slots == delta,
                      "degrees inconsistent with delta = " + delta.get_str());
        }

        // oracle side
        FieldDesc field = FieldDesc::build(fi.p, fi.s);
        PeriodCounts pc = period_counts(field, e);
        {
            bool ok = true;
            for (const auto& row : pc.m) {
                uint64_t sum = 0;
                for (uint64_t v : row) sum += v;
                ok = ok && sum == field.q_u64();
            }
            add_check(rep, "row-sums-equal-q", ok);
        }
        std::vector<CycloInt> eta_star = reduced_periods(pc);
        std::vector<CycloInt> eta = ordinary_periods(pc);
        {
            CycloInt sum_star(fi.p), sum_ord(fi.p);
            for (const auto& z : eta_star) sum_star = cyc_add(sum_star, z);
            for (const auto& z : eta) sum_ord = cyc_add(sum_ord, z);
            add_check(rep, "reduced-periods-sum-zero", sum_star.is_zero());
            add_check(rep, "ordinary-periods-sum-minus-one",
                      sum_ord == CycloInt::from_integer(fi.p, -1));
        }

        IntPoly pstar = oracle_period_poly(field, e);
        rep.info.emplace_back("oracle-poly", pstar.to_string());
        {
            bool ok = true;
            for (const auto& z : eta_star) ok = ok && eval_intpoly_at(pstar, z).is_zero();
            add_check(rep, "newton-roundtrip-roots", ok);
        }

        add_check(rep, "factorization-equals-oracle", fact.expand() == pstar,
                  "expand(factorization) != oracle polynomial");

        {
            // each period vanishes in exactly one distinct factor, and each
            // factor F collects mult(F)*deg(F) of them
            bool ok = true;
            std::string detail;
            std::vector<unsigned> hits(fact.factors.size(), 0);
            for (size_t j = 0; j < eta_star.size(); ++j) {
                unsigned vanish = 0;
                for (size_t fi2 = 0; fi2 < fact.factors.size(); ++fi2) {
                    if (eval_intpoly_at(fact.factors[fi2].first, eta_star[j]).is_zero()) {
                        ++vanish;
                        ++hits[fi2];
                    }
                }
                if (vanish != 1) {
                    ok = false;
                    detail = "period index " + std::to_string(j) + " vanishes in " +
                             std::to_string(vanish) + " factors";
                }
            }
            for (size_t fi2 = 0; fi2 < fact.factors.size(); ++fi2) {
                unsigned expect = fact.factors[fi2].second *
                                  static_cast<unsigned>(fact.factors[fi2].first.degree());
                if (hits[fi2] != expect) {
                    ok = false;
                    detail = "factor " + std::to_string(fi2) + " gathered " +
                             std::to_string(hits[fi2]) + " periods, expected " +
                             std::to_string(expect);
                }
            }
            add_check(rep, "factor-root-multiplicities", ok, detail);
        }

        guarded(rep, "reduced-to-ordinary-identity", [&] {
            IntPoly pord = reduced_to_ordinary_poly(pstar, e);
            bool ok = true;
            for (const auto& z : eta) ok = ok && eval_intpoly_at(pord, z).is_zero();
            add_check(rep, "reduced-to-ordinary-identity", ok,
                      "ordinary periods are not the roots of P_e");
        });

        {
            auto closed = spectrum_as_cycloints(sp);
            if (!closed) {
                add_skip(rep, "spectrum-multiset-equals-oracle",
                         "nested radicals have no cyclotomic embedding; covered by factor roots");
            } else {
                add_check(rep, "spectrum-multiset-equals-oracle",
                          sorted_multiset(*closed) == sorted_multiset(eta_star));
            }
        }

        // counts: closed formula vs character-sum route for all n, plus the
        // independent convolution counter while q fits the budget
        guarded(rep, "counts-formula-vs-charsum", [&] {
            bool ok = true;
            std::string detail;
            for (unsigned n = 1; n <= e && ok; ++n) {
                Int a = counts_formula(fi.p, fi.s, fi.m, n, parts);
                Int b = count_diagonal_charsum(field, e, n, eta_star);
                if (a != b) {
                    ok = false;
                    detail = "n=" + std::to_string(n) + ": " + a.get_str() + " != " + b.get_str();
                }
            }
            add_check(rep, "counts-formula-vs-charsum", ok, detail);
        });
        if (field.q_u64() <= opt.convolution_budget) {
            guarded(rep, "counts-vs-convolution", [&] {
                unsigned maxn = std::min<unsigned>(e, opt.counts_max_n);
                auto conv = count_diagonal_convolution_range(field, e, maxn,
                                                             opt.convolution_budget);
                bool ok = true;
                std::string detail;
                for (unsigned n = 1; n <= maxn && ok; ++n) {
                    Int b = count_diagonal_charsum(field, e, n, eta_star);
                    if (conv[n - 1] != b) {
                        ok = false;
                        detail = "n=" + std::to_string(n) + ": convolution " +
                                 conv[n - 1].get_str() + " != " + b.get_str();
                    }
                }
                add_check(rep, "counts-vs-convolution", ok, detail);
            });
        } else {
            add_skip(rep, "counts-vs-convolution", "q exceeds the convolution budget");
        }

        if (field.q_u64() <= 10000) {
            guarded(rep, "generator-independence", [&] {
                FieldElem g2 = field.next_generator_after(field.gamma());
                auto pc2 = period_counts_with_generator(field, g2, e);
                auto eta2 = reduced_periods(pc2);
                add_check(rep, "generator-independence",
                          sorted_multiset(eta2) == sorted_multiset(eta_star),
                          "spectra differ between generators");
            });
        } else {
            add_skip(rep, "generator-independence", "q > 10^4");
        }
    } catch (const Error& err) {
        rep.checks.push_back({"instance", Status::Fail, err.what()});
    }

    rep.seconds = timer.elapsed();
    return rep;
}

InstanceReport verify_code_instance(const CodeInstance& ci, const Options& opt) {
    Timer timer;
    InstanceReport rep;
    {
        std::ostringstream key;
        key << "p=" << ci.p << ",l=" << ci.ell << ",s=" << ci.s << ",N=" << ci.N;
        rep.key = key.str();
    }
    rep.kind = "code";

    try {
        FieldDesc field = FieldDesc::build(ci.p, ci.s);
        CodeSpec code = build_code(field, ci.ell, ci.N);
        rep.case_tag = to_string(classify(ci.p, ci.s, code.m));
        rep.info.emplace_back("code",
                              "[" + std::to_string(code.length) + "," + std::to_string(code.dim) +
                                  "] over F_" + std::to_string(ci.p) + "^" + std::to_string(ci.ell));
        rep.info.emplace_back("e", std::to_string(code.e));

        PartitionSet parts = partitions_for_instance(ci.p, ci.s, code.m,
                                                     classify(ci.p, ci.s, code.m));
        WeightEnumerator closed = enumerator_closed_form(code, parts);
        rep.info.emplace_back("enumerator", closed.to_string());

        add_check(rep, "enumerator-total-q", closed.total() == field.q(),
                  "codeword count != q");

        {
            // sum_w a_w w = length * (q - q/p^ell): every position is nonzero
            // for exactly q - q/p^ell values of beta
            Int lhs = 0;
            for (const auto& [w, a] : closed.counts) lhs += a * Int(static_cast<unsigned long>(w));
            Int qtop = field.q();
            Int pl = int_pow_ui(static_cast<unsigned long>(ci.p), ci.ell);
            Int rhs = Int(static_cast<unsigned long>(code.length)) *
                      (qtop - div_exact(qtop, pl, "total-weight-identity"));
            add_check(rep, "total-weight-identity", lhs == rhs,
                      lhs.get_str() + " != " + rhs.get_str());
        }

        // Every coset representative's counted weight must equal the weight
        // derived from its reduced period.
        guarded(rep, "coset-weights-match-periods", [&] {
            PeriodCounts pc = period_counts(field, code.e);
            auto eta_star = reduced_periods(pc);
            bool ok = true;
            std::string detail;
            FieldElem rep_elem = field.one();
            for (uint64_t j = 0; j < code.e && ok; ++j) {
                if (!eta_star[j].is_rational_integer())
                    throw InconsistencyError("code-instance period is not rational");
                uint64_t counted = codeword_weight(field, code, rep_elem);
                uint64_t derived = weight_from_period(code, eta_star[j].rational_value());
                if (counted != derived) {
                    ok = false;
                    detail = "coset " + std::to_string(j) + ": counted " +
                             std::to_string(counted) + ", derived " + std::to_string(derived);
                }
                if (coset_index(field, code, rep_elem) != j) {
                    ok = false;
                    detail = "coset index mismatch at j=" + std::to_string(j);
                }
                rep_elem = field.mul(rep_elem, field.gamma());
            }
            add_check(rep, "coset-weights-match-periods", ok, detail);
        });

        guarded(rep, "enumerator-matches-bruteforce", [&] {
            BruteForceOptions bf;
            bf.budget = opt.codes_budget;
            bf.seed = opt.seed;
            WeightEnumerator ground = weight_distribution_bruteforce(field, code, bf);
            rep.info.emplace_back("bruteforce-mode", ground.sampled ? "representative" : "full");
            add_check(rep, "enumerator-matches-bruteforce", ground.counts == closed.counts,
                      "closed-form enumerator differs from brute force");
        });
    } catch (const Error& err) {
        rep.checks.push_back({"instance", Status::Fail, err.what()});
    }

    rep.seconds = timer.elapsed();
    return rep;
}

namespace {

// expand == oracle and the substitution identity, shared by the three
// fixed-form families
void check_poly_against_oracle(InstanceReport& rep, const FactoredPoly& fact,
                               const FieldDesc& field, uint64_t e) {
    rep.info.emplace_back("factorization", fact.to_string());
    IntPoly pstar = oracle_period_poly(field, e);
    add_check(rep, "matches-oracle", fact.expand() == pstar,
              "closed form != oracle polynomial");
    IntPoly pord = reduced_to_ordinary_poly(pstar, e);
    PeriodCounts pc = period_counts(field, e);
    bool ok = true;
    for (const auto& z : ordinary_periods(pc)) ok = ok && eval_intpoly_at(pord, z).is_zero();
    add_check(rep, "reduced-to-ordinary-identity", ok);
}

} // namespace

InstanceReport verify_semiprimitive_example(const Options&) {
    Timer timer;
    InstanceReport rep;
    rep.key = "semiprimitive:p=3,s=4,e=5";
    rep.kind = "example";
    try {
        FactoredPoly fact = semiprimitive_poly(3, 4, 5);
        FieldDesc field = FieldDesc::build(3, 4);
        check_poly_against_oracle(rep, fact, field, 5);
    } catch (const Error& err) {
        rep.checks.push_back({"instance", Status::Fail, err.what()});
    }
    rep.seconds = timer.elapsed();
    return rep;
}

InstanceReport verify_char2_example(const Options&) {
    Timer timer;
    InstanceReport rep;
    rep.key = "char2:s=4,f=5";
    rep.kind = "example";
    try {
        FactoredPoly fact = example1_poly(4, 5);
        FieldDesc field = FieldDesc::build(2, 4);
        check_poly_against_oracle(rep, fact, field, 3);
    } catch (const Error& err) {
        rep.checks.push_back({"instance", Status::Fail, err.what()});
    }
    rep.seconds = timer.elapsed();
    return rep;
}

InstanceReport verify_subfield_example(const Options&) {
    Timer timer;
    InstanceReport rep;
    rep.key = "subfield:p=3,s=4,l=2";
    rep.kind = "example";
    try {
        FactoredPoly fact = example2_poly(3, 4, 2);
        FieldDesc field = FieldDesc::build(3, 4);
        check_poly_against_oracle(rep, fact, field, 10);
    } catch (const Error& err) {
        rep.checks.push_back({"instance", Status::Fail, err.what()});
    }
    rep.seconds = timer.elapsed();
    return rep;
}

InstanceReport verify_partitions(const Options&) {
    Timer timer;
    InstanceReport rep;
    rep.key = "partitions";
    rep.kind = "partitions";
    try {
        struct Expect2B2 {
            uint64_t p;
            unsigned k;
            int64_t A, B;
        };
        struct ExpectD2 {
            uint64_t p;
            unsigned k;
            int64_t C, D;
        };
        const Expect2B2 eab[] = {{3, 1, -1, 1}, {3, 2, -1, 2}, {3, 4, 7, 4}};
        const ExpectD2 ecd[] = {{5, 1, -1, 2}, {5, 2, 3, 4}, {5, 4, 7, 24}};
        bool ok = true;
        std::string detail;
        for (const auto& ex : eab) {
            auto r = solve_2B2(ex.p, ex.k);
            if (r.A != ex.A || r.B != ex.B) {
                ok = false;
                detail = "2B2(" + std::to_string(ex.p) + "," + std::to_string(ex.k) + ") gave A=" +
                         std::to_string(r.A) + ",B=" + std::to_string(r.B);
            }
        }
        for (const auto& ex : ecd) {
            auto r = solve_D2(ex.p, ex.k);
            if (r.C != ex.C || r.D != ex.D) {
                ok = false;
                detail = "D2(" + std::to_string(ex.p) + "," + std::to_string(ex.k) + ") gave C=" +
                         std::to_string(r.C) + ",D=" + std::to_string(r.D);
            }
        }
        add_check(rep, "fixed-values", ok, detail);

        // uniqueness and the defining identity across the sweep; the solvers
        // throw on zero or multiple survivors
        guarded(rep, "uniqueness-sweep", [&] {
            bool sweep_ok = true;
            for (uint64_t p : {3ull, 11ull, 19ull})
                for (unsigned k = 1; k <= 12; ++k) {
                    auto r = solve_2B2(p, k);
                    Int pk = int_pow_ui(static_cast<unsigned long>(p), k);
                    sweep_ok = sweep_ok && Int(r.A) * r.A + 2 * Int(r.B) * r.B == pk &&
                               ((r.A % 4 + 4) % 4 == 3) && r.A % static_cast<int64_t>(p) != 0;
                }
            for (uint64_t p : {5ull, 13ull, 29ull})
                for (unsigned k = 1; k <= 12; ++k) {
                    auto r = solve_D2(p, k);
                    Int pk = int_pow_ui(static_cast<unsigned long>(p), k);
                    sweep_ok = sweep_ok && Int(r.C) * r.C + Int(r.D) * r.D == pk &&
                               ((r.C % 4 + 4) % 4 == 3) && r.C % static_cast<int64_t>(p) != 0;
                }
            add_check(rep, "uniqueness-sweep", sweep_ok, "identity or normalization violated");
        });
    } catch (const Error& err) {
        rep.checks.push_back({"instance", Status::Fail, err.what()});
    }
    rep.seconds = timer.elapsed();
    return rep;
}

std::vector<InstanceReport> run_verification(const Options& opt) {
    std::vector<FactorInstance> factor_instances = {
        {3, 4, 4}, {3, 8, 4}, {3, 8, 5}, {11, 4, 4}, // p = 3 (mod 8) closed-form rows
        {5, 4, 4}, {13, 4, 4},                       // p = 5 (mod 8), quarter split
        {3, 2, 3}, {3, 4, 3},                        // order-8 closed forms
        {5, 2, 3}, {5, 4, 3}, {5, 2, 2}, {5, 4, 2},  // order-8 / order-4 closed forms
    };
    std::vector<CodeInstance> code_instances = {
        {3, 1, 4, 16}, {3, 1, 4, 8}, {3, 1, 8, 16},
    };
    if (opt.tier >= Tier::Full) {
        factor_instances.push_back({5, 8, 4});
        factor_instances.push_back({5, 8, 3});
        code_instances.push_back({5, 1, 8, 8});
    }
    if (opt.tier >= Tier::Stretch) factor_instances.push_back({3, 16, 5});

    std::vector<InstanceReport> reports;
    auto wanted = [&](const std::string& key) {
        return !opt.instance_filter || key.find(*opt.instance_filter) != std::string::npos;
    };
    for (const auto& fi : factor_instances) {
        std::ostringstream key;
        key << "p=" << fi.p << ",s=" << fi.s << ",m=" << fi.m;
        if (wanted(key.str())) reports.push_back(verify_factor_instance(fi, opt));
    }
    for (const auto& ci : code_instances) {
        std::ostringstream key;
        key << "p=" << ci.p << ",l=" << ci.ell << ",s=" << ci.s << ",N=" << ci.N;
        if (wanted(key.str())) reports.push_back(verify_code_instance(ci, opt));
    }
    if (wanted("semiprimitive")) reports.push_back(verify_semiprimitive_example(opt));
    if (wanted("char2")) reports.push_back(verify_char2_example(opt));
    if (wanted("subfield")) reports.push_back(verify_subfield_example(opt));
    if (wanted("partitions")) reports.push_back(verify_partitions(opt));
    return reports;
}

} // namespace cyclo::verify
