// Batch driver: point counts, identity/congruence verification campaigns,
// and naive-vs-formula timing scans over parameter grids.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dworkhg/dwork.hpp"

using namespace dworkhg;

namespace {

constexpr const char* kVersion = "dworkhg 1.0.0";

struct RunConfig {
    std::string command;
    std::vector<uint32_t> qs;       // explicit prime powers
    std::vector<uint32_t> ps;       // primes (with shared e)
    uint32_t e = 1;
    uint32_t d = 4;
    std::string lambda_sel = "all";  // all | singular | comma list
    unsigned k = 2;
    unsigned bits = 0;               // 0 = auto
    std::vector<std::string> methods = {"naive", "koblitz", "greene", "padic"};
    std::vector<std::string> theorems;
    std::string backend = "auto";
    int jobs = 0;
    std::string format;              // table | json | csv
    std::string out;
    std::string cache_dir;
    bool strict_conjectures = false;
    uint64_t budget = 100000000ull;

    std::vector<std::pair<std::string, std::string>> serialize() const {
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
            return s;
        };
        auto joinu = [](const std::vector<uint32_t>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
            return s;
        };
        return {{"version", kVersion},
                {"command", command},
                {"q", joinu(qs)},
                {"p", joinu(ps)},
                {"e", std::to_string(e)},
                {"d", std::to_string(d)},
                {"lambda", lambda_sel},
                {"k", std::to_string(k)},
                {"bits", std::to_string(bits)},
                {"methods", join(methods)},
                {"theorems", join(theorems)},
                {"backend", backend},
                {"format", format},
                {"strict_conjectures", strict_conjectures ? "true" : "false"},
                {"budget", std::to_string(budget)}};
    }
};

std::vector<uint32_t> resolve_q_list(const RunConfig& cfg, std::vector<uint32_t> dflt) {
    if (!cfg.qs.empty()) return cfg.qs;
    if (!cfg.ps.empty()) {
        std::vector<uint32_t> out;
        for (uint32_t p : cfg.ps) {
            uint64_t q = 1;
            for (uint32_t i = 0; i < cfg.e; ++i) q *= p;
            if (q > 10000) throw config_error("q exceeds the supported bound 10^4");
            out.push_back((uint32_t)q);
        }
        return out;
    }
    return dflt;
}

FieldContext make_field(uint32_t q, const RunConfig& cfg) {
    uint32_t p = 0, e = 0;
    for (uint32_t c = 2; (uint64_t)c * c <= q; ++c) {
        if (q % c == 0) {
            uint64_t v = q;
            e = 0;
            while (v % c == 0) { v /= c; ++e; }
            if (v != 1) throw config_error("q must be a prime power");
            p = c;
            break;
        }
    }
    if (p == 0) { p = q; e = 1; }
    if (!cfg.cache_dir.empty()) return build_field_cached(p, e, cfg.cache_dir);
    return build_field(p, e);
}

std::vector<elem> lambda_list(const FieldContext& F, uint32_t d, const std::string& sel) {
    std::vector<elem> out;
    if (sel == "all") {
        for (elem l = 1; l < F.q; ++l) out.push_back(l);
    } else if (sel == "singular") {
        for (elem l = 1; l < F.q; ++l)
            if (F.pow(l, d) == 1) out.push_back(l);
    } else {
        std::stringstream ss(sel);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            long v = std::stol(tok);
            out.push_back(F.from_int(v));
        }
    }
    return out;
}

void emit(const RunConfig& cfg, const std::vector<VerificationReport>& rows,
          const SuiteSummary& sum) {
    std::string fmt = cfg.format;
    if (fmt.empty()) fmt = cfg.out.empty() ? "table" : "json";
    std::string payload;
    if (fmt == "json") {
        payload = reports_to_json(cfg.serialize(), rows);
    } else if (fmt == "csv") {
        std::ostringstream os;
        os << "theorem,params,lhs,rhs,status,discrepancy\n";
        for (const auto& r : rows) {
            std::string ps;
            for (size_t i = 0; i < r.params.size(); ++i)
                ps += (i ? ";" : "") + r.params[i].first + "=" + r.params[i].second;
            auto esc = [](const std::string& s) {
                std::string o = "\"";
                for (char c : s) { if (c == '"') o += '"'; o += c; }
                return o + "\"";
            };
            os << esc(r.theorem) << "," << esc(ps) << "," << esc(r.lhs) << "," << esc(r.rhs)
               << "," << r.status << "," << esc(r.discrepancy) << "\n";
        }
        payload = os.str();
    } else {
        payload = summary_table(sum);
    }
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw config_error("cannot open output file: " + cfg.out);
        f << payload;
        std::cout << summary_table(sum);
    } else {
        std::cout << payload;
        if (fmt != "table") std::cerr << summary_table(sum);
    }
}

// ---------------------------------------------------------------------------

int cmd_count(const RunConfig& cfg) {
    std::vector<VerificationReport> rows;
    auto want = [&](const std::string& m) {
        return std::find(cfg.methods.begin(), cfg.methods.end(), m) != cfg.methods.end();
    };
    for (uint32_t q : resolve_q_list(cfg, {13})) {
        FieldContext F = make_field(q, cfg);
        bool char_ok = (q - 1) % cfg.d == 0;
        bool k3 = cfg.d == 4 && (q - 1) % 4 == 0;
        for (elem lam : lambda_list(F, cfg.d, cfg.lambda_sel)) {
            struct Val {
                std::string method;
                bool applicable = false;
                std::string shown;      // lhs string
                int64_t count = -1;     // full count when exact
                std::string note;
            };
            std::vector<Val> vals;
            auto add = [&](const std::string& m, bool applicable, std::string why_not,
                           auto&& fn) {
                if (!want(m)) return;
                Val v;
                v.method = m;
                if (!applicable) {
                    v.shown = "-";
                    v.note = why_not;
                    vals.push_back(std::move(v));
                    return;
                }
                v.applicable = true;
                fn(v);
                vals.push_back(std::move(v));
            };
            add("naive", lam != 0 || true, "", [&](Val& v) {
                v.count = count_naive(F, cfg.d, lam, cfg.budget);
                v.shown = std::to_string(v.count);
            });
            add("serial", true, "", [&](Val& v) {
                v.count = count_naive_serial(F, cfg.d, lam, cfg.budget);
                v.shown = std::to_string(v.count);
            });
            add("koblitz", char_ok && lam != 0, "needs q = 1 mod d and lambda != 0", [&](Val& v) {
                v.count = count_koblitz(F, cfg.d, lam, cfg.bits);
                v.shown = std::to_string(v.count);
            });
            add("greene", k3 && lam != 0, "needs d = 4, q = 1 mod 4, lambda != 0", [&](Val& v) {
                v.count = count_k3_greene(lam, F);
                v.shown = std::to_string(v.count);
            });
            add("padic", cfg.d == 4 && F.e == 1 && lam != 0,
                "needs d = 4, prime field, lambda != 0", [&](Val& v) {
                    uint64_t r = count_k3_padic(lam, F.p, cfg.k);
                    v.shown = std::to_string(r);
                    v.note = "mod p^" + std::to_string(cfg.k);
                });
            // reference: first applicable exact count in priority order
            const Val* ref = nullptr;
            for (const char* m : {"naive", "serial", "greene", "koblitz"})
                for (const auto& v : vals)
                    if (!ref && v.method == m && v.applicable) ref = &v;
            uint64_t M = 1;
            for (unsigned i = 0; i < cfg.k; ++i) M *= F.p;
            for (const auto& v : vals) {
                std::vector<std::pair<std::string, std::string>> params = {
                    {"method", v.method}, {"d", std::to_string(cfg.d)}, {"q", std::to_string(q)},
                    {"lambda", std::to_string(lam)}};
                if (v.method == "padic") params.push_back({"k", std::to_string(cfg.k)});
                if (!v.applicable) {
                    VerificationReport r = make_report("count", std::move(params), "-", "-", true,
                                                       "inapplicable: " + v.note);
                    r.status = "vacuous";
                    rows.push_back(r);
                    continue;
                }
                std::string rhs = v.shown;
                bool pass = true;
                if (ref && ref->method != v.method) {
                    if (v.method == "padic") {
                        rhs = std::to_string((uint64_t)ref->count % M);
                        pass = v.shown == rhs;
                    } else {
                        rhs = std::to_string(ref->count);
                        pass = v.count == ref->count;
                    }
                }
                rows.push_back(make_report("count", std::move(params), v.shown, rhs, pass));
            }
        }
    }
    SuiteSummary sum = summarize(rows, cfg.strict_conjectures);
    emit(cfg, rows, sum);
    return sum.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg) {
    std::vector<VerificationReport> rows;
    SuiteOptions opt;
    opt.theorems = cfg.theorems;
    opt.strict_conjectures = cfg.strict_conjectures;
    opt.budget = cfg.budget;
    auto want = [&](const std::string& id) { return opt.want(id); };
    const bool all = cfg.theorems.empty();

    static const std::set<std::string> identity_ids = {
        "gauss-magnitude", "gauss-reflection", "hasse-davenport", "helversen-pasotto",
        "gauss-pair-lemma"};
    static const std::set<std::string> congruence_ids = {
        "trunc-2f1-reduction", "trunc-2f1-quadratic", "trunc-hgf-reduction",
        "trunc-3f2-reduction", "binom-2f1-vanishing", "greene-padic-bridge",
        "k3-trace-period", "k3-count-padic-3mod4", "k3-count-padic-1mod4",
        "count-padic-general-conjecture", "trace-period-general-conjecture"};

    static const std::set<std::string> other_ids = {
        "coset-closed-form", "pochhammer-gamma-identity", "k3-count-exact", "coset-count",
        "general-count-formula", "generator-invariance", "modulus-invariance",
        "jacobi-quotient-agreement", "gamma-reflection", "gamma-continuity",
        "padic-precision-soundness", "hgf-dual-definition"};

    bool any_identity = all, any_congruence = all;
    for (const auto& t : cfg.theorems) {
        if (identity_ids.count(t)) any_identity = true;
        if (congruence_ids.count(t)) any_congruence = true;
        if (!identity_ids.count(t) && !congruence_ids.count(t) && !other_ids.count(t))
            throw config_error("unknown theorem id: " + t);
    }

    std::vector<uint32_t> qs = resolve_q_list(cfg, {5, 13});
    std::vector<uint32_t> ps = cfg.ps;
    if (ps.empty()) {
        // primes from the q list (e = 1 entries), else a small default
        for (uint32_t q : qs)
            if (is_prime_u32(q)) ps.push_back(q);
        if (ps.empty()) ps = {5, 13};
    }

    if (any_identity) {
        for (uint32_t q : qs) {
            FieldContext F = make_field(q, cfg);
            CharTable C(F, cfg.bits ? cfg.bits : auto_precision_bits(q, cfg.d));
            for (auto& r : identity_suite(C))
                if (all || want(r.theorem)) rows.push_back(std::move(r));
        }
    }
    if (any_congruence) {
        for (uint32_t p : ps) {
            auto sub = congruence_suite(p, opt);
            rows.insert(rows.end(), sub.begin(), sub.end());
        }
    }
    if (all || want("coset-closed-form")) {
        for (uint32_t q : qs) {
            if ((q - 1) % 4 != 0) continue;
            FieldContext F = make_field(q, cfg);
            auto sub = coset_closed_form_suite(F, cfg.bits);
            rows.insert(rows.end(), sub.begin(), sub.end());
        }
    }
    if (all || want("pochhammer-gamma-identity")) {
        for (uint32_t p : ps) {
            if (!is_prime_u32(p) || (p - 1) % cfg.d != 0) continue;
            auto sub = pochhammer_suite(p, cfg.d);
            rows.insert(rows.end(), sub.begin(), sub.end());
        }
    }
    if (all || want("k3-count-exact")) {
        for (uint32_t q : qs) {
            if ((q - 1) % 4 != 0) continue;
            FieldContext F = make_field(q, cfg);
            CycloContext cc(q - 1);
            GreeneContext E(F, cc);
            for (elem lam = 1; lam < q; ++lam) {
                int64_t a = count_k3_greene(lam, E);
                int64_t b = count_naive(F, 4, lam, cfg.budget);
                rows.push_back(make_report(
                    "k3-count-exact",
                    {{"q", std::to_string(q)}, {"lambda", std::to_string(lam)}},
                    std::to_string(a), std::to_string(b), a == b));
            }
        }
    }
    if (all || want("coset-count")) {
        for (uint32_t q : qs) {
            if ((q - 1) % cfg.d != 0) continue;
            FieldContext F = make_field(q, cfg);
            unsigned bits = cfg.bits ? cfg.bits : auto_precision_bits(q, cfg.d);
            CharTable C(F, bits);
            for (elem lam = 1; lam < q; ++lam) {
                double resid = 0;
                int64_t a = count_koblitz(C, cfg.d, lam, 1e-6, &resid);
                int64_t b = count_naive(F, cfg.d, lam, cfg.budget);
                std::ostringstream rs;
                rs << std::scientific << std::setprecision(2) << resid;
                rows.push_back(make_report("coset-count",
                                           {{"d", std::to_string(cfg.d)},
                                            {"q", std::to_string(q)},
                                            {"lambda", std::to_string(lam)}},
                                           std::to_string(a), std::to_string(b), a == b,
                                           a == b ? "0" : "residual " + rs.str()));
            }
        }
    }
    if (all || want("general-count-formula")) {
        for (uint32_t q : qs) {
            if ((q - 1) % cfg.d != 0) continue;
            FieldContext F = make_field(q, cfg);
            for (elem lam = 1; lam < q; ++lam)
                rows.push_back(count_general_greene(cfg.d, lam, F, cfg.budget));
        }
    }
    bool want_fieldprops = all || want("generator-invariance") || want("modulus-invariance") ||
                           want("jacobi-quotient-agreement");
    if (want_fieldprops) {
        for (auto& r : property_suite_field_invariance())
            if (all || want(r.theorem)) rows.push_back(std::move(r));
    }
    if (all || want("gamma-reflection") || want("gamma-continuity") ||
        want("padic-precision-soundness")) {
        for (auto& r : property_suite_padic())
            if (all || want(r.theorem)) rows.push_back(std::move(r));
    }
    if (all || want("hgf-dual-definition")) {
        for (auto& r : property_suite_dual_definition())
            if (all || want(r.theorem)) rows.push_back(std::move(r));
    }

    SuiteSummary sum = summarize(rows, cfg.strict_conjectures);
    emit(cfg, rows, sum);
    return sum.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

int cmd_scan(const RunConfig& cfg) {
    std::vector<uint32_t> qs = resolve_q_list(cfg, {5, 13, 17, 29, 37, 41});
    std::ostringstream os;
    os << "q,lambda_count,naive_ns,formula_ns,speedup\n";
    using clock = std::chrono::steady_clock;
    for (uint32_t q : qs) {
        FieldContext F = make_field(q, cfg);
        bool char_ok = (q - 1) % cfg.d == 0;
        auto t0 = clock::now();
        std::vector<int64_t> naive;
        for (elem lam = 1; lam < q; ++lam) naive.push_back(count_naive(F, cfg.d, lam, cfg.budget));
        auto t1 = clock::now();
        std::vector<int64_t> formula;
        if (char_ok) {
            if (cfg.d == 4 && (q - 1) % 4 == 0) {
                CycloContext cc(q - 1);
                GreeneContext E(F, cc);
                for (elem lam = 1; lam < q; ++lam) formula.push_back(count_k3_greene(lam, E));
            } else {
                unsigned bits = cfg.bits ? cfg.bits : auto_precision_bits(q, cfg.d);
                CharTable C(F, bits);
                for (elem lam = 1; lam < q; ++lam)
                    formula.push_back(count_koblitz(C, cfg.d, lam));
            }
        }
        auto t2 = clock::now();
        if (char_ok && naive != formula)
            throw std::logic_error("scan cross-check failed at q = " + std::to_string(q));
        auto ns = [](auto a, auto b) {
            return (uint64_t)std::chrono::duration_cast<std::chrono::nanoseconds>(b - a).count();
        };
        uint64_t n_ns = ns(t0, t1), f_ns = char_ok ? ns(t1, t2) : 0;
        os << q << "," << (q - 1) << "," << n_ns << ",";
        if (char_ok) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2f", f_ns ? (double)n_ns / (double)f_ns : 0.0);
            os << f_ns << "," << buf << "\n";
        } else {
            os << "-,-\n";
        }
    }
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) throw config_error("cannot open output file: " + cfg.out);
        f << os.str();
    } else {
        std::cout << os.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dwork hypersurface point counts and hypergeometric identity verification"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--q", cfg.qs, "prime powers q (comma separated)")->delimiter(',');
        c->add_option("--p", cfg.ps, "primes p (comma separated)")->delimiter(',');
        c->add_option("--e", cfg.e, "extension degree for --p");
        c->add_option("--d", cfg.d, "hypersurface degree");
        c->add_option("--lambda", cfg.lambda_sel, "all | singular | comma list");
        c->add_option("--k", cfg.k, "p-adic precision (mod p^k)");
        c->add_option("--bits", cfg.bits, "float precision bits (0 = auto)");
        c->add_option("--backend", cfg.backend, "auto | exact | approx");
        c->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware default)");
        c->add_option("--format", cfg.format, "table | json | csv");
        c->add_option("--out", cfg.out, "output file (stdout if omitted)");
        c->add_option("--cache-dir", cfg.cache_dir, "dlog table cache directory");
        c->add_flag("--strict-conjectures", cfg.strict_conjectures,
                    "conjecture disagreements count as failures");
        c->add_option("--budget", cfg.budget, "enumeration step budget");
    };

    CLI::App* c1 = app.add_subcommand("count", "point counts by every requested method");
    add_common(c1);
    c1->add_option("--methods", cfg.methods, "naive,serial,koblitz,greene,padic")->delimiter(',');
    CLI::App* c2 = app.add_subcommand("verify", "run verification suites");
    add_common(c2);
    c2->add_option("--theorems", cfg.theorems, "theorem ids (empty = all applicable)")
        ->delimiter(',');
    CLI::App* c3 = app.add_subcommand("scan", "naive vs formula timing scan (CSV)");
    add_common(c3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    try {
#ifdef _OPENMP
        if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);
#endif
        if (c1->parsed()) { cfg.command = "count"; return cmd_count(cfg); }
        if (c2->parsed()) { cfg.command = "verify"; return cmd_verify(cfg); }
        cfg.command = "scan";
        return cmd_scan(cfg);
    } catch (const config_error& ex) {
        std::cerr << "configuration error: " << ex.what() << "\n";
        return 2;
    } catch (const budget_error& ex) {
        std::cerr << "budget exceeded: " << ex.what() << "\n";
        return 2;
    } catch (const precision_error& ex) {
        std::cerr << "precision exhausted: " << ex.what() << "\n";
        return 3;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
