// zetap: exact-arithmetic toolkit for the Kubota-Leopoldt p-adic L-function.
//
// Every command validates its configuration, runs the requested computation
// and emits either a json document (deterministic for a fixed config and
// seed) or a readable table. Exit codes: 0 pass, 1 check failure, 2 usage.

#include <CLI11.hpp>

#include <zetap/eisenstein.hpp>
#include <zetap/json_io.hpp>
#include <zetap/lambda_modules.hpp>
#include <zetap/lvalues.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace zetap;

namespace {

struct JobConfig {
    long prime = 5;
    int precision = 20;
    long degree = 0;  // 0: planned from the request
    long smoothing = 0;
    std::string format = "json";
    unsigned long seed = 1;

    Int p() const { return Int(prime); }

    void validate() const {
        if (!is_prime_small(Int(prime)) || prime < 3)
            throw CLI::ValidationError("--prime must be an odd prime >= 3");
        if (precision < 4) throw CLI::ValidationError("--precision must be >= 4");
        if (smoothing != 0 && !valid_smoothing(Int(prime), smoothing))
            throw CLI::ValidationError("--smoothing must topologically generate the units");
        if (format != "json" && format != "table")
            throw CLI::ValidationError("--format must be json or table");
    }

    KLPlan plan(long kmax) const {
        KLPlan pl = kl_plan(p(), precision, kmax, degree);
        if (degree > 0) pl.N = std::max(pl.N, degree);
        return pl;
    }
};

void add_common(CLI::App* cmd, JobConfig& cfg) {
    cmd->add_option("--prime,-p", cfg.prime, "odd prime p")->envname("ZETAP_PRIME");
    cmd->add_option("--precision,-M", cfg.precision, "target p-adic digits")
        ->envname("ZETAP_PRECISION");
    cmd->add_option("--degree,-N", cfg.degree, "series truncation degree (0 = auto)")
        ->envname("ZETAP_DEGREE");
    cmd->add_option("--smoothing,-a", cfg.smoothing, "smoothing parameter (0 = default)")
        ->envname("ZETAP_SMOOTHING");
    cmd->add_option("--format", cfg.format, "json | table")->envname("ZETAP_FORMAT");
    cmd->add_option("--seed", cfg.seed, "seed for sampled checks")->envname("ZETAP_SEED");
}

Json result_header(const JobConfig& cfg, const std::string& command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["prime"] = cfg.prime;
    j["precision"] = cfg.precision;
    j["seed"] = cfg.seed;
    return j;
}

void emit(const JobConfig& cfg, const Json& j, const std::string& table) {
    if (cfg.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

// descriptor grammar: trivial | omega^i | quadratic:D | products joined by '*'
DirichletCharacter parse_character(const std::string& desc, const Int& p) {
    DirichletCharacter chi = DirichletCharacter::trivial();
    std::string rest = desc;
    while (!rest.empty()) {
        auto star = rest.find('*');
        std::string tok = rest.substr(0, star);
        rest = (star == std::string::npos) ? "" : rest.substr(star + 1);
        if (tok == "trivial" || tok.empty()) continue;
        if (tok.rfind("omega^", 0) == 0) {
            long i = std::stol(tok.substr(6));
            chi = chi.times(DirichletCharacter::teichmuller_power(p, i));
        } else if (tok.rfind("quadratic:", 0) == 0) {
            unsigned long D = std::stoul(tok.substr(10));
            chi = chi.times(DirichletCharacter::quadratic(D));
        } else {
            throw CLI::ValidationError("character descriptor: " + tok);
        }
    }
    return chi;
}

std::string rat_or_pole(const Rat& q) { return rat_to_string(q); }

// --------------------------------------------------------------------------

int cmd_zeta_moments(const JobConfig& cfg, long kmax) {
    KLPlan plan = cfg.plan(kmax);
    auto zp = build_zeta_p(cfg.p(), plan.M_work, plan.N, cfg.smoothing);
    auto triv = DirichletCharacter::trivial();
    Json out = result_header(cfg, "zeta-moments");
    out["N"] = plan.N;
    out["smoothing"] = zp.smoothing();
    Json rows = Json::array();
    std::string table = "  k  value (p-adic)                     oracle          agree\n";
    bool all_ok = true;
    for (long k = 0; k <= kmax; ++k) {
        Json row;
        row["k"] = k;
        if (k == 0) {
            row["pole"] = true;
            table += "  0  pole of the pseudo-measure\n";
            rows.push_back(row);
            continue;
        }
        Padic got = zp.eval(triv, k);
        Rat oracle = (Rat(1) - Rat(pow_int(cfg.p(), k - 1))) * zeta_neg(k - 1);
        Padic want = embed_rational(oracle, cfg.p(), plan.M_work);
        long agree = (got.is_zero() && want.is_zero())
                         ? cfg.precision
                         : Padic::agree_digits(got, want);
        bool ok = agree >= cfg.precision - 3;
        all_ok = all_ok && ok;
        row["value"] = padic_to_json(got.capped(cfg.precision));
        row["oracle"] = rat_or_pole(oracle);
        row["agree_digits"] = agree;
        row["pass"] = ok;
        rows.push_back(row);
        table += "  " + std::to_string(k) + "  " + got.capped(cfg.precision).to_string() + "   " +
                 rat_or_pole(oracle) + "   " + std::to_string(agree) + (ok ? "" : "  FAIL") + "\n";
    }
    out["rows"] = std::move(rows);
    out["pass"] = all_ok;
    emit(cfg, out, table);
    return all_ok ? 0 : 1;
}

int cmd_kummer(const JobConfig& cfg, const std::string& pairs_arg, long count) {
    // triples (k, l, m) with k = l mod (p-1)p^(m-1)
    struct Triple {
        long k, l;
        int m;
    };
    std::vector<Triple> triples;
    if (!pairs_arg.empty()) {
        std::stringstream ss(pairs_arg);
        std::string item;
        while (std::getline(ss, item, ';')) {
            Triple t{};
            if (sscanf(item.c_str(), "%ld,%ld,%d", &t.k, &t.l, &t.m) != 3)
                throw CLI::ValidationError("kummer: triples look like k,l,m;k,l,m");
            triples.push_back(t);
        }
    } else {
        std::mt19937_64 rng(cfg.seed);
        long pm1 = cfg.prime - 1;
        while (static_cast<long>(triples.size()) < count) {
            int m = 1 + static_cast<int>(rng() % 2);
            long step = pm1 * pow_int(cfg.p(), m - 1).convert_to<long>();
            long k = 1 + static_cast<long>(rng() % 16);
            if (k % pm1 == 0) continue;
            long l = k + step * (1 + static_cast<long>(rng() % 2));
            triples.push_back({k, l, m});
        }
    }
    long kmax = 1;
    for (const auto& t : triples) kmax = std::max({kmax, t.k, t.l});
    KLPlan plan = cfg.plan(kmax);
    auto zp = build_zeta_p(cfg.p(), plan.M_work, plan.N, cfg.smoothing);
    auto triv = DirichletCharacter::trivial();

    Json out = result_header(cfg, "kummer");
    Json rows = Json::array();
    std::string table = "  k   l   m   status\n";
    bool all_ok = true;
    for (const auto& t : triples) {
        Json row;
        row["k"] = t.k;
        row["l"] = t.l;
        row["m"] = t.m;
        long step = (cfg.prime - 1) * pow_int(cfg.p(), t.m - 1).convert_to<long>();
        if ((t.k - t.l) % step != 0 || t.k % (cfg.prime - 1) == 0) {
            row["status"] = "not-applicable";
            rows.push_back(row);
            table += "  " + std::to_string(t.k) + " " + std::to_string(t.l) + " " +
                     std::to_string(t.m) + "  not-applicable\n";
            continue;
        }
        Padic a = zp.eval(triv, t.k);
        Padic b = zp.eval(triv, t.l);
        bool ok = Padic::agree_abs(a, b, t.m);
        all_ok = all_ok && ok;
        row["status"] = ok ? "pass" : "fail";
        rows.push_back(row);
        table += "  " + std::to_string(t.k) + " " + std::to_string(t.l) + " " +
                 std::to_string(t.m) + "  " + (ok ? "pass" : "FAIL") + "\n";
    }
    out["rows"] = std::move(rows);
    out["pass"] = all_ok;
    emit(cfg, out, table);
    return all_ok ? 0 : 1;
}

int cmd_coleman(const JobConfig& cfg, long a, int depth, const std::string& tower_file, long kmax) {
    Json out = result_header(cfg, "coleman");
    std::string table;
    if (a == 0) a = default_smoothing(cfg.p());
    bool all_ok = true;

    UnitTower tower;
    if (!tower_file.empty()) {
        std::ifstream in(tower_file);
        if (!in) throw CLI::ValidationError("coleman: cannot open " + tower_file);
        Json j = Json::parse(in);
        tower = tower_from_json(j);
        out["tower_file"] = tower_file;
    } else {
        tower = cyclotomic_tower(cfg.p(), cfg.precision, a, depth);
        ModCtx m(cfg.p(), cfg.precision);
        auto closed = coleman_closed_form(m, a);
        out["closed_form"] = series_to_json(m, closed.coeffs());
        table += "closed form f_c(" + std::to_string(a) + ")\n";
    }
    out["norm_compatible"] = tower.norm_compatible(std::max(1, tower.M - 2));
    all_ok = all_ok && out["norm_compatible"].get<bool>();

    auto rec = coleman_reconstruct(tower);
    out["reconstructed"] = series_to_json(rec.ctx(), rec.coeffs());
    out["certified_digits"] = rec.ctx().M;
    if (tower_file.empty()) {
        ModCtx mc(cfg.p(), rec.ctx().M);
        bool match = rec.equals_mod(coleman_closed_form(mc, a), rec.ctx().M);
        out["matches_closed_form"] = match;
        all_ok = all_ok && match;
        table += "reconstruction matches mod p^" + std::to_string(rec.ctx().M) +
                 (match ? "\n" : "  FAIL\n");
    }

    // Col moments table
    KLPlan plan = cfg.plan(kmax);
    ModCtx mw(cfg.p(), plan.M_work);
    auto col = coleman_map(coleman_closed_form(mw, a), plan.N);
    Json moments = Json::array();
    auto triv = DirichletCharacter::trivial();
    for (long k = 1; k <= kmax; ++k) {
        Padic got = col.eval(triv, k);
        Rat oracle = -(Rat(pow_int(Int(a), k)) - 1) * (Rat(1) - Rat(pow_int(cfg.p(), k - 1))) *
                     zeta_neg(k - 1);
        Padic want = embed_rational(oracle, cfg.p(), plan.M_work);
        long agree =
            (got.is_zero() && want.is_zero()) ? cfg.precision : Padic::agree_digits(got, want);
        bool ok = agree >= cfg.precision - 4;
        all_ok = all_ok && ok;
        Json row;
        row["k"] = k;
        row["value"] = padic_to_json(got.capped(cfg.precision));
        row["oracle"] = rat_or_pole(oracle);
        row["agree_digits"] = agree;
        moments.push_back(row);
        table += "k=" + std::to_string(k) + " agree=" + std::to_string(agree) + "\n";
    }
    out["col_moments"] = std::move(moments);
    out["pass"] = all_ok;
    emit(cfg, out, table);
    return all_ok ? 0 : 1;
}

int cmd_weierstrass(const JobConfig& cfg, const std::string& series_file) {
    std::ifstream in(series_file);
    if (!in) throw CLI::ValidationError("weierstrass: cannot open " + series_file);
    Json j = Json::parse(in);
    ModCtx m;
    Poly f;
    series_from_json(j, m, f);
    auto w = weierstrass_prepare(m, f, static_cast<long>(std::max<size_t>(f.size(), 8)));
    Json out = result_header(cfg, "weierstrass");
    out["mu"] = w.mu;
    out["lambda"] = w.lambda;
    out["distinguished"] = series_to_json(ModCtx(m.p, m.M - w.mu), w.distinguished);
    out["unit_prefix"] = series_to_json(ModCtx(m.p, m.M - w.mu), w.unit);
    std::string table = "mu = " + std::to_string(w.mu) + ", lambda = " + std::to_string(w.lambda) + "\n";
    emit(cfg, out, table);
    return 0;
}

int cmd_eisenstein(const JobConfig& cfg, long weight, long nmax) {
    KLPlan plan = cfg.plan(weight + 2);
    auto q = stabilized_eisenstein(cfg.p(), weight, nmax);
    auto zp = build_zeta_p(cfg.p(), plan.M_work, plan.N, cfg.smoothing);
    auto spec = family_specialize(weight, nmax, zp, std::min<long>(plan.N, 4 * nmax + 8));
    Json out = result_header(cfg, "eisenstein");
    out["weight"] = weight;
    Json coeffs = Json::array();
    bool all_ok = true;
    for (long n = 0; n <= nmax; ++n) {
        Json row;
        row["n"] = n;
        row["exact"] = rat_to_string(q.coeffs[n]);
        Padic want = embed_rational(q.coeffs[n], cfg.p(), plan.M_work);
        long agree = (want.is_zero() && spec[n].is_zero()) ? cfg.precision
                                                           : Padic::agree_digits(spec[n], want);
        bool ok = agree >= cfg.precision - 3;
        all_ok = all_ok && ok;
        row["agree_digits"] = agree;
        coeffs.push_back(row);
    }
    out["coeffs"] = std::move(coeffs);
    out["pass"] = all_ok;
    std::string table = "weight " + std::to_string(weight) + ": " + (all_ok ? "pass" : "FAIL") + "\n";
    emit(cfg, out, table);
    return all_ok ? 0 : 1;
}

int cmd_lp(const JobConfig& cfg, const std::string& chardesc, const std::string& klist,
           const std::string& slist) {
    auto theta = parse_character(chardesc, cfg.p());
    DirichletCharacter chi = DirichletCharacter::trivial();
    DirichletCharacter eta = DirichletCharacter::trivial();
    factor_character(theta.primitive_part(), cfg.p(), chi, eta);

    long kmax = 8;
    std::vector<long> ks;
    if (!klist.empty()) {
        std::stringstream ss(klist);
        std::string item;
        while (std::getline(ss, item, ',')) ks.push_back(std::stol(item));
        for (long k : ks) kmax = std::max(kmax, k);
    }
    std::vector<Rat> ss_values;
    if (!slist.empty()) {
        std::stringstream ss(slist);
        std::string item;
        while (std::getline(ss, item, ',')) ss_values.push_back(Rat(Int(item)));
    }

    KLPlan plan = cfg.plan(kmax + cfg.precision);
    PseudoMeasure zeta = eta.is_trivial() ? build_zeta_p(cfg.p(), plan.M_work, plan.N, cfg.smoothing)
                                          : build_zeta_eta(eta, cfg.p(), plan.M_work, plan.N);
    Json out = result_header(cfg, "lp");
    out["character"] = chardesc;
    out["conductor"] = theta.conductor();
    Json rows = Json::array();
    std::string table;
    bool all_ok = true;
    for (long k : ks) {
        // integer evaluation: int chi(x) x^k against the pseudo-measure
        Json row;
        row["k"] = k;
        try {
            Padic val = zeta.eval(chi, k);
            row["value"] = padic_to_json(val.capped(cfg.precision));
            // oracle check at interpolation points
            auto twisted = theta.primitive_part();
            bool parity_ok = twisted.parity() == ((k % 2 == 0) ? 1 : -1);
            if (parity_ok && theta.order() <= 2 && k >= 1) {
                Rat L = dirichlet_L_neg_rat(twisted, static_cast<unsigned long>(k));
                row["oracle_L"] = rat_to_string(L);
            }
        } catch (const PoleAtTrivialCharacter&) {
            row["pole"] = true;
        }
        rows.push_back(row);
        table += "k=" + std::to_string(k) + "\n";
    }
    for (const Rat& s : ss_values) {
        Json row;
        row["s"] = rat_to_string(s);
        Padic sv = embed_rational(s, cfg.p(), plan.M_work);
        try {
            Padic val = Lp_theta(chi, zeta, sv);
            row["value"] = padic_to_json(val.capped(cfg.precision));
        } catch (const PoleAtTrivialCharacter&) {
            row["pole"] = true;
        }
        rows.push_back(row);
        table += "s=" + rat_to_string(s) + "\n";
    }
    out["rows"] = std::move(rows);
    out["pass"] = all_ok;
    emit(cfg, out, table);
    return all_ok ? 0 : 1;
}

int cmd_growth(const JobConfig& cfg, const std::string& desc_json, int n_lo, int n_hi) {
    Json dj = Json::parse(desc_json);
    LambdaModuleDesc desc;
    desc.p = cfg.p();
    if (dj.contains("m"))
        for (const auto& e : dj["m"]) desc.p_exponents.push_back(e.get<int>());
    if (dj.contains("g"))
        for (const auto& poly : dj["g"]) {
            std::vector<Int> g;
            for (const auto& c : poly)
                g.push_back(c.is_string() ? Int(c.get<std::string>()) : Int(c.get<long>()));
            desc.polys.push_back(std::move(g));
        }
    auto fit = growth_law(desc, n_lo, n_hi);
    Json out = result_header(cfg, "growth");
    out["mu"] = fit.mu;
    out["lambda"] = fit.lambda;
    out["nu"] = fit.nu.convert_to<std::string>();
    out["n0"] = fit.n0;
    Json rows = Json::array();
    std::string table = "  n   e_n   predicted   match\n";
    bool all_ok = true;
    for (int i = 0; i <= n_hi - n_lo; ++i) {
        int n = n_lo + i;
        Int predicted = Int(fit.mu) * pow_int(cfg.p(), static_cast<unsigned long>(n)) +
                        Int(fit.lambda) * n + fit.nu;
        bool match = predicted == fit.e[i];
        if (n >= fit.n0) all_ok = all_ok && match;
        Json row;
        row["n"] = n;
        row["e_n"] = fit.e[i].convert_to<std::string>();
        row["predicted"] = predicted.convert_to<std::string>();
        row["match"] = match;
        rows.push_back(row);
        table += "  " + std::to_string(n) + "  " + fit.e[i].convert_to<std::string>() + "  " +
                 predicted.convert_to<std::string>() + "  " + (match ? "yes" : "no") + "\n";
    }
    out["rows"] = std::move(rows);
    out["pass"] = all_ok;
    emit(cfg, out, table);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact p-adic zeta machinery: measures, towers, Iwasawa invariants"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto* zm = app.add_subcommand("zeta-moments", "interpolated zeta values against the oracle");
    long kmax = 8;
    add_common(zm, cfg);
    zm->add_option("--kmax", kmax, "largest moment");

    auto* ku = app.add_subcommand("kummer", "Kummer congruences between interpolated values");
    std::string pairs;
    long count = 20;
    add_common(ku, cfg);
    ku->add_option("--pairs", pairs, "explicit triples k,l,m;k,l,m;...");
    ku->add_option("--count", count, "number of sampled triples");

    auto* co = app.add_subcommand("coleman", "Coleman series, towers and the Col map");
    long col_a = 0;
    int depth = 3;
    std::string tower_file;
    long col_kmax = 8;
    add_common(co, cfg);
    co->add_option("--tower-smoothing", col_a, "cyclotomic tower parameter a (0 = default)");
    co->add_option("--depth", depth, "tower depth");
    co->add_option("--tower-file", tower_file, "reconstruct from a tower json file");
    co->add_option("--kmax", col_kmax, "Col moment range");

    auto* we = app.add_subcommand("weierstrass", "Weierstrass preparation of a series file");
    std::string series_file;
    add_common(we, cfg);
    we->add_option("--series-file", series_file, "json series")->required();

    auto* ei = app.add_subcommand("eisenstein", "stabilised Eisenstein q-expansions");
    long weight = 4;
    long nmax = 20;
    add_common(ei, cfg);
    ei->add_option("--weight", weight, "even weight >= 4");
    ei->add_option("--nmax", nmax, "number of q-coefficients");

    auto* lp = app.add_subcommand("lp", "L_p values for a Dirichlet character");
    std::string chardesc = "trivial";
    std::string klist;
    std::string slist;
    add_common(lp, cfg);
    lp->add_option("--character", chardesc, "trivial | omega^i | quadratic:D | products with *");
    lp->add_option("--k-list", klist, "integer evaluation points k1,k2,...");
    lp->add_option("--s-list", slist, "p-adic (integral) s values s1,s2,...");

    auto* gr = app.add_subcommand("growth", "Lambda-module quotient growth");
    std::string desc_json = R"({"m":[],"g":[["-5","1"]]})";
    std::string n_range = "0:5";
    add_common(gr, cfg);
    gr->add_option("--desc", desc_json, "module description json {m:[...], g:[[coeffs]]}");
    gr->add_option("--n-range", n_range, "lo:hi");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.validate();
        if (zm->parsed()) return cmd_zeta_moments(cfg, kmax);
        if (ku->parsed()) return cmd_kummer(cfg, pairs, count);
        if (co->parsed()) return cmd_coleman(cfg, col_a, depth, tower_file, col_kmax);
        if (we->parsed()) return cmd_weierstrass(cfg, series_file);
        if (ei->parsed()) return cmd_eisenstein(cfg, weight, nmax);
        if (lp->parsed()) return cmd_lp(cfg, chardesc, klist, slist);
        if (gr->parsed()) {
            int lo = 0, hi = 5;
            sscanf(n_range.c_str(), "%d:%d", &lo, &hi);
            return cmd_growth(cfg, desc_json, lo, hi);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ZetapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
