// rstir: numbers, pmfs, samplers and verification suites from the command line.
// Exit codes: 0 ok, 1 bad input, 2 a verification check failed.

#include "CLI11.hpp"
#include "rstir/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace rstir;

namespace {

struct Validation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Opts {
    // global
    std::uint64_t seed = VerifyConfig{}.seed;
    std::string format;  // json | csv; empty picks the subcommand default
    bool exact = false, flt = false;
    std::string out;
    unsigned threads = 0;
    long max_n = 5000;

    // shared parameter flags, kept as strings so "p/q" literals parse exactly
    std::string family;
    long n = -1, k = -1, N = -1, j = -1, l = -1;
    std::string r, s, theta, tau, alpha, beta, a, b, p, z, lambda;
    std::string thetas, probs;
    bool table = false;

    long count = 1;
    std::string method;

    std::string suite = "exact", filter;
    double scale = 1.0;

    std::string op;
    long size = 0;
};

Rational rat(const std::string& text, const char* flag) {
    if (text.empty()) throw Validation(std::string("missing --") + flag);
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw Validation(std::string("--") + flag + ": expected an integer or p/q literal, got '" + text + "'");
    }
}

Rational rat_or(const std::string& text, const char* flag, const Rational& dflt) {
    return text.empty() ? dflt : rat(text, flag);
}

std::vector<Rational> rat_list(const std::string& text, const char* flag) {
    if (text.empty()) throw Validation(std::string("missing --") + flag);
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(rat(item, flag));
    return v;
}

double dbl(const std::string& text, const char* flag) { return rat(text, flag).to_double(); }

long need(long v, const char* flag) {
    if (v < 0) throw Validation(std::string("missing or negative --") + flag);
    return v;
}

long need_n(const Opts& o) {
    const long n = need(o.n, "n");
    if (n > o.max_n) throw Validation("--n " + std::to_string(n) + " exceeds --max-n " + std::to_string(o.max_n));
    return n;
}

long as_long(const Rational& x, const char* flag) {
    if (!x.is_integer() || x.sign() < 0) throw Validation(std::string("--") + flag + " must be a nonnegative integer");
    return x.to_int64();
}

Json resolved_config(const Opts& o, const std::string& cmd) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["config_version"] = kConfigVersion;
    j["command"] = cmd;
    j["seed"] = o.seed;
    j["format"] = o.format;
    j["mode"] = o.flt ? "float" : "exact";
    j["threads"] = o.threads;
    j["max_n"] = o.max_n;
    Json ps = Json::object();
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) ps[key] = v;
    };
    auto putl = [&](const char* key, long v) {
        if (v >= 0) ps[key] = v;
    };
    put("family", o.family);
    putl("n", o.n);
    putl("k", o.k);
    putl("N", o.N);
    putl("j", o.j);
    putl("l", o.l);
    put("r", o.r);
    put("s", o.s);
    put("theta", o.theta);
    put("tau", o.tau);
    put("alpha", o.alpha);
    put("beta", o.beta);
    put("a", o.a);
    put("b", o.b);
    put("p", o.p);
    put("z", o.z);
    put("lambda", o.lambda);
    put("thetas", o.thetas);
    put("probs", o.probs);
    put("method", o.method);
    j["params"] = ps;
    if (cmd == "sample") j["count"] = o.count;
    if (cmd == "verify") {
        j["suite"] = o.suite;
        j["filter"] = o.filter;
        j["scale"] = o.scale;
    }
    if (cmd == "bench") {
        j["op"] = o.op;
        j["size"] = o.size;
    }
    return j;
}

// ------------------------------------------------------------------ numbers

Rational number_value(const Opts& o, long n, long k) {
    const std::string& f = o.family;
    if (f == "r-stirling1") return r_stirling1(n, k, rat(o.r, "r"));
    if (f == "r-stirling2") return r_stirling2(n, k, rat(o.r, "r"));
    if (f == "stirling1") return stirling1(n, k);
    if (f == "stirling2") return stirling2(n, k);
    if (f == "r-lah") return r_lah(n, k, rat(o.r, "r"));
    if (f == "lah") return r_lah(n, k, Rational(0));
    if (f == "eulerian") return eulerian(n, k);
    if (f == "binomial") return binomial(n, k);
    throw Validation("unknown number family '" + f + "'");
}

std::string num_text(const Rational& x, bool flt) {
    if (!flt) return x.str();
    std::ostringstream os;
    os.precision(17);
    os << x.to_double();
    return os.str();
}

int cmd_numbers(const Opts& o, std::ostream& os) {
    const std::string fmt = o.format;
    // families without an (n,k) triangle
    std::optional<Rational> single;
    const std::string& f = o.family;
    if (f == "gen-eulerian") {
        single = gen_eulerian(as_long(rat(o.r, "r"), "r"), as_long(rat(o.s, "s"), "s"), rat_or(o.alpha, "alpha", Rational(1)),
                              rat_or(o.beta, "beta", Rational(1)));
    } else if (f == "r-touchard") {
        single = r_touchard(need_n(o), rat(o.r, "r"), rat(o.z, "z"));
    } else if (f == "r-bell") {
        single = r_bell(need_n(o), rat(o.r, "r"));
    } else if (f == "harmonic-rs") {
        single = harmonic_rs(need_n(o), rat(o.r, "r"), rat(o.s, "s"));
    } else if (f == "r-lah-product") {
        single = r_stirling_product_sum(need_n(o), need(o.k, "k"), rat(o.r, "r"), rat(o.s, "s"));
    }
    if (single) {
        if (o.table) throw Validation("--table needs an (n,k) family");
        if (fmt == "json") {
            Json j{{"schema", kSchemaVersion}, {"family", f}, {"value", num_text(*single, o.flt)}};
            os << dump(j) << '\n';
        } else if (fmt == "csv") {
            os << "value\n" << num_text(*single, o.flt) << '\n';
        } else {
            os << num_text(*single, o.flt) << '\n';
        }
        return 0;
    }

    const long n = need_n(o);
    if (!o.table) {
        const long k = need(o.k, "k");
        const auto v = number_value(o, n, k);
        if (fmt == "json") {
            Json j{{"schema", kSchemaVersion}, {"family", f}, {"n", n}, {"k", k}};
            if (!o.r.empty()) j["r"] = rat(o.r, "r").str();
            j["value"] = num_text(v, o.flt);
            os << dump(j) << '\n';
        } else if (fmt == "csv") {
            os << "n,k,value\n" << n << ',' << k << ',' << num_text(v, o.flt) << '\n';
        } else {
            os << num_text(v, o.flt) << '\n';
        }
        return 0;
    }
    if (fmt == "json") {
        Json rows = Json::array();
        for (long m = 0; m <= n; ++m) {
            Json row = Json::array();
            for (long k = 0; k <= m; ++k) row.push_back(num_text(number_value(o, m, k), o.flt));
            rows.push_back(row);
        }
        Json j{{"schema", kSchemaVersion}, {"family", f}};
        if (!o.r.empty()) j["r"] = rat(o.r, "r").str();
        j["table"] = rows;
        os << dump(j) << '\n';
    } else if (fmt == "csv") {
        os << "n,k,value\n";
        for (long m = 0; m <= n; ++m)
            for (long k = 0; k <= m; ++k) os << m << ',' << k << ',' << num_text(number_value(o, m, k), o.flt) << '\n';
    } else {
        for (long m = 0; m <= n; ++m) {
            for (long k = 0; k <= m; ++k) os << (k ? " " : "") << num_text(number_value(o, m, k), o.flt);
            os << '\n';
        }
    }
    return 0;
}

// ---------------------------------------------------------------------- pmf

std::string point_text(long x) { return std::to_string(x); }
std::string point_text(const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
    return s;
}
std::string prob_text(const Rational& p) { return p.str(); }
std::string prob_text(double p) {
    std::ostringstream os;
    os.precision(17);
    os << p;
    return os.str();
}

template <class Point, class Prob>
void emit_pmf(const Pmf<Point, Prob>& p, const std::string& fmt, std::ostream& os) {
    if (fmt == "csv") {
        os << "x,p\n";
        for (std::size_t i = 0; i < p.size(); ++i) os << point_text(p.support[i]) << ',' << prob_text(p.probs[i]) << '\n';
    } else {
        os << dump(to_json(p)) << '\n';
    }
}

int cmd_pmf(const Opts& o, std::ostream& os) {
    const std::string& f = o.family;
    const std::string fmt = o.format.empty() ? "json" : o.format;
    auto R = [&] { return rat_or(o.r, "r", Rational(0)); };
    auto S = [&] { return rat_or(o.s, "s", Rational(0)); };

    if (o.flt) {
        const double r = R().to_double();
        if (f == "r-stir1") return emit_pmf(r_stir1_pmf_float(need_n(o), dbl(o.tau, "tau"), r), fmt, os), 0;
        if (f == "stir1") return emit_pmf(stir1_pmf_float(need_n(o), dbl(o.theta, "theta")), fmt, os), 0;
        if (f == "r-stir2") return emit_pmf(r_stir2_pmf_float(need_n(o), dbl(o.theta, "theta"), r), fmt, os), 0;
        if (f == "sibuya") return emit_pmf(r_stir_sibuya_pmf_float(need_n(o), need(o.N, "N"), r), fmt, os), 0;
        if (f == "lah") return emit_pmf(lah_pmf_float(need_n(o), need(o.k, "k"), r, S().to_double()), fmt, os), 0;
        if (f == "hoppe-leaves") return emit_pmf(hoppe_leaves_pmf_float(need_n(o), dbl(o.theta, "theta")), fmt, os), 0;
        if (f == "composition-b0") return emit_pmf(composition_marginal_b0_float(need_n(o), need(o.k, "k"), r), fmt, os), 0;
        if (f == "composition-bj") return emit_pmf(composition_marginal_bj_float(need_n(o), need(o.k, "k"), r), fmt, os), 0;
        if (f == "beta-binomial")
            return emit_pmf(beta_binomial_pmf_float(need_n(o), dbl(o.a, "a"), dbl(o.b, "b")), fmt, os), 0;
        if (f == "neg-binomial") return emit_pmf(neg_binomial_pmf(r, dbl(o.alpha, "alpha")), fmt, os), 0;
        if (f == "geometric") return emit_pmf(geometric_pmf(dbl(o.alpha, "alpha")), fmt, os), 0;
        if (f == "poisson") return emit_pmf(poisson_truncated_pmf(dbl(o.lambda, "lambda")), fmt, os), 0;
        throw Validation("no float mirror for pmf family '" + f + "'");
    }

    if (f == "r-stir1") return emit_pmf(r_stir1_pmf(need_n(o), rat(o.tau, "tau"), R()), fmt, os), 0;
    if (f == "stir1") return emit_pmf(stir1_pmf(need_n(o), rat(o.theta, "theta")), fmt, os), 0;
    if (f == "r-stir2") return emit_pmf(r_stir2_pmf(need_n(o), rat(o.theta, "theta"), R()), fmt, os), 0;
    if (f == "stir2") return emit_pmf(stir2_pmf(need_n(o), rat(o.theta, "theta")), fmt, os), 0;
    if (f == "sibuya") return emit_pmf(r_stir_sibuya_pmf(need_n(o), need(o.N, "N"), R()), fmt, os), 0;
    if (f == "lah") return emit_pmf(lah_pmf(need_n(o), need(o.k, "k"), R(), S()), fmt, os), 0;
    if (f == "composition-b0") return emit_pmf(composition_marginal_b0(need_n(o), need(o.k, "k"), R()), fmt, os), 0;
    if (f == "composition-bj") return emit_pmf(composition_marginal_bj(need_n(o), need(o.k, "k"), R()), fmt, os), 0;
    if (f == "composition-joint") return emit_pmf(composition_joint_pmf(need_n(o), need(o.k, "k"), R()), fmt, os), 0;
    if (f == "composition-bivariate") return emit_pmf(composition_bivariate(need_n(o), need(o.k, "k"), R()), fmt, os), 0;
    if (f == "hoppe-leaves") return emit_pmf(hoppe_leaves_pmf(need_n(o), rat(o.theta, "theta")), fmt, os), 0;
    if (f == "multihoppe-leaves")
        return emit_pmf(multihoppe_leaves_pmf(need_n(o), rat_list(o.thetas, "thetas"), need(o.j, "j")), fmt, os), 0;
    if (f == "subtree-leaves")
        return emit_pmf(subtree_leaves_pmf(need_n(o), need(o.l, "l"), rat(o.theta, "theta")), fmt, os), 0;
    if (f == "mult-stir1")
        return emit_pmf(mult_stir1_pmf(need_n(o), rat(o.theta, "theta"), rat_list(o.probs, "probs")), fmt, os), 0;
    if (f == "mdir") return emit_pmf(mdir_pmf(need_n(o), rat_list(o.thetas, "thetas")), fmt, os), 0;
    if (f == "beta-binomial") return emit_pmf(beta_binomial_pmf(need_n(o), rat(o.a, "a"), rat(o.b, "b")), fmt, os), 0;
    if (f == "binomial") return emit_pmf(binomial_pmf(need_n(o), rat(o.p, "p")), fmt, os), 0;
    if (f == "r-ewens-types") return emit_pmf(r_ewens_type_pmf(need_n(o), rat(o.tau, "tau"), R()), fmt, os), 0;
    if (f == "urn-types") return emit_pmf(urn_partition_type_pmf(need_n(o), need(o.N, "N"), R()), fmt, os), 0;
    if (f == "gibbs-types") return emit_pmf(gibbs_partition_type_pmf(need_n(o), rat(o.theta, "theta"), R()), fmt, os), 0;
    if (f == "neg-binomial" || f == "geometric" || f == "poisson")
        throw Validation("pmf family '" + f + "' has infinite support; use --float");
    throw Validation("unknown pmf family '" + f + "'");
}

// ------------------------------------------------------------------- sample

template <class T, class F>
std::vector<T> draws(const Opts& o, F f) {
    if (o.count < 0) throw Validation("--count must be nonnegative");
    return run_replicas<T>(o.count, o.seed, 0, o.threads, f);
}

template <class T>
void emit_json_lines(const std::vector<T>& xs, std::ostream& os) {
    for (const auto& x : xs) os << dump(to_json(x)) << '\n';
}

int cmd_sample(const Opts& o, std::ostream& os) {
    const std::string& f = o.family;
    const std::string fmt = o.format.empty() ? "json" : o.format;
    if (o.flt) throw Validation("sample has no float mode");
    auto R = [&] { return rat_or(o.r, "r", Rational(0)); };
    auto S = [&] { return rat_or(o.s, "s", Rational(0)); };
    auto structured = [&] {
        if (fmt == "csv") throw Validation("csv output is only available for scalar and composition samplers");
    };

    if (f == "crp" || f == "feller") {
        structured();
        const long n = need_n(o);
        const auto th = rat_list(o.thetas, "thetas");
        const bool feller = f == "feller";
        emit_json_lines(draws<ColoredPermutation>(o, [&](Rng& g) { return feller ? feller_colored(n, th, g) : crp_colored(n, th, g); }), os);
        return 0;
    }
    if (f == "r-ewens") {
        structured();
        const long n = need_n(o);
        const auto tau = rat(o.tau, "tau"), r = R();
        emit_json_lines(draws<IncompletePermutation>(o, [&](Rng& g) { return r_ewens(n, tau, r, g); }), os);
        return 0;
    }
    if (f == "hoppe-forest") {
        structured();
        const long n = need_n(o);
        const auto th = rat_list(o.thetas, "thetas");
        emit_json_lines(draws<HoppeForest>(o, [&](Rng& g) { return hoppe_forest(n, th, g); }), os);
        return 0;
    }
    if (f == "r-hoppe-tree") {
        structured();
        const long n = need_n(o);
        const auto tau = rat(o.tau, "tau"), r = R();
        for (const auto& t : draws<RHoppeTree>(o, [&](Rng& g) { return r_hoppe_tree(n, tau, r, g); }))
            os << dump(Json{{"forest", to_json(t.forest)}, {"B", t.B}, {"root_degree", t.root_degree}}) << '\n';
        return 0;
    }
    if (f == "urn-partition") {
        structured();
        const long n = need_n(o), N = need(o.N, "N");
        const auto r = R();
        emit_json_lines(draws<IncompletePartition>(o, [&](Rng& g) { return urn_incomplete_partition(n, N, r, g); }), os);
        return 0;
    }
    if (f == "gibbs-partition") {
        structured();
        const long n = need_n(o);
        const auto th = rat(o.theta, "theta"), r = R();
        for (const auto& d : draws<GibbsDraw>(o, [&](Rng& g) { return gibbs_r_partition(n, th, r, g); }))
            os << dump(Json{{"partition", to_json(d.partition)}, {"urns", d.urns}, {"empty_urns", d.empty_urns}}) << '\n';
        return 0;
    }
    if (f == "r-composition") {
        const long n = need_n(o), k = need(o.k, "k");
        const auto r = R();
        const std::string m = o.method.empty() ? "dirichlet" : o.method;
        if (m != "dirichlet" && m != "polya") throw Validation("--method must be dirichlet or polya");
        const auto xs = draws<IncompleteComposition>(
            o, [&](Rng& g) { return m == "polya" ? r_composition_polya(n, k, r, g) : r_composition_dirichlet(n, k, r, g); });
        if (fmt == "csv") {
            for (long i = 0; i <= k; ++i) os << (i ? ",b" : "b") << i;
            os << '\n';
            for (const auto& c : xs) {
                for (std::size_t i = 0; i < c.b.size(); ++i) os << (i ? "," : "") << c.b[i];
                os << '\n';
            }
        } else {
            emit_json_lines(xs, os);
        }
        return 0;
    }
    if (f == "nested-composition") {
        structured();
        const long n = need_n(o);
        const auto r = R();
        for (const auto& chain : draws<std::vector<IncompleteComposition>>(o, [&](Rng& g) { return nested_composition_stream(n, r, g); })) {
            Json arr = Json::array();
            for (const auto& c : chain) arr.push_back(c.b);
            os << dump(Json{{"chain", arr}}) << '\n';
        }
        return 0;
    }
    if (f == "lah") {
        const long n = need_n(o), k = need(o.k, "k");
        const auto r = R(), s = S();
        const std::string m = o.method.empty() ? "direct" : o.method;
        std::function<long(Rng&)> fn;
        if (m == "direct") fn = [&](Rng& g) { return lah_sample_direct(n, k, r, s, g); };
        else if (m == "composition") fn = [&](Rng& g) { return lah_sample_composition(n, k, r, s, g); };
        else if (m == "subtree") fn = [&](Rng& g) { return lah_sample_subtree(n, k, r, s, g); };
        else throw Validation("--method must be direct, composition or subtree");
        const auto xs = draws<long>(o, fn);
        if (fmt == "csv") os << "value\n";
        for (long x : xs) os << (fmt == "csv" ? std::to_string(x) : dump(Json{{"value", x}})) << '\n';
        return 0;
    }
    if (f == "broder-perm" || f == "broder-part") {
        structured();
        const long n = need_n(o);
        const long r = as_long(R(), "r");
        if (f == "broder-perm")
            emit_json_lines(draws<IncompletePermutation>(o, [&](Rng& g) { return sample_broder_perm(n, r, g); }), os);
        else
            emit_json_lines(draws<IncompletePartition>(o, [&](Rng& g) { return sample_broder_part(n, r, g); }), os);
        return 0;
    }
    throw Validation("unknown sampler '" + f + "'");
}

// ------------------------------------------------------------------- verify

int cmd_verify(const Opts& o, std::ostream& os) {
    VerifyConfig cfg;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    if (!(o.scale > 0)) throw Validation("--scale must be positive");
    cfg.scale = o.scale;
    std::vector<std::string> suites;
    if (o.suite == "all") suites = {"exact", "oracle", "mc", "clt"};
    else if (o.suite == "exact" || o.suite == "oracle" || o.suite == "mc" || o.suite == "clt") suites = {o.suite};
    else throw Validation("--suite must be exact, oracle, mc, clt or all");

    std::vector<CheckResult> all;
    for (const auto& s : suites) {
        auto rs = run_suite(s, cfg, o.filter);
        all.insert(all.end(), rs.begin(), rs.end());
    }
    long failed = 0;
    for (const auto& c : all) failed += c.pass ? 0 : 1;
    if (o.format == "csv") {
        os << csv_summary(all);
    } else {
        Json j;
        j["schema"] = kSchemaVersion;
        j["config_version"] = kConfigVersion;
        j["suite"] = o.suite;
        j["filter"] = o.filter;
        j["seed"] = cfg.seed;
        j["scale"] = cfg.scale;
        j["checks"] = static_cast<long>(all.size());
        j["failed"] = failed;
        Json arr = Json::array();
        for (const auto& c : all) arr.push_back(to_json(c));
        j["results"] = arr;
        os << j.dump(1) << '\n';
    }
    for (const auto& c : all)
        if (!c.pass) std::cerr << "FAIL [" << c.criterion << "] " << c.suite << '/' << c.name << ' ' << c.detail << '\n';
    std::cerr << all.size() - static_cast<std::size_t>(failed) << '/' << all.size() << " checks passed\n";
    return failed ? 2 : 0;
}

// -------------------------------------------------------------------- bench

int cmd_bench(const Opts& o, std::ostream& os) {
    const long n = o.size > 0 ? o.size : 200;
    if (n > o.max_n) throw Validation("--size exceeds --max-n");
    using Clock = std::chrono::steady_clock;
    struct Op {
        std::string name;
        long reps;
        std::function<void()> run;
    };
    std::vector<Op> ops = {
        {"r-stirling1-table", 1, [&] { (void)r_stirling1(n, n / 2, Rational(1, 2)); }},
        {"r-stirling2-table", 1, [&] { (void)r_stirling2(n, n / 2, Rational(1, 2)); }},
        {"lah-pmf", 1, [&] { (void)lah_pmf(n, n / 4, Rational(1), Rational(1)); }},
        {"lah-pmf-float", 1, [&] { (void)lah_pmf_float(n, n / 4, 1.0, 1.0); }},
        {"crp", 1000, [&] {
             Opts q = o;
             q.count = 1000;
             q.threads = 1;
             (void)draws<ColoredPermutation>(q, [&](Rng& g) { return crp_colored(n, {Rational(1)}, g); });
         }},
        {"gibbs-partition", 1000, [&] {
             Opts q = o;
             q.count = 1000;
             q.threads = 1;
             (void)draws<GibbsDraw>(q, [&](Rng& g) { return gibbs_r_partition(n, Rational(1), Rational(1), g); });
         }},
        {"r-composition", 1000, [&] {
             Opts q = o;
             q.count = 1000;
             q.threads = 1;
             (void)draws<IncompleteComposition>(q, [&](Rng& g) { return r_composition_dirichlet(n, n / 2, Rational(1), g); });
         }},
    };
    if (!o.op.empty() && std::none_of(ops.begin(), ops.end(), [&](const Op& x) { return x.name == o.op; }))
        throw Validation("unknown --op " + o.op);
    const bool csv = o.format == "csv";
    if (csv) os << "op,size,reps,seconds\n";
    else os << "op                   size   reps    seconds\n";
    for (const auto& op : ops) {
        if (!o.op.empty() && op.name != o.op) continue;
        const auto t0 = Clock::now();
        op.run();
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::ostringstream line;
        if (csv) {
            line << op.name << ',' << n << ',' << op.reps << ',' << secs;
        } else {
            line.width(20);
            line << std::left << op.name << ' ';
            line.width(6);
            line << n << ' ';
            line.width(6);
            line << op.reps << ' ' << secs;
        }
        os << line.str() << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    Opts o;
    CLI::App app{"r-Stirling numbers, distributions, samplers and checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "RNG seed");
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    auto* ex = app.add_flag("--exact", o.exact, "exact rational arithmetic (default)");
    auto* fl = app.add_flag("--float", o.flt, "floating-point mirrors");
    ex->excludes(fl);
    app.add_option("--out", o.out, "write output to this file");
    app.add_option("--threads", o.threads, "worker threads (0: all cores)");
    app.add_option("--max-n", o.max_n, "size guard on n");

    auto params = [&](CLI::App* sc) {
        sc->add_option("--n", o.n);
        sc->add_option("--k", o.k);
        sc->add_option("--N", o.N, "number of urns");
        sc->add_option("--j", o.j, "color index (1-based)");
        sc->add_option("--l", o.l, "node label");
        sc->add_option("--r", o.r);
        sc->add_option("--s", o.s);
        sc->add_option("--theta", o.theta);
        sc->add_option("--tau", o.tau);
        sc->add_option("--alpha", o.alpha);
        sc->add_option("--beta", o.beta);
        sc->add_option("--a", o.a);
        sc->add_option("--b", o.b);
        sc->add_option("--p", o.p);
        sc->add_option("--z", o.z);
        sc->add_option("--lambda", o.lambda);
        sc->add_option("--thetas", o.thetas, "comma-separated rationals");
        sc->add_option("--probs", o.probs, "comma-separated rationals");
    };

    auto* numbers = app.add_subcommand("numbers", "exact combinatorial numbers");
    numbers->add_option("family", o.family,
                        "r-stirling1 r-stirling2 stirling1 stirling2 r-lah lah eulerian binomial gen-eulerian r-touchard "
                        "r-bell harmonic-rs r-lah-product")
        ->required();
    numbers->add_flag("--table", o.table, "print rows 0..n of the triangle");
    params(numbers);

    auto* pmf = app.add_subcommand("pmf", "exact or float probability mass functions");
    pmf->add_option("family", o.family)->required();
    params(pmf);

    auto* sample = app.add_subcommand("sample", "draw random structures as JSON lines");
    sample->add_option("sampler", o.family)->required();
    sample->add_option("--count", o.count);
    sample->add_option("--method", o.method);
    params(sample);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, "exact, oracle, mc, clt or all");
    verify->add_option("--filter", o.filter, "substring of check names");
    verify->add_option("--scale", o.scale, "multiply Monte Carlo sample sizes");

    auto* bench = app.add_subcommand("bench", "timing table");
    bench->add_option("--op", o.op);
    bench->add_option("--size", o.size);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    std::ostringstream buf;
    int rc = 0;
    try {
        std::cerr << dump(Json{{"resolved_config", resolved_config(o, cmd)}}) << '\n';
        if (cmd == "numbers") rc = cmd_numbers(o, buf);
        else if (cmd == "pmf") rc = cmd_pmf(o, buf);
        else if (cmd == "sample") rc = cmd_sample(o, buf);
        else if (cmd == "verify") rc = cmd_verify(o, buf);
        else rc = cmd_bench(o, buf);
    } catch (const Validation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    if (o.out.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << '\n';
            return 1;
        }
        f << buf.str();
    }
    return rc;
}
