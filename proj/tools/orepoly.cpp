// Command line front end for the skew polynomial library.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "orepoly/bench.hpp"
#include "orepoly/count.hpp"
#include "orepoly/factor.hpp"
#include "orepoly/textio.hpp"

using namespace orepoly;
using nlohmann::json;

namespace {

struct Options {
    std::string field;
    std::vector<std::string> operands;
    bool as_json = false;
    uint64_t seed = 0;
    std::string mul_algo = "auto";
    std::string tuning_path;
    int first_factor_budget = 64;
    int step_budget = 64;
    int divisor_budget = 128;
    // bench
    std::string degrees = "64,128,256,512,1024";
    std::string algos = "classical,commutative,karatsuba,matrix";
    int trials = 5;
};

void add_common(CLI::App* cmd, Options& opt, int arity) {
    cmd->add_option("--field", opt.field, "field spec, e.g. GF(2^2;frob=1)")->required();
    cmd->add_flag("--json", opt.as_json, "emit JSON output");
    cmd->add_option("--seed", opt.seed, "seed for randomized subroutines");
    cmd->add_option("--mul-algo", opt.mul_algo,
                    "multiplication override: auto|classical|commutative|karatsuba|matrix");
    cmd->add_option("--tuning", opt.tuning_path, "dispatcher tuning config file");
    cmd->add_option("--first-factor-budget", opt.first_factor_budget, "retries per type unit");
    cmd->add_option("--step-budget", opt.step_budget, "retries per factor step");
    cmd->add_option("--divisor-budget", opt.divisor_budget, "retries per divisor draw");
    if (arity > 0)
        cmd->add_option("poly", opt.operands, "polynomial operand(s)")->expected(arity);
}

SkewPoly mul_override(const std::string& algo, const SkewPoly& a, const SkewPoly& b) {
    if (algo == "classical") return mul_classical(a, b);
    if (algo == "commutative") return mul_commutative(a, b);
    if (algo == "karatsuba") return mul_karatsuba(a, b);
    if (algo == "matrix") return mul_matrix(a, b);
    return mul(a, b);
}

json factorization_json(const SkewContext& ctx, const FactorizationResult& f) {
    json out;
    out["schema"] = "v1";
    out["unit"] = format_element(ctx, f.unit);
    out["x_power"] = f.x_power;
    out["factors"] = json::array();
    for (const auto& p : f.factors) out["factors"].push_back(format_skew_poly(p));
    return out;
}

std::string factorization_text(const SkewContext& ctx, const FactorizationResult& f) {
    std::string s;
    if (f.unit != 1) s += format_element(ctx, f.unit) + " * ";
    if (f.factors.empty() && f.x_power == 0) return s + "1";
    for (size_t i = 0; i < f.factors.size(); ++i) {
        if (i) s += " * ";
        s += "(" + format_skew_poly(f.factors[i]) + ")";
    }
    if (f.x_power > 0) {
        if (!f.factors.empty()) s += " * ";
        s += f.x_power == 1 ? "X" : "X^" + std::to_string(f.x_power);
    }
    return s;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

std::vector<std::string> parse_str_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int run(const std::string& verb, Options& opt) {
    if (!opt.tuning_path.empty()) {
        std::ifstream in(opt.tuning_path);
        if (!in) throw error("cannot open tuning file " + opt.tuning_path);
        load_tuning(in);
    }
    factor_config().first_factor_budget_per_e = opt.first_factor_budget;
    factor_config().factor_step_budget = opt.step_budget;
    factor_config().divisor_budget = opt.divisor_budget;

    auto ctx = make_context(parse_field_spec(opt.field));
    std::mt19937_64 rng(opt.seed);
    auto poly = [&](size_t i) { return parse_skew_poly(*ctx, opt.operands.at(i)); };
    json j;
    j["schema"] = "v1";
    std::ostringstream text;

    if (verb == "mul") {
        SkewPoly c = mul_override(opt.mul_algo, poly(0), poly(1));
        j["result"] = format_skew_poly(c);
        text << format_skew_poly(c);
    } else if (verb == "divmod-right" || verb == "divmod-left") {
        auto [q, r] = verb == "divmod-right" ? divmod_right(poly(0), poly(1))
                                             : divmod_left(poly(0), poly(1));
        j["quotient"] = format_skew_poly(q);
        j["remainder"] = format_skew_poly(r);
        text << "Q = " << format_skew_poly(q) << "\nR = " << format_skew_poly(r);
    } else if (verb == "rgcd" || verb == "llcm" || verb == "lgcd" || verb == "rlcm") {
        SkewPoly g = verb == "rgcd"   ? rgcd(poly(0), poly(1))
                     : verb == "llcm" ? llcm(poly(0), poly(1))
                     : verb == "lgcd" ? lgcd(poly(0), poly(1))
                                      : rlcm(poly(0), poly(1));
        j["result"] = format_skew_poly(g);
        text << format_skew_poly(g);
    } else if (verb == "norm") {
        auto [unit, nrm] = reduced_norm(poly(0));
        j["unit"] = format_subfield_element(*ctx, unit);
        j["norm"] = format_centre_poly(nrm);
        if (unit != 1) text << "unit = " << format_subfield_element(*ctx, unit) << "\n";
        text << format_centre_poly(nrm, true);
    } else if (verb == "irreducible") {
        bool irr = is_irreducible(poly(0));
        j["irreducible"] = irr;
        text << (irr ? "true" : "false");
    } else if (verb == "similar") {
        bool sim = are_similar(poly(0), poly(1));
        j["similar"] = sim;
        text << (sim ? "true" : "false");
    } else if (verb == "type") {
        TypeProfile tp = type_profile(poly(0));
        j["type"] = json::array();
        for (auto& e : tp.entries) {
            json entry;
            entry["n"] = format_centre_poly(e.n);
            entry["e"] = e.e_seq;
            entry["dual"] = e.dual_seq;
            j["type"].push_back(entry);
            text << "N = " << format_centre_poly(e.n) << "; e = (";
            for (size_t i = 0; i < e.e_seq.size(); ++i) text << (i ? "," : "") << e.e_seq[i];
            text << "); dual = (";
            for (size_t i = 0; i < e.dual_seq.size(); ++i) text << (i ? "," : "") << e.dual_seq[i];
            text << ")\n";
        }
    } else if (verb == "factor" || verb == "sample") {
        FactorizationResult f = verb == "factor" ? skew_factorization(poly(0), rng)
                                                 : random_factorization(poly(0), rng);
        j = factorization_json(*ctx, f);
        text << factorization_text(*ctx, f);
    } else if (verb == "count") {
        j["count"] = count_factorizations(poly(0)).str();
        text << count_factorizations(poly(0)).str();
    } else if (verb == "bench") {
        auto rows = run_mul_bench(*ctx, parse_int_list(opt.degrees), parse_str_list(opt.algos),
                                  opt.trials, opt.seed);
        std::cout << bench_csv(rows);
        return 0;
    }

    if (opt.as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orepoly: arithmetic, norms, factorization and factorization counting\n"
                 "in skew polynomial rings k[X,sigma] over finite fields"};
    app.require_subcommand(1);

    struct Verb {
        const char* name;
        const char* help;
        int arity;
    };
    const Verb verbs[] = {
        {"mul", "multiply two skew polynomials", 2},
        {"divmod-right", "right division A = Q*B + R", 2},
        {"divmod-left", "left division A = B*Q + R", 2},
        {"rgcd", "right greatest common divisor", 2},
        {"llcm", "left lowest common multiple", 2},
        {"lgcd", "left greatest common divisor", 2},
        {"rlcm", "right lowest common multiple", 2},
        {"norm", "reduced norm into the centre", 1},
        {"irreducible", "irreducibility test", 1},
        {"similar", "similarity test", 2},
        {"type", "type profile per irreducible centre factor", 1},
        {"factor", "factor into monic irreducibles", 1},
        {"count", "number of factorizations", 1},
        {"sample", "uniform random factorization", 1},
        {"bench", "multiplication benchmark matrix (CSV)", 0},
    };
    std::map<std::string, Options> opts;
    for (const auto& v : verbs) {
        auto* cmd = app.add_subcommand(v.name, v.help);
        add_common(cmd, opts[v.name], v.arity);
        if (std::string(v.name) == "bench") {
            cmd->add_option("--degrees", opts[v.name].degrees, "comma-separated degrees");
            cmd->add_option("--algos", opts[v.name].algos, "comma-separated algorithms");
            cmd->add_option("--trials", opts[v.name].trials, "trials per cell");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        for (const auto& v : verbs)
            if (app.got_subcommand(v.name)) return run(v.name, opts[v.name]);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
