#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gf2perfect/classify.hpp"
#include "gf2perfect/factorize.hpp"
#include "gf2perfect/lemmas.hpp"
#include "gf2perfect/report.hpp"
#include "gf2perfect/search.hpp"
#include "gf2perfect/sigma.hpp"
#include "gf2perfect/theorem.hpp"

namespace {

using namespace gf2perfect;
using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
    std::string format = "text";
    std::string cache;
    int workers = 0;
    std::uint64_t seed = kDefaultSeed;
    bool allow_over_budget = false;
    bool timing = false;

    bool json() const { return format == "json"; }
    RenderOptions render() const { return {seed, timing}; }
    ScanOptions scan() const { return {workers, allow_over_budget}; }
};

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

std::optional<std::filesystem::path> cache_path(const Globals &g) {
    if (!g.cache.empty()) return std::filesystem::path(g.cache);
    if (const char *dir = std::getenv("GF2PERFECT_CACHE_DIR"); dir && *dir) {
        return std::filesystem::path(dir) / "primes-v1.txt";
    }
    return std::nullopt;
}

PrimeTable open_table(const Globals &g) {
    const auto path = cache_path(g);
    PrimeTable t = path ? PrimeTable(*path) : PrimeTable();
    std::cerr << "gf2perfect " << kVersion << " seed=" << hex64(g.seed) << " cache=" << PrimeTable::kFormatTag
              << " " << (path ? path->string() : "none") << (t.loaded_from_cache() ? " (loaded)" : "") << "\n";
    return t;
}

void log_run(const Globals &g) {
    std::cerr << "gf2perfect " << kVersion << " seed=" << hex64(g.seed) << " cache=" << PrimeTable::kFormatTag
              << " " << (cache_path(g) ? cache_path(g)->string() : "none") << "\n";
}

Json header(const char *command, const Globals &g) {
    Json j;
    j["tool"] = "gf2perfect";
    j["version"] = kVersion;
    j["seed"] = g.seed;
    j["command"] = command;
    return j;
}

Json poly_json(const Poly &p) {
    Json j;
    j["hex"] = to_hex(p);
    j["text"] = format(p);
    j["degree"] = p.is_zero() ? Json(nullptr) : Json(p.deg());
    return j;
}

Json factors_json(const Factorization &f) {
    Json arr = Json::array();
    for (const auto &pp : f.factors()) {
        Json e = poly_json(pp.prime);
        e["exponent"] = pp.exponent;
        arr.push_back(std::move(e));
    }
    return arr;
}

void emit(const Json &j) { std::cout << j.dump(2) << "\n"; }

int cmd_parse(const Globals &g, const std::string &text) {
    const Poly p = parse(text);
    if (g.json()) {
        Json j = header("parse", g);
        j["value"] = poly_json(p);
        emit(j);
    } else {
        std::cout << format(p) << "\n";
    }
    return kExitPass;
}

int cmd_factor(const Globals &g, const std::string &text) {
    const Poly p = parse(text);
    const Factorization f = factor(p, g.seed);
    if (g.json()) {
        Json j = header("factor", g);
        j["value"] = poly_json(p);
        j["factors"] = factors_json(f);
        j["factored"] = f.to_string();
        emit(j);
    } else {
        std::cout << f.to_string() << "\n";
    }
    return kExitPass;
}

int cmd_sigma(const Globals &g, const std::string &text) {
    const Poly p = parse(text);
    const SigmaResult r = sigma_with_factors(p, g.seed);
    if (g.json()) {
        Json j = header("sigma", g);
        j["value"] = poly_json(p);
        j["factors"] = factors_json(r.factored_input);
        j["sigma"] = poly_json(r.value);
        emit(j);
    } else {
        std::cout << format(r.value) << "\n";
    }
    return kExitPass;
}

int cmd_check_perfect(const Globals &g, const std::string &text) {
    const Poly p = parse(text);
    const bool perfect = is_perfect(p);
    if (g.json()) {
        Json j = header("check-perfect", g);
        j["value"] = poly_json(p);
        j["perfect"] = perfect;
        j["classification"] = perfect && !p.is_zero() && !p.is_one() ? Json(classify_perfect(p)) : Json(nullptr);
        emit(j);
    } else {
        std::cout << (perfect ? "true" : "false") << "\n";
    }
    return perfect ? kExitPass : kExitFail;
}

int cmd_classify(const Globals &g, const std::string &text) {
    const Poly p = parse(text);
    if (p.is_zero()) throw std::invalid_argument("classify needs a nonzero polynomial");
    const SquareDecomposition d = square_decompose(p);
    const bool irreducible = p.deg() >= 1 && is_irreducible(p);
    const bool perfect = is_perfect(p);
    if (g.json()) {
        Json j = header("classify", g);
        j["value"] = poly_json(p);
        j["parity"] = to_string(parity(p));
        j["mersenne"] = is_mersenne(p);
        j["complete"] = is_complete(p);
        j["irreducible"] = irreducible;
        j["perfect"] = perfect;
        j["decomposition"] = Json{{"b", poly_json(d.b)}, {"s", poly_json(d.s)}, {"coprime", d.coprime},
                                  {"b_even", d.b_even}};
        j["name"] = perfect && p.deg() >= 1 ? Json(classify_perfect(p)) : Json(nullptr);
        emit(j);
    } else {
        std::cout << "value        " << format(p) << " (" << to_hex(p) << ")\n"
                  << "parity       " << to_string(parity(p)) << "\n"
                  << "mersenne     " << std::boolalpha << is_mersenne(p) << "\n"
                  << "complete     " << is_complete(p) << "\n"
                  << "irreducible  " << irreducible << "\n"
                  << "perfect      " << perfect << "\n"
                  << "B^2 S        B=" << format(d.b) << "  S=" << format(d.s) << "  coprime=" << d.coprime
                  << "  b_even=" << d.b_even << "\n";
        if (perfect && p.deg() >= 1) std::cout << "name         " << classify_perfect(p) << "\n";
    }
    return kExitPass;
}

int cmd_catalogue(const Globals &g) {
    const auto &cat = catalogue();
    if (g.json()) {
        Json j = header("catalogue", g);
        Json ps = Json::array();
        for (const auto &e : cat.perfects) {
            Json x = poly_json(e.value);
            x["name"] = e.name;
            x["factored"] = e.factored;
            ps.push_back(std::move(x));
        }
        Json qs = Json::array();
        for (const auto &q : cat.primes) {
            Json x = poly_json(q.value);
            x["name"] = q.name;
            qs.push_back(std::move(x));
        }
        j["perfects"] = std::move(ps);
        j["primes"] = std::move(qs);
        emit(j);
    } else {
        for (const auto &e : cat.perfects) {
            std::cout << std::left << std::setw(6) << e.name << std::setw(4) << e.degree << std::setw(10)
                      << to_hex(e.value) << e.factored << "\n";
        }
        for (const auto &q : cat.primes) {
            std::cout << std::left << std::setw(6) << q.name << std::setw(4) << q.value.deg() << std::setw(10)
                      << to_hex(q.value) << format(q.value) << "\n";
        }
    }
    return kExitPass;
}

int cmd_primes(const Globals &g, unsigned degree) {
    PrimeTable table = open_table(g);
    const auto &ps = table.primes_of_degree(degree);
    if (g.json()) {
        Json j = header("primes", g);
        j["degree"] = degree;
        j["count"] = ps.size();
        Json arr = Json::array();
        for (const auto &p : ps) arr.push_back(to_hex(p));
        j["primes"] = std::move(arr);
        emit(j);
    } else {
        for (const auto &p : ps) std::cout << to_hex(p) << "  " << format(p) << "\n";
    }
    return kExitPass;
}

int cmd_solve(const Globals &g, const std::string &text, unsigned r, const std::string &mode_name) {
    const Poly b = parse(text);
    const PrimeMode mode = parse_prime_mode(mode_name);
    PrimeTable table = open_table(g);
    std::vector<TheoremSolution> sols;
    try {
        sols = solve_structured(b, r, mode, table);
    } catch (const HypothesisError &e) {
        if (g.json()) {
            Json j = header("solve", g);
            j["b"] = poly_json(b);
            j["rejection"] = to_string(e.reason());
            j["message"] = e.what();
            emit(j);
        }
        std::cerr << "rejected (" << to_string(e.reason()) << "): " << e.what() << "\n";
        return kExitFail;
    }
    if (g.json()) {
        Json j = header("solve", g);
        j["b"] = poly_json(b);
        j["r_max"] = r;
        j["mode"] = to_string(mode);
        Json arr = Json::array();
        for (const auto &s : sols) {
            Json e;
            e["name"] = s.name;
            e["a"] = poly_json(s.a);
            Json ps = Json::array();
            for (const auto &p : s.primes) ps.push_back(poly_json(p));
            e["primes"] = std::move(ps);
            arr.push_back(std::move(e));
        }
        j["solutions"] = std::move(arr);
        emit(j);
    } else {
        if (sols.empty()) std::cout << "no solutions\n";
        for (const auto &s : sols) {
            std::cout << std::left << std::setw(8) << s.name << std::setw(12) << to_hex(s.a) << "P={";
            for (std::size_t i = 0; i < s.primes.size(); ++i) std::cout << (i ? ", " : "") << format(s.primes[i]);
            std::cout << "}\n";
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Arithmetic and perfect-polynomial searches over GF(2)[x]", "gf2perfect"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cache", g.cache, "Prime table cache file (default $GF2PERFECT_CACHE_DIR/primes-v1.txt)");
    app.add_option("--workers", g.workers, "OpenMP workers, 0 = runtime default")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "Seed for the randomized factorization fallback");
    app.add_flag("--allow-over-budget", g.allow_over_budget, "Permit scans above the default budgets");
    app.add_flag("--timing", g.timing, "Include elapsed time in reports");

    std::string poly_arg;
    auto *parse_cmd = app.add_subcommand("parse", "Print the canonical form of a polynomial");
    auto *factor_cmd = app.add_subcommand("factor", "Factor into irreducibles");
    auto *sigma_cmd = app.add_subcommand("sigma", "Sum of divisors");
    auto *check_cmd = app.add_subcommand("check-perfect", "Test sigma(a) = a; exit 1 when not perfect");
    auto *classify_cmd = app.add_subcommand("classify", "Parity, Mersenne, complete and B^2 S decomposition");
    for (auto *c : {parse_cmd, factor_cmd, sigma_cmd, check_cmd, classify_cmd}) {
        c->add_option("poly", poly_arg, "Polynomial, e.g. \"x(x+1)^2\" or 0x36")->required();
    }
    auto *catalogue_cmd = app.add_subcommand("catalogue", "List the known sporadic perfects and their primes");

    unsigned max_deg = 0;
    std::string search_mode = "pruned-even";
    auto *search_cmd = app.add_subcommand("search", "Exhaustive perfect-polynomial search");
    search_cmd->add_option("--max-deg", max_deg, "Maximum degree")->required();
    search_cmd->add_option("--mode", search_mode, "full | pruned-even")->check(CLI::IsMember({"full", "pruned-even"}));

    auto *census_cmd = app.add_subcommand("census", "Share of even B with gcd(B^2, sigma(B^2)) = 1");
    census_cmd->add_option("--max-deg", max_deg, "Maximum degree of B")->required();

    std::string part = "f";
    std::optional<std::uint64_t> bound;
    std::optional<std::uint64_t> exp_bound;
    auto *lemma_cmd = app.add_subcommand("lemma", "Bounded check of one part of Canaday's lemma");
    lemma_cmd->add_option("--part", part, "b | c | d | e | f")->required();
    lemma_cmd->add_option("--bound", bound, "Main bound (h, beta, degree, prime degree or m)");
    lemma_cmd->add_option("--exp-bound", exp_bound, "Part e: bound on the exponents 2m, 2n");

    unsigned b_deg = Budgets::kTheoremB;
    unsigned p_deg = Budgets::kTheoremP;
    std::string prime_mode = "relaxed";
    auto *verify_cmd = app.add_subcommand("verify-theorem", "Brute-force check of the r <= 3 classification");
    verify_cmd->add_option("--b-deg", b_deg, "Maximum degree of B");
    verify_cmd->add_option("--p-deg", p_deg, "Maximum degree of each prime");
    verify_cmd->add_option("--mode", prime_mode, "strict-odd | relaxed")->check(CLI::IsMember({"strict-odd", "relaxed"}));

    std::string b_arg;
    unsigned r_max = 3;
    auto *solve_cmd = app.add_subcommand("solve", "Structured solver for a single B");
    solve_cmd->add_option("--b", b_arg, "Even polynomial B")->required();
    solve_cmd->add_option("--r", r_max, "Maximum number of primes (<= 3)");
    solve_cmd->add_option("--mode", prime_mode, "strict-odd | relaxed")->check(CLI::IsMember({"strict-odd", "relaxed"}));

    unsigned prime_deg = 1;
    auto *primes_cmd = app.add_subcommand("primes", "Irreducibles of one degree");
    primes_cmd->add_option("--deg", prime_deg, "Degree")->required()->check(CLI::Range(1U, 32U));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*parse_cmd) return cmd_parse(g, poly_arg);
        if (*factor_cmd) return cmd_factor(g, poly_arg);
        if (*sigma_cmd) return cmd_sigma(g, poly_arg);
        if (*check_cmd) return cmd_check_perfect(g, poly_arg);
        if (*classify_cmd) return cmd_classify(g, poly_arg);
        if (*catalogue_cmd) return cmd_catalogue(g);
        if (*primes_cmd) return cmd_primes(g, prime_deg);
        if (*solve_cmd) return cmd_solve(g, b_arg, r_max, prime_mode);
        if (*search_cmd) {
            log_run(g);
            const SearchReport r = search_perfect(max_deg, parse_search_mode(search_mode), g.scan());
            std::cout << (g.json() ? to_json(r, g.render()) : to_text(r, g.render()));
            return r.unknown_count() == 0 ? kExitPass : kExitFail;
        }
        if (*census_cmd) {
            log_run(g);
            const CensusReport r = gcd_condition_census(max_deg, g.scan());
            std::cout << (g.json() ? to_json(r, g.render()) : to_text(r, g.render()));
            return kExitPass;
        }
        if (*lemma_cmd) {
            const CanadayPart p = parse_canaday_part(part);
            LemmaBounds lb;
            if (bound) {
                switch (p) {
                    case CanadayPart::B: lb.b_h_max = *bound; break;
                    case CanadayPart::C: lb.c_beta_max = *bound; break;
                    case CanadayPart::D: lb.d_degree_max = *bound; break;
                    case CanadayPart::E: lb.e_prime_degree_max = *bound; break;
                    case CanadayPart::F: lb.f_m_max = *bound; break;
                }
            }
            if (exp_bound) {
                if (p != CanadayPart::E) throw std::invalid_argument("--exp-bound applies to part e only");
                lb.e_exponent_max = *exp_bound;
            }
            log_run(g);
            const LemmaCheckReport r = check_canaday(p, lb);
            std::cout << (g.json() ? to_json(r, g.render()) : to_text(r, g.render()));
            return r.pass ? kExitPass : kExitFail;
        }
        if (*verify_cmd) {
            PrimeTable table = open_table(g);
            const TheoremReport r = theorem_bruteforce(b_deg, p_deg, parse_prime_mode(prime_mode), table, g.scan());
            std::cout << (g.json() ? to_json(r, g.render()) : to_text(r, g.render()));
            return theorem_report_passes(r) ? kExitPass : kExitFail;
        }
    } catch (const BudgetError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
