#include "gf2perfect/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gf2perfect/scan.hpp"

namespace gf2perfect {

namespace {

using Json = nlohmann::ordered_json;

Json header(const char *command, const RenderOptions &o) {
    Json j;
    j["tool"] = "gf2perfect";
    j["version"] = kVersion;
    j["seed"] = o.seed;
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

Json rational_json(const Rational &r) {
    Json j;
    j["num"] = r.num;
    j["den"] = r.den;
    j["value"] = r.to_double();
    return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

std::string names_of(const TheoremReport &r) {
    std::string s;
    for (const auto &sol : r.solutions) s += (s.empty() ? "" : ", ") + sol.name;
    return s;
}

}  // namespace

std::optional<std::vector<std::string>> expected_theorem_names(unsigned b_max_degree, unsigned prime_max_degree,
                                                               PrimeMode mode) {
    if (b_max_degree != Budgets::kTheoremB || prime_max_degree != Budgets::kTheoremP) return std::nullopt;
    if (mode == PrimeMode::StrictOdd) return std::vector<std::string>{"M16", "M20a", "M20b"};
    return std::vector<std::string>{"M5a", "M5b", "M16", "M20a", "M20b"};
}

bool theorem_report_passes(const TheoremReport &r) {
    std::vector<std::string> names;
    for (const auto &s : r.solutions) {
        if (s.name == "UNKNOWN") return false;
        names.push_back(s.name);
    }
    const auto expected = expected_theorem_names(r.b_max_degree, r.prime_max_degree, r.mode);
    if (!expected) return true;
    return std::set<std::string>(names.begin(), names.end()) == std::set<std::string>(expected->begin(), expected->end()) &&
           names.size() == expected->size();
}

std::string to_json(const SearchReport &r, const RenderOptions &o) {
    Json j = header("search", o);
    j["max_degree"] = r.max_degree;
    j["mode"] = to_string(r.mode);
    j["candidates_scanned"] = r.candidates_scanned;
    Json found = Json::array();
    for (const auto &f : r.found) {
        Json e = poly_json(f.value);
        e["classification"] = f.classification;
        found.push_back(std::move(e));
    }
    j["found"] = std::move(found);
    j["unknown_count"] = r.unknown_count();
    if (o.timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return dump(j);
}

std::string to_json(const CensusReport &r, const RenderOptions &o) {
    Json j = header("census", o);
    j["max_degree"] = r.max_degree;
    Json rows = Json::array();
    for (const auto &row : r.per_degree) {
        Json e;
        e["degree"] = row.degree;
        e["even_count"] = row.even_count;
        e["satisfying_count"] = row.satisfying_count;
        e["fraction"] = rational_json(row.fraction());
        rows.push_back(std::move(e));
    }
    j["per_degree"] = std::move(rows);
    j["cumulative_fraction"] = rational_json(r.cumulative_fraction);
    if (o.timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return dump(j);
}

std::string to_json(const LemmaCheckReport &r, const RenderOptions &o) {
    Json j = header("lemma", o);
    j["part"] = to_string(r.part);
    Json bounds = Json::object();
    for (const auto &[name, value] : r.bounds) bounds[name] = value;
    j["bounds"] = std::move(bounds);
    j["cases_checked"] = r.cases_checked;
    j["witnesses"] = r.witnesses;
    j["expected"] = r.expected;
    j["pass"] = r.pass;
    return dump(j);
}

std::string to_json(const TheoremReport &r, const RenderOptions &o) {
    Json j = header("verify-theorem", o);
    j["b_max_degree"] = r.b_max_degree;
    j["prime_max_degree"] = r.prime_max_degree;
    j["mode"] = to_string(r.mode);
    j["qualifying_b"] = r.qualifying_b;
    j["prime_sets_tested"] = r.prime_sets_tested;
    const auto &h = r.hypothesis_failures;
    j["hypothesis_failures"] = Json{{"b_odd", h.b_odd},
                                    {"gcd_condition", h.gcd_condition},
                                    {"prime_divides_b", h.prime_divides_b},
                                    {"prime_even", h.prime_even},
                                    {"duplicate_prime", h.duplicate_prime}};
    Json sols = Json::array();
    for (const auto &s : r.solutions) {
        Json e;
        e["name"] = s.name;
        e["a"] = poly_json(s.a);
        e["b"] = poly_json(s.b);
        Json ps = Json::array();
        for (const auto &p : s.primes) ps.push_back(poly_json(p));
        e["primes"] = std::move(ps);
        sols.push_back(std::move(e));
    }
    j["solutions"] = std::move(sols);
    const auto expected = expected_theorem_names(r.b_max_degree, r.prime_max_degree, r.mode);
    j["expected"] = expected ? Json(*expected) : Json(nullptr);
    j["pass"] = theorem_report_passes(r);
    if (o.timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return dump(j);
}

std::string to_text(const SearchReport &r, const RenderOptions &o) {
    std::ostringstream os;
    os << "search  mode=" << to_string(r.mode) << "  max_degree=" << r.max_degree
       << "  candidates=" << r.candidates_scanned << "  found=" << r.found.size()
       << "  unknown=" << r.unknown_count() << "\n";
    for (const auto &f : r.found) {
        os << std::left << std::setw(4) << f.value.deg() << std::setw(12) << to_hex(f.value) << std::setw(10)
           << f.classification << format(f.value) << "\n";
    }
    if (o.timing) os << "elapsed " << r.elapsed_seconds << " s\n";
    return os.str();
}

std::string to_text(const CensusReport &r, const RenderOptions &o) {
    std::ostringstream os;
    os << std::left << std::setw(8) << "degree" << std::setw(12) << "even" << std::setw(12) << "satisfying"
       << "fraction\n";
    for (const auto &row : r.per_degree) {
        os << std::setw(8) << row.degree << std::setw(12) << row.even_count << std::setw(12) << row.satisfying_count
           << std::fixed << std::setprecision(4) << row.fraction().to_double() << "\n";
    }
    os << "cumulative " << r.cumulative_fraction.to_string() << " = " << std::fixed << std::setprecision(4)
       << r.cumulative_fraction.to_double() << "\n";
    if (o.timing) os << "elapsed " << r.elapsed_seconds << " s\n";
    return os.str();
}

std::string to_text(const LemmaCheckReport &r, const RenderOptions &) {
    std::ostringstream os;
    os << "part " << to_string(r.part);
    for (const auto &[name, value] : r.bounds) os << "  " << name << "=" << value;
    os << "  cases=" << r.cases_checked << "\n";
    auto list = [&os](const char *label, const std::vector<std::string> &v) {
        os << std::left << std::setw(10) << label << "{";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
        os << "}\n";
    };
    list("witnesses", r.witnesses);
    list("expected", r.expected);
    os << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string to_text(const TheoremReport &r, const RenderOptions &o) {
    std::ostringstream os;
    const auto &h = r.hypothesis_failures;
    os << "verify-theorem  mode=" << to_string(r.mode) << "  b_deg<=" << r.b_max_degree
       << "  p_deg<=" << r.prime_max_degree << "\n";
    os << "qualifying B " << r.qualifying_b << ", prime sets tested " << r.prime_sets_tested << "\n";
    os << "rejected: b_odd " << h.b_odd << ", gcd_condition " << h.gcd_condition << ", prime_divides_b "
       << h.prime_divides_b << ", prime_even " << h.prime_even << ", duplicate_prime " << h.duplicate_prime << "\n";
    for (const auto &s : r.solutions) {
        os << std::left << std::setw(8) << s.name << std::setw(12) << to_hex(s.a) << "B=" << format(s.b) << "  P={";
        for (std::size_t i = 0; i < s.primes.size(); ++i) os << (i ? ", " : "") << format(s.primes[i]);
        os << "}\n";
    }
    os << "solutions {" << names_of(r) << "}  " << (theorem_report_passes(r) ? "PASS" : "FAIL") << "\n";
    if (o.timing) os << "elapsed " << r.elapsed_seconds << " s\n";
    return os.str();
}

}  // namespace gf2perfect
