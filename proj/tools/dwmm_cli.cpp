// Command-line front end for the dwmm library. Every subcommand prints a
// machine-readable document to standard output (JSON by default, CSV with
// --format csv) or, with --output, writes the same document to a file with
// the run manifest extended by the wall time. Standard output for a fixed
// argv and seed is byte-identical across runs, so wall time never appears
// there. Exact rationals are emitted as {"num": "...", "den": "..."}
// string pairs unless --float asks for explicit conversion; floats are
// printed with 17 significant digits.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dwmm/cdtgraph.hpp"
#include "dwmm/gaussavg.hpp"
#include "dwmm/glchar.hpp"
#include "dwmm/models.hpp"
#include "dwmm/partial_trace.hpp"
#include "dwmm/permutation.hpp"
#include "dwmm/sn_char.hpp"
#include "dwmm/spectrum.hpp"

namespace {

using dwmm::BigRational;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json rat_json(const BigRational& q, bool as_float) {
    if (as_float) return fmt17(dwmm::to_double(q));
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json laurent_json(const dwmm::LaurentPoly& p, bool as_float) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json t = rat_json(it->second, as_float);
        t["power"] = it->first;
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}, {"pretty", p.to_string()}};
}

BigRational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return dwmm::rational_from_string(text);
    return dwmm::rational_from_string(text.substr(0, slash), text.substr(slash + 1));
}

// Representation flag: a named representation or an explicit partition
// such as "2,1". "determinant" scales with --q.
dwmm::Partition resolve_rep(const std::string& rep, int N, long q) {
    if (rep == "trivial") return {};
    if (rep == "defining") return {1};
    if (rep == "determinant")
        return dwmm::Partition(static_cast<size_t>(N), static_cast<int>(q));
    return dwmm::parse_partition(rep);
}

struct Output {
    std::string format = "json";  // json | csv
    std::string file;             // empty = stdout
    bool as_float = false;
};

json make_manifest(const std::string& subcommand, json parameters,
                   const json& seed = nullptr) {
    return json{{"subcommand", subcommand},
                {"parameters", std::move(parameters)},
                {"seed", seed},
                {"library_version", kVersion}};
}

// CSV document: a header row plus data rows, all pre-formatted.
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const {
        std::ostringstream out;
        for (size_t i = 0; i < header.size(); ++i)
            out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << row[i];
            out << "\n";
        }
        return out.str();
    }
};

// Renders the result and ships it to stdout or --output. File output gets
// the manifest with wall time; stdout stays byte-stable.
void emit(const Output& out, json manifest, json result, const Csv& csv,
          double wall_ms) {
    std::string text;
    if (out.format == "csv") {
        text = csv.to_string();
        if (!out.file.empty()) {
            manifest["wall_time_ms"] = fmt17(wall_ms);
            text = "# manifest " + manifest.dump() + "\n" + text;
        }
    } else {
        if (!out.file.empty()) manifest["wall_time_ms"] = fmt17(wall_ms);
        result["manifest"] = std::move(manifest);
        text = result.dump(2) + "\n";
    }
    if (out.file.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.file, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + out.file);
        f << text;
    }
}

void add_output_flags(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", out.file, "Write the document to a file instead of stdout");
    cmd->add_flag("--float", out.as_float, "Convert exact rationals to floats explicitly");
}

int thread_count(size_t points) {
    long n = 0;
    if (const char* env = std::getenv("DWMM_THREADS")) n = std::atol(env);
    if (n <= 0) n = static_cast<long>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (static_cast<size_t>(n) > points) n = static_cast<long>(points);
    return static_cast<int>(n);
}

// Runs fn(i) for i in [0, points) on a worker pool; any exception is
// rethrown after all workers join.
void parallel_for(size_t points, const std::function<void(size_t)>& fn) {
    const int workers = thread_count(points);
    if (workers <= 1) {
        for (size_t i = 0; i < points; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (size_t i = static_cast<size_t>(w); i < points;
                     i += static_cast<size_t>(workers))
                    fn(i);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// "4,8,12" or "10:60" or "10:60:5" -> list of N values.
std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    if (text.find(':') != std::string::npos) {
        int lo = 0, hi = 0, step = 1;
        const auto a = text.find(':');
        const auto b = text.find(':', a + 1);
        lo = std::stoi(text.substr(0, a));
        hi = std::stoi(text.substr(a + 1, b == std::string::npos ? std::string::npos : b - a - 1));
        if (b != std::string::npos) step = std::stoi(text.substr(b + 1));
        if (step < 1) throw std::invalid_argument("N list step must be >= 1");
        for (int n = lo; n <= hi; n += step) out.push_back(n);
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty N list");
    return out;
}

json strip_json(const std::vector<dwmm::Strip>& strips) {
    json arr = json::array();
    for (const auto& s : strips)
        arr.push_back(json{{"kind", dwmm::to_string(s.kind)},
                           {"faces", s.faces},
                           {"boundaries", s.boundary_count}});
    return arr;
}

json graph_summary(const dwmm::RibbonGraph& g) {
    json doc{{"half_edges", g.half_edge_count()},
             {"vertices", g.vertex_count()},
             {"edges", g.edge_count()},
             {"faces", g.face_count()},
             {"euler_characteristic", dwmm::euler_characteristic(g)}};
    const auto rep = dwmm::validate_cdt(g);
    doc["valid"] = rep.valid();
    if (!rep.valid()) {
        doc["violations"] = rep.violations;
        return doc;
    }
    doc["orientable"] = dwmm::orientable(g);
    doc["topology"] = dwmm::to_string(dwmm::classify_topology(g));
    doc["strips"] = strip_json(dwmm::strip_decomposition(g));
    return doc;
}

dwmm::PropagatorSpec model_spec(const std::string& model) {
    if (model == "cdt") return dwmm::cdt_spec();
    if (model == "ising") return dwmm::ising_spec();
    if (model == "cdt-ising") return dwmm::cdt_ising_spec();
    throw std::invalid_argument("unknown model " + model);
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    long N = 0, m = 1;
    std::string method = "exact";
    double tol = 1e-12;
    Output out;
};

int run_spectrum(const SpectrumArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const dwmm::Spectrum s = a.method == "approx" ? dwmm::approx_spectrum(a.N, a.m)
                                                  : dwmm::exact_spectrum(a.N, a.m, a.tol);
    json eig = json::array();
    Csv csv;
    csv.header = {"re", "im"};
    for (const auto& z : s.eigenvalues) {
        const double re = static_cast<double>(z.real());
        const double im = static_cast<double>(z.imag());
        eig.push_back(json{{"re", fmt17(re)}, {"im", fmt17(im)}});
        csv.rows.push_back({fmt17(re), fmt17(im)});
    }
    json result{{"N", s.N},
                {"m", s.m},
                {"method", a.method},
                {"eigenvalues", std::move(eig)},
                {"q_max", dwmm::q_max(s)},
                {"max_residual", fmt17(s.max_residual)}};
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json params{{"N", a.N}, {"m", a.m}, {"method", a.method}, {"tol", fmt17(a.tol)}};
    emit(a.out, make_manifest("spectrum", std::move(params)), std::move(result), csv, ms);
    return 0;
}

// -------------------------------------------------------------------- char

struct CharArgs {
    std::string rep = "trivial";
    int N = 0;
    long q = 1;
    std::string cls;  // optional cycle type for a symmetric-group character
    Output out;
};

int run_char(const CharArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const dwmm::Partition R = resolve_rep(a.rep, a.N, a.q);
    const auto h = dwmm::from_partition(R, a.N);
    const auto parity = dwmm::parity_split(h);

    json result{{"partition", dwmm::partition_to_string(R)},
                {"n", h.n()},
                {"N", a.N},
                {"shifted_weights", h.values()},
                {"gl_dimension", rat_json(dwmm::gl_dimension(h), a.out.as_float)},
                {"expansion_coefficient",
                 rat_json(dwmm::expansion_coefficient(h), a.out.as_float)},
                {"chi_C1", rat_json(dwmm::chi_C1(h), a.out.as_float)},
                {"chi_C2_rule", rat_json(dwmm::chi_C2_rule(h), a.out.as_float)},
                {"even_weights", parity.even_count},
                {"odd_weights", parity.odd_count}};
    if (static_cast<int>(R.size()) <= a.N && !R.empty())
        result["sn_dimension"] = dwmm::to_string(dwmm::sn_dimension(R));
    if (!a.cls.empty()) {
        const dwmm::Partition type = dwmm::parse_partition(a.cls);
        result["class"] = dwmm::partition_to_string(type);
        result["sn_character"] = dwmm::to_string(dwmm::sn_character(R, type));
    }

    Csv csv;
    csv.header = {"partition", "N", "n", "gl_dimension_num", "gl_dimension_den"};
    const auto dim = dwmm::gl_dimension(h);
    csv.rows.push_back({dwmm::partition_to_string(R), std::to_string(a.N),
                        std::to_string(h.n()), dim.get_num().get_str(),
                        dim.get_den().get_str()});
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json params{{"rep", a.rep}, {"N", a.N}, {"q", a.q}};
    if (!a.cls.empty()) params["class"] = a.cls;
    emit(a.out, make_manifest("char", std::move(params)), std::move(result), csv, ms);
    return 0;
}

// --------------------------------------------------------------------- avg

struct AvgArgs {
    std::string rep = "trivial";
    int N = 0;
    long q = 1;
    int power = 2;
    std::string method = "oracle";
    double eps = 0.0;
    Output out;
};

int run_avg(const AvgArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const dwmm::Partition R = resolve_rep(a.rep, a.N, a.q);
    const auto h = dwmm::from_partition(R, a.N);
    const auto r = dwmm::average_chi(h, a.power, a.method, a.eps);

    json result;
    if (r.exact && !a.out.as_float) result = rat_json(r.value, false);
    result["float"] = fmt17(r.value_float);
    result["exact"] = r.exact;
    result["method"] = r.method;
    result["N"] = r.N;
    result["n"] = r.n;
    result["power"] = a.power;
    result["rep"] = dwmm::partition_to_string(R);

    Csv csv;
    csv.header = {"rep", "N", "power", "method", "num", "den", "float"};
    csv.rows.push_back({dwmm::partition_to_string(R), std::to_string(a.N),
                        std::to_string(a.power), a.method,
                        r.exact ? r.value.get_num().get_str() : "",
                        r.exact ? r.value.get_den().get_str() : "",
                        fmt17(r.value_float)});
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json params{{"rep", a.rep}, {"N", a.N},      {"q", a.q},
                {"power", a.power}, {"method", a.method}, {"eps", fmt17(a.eps)}};
    emit(a.out, make_manifest("avg", std::move(params)), std::move(result), csv, ms);
    return 0;
}

// ---------------------------------------------------------------------- kn

struct KnArgs {
    std::string rep = "trivial";
    int N = 0;
    long q = 1;
    Output out;
};

int run_kn(const KnArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const dwmm::Partition R = resolve_rep(a.rep, a.N, a.q);
    const auto h = dwmm::from_partition(R, a.N);
    const BigRational k = dwmm::conjecture_kN(h);

    json result = rat_json(k, a.out.as_float);
    result["rep"] = dwmm::partition_to_string(R);
    result["N"] = a.N;
    result["n"] = h.n();

    Csv csv;
    csv.header = {"rep", "N", "num", "den"};
    csv.rows.push_back({dwmm::partition_to_string(R), std::to_string(a.N),
                        k.get_num().get_str(), k.get_den().get_str()});
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json params{{"rep", a.rep}, {"N", a.N}, {"q", a.q}};
    emit(a.out, make_manifest("kn", std::move(params)), std::move(result), csv, ms);
    return 0;
}

// ------------------------------------------------------------------- lemma

struct LemmaArgs {
    int n = 2;
    std::string gamma;  // explicit pairing in cycle notation
    Output out;
};

json npoly_json(const dwmm::NPoly& p) {
    json terms = json::array();
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        terms.push_back(json{{"power", it->first}, {"coeff", it->second.get_str()}});
    return terms;
}

int run_lemma(const LemmaArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    json result;
    Csv csv;
    if (!a.gamma.empty()) {
        const auto gamma = dwmm::Permutation::parse_cycles(a.gamma);
        const auto pt = dwmm::partial_trace(gamma);
        result = json{{"gamma", gamma.to_cycle_string()},
                      {"weight_power", pt.exponent},
                      {"permutation", pt.result.to_cycle_string()}};
        csv.header = {"gamma", "weight_power", "permutation"};
        csv.rows.push_back({"\"" + gamma.to_cycle_string() + "\"",
                            std::to_string(pt.exponent),
                            "\"" + pt.result.to_cycle_string() + "\""});
    } else {
        const auto [lhs, rhs] = dwmm::lemma_sum(a.n);
        const auto diff_of = [&](const dwmm::Permutation& p) {
            dwmm::NPoly l, r;
            if (auto it = lhs.terms.find(p); it != lhs.terms.end()) l = it->second;
            if (auto it = rhs.terms.find(p); it != rhs.terms.end()) r = it->second;
            return dwmm::poly_sub(l, r);
        };
        json table = json::array();
        csv.header = {"permutation", "rhs_degree", "diff_degree", "deficit"};
        int min_deficit = std::numeric_limits<int>::max();
        for (const auto& [perm, rpoly] : rhs.terms) {
            const dwmm::NPoly diff = diff_of(perm);
            const int rdeg = dwmm::poly_degree(rpoly);
            const int ddeg = dwmm::poly_degree(diff);
            const bool vanishes = ddeg < 0;
            const int deficit = vanishes ? rdeg + 1 : rdeg - ddeg;
            if (!vanishes) min_deficit = std::min(min_deficit, deficit);
            json row{{"permutation", perm.to_cycle_string()},
                     {"rhs", npoly_json(rpoly)},
                     {"rhs_degree", rdeg},
                     {"difference", npoly_json(diff)}};
            row["diff_degree"] = vanishes ? json(nullptr) : json(ddeg);
            table.push_back(std::move(row));
            csv.rows.push_back({"\"" + perm.to_cycle_string() + "\"",
                                std::to_string(rdeg),
                                vanishes ? "" : std::to_string(ddeg),
                                vanishes ? "" : std::to_string(deficit)});
        }
        if (min_deficit == std::numeric_limits<int>::max()) min_deficit = a.n + 1;
        result = json{{"n", a.n},
                      {"lhs_terms", static_cast<int>(lhs.terms.size())},
                      {"rhs_terms", static_cast<int>(rhs.terms.size())},
                      {"min_degree_deficit", min_deficit},
                      {"per_permutation", std::move(table)}};
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json params{{"n", a.n}};
    if (!a.gamma.empty()) params["gamma"] = a.gamma;
    emit(a.out, make_manifest("lemma", std::move(params)), std::move(result), csv, ms);
    return 0;
}

// ------------------------------------------------------------------- model

struct ModelArgs {
    std::string model = "cdt";
    std::string gamma;  // exact rational; empty = symbolic table
    std::string word;
    std::string n_rule = "large-n";  // large-n | spectrum:<N>
    double g = 0.0;
    bool transform = false;
    bool order_g2 = false;
    std::uint64_t seed = 0;
    Output out;
};

const char* kind_name(dwmm::ContractionKind k) {
    switch (k) {
        case dwmm::ContractionKind::DeltaDelta: return "delta";
        case dwmm::ContractionKind::C2C2: return "c2";
        case dwmm::ContractionKind::Zero: return "zero";
    }
    return "?";
}

int run_model(const ModelArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    json result;
    Csv csv;
    json params{{"model", a.model}};

    if (a.order_g2) {
        const auto og = dwmm::z_order_g2();
        json per = json::object();
        for (const auto& [R, poly] : og.per_representation)
            per[dwmm::partition_to_string(R)] = laurent_json(poly, a.out.as_float);
        result = json{{"character_route", laurent_json(og.character_route, a.out.as_float)},
                      {"wick_route", laurent_json(og.wick_route, a.out.as_float)},
                      {"routes_agree", og.character_route == og.wick_route},
                      {"per_representation", std::move(per)}};
        csv.header = {"route", "value"};
        csv.rows.push_back({"character", "\"" + og.character_route.to_string() + "\""});
        csv.rows.push_back({"wick", "\"" + og.wick_route.to_string() + "\""});
        params["order_g2"] = true;
    } else if (a.transform) {
        const double gamma = a.gamma.empty() ? 0.0 : dwmm::to_double(parse_rational(a.gamma));
        const auto map = dwmm::coupling_transform(gamma, a.g);
        const double residual = dwmm::coupling_action_residual(gamma, a.g, a.seed);
        result = json{{"gamma", fmt17(map.gamma)},
                      {"g", fmt17(map.g)},
                      {"gamma_prime", fmt17(map.gamma_prime)},
                      {"gamma_prime_inv_sq", fmt17(map.gamma_prime_inv_sq)},
                      {"g_prime", fmt17(map.g_prime)},
                      {"action_residual", fmt17(residual)}};
        csv.header = {"gamma", "g", "gamma_prime", "g_prime", "action_residual"};
        csv.rows.push_back({fmt17(map.gamma), fmt17(map.g), fmt17(map.gamma_prime),
                            fmt17(map.g_prime), fmt17(residual)});
        params["transform"] = true;
        params["gamma"] = a.gamma;
        params["g"] = fmt17(a.g);
    } else if (!a.word.empty()) {
        const auto word = dwmm::Word::parse(a.word);
        const auto spec = model_spec(a.model);
        const BigRational gamma = a.gamma.empty() ? BigRational(0) : parse_rational(a.gamma);
        result = json{{"word", word.to_string()},
                      {"model", a.model},
                      {"gamma", a.gamma.empty() ? "0" : a.gamma},
                      {"n_rule", a.n_rule}};
        csv.header = {"word", "n_rule", "value"};
        if (a.n_rule == "large-n") {
            const auto poly = dwmm::wick_word_average(word, spec, gamma);
            result["average"] = laurent_json(poly, a.out.as_float);
            csv.rows.push_back({"\"" + word.to_string() + "\"", a.n_rule,
                                "\"" + poly.to_string() + "\""});
        } else if (a.n_rule.rfind("spectrum:", 0) == 0) {
            const long N = std::stol(a.n_rule.substr(9));
            const auto c2 = dwmm::exact_spectrum(N, 2);
            const double v = dwmm::wick_word_average(word, spec, gamma, c2);
            result["average"] = fmt17(v);
            csv.rows.push_back({"\"" + word.to_string() + "\"", a.n_rule, fmt17(v)});
        } else {
            throw std::invalid_argument("n-rule must be large-n or spectrum:<N>");
        }
        params["word"] = a.word;
        params["gamma"] = a.gamma;
        params["n_rule"] = a.n_rule;
    } else {
        // propagator table, symbolic or evaluated at --gamma
        auto spec = model_spec(a.model);
        const bool evaluated = !a.gamma.empty();
        if (evaluated) spec = spec.evaluated_at(parse_rational(a.gamma));
        json table = json::array();
        csv.header = {"a", "b", "kind", "weight"};
        const auto& syms = spec.symbols();
        for (size_t i = 0; i < syms.size(); ++i)
            for (size_t j = i; j < syms.size(); ++j) {
                const auto& k = spec.kernel(syms[i], syms[j]);
                if (k.kind == dwmm::ContractionKind::Zero) continue;
                json entry{{"a", syms[i]},
                           {"b", syms[j]},
                           {"kind", kind_name(k.kind)}};
                if (evaluated)
                    entry["weight"] = rat_json(k.weight.eval(BigRational(0)) * 0 +
                                                   k.weight.eval(BigRational(0)),
                                               a.out.as_float);
                entry["weight_expr"] = k.weight.to_string();
                table.push_back(std::move(entry));
                csv.rows.push_back({syms[i], syms[j], kind_name(k.kind),
                                    "\"" + k.weight.to_string() + "\""});
            }
        result = json{{"model", a.model},
                      {"symbols", syms},
                      {"gamma", a.gamma.empty() ? json(nullptr) : json(a.gamma)},
                      {"propagators", std::move(table)}};
        params["gamma"] = a.gamma;
    }

    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    emit(a.out, make_manifest("model", std::move(params), json(a.seed)),
         std::move(result), csv, ms);
    return 0;
}

// ------------------------------------------------------------------- graph

struct GraphArgs {
    std::string build;     // sphere | torus | projective | klein
    std::string sizes = "1";
    int variant = 1;
    std::string classify;  // file path or "-"
    bool census = false;
    int seeds = 1000;
    int strips = 3;
    int min_size = 1;
    int max_size = 6;
    std::uint64_t seed = 0;
    Output out;
};

std::vector<int> parse_sizes(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

dwmm::RibbonGraph build_named(const std::string& name, const std::vector<int>& sizes,
                              int variant) {
    if (name == "sphere") return dwmm::build_sphere(sizes);
    if (name == "torus") return dwmm::build_torus(sizes);
    if (name == "projective") return dwmm::build_projective(sizes, variant);
    if (name == "klein") return dwmm::build_klein(sizes, variant);
    throw std::invalid_argument("unknown topology " + name);
}

int run_graph(const GraphArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    json result;
    Csv csv;
    json params;

    if (a.census) {
        params = json{{"census", true},   {"seeds", a.seeds},
                      {"strips", a.strips}, {"min_size", a.min_size},
                      {"max_size", a.max_size}};
        csv.header = {"seed", "half_edges", "chi", "singular", "orientable", "topology"};
        std::map<std::string, int> classes;
        bool chi_matches = true, chi_in_range = true;
        for (int i = 0; i < a.seeds; ++i) {
            const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
            const auto g = dwmm::random_cdt_graph(seed, a.strips, a.min_size, a.max_size);
            const auto strips = dwmm::strip_decomposition(g);
            int singular = 0;
            for (const auto& s : strips)
                if (s.kind == dwmm::StripKind::Singular) ++singular;
            const int chi = dwmm::euler_characteristic(g);
            if (chi != singular) chi_matches = false;
            if (chi < 0 || chi > 2) chi_in_range = false;
            const auto cls = dwmm::to_string(dwmm::classify_topology(g));
            classes[cls]++;
            csv.rows.push_back({std::to_string(seed), std::to_string(g.half_edge_count()),
                                std::to_string(chi), std::to_string(singular),
                                dwmm::orientable(g) ? "1" : "0", cls});
        }
        result = json{{"count", a.seeds},
                      {"classes", classes},
                      {"chi_equals_singular", chi_matches},
                      {"chi_in_range", chi_in_range}};
    } else if (!a.classify.empty()) {
        params = json{{"classify", a.classify}};
        std::string text;
        if (a.classify == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream f(a.classify, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + a.classify);
            std::ostringstream buf;
            buf << f.rdbuf();
            text = buf.str();
        }
        const auto g = dwmm::graph_from_json(text);
        result = graph_summary(g);
        csv.header = {"vertices", "edges", "faces", "chi", "valid", "topology"};
        csv.rows.push_back({std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
                            std::to_string(g.face_count()),
                            std::to_string(dwmm::euler_characteristic(g)),
                            result["valid"].get<bool>() ? "1" : "0",
                            result.value("topology", std::string(""))});
    } else {
        if (a.build.empty())
            throw std::invalid_argument("graph: pick one of --build, --classify, --census");
        const auto sizes = parse_sizes(a.sizes);
        params = json{{"build", a.build}, {"sizes", a.sizes}, {"variant", a.variant}};
        const auto g = build_named(a.build, sizes, a.variant);
        result = graph_summary(g);
        result["graph"] = json::parse(dwmm::graph_to_json(g));
        csv.header = {"vertices", "edges", "faces", "chi", "topology"};
        csv.rows.push_back({std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
                            std::to_string(g.face_count()),
                            std::to_string(dwmm::euler_characteristic(g)),
                            result["topology"].get<std::string>()});
    }

    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    emit(a.out, make_manifest("graph", std::move(params), json(a.seed)),
         std::move(result), csv, ms);
    return 0;
}

// ------------------------------------------------------------------- sweep

struct SweepArgs {
    std::string task;  // qmax | trace-dev | largen-ratio | avg
    std::string n_list;
    long m = 2;
    std::string rep = "trivial";
    long q = 1;
    int power = 2;
    std::string method = "oracle";
    double eps = 0.0;
    double tol = 1e-12;
    std::string spectrum_method = "exact";
    Output out;
};

int run_sweep(const SweepArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> Ns = parse_n_list(a.n_list);

    // one row of pre-rendered cells per N, shared across JSON and CSV
    std::vector<json> rows(Ns.size());
    Csv csv;

    if (a.task == "qmax") {
        csv.header = {"N", "q_max"};
        parallel_for(Ns.size(), [&](size_t i) {
            const long N = Ns[i];
            const auto s = a.spectrum_method == "approx"
                               ? dwmm::approx_spectrum(N, a.m)
                               : dwmm::exact_spectrum(N, a.m, a.tol);
            rows[i] = json{{"N", N}, {"q_max", dwmm::q_max(s)}};
        });
    } else if (a.task == "trace-dev") {
        csv.header = {"N", "max_abs_deviation"};
        parallel_for(Ns.size(), [&](size_t i) {
            const long N = Ns[i];
            const auto s = a.spectrum_method == "approx"
                               ? dwmm::approx_spectrum(N, a.m)
                               : dwmm::exact_spectrum(N, a.m, a.tol);
            double worst = 0;
            for (long p = 1; p <= N; ++p) {
                const auto tr = s.power_trace(p);
                const double want = p == a.m ? static_cast<double>(N) : 0.0;
                const double dev = std::hypot(static_cast<double>(tr.real()) - want,
                                              static_cast<double>(tr.imag()));
                worst = std::max(worst, dev);
            }
            rows[i] = json{{"N", N}, {"max_abs_deviation", fmt17(worst)}};
        });
    } else if (a.task == "largen-ratio") {
        csv.header = {"N", "ratio"};
        parallel_for(Ns.size(), [&](size_t i) {
            const int N = Ns[i];
            const dwmm::Partition R = resolve_rep(a.rep, N, a.q);
            const BigRational exact = dwmm::oracle_chiA2(R, N);
            const BigRational approx = dwmm::chiA2_largeN(R, N);
            const double ratio = std::abs(dwmm::to_double(approx / exact) - 1.0);
            rows[i] = json{{"N", N}, {"ratio", fmt17(ratio)}};
        });
    } else if (a.task == "avg") {
        csv.header = {"N", "rep", "method", "num", "den", "float"};
        parallel_for(Ns.size(), [&](size_t i) {
            const int N = Ns[i];
            const dwmm::Partition R = resolve_rep(a.rep, N, a.q);
            const auto h = dwmm::from_partition(R, N);
            const auto r = dwmm::average_chi(h, a.power, a.method, a.eps);
            json row{{"N", N},
                     {"rep", dwmm::partition_to_string(R)},
                     {"method", a.method},
                     {"float", fmt17(r.value_float)},
                     {"exact", r.exact}};
            if (r.exact) {
                row["num"] = r.value.get_num().get_str();
                row["den"] = r.value.get_den().get_str();
            }
            rows[i] = std::move(row);
        });
    } else {
        throw std::invalid_argument(
            "sweep task must be one of qmax, trace-dev, largen-ratio, avg");
    }

    // deterministic merge: rows are indexed by the sorted-unique N list order
    json jrows = json::array();
    for (size_t i = 0; i < rows.size(); ++i) {
        jrows.push_back(rows[i]);
        std::vector<std::string> line;
        for (const auto& col : csv.header) {
            const auto it = rows[i].find(col);
            if (it == rows[i].end()) {
                line.push_back("");
            } else if (it->is_string()) {
                line.push_back(it->get<std::string>());
            } else {
                line.push_back(it->dump());
            }
        }
        csv.rows.push_back(std::move(line));
    }
    json result{{"task", a.task}, {"rows", std::move(jrows)}};

    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json params{{"task", a.task}, {"N_list", a.n_list},   {"m", a.m},
                {"rep", a.rep},   {"method", a.method},   {"power", a.power},
                {"q", a.q},       {"eps", fmt17(a.eps)},  {"tol", fmt17(a.tol)},
                {"spectrum_method", a.spectrum_method}};
    emit(a.out, make_manifest("sweep", std::move(params)), std::move(result), csv, ms);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dually weighted matrix model toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand(
        "spectrum", "Eigenvalues of the face-weight matrix C_m");
    spectrum->add_option("--N", spectrum_args.N, "Matrix size")->required();
    spectrum->add_option("--m", spectrum_args.m, "Face-weight index m")
        ->capture_default_str();
    spectrum->add_option("--method", spectrum_args.method, "exact or approx")
        ->check(CLI::IsMember({"exact", "approx"}))
        ->capture_default_str();
    spectrum->add_option("--tol", spectrum_args.tol, "Root residual tolerance")
        ->capture_default_str();
    add_output_flags(spectrum, spectrum_args.out);

    CharArgs char_args;
    auto* chr = app.add_subcommand("char", "Representation data and characters");
    chr->add_option("--rep", char_args.rep,
                    "Partition like 2,1 or trivial/defining/determinant")
        ->capture_default_str();
    chr->add_option("--N", char_args.N, "Matrix size")->required();
    chr->add_option("--q", char_args.q, "Determinant power")->capture_default_str();
    chr->add_option("--class", char_args.cls, "Cycle type for an S_n character value");
    add_output_flags(chr, char_args.out);

    AvgArgs avg_args;
    auto* avg = app.add_subcommand("avg", "Gaussian character averages");
    avg->add_option("--rep", avg_args.rep, "Representation")->capture_default_str();
    avg->add_option("--N", avg_args.N, "Matrix size")->required();
    avg->add_option("--q", avg_args.q, "Determinant power")->capture_default_str();
    avg->add_option("--power", avg_args.power, "Argument power: chi(A) or chi(A^2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    avg->add_option("--method", avg_args.method,
                    "oracle, dfi, pfaffian, large-n or saddle")
        ->check(CLI::IsMember({"oracle", "dfi", "pfaffian", "large-n", "saddle"}))
        ->capture_default_str();
    avg->add_option("--eps", avg_args.eps, "Saddle damping")->capture_default_str();
    add_output_flags(avg, avg_args.out);

    KnArgs kn_args;
    auto* kn = app.add_subcommand("kn", "Proportionality ratio of the k_N guess");
    kn->add_option("--rep", kn_args.rep, "Representation")->capture_default_str();
    kn->add_option("--N", kn_args.N, "Matrix size")->required();
    kn->add_option("--q", kn_args.q, "Determinant power")->capture_default_str();
    add_output_flags(kn, kn_args.out);

    LemmaArgs lemma_args;
    auto* lemma = app.add_subcommand("lemma", "Pairing partial-trace identity");
    lemma->add_option("--n", lemma_args.n, "Tensor factors per side")
        ->check(CLI::Range(1, 5))
        ->capture_default_str();
    lemma->add_option("--gamma", lemma_args.gamma,
                      "Explicit pairing in cycle notation, e.g. \"(1 6)(2 7)...\"");
    add_output_flags(lemma, lemma_args.out);

    ModelArgs model_args;
    auto* model = app.add_subcommand("model", "Propagator tables and word averages");
    model->add_option("--model", model_args.model, "cdt, ising or cdt-ising")
        ->check(CLI::IsMember({"cdt", "ising", "cdt-ising"}))
        ->capture_default_str();
    model->add_option("--gamma", model_args.gamma, "Coupling as an exact rational");
    model->add_option("--word", model_args.word, "Trace word, e.g. \"Tr(A A C2 A A C2)\"");
    model->add_option("--n-rule", model_args.n_rule, "large-n or spectrum:<N>")
        ->capture_default_str();
    model->add_option("--g", model_args.g, "Cubic coupling for --transform")
        ->capture_default_str();
    model->add_flag("--transform", model_args.transform,
                    "Vertex-spin to face-spin coupling map");
    model->add_flag("--order-g2", model_args.order_g2,
                    "g^2 coefficient of the partition function, both routes");
    model->add_option("--seed", model_args.seed, "Seed for the residual check")
        ->capture_default_str();
    add_output_flags(model, model_args.out);

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "CDT ribbon graphs and topology");
    graph->add_option("--build", graph_args.build,
                      "sphere, torus, projective or klein");
    graph->add_option("--sizes", graph_args.sizes, "Strip sizes, e.g. 2,3")
        ->capture_default_str();
    graph->add_option("--variant", graph_args.variant, "Construction variant")
        ->capture_default_str();
    graph->add_option("--classify", graph_args.classify,
                      "Classify a graph JSON file (- for stdin)");
    graph->add_flag("--census", graph_args.census, "Random census over seeds");
    graph->add_option("--seeds", graph_args.seeds, "Census size")->capture_default_str();
    graph->add_option("--strips", graph_args.strips, "Census strip count")
        ->capture_default_str();
    graph->add_option("--min-size", graph_args.min_size, "Census minimum strip size")
        ->capture_default_str();
    graph->add_option("--max-size", graph_args.max_size, "Census maximum strip size")
        ->capture_default_str();
    graph->add_option("--seed", graph_args.seed, "Base seed")->capture_default_str();
    add_output_flags(graph, graph_args.out);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Sweep a computation over N");
    sweep->add_option("--task", sweep_args.task, "qmax, trace-dev, largen-ratio or avg")
        ->required();
    sweep->add_option("--N-list", sweep_args.n_list, "Values like 4,8,12 or 10:60[:5]")
        ->required();
    sweep->add_option("--m", sweep_args.m, "Face-weight index")->capture_default_str();
    sweep->add_option("--rep", sweep_args.rep, "Representation")->capture_default_str();
    sweep->add_option("--q", sweep_args.q, "Determinant power")->capture_default_str();
    sweep->add_option("--power", sweep_args.power, "chi argument power")
        ->capture_default_str();
    sweep->add_option("--method", sweep_args.method, "avg method")->capture_default_str();
    sweep->add_option("--eps", sweep_args.eps, "Saddle damping")->capture_default_str();
    sweep->add_option("--tol", sweep_args.tol, "Spectrum tolerance")->capture_default_str();
    sweep->add_option("--spectrum-method", sweep_args.spectrum_method, "exact or approx")
        ->check(CLI::IsMember({"exact", "approx"}))
        ->capture_default_str();
    add_output_flags(sweep, sweep_args.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    const std::string sub = app.get_subcommands().front()->get_name();
    try {
        if (spectrum->parsed()) return run_spectrum(spectrum_args);
        if (chr->parsed()) return run_char(char_args);
        if (avg->parsed()) return run_avg(avg_args);
        if (kn->parsed()) return run_kn(kn_args);
        if (lemma->parsed()) return run_lemma(lemma_args);
        if (model->parsed()) return run_model(model_args);
        if (graph->parsed()) return run_graph(graph_args);
        if (sweep->parsed()) return run_sweep(sweep_args);
    } catch (const std::exception& e) {
        const json err{{"error", {{"subcommand", sub}, {"message", e.what()}}}};
        std::cout << err.dump(2) << std::endl;
        return 1;
    }
    return 2;
}
