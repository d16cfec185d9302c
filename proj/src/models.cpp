#include "dwmm/models.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dwmm/exactnum.hpp"

namespace dwmm {

namespace {

// Dense polynomials in gamma, ascending coefficients, no trailing zeros.
using Poly = std::vector<BigRational>;

void strip(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), BigRational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    strip(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    strip(r);
    return r;
}

// Quotient of a by b (b nonzero); the remainder is left in rem.
Poly poly_divmod(Poly a, const Poly& b, Poly& rem) {
    Poly q;
    if (a.size() >= b.size() && !b.empty()) {
        q.assign(a.size() - b.size() + 1, BigRational(0));
        for (long k = static_cast<long>(a.size() - b.size()); k >= 0; --k) {
            const size_t top = static_cast<size_t>(k) + b.size() - 1;
            if (a[top] == 0) continue;
            const BigRational c = a[top] / b.back();
            q[static_cast<size_t>(k)] = c;
            for (size_t i = 0; i < b.size(); ++i) a[static_cast<size_t>(k) + i] -= c * b[i];
        }
    }
    strip(a);
    rem = std::move(a);
    strip(q);
    return q;
}

// Monic gcd by the Euclidean algorithm; gcd with zero is the monic other.
Poly poly_gcd(Poly a, Poly b) {
    strip(a);
    strip(b);
    while (!b.empty()) {
        Poly r;
        poly_divmod(std::move(a), b, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const BigRational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

BigRational poly_eval(const Poly& p, const BigRational& x) {
    BigRational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (long k = static_cast<long>(p.size()) - 1; k >= 0; --k) {
        BigRational c = p[static_cast<size_t>(k)];
        if (c == 0) continue;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        const bool unit = (c == 1 && k != 0);
        if (!unit) out += dwmm::to_string(c);
        if (k != 0) {
            if (!unit) out += " ";
            out += var;
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace

RationalFunction::RationalFunction(const BigRational& constant)
    : num_{constant}, den_{BigRational(1)} {
    strip(num_);
}

RationalFunction RationalFunction::gamma_power(long k) {
    RationalFunction r;
    if (k >= 0) {
        r.num_.assign(static_cast<size_t>(k) + 1, BigRational(0));
        r.num_.back() = 1;
    } else {
        r.num_ = {BigRational(1)};
        r.den_.assign(static_cast<size_t>(-k) + 1, BigRational(0));
        r.den_.back() = 1;
    }
    return r;
}

RationalFunction RationalFunction::from_coeffs(std::vector<BigRational> num,
                                               std::vector<BigRational> den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

void RationalFunction::normalize() {
    strip(num_);
    strip(den_);
    if (den_.empty()) throw std::domain_error("RationalFunction: zero denominator");
    if (num_.empty()) {
        den_ = {BigRational(1)};
        return;
    }
    const Poly g = poly_gcd(num_, den_);
    if (g.size() > 1) {
        Poly rem;
        num_ = poly_divmod(std::move(num_), g, rem);
        den_ = poly_divmod(std::move(den_), g, rem);
    }
    const BigRational lc = den_.back();
    if (lc != 1) {
        for (auto& c : num_) c /= lc;
        for (auto& c : den_) c /= lc;
    }
}

BigRational RationalFunction::eval(const BigRational& gamma) const {
    const BigRational d = poly_eval(den_, gamma);
    if (d == 0) throw std::domain_error("RationalFunction: pole at the requested coupling");
    return poly_eval(num_, gamma) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    if (den_.size() == 1 && den_[0] == 1) return poly_to_string(num_, var);
    return "(" + poly_to_string(num_, var) + ")/(" + poly_to_string(den_, var) + ")";
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    RationalFunction r;
    r.num_ = poly_add(poly_mul(x.num_, y.den_), poly_mul(y.num_, x.den_));
    r.den_ = poly_mul(x.den_, y.den_);
    r.normalize();
    return r;
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return x + (-y);
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    RationalFunction r;
    r.num_ = poly_mul(x.num_, y.num_);
    r.den_ = poly_mul(x.den_, y.den_);
    r.normalize();
    return r;
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    RationalFunction r;
    r.num_ = poly_mul(x.num_, y.den_);
    r.den_ = poly_mul(x.den_, y.num_);
    r.normalize();
    return r;
}

PropagatorSpec::PropagatorSpec(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw std::invalid_argument("PropagatorSpec: no field symbols");
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] == "C2")
            throw std::invalid_argument("PropagatorSpec: C2 is reserved for insertions");
        for (size_t j = i + 1; j < symbols_.size(); ++j)
            if (symbols_[i] == symbols_[j])
                throw std::invalid_argument("PropagatorSpec: duplicate symbol " + symbols_[i]);
    }
}

int PropagatorSpec::index_of(const std::string& symbol) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == symbol) return static_cast<int>(i);
    throw std::invalid_argument("PropagatorSpec: unknown field symbol " + symbol);
}

void PropagatorSpec::set_kernel(const std::string& a, const std::string& b,
                                ContractionKernel k) {
    if (k.kind == ContractionKind::Zero || k.weight.is_zero()) k = ContractionKernel{};
    const int ia = index_of(a), ib = index_of(b);
    table_[std::minmax(ia, ib)] = std::move(k);
}

const ContractionKernel& PropagatorSpec::kernel(const std::string& a,
                                                const std::string& b) const {
    static const ContractionKernel zero{};
    const int ia = index_of(a), ib = index_of(b);
    const auto it = table_.find(std::minmax(ia, ib));
    return it == table_.end() ? zero : it->second;
}

PropagatorSpec PropagatorSpec::evaluated_at(const BigRational& gamma) const {
    PropagatorSpec out(symbols_);
    for (const auto& [key, k] : table_) {
        ContractionKernel ek{k.kind, RationalFunction(k.weight.eval(gamma))};
        out.set_kernel(symbols_[static_cast<size_t>(key.first)],
                       symbols_[static_cast<size_t>(key.second)], std::move(ek));
    }
    return out;
}

PropagatorSpec invert_kinetic(const KineticForm& form) {
    const size_t k = form.symbols.size();
    if (k == 0) throw std::invalid_argument("invert_kinetic: empty form");
    if (form.timelike.size() != k || form.entries.size() != k)
        throw std::invalid_argument("invert_kinetic: inconsistent sizes");
    for (const auto& row : form.entries)
        if (row.size() != k) throw std::invalid_argument("invert_kinetic: non-square form");
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            if (!(form.entries[i][j] == form.entries[j][i]))
                throw std::invalid_argument("invert_kinetic: form is not symmetric");

    // Gauss-Jordan over the rational-function field, identity augmented.
    auto a = form.entries;
    std::vector<std::vector<RationalFunction>> inv(k, std::vector<RationalFunction>(k));
    for (size_t i = 0; i < k; ++i) inv[i][i] = RationalFunction(BigRational(1));
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && a[piv][col].is_zero()) ++piv;
        if (piv == k) throw std::invalid_argument("invert_kinetic: singular kinetic form");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const RationalFunction scale = RationalFunction(BigRational(1)) / a[col][col];
        for (size_t j = 0; j < k; ++j) {
            a[col][j] = a[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for (size_t row = 0; row < k; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const RationalFunction f = a[row][col];
            for (size_t j = 0; j < k; ++j) {
                a[row][j] = a[row][j] - f * a[col][j];
                inv[row][j] = inv[row][j] - f * inv[col][j];
            }
        }
    }

    PropagatorSpec spec(form.symbols);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            if (inv[i][j].is_zero()) continue;
            if (form.timelike[i] != form.timelike[j])
                throw std::invalid_argument(
                    "invert_kinetic: nonzero coupling between delta- and C2-kernel fields");
            const ContractionKind kind =
                form.timelike[i] ? ContractionKind::C2C2 : ContractionKind::DeltaDelta;
            spec.set_kernel(form.symbols[i], form.symbols[j], {kind, inv[i][j]});
        }
    return spec;
}

KineticForm cdt_kinetic() {
    const RationalFunction one{BigRational(1)}, zero;
    return {{"A", "B"}, {0, 1}, {{one, zero}, {zero, one}}};
}

KineticForm ising_kinetic() {
    const RationalFunction one{BigRational(1)};
    const RationalFunction c = -RationalFunction::gamma_power(-2);
    return {{"M+", "M-"}, {0, 0}, {{one, c}, {c, one}}};
}

KineticForm cdt_ising_kinetic() {
    const RationalFunction one{BigRational(1)}, zero;
    const RationalFunction c = -RationalFunction::gamma_power(1);
    return {{"A+", "A-", "B+", "B-"},
            {0, 0, 1, 1},
            {{one, c, zero, zero},
             {c, one, zero, zero},
             {zero, zero, one, c},
             {zero, zero, c, one}}};
}

PropagatorSpec cdt_spec() { return invert_kinetic(cdt_kinetic()); }
PropagatorSpec ising_spec() { return invert_kinetic(ising_kinetic()); }
PropagatorSpec cdt_ising_spec() { return invert_kinetic(cdt_ising_kinetic()); }

CouplingMap coupling_transform(double gamma, double g) {
    if (!(std::fabs(gamma) > 1.0))
        throw std::domain_error("coupling_transform: requires |gamma| > 1");
    CouplingMap m;
    m.gamma = gamma;
    m.g = g;
    const double gi2 = 1.0 / (gamma * gamma);
    m.gamma_prime_inv_sq = (gamma - 1.0 / gamma) / (gamma + 1.0 / gamma);
    m.gamma_prime = 1.0 / std::sqrt(m.gamma_prime_inv_sq);
    // The rotated fields are U = s K, V = s L with s^2 = gamma' (1 - gamma^-2),
    // and the cubic part of the action is -(g/sqrt(2)) Tr(K^3 + 3 K L^2), so
    // matching -g' Tr(U^3 + 3 U V^2) fixes g' = g / (sqrt(2) s^3).
    const double s2 = m.gamma_prime * (1.0 - gi2);
    m.g_prime = g / (std::sqrt(2.0) * std::pow(s2, 1.5));
    return m;
}

namespace {

using C33 = std::array<std::complex<double>, 9>;

C33 matmul(const C33& a, const C33& b) {
    C33 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j)
                r[static_cast<size_t>(3 * i + j)] +=
                    a[static_cast<size_t>(3 * i + k)] * b[static_cast<size_t>(3 * k + j)];
    return r;
}

std::complex<double> mtrace(const C33& a) { return a[0] + a[4] + a[8]; }

C33 combine(double ca, const C33& a, double cb, const C33& b) {
    C33 r{};
    for (size_t i = 0; i < 9; ++i) r[i] = ca * a[i] + cb * b[i];
    return r;
}

}  // namespace

double coupling_action_residual(double gamma, double g, unsigned long seed, int trials) {
    const CouplingMap cm = coupling_transform(gamma, g);
    const double gi2 = 1.0 / (gamma * gamma);
    const double s = std::sqrt(cm.gamma_prime * (1.0 - gi2));
    const double r2 = 1.0 / std::sqrt(2.0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    auto random_hermitian = [&]() {
        C33 h{};
        for (int i = 0; i < 3; ++i) {
            h[static_cast<size_t>(4 * i)] = uni(rng);
            for (int j = i + 1; j < 3; ++j) {
                const double re = uni(rng), im = uni(rng);
                h[static_cast<size_t>(3 * i + j)] = {re, im};
                h[static_cast<size_t>(3 * j + i)] = {re, -im};
            }
        }
        return h;
    };

    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const C33 mp = random_hermitian();
        const C33 mm = random_hermitian();
        const C33 mp2 = matmul(mp, mp), mm2 = matmul(mm, mm);
        const double s1 =
            3.0 * std::real(0.5 * mtrace(mp2) + 0.5 * mtrace(mm2) -
                            gi2 * mtrace(matmul(mp, mm)) - g * mtrace(matmul(mp2, mp)) -
                            g * mtrace(matmul(mm2, mm)));

        const C33 u = combine(s * r2, mp, s * r2, mm);   // s K
        const C33 v = combine(s * r2, mp, -s * r2, mm);  // s L
        const C33 u2 = matmul(u, u), v2 = matmul(v, v);
        const double s2v =
            3.0 * std::real(0.5 / cm.gamma_prime * mtrace(u2) +
                            0.5 * cm.gamma_prime * mtrace(v2) -
                            cm.g_prime * mtrace(matmul(u2, u)) -
                            3.0 * cm.g_prime * mtrace(matmul(u, v2)));
        const double rel = std::fabs(s1 - s2v) / std::max(1.0, std::fabs(s1));
        worst = std::max(worst, rel);
    }
    return worst;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Word Word::parse(const std::string& text) {
    Word w;
    std::string rest = text;
    std::vector<std::string> factors;
    size_t pos = 0;
    while (pos <= rest.size()) {
        const size_t semi = rest.find(';', pos);
        factors.push_back(rest.substr(pos, semi == std::string::npos ? std::string::npos
                                                                     : semi - pos));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    for (std::string factor : factors) {
        factor = trim(factor);
        if (factor.empty()) continue;
        if ((factor.rfind("Tr(", 0) == 0 || factor.rfind("tr(", 0) == 0) &&
            factor.back() == ')')
            factor = factor.substr(3, factor.size() - 4);
        for (auto& ch : factor)
            if (ch == ',') ch = ' ';
        std::vector<std::string> trace;
        std::istringstream in(factor);
        std::string token;
        while (in >> token) {
            long reps = 1;
            const size_t caret = token.find('^');
            if (caret != std::string::npos) {
                try {
                    reps = std::stol(token.substr(caret + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("Word: bad repetition in " + token);
                }
                if (reps < 1) throw std::invalid_argument("Word: bad repetition in " + token);
                token = token.substr(0, caret);
            }
            if (token.empty()) throw std::invalid_argument("Word: empty symbol");
            for (long r = 0; r < reps; ++r) trace.push_back(token);
        }
        if (trace.empty()) throw std::invalid_argument("Word: empty trace factor");
        w.traces.push_back(std::move(trace));
    }
    if (w.traces.empty()) throw std::invalid_argument("Word: empty word");
    return w;
}

std::string Word::to_string() const {
    std::string out;
    for (const auto& tr : traces) {
        if (!out.empty()) out += "; ";
        out += "Tr(";
        for (size_t i = 0; i < tr.size(); ++i) {
            if (i) out += " ";
            out += tr[i];
        }
        out += ")";
    }
    return out;
}

long Word::field_count() const {
    long n = 0;
    for (const auto& tr : traces)
        for (const auto& s : tr)
            if (s != "C2") ++n;
    return n;
}

namespace {

struct Flat {
    std::vector<std::string> sym;  // one entry per token
    std::vector<int> intrinsic;    // matching between the 2T slot ends
    std::vector<int> fields;       // token ids of Gaussian fields
    std::vector<int> c2tokens;     // token ids of C2 insertions
};

Flat flatten(const Word& word) {
    Flat f;
    std::vector<std::pair<int, int>> spans;  // (start, length) per trace
    for (const auto& tr : word.traces) {
        if (tr.empty()) throw std::invalid_argument("Word: empty trace factor");
        spans.emplace_back(static_cast<int>(f.sym.size()), static_cast<int>(tr.size()));
        for (const auto& s : tr) f.sym.push_back(s);
    }
    f.intrinsic.assign(2 * f.sym.size(), -1);
    for (const auto& [start, len] : spans)
        for (int i = 0; i < len; ++i) {
            const int p = start + i, q = start + (i + 1) % len;
            f.intrinsic[static_cast<size_t>(2 * p + 1)] = 2 * q;
            f.intrinsic[static_cast<size_t>(2 * q)] = 2 * p + 1;
        }
    for (int p = 0; p < static_cast<int>(f.sym.size()); ++p)
        (f.sym[static_cast<size_t>(p)] == "C2" ? f.c2tokens : f.fields).push_back(p);
    return f;
}

struct KernelValue {
    ContractionKind kind = ContractionKind::Zero;
    BigRational value;
};

// Enumerates Wick pairings of the word's field tokens; for each complete
// pairing with nonvanishing weight product w, reports w and the number of
// C2-carrying bonds on every closed index loop.
template <typename Emit>
void run_pairings(const Word& word, const PropagatorSpec& spec, const BigRational& gamma,
                  Emit&& emit) {
    const Flat f = flatten(word);
    for (const auto& s : f.sym)
        if (s != "C2") (void)spec.kernel(s, s);  // validates the symbol
    if (static_cast<long>(f.fields.size()) > 12)
        throw std::invalid_argument("wick_word_average: more than 12 field symbols");
    if (f.fields.size() % 2 != 0) return;  // odd words average to zero

    std::map<std::pair<std::string, std::string>, KernelValue> cache;
    auto fetch = [&](const std::string& a, const std::string& b) -> const KernelValue& {
        std::pair<std::string, std::string> key = std::minmax(a, b);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const ContractionKernel& k = spec.kernel(a, b);
            KernelValue kv;
            kv.kind = k.kind;
            if (k.kind != ContractionKind::Zero) kv.value = k.weight.eval(gamma);
            it = cache.emplace(std::move(key), std::move(kv)).first;
        }
        return it->second;
    };

    const int T = static_cast<int>(f.sym.size());
    std::vector<char> paired(f.fields.size(), 0);
    std::vector<int> bond_to(static_cast<size_t>(2 * T), -1);
    std::vector<char> bond_c2(static_cast<size_t>(2 * T), 0);
    for (const int p : f.c2tokens) {
        bond_to[static_cast<size_t>(2 * p)] = 2 * p + 1;
        bond_to[static_cast<size_t>(2 * p + 1)] = 2 * p;
        bond_c2[static_cast<size_t>(2 * p)] = 1;
        bond_c2[static_cast<size_t>(2 * p + 1)] = 1;
    }
    std::vector<char> seen(static_cast<size_t>(2 * T), 0);
    std::vector<int> loops;

    auto rec = [&](auto&& self, size_t from, const BigRational& w) -> void {
        size_t u = from;
        while (u < f.fields.size() && paired[u]) ++u;
        if (u == f.fields.size()) {
            std::fill(seen.begin(), seen.end(), 0);
            loops.clear();
            for (int e = 0; e < 2 * T; ++e) {
                if (seen[static_cast<size_t>(e)]) continue;
                int cur = e, c2 = 0;
                do {
                    seen[static_cast<size_t>(cur)] = 1;
                    const int nxt = bond_to[static_cast<size_t>(cur)];
                    seen[static_cast<size_t>(nxt)] = 1;
                    c2 += bond_c2[static_cast<size_t>(cur)];
                    cur = f.intrinsic[static_cast<size_t>(nxt)];
                } while (cur != e);
                loops.push_back(c2);
            }
            emit(w, loops, static_cast<int>(f.fields.size() / 2));
            return;
        }
        const int tu = f.fields[u];
        for (size_t v = u + 1; v < f.fields.size(); ++v) {
            if (paired[v]) continue;
            const int tv = f.fields[v];
            const KernelValue& kv = fetch(f.sym[static_cast<size_t>(tu)],
                                          f.sym[static_cast<size_t>(tv)]);
            if (kv.kind == ContractionKind::Zero || kv.value == 0) continue;
            paired[u] = paired[v] = 1;
            const char flag = (kv.kind == ContractionKind::C2C2) ? 1 : 0;
            bond_to[static_cast<size_t>(2 * tu)] = 2 * tv + 1;
            bond_to[static_cast<size_t>(2 * tv + 1)] = 2 * tu;
            bond_to[static_cast<size_t>(2 * tu + 1)] = 2 * tv;
            bond_to[static_cast<size_t>(2 * tv)] = 2 * tu + 1;
            bond_c2[static_cast<size_t>(2 * tu)] = flag;
            bond_c2[static_cast<size_t>(2 * tv + 1)] = flag;
            bond_c2[static_cast<size_t>(2 * tu + 1)] = flag;
            bond_c2[static_cast<size_t>(2 * tv)] = flag;
            self(self, u + 1, w * kv.value);
            paired[u] = paired[v] = 0;
        }
    };
    rec(rec, 0, BigRational(1));
}

}  // namespace

LaurentPoly wick_word_average(const Word& word, const PropagatorSpec& spec,
                              const BigRational& gamma) {
    LaurentPoly out;
    run_pairings(word, spec, gamma,
                 [&](const BigRational& w, const std::vector<int>& loops, int npairs) {
                     long expo = -npairs;
                     for (const int c : loops) {
                         if (c != 0 && c != 2) return;  // Tr(C2^p) = N delta_{p,2}
                         ++expo;
                     }
                     out.add(expo, w);
                 });
    return out;
}

double wick_word_average(const Word& word, const PropagatorSpec& spec,
                         const BigRational& gamma, const Spectrum& c2) {
    std::map<int, std::complex<long double>> traces;
    auto trace_of = [&](int p) -> std::complex<long double> {
        if (p == 0) return static_cast<long double>(c2.N);
        const auto it = traces.find(p);
        if (it != traces.end()) return it->second;
        const auto v = c2.power_trace(p);
        traces.emplace(p, v);
        return v;
    };
    std::complex<long double> total = 0;
    run_pairings(word, spec, gamma,
                 [&](const BigRational& w, const std::vector<int>& loops, int npairs) {
                     std::complex<long double> t = static_cast<long double>(to_double(w));
                     for (const int c : loops) t *= trace_of(c);
                     t /= std::pow(static_cast<long double>(c2.N),
                                   static_cast<long double>(npairs));
                     total += t;
                 });
    return static_cast<double>(total.real());
}

OrderG2 z_order_g2() {
    OrderG2 out;
    const std::vector<Partition> reps = {{2}, {1, 1}};
    for (const Partition& R : reps) {
        // The expansion coefficient and the pairing-class character ratio are
        // independent of the matrix size, so the smallest fitting size works.
        const ShiftedWeights h = from_partition(R, 2);
        const long n = partition_weight(R);
        const BigRational d{sn_dimension(R)};
        const BigRational scalar = expansion_coefficient(h) * chi_C2_over_C1(h);

        LaurentPoly numer;
        numer.add(n, scalar * d / BigRational(factorial(n)));  // chi_R(C1) symbolic
        numer = numer * oracle_chiA2_symbolic(R);

        LaurentPoly glpoly;  // GL dimension as a polynomial in N
        glpoly.add(0, d / BigRational(factorial(n)));
        for (size_t i = 0; i < R.size(); ++i)
            for (int j = 0; j < R[i]; ++j) {
                LaurentPoly cell;
                cell.add(1, BigRational(1));
                cell.add(0, BigRational(j - static_cast<long>(i)));
                glpoly = glpoly * cell;
            }

        LaurentPoly term = divide_exact(numer, glpoly);
        LaurentPoly half;
        half.add(0, BigRational(1, 2));  // the (N g^2 / 2) prefactor's g^2/2
        term = term * half;
        out.character_route = out.character_route + term;
        out.per_representation.emplace(R, std::move(term));
    }

    const Word word = Word::parse("A A C2 A A C2");
    LaurentPoly half_n;
    half_n.add(1, BigRational(1, 2));
    out.wick_route = half_n * wick_word_average(word, cdt_spec(), BigRational(0));
    return out;
}

DoubleExpansionTerm double_expansion_term(const ShiftedWeights& h1,
                                          const ShiftedWeights& h2) {
    DoubleExpansionTerm t;
    t.n1 = h1.n();
    t.n2 = h2.n();
    t.coefficient_product = expansion_coefficient(h1) * expansion_coefficient(h2);
    return t;
}

}  // namespace dwmm
