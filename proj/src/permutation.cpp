#include "dwmm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dwmm/exactnum.hpp"

namespace dwmm {

Permutation::Permutation(int n) {
    if (n < 0) throw std::domain_error("Permutation: negative degree");
    img_.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img_[static_cast<size_t>(i - 1)] = i;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 1 || v > degree() || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Permutation: not a bijection");
        seen[static_cast<size_t>(v - 1)] = 1;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= degree(); ++i) inv[static_cast<size_t>(of(i) - 1)] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("Permutation product: degree mismatch");
    std::vector<int> img(static_cast<size_t>(a.degree()));
    for (int x = 1; x <= a.degree(); ++x)
        img[static_cast<size_t>(x - 1)] = a.of(b.of(x));
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (int s = 1; s <= degree(); ++s) {
        if (seen[static_cast<size_t>(s - 1)] || of(s) == s) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            cyc.push_back(x);
            seen[static_cast<size_t>(x - 1)] = 1;
            x = of(x);
        } while (x != s);
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<char> seen(img_.size(), 0);
    for (int s = 1; s <= degree(); ++s) {
        if (seen[static_cast<size_t>(s - 1)]) continue;
        ++count;
        int x = s;
        do {
            seen[static_cast<size_t>(x - 1)] = 1;
            x = of(x);
        } while (x != s);
    }
    return count;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> type;
    std::vector<char> seen(img_.size(), 0);
    for (int s = 1; s <= degree(); ++s) {
        if (seen[static_cast<size_t>(s - 1)]) continue;
        int len = 0, x = s;
        do {
            ++len;
            seen[static_cast<size_t>(x - 1)] = 1;
            x = of(x);
        } while (x != s);
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::string Permutation::to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    int maxpt = degree;
    while (pos < text.size()) {
        char ch = text[pos];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++pos;
            continue;
        }
        if (ch != '(')
            throw std::invalid_argument("parse_cycles: expected '('");
        size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("parse_cycles: unbalanced '('");
        std::string body = text.substr(pos + 1, close - pos - 1);
        for (char& c : body)
            if (c == ',') c = ' ';
        std::istringstream is(body);
        std::vector<int> cyc;
        int v;
        while (is >> v) {
            if (v < 1) throw std::invalid_argument("parse_cycles: point < 1");
            cyc.push_back(v);
            maxpt = std::max(maxpt, v);
        }
        if (cyc.size() > 1) cycles.push_back(std::move(cyc));
        pos = close + 1;
    }
    std::vector<int> img(static_cast<size_t>(maxpt));
    std::vector<char> seen(static_cast<size_t>(maxpt), 0);
    for (int i = 1; i <= maxpt; ++i) img[static_cast<size_t>(i - 1)] = i;
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (seen[static_cast<size_t>(from - 1)])
                throw std::invalid_argument("parse_cycles: repeated point");
            seen[static_cast<size_t>(from - 1)] = 1;
            img[static_cast<size_t>(from - 1)] = to;
        }
    return Permutation(std::move(img));
}

namespace {

void class_elements_rec(int n, std::vector<int>& remaining_parts,
                        std::vector<int>& img, std::vector<char>& used,
                        std::vector<Permutation>& out) {
    if (remaining_parts.empty()) {
        out.emplace_back(img);  // untouched points stay fixed
        return;
    }
    int start = 0;
    for (int i = 1; i <= n; ++i)
        if (!used[static_cast<size_t>(i - 1)]) {
            start = i;
            break;
        }
    if (start == 0) throw std::logic_error("class_elements: parts overflow");
    // The cycle containing `start`: try each distinct remaining part size,
    // then each ordered choice of the other cycle members. Anchoring every
    // cycle at its smallest unused element makes the enumeration
    // duplicate-free.
    int prev_size = -1;
    for (size_t pi = 0; pi < remaining_parts.size(); ++pi) {
        int k = remaining_parts[pi];
        if (k == prev_size) continue;
        prev_size = k;
        remaining_parts.erase(remaining_parts.begin() +
                              static_cast<long>(pi));

        used[static_cast<size_t>(start - 1)] = 1;
        // Depth-first over ordered (k-1)-tuples of unused points.
        std::vector<int> choice;
        std::function<void()> pick = [&]() {
            if (static_cast<int>(choice.size()) == k - 1) {
                int prev = start;
                for (int v : choice) {
                    img[static_cast<size_t>(prev - 1)] = v;
                    prev = v;
                }
                img[static_cast<size_t>(prev - 1)] = start;
                class_elements_rec(n, remaining_parts, img, used, out);
                img[static_cast<size_t>(start - 1)] = start;
                for (int v : choice) img[static_cast<size_t>(v - 1)] = v;
                return;
            }
            for (int v = 1; v <= n; ++v) {
                if (used[static_cast<size_t>(v - 1)]) continue;
                used[static_cast<size_t>(v - 1)] = 1;
                choice.push_back(v);
                pick();
                choice.pop_back();
                used[static_cast<size_t>(v - 1)] = 0;
            }
        };
        pick();
        used[static_cast<size_t>(start - 1)] = 0;

        remaining_parts.insert(remaining_parts.begin() + static_cast<long>(pi),
                               k);
    }
}

}  // namespace

std::vector<Permutation> class_elements(int n, const std::vector<int>& type) {
    std::vector<int> parts = type;
    int total = 0;
    for (int p : type) {
        if (p < 1) throw std::invalid_argument("class_elements: part < 1");
        total += p;
    }
    if (total != n)
        throw std::invalid_argument("class_elements: type must sum to n");
    std::sort(parts.begin(), parts.end());

    std::vector<Permutation> out;
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) img[static_cast<size_t>(i - 1)] = i;
    std::vector<char> used(static_cast<size_t>(n), 0);
    class_elements_rec(n, parts, img, used, out);
    return out;
}

BigInt class_size(int n, const std::vector<int>& type) {
    std::map<int, int> mult;
    int total = 0;
    for (int p : type) {
        ++mult[p];
        total += p;
    }
    if (total != n)
        throw std::invalid_argument("class_size: type must sum to n");
    BigInt denom = 1;
    for (auto [k, c] : mult)
        denom *= big_pow(BigInt(k), static_cast<unsigned long>(c)) *
                 factorial(c);
    BigInt num = factorial(n);
    if (num % denom != 0) throw std::logic_error("class_size: not integral");
    return num / denom;
}

std::vector<int> pairing_type(int n) {
    if (n < 0 || n % 2 != 0)
        throw std::domain_error("pairing_type: degree must be even");
    return std::vector<int>(static_cast<size_t>(n / 2), 2);
}

}  // namespace dwmm
