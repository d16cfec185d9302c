#include "dwmm/sn_char.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "dwmm/exactnum.hpp"

namespace dwmm {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_weight(const Partition& p) {
    int n = 0;
    for (int x : p) n += x;
    return n;
}

static void partitions_rec(int n, int maxpart, Partition& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Partition parse_partition(const std::string& text) {
    Partition p;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        if (!tok.empty()) p.push_back(std::stoi(tok));
        pos = next + 1;
    }
    if (!is_partition(p))
        throw std::invalid_argument("parse_partition: not weakly decreasing");
    return p;
}

std::string partition_to_string(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

BigInt sn_dimension(const Partition& shape) {
    if (!is_partition(shape))
        throw std::invalid_argument("sn_dimension: invalid shape");
    int n = partition_weight(shape);
    BigInt hooks = 1;
    int rows = static_cast<int>(shape.size());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < shape[static_cast<size_t>(i)]; ++j) {
            int arm = shape[static_cast<size_t>(i)] - j - 1;
            int leg = 0;
            for (int r = i + 1; r < rows; ++r)
                if (shape[static_cast<size_t>(r)] > j) ++leg;
            hooks *= arm + leg + 1;
        }
    BigInt num = factorial(n);
    if (num % hooks != 0) throw std::logic_error("sn_dimension: not integral");
    return num / hooks;
}

namespace {

// Border strips of length `len` removable from `shape`, returned as the
// resulting shapes with the strip height (rows spanned minus one).
// A border strip removal keeping a valid shape is parametrised by the row
// where the strip starts (its topmost row).
std::vector<std::pair<Partition, int>> strip_removals(const Partition& shape,
                                                      int len) {
    std::vector<std::pair<Partition, int>> out;
    int rows = static_cast<int>(shape.size());
    // Beta-numbers trick: first-column hook lengths b_i = shape_i + rows - 1 - i
    // form a strictly decreasing set; removing a border strip of length `len`
    // means replacing some b_i by b_i - len when the result is a fresh
    // non-negative value; height = number of b_j strictly between them.
    std::vector<int> beta(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        beta[static_cast<size_t>(i)] =
            shape[static_cast<size_t>(i)] + rows - 1 - i;
    for (int i = 0; i < rows; ++i) {
        int nb = beta[static_cast<size_t>(i)] - len;
        if (nb < 0) continue;
        bool clash = false;
        int between = 0;
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            int bj = beta[static_cast<size_t>(j)];
            if (bj == nb) clash = true;
            if (bj < beta[static_cast<size_t>(i)] && bj > nb) ++between;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        Partition ns(static_cast<size_t>(rows));
        for (int r = 0; r < rows; ++r)
            ns[static_cast<size_t>(r)] =
                nbeta[static_cast<size_t>(r)] - (rows - 1 - r);
        while (!ns.empty() && ns.back() == 0) ns.pop_back();
        out.emplace_back(std::move(ns), between);
    }
    return out;
}

BigInt mn_rec(const Partition& shape, const Partition& type,
              std::map<std::pair<Partition, Partition>, BigInt>& memo) {
    if (shape.empty()) return 1;
    auto key = std::make_pair(shape, type);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int len = type.front();
    Partition rest(type.begin() + 1, type.end());
    BigInt sum = 0;
    for (const auto& [ns, height] : strip_removals(shape, len)) {
        BigInt term = mn_rec(ns, rest, memo);
        if (height % 2 != 0) term = -term;
        sum += term;
    }
    memo[key] = sum;
    return sum;
}

}  // namespace

BigInt sn_character(const Partition& shape, const Partition& type) {
    if (!is_partition(shape) || !is_partition(type))
        throw std::invalid_argument("sn_character: invalid partition");
    int n = partition_weight(shape);
    if (partition_weight(type) != n)
        throw std::invalid_argument("sn_character: weight mismatch");
    if (n > 12)
        throw std::domain_error("sn_character: n > 12 unsupported");
    static std::map<std::pair<Partition, Partition>, BigInt> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return mn_rec(shape, type, memo);
}

}  // namespace dwmm
