#include <functional>
#include <stdexcept>
#include <vector>

#include "dwmm/glchar.hpp"

namespace dwmm {

namespace {

// Counts Littlewood-Richardson skew tableaux of shape outer/inner with the
// given content: rows weakly increase, columns strictly increase, and the
// reverse reading word (each row right to left, rows top to bottom) is a
// lattice word. Cells are visited in reading-word order so the lattice
// prefix condition can be enforced incrementally.
long count_lr_tableaux(const Partition& outer, const Partition& inner,
                       const Partition& content) {
    const int rows = static_cast<int>(outer.size());
    if (static_cast<int>(inner.size()) > rows) return 0;
    auto inner_at = [&](int r) {
        return r < static_cast<int>(inner.size()) ? inner[static_cast<size_t>(r)] : 0;
    };
    for (int r = 0; r < rows; ++r)
        if (outer[static_cast<size_t>(r)] < inner_at(r)) return 0;
    if (partition_weight(outer) - partition_weight(inner) != partition_weight(content)) return 0;

    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(outer[static_cast<size_t>(r)]), 0);
    std::vector<int> remaining(content.begin(), content.end());
    std::vector<int> placed(content.size(), 0);
    const int maxval = static_cast<int>(content.size());

    long count = 0;
    // Recursion over cells in reading order: (row, column descending).
    std::function<void(int, int)> walk = [&](int r, int c) {
        if (r == rows) {
            ++count;
            return;
        }
        if (c < inner_at(r)) {
            walk(r + 1, r + 1 < rows ? outer[static_cast<size_t>(r + 1)] - 1 : 0);
            return;
        }
        for (int v = 1; v <= maxval; ++v) {
            if (remaining[static_cast<size_t>(v - 1)] == 0) continue;
            // Lattice condition on the reverse reading word.
            if (v > 1 && placed[static_cast<size_t>(v - 1)] >= placed[static_cast<size_t>(v - 2)])
                continue;
            // Row weakly increasing: the cell to the right was already set.
            if (c + 1 < outer[static_cast<size_t>(r)] &&
                fill[static_cast<size_t>(r)][static_cast<size_t>(c + 1)] < v)
                continue;
            // Column strictly increasing: compare with the cell above.
            if (r > 0 && c < outer[static_cast<size_t>(r - 1)] && c >= inner_at(r - 1) &&
                fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] >= v)
                continue;
            // Cells above still inside the inner shape would sit under
            // nothing; a value above an inner cell is unconstrained, but a
            // column passing through the inner shape cannot restart with a
            // smaller value. Column-strictness with the nearest filled cell
            // above suffices because inner cells only occur in a top-left
            // justified block.
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            remaining[static_cast<size_t>(v - 1)]--;
            placed[static_cast<size_t>(v - 1)]++;
            if (c > inner_at(r))
                walk(r, c - 1);
            else
                walk(r + 1, r + 1 < rows ? outer[static_cast<size_t>(r + 1)] - 1 : 0);
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
            remaining[static_cast<size_t>(v - 1)]++;
            placed[static_cast<size_t>(v - 1)]--;
        }
    };
    int c0 = rows > 0 ? outer[0] - 1 : 0;
    if (rows == 0)
        count = 1;
    else
        walk(0, c0);
    return count;
}

}  // namespace

std::map<Partition, long> littlewood_richardson(const Partition& alpha, const Partition& beta) {
    if (!is_partition(alpha) || !is_partition(beta))
        throw std::invalid_argument("littlewood_richardson: not a partition");
    const int total = partition_weight(alpha) + partition_weight(beta);
    if (total > 16) throw std::invalid_argument("littlewood_richardson: size bound exceeded");
    std::map<Partition, long> out;
    for (const Partition& r : partitions_of(total)) {
        long c = count_lr_tableaux(r, alpha, beta);
        if (c > 0) out[r] = c;
    }
    return out;
}

long invariant_dimension(const Partition& alpha, const Partition& beta) {
    long total = 0;
    for (const auto& [shape, mult] : littlewood_richardson(alpha, beta)) total += mult * mult;
    return total;
}

}  // namespace dwmm
