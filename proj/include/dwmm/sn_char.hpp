#pragma once

#include <vector>

#include "dwmm/bigint.hpp"

namespace dwmm {

// Partitions are weakly decreasing vectors of positive ints; the empty
// vector is the partition of 0.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_weight(const Partition& p);
std::vector<Partition> partitions_of(int n);

// "3,1,1" <-> {3,1,1}; "" is the empty partition.
Partition parse_partition(const std::string& text);
std::string partition_to_string(const Partition& p);

// Dimension of the S_n irrep labelled by `shape` (hook length formula).
BigInt sn_dimension(const Partition& shape);

// Irreducible S_n character chi_shape on the class `type` (both partitions
// of the same n), by the Murnaghan-Nakayama rule. n <= 12 supported.
BigInt sn_character(const Partition& shape, const Partition& type);

}  // namespace dwmm
