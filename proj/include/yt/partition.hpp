#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace yt {

// Weakly decreasing nonnegative sequence. Trailing zeros are allowed and
// ignored by comparisons that go through trim().
using Partition = std::vector<int64_t>;

// Nonnegative sequence of letter counts (m_1, ..., m_k).
using Weight = std::vector<int64_t>;

bool is_partition(const Partition& p);
Partition trim(Partition p);
Partition pad(Partition p, size_t n);
int64_t part(const Partition& p, size_t i);  // 0-based, zero past the end
int64_t total(const std::vector<int64_t>& v);
size_t length(const Partition& p);  // number of nonzero parts
bool contains(const Partition& outer, const Partition& inner);
bool same_partition(const Partition& a, const Partition& b);
Weight reversed(Weight w);  // a -> a*

// Enumerate all partitions of n with at most max_len parts.
std::vector<Partition> partitions_of(int64_t n, size_t max_len);
// All partitions nu with nu contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda);

std::string to_string(const std::vector<int64_t>& v);

}  // namespace yt
