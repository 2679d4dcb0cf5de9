#pragma once

#include <vector>

namespace degent {

// Degree sequences are plain non-increasing vectors of non-negative ints.
using DegreeSequence = std::vector<int>;

// Degree sequences of the two sides of a bipartition, each non-increasing.
struct BipartitePair {
    DegreeSequence x;
    DegreeSequence y;
    bool operator==(const BipartitePair&) const = default;
};

enum class MajorizeResult {
    a_strictly_majorizes,
    equal,
    b_strictly_majorizes,
    incomparable,
};

// Prefix-sum comparison after zero-padding to equal length.
// Throws std::invalid_argument when the totals differ (the relation is
// only defined for equal sums).
MajorizeResult majorize_compare(const DegreeSequence& a, const DegreeSequence& b);

// Partition transpose: result[i-1] = #{j : c_j >= i}, length max(c).
DegreeSequence conjugate(const DegreeSequence& c);

// Erdos-Gallai test; input need not be sorted.
bool is_graphical(DegreeSequence d);

// Gale-Ryser test for realizability as a simple bipartite graph with the
// given side sizes.
bool is_bigraphical(const BipartitePair& p);

// All graphical non-increasing sequences of length n, sum 2m, max entry
// <= n-1, in ascending lexicographic order. Requires n <= 12.
std::vector<DegreeSequence> enumerate_graphical(int n, int m);

// All realizable side-sequence pairs with |x| + |y| = n and sum m, each
// unordered pair emitted once. Requires n <= 12.
std::vector<BipartitePair> enumerate_bigraphical(int n, int m);

}  // namespace degent
