#pragma once

#include <vector>

namespace lalg {

// basis index tuples for exterior powers; strictly increasing when canonical
using IndexTuple = std::vector<int>;

// Sorts t in place. Returns the sign of the sorting permutation, or 0 when
// an index repeats. Every Koszul sign in the project routes through this
// function or merge_sign.
int sort_with_sign(IndexTuple& t);

// Sign of the shuffle merging two strictly increasing tuples a, b into the
// sorted union (a first, b second); 0 when they intersect. When merged is
// non-null it receives the sorted union.
int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple* merged = nullptr);

// All strictly increasing k-tuples from {0,...,n-1} in colex order.
std::vector<IndexTuple> tuples(int n, int k);

// Sum of weights[i] over the tuple.
int tuple_weight(const IndexTuple& t, const std::vector<int>& weights);

// t with position pos removed.
IndexTuple tuple_erase(const IndexTuple& t, int pos);

}  // namespace lalg
