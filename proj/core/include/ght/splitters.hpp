#pragma once

#include <vector>

namespace ght {

// Deterministic family of subsets of [0, n) such that for every T with
// |T| <= k and every j in T some member U satisfies U meets T in {j}.
//
// Sets are residue classes x mod q for a run of consecutive primes q >= P.
// Two distinct elements below n differ by less than n, so at most
// floor(log_P(n-1)) primes >= P divide their difference; taking
// (k-1) floor(log_P(n-1)) + 1 primes leaves one that separates j from all
// of T - {j}. The start P minimising the family size is used, and the
// family of singletons replaces it whenever that is smaller.
std::vector<std::vector<int>> Splitters(int n, int k);

// Exhaustive check of the splitter property (exponential; small n only).
bool IsSplitterFamily(const std::vector<std::vector<int>>& family, int n, int k);

}  // namespace ght
