#pragma once

#include <map>

#include "theta_asym/pv.hpp"

namespace theta_asym {

// crank statistic of one partition (parts in any order)
int crank_of_partition(const std::vector<int>& parts);

// counts M(m, n) by enumerating all partitions of n
std::map<int, long> crank_oracle(int n);

// generating-function convention: same as crank_oracle except the classic
// n = 1 patch M(-1,1) = M(1,1) = 1, M(0,1) = -1
std::map<int, long> crank_counts_gf(int n);

// partition numbers by the pentagonal recurrence
long partition_count(int n);

// coefficient of zeta^m q^n in the crank generating function, via the circle method
CoefficientRecord crank_extract(double m, int n, const QuadratureConfig& quad = {},
                                const TruncationBudget& budget = {});

} // namespace theta_asym
