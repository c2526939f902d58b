#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsh/symwreath.hpp"

namespace qsh {

/* ------------------------------------------------------------------ */
/* Abacus displays                                                     */
/* ------------------------------------------------------------------ */

struct AbacusConfig {
    int e = 0;      // runner count
    int beads = 0;  // number of beta numbers
    std::vector<int> beta;           // strictly decreasing bead positions
    std::vector<int> runner_counts;  // beads on runner r = positions congruent to r mod e
};

/* Beta numbers lambda_i + beads - i for i = 1..beads.  Requires
   beads >= number of parts. */
AbacusConfig abacus_from_partition(const Partition& p, int e, int beads);

/* Recover the partition from a set of distinct non-negative beta numbers. */
Partition partition_from_beta(std::vector<int> beta);

/* ------------------------------------------------------------------ */
/* Cores, weights, Rouquier cores, block labels                        */
/* ------------------------------------------------------------------ */

/* Push all abacus beads up their runners: returns (e-core, e-weight).
   The weight counts the total number of one-runner bead moves, i.e. the
   number of rim e-hooks removed. */
std::pair<Partition, int> e_core_and_weight(const Partition& p, int e);

bool is_e_core(const Partition& p, int e);

/* True iff some abacus presentation of p (bead counts searched up to
   |p| + e*w + e; runner counts are periodic in the bead count with
   period e, so the bound is safe) has at least w-1 more beads on runner
   i than on runner i-1 for every i = 1..e-1.  Rejects non-cores. */
bool is_rouquier_core(const Partition& p, int e, int w);

struct BlockLabel {
    int weight = 0;
    Partition core;

    bool operator==(const BlockLabel&) const = default;
    bool operator<(const BlockLabel& o) const {
        if (weight != o.weight) return weight < o.weight;
        return core < o.core;
    }
    std::string str() const;  // "(w=1, core=(2,1))"
};

BlockLabel block_label(const Partition& p, int e);

/* Partitions of n grouped by block label, labels in increasing order. */
std::vector<std::pair<BlockLabel, std::vector<Partition>>> blocks_of(int n, int e);

}  // namespace qsh
