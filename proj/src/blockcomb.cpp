#include "qsh/blockcomb.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qsh {

AbacusConfig abacus_from_partition(const Partition& p, int e, int beads) {
    if (e < 1) throw std::invalid_argument("abacus_from_partition: e must be >= 1");
    if (beads < (int)p.parts.size())
        throw std::invalid_argument("abacus_from_partition: need at least as many beads as parts");
    AbacusConfig a;
    a.e = e;
    a.beads = beads;
    a.runner_counts.assign((size_t)e, 0);
    for (int i = 1; i <= beads; ++i) {
        int part = i <= (int)p.parts.size() ? p.parts[(size_t)i - 1] : 0;
        int b = part + beads - i;
        a.beta.push_back(b);
        a.runner_counts[(size_t)(b % e)]++;
    }
    return a;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    for (size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] < 0) throw std::invalid_argument("partition_from_beta: negative position");
        if (i && beta[i] == beta[i - 1])
            throw std::invalid_argument("partition_from_beta: duplicate position");
    }
    int b = (int)beta.size();
    std::vector<int> parts;
    for (int i = 1; i <= b; ++i) {
        int part = beta[(size_t)i - 1] - (b - i);
        if (part > 0) parts.push_back(part);
    }
    return make_partition(std::move(parts));
}

std::pair<Partition, int> e_core_and_weight(const Partition& p, int e) {
    if (e < 1) throw std::invalid_argument("e_core_and_weight: e must be >= 1");
    AbacusConfig a = abacus_from_partition(p, e, (int)p.parts.size());
    /* collect bead levels per runner, then slide everything to the top */
    std::vector<std::vector<int>> levels((size_t)e);
    for (int b : a.beta) levels[(size_t)(b % e)].push_back(b / e);
    int weight = 0;
    std::vector<int> new_beta;
    for (int r = 0; r < e; ++r) {
        auto& ls = levels[(size_t)r];
        std::sort(ls.begin(), ls.end());
        for (size_t j = 0; j < ls.size(); ++j) {
            weight += ls[j] - (int)j;
            new_beta.push_back(r + e * (int)j);
        }
    }
    return {partition_from_beta(std::move(new_beta)), weight};
}

bool is_e_core(const Partition& p, int e) { return e_core_and_weight(p, e).second == 0; }

bool is_rouquier_core(const Partition& p, int e, int w) {
    if (e < 1) throw std::invalid_argument("is_rouquier_core: e must be >= 1");
    if (w < 0) throw std::invalid_argument("is_rouquier_core: w must be >= 0");
    if (!is_e_core(p, e)) throw std::invalid_argument("is_rouquier_core: not an e-core");
    int bound = p.size() + e * w + e;
    for (int beads = (int)p.parts.size(); beads <= bound; ++beads) {
        AbacusConfig a = abacus_from_partition(p, e, beads);
        bool ok = true;
        for (int i = 1; i < e && ok; ++i)
            if (a.runner_counts[(size_t)i] < a.runner_counts[(size_t)i - 1] + (w - 1)) ok = false;
        if (ok) return true;
    }
    return false;
}

std::string BlockLabel::str() const {
    std::ostringstream os;
    os << "(w=" << weight << ", core=" << core.str() << ")";
    return os.str();
}

BlockLabel block_label(const Partition& p, int e) {
    auto [core, weight] = e_core_and_weight(p, e);
    return BlockLabel{weight, std::move(core)};
}

std::vector<std::pair<BlockLabel, std::vector<Partition>>> blocks_of(int n, int e) {
    if (n < 0) throw std::invalid_argument("blocks_of: n must be >= 0");
    std::map<BlockLabel, std::vector<Partition>> groups;
    for (const Partition& p : partitions(n)) groups[block_label(p, e)].push_back(p);
    return {groups.begin(), groups.end()};
}

}  // namespace qsh
