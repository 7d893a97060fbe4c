#ifndef QMACDO_PARTITIONS_HPP
#define QMACDO_PARTITIONS_HPP

#include <functional>

#include "field.hpp"

namespace qmacdo {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int weight(const Partition& p);
inline int length(const Partition& p) { return static_cast<int>(p.size()); }
inline int part(const Partition& p, int i) {  // 1-based, 0 past the end
    return i >= 1 && i <= length(p) ? p[i - 1] : 0;
}

Partition conjugate(const Partition& p);

// arm/leg of the 1-based box (i,j)
int arm(const Partition& p, int i, int j);
int leg(const Partition& p, int i, int j);

// all partitions of weight k, in descending lex order ((k) first, (1^k) last)
std::vector<Partition> partitions_of_weight(int k);
// weight-graded enumeration 0..bound, descending lex inside each weight;
// the visitor returns false to stop early
void for_partitions_up_to(int bound, const std::function<bool(const Partition&)>& visit);

// lambda_{n+1} <= m: lambda fits in the fat (n,m) hook
bool fat_hook_contains(int n, int m, const Partition& lam);
// split into mu = (lambda_1..lambda_n) and nu = conjugate of the rest;
// requires membership in the hook, nu then has length <= m
void hook_split(int n, int m, const Partition& lam, Partition& mu, Partition& nu);

bool contains(const Partition& outer, const Partition& inner);
std::vector<Partition> subpartitions(const Partition& lam);

// prod over boxes of (1 - q^arm t^(leg+1)) / (1 - q^(arm+1) t^leg)
FieldElem b_lambda(const Partition& lam, const FieldCtx& F);
// prod i^{m_i} m_i! * prod (1 - q^{lambda_i}) / (1 - t^{lambda_i})
FieldElem z_lambda(const Partition& lam, const FieldCtx& F);

Partition parse_partition(const std::string& s);
std::string partition_to_string(const Partition& p);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        if (weight(a) != weight(b)) return weight(a) < weight(b);
        return a < b;  // lex
    }
};

} // namespace qmacdo

#endif
