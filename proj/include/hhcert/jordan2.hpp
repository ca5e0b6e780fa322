#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "hhcert/qpoly.hpp"

namespace hhcert {

struct OrderMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedResidue : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Jordan canonical form of a unipotent matrix in characteristic 2, encoded as
// the weakly decreasing partition of block sizes.
struct JordanType {
    std::vector<long> parts;

    JordanType() = default;
    explicit JordanType(std::vector<long> p);

    long total() const;
    long largest() const { return parts.empty() ? 0 : parts.front(); }
    // Order of the encoded element: smallest 2-power >= largest part.
    long element_order() const;
};

// j(g) = sum_i max(0, n_i - order/2): the number of 2-blocks of the involution
// in <g>. order must be the 2-power with order/2 < largest part <= order.
long j_of_type(const JordanType& t, long order);

// Extremal value k(d - order/2) + max(0, l - order/2) with n = kd + l,
// 0 <= l < d, valid for order/2 < d < order and d <= n.
long max_j_bound(long n, long d, long order);

// Exhaustive maximum of j_of_type over all partitions of n with largest part
// exactly d. Ground truth for max_j_bound; n capped (default 60).
long brute_max_j(long n, long d, long order, long cap = 60);

struct BruteMax {
    long max = 0;
    std::vector<long> witness;  // one partition attaining the maximum
    bool unique = true;         // no other partition attains it
    long count = 0;             // partitions enumerated
};
BruteMax brute_max_j_detail(long n, long d, long order, long cap = 60);

// Partitions of n with all parts <= max_part, visited in colexicographic
// order; callback may return false to stop.
void for_each_partition(long n, long max_part, const std::function<bool(const std::vector<long>&)>& fn);

// Number of partitions of n with parts <= max_part, memoized.
Int partition_count(long n, long max_part);

// f1(n) = n(q-3)/(2(q-1)) + (q-7)/4, the bound for |g| <= (q+1)/2.
Rat f1_value(const Rat& n, const Rat& q);
QRat f1_sym(const QPoly& n);

// f2(n), the three-case bound for |g| = q+1; n must be 0 or +-1 mod q.
Rat f2_value(const Int& n, const Int& q);
QPoly f2_sym(const QPoly& n);

}  // namespace hhcert
