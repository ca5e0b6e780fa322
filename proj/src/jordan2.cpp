#include "hhcert/jordan2.hpp"

#include <algorithm>
#include <map>

namespace hhcert {

JordanType::JordanType(std::vector<long> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("Jordan blocks must have size >= 1");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Jordan type must be weakly decreasing");
    }
}

long JordanType::total() const {
    long s = 0;
    for (long p : parts) s += p;
    return s;
}

long JordanType::element_order() const {
    long o = 1;
    while (o < largest()) o *= 2;
    return std::max(o, 1L);
}

long j_of_type(const JordanType& t, long order) {
    if (order < 2 || (order & (order - 1)) != 0)
        throw OrderMismatch("order must be a 2-power >= 2");
    const long half = order / 2;
    if (!(half < t.largest() && t.largest() <= order))
        throw OrderMismatch("order inconsistent with largest Jordan block");
    long j = 0;
    for (long p : t.parts) j += std::max(0L, p - half);
    return j;
}

long max_j_bound(long n, long d, long order) {
    if (order < 2 || (order & (order - 1)) != 0) throw BadRange("order must be a 2-power");
    const long half = order / 2;
    if (d <= half || d >= order) throw BadRange("need order/2 < d < order");
    if (d > n) throw BadRange("need d <= n");
    const long k = n / d, l = n % d;
    return k * (d - half) + std::max(0L, l - half);
}

void for_each_partition(long n, long max_part,
                        const std::function<bool(const std::vector<long>&)>& fn) {
    std::vector<long> cur;
    // colex: extend with parts no larger than the last chosen one
    std::function<bool(long, long)> rec = [&](long rem, long cap) -> bool {
        if (rem == 0) return fn(cur);
        for (long p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            bool go = rec(rem - p, p);
            cur.pop_back();
            if (!go) return false;
        }
        return true;
    };
    if (n == 0) {
        fn(cur);
        return;
    }
    rec(n, std::min(n, max_part));
}

Int partition_count(long n, long max_part) {
    static std::map<std::pair<long, long>, Int> memo;
    if (n < 0) return Int(0);
    if (n == 0) return Int(1);
    if (max_part <= 0) return Int(0);
    if (max_part > n) max_part = n;
    auto key = std::make_pair(n, max_part);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = partition_count(n - max_part, max_part) + partition_count(n, max_part - 1);
    memo.emplace(key, total);
    return total;
}

BruteMax brute_max_j_detail(long n, long d, long order, long cap) {
    if (n > cap) throw CapExceeded("n exceeds the brute-force cap");
    if (order < 2 || (order & (order - 1)) != 0) throw BadRange("order must be a 2-power");
    const long half = order / 2;
    if (d <= half || d >= order) throw BadRange("need order/2 < d < order");
    if (d > n) throw BadRange("need d <= n");
    BruteMax best;
    best.max = -1;
    // largest part exactly d: fix it, enumerate the remainder with parts <= d
    for_each_partition(n - d, d, [&](const std::vector<long>& rest) {
        long j = d - half;
        for (long p : rest) j += std::max(0L, p - half);
        ++best.count;
        if (j > best.max) {
            best.max = j;
            best.witness.assign(1, d);
            best.witness.insert(best.witness.end(), rest.begin(), rest.end());
            best.unique = true;
        } else if (j == best.max) {
            best.unique = false;
        }
        return true;
    });
    return best;
}

long brute_max_j(long n, long d, long order, long cap) {
    return brute_max_j_detail(n, d, order, cap).max;
}

Rat f1_value(const Rat& n, const Rat& q) {
    return n * (q - 3) / (2 * (q - 1)) + (q - 7) / Rat(4);
}

QRat f1_sym(const QPoly& n) {
    const QPoly q = QPoly::var_q();
    // common denominator 4(q-1)
    QPoly num = Rat(2) * n * (q - QPoly(3)) + (q - QPoly(1)) * (q - QPoly(7));
    QPoly den = Rat(4) * (q - QPoly(1));
    return QRat(std::move(num), std::move(den));
}

Rat f2_value(const Int& n, const Int& q) {
    const Int r = n % q;
    if (r == 0) return Rat(n * (q - 1), 2 * q);
    if (r == 1) return Rat((n - 1) * (q - 1), 2 * q);
    if (r == q - 1) return Rat((n + 1) * (q - 1), 2 * q) - 1;
    throw UnsupportedResidue("f2 requires n = 0 or +-1 (mod q)");
}

QPoly f2_sym(const QPoly& n) {
    if (n.has_radical_part()) throw UnsupportedResidue("f2 needs a plain polynomial in q");
    const QPoly q = QPoly::var_q();
    const Rat c0 = n.constant_term();
    QPoly shifted;
    Rat tail(0);
    if (c0 == 0) {
        shifted = n;
    } else if (c0 == 1) {
        shifted = n - QPoly(1);
    } else if (c0 == -1) {
        shifted = n + QPoly(1);
        tail = -1;
    } else {
        throw UnsupportedResidue("f2 requires constant term 0 or +-1");
    }
    auto quot = qp_divexact(shifted * (q - QPoly(1)), Rat(2) * q);
    if (!quot) throw UnsupportedResidue("f2 numerator is not divisible by 2q");
    return *quot + QPoly(tail);
}

}  // namespace hhcert
