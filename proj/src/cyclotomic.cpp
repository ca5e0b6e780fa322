#include "hhcert/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hhcert {

namespace {

// Exact division of integer polynomials, constant term first.
// Requires the division to be exact and den monic up to sign.
std::vector<Int> poly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    std::vector<Int> quot(dn - dd + 1, Int(0));
    for (long i = dn; i >= dd; --i) {
        Int c = num[i] / den[dd];
        quot[i - dd] = c;
        if (c != 0) {
            for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
        }
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("cyclotomic division not exact");
    return quot;
}

std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}
std::mutex phi_mutex;

std::vector<Int> compute_phi(long n) {
    if (n == 1) return {Int(-1), Int(1)};  // x - 1
    std::vector<Int> p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = poly_divexact(std::move(p), cyclotomic_poly(d));
    }
    return p;
}

}  // namespace

std::vector<Int> cyclotomic_poly(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
    {
        std::lock_guard<std::mutex> lk(phi_mutex);
        auto it = phi_cache().find(n);
        if (it != phi_cache().end()) return it->second;
    }
    // Computed outside the lock; divisor lookups re-enter through the cache.
    std::vector<Int> p = compute_phi(n);
    std::lock_guard<std::mutex> lk(phi_mutex);
    return phi_cache().emplace(n, std::move(p)).first->second;
}

CycField::CycField(long n) : n_(n) {
    std::vector<Int> phi = cyclotomic_poly(n);
    deg_ = static_cast<long>(phi.size()) - 1;
    const long span = std::max(n, 2 * deg_ - 1);
    table_.resize(span);
    // zeta^e for e < deg is a basis vector; beyond that reduce the monic Phi_n.
    for (long e = 0; e < std::min(deg_, span); ++e) {
        table_[e].assign(deg_, Int(0));
        table_[e][e] = 1;
    }
    for (long e = deg_; e < span; ++e) {
        // zeta^e = zeta * zeta^{e-1}, then substitute zeta^deg = -(low part of Phi).
        const std::vector<Int>& prev = table_[e - 1];
        std::vector<Int> cur(deg_, Int(0));
        for (long i = 0; i + 1 < deg_; ++i) cur[i + 1] = prev[i];
        const Int& top = prev[deg_ - 1];
        if (top != 0) {
            for (long i = 0; i < deg_; ++i) cur[i] -= top * phi[i];
        }
        table_[e] = std::move(cur);
    }
    has_i64_ = true;
    for (const auto& row : table_) {
        for (const Int& c : row) {
            if (!c.fits_slong_p()) {
                has_i64_ = false;
                break;
            }
        }
        if (!has_i64_) break;
    }
    if (has_i64_) {
        table_i64_.resize(table_.size());
        for (size_t e = 0; e < table_.size(); ++e) {
            table_i64_[e].resize(deg_);
            for (long i = 0; i < deg_; ++i) table_i64_[e][i] = table_[e][i].get_si();
        }
    }
}

const CycField& CycField::get(long n) {
    static std::map<long, std::unique_ptr<CycField>> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = registry.find(n);
    if (it == registry.end())
        it = registry.emplace(n, std::unique_ptr<CycField>(new CycField(n))).first;
    return *it->second;
}

CycNum CycNum::zero_of(long n) {
    const CycField& F = CycField::get(n);
    CycNum r;
    r.order_ = n;
    r.coeffs_.assign(F.degree(), Rat(0));
    return r;
}

CycNum CycNum::from_coeffs(long n, std::vector<Rat> coeffs) {
    const CycField& F = CycField::get(n);
    if (static_cast<long>(coeffs.size()) != F.degree())
        throw std::invalid_argument("CycNum: coefficient vector has wrong length");
    CycNum r;
    r.order_ = n;
    r.coeffs_ = std::move(coeffs);
    for (Rat& c : r.coeffs_) c.canonicalize();
    return r;
}

CycNum CycNum::zeta(long n, long k) {
    if (n < 1) throw std::invalid_argument("zeta: order must be >= 1");
    const CycField& F = CycField::get(n);
    long e = k % n;
    if (e < 0) e += n;
    CycNum r = zero_of(n);
    const std::vector<Int>& rep = F.power(e);
    for (long i = 0; i < F.degree(); ++i) r.coeffs_[i] = Rat(rep[i]);
    return r;
}

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Rat> CycNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeffs_[0];
}

std::optional<Int> CycNum::as_integer() const {
    auto r = as_rational();
    if (!r) return std::nullopt;
    return hhcert::as_integer(*r);
}

CycNum CycNum::embedded(long big_order) const {
    if (big_order == order_) return *this;
    if (big_order % order_ != 0)
        throw std::invalid_argument("embedded: target order must be a multiple");
    const CycField& F = CycField::get(big_order);
    const long step = big_order / order_;
    CycNum r = zero_of(big_order);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const std::vector<Int>& rep = F.power(static_cast<long>(i) * step % big_order);
        for (long j = 0; j < F.degree(); ++j)
            if (rep[j] != 0) r.coeffs_[j] += coeffs_[i] * Rat(rep[j]);
    }
    return r;
}

CycNum CycNum::conj() const {
    const CycField& F = CycField::get(order_);
    CycNum r = zero_of(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const long e = (order_ - static_cast<long>(i)) % order_;
        const std::vector<Int>& rep = F.power(e);
        for (long j = 0; j < F.degree(); ++j)
            if (rep[j] != 0) r.coeffs_[j] += coeffs_[i] * Rat(rep[j]);
    }
    return r;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

CycNum operator+(const CycNum& a, const CycNum& b) {
    const long n = lcm_long(a.order_, b.order_);
    CycNum x = a.embedded(n), y = b.embedded(n);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) {
    const long n = lcm_long(a.order_, b.order_);
    CycNum x = a.embedded(n), y = b.embedded(n);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    const long n = lcm_long(a.order_, b.order_);
    CycNum x = a.embedded(n), y = b.embedded(n);
    const CycField& F = CycField::get(n);
    const long d = F.degree();
    std::vector<Rat> conv(2 * d - 1, Rat(0));
    for (long i = 0; i < d; ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (y.coeffs_[j] == 0) continue;
            conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    CycNum r = CycNum::zero_of(n);
    for (long e = 0; e < d; ++e) r.coeffs_[e] = conv[e];
    for (long e = d; e < 2 * d - 1; ++e) {
        if (conv[e] == 0) continue;
        const std::vector<Int>& rep = F.power(e);
        for (long j = 0; j < d; ++j)
            if (rep[j] != 0) r.coeffs_[j] += conv[e] * Rat(rep[j]);
    }
    return r;
}

CycNum operator*(const Rat& c, const CycNum& a) {
    CycNum r = a;
    for (Rat& x : r.coeffs_) x *= c;
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const long n = lcm_long(a.order_, b.order_);
    return a.embedded(n).coeffs_ == b.embedded(n).coeffs_;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z" << order_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace hhcert
