#include "hhcert/gf.hpp"

#include <bit>
#include <map>
#include <memory>
#include <mutex>

namespace hhcert {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomial coefficients over F_p packed as digits base p.
std::vector<long> unpack(long v, long p) {
    std::vector<long> c;
    while (v > 0) {
        c.push_back(v % p);
        v /= p;
    }
    return c;
}

long pack(const std::vector<long>& c, long p) {
    long v = 0;
    for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

// Product of packed polynomials modulo the packed monic irreducible.
long polymul_mod(long a, long b, long p, const std::vector<long>& irr) {
    std::vector<long> x = unpack(a, p), y = unpack(b, p);
    if (x.empty() || y.empty()) return 0;
    std::vector<long> z(x.size() + y.size() - 1, 0);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) z[i + j] = (z[i + j] + x[i] * y[j]) % p;
    const long k = static_cast<long>(irr.size()) - 1;
    for (long d = static_cast<long>(z.size()) - 1; d >= k; --d) {
        long c = z[d];
        if (c == 0) continue;
        z[d] = 0;
        for (long j = 0; j < k; ++j) {
            long t = (z[d - k + j] - c * irr[j]) % p;
            if (t < 0) t += p;
            z[d - k + j] = t;
        }
    }
    z.resize(k > 0 ? k : 1);
    return pack(z, p);
}

}  // namespace

FF::FF(long p, long k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (k < 1) throw std::invalid_argument("field degree must be >= 1");
    q_ = 1;
    for (long i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > 512) throw std::invalid_argument("field size capped at 512");
    }
    // find a monic irreducible of degree k: no roots is enough for k <= 3,
    // otherwise test divisibility by all lower-degree monics
    std::vector<long> irr(k + 1, 0);
    irr[k] = 1;
    if (k > 1) {
        bool found = false;
        for (long lo = 0; lo < q_ && !found; ++lo) {
            std::vector<long> cand = unpack(lo, p);
            cand.resize(k, 0);
            cand.push_back(1);
            // trial division by every monic of degree 1..k/2
            bool ok = true;
            for (long deg = 1; deg <= k / 2 && ok; ++deg) {
                long dq = 1;
                for (long i = 0; i < deg; ++i) dq *= p;
                for (long lo2 = 0; lo2 < dq && ok; ++lo2) {
                    std::vector<long> div = unpack(lo2, p);
                    div.resize(deg, 0);
                    div.push_back(1);
                    // remainder of cand by div
                    std::vector<long> r = cand;
                    for (long d = static_cast<long>(r.size()) - 1; d >= deg; --d) {
                        long c = r[d];
                        if (c == 0) continue;
                        r[d] = 0;
                        for (long j = 0; j < deg; ++j) {
                            long t = (r[d - deg + j] - c * div[j]) % p;
                            if (t < 0) t += p;
                            r[d - deg + j] = t;
                        }
                    }
                    bool zero = true;
                    for (long j = 0; j < deg; ++j)
                        if (r[j] != 0) zero = false;
                    if (zero) ok = false;
                }
            }
            if (ok) {
                irr = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.resize(q_);
    for (long a = 0; a < q_; ++a) {
        std::vector<long> x = unpack(a, p);
        x.resize(k, 0);
        for (long b = 0; b < q_; ++b) {
            std::vector<long> y = unpack(b, p);
            y.resize(k, 0);
            std::vector<long> s(k);
            for (long i = 0; i < k; ++i) s[i] = (x[i] + y[i]) % p;
            add_[idx(static_cast<elt>(a), static_cast<elt>(b))] = static_cast<elt>(pack(s, p));
            mul_[idx(static_cast<elt>(a), static_cast<elt>(b))] =
                static_cast<elt>(polymul_mod(a, b, p, irr));
        }
        std::vector<long> m(k);
        for (long i = 0; i < k; ++i) m[i] = (p - x[i]) % p;
        neg_[a] = static_cast<elt>(pack(m, p));
    }
    inv_[0] = 0;
    for (long a = 1; a < q_; ++a) {
        for (long b = 1; b < q_; ++b) {
            if (mul_[idx(static_cast<elt>(a), static_cast<elt>(b))] == 1) {
                inv_[a] = static_cast<elt>(b);
                break;
            }
        }
        if (inv_[a] == 0) throw std::logic_error("field element without inverse; bad irreducible");
    }
}

const FF& FF::get(long p, long k) {
    static std::map<std::pair<long, long>, std::unique_ptr<FF>> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto key = std::make_pair(p, k);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<FF>(new FF(p, k))).first;
    return *it->second;
}

FF::elt FF::pow(elt a, unsigned long e) const {
    elt r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Mat Mat::identity(const FF& field, long dim) {
    Mat m(field, dim);
    for (long i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    Mat r(*F, n);
    for (long i = 0; i < n; ++i) {
        for (long k = 0; k < n; ++k) {
            FF::elt a = at(i, k);
            if (a == 0) continue;
            for (long j = 0; j < n; ++j) {
                FF::elt b = o.at(k, j);
                if (b != 0) r.at(i, j) = F->add(r.at(i, j), F->mul(a, b));
            }
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r(*F, n);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = F->add(e[i], o.e[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r(*F, n);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = F->sub(e[i], o.e[i]);
    return r;
}

Mat Mat::pow(unsigned long k) const {
    Mat r = identity(*F, n), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Mat Mat::transpose() const {
    Mat r(*F, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Mat::is_identity() const {
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Mat::is_zero() const {
    for (FF::elt x : e)
        if (x != 0) return false;
    return true;
}

long Mat::rank() const {
    Mat w = *this;
    long r = 0;
    for (long col = 0; col < n && r < n; ++col) {
        long piv = -1;
        for (long i = r; i < n; ++i)
            if (w.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (long j = 0; j < n; ++j) std::swap(w.e[r * n + j], w.e[piv * n + j]);
        FF::elt inv = F->inv(w.at(r, col));
        for (long j = 0; j < n; ++j) w.at(r, j) = F->mul(w.at(r, j), inv);
        for (long i = 0; i < n; ++i) {
            if (i == r) continue;
            FF::elt c = w.at(i, col);
            if (c == 0) continue;
            for (long j = 0; j < n; ++j)
                w.at(i, j) = F->sub(w.at(i, j), F->mul(c, w.at(r, j)));
        }
        ++r;
    }
    return r;
}

std::optional<Mat> Mat::inverse() const {
    Mat w = *this, inv = identity(*F, n);
    for (long col = 0; col < n; ++col) {
        long piv = -1;
        for (long i = col; i < n; ++i)
            if (w.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        for (long j = 0; j < n; ++j) {
            std::swap(w.e[col * n + j], w.e[piv * n + j]);
            std::swap(inv.e[col * n + j], inv.e[piv * n + j]);
        }
        FF::elt s = F->inv(w.at(col, col));
        for (long j = 0; j < n; ++j) {
            w.at(col, j) = F->mul(w.at(col, j), s);
            inv.at(col, j) = F->mul(inv.at(col, j), s);
        }
        for (long i = 0; i < n; ++i) {
            if (i == col) continue;
            FF::elt c = w.at(i, col);
            if (c == 0) continue;
            for (long j = 0; j < n; ++j) {
                w.at(i, j) = F->sub(w.at(i, j), F->mul(c, w.at(col, j)));
                inv.at(i, j) = F->sub(inv.at(i, j), F->mul(c, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::optional<std::uint64_t> Mat::packed_key() const {
    int bits = 0;
    while ((1L << bits) < F->q()) ++bits;
    if (bits * n * n > 64) return std::nullopt;
    std::uint64_t key = 0;
    for (size_t i = e.size(); i-- > 0;) key = (key << bits) | e[i];
    return key;
}

std::vector<FF::elt> vec_mul(const std::vector<FF::elt>& v, const Mat& M) {
    std::vector<FF::elt> r(M.n, 0);
    for (long i = 0; i < M.n; ++i) {
        if (v[i] == 0) continue;
        for (long j = 0; j < M.n; ++j) {
            FF::elt b = M.at(i, j);
            if (b != 0) r[j] = M.F->add(r[j], M.F->mul(v[i], b));
        }
    }
    return r;
}

Gf2Mat Gf2Mat::identity(long dim) {
    Gf2Mat m(dim);
    for (long i = 0; i < dim; ++i) m.rows[i] = std::uint64_t(1) << i;
    return m;
}

Gf2Mat Gf2Mat::from_mat(const Mat& M) {
    if (M.F->q() != 2) throw std::invalid_argument("Gf2Mat needs a matrix over F_2");
    Gf2Mat m(M.n);
    for (long i = 0; i < M.n; ++i)
        for (long j = 0; j < M.n; ++j)
            if (M.at(i, j)) m.rows[i] |= std::uint64_t(1) << j;
    return m;
}

Mat Gf2Mat::to_mat() const {
    Mat m(FF::get(2, 1), n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m.at(i, j) = get(i, j) ? 1 : 0;
    return m;
}

Gf2Mat Gf2Mat::operator*(const Gf2Mat& o) const {
    Gf2Mat r(n);
    for (long i = 0; i < n; ++i) {
        std::uint64_t acc = 0, row = rows[i];
        while (row) {
            const int k = std::countr_zero(row);
            acc ^= o.rows[k];
            row &= row - 1;
        }
        r.rows[i] = acc;
    }
    return r;
}

Gf2Mat Gf2Mat::operator+(const Gf2Mat& o) const {
    Gf2Mat r(n);
    for (long i = 0; i < n; ++i) r.rows[i] = rows[i] ^ o.rows[i];
    return r;
}

Gf2Mat Gf2Mat::pow(unsigned long k) const {
    Gf2Mat r = identity(n), base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

long Gf2Mat::rank() const {
    std::vector<std::uint64_t> w = rows;
    long r = 0;
    for (long col = 0; col < n && r < static_cast<long>(w.size()); ++col) {
        const std::uint64_t bit = std::uint64_t(1) << col;
        long piv = -1;
        for (long i = r; i < static_cast<long>(w.size()); ++i)
            if (w[i] & bit) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(w[r], w[piv]);
        for (long i = 0; i < static_cast<long>(w.size()); ++i)
            if (i != r && (w[i] & bit)) w[i] ^= w[r];
        ++r;
    }
    return r;
}

bool Gf2Mat::is_identity() const { return *this == identity(n); }

std::uint64_t Gf2Mat::packed_key() const {
    if (n * n > 64) throw std::overflow_error("matrix too large to pack");
    std::uint64_t key = 0;
    for (long i = n; i-- > 0;) key = (key << n) | rows[i];
    return key;
}

Gf2Mat Gf2Mat::from_packed_key(std::uint64_t key, long dim) {
    Gf2Mat m(dim);
    const std::uint64_t mask = (dim == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << dim) - 1);
    for (long i = 0; i < dim; ++i) {
        m.rows[i] = key & mask;
        key >>= dim;
    }
    return m;
}

bool RowSpace::insert(std::vector<FF::elt> v) {
    v = reduce(std::move(v));
    long piv = -1;
    for (long j = 0; j < n_; ++j)
        if (v[j] != 0) {
            piv = j;
            break;
        }
    if (piv < 0) return true;
    FF::elt s = F_->inv(v[piv]);
    for (long j = 0; j < n_; ++j) v[j] = F_->mul(v[j], s);
    // keep earlier rows reduced against the new pivot
    for (size_t i = 0; i < rows_.size(); ++i) {
        FF::elt c = rows_[i][piv];
        if (c == 0) continue;
        for (long j = 0; j < n_; ++j) rows_[i][j] = F_->sub(rows_[i][j], F_->mul(c, v[j]));
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return false;
}

std::vector<FF::elt> RowSpace::reduce(std::vector<FF::elt> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        FF::elt c = v[pivots_[i]];
        if (c == 0) continue;
        for (long j = 0; j < n_; ++j) v[j] = F_->sub(v[j], F_->mul(c, rows_[i][j]));
    }
    return v;
}

std::optional<std::vector<FF::elt>> RowSpace::coordinates(const std::vector<FF::elt>& v) const {
    std::vector<FF::elt> w = v, coords(rows_.size(), 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        FF::elt c = w[pivots_[i]];
        coords[i] = c;
        if (c == 0) continue;
        for (long j = 0; j < n_; ++j) w[j] = F_->sub(w[j], F_->mul(c, rows_[i][j]));
    }
    for (long j = 0; j < n_; ++j)
        if (w[j] != 0) return std::nullopt;
    return coords;
}

}  // namespace hhcert
