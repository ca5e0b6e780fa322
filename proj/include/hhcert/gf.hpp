#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hhcert {

// Small finite field F_{p^k}, p^k <= 512, with full addition/multiplication
// tables. Elements are indices 0..q-1; index 0 is zero, index 1 is one, and
// an element sum c_i p^i encodes the polynomial sum c_i x^i over F_p modulo a
// fixed irreducible of degree k. Instances are interned and immutable.
class FF {
  public:
    using elt = std::uint16_t;

    static const FF& get(long p, long k);

    long p() const { return p_; }
    long k() const { return k_; }
    long q() const { return q_; }

    elt add(elt a, elt b) const { return add_[idx(a, b)]; }
    elt sub(elt a, elt b) const { return add_[idx(a, neg_[b])]; }
    elt mul(elt a, elt b) const { return mul_[idx(a, b)]; }
    elt neg(elt a) const { return neg_[a]; }
    elt inv(elt a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_[a];
    }
    elt of_int(long v) const {
        long r = v % p_;
        if (r < 0) r += p_;
        return static_cast<elt>(r);
    }
    elt pow(elt a, unsigned long e) const;
    elt frobenius(elt a) const { return pow(a, p_); }

  private:
    FF(long p, long k);
    size_t idx(elt a, elt b) const { return static_cast<size_t>(a) * q_ + b; }
    long p_, k_, q_;
    std::vector<elt> add_, mul_, neg_, inv_;
};

// Dense square matrix over a small finite field, row-major.
struct Mat {
    const FF* F = nullptr;
    long n = 0;
    std::vector<FF::elt> e;

    Mat() = default;
    Mat(const FF& field, long dim) : F(&field), n(dim), e(dim * dim, 0) {}

    static Mat identity(const FF& field, long dim);

    FF::elt at(long i, long j) const { return e[i * n + j]; }
    FF::elt& at(long i, long j) { return e[i * n + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    bool operator==(const Mat& o) const { return n == o.n && e == o.e; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat pow(unsigned long k) const;
    Mat transpose() const;
    bool is_identity() const;
    bool is_zero() const;
    long rank() const;
    std::optional<Mat> inverse() const;

    // Whole matrix packed into one word when n^2 * bits(q) <= 64.
    std::optional<std::uint64_t> packed_key() const;
};

// Row vector times matrix.
std::vector<FF::elt> vec_mul(const std::vector<FF::elt>& v, const Mat& M);

// Bit-packed matrix over F_2 (one word per row), for rank profiles and
// closure enumeration where the dense representation is the bottleneck.
struct Gf2Mat {
    long n = 0;
    std::vector<std::uint64_t> rows;

    Gf2Mat() = default;
    explicit Gf2Mat(long dim) : n(dim), rows(dim, 0) {}
    static Gf2Mat identity(long dim);
    static Gf2Mat from_mat(const Mat& M);
    Mat to_mat() const;

    bool get(long i, long j) const { return (rows[i] >> j) & 1; }
    void set(long i, long j, bool v) {
        if (v)
            rows[i] |= std::uint64_t(1) << j;
        else
            rows[i] &= ~(std::uint64_t(1) << j);
    }

    Gf2Mat operator*(const Gf2Mat& o) const;
    Gf2Mat operator+(const Gf2Mat& o) const;
    bool operator==(const Gf2Mat& o) const { return n == o.n && rows == o.rows; }
    Gf2Mat pow(unsigned long k) const;
    long rank() const;
    bool is_identity() const;

    // Rows concatenated, low row first; requires n^2 <= 64.
    std::uint64_t packed_key() const;
    static Gf2Mat from_packed_key(std::uint64_t key, long dim);
};

// Echelonized basis of a subspace of row vectors over FF, with pivot columns.
class RowSpace {
  public:
    RowSpace(const FF& field, long ambient) : F_(&field), n_(ambient) {}

    long dim() const { return static_cast<long>(rows_.size()); }
    long ambient() const { return n_; }
    const std::vector<std::vector<FF::elt>>& rows() const { return rows_; }
    const std::vector<long>& pivots() const { return pivots_; }

    // Reduces v against the basis in place; returns true if v was absorbed
    // (i.e. dependent), false if it extended the basis.
    bool insert(std::vector<FF::elt> v);

    // Reduce a copy of v; the result has zeros in all pivot columns.
    std::vector<FF::elt> reduce(std::vector<FF::elt> v) const;

    // Coordinates of v in the basis; nullopt if v is outside the span.
    std::optional<std::vector<FF::elt>> coordinates(const std::vector<FF::elt>& v) const;

  private:
    const FF* F_;
    long n_;
    std::vector<std::vector<FF::elt>> rows_;
    std::vector<long> pivots_;
};

}  // namespace hhcert
