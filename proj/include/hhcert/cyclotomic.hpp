#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hhcert/rational.hpp"

namespace hhcert {

// Coefficients of the n-th cyclotomic polynomial, constant term first.
// Computed by exact division of x^n - 1 by Phi_d over the proper divisors d
// of n; results are memoized. Rejects n < 1.
std::vector<Int> cyclotomic_poly(long n);

// An element of Q(zeta_n) in the power basis {zeta^i : 0 <= i < deg Phi_n}.
//
// The representation is canonical for a fixed order: two values of the same
// order are equal iff their coefficient vectors are equal. Values of
// different orders are compared after embedding into Q(zeta_lcm). A value is
// rational iff every coefficient beyond index 0 vanishes; no float is ever
// involved. Immutable after construction, safe to share across threads.
class CycNum {
  public:
    CycNum() : order_(1), coeffs_(1, Rat(0)) {}
    explicit CycNum(const Rat& r) : order_(1), coeffs_(1, r) {}
    explicit CycNum(long v) : order_(1), coeffs_(1, Rat(v)) {}

    // zeta_n^k, reduced to the basis. zeta(n, 0) is the identity of Q(zeta_n).
    static CycNum zeta(long n, long k);
    static CycNum zero_of(long n);
    static CycNum from_coeffs(long n, std::vector<Rat> coeffs);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rat> as_rational() const;
    std::optional<Int> as_integer() const;

    // Image under the embedding Q(zeta_n) -> Q(zeta_N), zeta_n |-> zeta_N^{N/n}.
    CycNum embedded(long big_order) const;

    // Complex conjugate (zeta |-> zeta^{-1}).
    CycNum conj() const;

    CycNum operator-() const;
    friend CycNum operator+(const CycNum& a, const CycNum& b);
    friend CycNum operator-(const CycNum& a, const CycNum& b);
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
    friend CycNum operator*(const Rat& c, const CycNum& a);
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    std::string to_string() const;

  private:
    long order_;
    std::vector<Rat> coeffs_;
};

// Per-order reduction context: degree of Phi_n and the table of basis
// representations of zeta^e. Shared by CycNum arithmetic and by the
// integer fast path in spectrum inversion.
class CycField {
  public:
    static const CycField& get(long n);

    long order() const { return n_; }
    long degree() const { return deg_; }
    // Basis coefficients of zeta^e for 0 <= e < table_size().
    const std::vector<Int>& power(long e) const { return table_[e]; }
    long table_size() const { return static_cast<long>(table_.size()); }
    // Non-null iff every table entry fits in int64.
    const std::vector<std::vector<std::int64_t>>* power_table_i64() const {
        return has_i64_ ? &table_i64_ : nullptr;
    }

  private:
    explicit CycField(long n);
    long n_, deg_;
    std::vector<std::vector<Int>> table_;
    std::vector<std::vector<std::int64_t>> table_i64_;
    bool has_i64_ = false;
};

}  // namespace hhcert
