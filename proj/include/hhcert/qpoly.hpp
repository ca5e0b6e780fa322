#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhcert/rational.hpp"

namespace hhcert {

struct MixedRadicand : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonMonicModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RadicandNotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotAffine : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of Z[q, s] / (s^2 - m q) with exact rational coefficients,
// stored as P = a(q) + b(q) s with s-degree at most one. m = 0 marks a plain
// polynomial in q; a value with a vanishing s-part is normalized to m = 0, so
// radicand tags only ever disagree when radicals genuinely mix.
class QPoly {
  public:
    QPoly() : m_(0) {}
    explicit QPoly(const Rat& c) : m_(0) { set_coeff_a(0, c); }
    explicit QPoly(long c) : m_(0) { set_coeff_a(0, Rat(c)); }

    static QPoly var_q();
    static QPoly var_s(int m);
    static QPoly from_parts(int m, std::vector<Rat> a, std::vector<Rat> b);

    int radicand() const { return m_; }
    bool is_zero() const { return a_.empty() && b_.empty(); }
    bool is_constant() const { return b_.empty() && a_.size() <= 1; }
    bool has_radical_part() const { return !b_.empty(); }
    long deg_q() const;  // degree in q of the rational part; -1 for zero
    Rat coeff_a(long i) const { return i < static_cast<long>(a_.size()) ? a_[i] : Rat(0); }
    Rat coeff_b(long i) const { return i < static_cast<long>(b_.size()) ? b_[i] : Rat(0); }
    const std::vector<Rat>& parts_a() const { return a_; }
    const std::vector<Rat>& parts_b() const { return b_; }
    Rat constant_term() const { return coeff_a(0); }

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& x, const QPoly& y);
    friend QPoly operator-(const QPoly& x, const QPoly& y);
    friend QPoly operator*(const QPoly& x, const QPoly& y);
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    friend QPoly operator*(const Rat& c, const QPoly& p);
    friend bool operator==(const QPoly& x, const QPoly& y);
    friend bool operator!=(const QPoly& x, const QPoly& y) { return !(x == y); }

    QPoly pow(unsigned long e) const;

    // Exact evaluation at an integer q. The radical evaluates to the exact
    // square root of m*q; RadicandNotSquare if that is not an integer.
    Rat eval(const Int& q) const;

    std::string to_string() const;

  private:
    void set_coeff_a(long i, const Rat& v);
    void normalize();
    int m_;
    std::vector<Rat> a_, b_;
    friend QPoly qp_mod(const QPoly&, const QPoly&);
    friend std::optional<QPoly> qp_divexact(const QPoly&, const QPoly&);
};

// Remainder of the s-free polynomial P modulo the s-free polynomial M,
// deg_q of the result < deg_q M. M must have unit leading coefficient.
QPoly qp_mod(const QPoly& P, const QPoly& M);

// Exact quotient P / D for s-free D, or nullopt when the division leaves a
// remainder. Used by the multiplicity formulas where exactness is the claim.
std::optional<QPoly> qp_divexact(const QPoly& P, const QPoly& D);

// Polynomial text: integer literals, q, s, + - * / ^ and parentheses.
// '/' divides by a constant subexpression only. m fixes the meaning of s.
QPoly parse_qpoly(const std::string& text, int m = 0);

// The admissible q values of one group family.
struct QFamily {
    enum class Kind { PowOdd, PrimePowers, PrimePowersMod };
    Kind kind = Kind::PrimePowers;
    int radicand = 0;  // matches QPoly::radicand of the polynomials evaluated
    long base = 2;     // PowOdd: q = base^{2k+1}
    long mod = 0, res = 0;
    Int min_q = Int(2);

    static QFamily pow_odd(long base, Int min_q, int radicand);
    static QFamily prime_powers(Int min_q);
    static QFamily prime_powers_mod(long mod, long res, Int min_q);

    std::vector<Int> members_upto(const Int& bound) const;
    bool contains(const Int& q) const;
    std::string describe() const;
};

enum class Verdict { Verified, Refuted, Undetermined };
std::string to_string(Verdict v);

// Result of an eventual-positivity certificate: positive leading coefficient
// in the sqrt(mq)-rewritten variable plus a Cauchy root bound, with every
// family member below the bound evaluated exactly.
struct PositivityCert {
    Verdict verdict = Verdict::Undetermined;
    Int threshold = Int(0);              // all q up to this were evaluated
    std::vector<Int> checked;            // family members evaluated exactly
    std::vector<Int> failing;            // members where the inequality fails
    std::string note;
    bool ok() const { return verdict == Verdict::Verified; }
};

// Certifies P(q) > 0 (or >= 0 with allow_zero) for every q in the family.
// Refuted comes with explicit failing members; Undetermined is reported,
// never silently treated as true.
PositivityCert eventually_positive(const QPoly& P, const QFamily& fam, bool allow_zero = false);

// Quotient of two QPoly values; only formed, compared and sign-checked.
struct QRat {
    QPoly num, den;
    QRat() : num(), den(Rat(1)) {}
    QRat(QPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::invalid_argument("QRat: zero denominator");
    }
    friend bool operator==(const QRat& x, const QRat& y) {
        return x.num * y.den == y.num * x.den;
    }
    friend QRat operator-(const QRat& x, const QRat& y) {
        return QRat(x.num * y.den - y.num * x.den, x.den * y.den);
    }
    Rat eval(const Int& q) const;
    std::string to_string() const;
};

// sign(num*den) decides the sign of a QRat pointwise, so positivity of a
// quotient reduces to eventual positivity of a polynomial.
PositivityCert eventually_positive(const QRat& r, const QFamily& fam, bool allow_zero = false);

// Expression affine (degree <= 1) in each integer parameter separately, with
// QPoly coefficients; such a function attains its extrema over a parameter
// box at the corners, so corner checking is complete.
class BoxExpr {
  public:
    struct Param {
        std::string name;
        QPoly lo, hi;
    };

    explicit BoxExpr(std::vector<Param> params) : params_(std::move(params)) {}

    // Adds coeff * prod(vars); vars lists parameter names, repeats rejected.
    void add_term(QPoly coeff, const std::vector<std::string>& vars);

    size_t param_count() const { return params_.size(); }
    const std::vector<Param>& params() const { return params_; }
    QPoly at_corner(std::uint32_t mask) const;  // bit i set -> hi endpoint of param i

  private:
    struct Term {
        QPoly coeff;
        std::vector<size_t> vars;
    };
    std::vector<Param> params_;
    std::vector<Term> terms_;
};

struct BoxCheck {
    Verdict verdict = Verdict::Undetermined;
    std::vector<Int> failing;  // family members failing at some corner
    std::string note;
    bool ok() const { return verdict == Verdict::Verified; }
};

// expr > 0 (or >= 0) at every box corner for every q in the family.
BoxCheck box_inequality(const BoxExpr& expr, const QFamily& fam, bool allow_zero = false);

}  // namespace hhcert
