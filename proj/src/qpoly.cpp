#include "hhcert/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace hhcert {

namespace {

void trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rat> poly_add(const std::vector<Rat>& x, const std::vector<Rat>& y, int sign) {
    std::vector<Rat> r(std::max(x.size(), y.size()), Rat(0));
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    for (size_t i = 0; i < y.size(); ++i) r[i] += sign > 0 ? y[i] : -y[i];
    trim(r);
    return r;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.empty() || y.empty()) return {};
    std::vector<Rat> r(x.size() + y.size() - 1, Rat(0));
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) r[i + j] += x[i] * y[j];
    }
    trim(r);
    return r;
}

int combined_radicand(const QPoly& x, const QPoly& y) {
    const int mx = x.radicand(), my = y.radicand();
    if (mx == 0) return my;
    if (my == 0) return mx;
    if (mx != my) throw MixedRadicand("cannot combine sqrt(" + std::to_string(mx) +
                                      "q) with sqrt(" + std::to_string(my) + "q)");
    return mx;
}

}  // namespace

void QPoly::set_coeff_a(long i, const Rat& v) {
    if (static_cast<long>(a_.size()) <= i) a_.resize(i + 1, Rat(0));
    a_[i] = v;
    normalize();
}

void QPoly::normalize() {
    trim(a_);
    trim(b_);
    for (Rat& c : a_) c.canonicalize();
    for (Rat& c : b_) c.canonicalize();
    if (b_.empty()) m_ = 0;
}

QPoly QPoly::var_q() {
    QPoly p;
    p.a_ = {Rat(0), Rat(1)};
    return p;
}

QPoly QPoly::var_s(int m) {
    if (m != 2 && m != 3) throw std::invalid_argument("radicand must be 2 or 3");
    QPoly p;
    p.m_ = m;
    p.b_ = {Rat(1)};
    return p;
}

QPoly QPoly::from_parts(int m, std::vector<Rat> a, std::vector<Rat> b) {
    QPoly p;
    p.m_ = m;
    p.a_ = std::move(a);
    p.b_ = std::move(b);
    p.normalize();
    if (p.has_radical_part() && m != 2 && m != 3)
        throw std::invalid_argument("radical part needs radicand 2 or 3");
    return p;
}

long QPoly::deg_q() const {
    return static_cast<long>(a_.size()) - 1;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (Rat& c : r.a_) c = -c;
    for (Rat& c : r.b_) c = -c;
    return r;
}

QPoly operator+(const QPoly& x, const QPoly& y) {
    QPoly r;
    r.m_ = combined_radicand(x, y);
    r.a_ = poly_add(x.a_, y.a_, +1);
    r.b_ = poly_add(x.b_, y.b_, +1);
    r.normalize();
    return r;
}

QPoly operator-(const QPoly& x, const QPoly& y) {
    QPoly r;
    r.m_ = combined_radicand(x, y);
    r.a_ = poly_add(x.a_, y.a_, -1);
    r.b_ = poly_add(x.b_, y.b_, -1);
    r.normalize();
    return r;
}

QPoly operator*(const QPoly& x, const QPoly& y) {
    QPoly r;
    const int m = combined_radicand(x, y);
    r.m_ = m;
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + m q b1 b2 + (a1 b2 + a2 b1) s
    r.a_ = poly_mul(x.a_, y.a_);
    std::vector<Rat> cross = poly_mul(x.b_, y.b_);
    if (!cross.empty()) {
        cross.insert(cross.begin(), Rat(0));  // multiply by q
        for (Rat& c : cross) c *= m;
        r.a_ = poly_add(r.a_, cross, +1);
    }
    r.b_ = poly_add(poly_mul(x.a_, y.b_), poly_mul(x.b_, y.a_), +1);
    r.normalize();
    return r;
}

QPoly operator*(const Rat& c, const QPoly& p) {
    QPoly r = p;
    for (Rat& x : r.a_) x *= c;
    for (Rat& x : r.b_) x *= c;
    r.normalize();
    return r;
}

bool operator==(const QPoly& x, const QPoly& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_;
}

QPoly QPoly::pow(unsigned long e) const {
    QPoly r(Rat(1)), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rat QPoly::eval(const Int& q) const {
    Rat res(0), qp(1);
    for (const Rat& c : a_) {
        res += c * qp;
        qp *= Rat(q);
    }
    if (!b_.empty()) {
        auto root = exact_sqrt(Int(m_) * q);
        if (!root) throw RadicandNotSquare(std::to_string(m_) + "*q is not a square at q=" + q.get_str());
        Rat bval(0);
        qp = Rat(1);
        for (const Rat& c : b_) {
            bval += c * qp;
            qp *= Rat(q);
        }
        res += bval * Rat(*root);
    }
    return res;
}

std::string QPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rat& c, long i, bool with_s) {
        if (c == 0) return;
        Rat cc = c;
        if (first) {
            if (cc < 0) {
                os << "-";
                cc = -cc;
            }
        } else {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        const bool unit = (cc == 1) && (i > 0 || with_s);
        if (!unit) os << cc.get_str();
        if (i > 0 || with_s) {
            if (!unit) os << "*";
            if (i == 1) os << "q";
            if (i > 1) os << "q^" << i;
            if (with_s) {
                if (i > 0) os << "*";
                os << "s";
            }
        }
        first = false;
    };
    for (long i = static_cast<long>(a_.size()) - 1; i >= 0; --i) emit(a_[i], i, false);
    for (long i = static_cast<long>(b_.size()) - 1; i >= 0; --i) emit(b_[i], i, true);
    if (first) os << "0";
    return os.str();
}

QPoly qp_mod(const QPoly& P, const QPoly& M) {
    if (P.has_radical_part() || M.has_radical_part())
        throw std::invalid_argument("qp_mod: operands must be s-free");
    if (M.is_zero()) throw std::invalid_argument("qp_mod: zero modulus");
    const Rat lead = M.a_.back();
    if (lead != 1 && lead != -1) throw NonMonicModulus("modulus leading coefficient must be a unit");
    std::vector<Rat> r = P.a_;
    const long dm = static_cast<long>(M.a_.size()) - 1;
    while (static_cast<long>(r.size()) - 1 >= dm && !r.empty()) {
        const long dr = static_cast<long>(r.size()) - 1;
        Rat c = r.back() / lead;
        for (long j = 0; j <= dm; ++j) r[dr - dm + j] -= c * M.a_[j];
        trim(r);
    }
    return QPoly::from_parts(0, std::move(r), {});
}

std::optional<QPoly> qp_divexact(const QPoly& P, const QPoly& D) {
    if (D.has_radical_part()) throw std::invalid_argument("qp_divexact: divisor must be s-free");
    if (D.is_zero()) throw std::invalid_argument("qp_divexact: zero divisor");
    auto divide = [&](std::vector<Rat> num) -> std::optional<std::vector<Rat>> {
        const long dd = static_cast<long>(D.a_.size()) - 1;
        const Rat lead = D.a_.back();
        std::vector<Rat> quot;
        if (static_cast<long>(num.size()) - 1 >= dd)
            quot.assign(num.size() - dd, Rat(0));
        while (static_cast<long>(num.size()) - 1 >= dd && !num.empty()) {
            const long dn = static_cast<long>(num.size()) - 1;
            Rat c = num.back() / lead;
            quot[dn - dd] = c;
            for (long j = 0; j <= dd; ++j) num[dn - dd + j] -= c * D.a_[j];
            trim(num);
        }
        if (!num.empty()) return std::nullopt;
        return quot;
    };
    auto qa = divide(P.a_);
    if (!qa) return std::nullopt;
    auto qb = divide(P.b_);
    if (!qb) return std::nullopt;
    return QPoly::from_parts(P.m_, std::move(*qa), std::move(*qb));
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int m;

    explicit Parser(const std::string& text, int radicand) : s(text), m(radicand) {}

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    QPoly expr() {
        QPoly r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    QPoly term() {
        QPoly r = power();
        for (;;) {
            if (eat('*')) {
                r *= power();
            } else if (eat('/')) {
                QPoly d = power();
                if (!d.is_constant() || d.is_zero())
                    throw std::invalid_argument("'/' only divides by a nonzero constant: " + s);
                r = Rat(Rat(1) / d.constant_term()) * r;
            } else {
                return r;
            }
        }
    }

    QPoly power() {
        QPoly base = atom();
        if (eat('^')) {
            QPoly e = atom();
            if (!e.is_constant()) throw std::invalid_argument("exponent must be a constant");
            auto ei = as_integer(e.constant_term());
            if (!ei || *ei < 0) throw std::invalid_argument("exponent must be a nonnegative integer");
            return base.pow(ei->get_ui());
        }
        return base;
    }

    QPoly atom() {
        skip();
        if (eat('-')) return -power();
        if (eat('(')) {
            QPoly r = expr();
            if (!eat(')')) throw std::invalid_argument("missing ')': " + s);
            return r;
        }
        if (pos >= s.size()) throw std::invalid_argument("unexpected end of polynomial: " + s);
        char c = s[pos];
        if (c == 'q') {
            ++pos;
            return QPoly::var_q();
        }
        if (c == 's') {
            ++pos;
            if (m != 2 && m != 3)
                throw std::invalid_argument("'s' used but no radicand declared: " + s);
            return QPoly::var_s(m);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return QPoly(Rat(Int(s.substr(start, pos - start))));
        }
        throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in: " + s);
    }
};

}  // namespace

QPoly parse_qpoly(const std::string& text, int m) {
    Parser p(text, m);
    QPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) throw std::invalid_argument("trailing input in polynomial: " + text);
    return r;
}

// ---------------------------------------------------------------------------
// Families

QFamily QFamily::pow_odd(long base, Int min_q, int radicand) {
    QFamily f;
    f.kind = Kind::PowOdd;
    f.base = base;
    f.min_q = std::move(min_q);
    f.radicand = radicand;
    return f;
}

QFamily QFamily::prime_powers(Int min_q) {
    QFamily f;
    f.kind = Kind::PrimePowers;
    f.min_q = std::move(min_q);
    return f;
}

QFamily QFamily::prime_powers_mod(long mod, long res, Int min_q) {
    QFamily f;
    f.kind = Kind::PrimePowersMod;
    f.mod = mod;
    f.res = res;
    f.min_q = std::move(min_q);
    return f;
}

std::vector<Int> QFamily::members_upto(const Int& bound) const {
    std::vector<Int> out;
    if (kind == Kind::PowOdd) {
        Int q = base;
        while (q <= bound) {
            if (q >= min_q) out.push_back(q);
            q *= base * base;
        }
        return out;
    }
    if (!fits_i64(bound)) throw std::overflow_error("family enumeration bound too large");
    const long b = to_i64(bound);
    if (b > 50'000'000) throw std::overflow_error("family enumeration bound too large");
    std::vector<bool> sieve(b + 1, true);
    for (long p = 2; p <= b; ++p) {
        if (!sieve[p]) continue;
        for (long x = 2 * p; x <= b; x += p) sieve[x] = false;
        Int q = p;
        while (q <= bound) {
            if (q >= min_q && (kind == Kind::PrimePowers || (q % mod) == res)) out.push_back(q);
            q *= p;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool QFamily::contains(const Int& q) const {
    if (q < min_q) return false;
    if (kind == Kind::PowOdd) {
        Int x = base;
        while (x < q) x *= base * base;
        return x == q;
    }
    // prime power test
    Int n = q;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            if (n != 1) return false;
            n = p;
            break;
        }
    }
    if (kind == Kind::PrimePowersMod && (q % mod) != res) return false;
    return true;
}

std::string QFamily::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::PowOdd:
            os << "q = " << base << "^(2k+1), q >= " << min_q.get_str();
            break;
        case Kind::PrimePowers:
            os << "prime powers q >= " << min_q.get_str();
            break;
        case Kind::PrimePowersMod:
            os << "prime powers q = " << res << " (mod " << mod << "), q >= " << min_q.get_str();
            break;
    }
    return os.str();
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Refuted: return "refuted";
        case Verdict::Undetermined: return "undetermined";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Eventual positivity

namespace {

// Rewrites P(q, s) as a one-variable polynomial in t, where t = s = sqrt(mq)
// and q = t^2/m; for s-free P the variable is q itself. Returns integer
// coefficients after clearing the (positive) common denominator.
std::vector<Int> to_single_variable(const QPoly& P, int fam_radicand) {
    std::vector<Rat> t;
    auto bump = [&](size_t i, const Rat& v) {
        if (t.size() <= i) t.resize(i + 1, Rat(0));
        t[i] += v;
    };
    if (!P.has_radical_part()) {
        for (size_t i = 0; i < P.parts_a().size(); ++i) bump(i, P.parts_a()[i]);
    } else {
        const int m = P.radicand();
        if (fam_radicand != m)
            throw MixedRadicand("family radicand does not match polynomial radicand");
        Rat mp(1);
        for (size_t i = 0; i < P.parts_a().size(); ++i) {
            bump(2 * i, P.parts_a()[i] / mp);
            mp *= m;
        }
        mp = 1;
        for (size_t i = 0; i < P.parts_b().size(); ++i) {
            bump(2 * i + 1, P.parts_b()[i] / mp);
            mp *= m;
        }
    }
    while (!t.empty() && t.back() == 0) t.pop_back();
    Int den(1);
    for (const Rat& c : t) {
        Int d(c.get_den());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Int> out(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        Rat scaled = t[i] * Rat(den);
        out[i] = Int(scaled.get_num());
    }
    return out;
}

}  // namespace

PositivityCert eventually_positive(const QPoly& P, const QFamily& fam, bool allow_zero) {
    PositivityCert cert;
    if (P.is_zero()) {
        cert.verdict = allow_zero ? Verdict::Verified : Verdict::Refuted;
        cert.note = "zero polynomial";
        if (!allow_zero) {
            auto w = fam.members_upto(fam.min_q + 64);
            if (!w.empty()) cert.failing.push_back(w.front());
        }
        return cert;
    }
    std::vector<Int> T = to_single_variable(P, fam.radicand);
    // constant: sign decides for the whole family
    if (T.size() == 1) {
        const bool ok = allow_zero ? T[0] >= 0 : T[0] > 0;
        cert.verdict = ok ? Verdict::Verified : Verdict::Refuted;
        if (!ok) {
            auto w = fam.members_upto(fam.min_q + 64);
            if (!w.empty()) cert.failing.push_back(w.front());
        }
        return cert;
    }
    const Int lead = T.back();
    // Cauchy bound: no root of T beyond 1 + max |c_i| / |lead|
    Int maxc(0);
    for (size_t i = 0; i + 1 < T.size(); ++i) maxc = std::max(maxc, Int(abs(T[i])));
    Int bound_t = 1 + (maxc + abs(lead) - 1) / abs(lead);
    // map back to the q scale
    Int bound_q = P.has_radical_part() ? bound_t * bound_t / fam.radicand : bound_t;
    if (bound_q < fam.min_q) bound_q = fam.min_q;
    cert.threshold = bound_q;

    std::vector<Int> members;
    try {
        members = fam.members_upto(bound_q);
    } catch (const std::overflow_error&) {
        cert.verdict = Verdict::Undetermined;
        cert.note = "family enumeration below the root bound is too large";
        return cert;
    }
    for (const Int& q : members) {
        Rat v = P.eval(q);
        cert.checked.push_back(q);
        const bool ok = allow_zero ? v >= 0 : v > 0;
        if (!ok) cert.failing.push_back(q);
    }
    if (!cert.failing.empty()) {
        cert.verdict = Verdict::Refuted;
        cert.note = "fails at listed family members";
        return cert;
    }
    if (lead < 0) {
        // all checked points pass but the tail is eventually negative:
        // exhibit an explicit witness beyond the bound
        Int q = bound_q + 1;
        for (;;) {
            auto more = fam.members_upto(2 * q);
            Int w(-1);
            for (const Int& c : more)
                if (c > bound_q) {
                    w = c;
                    break;
                }
            if (w > 0) {
                cert.failing.push_back(w);
                cert.verdict = Verdict::Refuted;
                cert.note = "negative leading coefficient; tail witness listed";
                return cert;
            }
            q *= 2;
            if (q > Int(1) << 40) {
                cert.verdict = Verdict::Undetermined;
                cert.note = "negative leading coefficient, no family member found in tail";
                return cert;
            }
        }
    }
    cert.verdict = Verdict::Verified;
    return cert;
}

Rat QRat::eval(const Int& q) const {
    Rat d = den.eval(q);
    if (d == 0) throw std::domain_error("QRat: denominator vanishes at q=" + q.get_str());
    return num.eval(q) / d;
}

std::string QRat::to_string() const {
    if (den == QPoly(Rat(1))) return num.to_string();
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

PositivityCert eventually_positive(const QRat& r, const QFamily& fam, bool allow_zero) {
    return eventually_positive(r.num * r.den, fam, allow_zero);
}

// ---------------------------------------------------------------------------
// Parameter boxes

void BoxExpr::add_term(QPoly coeff, const std::vector<std::string>& vars) {
    Term t;
    t.coeff = std::move(coeff);
    for (const std::string& v : vars) {
        size_t idx = params_.size();
        for (size_t i = 0; i < params_.size(); ++i)
            if (params_[i].name == v) idx = i;
        if (idx == params_.size()) throw std::invalid_argument("unknown box parameter: " + v);
        if (std::find(t.vars.begin(), t.vars.end(), idx) != t.vars.end())
            throw NotAffine("parameter '" + v + "' appears with degree > 1");
        t.vars.push_back(idx);
    }
    std::sort(t.vars.begin(), t.vars.end());
    terms_.push_back(std::move(t));
}

QPoly BoxExpr::at_corner(std::uint32_t mask) const {
    QPoly total;
    for (const Term& t : terms_) {
        QPoly v = t.coeff;
        for (size_t idx : t.vars) v *= (mask >> idx) & 1 ? params_[idx].hi : params_[idx].lo;
        total += v;
    }
    return total;
}

BoxCheck box_inequality(const BoxExpr& expr, const QFamily& fam, bool allow_zero) {
    if (expr.param_count() > 20) throw std::invalid_argument("too many box parameters");
    BoxCheck out;
    out.verdict = Verdict::Verified;
    const std::uint32_t corners = 1u << expr.param_count();
    for (std::uint32_t mask = 0; mask < corners; ++mask) {
        PositivityCert c = eventually_positive(expr.at_corner(mask), fam, allow_zero);
        if (c.verdict == Verdict::Undetermined) {
            out.verdict = Verdict::Undetermined;
            out.note = c.note;
            return out;
        }
        for (const Int& q : c.failing)
            if (std::find(out.failing.begin(), out.failing.end(), q) == out.failing.end())
                out.failing.push_back(q);
    }
    if (!out.failing.empty()) {
        std::sort(out.failing.begin(), out.failing.end());
        out.verdict = Verdict::Refuted;
        out.note = "fails at listed family members";
    }
    return out;
}

}  // namespace hhcert
