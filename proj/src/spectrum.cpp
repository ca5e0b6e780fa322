#include "hhcert/spectrum.hpp"

#include <algorithm>
#include <numeric>

namespace hhcert {

namespace {

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

// Common field for the whole trace.
long ambient_order(const CyclicTrace& t) {
    long N = t.n;
    for (const CycNum& v : t.values) N = lcm_long(N, v.order());
    return N;
}

constexpr std::int64_t kFastCoeffLimit = std::int64_t(1) << 31;

}  // namespace

Int MultVector::total() const {
    Int s(0);
    for (const Int& m : mults) s += m;
    return s;
}

bool is_conjugate_symmetric(const CyclicTrace& t) {
    for (long k = 0; k < t.n; ++k) {
        const CycNum& a = t.values[k];
        const CycNum& b = t.values[(t.n - k) % t.n];
        if (a.conj() != b) return false;
    }
    return true;
}

MultVector eigen_multiplicities(const CyclicTrace& t) {
    if (t.n < 1 || static_cast<long>(t.values.size()) != t.n)
        throw std::invalid_argument("trace must have exactly n values");
    if (t.ell && *t.ell > 0 && t.n % *t.ell == 0)
        throw NotSemisimple("ell divides the element order; use the Jordan-form route");

    const long n = t.n;
    const long N = ambient_order(t);
    const CycField& F = CycField::get(N);
    const long d = F.degree();
    const long step = N / n;

    std::vector<CycNum> vals;
    vals.reserve(n);
    for (const CycNum& v : t.values) vals.push_back(v.embedded(N));

    // int64 fast path when every coefficient is a modest integer
    const auto* tab64 = F.power_table_i64();
    bool fast = tab64 != nullptr;
    std::vector<std::int64_t> flat;
    if (fast) {
        flat.assign(static_cast<size_t>(n) * d, 0);
        for (long k = 0; k < n && fast; ++k) {
            const std::vector<Rat>& c = vals[k].coeffs();
            for (long u = 0; u < d; ++u) {
                if (!is_integer(c[u]) || !Int(c[u].get_num()).fits_slong_p()) {
                    fast = false;
                    break;
                }
                std::int64_t x = Int(c[u].get_num()).get_si();
                if (x > kFastCoeffLimit || x < -kFastCoeffLimit) {
                    fast = false;
                    break;
                }
                flat[static_cast<size_t>(k) * d + u] = x;
            }
        }
    }

    MultVector out;
    out.n = n;
    out.mults.resize(n);
    std::vector<std::int64_t> acc64;
    std::vector<Rat> acc;

    for (long j = 0; j < n; ++j) {
        // sum_k values[k] * zeta_n^{-jk}, accumulated by exponent in zeta_N
        Rat mult;
        if (fast) {
            acc64.assign(N, 0);
            for (long k = 0; k < n; ++k) {
                long e = static_cast<long>((static_cast<long long>(n - j) * k) % n) * step % N;
                const std::int64_t* row = &flat[static_cast<size_t>(k) * d];
                for (long u = 0; u < d; ++u) {
                    if (row[u] != 0) acc64[(u + e) % N] += row[u];
                }
            }
            std::vector<std::int64_t> red(d, 0);
            for (long w = 0; w < N; ++w) {
                if (acc64[w] == 0) continue;
                const std::vector<std::int64_t>& rep = (*tab64)[w];
                for (long i = 0; i < d; ++i)
                    if (rep[i] != 0) red[i] += acc64[w] * rep[i];
            }
            for (long i = 1; i < d; ++i)
                if (red[i] != 0)
                    throw NonIntegralMultiplicity("inversion produced an irrational multiplicity");
            mult = Rat(red[0], n);
        } else {
            acc.assign(N, Rat(0));
            for (long k = 0; k < n; ++k) {
                long e = static_cast<long>((static_cast<long long>(n - j) * k) % n) * step % N;
                const std::vector<Rat>& c = vals[k].coeffs();
                for (long u = 0; u < d; ++u)
                    if (c[u] != 0) acc[(u + e) % N] += c[u];
            }
            std::vector<Rat> red(d, Rat(0));
            for (long w = 0; w < N; ++w) {
                if (acc[w] == 0) continue;
                const std::vector<Int>& rep = F.power(w);
                for (long i = 0; i < d; ++i)
                    if (rep[i] != 0) red[i] += acc[w] * Rat(rep[i]);
            }
            for (long i = 1; i < d; ++i)
                if (red[i] != 0)
                    throw NonIntegralMultiplicity("inversion produced an irrational multiplicity");
            mult = red[0] / Rat(n);
        }
        mult.canonicalize();
        auto m = as_integer(mult);
        if (!m) throw NonIntegralMultiplicity("multiplicity of eigenvalue " + std::to_string(j) +
                                              " is not an integer");
        if (*m < 0) throw NegativeMultiplicity("multiplicity of eigenvalue " + std::to_string(j) +
                                               " is negative");
        out.mults[j] = *m;
    }

    auto deg = t.values[0].as_integer();
    if (!deg || out.total() != *deg)
        throw NonIntegralMultiplicity("multiplicities do not sum to the degree");
    return out;
}

CyclicTrace trace_of(const MultVector& m) {
    const long n = m.n;
    const CycField& F = CycField::get(n);
    const long d = F.degree();
    CyclicTrace t;
    t.n = n;
    t.values.reserve(n);
    for (long k = 0; k < n; ++k) {
        std::vector<Int> acc(n, Int(0));
        for (long j = 0; j < n; ++j)
            if (m.mults[j] != 0) acc[static_cast<long>((static_cast<long long>(j) * k) % n)] += m.mults[j];
        std::vector<Rat> red(d, Rat(0));
        for (long w = 0; w < n; ++w) {
            if (acc[w] == 0) continue;
            const std::vector<Int>& rep = F.power(w);
            for (long i = 0; i < d; ++i)
                if (rep[i] != 0) red[i] += Rat(acc[w] * rep[i]);
        }
        t.values.push_back(CycNum::from_coeffs(n, std::move(red)));
    }
    return t;
}

long minpoly_degree_semisimple(const MultVector& m) {
    return static_cast<long>(
        std::count_if(m.mults.begin(), m.mults.end(), [](const Int& x) { return x > 0; }));
}

std::vector<long> missing_eigenvalues(const MultVector& m) {
    std::vector<long> out;
    for (long j = 0; j < m.n; ++j)
        if (m.mults[j] == 0) out.push_back(j);
    return out;
}

Tr1Decomposition tr1_decompose(const CyclicTrace& t, const Int& a) {
    const CycNum av((Rat(a)));
    for (long k = 1; k < t.n; ++k)
        if (t.values[k] != av)
            throw NotConstant("trace is not constant off the identity");
    auto deg = t.values[0].as_integer();
    if (!deg) throw NonIntegral("degree chi(1) is not a rational integer");
    Int num = *deg - a;
    if (num % t.n != 0) throw NonIntegral("(chi(1) - a) / |C| is not an integer; not a character");
    Tr1Decomposition out;
    out.k = num / t.n;
    out.proper = a >= 0 || (-a) * (t.n - 1) < *deg;
    return out;
}

CyclicTrace tr1_reconstruct(long n, const Int& k, const Int& a) {
    CyclicTrace t;
    t.n = n;
    t.values.reserve(n);
    t.values.push_back(CycNum(Rat(k * n + a)));
    for (long i = 1; i < n; ++i) t.values.push_back(CycNum(Rat(a)));
    return t;
}

bool torus_certificate(const Int& deg_lower, const Int& a, const Int& torus_order) {
    if (a >= 0) return true;
    return (-a) * (torus_order - 1) < deg_lower;
}

PositivityCert torus_certificate(const QPoly& deg_lower, const Int& a, const QPoly& torus_order,
                                 const QFamily& fam) {
    if (a >= 0) {
        PositivityCert cert;
        cert.verdict = Verdict::Verified;
        cert.note = "constant value is nonnegative";
        return cert;
    }
    QPoly gap = deg_lower - Rat(-a) * (torus_order - QPoly(1));
    return eventually_positive(gap, fam);
}

}  // namespace hhcert
