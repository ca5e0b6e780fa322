#include "hhcert/matoracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hhcert {

namespace {

std::uint64_t mat_key_or_throw(const Mat& m) {
    auto k = m.packed_key();
    if (!k) throw std::invalid_argument("matrix too large for packed closure key");
    return *k;
}

}  // namespace

Closure closure(const std::vector<Mat>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    const FF& F = *gens.front().F;
    const long n = gens.front().n;
    Closure out;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    std::deque<std::size_t> work;
    Mat id = Mat::identity(F, n);
    seen.emplace(mat_key_or_throw(id), 0);
    out.elements.push_back(id);
    work.push_back(0);
    while (!work.empty()) {
        std::size_t cur = work.front();
        work.pop_front();
        for (const Mat& g : gens) {
            Mat next = out.elements[cur] * g;
            std::uint64_t key = mat_key_or_throw(next);
            if (seen.emplace(key, out.elements.size()).second) {
                out.elements.push_back(std::move(next));
                if (out.elements.size() > cap)
                    throw ClosureCapExceeded("group order exceeds cap " + std::to_string(cap));
                work.push_back(out.elements.size() - 1);
            }
        }
    }
    return out;
}

std::size_t closure_order(const std::vector<Mat>& gens, std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
    const FF& F = *gens.front().F;
    const long n = gens.front().n;
    if (F.q() == 2 && n * n <= 64) {
        // bit-packed BFS: the packed word is both the state and the key
        std::vector<Gf2Mat> g2;
        for (const Mat& g : gens) g2.push_back(Gf2Mat::from_mat(g));
        std::unordered_set<std::uint64_t> seen;
        std::deque<std::uint64_t> work;
        std::uint64_t id = Gf2Mat::identity(n).packed_key();
        seen.insert(id);
        work.push_back(id);
        while (!work.empty()) {
            Gf2Mat cur = Gf2Mat::from_packed_key(work.front(), n);
            work.pop_front();
            for (const Gf2Mat& g : g2) {
                std::uint64_t key = (cur * g).packed_key();
                if (seen.insert(key).second) {
                    if (seen.size() > cap)
                        throw ClosureCapExceeded("group order exceeds cap " + std::to_string(cap));
                    work.push_back(key);
                }
            }
        }
        return seen.size();
    }
    return closure(gens, cap).order();
}

std::size_t element_order(const Mat& m, std::size_t cap) {
    Mat x = m;
    std::size_t k = 1;
    while (!x.is_identity()) {
        x = x * m;
        if (++k > cap) throw ClosureCapExceeded("element order exceeds cap");
    }
    return k;
}

// --- polynomial helpers over FF ---------------------------------------------

namespace {

void ffpoly_trim(FFPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

FFPoly ffpoly_monic(const FF& F, FFPoly p) {
    ffpoly_trim(p);
    if (p.empty()) return p;
    FF::elt s = F.inv(p.back());
    for (FF::elt& c : p) c = F.mul(c, s);
    return p;
}

}  // namespace

FFPoly ffpoly_mul(const FF& F, const FFPoly& a, const FFPoly& b) {
    if (a.empty() || b.empty()) return {};
    FFPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ffpoly_trim(r);
    return r;
}

FFPoly ffpoly_mod(const FF& F, FFPoly a, const FFPoly& b) {
    ffpoly_trim(a);
    if (b.empty()) throw std::domain_error("polynomial mod zero");
    const size_t db = b.size() - 1;
    const FF::elt lead_inv = F.inv(b.back());
    while (a.size() > db) {
        const size_t da = a.size() - 1;
        FF::elt c = F.mul(a.back(), lead_inv);
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j)
                a[da - db + j] = F.sub(a[da - db + j], F.mul(c, b[j]));
        ffpoly_trim(a);
        if (a.size() <= db) break;
    }
    return a;
}

FFPoly ffpoly_gcd(const FF& F, FFPoly a, FFPoly b) {
    ffpoly_trim(a);
    ffpoly_trim(b);
    while (!b.empty()) {
        FFPoly r = ffpoly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return ffpoly_monic(F, a);
}

FFPoly ffpoly_lcm(const FF& F, const FFPoly& a, const FFPoly& b) {
    if (a.empty() || b.empty()) return {};
    FFPoly g = ffpoly_gcd(F, a, b);
    // (a / g) * b
    FFPoly prod = ffpoly_mul(F, a, b);
    // exact division by g
    FFPoly quot(prod.size() - g.size() + 1, 0);
    FFPoly rem = prod;
    const size_t dg = g.size() - 1;
    while (rem.size() > dg) {
        const size_t dr = rem.size() - 1;
        FF::elt c = rem.back();  // g monic
        quot[dr - dg] = c;
        for (size_t j = 0; j < g.size(); ++j)
            rem[dr - dg + j] = F.sub(rem[dr - dg + j], F.mul(c, g[j]));
        ffpoly_trim(rem);
        if (rem.size() <= dg) break;
    }
    return ffpoly_monic(F, quot);
}

std::string ffpoly_to_string(const FF& F, const FFPoly& p) {
    (void)F;
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        if (p[i] == 0) continue;
        if (!first) os << " + ";
        if (i == 0 || p[i] != 1) os << static_cast<long>(p[i]);
        if (i >= 1) {
            if (p[i] != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FFPoly minpoly(const Mat& M) {
    const FF& F = *M.F;
    const long n = M.n;
    FFPoly result = {1};  // monic constant
    for (long s = 0; s < n; ++s) {
        // Krylov relation of e_s: eliminate the iterates v M^t carrying the
        // combination coordinates along (augmented elimination). The first
        // dependent iterate yields the monic annihilator of e_s.
        std::vector<std::vector<FF::elt>> rows;    // reduced iterates
        std::vector<long> pivots;                  // pivot column of each row
        std::vector<std::vector<FF::elt>> combos;  // iterate coordinates of each row
        std::vector<FF::elt> cur(n, 0);
        cur[s] = 1;
        for (long step = 0;; ++step) {
            std::vector<FF::elt> res = cur;
            std::vector<FF::elt> coord(step + 1, 0);
            coord[step] = 1;
            // rows need not be mutually reduced; rescan until stable
            for (bool again = true; again;) {
                again = false;
                for (size_t i = 0; i < rows.size(); ++i) {
                    FF::elt c = res[pivots[i]];
                    if (c == 0) continue;
                    for (long j = 0; j < n; ++j) res[j] = F.sub(res[j], F.mul(c, rows[i][j]));
                    for (size_t t = 0; t < combos[i].size(); ++t)
                        coord[t] = F.sub(coord[t], F.mul(c, combos[i][t]));
                    again = true;
                }
            }
            long piv = -1;
            for (long j = 0; j < n; ++j)
                if (res[j] != 0) {
                    piv = j;
                    break;
                }
            if (piv < 0) {
                FFPoly ann(coord.begin(), coord.end());
                result = ffpoly_lcm(F, result, ann);  // coord[step] stays 1: monic
                break;
            }
            FF::elt sc = F.inv(res[piv]);
            for (long j = 0; j < n; ++j) res[j] = F.mul(res[j], sc);
            for (FF::elt& c : coord) c = F.mul(c, sc);
            rows.push_back(std::move(res));
            pivots.push_back(piv);
            combos.push_back(std::move(coord));
            cur = vec_mul(cur, M);
        }
        if (result.size() == static_cast<size_t>(n) + 1) break;  // already maximal
    }
    return result;
}

Mat ffpoly_eval(const FFPoly& p, const Mat& M) {
    const FF& F = *M.F;
    Mat acc(F, M.n);
    for (size_t i = p.size(); i-- > 0;) {
        acc = acc * M;
        if (p[i] != 0) {
            for (long d = 0; d < M.n; ++d) acc.at(d, d) = F.add(acc.at(d, d), p[i]);
        }
    }
    return acc;
}

JordanType jordan_type_unipotent(const Mat& M) {
    const FF& F = *M.F;
    const long n = M.n;
    Mat N = M - Mat::identity(F, n);
    // rank sequence of N^k
    std::vector<long> ranks;
    ranks.push_back(n);
    Mat P = Mat::identity(F, n);
    for (long k = 1; k <= n + 1; ++k) {
        P = P * N;
        ranks.push_back(P.rank());
        if (ranks.back() == 0) break;
    }
    if (ranks.back() != 0) throw NotUnipotent("M - I is not nilpotent");
    // blocks of size >= k: ranks[k-1] - ranks[k]
    std::vector<long> parts;
    for (size_t k = 1; k < ranks.size(); ++k) {
        long geq_k = ranks[k - 1] - ranks[k];
        long geq_k1 = k < ranks.size() - 1 ? ranks[k] - ranks[k + 1] : 0;
        long exact = geq_k - geq_k1;
        for (long i = 0; i < exact; ++i) parts.push_back(static_cast<long>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    return JordanType(parts);
}

// --- permutations ------------------------------------------------------------

long Perm::order() const {
    std::vector<bool> seen(img.size(), false);
    long ord = 1;
    for (size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img[j];
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

Perm Perm::power(long k) const {
    const long n = degree();
    Perm r;
    r.img.resize(n);
    for (long i = 0; i < n; ++i) {
        long j = i;
        for (long t = 0; t < k; ++t) j = img[j];
        r.img[i] = j;
    }
    return r;
}

long Perm::fixed_points() const {
    long f = 0;
    for (size_t i = 0; i < img.size(); ++i)
        if (img[i] == static_cast<long>(i)) ++f;
    return f;
}

bool Perm::is_identity() const { return fixed_points() == degree(); }

Perm Perm::operator*(const Perm& o) const {
    Perm r;
    r.img.resize(img.size());
    for (size_t i = 0; i < img.size(); ++i) r.img[i] = o.img[img[i]];
    return r;
}

CyclicTrace perm_trace(const Perm& g, bool minus_trivial) {
    const long n = g.order();
    std::vector<long> fixes(n);
    Perm p;
    p.img.resize(g.degree());
    for (long i = 0; i < g.degree(); ++i) p.img[i] = i;
    for (long k = 0; k < n; ++k) {
        fixes[k] = p.fixed_points();
        p = p * g;
    }
    return perm_trace_from_fixes(fixes, minus_trivial);
}

CyclicTrace perm_trace_from_fixes(const std::vector<long>& fixes, bool minus_trivial) {
    CyclicTrace t;
    t.n = static_cast<long>(fixes.size());
    t.values.reserve(t.n);
    for (long f : fixes) t.values.push_back(CycNum(Rat(minus_trivial ? f - 1 : f)));
    return t;
}

Mat perm_matrix(const FF& F, const Perm& g) {
    Mat m(F, g.degree());
    for (long i = 0; i < g.degree(); ++i) m.at(i, g.img[i]) = 1;
    return m;
}

// --- spinning ----------------------------------------------------------------

RowSpace spin(const std::vector<Mat>& gens, const std::vector<std::vector<FF::elt>>& seeds) {
    const FF& F = *gens.front().F;
    const long n = gens.front().n;
    RowSpace space(F, n);
    std::deque<std::vector<FF::elt>> work;
    for (const auto& s : seeds)
        if (!space.insert(s)) work.push_back(s);
    // re-fetch reduced basis rows as work items
    work.clear();
    for (const auto& r : space.rows()) work.push_back(r);
    while (!work.empty()) {
        std::vector<FF::elt> v = std::move(work.front());
        work.pop_front();
        for (const Mat& g : gens) {
            std::vector<FF::elt> w = vec_mul(v, g);
            if (!space.insert(w)) work.push_back(std::move(w));
        }
    }
    return space;
}

Mat restrict_action(const Mat& M, const RowSpace& sub) {
    const FF& F = *M.F;
    const long r = sub.dim();
    Mat act(F, r);
    for (long i = 0; i < r; ++i) {
        auto coords = sub.coordinates(vec_mul(sub.rows()[i], M));
        if (!coords) throw std::invalid_argument("subspace is not invariant under the action");
        for (long j = 0; j < r; ++j) act.at(i, j) = (*coords)[j];
    }
    return act;
}

Mat quotient_action(const Mat& M, const RowSpace& sub) {
    const FF& F = *M.F;
    const long n = M.n;
    std::vector<bool> is_pivot(n, false);
    for (long p : sub.pivots()) is_pivot[p] = true;
    std::vector<long> free_cols;
    for (long j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    const long r = static_cast<long>(free_cols.size());
    Mat act(F, r);
    for (long i = 0; i < r; ++i) {
        std::vector<FF::elt> v(n, 0);
        v[free_cols[i]] = 1;
        std::vector<FF::elt> w = sub.reduce(vec_mul(v, M));
        for (long j = 0; j < r; ++j) act.at(i, j) = w[free_cols[j]];
    }
    return act;
}

namespace {

void chop_rec(const std::vector<Mat>& gens, const ChopOptions& opts, std::mt19937_64& rng,
              std::vector<ChopFactor>& out) {
    const FF& F = *gens.front().F;
    const long n = gens.front().n;
    if (n == 0) return;
    if (n == 1) {
        out.push_back({1, false, gens});
        return;
    }
    std::uniform_int_distribution<long> dist(0, F.q() - 1);
    for (int trial = 0; trial < opts.trials; ++trial) {
        std::vector<FF::elt> v(n, 0);
        bool nonzero = false;
        for (long j = 0; j < n; ++j) {
            v[j] = static_cast<FF::elt>(dist(rng));
            if (v[j]) nonzero = true;
        }
        if (!nonzero) continue;
        RowSpace sub = spin(gens, {v});
        if (sub.dim() == n) continue;
        std::vector<Mat> restr, quot;
        for (const Mat& g : gens) {
            restr.push_back(restrict_action(g, sub));
            quot.push_back(quotient_action(g, sub));
        }
        chop_rec(restr, opts, rng, out);
        chop_rec(quot, opts, rng, out);
        return;
    }
    out.push_back({n, true, gens});
}

}  // namespace

std::vector<ChopFactor> chop(const std::vector<Mat>& gens, const ChopOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    std::vector<ChopFactor> out;
    chop_rec(gens, opts, rng, out);
    std::sort(out.begin(), out.end(),
              [](const ChopFactor& a, const ChopFactor& b) { return a.dim < b.dim; });
    return out;
}

// --- invariant forms -----------------------------------------------------------

std::vector<Mat> invariant_bilinear_forms(const std::vector<Mat>& gens) {
    const FF& F = *gens.front().F;
    const long n = gens.front().n;
    const long nn = n * n;
    // unknowns B_{kl}; equations sum_{k,l} g_{ki} B_{kl} g_{lj} = B_{ij}
    RowSpace space(F, nn);  // row space of the constraint matrix
    for (const Mat& g : gens) {
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                std::vector<FF::elt> row(nn, 0);
                for (long k = 0; k < n; ++k) {
                    FF::elt gki = g.at(k, i);
                    if (gki == 0) continue;
                    for (long l = 0; l < n; ++l) {
                        FF::elt glj = g.at(l, j);
                        if (glj != 0)
                            row[k * n + l] = F.add(row[k * n + l], F.mul(gki, glj));
                    }
                }
                row[i * n + j] = F.sub(row[i * n + j], 1);
                space.insert(std::move(row));
            }
        }
    }
    // nullspace of the constraint rows
    std::vector<bool> is_pivot(nn, false);
    for (long p : space.pivots()) is_pivot[p] = true;
    std::vector<Mat> basis;
    for (long free = 0; free < nn; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FF::elt> sol(nn, 0);
        sol[free] = 1;
        // back-substitute: pivot rows are fully reduced, so each pivot column's
        // value is determined by the free columns
        for (size_t r = 0; r < space.rows().size(); ++r) {
            FF::elt val = space.rows()[r][free];
            if (val != 0) sol[space.pivots()[r]] = F.neg(val);
        }
        Mat B(F, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) B.at(i, j) = sol[i * n + j];
        basis.push_back(std::move(B));
    }
    return basis;
}

bool is_alternating(const Mat& B) {
    for (long i = 0; i < B.n; ++i) {
        if (B.at(i, i) != 0) return false;
        for (long j = 0; j < B.n; ++j)
            if (B.at(i, j) != B.F->neg(B.at(j, i))) return false;
    }
    return true;
}

bool preserves_form(const std::vector<Mat>& gens, const Mat& B) {
    for (const Mat& g : gens)
        if (g.transpose() * B * g != B) return false;
    return true;
}

// --- standard generators ---------------------------------------------------------

std::vector<Mat> sl_elementary_generators(const FF& F, long n) {
    std::vector<Mat> gens;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat m = Mat::identity(F, n);
            m.at(i, j) = 1;
            gens.push_back(std::move(m));
        }
    }
    return gens;
}

std::vector<Mat> sp_transvection_generators(long n) {
    if (n % 2 != 0) throw std::invalid_argument("symplectic dimension must be even");
    const FF& F = FF::get(2, 1);
    auto pairing = [&](std::uint64_t x, std::uint64_t y) -> FF::elt {
        FF::elt s = 0;
        for (long i = 0; i < n; i += 2) {
            bool xi = (x >> i) & 1, xj = (x >> (i + 1)) & 1;
            bool yi = (y >> i) & 1, yj = (y >> (i + 1)) & 1;
            if ((xi && yj) ^ (xj && yi)) s ^= 1;
        }
        return s;
    };
    std::vector<Mat> gens;
    for (std::uint64_t v = 1; v < (std::uint64_t(1) << n); ++v) {
        Mat t = Mat::identity(F, n);
        for (long i = 0; i < n; ++i) {
            std::uint64_t ei = std::uint64_t(1) << i;
            if (pairing(ei, v)) {
                for (long j = 0; j < n; ++j)
                    if ((v >> j) & 1) t.at(i, j) = F.add(t.at(i, j), 1);
            }
        }
        gens.push_back(std::move(t));
    }
    return gens;
}

namespace {

std::uint64_t pack_vec(const std::vector<FF::elt>& v, long q) {
    std::uint64_t key = 0;
    for (size_t i = v.size(); i-- > 0;) key = key * q + v[i];
    return key;
}

}  // namespace

std::vector<Perm> nonzero_vector_action(const std::vector<Mat>& gens) {
    const FF& F = *gens.front().F;
    const long n = gens.front().n;
    const long q = F.q();
    // enumerate all nonzero vectors in packed order
    std::vector<std::vector<FF::elt>> points;
    std::unordered_map<std::uint64_t, long> index;
    std::vector<FF::elt> v(n, 0);
    std::function<void(long)> gen = [&](long pos) {
        if (pos == n) {
            if (std::any_of(v.begin(), v.end(), [](FF::elt x) { return x != 0; })) {
                index.emplace(pack_vec(v, q), static_cast<long>(points.size()));
                points.push_back(v);
            }
            return;
        }
        for (long c = 0; c < q; ++c) {
            v[pos] = static_cast<FF::elt>(c);
            gen(pos + 1);
        }
        v[pos] = 0;
    };
    gen(0);
    std::vector<Perm> out;
    for (const Mat& g : gens) {
        Perm p;
        p.img.resize(points.size());
        for (size_t i = 0; i < points.size(); ++i)
            p.img[i] = index.at(pack_vec(vec_mul(points[i], g), q));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Perm> projective_point_action(const std::vector<Mat>& gens) {
    const FF& F = *gens.front().F;
    const long n = gens.front().n;
    const long q = F.q();
    // canonical representative: first nonzero coordinate scaled to 1
    auto canon = [&](std::vector<FF::elt> v) {
        for (long j = 0; j < n; ++j) {
            if (v[j] != 0) {
                FF::elt s = F.inv(v[j]);
                for (long t = 0; t < n; ++t) v[t] = F.mul(v[t], s);
                break;
            }
        }
        return v;
    };
    std::vector<std::vector<FF::elt>> points;
    std::unordered_map<std::uint64_t, long> index;
    std::vector<FF::elt> v(n, 0);
    std::function<void(long)> gen = [&](long pos) {
        if (pos == n) {
            if (std::any_of(v.begin(), v.end(), [](FF::elt x) { return x != 0; })) {
                std::vector<FF::elt> c = canon(v);
                std::uint64_t key = pack_vec(c, q);
                if (!index.count(key)) {
                    index.emplace(key, static_cast<long>(points.size()));
                    points.push_back(c);
                }
            }
            return;
        }
        for (long cvl = 0; cvl < q; ++cvl) {
            v[pos] = static_cast<FF::elt>(cvl);
            gen(pos + 1);
        }
        v[pos] = 0;
    };
    gen(0);
    std::vector<Perm> out;
    for (const Mat& g : gens) {
        Perm p;
        p.img.resize(points.size());
        for (size_t i = 0; i < points.size(); ++i)
            p.img[i] = index.at(pack_vec(canon(vec_mul(points[i], g)), q));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace hhcert
