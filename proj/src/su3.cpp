#include "hhcert/su3.hpp"

#include "hhcert/jordan2.hpp"

namespace hhcert {

namespace {
const QPoly kQ = QPoly::var_q();
}

QPoly mult_zu(const CharRow& row) {
    QPoly num = row.deg + (kQ - QPoly(1)) * row.val_u;
    auto quot = qp_divexact(num, kQ);
    if (!quot)
        throw NonPolynomialQuotient("(phi(1) + (q-1) phi(u)) not divisible by q for row " +
                                    row.name);
    return *quot;
}

QPoly mult_u_assignment(const CharRow& row, int rotation) {
    QPoly vterm;
    if (row.val_v3) {
        // three classes of equal size (q^3 - q)/3 with values (x, y, y) in
        // some rotation; the weighted sum is rotation-independent
        const QPoly size = Rat(1, 3) * (kQ.pow(3) - kQ);
        QPoly vals[3] = {row.val_v3->y, row.val_v3->y, row.val_v3->y};
        vals[rotation % 3] = row.val_v3->x;
        for (int i = 0; i < 3; ++i) vterm += size * vals[i];
    } else if (row.val_v) {
        vterm = (kQ.pow(3) - kQ) * (*row.val_v);
    } else {
        throw std::invalid_argument("row " + row.name + " has no value off Z(U)");
    }
    QPoly num = row.deg + vterm + (kQ - QPoly(1)) * row.val_u;
    auto quot = qp_divexact(num, kQ.pow(3));
    if (!quot)
        throw NonPolynomialQuotient("(phi|_U, 1) numerator not divisible by q^3 for row " +
                                    row.name);
    return *quot;
}

QPoly mult_u(const CharRow& row) { return mult_u_assignment(row, 0); }

QPoly nb2_bound(const CharRow& row) {
    QPoly mzu = mult_zu(row);
    QPoly mu = mult_u(row);
    QPoly num = (kQ - QPoly(1)) * (row.deg - mzu);
    auto quot = qp_divexact(num, Rat(2) * kQ);
    if (!quot)
        throw NonPolynomialQuotient("nb2 first term not divisible by 2q for row " + row.name);
    return *quot + Rat(1, 2) * (mzu - mu);
}

Pr5Result pr5_contradiction(const CharRow& row, BoundCase which, const QFamily& fam) {
    QPoly lower = nb2_bound(row);
    Pr5Result out;
    if (which == BoundCase::F1) {
        QRat f = f1_sym(row.deg);
        QRat diff = QRat(lower, QPoly(Rat(1))) - f;
        out.cert = eventually_positive(diff, fam);
    } else {
        QPoly f = f2_sym(row.deg);  // UnsupportedResidue propagates
        out.cert = eventually_positive(lower - f, fam);
    }
    out.refuted = out.cert.verdict == Verdict::Verified;
    return out;
}

GGValues gg_values(int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    GGValues g;
    // |H|/|U| = (q^2-1)(q^3 - eps), Gamma(t) = (q - eps)(q - 1), Gamma(u) = 1
    g.at_one = (kQ.pow(2) - QPoly(1)) * (kQ.pow(3) - QPoly(eps));
    g.at_t = (kQ - QPoly(eps)) * (kQ - QPoly(1));
    g.at_u = QPoly(1);
    return g;
}

PositivityCert gg_criterion(const QPoly& tau_deg, const QPoly& tau_t, const QPoly& tau_u,
                            const QFamily& fam) {
    QPoly expr = tau_deg + (kQ - QPoly(1)) * tau_t + kQ * tau_u;
    return eventually_positive(expr, fam);
}

bool gg_criterion(const Rat& tau_deg, const Rat& tau_t, const Rat& tau_u, const Int& q) {
    return tau_deg + tau_t * (Rat(q) - 1) + Rat(q) * tau_u > 0;
}

}  // namespace hhcert
