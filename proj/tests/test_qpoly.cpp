#include "doctest.h"

#include "hhcert/qpoly.hpp"

using namespace hhcert;

namespace {
const QPoly q = QPoly::var_q();
}

TEST_CASE("parse and print round trip") {
    CHECK(parse_qpoly("q^4-q^2+1") == q.pow(4) - q.pow(2) + QPoly(1));
    CHECK(parse_qpoly("(q-1)*(q^2+q)") == q.pow(3) - q);
    CHECK(parse_qpoly("q^3*(q^3+1)^2/2") == Rat(1, 2) * (q.pow(3) * (q.pow(3) + QPoly(1)).pow(2)));
    CHECK(parse_qpoly("-3") == QPoly(-3));
    CHECK_THROWS(parse_qpoly("q/q"));
    CHECK_THROWS(parse_qpoly("q +"));
    CHECK_THROWS(parse_qpoly("s"));  // no radicand declared
}

TEST_CASE("radical arithmetic") {
    QPoly s2 = QPoly::var_s(2);
    CHECK(s2 * s2 == Rat(2) * q);
    QPoly t1 = parse_qpoly("q^2+q*s+q+s+1", 2);
    QPoly t2 = parse_qpoly("q^2-q*s+q-s+1", 2);
    CHECK(t1 * t2 == parse_qpoly("q^4-q^2+1"));
    CHECK(t1.eval(8) == 109);
    CHECK(t2.eval(8) == 37);
    CHECK_THROWS_AS(t1.eval(4), RadicandNotSquare);  // 2*4 = 8 is not a square
    CHECK_THROWS_AS(QPoly::var_s(2) + QPoly::var_s(3), MixedRadicand);
    // a vanishing radical part drops the tag
    CHECK((s2 - s2).radicand() == 0);
}

TEST_CASE("qp_mod") {
    QPoly mod = parse_qpoly("q^4-q^2+1");
    CHECK(qp_mod(q.pow(12), mod) == QPoly(1));
    CHECK(qp_mod(q * mod, mod) == QPoly(0));
    // q^3 (q^3+1)^2 / 2 = -1 (mod q^4 - q^2 + 1)
    CHECK(qp_mod(parse_qpoly("q^3*(q^3+1)^2/2"), mod) == QPoly(-1));
    CHECK_THROWS_AS(qp_mod(q, Rat(2) * q), NonMonicModulus);
}

TEST_CASE("exact division") {
    CHECK(qp_divexact(q.pow(3) - q, q).value() == q.pow(2) - QPoly(1));
    CHECK(!qp_divexact(q.pow(2) + QPoly(1), q).has_value());
}

TEST_CASE("family enumeration") {
    QFamily f4 = QFamily::pow_odd(2, Int(8), 2);
    CHECK(f4.members_upto(Int(3000)) == std::vector<Int>({Int(8), Int(32), Int(128), Int(512), Int(2048)}));
    CHECK(f4.contains(Int(32)));
    CHECK(!f4.contains(Int(16)));
    QFamily pp = QFamily::prime_powers(Int(2));
    auto m = pp.members_upto(Int(10));
    CHECK(m == std::vector<Int>({Int(2), Int(3), Int(4), Int(5), Int(7), Int(8), Int(9)}));
    QFamily su = QFamily::prime_powers_mod(4, 3, Int(3));
    auto s = su.members_upto(Int(30));
    CHECK(s == std::vector<Int>({Int(3), Int(7), Int(11), Int(19), Int(23), Int(27)}));
}

TEST_CASE("eventual positivity") {
    QFamily f = QFamily::pow_odd(2, Int(2), 0);
    SUBCASE("verified with explicit low checks") {
        PositivityCert c = eventually_positive(parse_qpoly("q^5-q^3-q*(q^2+q+1)"), f);
        CHECK(c.verdict == Verdict::Verified);
        CHECK(!c.checked.empty());
    }
    SUBCASE("refuted with witness") {
        PositivityCert c = eventually_positive(parse_qpoly("q-10"), f);
        CHECK(c.verdict == Verdict::Refuted);
        CHECK(c.failing == std::vector<Int>({Int(2), Int(8)}));
    }
    SUBCASE("negative leading coefficient yields a witness") {
        PositivityCert c = eventually_positive(parse_qpoly("100-q"), f);
        CHECK(c.verdict == Verdict::Refuted);
        CHECK(!c.failing.empty());
    }
    SUBCASE("radical polynomial over its family") {
        QFamily fam = QFamily::pow_odd(2, Int(8), 2);
        // degree bound for l = 3 stays above the torus-order threshold scale
        QPoly d3 = parse_qpoly("(q-1)*(q^4+q^3+q)*s/2", 2);
        PositivityCert c = eventually_positive(d3 - parse_qpoly("q^4", 2), fam);
        CHECK(c.verdict == Verdict::Verified);
    }
    SUBCASE("threshold shortcut fails exactly at q=8") {
        QFamily fam = QFamily::pow_odd(2, Int(8), 2);
        QPoly thr = parse_qpoly("q*(q^3+q^2+1)/8");
        PositivityCert c = eventually_positive(thr - parse_qpoly("2*q^3"), fam);
        CHECK(c.verdict == Verdict::Refuted);
        CHECK(c.failing == std::vector<Int>({Int(8)}));
    }
}

TEST_CASE("box corners") {
    // a + d(1 - x) is multilinear; extrema at corners
    BoxExpr e({{"a", QPoly(0), QPoly(1)}, {"d", QPoly(2), q * q}, {"x", QPoly(1), q}});
    e.add_term(QPoly(1), {"a"});
    e.add_term(QPoly(1), {"d"});
    e.add_term(-QPoly(1), {"d", "x"});
    QFamily f = QFamily::pow_odd(2, Int(8), 2);
    // q^3 + value > 0 everywhere on the box
    BoxExpr cert({{"a", QPoly(0), QPoly(1)}, {"d", QPoly(2), q * q}, {"x", QPoly(1), q}});
    cert.add_term(q.pow(3), {});
    cert.add_term(QPoly(1), {"a"});
    cert.add_term(QPoly(1), {"d"});
    cert.add_term(-QPoly(1), {"d", "x"});
    CHECK(box_inequality(cert, f).verdict == Verdict::Verified);
    CHECK_THROWS_AS(e.add_term(QPoly(1), {"a", "a"}), NotAffine);
}

TEST_CASE("qrat comparison") {
    QRat a(parse_qpoly("2*q^3-7*q^2+1"), parse_qpoly("4*(q-1)"));
    QRat b(parse_qpoly("(2*q^3-7*q^2+1)*2"), parse_qpoly("8*(q-1)"));
    CHECK(a == b);
    CHECK(a.eval(3) == Rat(-1));
}
