#include "doctest.h"

#include "hhcert/cyclotomic.hpp"

using namespace hhcert;

namespace {
std::vector<Int> ipoly(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.emplace_back(c);
    return v;
}
}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == ipoly({-1, 1}));               // x - 1
    CHECK(cyclotomic_poly(2) == ipoly({1, 1}));                // x + 1
    CHECK(cyclotomic_poly(6) == ipoly({1, -1, 1}));            // x^2 - x + 1
    CHECK(cyclotomic_poly(12) == ipoly({1, 0, -1, 0, 1}));     // x^4 - x^2 + 1
    CHECK(cyclotomic_poly(8) == ipoly({1, 0, 0, 0, 1}));       // x^4 + 1
    CHECK(cyclotomic_poly(9) == ipoly({1, 0, 0, 1, 0, 0, 1}));
    CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
}

TEST_CASE("zeta basics") {
    CHECK(CycNum::zeta(4, 1).coeffs() == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(CycNum::zeta(2, 1).as_integer().value() == -1);
    CHECK(CycNum::zeta(3, 1) + CycNum::zeta(3, 2) == CycNum(Rat(-1)));
    CHECK(CycNum::zeta(5, 1) * CycNum::zeta(5, 4) == CycNum(Rat(1)));
    CHECK(CycNum::zeta(4, 1) + CycNum::zeta(4, 3) == CycNum(Rat(0)));
    // (1 + z3)(1 + z3^2) = 1 + z3 + z3^2 + 1 = 1
    CycNum one(Rat(1));
    CHECK((one + CycNum::zeta(3, 1)) * (one + CycNum::zeta(3, 2)) == one);
}

TEST_CASE("rational detection is exact") {
    CHECK(CycNum::zeta(6, 1) + CycNum::zeta(6, 5) == CycNum(Rat(1)));
    CHECK((CycNum::zeta(6, 1) + CycNum::zeta(6, 5)).as_integer().value() == 1);
    CHECK(!CycNum::zeta(5, 1).as_rational().has_value());
    CHECK((Rat(3) * CycNum::zeta(7, 0)).as_integer().value() == 3);
    CHECK(!(Rat(1, 2) * CycNum::zeta(3, 0)).as_integer().has_value());
}

TEST_CASE("conjugation and embedding") {
    CycNum z = CycNum::zeta(12, 1);
    CHECK(z.conj() == CycNum::zeta(12, 11));
    CHECK(z * z.conj() == CycNum(Rat(1)));
    CHECK(CycNum::zeta(3, 1).embedded(12) == CycNum::zeta(12, 4));
    CHECK_THROWS_AS(CycNum::zeta(3, 1).embedded(8), std::invalid_argument);
}
