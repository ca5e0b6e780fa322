#pragma once

#include <optional>
#include <string>

#include "hhcert/qpoly.hpp"

namespace hhcert {

struct NonPolynomialQuotient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One character row of the unitary-group table: degree and the values at a
// long-root element u in Z(U) and at v in U \ Z(U). When U \ Z(U) splits into
// three classes the row carries the value pair (x on one class, y on the
// other two) instead of a single value.
struct CharRow {
    std::string name;
    QPoly deg;
    QPoly val_u;
    std::optional<QPoly> val_v;
    struct Split {
        QPoly x, y;
    };
    std::optional<Split> val_v3;
    std::string exists_if;  // existence condition, informational
};

// (phi|_{Z(U)}, 1) = (phi(1) + (q-1) phi(u)) / q, exact division required.
QPoly mult_zu(const CharRow& row);

// (phi|_U, 1) = (phi(1) + phi(v)(q^3 - q) + phi(u)(q - 1)) / q^3. For split
// rows the v-term is the class-size-weighted sum over (x, y, y).
QPoly mult_u(const CharRow& row);

// The same multiplicity with the split values assigned to the three classes
// in a chosen rotation; all three assignments must agree.
QPoly mult_u_assignment(const CharRow& row, int rotation);

// Lower bound for the number of nontrivial Jordan blocks of an involution:
// (q-1)(phi(1) - mult_zu)/(2q) + (mult_zu - mult_u)/2.
QPoly nb2_bound(const CharRow& row);

enum class BoundCase { F1, F2 };

struct Pr5Result {
    bool refuted = false;
    PositivityCert cert;
};

// Compares the nb2 lower bound against the f1/f2 upper bound for the row's
// degree: strict excess over the whole family refutes the configuration.
Pr5Result pr5_contradiction(const CharRow& row, BoundCase which, const QFamily& fam);

// Gelfand-Graev values at the identity, a transvection t, and a regular
// unipotent u, for H = SL3(q) (eps = +1) or SU3(q) (eps = -1).
struct GGValues {
    QPoly at_one, at_t, at_u;
};
GGValues gg_values(int eps);

// (tau|_H, Gamma) > 0 iff tau(1) + tau(t)(q-1) + q tau(u) > 0.
PositivityCert gg_criterion(const QPoly& tau_deg, const QPoly& tau_t, const QPoly& tau_u,
                            const QFamily& fam);
bool gg_criterion(const Rat& tau_deg, const Rat& tau_t, const Rat& tau_u, const Int& q);

}  // namespace hhcert
