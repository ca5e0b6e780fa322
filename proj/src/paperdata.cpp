#include "hhcert/paperdata.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hhcert {

// --- ParamPoly ---------------------------------------------------------------

ParamPoly::ParamPoly(const Rat& c) {
    if (c != 0) terms_.emplace(std::vector<std::string>{}, c);
}

ParamPoly ParamPoly::var(const std::string& name) {
    ParamPoly p;
    p.terms_.emplace(std::vector<std::string>{name}, Rat(1));
    return p;
}

void ParamPoly::put(std::vector<std::string> vars, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(vars);
    if (it == terms_.end()) {
        terms_.emplace(std::move(vars), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ParamPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("ParamPoly is not constant");
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::set<std::string> ParamPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [vars, c] : terms_) out.insert(vars.begin(), vars.end());
    return out;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [vars, c] : r.terms_) c = -c;
    return r;
}

ParamPoly operator+(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly r = x;
    for (const auto& [vars, c] : y.terms_) r.put(vars, c);
    return r;
}

ParamPoly operator-(const ParamPoly& x, const ParamPoly& y) { return x + (-y); }

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
    ParamPoly r;
    for (const auto& [vx, cx] : x.terms_) {
        for (const auto& [vy, cy] : y.terms_) {
            std::vector<std::string> vars = vx;
            for (const std::string& v : vy) {
                if (std::find(vars.begin(), vars.end(), v) != vars.end())
                    throw NotAffine("parameter '" + v + "' would acquire degree > 1");
                vars.push_back(v);
            }
            std::sort(vars.begin(), vars.end());
            r.put(std::move(vars), cx * cy);
        }
    }
    return r;
}

bool operator==(const ParamPoly& x, const ParamPoly& y) { return x.terms_ == y.terms_; }

ParamPoly ParamPoly::substituted(const std::map<std::string, Rat>& pin) const {
    ParamPoly r;
    for (const auto& [vars, c] : terms_) {
        Rat coeff = c;
        std::vector<std::string> rest;
        for (const std::string& v : vars) {
            auto it = pin.find(v);
            if (it == pin.end())
                rest.push_back(v);
            else
                coeff *= it->second;
        }
        if (coeff != 0) r.put(std::move(rest), coeff);
    }
    return r;
}

void ParamPoly::add_to_box(BoxExpr& box, const QPoly& weight) const {
    for (const auto& [vars, c] : terms_) box.add_term(c * weight, vars);
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [vars, c] : terms_) {
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
        if (cc != 1 || vars.empty()) os << cc.get_str();
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i > 0 || cc != 1) os << "*";
            os << vars[i];
        }
        first = false;
    }
    return os.str();
}

namespace {

struct PPParser {
    const std::string& s;
    size_t pos = 0;

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

    ParamPoly expr() {
        ParamPoly r = term();
        for (;;) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r += -term();
            else
                return r;
        }
    }
    ParamPoly term() {
        ParamPoly r = atom();
        for (;;) {
            if (eat('*'))
                r = r * atom();
            else if (eat('/')) {
                ParamPoly d = atom();
                if (!d.is_constant() || d.constant_value() == 0)
                    throw std::invalid_argument("'/' only divides by a nonzero constant: " + s);
                r = r * ParamPoly(Rat(1) / d.constant_value());
            } else {
                return r;
            }
        }
    }
    ParamPoly atom() {
        skip();
        if (eat('-')) return -atom();
        if (eat('(')) {
            ParamPoly r = expr();
            if (!eat(')')) throw std::invalid_argument("missing ')' in: " + s);
            return r;
        }
        if (pos >= s.size()) throw std::invalid_argument("unexpected end of expression: " + s);
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return ParamPoly(Rat(Int(s.substr(start, pos - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return ParamPoly::var(s.substr(start, pos - start));
        }
        throw std::invalid_argument("unexpected character in parameter expression: " + s);
    }
};

}  // namespace

ParamPoly parse_parampoly(const std::string& text) {
    PPParser p{text};
    ParamPoly r = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw std::invalid_argument("trailing input in parameter expression: " + text);
    return r;
}

// --- zgm ---------------------------------------------------------------------

std::string to_string(ZgmCase c) {
    switch (c) {
        case ZgmCase::Mersenne: return "p=2, b=1, r Mersenne";
        case ZgmCase::Fermat: return "r=2, a=1, p Fermat";
        case ZgmCase::PowerNine: return "p^a = 9";
        case ZgmCase::NoSolution: return "no solution";
    }
    return "?";
}

namespace {
bool int_is_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }
}  // namespace

ZgmCase zgm_check(const Int& p, long a, const Int& r, long b) {
    if (p < 2 || r < 2 || a < 1 || b < 1) return ZgmCase::NoSolution;
    if (!int_is_prime(p) || !int_is_prime(r)) return ZgmCase::NoSolution;
    Int pa = int_pow(p, a), rb = int_pow(r, b);
    if (pa != rb + 1) return ZgmCase::NoSolution;
    if (pa == 9) return ZgmCase::PowerNine;
    if (p == 2 && b == 1) return ZgmCase::Mersenne;
    if (r == 2 && a == 1) return ZgmCase::Fermat;
    return ZgmCase::NoSolution;
}

std::vector<ZgmSolution> zgm_sweep(const Int& limit) {
    std::vector<ZgmSolution> out;
    if (!fits_i64(limit)) throw std::overflow_error("zgm sweep limit too large");
    const long lim = to_i64(limit);
    std::vector<bool> sieve(lim + 1, true);
    for (long p = 2; p <= lim; ++p) {
        if (!sieve[p]) continue;
        for (long x = 2 * p; x <= lim; x += p) sieve[x] = false;
        for (Int pa = p;; pa *= p) {
            if (pa > lim) break;
            long a = 0;
            for (Int t = pa; t > 1; t /= p) ++a;
            Int n = pa - 1;
            if (n < 2) continue;
            // is n a prime power r^b?
            Int r = 0;
            for (long d = 2; Int(d) * d <= n; ++d) {
                if (n % d == 0) {
                    r = d;
                    break;
                }
            }
            if (r == 0) r = n;  // n itself prime
            Int m = n;
            long b = 0;
            while (m % r == 0) {
                m /= r;
                ++b;
            }
            if (m != 1) continue;
            out.push_back({Int(p), a, r, b, zgm_check(Int(p), a, r, b)});
        }
    }
    return out;
}

// --- dataset loading -----------------------------------------------------------

QFamily family_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    Int min_q(j.at("min_q").get<long>());
    int radicand = j.value("radicand", 0);
    QFamily f;
    if (kind == "pow_odd") {
        f = QFamily::pow_odd(j.at("base").get<long>(), min_q, radicand);
    } else if (kind == "prime_powers") {
        f = QFamily::prime_powers(min_q);
    } else if (kind == "prime_powers_mod") {
        f = QFamily::prime_powers_mod(j.at("mod").get<long>(), j.at("res").get<long>(), min_q);
    } else {
        throw std::invalid_argument("unknown family kind: " + kind);
    }
    f.radicand = radicand;
    return f;
}

TorusTable load_torus_table(const json& j) {
    TorusTable t;
    t.family = family_from_json(j.at("family"));
    t.radicand = t.family.radicand;
    for (const auto& torus : j.at("tori"))
        t.tori.emplace_back(torus.at("name").get<std::string>(),
                            parse_qpoly(torus.at("order").get<std::string>(), t.radicand));
    t.min_degree_bound = parse_qpoly(j.at("min_degree_bound").get<std::string>(), t.radicand);
    for (const auto& row : j.at("characters")) {
        TorusTable::Row r;
        r.name = row.at("name").get<std::string>();
        if (row.contains("degree") && !row["degree"].is_null())
            r.degree = parse_qpoly(row["degree"].get<std::string>(), t.radicand);
        r.degree_ambiguous = row.value("degree_ambiguous", false);
        if (row.contains("combo"))
            for (const auto& [ref, c] : row["combo"].items())
                r.combo.emplace(ref, rat_from_json(c));
        for (const auto& [torus, v] : row.at("values").items())
            r.values.emplace(torus, Int(v.get<long>()));
        t.rows.push_back(std::move(r));
    }
    return t;
}

Report check_torus_table(const TorusTable& t) {
    Report rep;
    rep.suite = "torus-table";
    std::map<std::string, const TorusTable::Row*> byname;
    for (const auto& r : t.rows) byname.emplace(r.name, &r);

    for (const auto& row : t.rows) {
        // recompute combination rows from their constituents
        if (!row.combo.empty()) {
            bool ok = true;
            std::string bad;
            for (const auto& [torus, _] : row.values) {
                Int sum(0);
                Rat acc(0);
                (void)sum;
                for (const auto& [ref, c] : row.combo) {
                    auto it = byname.find(ref);
                    if (it == byname.end()) throw std::invalid_argument("unknown row " + ref);
                    acc += c * Rat(it->second->values.at(torus));
                }
                if (acc != Rat(row.values.at(torus))) {
                    ok = false;
                    bad = torus;
                    break;
                }
            }
            rep.add("recompute/" + row.name, ok ? Verdict::Verified : Verdict::Refuted,
                    ok ? "combination reproduces stored values" : "mismatch on " + bad);
            // degree from the combination when every constituent's degree is usable
            bool have_all = true;
            QPoly deg;
            for (const auto& [ref, c] : row.combo) {
                const TorusTable::Row* src = byname.at(ref);
                if (!src->degree || src->degree_ambiguous) {
                    have_all = false;
                    break;
                }
                deg += c * (*src->degree);
            }
            if (have_all && row.degree && !row.degree_ambiguous) {
                rep.add("degree/" + row.name, deg == *row.degree ? Verdict::Verified : Verdict::Refuted,
                        "combination degree vs stored");
            }
        }
        // tr1-style certificate per torus
        const QPoly* lower = nullptr;
        if (row.degree && !row.degree_ambiguous) lower = &*row.degree;
        for (const auto& [torus_name, order] : t.tori) {
            auto vit = row.values.find(torus_name);
            if (vit == row.values.end()) continue;
            const Int a = vit->second;
            std::string id = "value/" + row.name + "/" + torus_name;
            if (a >= 0) {
                rep.add(id, Verdict::Verified, "constant value " + a.get_str() + " >= 0");
                continue;
            }
            PositivityCert cert =
                torus_certificate(lower ? *lower : t.min_degree_bound, a, order, t.family);
            std::string detail = "-(" + a.get_str() + ")*(|T|-1) < " +
                                 (lower ? std::string("degree") : std::string("minimal-degree bound"));
            rep.add(id, cert.verdict, cert.verdict == Verdict::Verified ? detail : cert.note);
        }
    }
    rep.finalize();
    return rep;
}

// --- ledger ---------------------------------------------------------------------

Ledger load_ledger(const json& j) {
    Ledger led;
    led.group = j.at("group").get<std::string>();
    led.family = family_from_json(j.at("family"));
    const int m = led.family.radicand;
    for (const auto& torus : j.at("tori"))
        led.tori.emplace_back(torus.at("name").get<std::string>(),
                              parse_qpoly(torus.at("order").get<std::string>(), m));
    led.order_minus_one = j.at("criterion").get<std::string>() == "order_minus_one";
    for (const auto& b : j.at("base_characters")) {
        Ledger::Base base;
        base.name = b.at("name").get<std::string>();
        if (b.contains("degree") && !b["degree"].is_null())
            base.degree = parse_qpoly(b["degree"].get<std::string>(), m);
        for (const auto& [torus, v] : b.at("eta").items()) base.eta.emplace(torus, v.get<int>());
        led.bases.push_back(std::move(base));
    }
    if (j.contains("modulus")) led.modulus = parse_qpoly(j["modulus"].get<std::string>(), m);
    if (j.contains("degree_bounds"))
        for (const auto& [name, poly] : j["degree_bounds"].items())
            led.degree_bounds.emplace(name, parse_qpoly(poly.get<std::string>(), m));
    if (j.contains("h11_threshold"))
        led.h11_threshold = parse_qpoly(j["h11_threshold"].get<std::string>(), m);
    for (const auto& c : j.at("cases")) {
        Ledger::Case cs;
        cs.id = c.at("id").get<std::string>();
        if (c.contains("params"))
            for (const auto& p : c["params"])
                cs.params.emplace_back(
                    p.at("name").get<std::string>(),
                    std::make_pair(parse_qpoly(p.at("lo").get<std::string>(), m),
                                   parse_qpoly(p.at("hi").get<std::string>(), m)));
        if (c.contains("pinned"))
            for (const auto& [name, v] : c["pinned"].items())
                cs.pinned.emplace(name, rat_from_json(v));
        cs.pinned_note = c.value("pinned_note", "");
        cs.deg_bound_default = c.value("deg_bound_default", "generic");
        for (const auto& e : c.at("entries")) {
            Ledger::Entry en;
            en.name = e.at("name").get<std::string>();
            for (const auto& term : e.at("combo"))
                en.combo.emplace_back(term[0].get<std::string>(),
                                      parse_parampoly(term[1].get<std::string>()));
            for (const auto& [torus, v] : e.at("tvalue").items())
                en.tvalue.emplace(torus, parse_parampoly(v.get<std::string>()));
            en.deg_bound = e.value("deg_bound", cs.deg_bound_default);
            if (e.contains("envelope")) en.envelope = parse_qpoly(e["envelope"].get<std::string>(), m);
            if (e.contains("refinements"))
                for (const auto& r : e["refinements"]) {
                    Ledger::Entry::Refinement ref;
                    ref.q = Int(r.at("q").get<long>());
                    ref.torus = r.at("torus").get<std::string>();
                    ref.envelope_value = Int(r.at("envelope_value").get<long>());
                    ref.degree_floor = Int(r.at("degree_floor").get<long>());
                    ref.note = r.value("note", "");
                    en.refinements.push_back(std::move(ref));
                }
            cs.entries.push_back(std::move(en));
        }
        led.cases.push_back(std::move(cs));
    }
    return led;
}

Report check_congruences(const Ledger& led) {
    Report rep;
    rep.suite = led.group + "-congruences";
    if (!led.modulus) {
        rep.finalize();
        return rep;
    }
    for (const auto& base : led.bases) {
        if (!base.degree) continue;
        for (const auto& [torus, eta] : base.eta) {
            QPoly r = qp_mod(*base.degree, *led.modulus);
            bool ok = r == QPoly(Rat(eta));
            rep.add("congruence/" + base.name, ok ? Verdict::Verified : Verdict::Refuted,
                    base.name + "(1) = " + std::to_string(eta) + " (mod " + led.modulus->to_string() +
                        ")");
            (void)torus;
            break;  // single torus order for the congruence list
        }
    }
    rep.finalize();
    return rep;
}

namespace {

using FlatCombo = std::map<std::string, ParamPoly>;

// Expands an entry into base-character coordinates, resolving references to
// earlier entries of the same case.
FlatCombo flatten(const Ledger& led, const Ledger::Case& cs, const Ledger::Entry& entry,
                  const std::map<std::string, FlatCombo>& done) {
    FlatCombo out;
    std::set<std::string> base_names;
    for (const auto& b : led.bases) base_names.insert(b.name);
    for (const auto& [ref, coeff] : entry.combo) {
        if (base_names.count(ref)) {
            out[ref] = out.count(ref) ? out[ref] + coeff : coeff;
        } else {
            auto it = done.find(ref);
            if (it == done.end())
                throw std::invalid_argument("entry '" + entry.name + "' in case '" + cs.id +
                                            "' references unknown '" + ref + "'");
            for (const auto& [base, inner] : it->second) {
                ParamPoly add = coeff * inner;
                out[base] = out.count(base) ? out[base] + add : add;
            }
        }
    }
    return out;
}

ParamPoly torus_value(const Ledger& led, const FlatCombo& flat, const std::string& torus) {
    std::map<std::string, int> eta;
    for (const auto& b : led.bases) eta[b.name] = b.eta.at(torus);
    ParamPoly val;
    for (const auto& [base, coeff] : flat) val += coeff * ParamPoly(Rat(eta.at(base)));
    return val;
}

std::vector<BoxExpr::Param> case_params(const Ledger::Case& cs,
                                        const std::map<std::string, Rat>& pinned) {
    std::vector<BoxExpr::Param> out;
    for (const auto& [name, bounds] : cs.params) {
        if (pinned.count(name)) continue;  // pinned parameters drop out after substitution
        out.push_back({name, bounds.first, bounds.second});
    }
    return out;
}

std::string fmt_rat(const Rat& r) { return r.get_str(); }

}  // namespace

Report check_ledger(const Ledger& led, const std::string& case_filter) {
    Report rep;
    rep.suite = led.group + "-ledger";

    for (const auto& cs : led.cases) {
        if (!case_filter.empty() && cs.id.find(case_filter) == std::string::npos) continue;
        std::map<std::string, FlatCombo> flats;

        for (const auto& entry : cs.entries) {
            FlatCombo flat = flatten(led, cs, entry, flats);
            flats.emplace(entry.name, flat);
            const std::string base_id = "case " + cs.id + "/" + entry.name;

            // run the worst-case box and, when pins exist, the pinned variant
            std::vector<std::pair<std::string, std::map<std::string, Rat>>> variants;
            variants.emplace_back("", std::map<std::string, Rat>{});
            if (!cs.pinned.empty()) variants.emplace_back("/pinned", cs.pinned);

            for (const auto& [suffix, pin] : variants) {
                std::vector<BoxExpr::Param> params = case_params(cs, pin);

                for (const auto& [torus_name, torus_order] : led.tori) {
                    auto tv_it = entry.tvalue.find(torus_name);
                    if (tv_it == entry.tvalue.end()) continue;
                    ParamPoly recomputed = torus_value(led, flat, torus_name).substituted(pin);
                    ParamPoly stored = tv_it->second.substituted(pin);
                    const std::string cell = base_id + "/" + torus_name + suffix;

                    if (suffix.empty()) {
                        rep.add("recompute/" + cell,
                                recomputed == stored ? Verdict::Verified : Verdict::Refuted,
                                recomputed == stored
                                    ? "combination gives " + stored.to_string()
                                    : "stored " + stored.to_string() + " vs recomputed " +
                                          recomputed.to_string());
                    }

                    // value >= 0 over the whole box settles the cell outright
                    {
                        BoxExpr nonneg(params);
                        recomputed.add_to_box(nonneg, QPoly(Rat(1)));
                        BoxCheck c = box_inequality(nonneg, led.family, /*allow_zero=*/true);
                        if (c.ok()) {
                            rep.add(cell, Verdict::Verified, "value nonnegative on the box");
                            continue;
                        }
                    }

                    QPoly weight = led.order_minus_one ? torus_order - QPoly(1) : torus_order;

                    if (entry.envelope) {
                        // route via the stated bound: -value <= B(q) on the box,
                        // then B(q) * weight < degree bound, member by member
                        BoxExpr dom(params);
                        dom.add_term(*entry.envelope, {});
                        recomputed.add_to_box(dom, QPoly(Rat(1)));
                        BoxCheck domchk = box_inequality(dom, led.family, /*allow_zero=*/true);
                        rep.add(cell + "/bound-dominates", domchk.verdict,
                                "-value <= " + entry.envelope->to_string() + " on the box");
                        if (!domchk.ok()) {
                            rep.add(cell, Verdict::Undetermined, "stated bound does not dominate");
                            continue;
                        }
                        const QPoly& dpoly = led.degree_bounds.at(entry.deg_bound);
                        PositivityCert main =
                            eventually_positive(dpoly - *entry.envelope * weight, led.family);
                        if (main.verdict == Verdict::Verified) {
                            std::string detail;
                            if (!main.checked.empty()) {
                                const Int& q0 = main.checked.front();
                                Rat lhs = (entry.envelope->eval(q0)) * weight.eval(q0);
                                Rat rhs = dpoly.eval(q0);
                                detail = "q=" + q0.get_str() + ": " +
                                         fmt_rat(entry.envelope->eval(q0)) + "*" +
                                         fmt_rat(weight.eval(q0)) + " = " + fmt_rat(lhs) + " < " +
                                         fmt_rat(rhs);
                            }
                            rep.add(cell, Verdict::Verified, detail);
                            continue;
                        }
                        if (main.verdict == Verdict::Undetermined) {
                            rep.add(cell, Verdict::Undetermined, main.note);
                            continue;
                        }
                        // fails at finitely many members; try the stored refinements
                        std::vector<std::string> open;
                        for (const Int& qf : main.failing) {
                            bool resolved = false;
                            std::string note = "no refinement";
                            for (const auto& ref : entry.refinements) {
                                if (ref.q != qf || ref.torus != torus_name) continue;
                                Rat w = weight.eval(qf);
                                Rat d = dpoly.eval(qf);
                                // floor = least multiple of the weight >= degree bound
                                Int wi(w.get_num());
                                Int di(d.get_num());
                                if (!is_integer(w) || !is_integer(d))
                                    throw std::logic_error("non-integral refinement data");
                                Int floor = ((di + wi - 1) / wi) * wi;
                                if (floor != ref.degree_floor) {
                                    note = "stored degree floor " + ref.degree_floor.get_str() +
                                           " != recomputed " + floor.get_str();
                                    break;
                                }
                                Int lhs = ref.envelope_value * wi;
                                if (lhs < floor) {
                                    resolved = true;
                                } else {
                                    note = "open: " + ref.envelope_value.get_str() + "*" +
                                           wi.get_str() + " = " + lhs.get_str() +
                                           " >= " + floor.get_str() +
                                           (ref.note.empty() ? "" : " (" + ref.note + ")");
                                }
                                break;
                            }
                            if (!resolved) open.push_back("q=" + qf.get_str() + " " + note);
                        }
                        if (open.empty()) {
                            rep.add(cell, Verdict::Verified, "refinements settle all failing members");
                        } else {
                            std::string d;
                            for (const auto& o : open) d += (d.empty() ? "" : "; ") + o;
                            rep.add(cell, Verdict::Undetermined, d);
                        }
                        continue;
                    }

                    // direct certificate: degree bound + value * weight > 0 at corners
                    BoxExpr direct(params);
                    QPoly dpoly;
                    if (entry.deg_bound == "combo") {
                        for (const auto& [base_name, coeff] : flat) {
                            const Ledger::Base* b = nullptr;
                            for (const auto& bb : led.bases)
                                if (bb.name == base_name) b = &bb;
                            if (!b || !b->degree)
                                throw std::invalid_argument("combo degree needs all base degrees: " +
                                                            base_name);
                            coeff.substituted(pin).add_to_box(direct, *b->degree);
                        }
                    } else {
                        dpoly = led.degree_bounds.at(entry.deg_bound);
                        direct.add_term(dpoly, {});
                    }
                    recomputed.add_to_box(direct, weight);
                    BoxCheck c = box_inequality(direct, led.family, /*allow_zero=*/false);
                    std::string detail = "-value*" + std::string(led.order_minus_one ? "(|T|-1)" : "|T|") +
                                         " < degree (" + entry.deg_bound + ")";
                    if (c.ok()) {
                        rep.add(cell, Verdict::Verified, detail);
                    } else if (c.verdict == Verdict::Refuted) {
                        std::string fails;
                        for (const Int& q : c.failing) fails += (fails.empty() ? "" : ",") + q.get_str();
                        rep.add(cell, Verdict::Undetermined, "criterion fails at q in {" + fails + "}");
                    } else {
                        rep.add(cell, Verdict::Undetermined, c.note);
                    }
                }
            }

            // degree consistency: a parameter-free combination's degree must
            // clear the generic bound claimed for it
            if (entry.deg_bound != "combo" && led.degree_bounds.count("generic") &&
                entry.deg_bound == "generic") {
                bool have_all = true;
                for (const auto& [base_name, coeff] : flat) {
                    const Ledger::Base* b = nullptr;
                    for (const auto& bb : led.bases)
                        if (bb.name == base_name) b = &bb;
                    if (!b || !b->degree) have_all = false;
                }
                if (have_all) {
                    BoxExpr degchk(case_params(cs, {}));
                    for (const auto& [base_name, coeff] : flat) {
                        for (const auto& bb : led.bases)
                            if (bb.name == base_name) coeff.add_to_box(degchk, *bb.degree);
                    }
                    degchk.add_term(-led.degree_bounds.at("generic"), {});
                    BoxCheck c = box_inequality(degchk, led.family, /*allow_zero=*/true);
                    rep.add("degcheck/case " + cs.id + "/" + entry.name, c.verdict,
                            "combination degree >= generic bound on the box");
                }
            }
        }
    }
    rep.finalize();
    return rep;
}

}  // namespace hhcert
