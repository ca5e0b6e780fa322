#pragma once

#include <map>
#include <set>

#include "hhcert/io.hpp"
#include "hhcert/report.hpp"

namespace hhcert {

// Multilinear polynomial in named integer parameters with exact rational
// coefficients; the shape of every derived torus value and combination
// coefficient in the decomposition-ledger datasets.
class ParamPoly {
  public:
    ParamPoly() = default;
    explicit ParamPoly(const Rat& c);
    static ParamPoly var(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;
    std::set<std::string> variables() const;

    ParamPoly operator-() const;
    friend ParamPoly operator+(const ParamPoly& x, const ParamPoly& y);
    friend ParamPoly operator-(const ParamPoly& x, const ParamPoly& y);
    friend ParamPoly operator*(const ParamPoly& x, const ParamPoly& y);  // NotAffine on collision
    ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
    friend bool operator==(const ParamPoly& x, const ParamPoly& y);
    friend bool operator!=(const ParamPoly& x, const ParamPoly& y) { return !(x == y); }

    ParamPoly substituted(const std::map<std::string, Rat>& pin) const;

    // Adds weight * this to a box expression (term by term).
    void add_to_box(class BoxExpr& box, const QPoly& weight) const;

    std::string to_string() const;

  private:
    // sorted distinct parameter names per term
    std::map<std::vector<std::string>, Rat> terms_;
    void put(std::vector<std::string> vars, const Rat& c);
};

ParamPoly parse_parampoly(const std::string& text);

// --- Catalan-type prime-power equation p^a = r^b + 1 -------------------------

enum class ZgmCase { Mersenne, Fermat, PowerNine, NoSolution };
std::string to_string(ZgmCase c);

ZgmCase zgm_check(const Int& p, long a, const Int& r, long b);

struct ZgmSolution {
    Int p;
    long a;
    Int r;
    long b;
    ZgmCase c;
};
// All solutions with p^a <= limit; every one must classify into a listed case.
std::vector<ZgmSolution> zgm_sweep(const Int& limit);

// --- datasets ---------------------------------------------------------------

QFamily family_from_json(const json& j);

// Torus-value table (constant character values on each torus minus identity).
struct TorusTable {
    QFamily family;
    int radicand = 0;
    std::vector<std::pair<std::string, QPoly>> tori;
    QPoly min_degree_bound;
    struct Row {
        std::string name;
        std::optional<QPoly> degree;
        bool degree_ambiguous = false;
        std::map<std::string, Rat> combo;  // references to other rows, constant coeffs
        std::map<std::string, Int> values;
    };
    std::vector<Row> rows;
};
TorusTable load_torus_table(const json& j);
Report check_torus_table(const TorusTable& t);

// Decomposition ledger: unipotent base characters with their torus values
// (and degrees where stated), plus the per-l cases expressing each Brauer
// character as a parameter-laden combination.
struct Ledger {
    std::string group;
    QFamily family;
    std::vector<std::pair<std::string, QPoly>> tori;
    bool order_minus_one = true;  // criterion uses |T| - 1 (else |T|)
    struct Base {
        std::string name;
        std::optional<QPoly> degree;  // nullopt: ingested, unverified
        std::map<std::string, int> eta;
    };
    std::vector<Base> bases;
    std::optional<QPoly> modulus;
    std::map<std::string, QPoly> degree_bounds;  // e.g. "generic", "l3", "lgt3"
    std::optional<QPoly> h11_threshold;

    struct Entry {
        std::string name;
        std::vector<std::pair<std::string, ParamPoly>> combo;
        std::map<std::string, ParamPoly> tvalue;
        std::string deg_bound;  // "combo" or a degree_bounds key
        std::optional<QPoly> envelope;
        struct Refinement {
            Int q;
            std::string torus;
            Int envelope_value;
            Int degree_floor;
            std::string note;
        };
        std::vector<Refinement> refinements;
    };
    struct Case {
        std::string id;
        std::vector<std::pair<std::string, std::pair<QPoly, QPoly>>> params;  // name -> [lo, hi]
        std::map<std::string, Rat> pinned;
        std::string pinned_note;
        std::string deg_bound_default;
        std::vector<Entry> entries;
    };
    std::vector<Case> cases;
};
Ledger load_ledger(const json& j);

// Degree congruences of the base characters modulo the torus order.
Report check_congruences(const Ledger& led);

// Full certification of one case (or all when the filter is empty).
Report check_ledger(const Ledger& led, const std::string& case_filter = "");

// --- suite front door ---------------------------------------------------------

struct SuiteOptions {
    std::string data_dir;  // empty: compiled-in default
    std::uint64_t seed = 0x5eed1e5;
    std::size_t cap = std::size_t(1) << 20;
    std::string case_filter;
    int sample_count = 250;  // random property-test repetitions in suites
};

std::string default_data_dir();
std::vector<std::string> suite_names();  // excludes "all"
Report run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace hhcert
