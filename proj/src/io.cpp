#include "hhcert/io.hpp"

#include <fstream>
#include <sstream>

namespace hhcert {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json_file(const std::string& path) {
    return json::parse(read_file(path));
}

namespace {
json int_to_json(const Int& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}
Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    return Int(j.get<std::string>());
}
}  // namespace

json rat_to_json(const Rat& r) {
    return json::array({int_to_json(Int(r.get_num())), int_to_json(Int(r.get_den()))});
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(int_from_json(j));
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be [num, den]");
    Rat r(int_from_json(j[0]), int_from_json(j[1]));
    r.canonicalize();
    return r;
}

json cyc_to_json(const CycNum& v) {
    json j;
    j["n"] = v.order();
    j["c"] = json::array();
    for (const Rat& c : v.coeffs()) j["c"].push_back(rat_to_json(c));
    return j;
}

CycNum cyc_from_json(const json& j) {
    if (j.is_number_integer() || (j.is_array() && j.size() == 2 && !j[0].is_array()))
        return CycNum(rat_from_json(j));  // bare rational shorthand
    const long n = j.at("n").get<long>();
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("c")) coeffs.push_back(rat_from_json(c));
    return CycNum::from_coeffs(n, std::move(coeffs));
}

json trace_to_json(const CyclicTrace& t) {
    json j;
    j["n"] = t.n;
    j["values"] = json::array();
    for (const CycNum& v : t.values) j["values"].push_back(cyc_to_json(v));
    if (t.ell) j["ell"] = *t.ell;
    return j;
}

CyclicTrace trace_from_json(const json& j) {
    CyclicTrace t;
    t.n = j.at("n").get<long>();
    for (const auto& v : j.at("values")) t.values.push_back(cyc_from_json(v));
    if (j.contains("ell") && !j["ell"].is_null()) t.ell = j["ell"].get<long>();
    return t;
}

json spectrum_report(const MultVector& m) {
    json j;
    j["degree"] = minpoly_degree_semisimple(m);
    j["order"] = m.n;
    j["hall_higman"] = minpoly_degree_semisimple(m) == m.n;
    j["missing_eigenvalues"] = missing_eigenvalues(m);
    return j;
}

std::vector<Mat> generators_from_json(const json& j) {
    const long p = j.at("field").at("p").get<long>();
    const long k = j.at("field").at("k").get<long>();
    const long dim = j.at("dim").get<long>();
    const FF& F = FF::get(p, k);
    std::vector<Mat> gens;
    for (const auto& g : j.at("generators")) {
        if (static_cast<long>(g.size()) != dim * dim)
            throw std::invalid_argument("generator entry count does not match dim^2");
        Mat m(F, dim);
        for (long i = 0; i < dim * dim; ++i) {
            long v = g[i].get<long>();
            if (v < 0 || v >= F.q()) throw std::invalid_argument("generator entry out of range");
            m.e[i] = static_cast<FF::elt>(v);
        }
        gens.push_back(std::move(m));
    }
    if (gens.empty()) throw std::invalid_argument("generator file has no generators");
    return gens;
}

json generators_to_json(const std::vector<Mat>& gens) {
    json j;
    j["field"] = {{"p", gens.front().F->p()}, {"k", gens.front().F->k()}};
    j["dim"] = gens.front().n;
    j["generators"] = json::array();
    for (const Mat& g : gens) {
        json row = json::array();
        for (FF::elt e : g.e) row.push_back(static_cast<long>(e));
        j["generators"].push_back(row);
    }
    return j;
}

}  // namespace hhcert
