// Batch front door: run certification suites over the bundled datasets and
// emit machine- or human-readable verdict reports.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hhcert/io.hpp"
#include "hhcert/matoracle.hpp"
#include "hhcert/paperdata.hpp"

namespace {

int emit(const hhcert::Report& rep, const std::string& format, const std::string& out,
         bool timings) {
    std::string text = format == "json" ? rep.to_json(timings) + "\n" : rep.to_text();
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        f << text;
    }
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of minimum-polynomial spectra for p-elements "
                 "of the rank-2 twisted families in cross characteristic"};
    app.require_subcommand(1);

    std::string format = "text", out, data_dir, case_filter;
    std::uint64_t seed = 0x5eed1e5;
    std::size_t cap = std::size_t(1) << 20;
    bool timings = false;
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("HHCERT_FORMAT");
    app.add_option("--out", out, "write the report to a file")->envname("HHCERT_OUT");
    app.add_option("--data-dir", data_dir, "dataset directory")->envname("HHCERT_DATA_DIR");
    app.add_option("--seed", seed, "RNG seed for randomized sweeps")->envname("HHCERT_SEED");
    app.add_option("--cap", cap, "closure size cap")->envname("HHCERT_CAP");
    app.add_flag("--timings", timings, "include wall-clock time in JSON output")
        ->envname("HHCERT_TIMINGS");

    auto opts = [&] {
        hhcert::SuiteOptions o;
        o.data_dir = data_dir;
        o.seed = seed;
        o.cap = cap;
        o.case_filter = case_filter;
        return o;
    };

    // certify <suite>
    std::string suite;
    CLI::App* certify = app.add_subcommand("certify", "run a named certification suite");
    {
        std::vector<std::string> names = hhcert::suite_names();
        names.push_back("all");
        certify->add_option("suite", suite, "one of: spectrum jordan su3-tables d4-ledger "
                                            "f4-ledger g2r-table oracle all")
            ->required()
            ->check(CLI::IsMember(names));
        certify->add_option("--case", case_filter, "restrict ledger suites to matching case ids");
    }

    // su3-tables --verify
    bool su3_verify = false;
    CLI::App* su3cmd = app.add_subcommand("su3-tables", "verify the unitary-group value tables");
    su3cmd->add_flag("--verify", su3_verify, "run the per-row verification matrix");

    // verify-ledger [--case id | --all]
    bool ledger_all = false;
    std::string ledger_case;
    CLI::App* ledger = app.add_subcommand("verify-ledger",
                                          "certify the Brauer-combination ledgers");
    ledger->add_option("--case", ledger_case, "case id substring to run");
    ledger->add_flag("--all", ledger_all, "run every ledger case");

    // spectrum-trace <file>
    std::string trace_path;
    CLI::App* spectrum = app.add_subcommand("spectrum-trace",
                                            "invert a trace vector and report the spectrum");
    spectrum->add_option("file", trace_path, "JSON trace {\"n\", \"values\", \"ell\"}")
        ->required();

    // check-ineq <poly>
    std::string ineq_poly, family_kind = "prime_powers";
    long fam_base = 2, fam_mod = 0, fam_res = 0, fam_min = 2;
    int radicand = 0;
    bool allow_zero = false;
    CLI::App* ineq = app.add_subcommand("check-ineq",
                                        "certify eventual positivity of a polynomial over a q-family");
    ineq->add_option("poly", ineq_poly, "polynomial in q and s, e.g. \"q^4-q^2+1-3*q*s\"")
        ->required();
    ineq->add_option("--radicand", radicand, "s = sqrt(radicand * q); 0 for none")
        ->check(CLI::IsMember({0, 2, 3}));
    ineq->add_option("--family", family_kind, "pow_odd | prime_powers | prime_powers_mod");
    ineq->add_option("--base", fam_base, "base for pow_odd families");
    ineq->add_option("--mod", fam_mod, "modulus for prime_powers_mod");
    ineq->add_option("--res", fam_res, "residue for prime_powers_mod");
    ineq->add_option("--min-q", fam_min, "smallest family member");
    ineq->add_flag("--allow-zero", allow_zero, "certify >= 0 instead of > 0");

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify->parsed()) {
            return emit(hhcert::run_suite(suite, opts()), format, out, timings);
        }
        if (su3cmd->parsed()) {
            return emit(hhcert::run_suite("su3-tables", opts()), format, out, timings);
        }
        if (ledger->parsed()) {
            hhcert::SuiteOptions o = opts();
            if (!ledger_all) o.case_filter = ledger_case;
            hhcert::Report rep = hhcert::run_suite("d4-ledger", o);
            hhcert::Report f4 = hhcert::run_suite("f4-ledger", o);
            for (hhcert::Item& it : rep.items) it.id = "d4/" + it.id;
            for (hhcert::Item& it : f4.items) it.id = "f4/" + it.id;
            rep.suite = "verify-ledger";
            rep.merge(std::move(f4));
            rep.finalize();
            return emit(rep, format, out, timings);
        }
        if (spectrum->parsed()) {
            hhcert::CyclicTrace t = hhcert::trace_from_json(hhcert::load_json_file(trace_path));
            hhcert::MultVector m = hhcert::eigen_multiplicities(t);
            std::cout << hhcert::spectrum_report(m).dump(2) << "\n";
            return 0;
        }
        if (ineq->parsed()) {
            hhcert::QFamily fam;
            if (family_kind == "pow_odd")
                fam = hhcert::QFamily::pow_odd(fam_base, hhcert::Int(fam_min), radicand);
            else if (family_kind == "prime_powers_mod")
                fam = hhcert::QFamily::prime_powers_mod(fam_mod, fam_res, hhcert::Int(fam_min));
            else
                fam = hhcert::QFamily::prime_powers(hhcert::Int(fam_min));
            fam.radicand = radicand;
            hhcert::QPoly p = hhcert::parse_qpoly(ineq_poly, radicand);
            hhcert::PositivityCert cert = hhcert::eventually_positive(p, fam, allow_zero);
            hhcert::json j;
            j["verdict"] = hhcert::to_string(cert.verdict);
            j["threshold"] = cert.threshold.get_str();
            j["checked"] = hhcert::json::array();
            for (const auto& q : cert.checked) j["checked"].push_back(q.get_str());
            if (!cert.failing.empty()) {
                j["witnesses"] = hhcert::json::array();
                for (const auto& q : cert.failing) j["witnesses"].push_back(q.get_str());
            }
            if (!cert.note.empty()) j["note"] = cert.note;
            std::cout << j.dump(2) << "\n";
            // 0 verified, 2 refuted (witness), 3 inconclusive
            switch (cert.verdict) {
                case hhcert::Verdict::Verified: return 0;
                case hhcert::Verdict::Refuted: return 2;
                default: return 3;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
