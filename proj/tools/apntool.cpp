#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apn/expr.hpp"
#include "apn/families.hpp"
#include "apn/report.hpp"
#include "apn/search.hpp"
#include "apn/theorems.hpp"

namespace {

using namespace apn;

struct Caps {
    std::size_t table = Field::kDefaultTableCap;
    unsigned walsh_full = kWalshFullCap;
    unsigned walsh_zero = kWalshZeroCap;
};

Caps caps_from_env() {
    Caps c;
    if (const char* v = std::getenv("APNTOOL_TABLE_CAP")) c.table = std::stoull(v);
    if (const char* v = std::getenv("APNTOOL_WALSH_FULL_CAP")) c.walsh_full = std::stoul(v);
    if (const char* v = std::getenv("APNTOOL_WALSH_ZERO_CAP")) c.walsh_zero = std::stoul(v);
    return c;
}

std::vector<unsigned> parse_modulus(const std::string& s) {
    std::vector<unsigned> mod;
    std::string token;
    std::istringstream is(s);
    while (std::getline(is, token, ','))
        if (!token.empty()) mod.push_back(std::stoul(token));
    return mod;
}

// Shared map-source options for analyze/verify.
struct MapInput {
    unsigned p = 2, n = 0;
    std::string modulus, expr, lut, family;
    // family parameters
    unsigned k = 1, m = 0, i = 2;
    Elem a = 1, alpha = 0, beta = 0, gamma = 0;
    bool scan_params = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p", p, "field characteristic (default 2)");
        cmd->add_option("--n", n, "extension degree");
        cmd->add_option("--modulus", modulus, "modulus digits c0,c1,...,cn (low to high)");
        auto* src = cmd->add_option_group("source", "map source");
        src->add_option("--expr", expr, "map expression, e.g. \"x^3+Tr(x^9)\"");
        src->add_option("--lut", lut, "LUT file");
        src->add_option("--family", family, "family id (see 'family --list')");
        src->require_option(0, 1);
        cmd->add_option("--k", k, "family parameter k");
        cmd->add_option("--m", m, "family parameter m (half/third degree)");
        cmd->add_option("--i", i, "family parameter i");
        cmd->add_option("--a", a, "family parameter a (element code)");
        cmd->add_option("--alpha", alpha, "family parameter alpha (element code)");
        cmd->add_option("--beta", beta, "family parameter beta (element code)");
        cmd->add_option("--gamma", gamma, "family parameter gamma (element code)");
        cmd->add_flag("--scan-params", scan_params,
                      "scan for admissible (alpha,beta,gamma)");
    }

    FieldRef make_field(unsigned degree, const Caps& caps) const {
        if (degree == 0) throw CLI::ValidationError("--n", "a field degree is required");
        if (!modulus.empty())
            return Field::make(p, degree, parse_modulus(modulus), caps.table);
        return Field::make(p, degree, caps.table);
    }

    std::pair<MapTable, Provenance> resolve(const Caps& caps) const;
};

std::pair<MapTable, Provenance> MapInput::resolve(const Caps& caps) const {
    if (lut.empty() && expr.empty() && family.empty())
        throw std::runtime_error("one of --lut, --expr or --family is required");
    if (!lut.empty()) {
        std::ifstream in(lut);
        if (!in) throw std::runtime_error("cannot open LUT file: " + lut);
        MapTable f = read_lut(in, caps.table);
        Provenance prov{"lut", {{"path", lut}}};
        return {std::move(f), std::move(prov)};
    }
    if (!expr.empty()) {
        MapTable f = from_expression(make_field(n, caps), expr);
        Provenance prov{"expr", {{"expr", expr}}};
        return {std::move(f), std::move(prov)};
    }

    // family sources
    nlohmann::json detail{{"family", family}};
    auto univariate = [&](MapTable f) {
        Provenance prov{"family", detail};
        return std::make_pair(std::move(f), std::move(prov));
    };
    auto bivariate = [&](const BivariateMap& bv) {
        // default conversion basis: u1 = 1, u2 = smallest code outside the
        // half subfield
        const FieldRef big = make_field(2 * bv.half->n(), caps);
        Elem u2 = 0;
        for (Elem z = 2; z < big->q(); ++z)
            if (big->frobenius(z, bv.half->n()) != z) {
                u2 = z;
                break;
            }
        detail["basis_u1"] = 1;
        detail["basis_u2"] = u2;
        Provenance prov{"family", detail};
        return std::make_pair(bivariate_to_univariate(bv, big, 1, u2), std::move(prov));
    };

    if (family == "gold") {
        detail["k"] = k;
        return univariate(families::gold(make_field(n, caps), k));
    }
    if (family == "cube-trace")
        return univariate(families::cube_plus_trace(make_field(n, caps)));
    if (family == "cube-trace-2to1") {
        detail["a"] = a;
        return univariate(families::cube_trace_2to1(make_field(n, caps), a));
    }
    if (family == "budaghyan1" || family == "budaghyan2") {
        const unsigned deg = m ? 3 * m : n;
        detail["a"] = a;
        auto f = family == "budaghyan1" ? families::budaghyan_f1(make_field(deg, caps), a)
                                        : families::budaghyan_f2(make_field(deg, caps), a);
        return univariate(std::move(f));
    }
    if (family == "zhoupott-f" || family == "zhoupott-g") {
        const FieldRef half = make_field(m, caps);
        detail["m"] = m;
        detail["i"] = i;
        detail["k"] = k;
        detail["alpha"] = alpha;
        auto bv = family == "zhoupott-f" ? families::zhou_pott_f(half, i, k, alpha)
                                         : families::zhou_pott_g(half, i, k, alpha);
        return bivariate(bv);
    }
    if (family == "gologlu1" || family == "gologlu2") {
        const FieldRef half = make_field(m, caps);
        detail["m"] = m;
        detail["k"] = k;
        auto bv = family == "gologlu1" ? families::gologlu_f1(half, k)
                                       : families::gologlu_f2(half, k);
        return bivariate(bv);
    }
    if (family == "switched-apn") {
        const FieldRef field = make_field(n, caps);
        Elem al = alpha, be = beta, ga = gamma;
        if (scan_params) {
            const auto params = families::find_switched_params(field);
            if (!params) throw std::runtime_error("switched-apn: no admissible parameters");
            al = (*params)[0];
            be = (*params)[1];
            ga = (*params)[2];
        }
        detail["alpha"] = al;
        detail["beta"] = be;
        detail["gamma"] = ga;
        return univariate(families::trace_switched_apn(field, al, be, ga));
    }
    for (const auto& id : families::named_example_ids())
        if (family == id) return univariate(families::named_example(id));
    throw std::runtime_error("unknown family id: " + family);
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open output file: " + out);
    os << text;
}

bool id_matches(const std::string& id, const std::string& pattern) {
    if (pattern == "all" || pattern == id) return true;
    if (!pattern.empty() && pattern.back() == '*')
        return id.rfind(pattern.substr(0, pattern.size() - 1), 0) == 0;
    return false;
}

int cmd_analyze(const MapInput& in, const Caps& caps, WalshMode mode,
                const std::string& out, const std::string& spectrum_csv) {
    const auto t0 = std::chrono::steady_clock::now();
    auto [f, prov] = in.resolve(caps);
    MapAnalysis an = analyze_map(std::move(f), mode, caps.walsh_full, caps.walsh_zero);
    const auto reports = run_all(an);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    write_output(out, analysis_report(an, prov, reports, ms).dump(2) + "\n");

    if (!spectrum_csv.empty()) {
        std::ofstream cs(spectrum_csv);
        if (!cs) throw std::runtime_error("cannot open CSV file: " + spectrum_csv);
        cs << "b,a,W\n";
        for (Elem b = 1; b < an.f.field->q(); ++b) {
            const auto w = component_spectrum(an.f, b);
            for (Elem a = 0; a < an.f.field->q(); ++a)
                cs << b << ',' << a << ',' << w[a] << '\n';
        }
    }
    return 0;
}

int cmd_verify(const MapInput& in, const Caps& caps, const std::string& suite,
               const std::string& json_out) {
    const auto t0 = std::chrono::steady_clock::now();
    auto [f, prov] = in.resolve(caps);
    MapAnalysis an = analyze_map(std::move(f), WalshMode::Full, caps.walsh_full,
                                 caps.walsh_zero);
    auto reports = run_all(an);
    std::vector<std::string> patterns;
    std::istringstream ss(suite);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) patterns.push_back(tok);

    int failures = 0;
    for (const auto& r : reports) {
        bool wanted = false;
        for (const auto& pat : patterns) wanted = wanted || id_matches(r.id, pat);
        if (!wanted) continue;
        std::string status;
        if (!r.applicable) status = "n/a    " + r.note;
        else if (!r.hypotheses_hold) status = "hyp    " + r.note;
        else if (r.conclusion_holds && *r.conclusion_holds) status = "PASS";
        else {
            status = "FAIL";
            ++failures;
        }
        std::cout << r.id << std::string(r.id.size() < 22 ? 22 - r.id.size() : 1, ' ')
                  << status << '\n';
    }
    if (!json_out.empty()) {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        write_output(json_out, analysis_report(an, prov, reports, ms).dump(2) + "\n");
    }
    std::cout << (failures == 0 ? "verified: no conclusion failures\n"
                                : "FAILED: " + std::to_string(failures) +
                                      " conclusion failure(s)\n");
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact image/differential/Walsh analysis of maps on finite fields"};
    app.require_subcommand(1);
    const Caps caps = caps_from_env();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full analysis report (JSON)");
    MapInput ain;
    ain.attach(analyze);
    std::string aout, spectrum_csv;
    bool no_walsh = false, walsh_zero_only = false;
    analyze->add_option("--out", aout, "report file (default stdout)");
    analyze->add_option("--spectrum-csv", spectrum_csv, "export b,a,W triples");
    analyze->add_flag("--no-walsh", no_walsh, "skip spectral analysis");
    analyze->add_flag("--walsh-zero-only", walsh_zero_only, "compute only W(b,0)");

    // verify
    auto* verify = app.add_subcommand("verify", "run checkers; exit 0 iff none fail");
    MapInput vin;
    vin.attach(verify);
    std::string suite = "all", vjson;
    verify->add_option("--suite", suite, "comma-separated ids or prefixes (\"ab.*\")");
    verify->add_option("--json", vjson, "also write the JSON report here");

    // family
    auto* family = app.add_subcommand("family", "construct a family map; write files");
    MapInput fin;
    fin.attach(family);
    std::string fout, fam_id;
    bool fbiv = false, flist = false;
    family->add_option("id", fam_id, "family id (positional)");
    family->add_option("--out", fout, "output file (LUT, or bivariate with --bivariate)");
    family->add_flag("--bivariate", fbiv, "write the raw bivariate tables");
    family->add_flag("--list", flist, "list known family ids");

    // interpolate
    auto* interp = app.add_subcommand("interpolate", "polynomial of a LUT (\"e:c\" pairs)");
    std::string ilut, iout;
    interp->add_option("--lut", ilut, "LUT file")->required();
    interp->add_option("--out", iout, "output file (default stdout)");

    // convert
    auto* convert = app.add_subcommand("convert", "bivariate -> univariate LUT");
    std::string cbiv, cmod, cout_path;
    Elem cu1 = 1, cu2 = 0;
    convert->add_option("--bivariate", cbiv, "bivariate file")->required();
    convert->add_option("--u1", cu1, "basis element u1 (code in the big field)")->required();
    convert->add_option("--u2", cu2, "basis element u2 (code in the big field)")->required();
    convert->add_option("--modulus", cmod, "big-field modulus digits (default lex-smallest)");
    convert->add_option("--out", cout_path, "output LUT (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "searches; JSON lines on stdout");
    std::string mode;
    unsigned sn = 0, sp = 2;
    std::uint64_t seed = 0;
    std::uint32_t samples = 1000;
    bool include_affine = false, have_seed = false;
    search->add_option("--mode", mode,
                       "monomial-exhaustive | quadratic-random | minimal-image-probe")
        ->required();
    search->add_option("--n", sn, "field degree")->required();
    search->add_option("--p", sp, "characteristic (default 2)");
    auto* seed_opt = search->add_option("--seed", seed, "PRNG seed (required for random modes)");
    search->add_option("--samples", samples, "sample count for random modes");
    search->add_flag("--include-affine", include_affine, "random quadratics get affine parts");

    CLI11_PARSE(app, argc, argv);
    have_seed = seed_opt->count() > 0;

    try {
        if (app.got_subcommand(analyze)) {
            const WalshMode m = no_walsh ? WalshMode::Skip
                                : walsh_zero_only ? WalshMode::ZeroOnly
                                                  : WalshMode::Full;
            return cmd_analyze(ain, caps, m, aout, spectrum_csv);
        }
        if (app.got_subcommand(verify)) return cmd_verify(vin, caps, suite, vjson);
        if (app.got_subcommand(family)) {
            if (!fam_id.empty()) fin.family = fam_id;
            if (flist) {
                for (const char* id :
                     {"gold", "cube-trace", "cube-trace-2to1", "budaghyan1", "budaghyan2",
                      "zhoupott-f", "zhoupott-g", "gologlu1", "gologlu2", "switched-apn"})
                    std::cout << id << '\n';
                for (const auto& id : families::named_example_ids()) std::cout << id << '\n';
                return 0;
            }
            if (fbiv) {
                const FieldRef half = fin.make_field(fin.m, caps);
                BivariateMap bv =
                    fin.family == "zhoupott-f" ? families::zhou_pott_f(half, fin.i, fin.k, fin.alpha)
                    : fin.family == "zhoupott-g"
                        ? families::zhou_pott_g(half, fin.i, fin.k, fin.alpha)
                    : fin.family == "gologlu1" ? families::gologlu_f1(half, fin.k)
                    : fin.family == "gologlu2"
                        ? families::gologlu_f2(half, fin.k)
                        : throw std::runtime_error("--bivariate: not a bivariate family");
                std::ostringstream os;
                write_bivariate(os, bv);
                write_output(fout, os.str());
                return 0;
            }
            auto [f, prov] = fin.resolve(caps);
            std::ostringstream os;
            write_lut(os, f);
            write_output(fout, os.str());
            return 0;
        }
        if (app.got_subcommand(interp)) {
            std::ifstream is(ilut);
            if (!is) throw std::runtime_error("cannot open LUT file: " + ilut);
            const MapTable f = read_lut(is, caps.table);
            std::ostringstream os;
            write_poly(os, interpolate(f));
            write_output(iout, os.str());
            return 0;
        }
        if (app.got_subcommand(convert)) {
            std::ifstream is(cbiv);
            if (!is) throw std::runtime_error("cannot open bivariate file: " + cbiv);
            const BivariateMap bv = read_bivariate(is, caps.table);
            FieldRef big = cmod.empty()
                               ? Field::make(bv.half->p(), 2 * bv.half->n(), caps.table)
                               : Field::make(bv.half->p(), 2 * bv.half->n(),
                                             parse_modulus(cmod), caps.table);
            const MapTable f = bivariate_to_univariate(bv, big, cu1, cu2);
            std::ostringstream os;
            write_lut(os, f);
            write_output(cout_path, os.str());
            return 0;
        }
        if (app.got_subcommand(search)) {
            const FieldRef field = Field::make(sp, sn, caps.table);
            const EmitFn emit = [](const nlohmann::json& j) { std::cout << j.dump() << '\n'; };
            if (mode == "monomial-exhaustive") {
                for (const auto& r : monomial_scan(field)) {
                    nlohmann::json j{{"k", r.k},
                                     {"d", r.d},
                                     {"gcd", r.gcd_qm1},
                                     {"image_size", r.image_size},
                                     {"apn", r.d == 2}};
                    emit(j);
                }
                return 0;
            }
            if (!have_seed)
                throw std::runtime_error("search: --seed is required for random modes");
            if (mode == "quadratic-random")
                quadratic_random_search(field, seed, samples, include_affine, emit);
            else if (mode == "minimal-image-probe")
                minimal_image_probe(field, seed, samples, emit);
            else
                throw std::runtime_error("search: unknown mode " + mode);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
