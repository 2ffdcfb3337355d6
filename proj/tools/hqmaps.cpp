/*
   Copyright 2026 hqmaps contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hqmaps/errors.hpp"
#include "hqmaps/fpq.hpp"
#include "hqmaps/invariant.hpp"
#include "hqmaps/json_io.hpp"
#include "hqmaps/quadmap_construct.hpp"
#include "hqmaps/signature.hpp"

using namespace hqmaps;

namespace {

constexpr int kExitVerificationFailure = 2;
constexpr int kExitPrecisionExhausted = 3;
constexpr int kExitBadParameters = 4;

mpfr_prec_t default_precision() {
    if (const char* env = std::getenv("HQMAPS_PRECISION_BITS")) {
        long v = std::atol(env);
        if (v >= 53) return static_cast<mpfr_prec_t>(v);
    }
    return kDefaultPrecisionBits;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw BadParameters("cannot open output file: " + path);
    out << text;
}

// decimal rendering of an exact rational, deterministic
std::string rational_decimal(const Rational& q, unsigned digits = 10) {
    BigInt num = q.get_num();
    BigInt den = q.get_den();
    std::string sign = (num < 0) ? "-" : "";
    if (num < 0) num = -num;
    BigInt ipart = num / den;
    BigInt rem = num % den;
    std::string frac;
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        BigInt d = rem / den;
        frac += static_cast<char>('0' + d.get_ui());
        rem %= den;
    }
    return sign + ipart.get_str() + "." + frac;
}

std::string interval_mid_decimal(const RealInterval& iv, int digits = 15) {
    mpfr_t m;
    mpfr_init2(m, iv.precision());
    iv.mid(m);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits, m);
    std::string out(s);
    mpfr_free_str(s);
    mpfr_clear(m);
    return out;
}

struct GroupSpec {
    std::vector<unsigned> gamma_pq;
    unsigned scalar_p = 0;
    unsigned scalar_dim = 2;
    unsigned dihedral_p = 0;
    unsigned swap_cyclic_m = 0;
    std::vector<unsigned> metacyclic;
    bool b_swap = false;
    unsigned b_scalar_m = 0;
    std::string generators_file;
    unsigned max_order = kDefaultMaxGroupOrder;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--gamma-pq", gamma_pq,
                        "cyclic group generated by diag(zeta_p, zeta_p^q)")
            ->expected(2);
        cmd->add_option("--scalar", scalar_p, "scalar cyclic group of order P");
        cmd->add_option("--dim", scalar_dim, "dimension for --scalar (default 2)");
        cmd->add_option("--dihedral", dihedral_p, "dihedral group of order 2P");
        cmd->add_option("--swap-cyclic", swap_cyclic_m,
                        "cyclic group of order 2M generated by [[0,1],[zeta_M,0]]");
        cmd->add_option("--metacyclic", metacyclic,
                        "metacyclic group from P Q with a chosen B")
            ->expected(2);
        cmd->add_flag("--b-swap", b_swap, "use the swap matrix as B");
        cmd->add_option("--b-scalar", b_scalar_m, "use diag(zeta_M, zeta_M) as B");
        cmd->add_option("--generators-file", generators_file,
                        "JSON file whose elements are closed into a group");
        cmd->add_option("--max-order", max_order, "closure safety bound");
    }

    UnitaryMatrix metacyclic_b() const {
        if (b_swap) return UnitaryMatrix::swap2();
        if (b_scalar_m > 0) {
            CycNum w = CycNum::root_of_unity(b_scalar_m, 1);
            return UnitaryMatrix::diagonal({w, w});
        }
        throw BadParameters("--metacyclic needs --b-swap or --b-scalar M");
    }

    UnitaryGroup build() const {
        if (!gamma_pq.empty()) return make_gamma_pq(gamma_pq[0], gamma_pq[1]);
        if (scalar_p > 0) return make_scalar_cyclic(scalar_p, scalar_dim);
        if (dihedral_p > 0) return make_dihedral(dihedral_p);
        if (swap_cyclic_m > 0) return make_swap_cyclic(swap_cyclic_m);
        if (!metacyclic.empty())
            return make_metacyclic(metacyclic[0], metacyclic[1], metacyclic_b(),
                                   max_order);
        if (!generators_file.empty()) {
            std::ifstream in(generators_file);
            if (!in) throw BadParameters("cannot read " + generators_file);
            Json j = Json::parse(in);
            UnitaryGroup parsed = group_from_json(j);
            return close_group(parsed.elements(), max_order);
        }
        throw BadParameters("no group selected");
    }
};

Json group_header(const UnitaryGroup& g) {
    Json j;
    j["dim"] = g.dim();
    j["order"] = g.order();
    j["labels"] = g.labels();
    return j;
}

int cmd_invariant(const GroupSpec& spec, const std::string& output) {
    UnitaryGroup g = spec.build();
    HermPoly phi = phi_gamma(g);

    Json j;
    j["group"] = group_header(g);
    j["phi"] = herm_to_json(phi);
    j["phi_diagonal"] = herm_to_json(phi.diagonal());
    if (phi.has_diagonal_support())
        j["moment"] = moment_to_json(phi.diagonal().to_moment());

    InvariantPropertyReport rep = verify_invariant_properties(g, phi);
    Json v;
    v["constant_term_zero"] = rep.constant_term_zero;
    v["degree_equals_order"] = rep.degree_equals_order;
    v["sphere_normalized"] = rep.sphere_normalized;
    v["invariant_under_group"] = rep.invariant_under_group;
    v["hermitian_symmetric"] = rep.hermitian_symmetric;
    v["all"] = rep.all();
    j["verification"] = v;

    write_output(output, j.dump(2));
    return rep.all() ? 0 : kExitVerificationFailure;
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw BadParameters("range must look like A..B: " + text);
    unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (lo > hi) throw BadParameters("range is empty: " + text);
    return {lo, hi};
}

GroupFamily family_by_name(const std::string& name, unsigned q) {
    if (name == "gamma-p-1") return family_gamma_p1();
    if (name == "gamma-p-2") return family_gamma_p2();
    if (name == "gamma-p-pm1") return family_gamma_p_pm1();
    if (name == "gamma-p-q") {
        if (q < 1) throw BadParameters("--family gamma-p-q needs --q");
        return family_gamma_pq_fixed(q);
    }
    if (name == "dihedral") return family_dihedral();
    throw BadParameters("unknown family: " + name);
}

int cmd_signature(const GroupSpec& spec, const std::string& family_name,
                  unsigned family_q, const std::string& sweep,
                  bool with_decompose, mpfr_prec_t prec,
                  const std::string& output) {
    if (!sweep.empty()) {
        GroupFamily fam = family_by_name(family_name, family_q);
        auto [lo, hi] = parse_range(sweep);
        auto rows = signature_ratio(fam, lo, hi, prec);
        std::ostringstream csv;
        csv << "p,order,n_plus,n_minus,n_zero,ratio,ratio_num,ratio_den\n";
        for (const auto& r : rows) {
            csv << r.p << "," << r.order << "," << r.inertia.n_plus << ","
                << r.inertia.n_minus << "," << r.inertia.n_zero << ","
                << rational_decimal(r.ratio) << "," << r.ratio.get_num().get_str()
                << "," << r.ratio.get_den().get_str() << "\n";
        }
        write_output(output, csv.str());
        return 0;
    }

    UnitaryGroup g = spec.build();
    HermPoly diag = phi_gamma(g).diagonal();
    CoeffMatrix M = CoeffMatrix::from_poly(diag);
    Inertia inertia = matrix_inertia(M, prec);

    Json j;
    j["group"] = group_header(g);
    Json basis = Json::array();
    for (const auto& m : M.basis()) {
        Json e = Json::array();
        for (unsigned i = 0; i < m.nvars; ++i) e.push_back(m[i]);
        basis.push_back(e);
    }
    j["basis"] = basis;
    j["inertia"] = {{"n_plus", inertia.n_plus},
                    {"n_minus", inertia.n_minus},
                    {"n_zero", inertia.n_zero}};
    j["target"] = inertia.target();
    if (with_decompose) {
        QuadMap qm = decompose(diag, prec);
        j["decomposition"] = quadmap_to_json(qm);
    }
    write_output(output, j.dump(2));
    return 0;
}

int cmd_fpq(unsigned p, unsigned q, const std::string& output) {
    MomentPoly f = fpq_compute(p, q);
    Json j;
    j["p"] = p;
    j["q"] = q;
    j["f"] = moment_to_json(f);
    j["text"] = f.str({"x", "y"});
    write_output(output, j.dump(2));
    return 0;
}

int cmd_primetest(unsigned p, unsigned q, const std::string& output) {
    PrimalityResult r = prime_test(p, q);
    Json j;
    j["p"] = p;
    j["q"] = q;
    j["is_prime"] = r.is_prime;
    if (r.witness) {
        Json w;
        Json e = Json::array();
        for (unsigned i = 0; i < r.witness->first.nvars; ++i)
            e.push_back(r.witness->first[i]);
        w["monomial"] = e;
        w["coefficient"] = r.witness->second.get_str();
        j["witness"] = w;
    }
    write_output(output, j.dump(2));
    return 0;
}

int cmd_quadmap(unsigned p, bool text, const std::string& output) {
    SplitPolyReport rep = build_W(p);
    QuadMap g = build_gp(p);
    QuadMapVerification v = verify_quadmap(g, 2, 2 * p + 1);

    if (text) {
        std::ostringstream os;
        os << "map Q(2," << 2 * p + 1 << ") -> Q(" << rep.positive_terms << ","
           << rep.negative_terms << "), degree " << g.degree() << "\n";
        os << "convention: " << kQuadricConvention << "\n";
        os << quadmap_to_text(g);
        os << "verified: " << (v.exact_zero ? "exact zero remainder" : "FAILED")
           << "\n";
        write_output(output, os.str());
    } else {
        Json j;
        j["p"] = p;
        j["source"] = "Q(2," + std::to_string(2 * p + 1) + ")";
        j["target"] = "Q(" + std::to_string(rep.positive_terms) + "," +
                      std::to_string(rep.negative_terms) + ")";
        j["degree"] = g.degree();
        j["N"] = rep.positive_terms;
        j["convention"] = kQuadricConvention;
        j["map"] = quadmap_to_json(g);
        j["verified"] = v.exact_zero;
        if (!v.exact_zero) j["remainder"] = moment_to_json(v.remainder);
        write_output(output, j.dump(2));
    }
    return v.exact_zero ? 0 : kExitVerificationFailure;
}

int cmd_sweep_fpq(const std::string& range, unsigned q, mpfr_prec_t prec,
                  const std::string& output) {
    auto [lo, hi] = parse_range(range);
    std::ostringstream csv;
    csv << "p,q,coefficients,s_p,s_p_root,prime\n";
    for (unsigned p = std::max(lo, q + 1); p <= hi; ++p) {
        MomentPoly f = fpq_compute(p, q);
        PrimalityResult pr = prime_test(p, q);
        Rational s = f.eval({Rational(1), Rational(1)});
        RealInterval root = RealInterval::from_rational(s, prec).rootn(p);
        Json coeffs = Json::array();
        for (const auto& [m, c] : f.terms()) {
            coeffs.push_back(Json::array({m[0], m[1], c.get_num().get_str()}));
        }
        csv << p << "," << q << ",\"" << coeffs.dump() << "\"," << s.get_str()
            << "," << interval_mid_decimal(root) << ","
            << (pr.is_prime ? "prime" : "composite") << "\n";
    }
    write_output(output, csv.str());
    return 0;
}

int cmd_sweep_golden(const std::string& range, mpfr_prec_t prec,
                     const std::string& output) {
    auto [lo, hi] = parse_range(range);
    std::ostringstream csv;
    csv << "p,s_p,s_p_root,golden_gap\n";
    RealInterval golden = (RealInterval::from_long(1, prec) +
                           RealInterval::from_long(5, prec).sqrt()) *
                          RealInterval::from_rational(Rational(1, 2), prec);
    for (unsigned p = std::max(3u, lo); p <= hi; ++p) {
        GoldenRatioScalar g = golden_ratio_scalar(p, prec);
        RealInterval gap = (g.root - golden).abs();
        csv << p << "," << g.s_p.get_str() << "," << interval_mid_decimal(g.root)
            << "," << interval_mid_decimal(gap, 6) << "\n";
    }
    write_output(output, csv.str());
    return 0;
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) throw BadParameters("bad rational: " + text);
    q.canonicalize();
    return q;
}

int cmd_sweep_gap(unsigned p, const std::vector<std::string>& point_args,
                  mpfr_prec_t prec, const std::string& output) {
    std::vector<std::pair<Rational, Rational>> points;
    for (const auto& s : point_args) {
        auto comma = s.find(',');
        if (comma == std::string::npos)
            throw BadParameters("point must look like x,y: " + s);
        points.emplace_back(parse_rational(s.substr(0, comma)),
                            parse_rational(s.substr(comma + 1)));
    }
    if (points.empty()) points.push_back({Rational(1), Rational(1)});
    auto rows = proposition41_check(p, points, prec);
    std::ostringstream csv;
    csv << "x,y,f_root,limit_target,gap\n";
    for (const auto& r : rows) {
        csv << r.x.get_str() << "," << r.y.get_str() << ","
            << interval_mid_decimal(r.f_root) << ","
            << interval_mid_decimal(r.target) << ","
            << interval_mid_decimal(r.gap, 6) << "\n";
    }
    write_output(output, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariant-polynomial and hyperquadric-map engine"};
    app.require_subcommand(1);

    long precision_arg = static_cast<long>(default_precision());
    app.add_option("--precision-bits", precision_arg,
                   "working precision for certified numerics (default 128, env "
                   "HQMAPS_PRECISION_BITS)");

    std::string output;
    app.add_option("--output", output, "write result to a file instead of stdout");

    auto* inv = app.add_subcommand("invariant",
                                   "compute and verify the invariant polynomial");
    GroupSpec inv_spec;
    inv_spec.add_options(inv);

    auto* sig = app.add_subcommand("signature",
                                   "coefficient-matrix inertia and target "
                                   "hyperquadric");
    GroupSpec sig_spec;
    sig_spec.add_options(sig);
    std::string family_name, sweep_range;
    unsigned family_q = 0;
    bool with_decompose = false;
    sig->add_option("--family", family_name,
                    "group family for sweeps: gamma-p-1, gamma-p-2, "
                    "gamma-p-pm1, gamma-p-q, dihedral");
    sig->add_option("--q", family_q, "fixed q for --family gamma-p-q");
    sig->add_option("--sweep", sweep_range, "p range A..B (emits CSV)");
    sig->add_flag("--decompose", with_decompose,
                  "include the holomorphic decomposition");

    auto* fpq_cmd = app.add_subcommand("fpq", "diagonal-family polynomial f_{p,q}");
    unsigned fpq_p = 0, fpq_q = 0;
    fpq_cmd->add_option("p", fpq_p, "group order")->required();
    fpq_cmd->add_option("q", fpq_q, "second eigenvalue exponent")->required();

    auto* prime_cmd = app.add_subcommand("primetest",
                                         "coefficient congruence primality test");
    unsigned prime_p = 0, prime_q = 0;
    prime_cmd->add_option("p", prime_p, "candidate")->required();
    prime_cmd->add_option("q", prime_q, "family index")->required();

    auto* quad_cmd = app.add_subcommand("quadmap",
                                        "hyperquadric-to-hyperquadric map of "
                                        "degree 2p");
    unsigned quad_p = 0;
    bool quad_text = false;
    quad_cmd->add_option("p", quad_p, "half-degree parameter")->required();
    quad_cmd->add_flag("--text", quad_text, "human-readable component list");

    auto* sweep_cmd = app.add_subcommand("sweep", "CSV tables over p");
    std::string sweep_what, sweep_p_range;
    unsigned sweep_q = 2, gap_p = 20;
    std::vector<std::string> gap_points;
    sweep_cmd->add_option("what", sweep_what, "fpq | golden | gap")->required();
    sweep_cmd->add_option("--p", sweep_p_range, "p range A..B");
    sweep_cmd->add_option("--q", sweep_q, "q for fpq sweeps (default 2)");
    sweep_cmd->add_option("--at", gap_p, "fixed p for gap tables (default 20)");
    sweep_cmd->add_option("--point", gap_points,
                          "sample point x,y (rationals; may repeat)");

    CLI11_PARSE(app, argc, argv);
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_arg);

    try {
        if (inv->parsed()) return cmd_invariant(inv_spec, output);
        if (sig->parsed())
            return cmd_signature(sig_spec, family_name, family_q, sweep_range,
                                 with_decompose, prec, output);
        if (fpq_cmd->parsed()) return cmd_fpq(fpq_p, fpq_q, output);
        if (prime_cmd->parsed()) return cmd_primetest(prime_p, prime_q, output);
        if (quad_cmd->parsed()) return cmd_quadmap(quad_p, quad_text, output);
        if (sweep_cmd->parsed()) {
            if (sweep_what == "fpq")
                return cmd_sweep_fpq(sweep_p_range, sweep_q, prec, output);
            if (sweep_what == "golden")
                return cmd_sweep_golden(sweep_p_range, prec, output);
            if (sweep_what == "gap")
                return cmd_sweep_gap(gap_p, gap_points, prec, output);
            throw BadParameters("unknown sweep kind: " + sweep_what);
        }
    } catch (const PrecisionExhausted& e) {
        Json err{{"error", {{"type", e.kind()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return kExitPrecisionExhausted;
    } catch (const BadParameters& e) {
        Json err{{"error", {{"type", e.kind()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return kExitBadParameters;
    } catch (const VerificationFailed& e) {
        Json err{{"error", {{"type", e.kind()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return kExitVerificationFailure;
    } catch (const Error& e) {
        Json err{{"error", {{"type", e.kind()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}
