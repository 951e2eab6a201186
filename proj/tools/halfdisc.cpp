// halfdisc: local intersection numbers, fiber-model predictions and archimedean
// torsion sums for y^2 = x^3 + a x^2 + b x + c.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfdisc/halfdisc.hpp"

using namespace halfdisc;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Integer json_integer(const json& v, const char* key) {
    if (v.is_number_integer()) return Integer(v.get<long>());
    if (v.is_string()) {
        try {
            return integer_from_string(v.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw UsageError(std::string("curve field '") + key + "' must be an integer or a decimal string");
}

Curve parse_curve(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("curve is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("curve must be a JSON object {\"a\":..,\"b\":..,\"c\":..}");
    for (const char* key : {"a", "b", "c"})
        if (!j.contains(key)) throw UsageError(std::string("curve is missing '") + key + "'");
    return Curve::from_cubic(json_integer(j["a"], "a"), json_integer(j["b"], "b"), json_integer(j["c"], "c"));
}

Curve require_curve(const std::string& text) {
    if (text.empty()) throw UsageError("--curve is required");
    return parse_curve(text);
}

Integer parse_prime(const std::string& text) {
    Integer p;
    try {
        p = integer_from_string(text);
    } catch (const std::exception&) {
        throw UsageError("--p must be an integer");
    }
    if (p == 2) throw UsageError("p = 2 is excluded (residual characteristic 2)");
    if (!is_prime(p)) throw UsageError("--p must be an odd prime, got " + text);
    return p;
}

std::string factor_string(const Factorization& f) {
    std::string s;
    for (const auto& [p, e] : f.factors) {
        if (!s.empty()) s += '*';
        s += to_string(p);
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

struct Options {
    std::string curve;
    std::string format = "csv";
    std::string p;
    long n_max = 31;
    bool even = false;
    long k = 1;
    std::vector<long> n_list;
    long samples = 1000000;
    std::uint64_t seed = 1;
    std::vector<long> basis;
    long n = 3;
};

bool as_json(const Options& o) { return o.format == "json"; }

void cmd_curve_info(const Options& o, std::ostream& out) {
    const Curve e = require_curve(o.curve);
    const auto bad = bad_primes(e);
    std::vector<LocalReduction> red;
    for (const auto& p : bad) red.push_back(reduction_type(e, p));
    const bool rational = roots_rational(e);
    const long v2 = valuation(e.disc_e(), Integer(2));
    if (as_json(o)) {
        json j;
        j["a"] = to_string(e.a());
        j["b"] = to_string(e.b());
        j["c"] = to_string(e.c());
        j["discP"] = to_string(e.disc_p());
        j["c4"] = to_string(e.c4());
        j["discE"] = to_string(e.disc_e());
        j["v2_discE"] = v2;
        j["rootsRational"] = rational;
        j["badPrimes"] = json::array();
        for (const auto& p : bad) j["badPrimes"].push_back(to_string(p));
        j["reduction"] = json::array();
        for (const auto& r : red)
            j["reduction"].push_back({{"p", to_string(r.p)},
                                      {"vDelta", r.v_delta},
                                      {"kind", to_string(r.kind)},
                                      {"k", r.k},
                                      {"kTarget", r.k_target().str()},
                                      {"semistable", r.semistable},
                                      {"hypothesesOk", r.hypotheses_ok},
                                      {"warning", r.warning}});
        out << j.dump() << "\n";
        return;
    }
    out << csv_row({"field", "value"});
    out << csv_row({"a", to_string(e.a())}) << csv_row({"b", to_string(e.b())}) << csv_row({"c", to_string(e.c())});
    out << csv_row({"discP", to_string(e.disc_p())}) << csv_row({"c4", to_string(e.c4())})
        << csv_row({"discE", to_string(e.disc_e())}) << csv_row({"v2_discE", std::to_string(v2)});
    out << csv_row({"roots_rational", rational ? "true" : "false"});
    std::string bp;
    for (const auto& p : bad) bp += (bp.empty() ? "" : " ") + to_string(p);
    out << csv_row({"bad_primes", bp});
    out << "\n";
    out << csv_row({"p", "v_delta", "reduction", "k", "k_target", "semistable", "hypotheses_ok", "warning"});
    for (const auto& r : red)
        out << csv_row({to_string(r.p), std::to_string(r.v_delta), to_string(r.kind), std::to_string(r.k),
                        r.k_target().str(), r.semistable ? "true" : "false", r.hypotheses_ok ? "true" : "false",
                        r.warning});
}

std::vector<long> local_n_values(long n_max, bool even) {
    std::vector<long> ns;
    for (long n = 3; n <= n_max; ++n)
        if (n % 2 != 0 || even) ns.push_back(n);
    return ns;
}

void cmd_local(const Options& o, std::ostream& out, std::ostream& err) {
    const Curve e = require_curve(o.curve);
    if (o.p.empty()) throw UsageError("--p is required");
    const Integer p = parse_prime(o.p);
    const auto ns = local_n_values(o.n_max, o.even);
    const auto recs = convergence_sequence(e, p, ns, o.even);
    std::optional<LimitReport> rep;
    if (recs.size() >= 3) rep = limit_report(recs);
    if (!as_json(o))
        out << csv_row({"n", "value", "ratio_num", "ratio_den", "k", "abs_error_decimal", "bound_decimal", "within_bound"});
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        const Rational err_v = (r.ratio - r.k_target).abs();
        const Rational bound = default_limit_constant(r.k_target) / Rational(r.n);
        const bool within = err_v <= bound;
        if (as_json(o)) {
            out << json{{"n", r.n},
                        {"value", r.value},
                        {"ratio_num", to_string(r.ratio.num())},
                        {"ratio_den", to_string(r.ratio.den())},
                        {"k", r.k_target.str()},
                        {"abs_error_decimal", format_decimal(err_v)},
                        {"bound_decimal", format_decimal(bound)},
                        {"within_bound", within}}
                       .dump()
                << "\n";
        } else {
            out << csv_row({std::to_string(r.n), std::to_string(r.value), to_string(r.ratio.num()),
                            to_string(r.ratio.den()), r.k_target.str(), format_decimal(err_v), format_decimal(bound),
                            within ? "true" : "false"});
        }
    }
    if (rep)
        err << "limit_report: " << (rep->pass ? "pass" : "fail") << " (k = " << rep->k.str()
            << ", C = " << rep->constant.str() << ")\n";
    else
        err << "limit_report: skipped (fewer than 3 records)\n";
}

void cmd_fiber_sim(const Options& o, std::ostream& out) {
    if (o.k < 1) throw UsageError("--k must be >= 1");
    const bool join = !o.curve.empty() || !o.p.empty();
    std::optional<Curve> curve;
    Integer p;
    if (join) {
        if (o.curve.empty() || o.p.empty()) throw UsageError("joined mode needs both --curve and --p");
        curve = parse_curve(o.curve);
        p = parse_prime(o.p);
    }
    const auto ns = odd_range(o.n_max);
    std::vector<IntersectionRecord> exact;
    if (join) exact = convergence_sequence(*curve, p, ns);
    std::vector<std::string> header{"n", "k", "r", "gcd", "mainTerm", "envelope", "mainTerm_over_n2"};
    if (join) header.insert(header.end(), {"exact", "lower", "upper", "in_envelope"});
    if (!as_json(o)) out << csv_row(header);
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const FiberPrediction f = predicted_intersection(ns[i], o.k);
        std::vector<std::string> row{std::to_string(f.n),        std::to_string(f.k),
                                     std::to_string(f.r),        std::to_string(f.gcd_m),
                                     std::to_string(f.main_term), std::to_string(f.envelope),
                                     format_decimal(f.limit_ratio())};
        json j{{"n", f.n}, {"k", f.k}, {"r", f.r}, {"gcd", f.gcd_m}, {"mainTerm", f.main_term},
               {"envelope", f.envelope}, {"mainTerm_over_n2", format_decimal(f.limit_ratio())}};
        if (join) {
            const Containment c = containment(f, exact[i].value);
            row.insert(row.end(), {std::to_string(c.exact), std::to_string(c.lower), std::to_string(c.upper),
                                   c.inside() ? "true" : "false"});
            j["exact"] = c.exact;
            j["lower"] = c.lower;
            j["upper"] = c.upper;
            j["in_envelope"] = c.inside();
        }
        if (as_json(o))
            out << j.dump() << "\n";
        else
            out << csv_row(row);
    }
}

void cmd_global(const Options& o, std::ostream& out) {
    const Curve e = require_curve(o.curve);
    if (o.n_list.empty()) throw UsageError("--n-list is required");
    const GlobalReport rep = global_check(e, o.n_list);
    if (!as_json(o))
        out << csv_row({"n", "Sn", "target", "absError", "resDecimalDigits", "lcCorrection", "finiteTotal",
                        "twoAdicPart", "badPrimePart", "otherPart", "identityExact", "factorization", "cofactor"});
    for (const auto& r : rep.rows) {
        if (as_json(o)) {
            json fac = json::array();
            for (const auto& [p, ex] : r.factorization.factors) fac.push_back({to_string(p), ex});
            out << json{{"n", r.n},
                        {"Sn", format_decimal(r.sn)},
                        {"target", format_decimal(r.target)},
                        {"absError", format_decimal(r.abs_error)},
                        {"resDecimalDigits", r.res_decimal_digits},
                        {"factorization", fac},
                        {"cofactor", to_string(r.factorization.cofactor)},
                        {"lcCorrection", format_decimal(r.lc_correction)},
                        {"finiteTotal", format_decimal(r.finite_total)},
                        {"twoAdicPart", format_decimal(r.two_adic_part)},
                        {"badPrimePart", format_decimal(r.bad_prime_part)},
                        {"otherPart", format_decimal(r.other_part)},
                        {"identityExact", r.identity_exact}}
                       .dump()
                << "\n";
        } else {
            out << csv_row({std::to_string(r.n), format_decimal(r.sn), format_decimal(r.target),
                            format_decimal(r.abs_error), std::to_string(r.res_decimal_digits),
                            format_decimal(r.lc_correction), format_decimal(r.finite_total),
                            format_decimal(r.two_adic_part), format_decimal(r.bad_prime_part),
                            format_decimal(r.other_part), r.identity_exact ? "true" : "false",
                            factor_string(r.factorization), to_string(r.factorization.cofactor)});
        }
    }
}

void cmd_mahler(const Options& o, std::ostream& out) {
    const Curve e = require_curve(o.curve);
    if (o.samples < 10000) throw UsageError("--samples must be >= 10000");
    MahlerOptions mo;
    if (!o.basis.empty()) {
        if (o.basis.size() != 4) throw UsageError("--basis takes four integers a,b,c,d");
        mo.basis = {o.basis[0], o.basis[1], o.basis[2], o.basis[3]};
    }
    const PeriodData pd = periods(e);
    const MahlerResult m = mahler_integral(pd, o.samples, o.seed, mo);
    const long double target = log_abs(e.disc_p()) / 2;
    if (as_json(o)) {
        out << json{{"samples", o.samples},
                    {"grid", m.grid},
                    {"seed", o.seed},
                    {"value", format_decimal(m.value)},
                    {"refinementDelta", format_decimal(m.refinement_delta)},
                    {"excluded", m.excluded},
                    {"halfLogDisc", format_decimal(target)}}
                   .dump()
            << "\n";
        return;
    }
    out << csv_row({"samples", "grid", "seed", "value", "refinementDelta", "excluded", "halfLogDisc"});
    out << csv_row({std::to_string(o.samples), std::to_string(m.grid), std::to_string(o.seed), format_decimal(m.value),
                    format_decimal(m.refinement_delta), std::to_string(m.excluded), format_decimal(target)});
}

void cmd_torsion_dump(const Options& o, std::ostream& out) {
    const Curve e = require_curve(o.curve);
    const TorsionDivisor d = torsion_x_polynomial(e, o.n);
    json coeffs = json::array();
    for (const auto& c : d.h.coeffs()) coeffs.push_back(to_string(c));
    out << json{{"n", d.n},
                {"degree", d.degree},
                {"multiplicity", d.multiplicity},
                {"leadingCoefficient", to_string(d.leading_coefficient)},
                {"psiContent", to_string(d.psi_content)},
                {"coefficients", coeffs}}
               .dump()
        << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection numbers of torsion divisors on y^2 = P(x)"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub, bool curve_flag = true) {
        if (curve_flag) sub->add_option("--curve", o.curve, "curve JSON {\"a\":..,\"b\":..,\"c\":..}");
        sub->add_option("--format", o.format, "csv or json (JSON lines)")->check(CLI::IsMember({"csv", "json"}));
    };
    auto* info = app.add_subcommand("curve-info", "invariants, bad primes and reduction types");
    add_common(info);
    auto* local = app.add_subcommand("local", "(D.H_n)_p for odd n <= n-max and the limit report");
    add_common(local);
    local->add_option("--p", o.p, "odd prime");
    local->add_option("--n-max", o.n_max, "largest n");
    local->add_flag("--even", o.even, "include even n");
    auto* fiber = app.add_subcommand("fiber-sim", "fiber-model predictions, optionally joined with exact values");
    add_common(fiber);
    fiber->add_option("--k", o.k, "half the valuation of the discriminant")->required();
    fiber->add_option("--n-max", o.n_max, "largest odd n");
    fiber->add_option("--p", o.p, "prime for the joined exact column");
    auto* global = app.add_subcommand("global", "torsion sums against 1/2 log|disc P|");
    add_common(global);
    global->add_option("--n-list", o.n_list, "odd n values, comma separated")->delimiter(',');
    auto* mahler = app.add_subcommand("mahler", "Haar average of log|P(wp(z))|");
    add_common(mahler);
    mahler->add_option("--samples", o.samples, "grid points");
    mahler->add_option("--seed", o.seed, "grid shift seed");
    mahler->add_option("--basis", o.basis, "unimodular basis change a,b,c,d")->delimiter(',');
    auto* dump = app.add_subcommand("torsion-dump", "coefficients of h_n as JSON");
    add_common(dump);
    dump->add_option("--n", o.n, "index n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ostringstream out, err;
    try {
        if (*info)
            cmd_curve_info(o, out);
        else if (*local)
            cmd_local(o, out, err);
        else if (*fiber)
            cmd_fiber_sim(o, out);
        else if (*global)
            cmd_global(o, out);
        else if (*mahler)
            cmd_mahler(o, out);
        else if (*dump)
            cmd_torsion_dump(o, out);
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
    std::cout << out.str();
    std::cerr << err.str();
    return 0;
}
