#include "isoclass/report.hpp"

#include "isoclass/census.hpp"
#include "isoclass/class_group.hpp"
#include "isoclass/intmath.hpp"
#include "isoclass/local_density.hpp"
#include "isoclass/measures.hpp"
#include "isoclass/rational.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoclass {

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

void dump_rec(const nlohmann::json& j, std::string& out, int depth) {
    using value_t = nlohmann::json::value_t;
    switch (j.type()) {
        case value_t::null: out += "null"; return;
        case value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
        case value_t::number_integer: out += std::to_string(j.get<long long>()); return;
        case value_t::number_unsigned: out += std::to_string(j.get<unsigned long long>()); return;
        case value_t::number_float: out += fmt_double(j.get<double>()); return;
        case value_t::string: out += nlohmann::json(j.get<std::string>()).dump(); return;
        case value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            std::string pad((std::size_t)depth * 2, ' ');
            out += "[\n";
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad + "  ";
                dump_rec(item, out, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            std::string pad((std::size_t)depth * 2, ' ');
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + "  " + nlohmann::json(it.key()).dump() + ": ";
                dump_rec(it.value(), out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        default: out += "null"; return;
    }
}

long long characteristic_of(long long q) {
    long long p = 0;
    int e = 0;
    if (!prime_power(q, p, e))
        throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return p;
}

int cmd_census(long long q, bool all, const std::string& format, int jobs, std::ostream& out) {
    long long p = characteristic_of(q);
    CensusResult c = census(q, jobs);
    std::vector<std::pair<long long, Rational>> rows;
    for (const auto& [a, w] : c.weighted)
        if (all || a % p != 0) rows.emplace_back(a, w);

    if (format == "json") {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& [a, w] : rows) obj[std::to_string(a)] = to_fraction_string(w);
        out << canonical_json_dump(obj);
    } else if (format == "csv") {
        out << "trace,weighted\n";
        for (const auto& [a, w] : rows) out << a << ',' << to_fraction_string(w) << '\n';
    } else {
        out << "q = " << q << (all ? "" : " (ordinary classes)") << '\n';
        out << std::setw(6) << "trace" << "  weighted\n";
        for (const auto& [a, w] : rows)
            out << std::setw(6) << a << "  " << to_fraction_string(w) << '\n';
        if (all) out << "total mass = " << to_fraction_string(c.total_mass()) << '\n';
    }
    return 0;
}

int cmd_density(long long a, long long q, long long ell, int n_max, const std::string& format,
                std::ostream& out) {
    DensityLadder lad = nu_ell(a, q, ell, n_max);
    const char* ring = lad.ring == MatrixRing::M2 ? "M2" : "GL2";

    if (format == "json") {
        nlohmann::json obj;
        obj["a"] = lad.a;
        obj["q"] = lad.q;
        obj["ell"] = lad.ell;
        obj["ring"] = ring;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : lad.rows) {
            nlohmann::json row;
            row["n"] = r.n;
            row["count"] = r.count;
            row["nu"] = to_fraction_string(r.nu);
            rows.push_back(row);
        }
        obj["rows"] = rows;
        obj["stabilized"] = lad.stabilized;
        obj["stabilized_at"] = lad.stabilized_at;
        obj["nu"] = to_fraction_string(lad.nu_ell);
        obj["capped"] = lad.capped;
        out << canonical_json_dump(obj);
    } else if (format == "csv") {
        out << "n,count,nu\n";
        for (const auto& r : lad.rows)
            out << r.n << ',' << r.count << ',' << to_fraction_string(r.nu) << '\n';
    } else {
        out << "a = " << lad.a << ", q = " << lad.q << ", ell = " << lad.ell << ", ring = " << ring
            << '\n';
        out << std::setw(4) << "n" << std::setw(18) << "count" << "  nu\n";
        for (const auto& r : lad.rows)
            out << std::setw(4) << r.n << std::setw(18) << r.count << "  "
                << to_fraction_string(r.nu) << '\n';
        if (lad.stabilized)
            out << "stabilized at n = " << lad.stabilized_at
                << ": nu = " << to_fraction_string(lad.nu_ell) << '\n';
        else
            out << "not stabilized within the computed ladder"
                << (lad.capped ? " (modulus cap reached)" : "") << '\n';
    }
    return 0;
}

int cmd_classnum(long long delta, const std::string& format, std::ostream& out) {
    QuadraticFieldData K = quadratic_field(delta);

    struct OrderRow {
        long long divisor, discriminant, h, w;
    };
    std::vector<OrderRow> orders;
    for (long long d : divisors(K.conductor)) {
        long long disc = d * d * K.delta_K;
        orders.push_back({d, disc, class_number(disc), unit_count(disc)});
    }
    Rational weighted = weighted_class_number(delta);
    L1ExactValue l1 = l1_exact(K);

    if (format == "json") {
        nlohmann::json obj;
        obj["delta"] = K.delta;
        obj["fundamental_discriminant"] = K.delta_K;
        obj["conductor"] = K.conductor;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : orders) {
            nlohmann::json row;
            row["divisor"] = r.divisor;
            row["discriminant"] = r.discriminant;
            row["class_number"] = r.h;
            row["units"] = r.w;
            rows.push_back(row);
        }
        obj["orders"] = rows;
        obj["weighted_sum"] = to_fraction_string(weighted);
        obj["l1_rational_part"] = to_fraction_string(l1.rational_part);
        obj["l1_radicand"] = l1.radicand;
        out << canonical_json_dump(obj);
    } else if (format == "csv") {
        out << "divisor,discriminant,class_number,units\n";
        for (const auto& r : orders)
            out << r.divisor << ',' << r.discriminant << ',' << r.h << ',' << r.w << '\n';
    } else {
        out << "delta = " << K.delta << ", fundamental discriminant = " << K.delta_K
            << ", conductor = " << K.conductor << '\n';
        out << std::setw(6) << "d" << std::setw(14) << "discriminant" << std::setw(6) << "h"
            << std::setw(6) << "w" << '\n';
        for (const auto& r : orders)
            out << std::setw(6) << r.divisor << std::setw(14) << r.discriminant << std::setw(6)
                << r.h << std::setw(6) << r.w << '\n';
        out << "weighted class number = " << to_fraction_string(weighted) << '\n';
        out << "L(1, chi) = 2*pi * " << to_fraction_string(l1.rational_part) << " / sqrt("
            << l1.radicand << ")\n";
    }
    return 0;
}

int cmd_gekeler(long long a, long long q, long long prime_bound, const std::string& format,
                std::ostream& out) {
    GlobalAssembly g = assemble_gekeler(a, q, prime_bound);

    if (format == "json") {
        nlohmann::json obj;
        obj["a"] = g.a;
        obj["q"] = g.q;
        obj["delta"] = g.field.delta;
        obj["fundamental_discriminant"] = g.field.delta_K;
        obj["conductor"] = g.field.conductor;
        obj["archimedean_radicand"] = g.archimedean.radicand;
        obj["nu_infinity"] = g.archimedean.value();
        obj["global_volume"] = to_fraction_string(g.global_vol);
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& f : g.factors) {
            nlohmann::json row;
            row["ell"] = f.ell;
            row["type"] = splitting_name(f.type);
            row["nu"] = to_fraction_string(f.nu);
            row["stabilized_at"] = f.ladder.stabilized_at;
            row["l_factor"] = to_fraction_string(f.l_factor);
            row["orbital_geometric"] = to_fraction_string(f.o_geom);
            row["orbital_canonical"] = to_fraction_string(f.o_can);
            rows.push_back(row);
        }
        obj["factors"] = rows;
        obj["lk_value"] = to_fraction_string(g.lk_value);
        obj["exact_value"] = to_fraction_string(g.gekeler_exact);
        obj["float_value"] = g.gekeler_float;
        obj["prime_bound"] = g.prime_bound;
        out << canonical_json_dump(obj);
    } else if (format == "csv") {
        out << "ell,type,nu,stabilized_at,l_factor,orbital_geometric,orbital_canonical\n";
        for (const auto& f : g.factors)
            out << f.ell << ',' << splitting_name(f.type) << ',' << to_fraction_string(f.nu) << ','
                << f.ladder.stabilized_at << ',' << to_fraction_string(f.l_factor) << ','
                << to_fraction_string(f.o_geom) << ',' << to_fraction_string(f.o_can) << '\n';
    } else {
        out << "a = " << g.a << ", q = " << g.q << ": delta = " << g.field.delta << " = "
            << g.field.conductor << "^2 * (" << g.field.delta_K << ")\n";
        out << "nu_infinity = " << fmt_double(g.archimedean.value()) << " (radicand "
            << g.archimedean.radicand << ")\n";
        out << "global volume h/w = " << to_fraction_string(g.global_vol) << '\n';
        out << std::setw(6) << "ell" << std::setw(10) << "type" << std::setw(14) << "nu"
            << std::setw(8) << "stab" << std::setw(10) << "L_ell" << std::setw(14) << "O_geom"
            << std::setw(14) << "O_can" << '\n';
        for (const auto& f : g.factors)
            out << std::setw(6) << f.ell << std::setw(10) << splitting_name(f.type) << std::setw(14)
                << to_fraction_string(f.nu) << std::setw(8) << f.ladder.stabilized_at
                << std::setw(10) << to_fraction_string(f.l_factor) << std::setw(14)
                << to_fraction_string(f.o_geom) << std::setw(14) << to_fraction_string(f.o_can)
                << '\n';
        out << "LK value    = " << to_fraction_string(g.lk_value) << '\n';
        out << "exact value = " << to_fraction_string(g.gekeler_exact) << '\n';
        out << "float value = " << fmt_double(g.gekeler_float) << " (prime bound " << g.prime_bound
            << ")\n";
    }
    return 0;
}

int cmd_verify(long long q_max, long long prime_bound, int jobs, long long perturb_ell,
               const std::string& format, std::ostream& out) {
    VerificationReport rep = verify_range(q_max, prime_bound, jobs, perturb_ell);

    auto primes_json = [](const VerificationRow& r) {
        nlohmann::json arr = nlohmann::json::array();
        for (long long ell : r.primes) arr.push_back(ell);
        return arr;
    };

    if (format == "json") {
        nlohmann::json obj;
        obj["q_max"] = rep.q_max;
        obj["prime_bound"] = rep.prime_bound;
        obj["all_ok"] = rep.all_ok;
        nlohmann::json rows = nlohmann::json::array();
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& r : rep.rows) {
            nlohmann::json row;
            row["q"] = r.q;
            row["a"] = r.a;
            row["census"] = to_fraction_string(r.census_value);
            row["weighted_class_number"] = to_fraction_string(r.weighted_cn);
            row["lk"] = to_fraction_string(r.lk_value);
            row["gekeler_exact"] = to_fraction_string(r.gekeler_exact);
            row["gekeler_float"] = r.gekeler_float;
            row["ok"] = r.ok;
            row["primes"] = primes_json(r);
            rows.push_back(row);
            if (!r.ok) {
                nlohmann::json f;
                f["q"] = r.q;
                f["a"] = r.a;
                f["primes"] = primes_json(r);
                failures.push_back(f);
            }
        }
        obj["rows"] = rows;
        obj["failures"] = failures;
        out << canonical_json_dump(obj);
    } else if (format == "csv") {
        out << "q,a,census,weighted_class_number,lk,gekeler_exact,gekeler_float,ok\n";
        for (const auto& r : rep.rows)
            out << r.q << ',' << r.a << ',' << to_fraction_string(r.census_value) << ','
                << to_fraction_string(r.weighted_cn) << ',' << to_fraction_string(r.lk_value)
                << ',' << to_fraction_string(r.gekeler_exact) << ',' << fmt_double(r.gekeler_float)
                << ',' << (r.ok ? "true" : "false") << '\n';
    } else {
        for (const auto& r : rep.rows) {
            out << "q = " << std::setw(3) << r.q << "  a = " << std::setw(4) << r.a
                << "  census = " << to_fraction_string(r.census_value)
                << "  W = " << to_fraction_string(r.weighted_cn)
                << "  LK = " << to_fraction_string(r.lk_value)
                << "  gekeler = " << to_fraction_string(r.gekeler_exact)
                << "  float = " << fmt_double(r.gekeler_float) << (r.ok ? "  ok" : "  MISMATCH")
                << '\n';
        }
        std::size_t ok = 0;
        for (const auto& r : rep.rows) ok += r.ok ? 1 : 0;
        out << "verified " << ok << " of " << rep.rows.size() << " ordinary classes (q <= "
            << rep.q_max << ")\n";
        for (const auto& r : rep.rows) {
            if (r.ok) continue;
            out << "MISMATCH q = " << r.q << " a = " << r.a << " at primes [";
            for (std::size_t i = 0; i < r.primes.size(); ++i)
                out << (i ? ", " : "") << r.primes[i];
            out << "]\n";
        }
    }
    return rep.all_ok ? 0 : 1;
}

}  // namespace

std::string canonical_json_dump(const nlohmann::json& j) {
    std::string s;
    dump_rec(j, s, 0);
    s += '\n';
    return s;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"weighted isogeny class sizes over F_q, computed by independent routes"};
    app.name("isoclass");
    app.require_subcommand(1);
    auto format_check = CLI::IsMember({"table", "json", "csv"});

    long long census_q = 0;
    bool census_all = false;
    std::string census_format = "table";
    int census_jobs = 0;
    CLI::App* census_cmd =
        app.add_subcommand("census", "enumerate curves over F_q, weighted size per trace");
    census_cmd->add_option("--q", census_q, "field order (prime power, <= 49; <= 27 for p = 2, 3)")
        ->required();
    census_cmd->add_flag("--all", census_all, "include supersingular traces");
    census_cmd->add_option("--format", census_format, "table, json, or csv")->check(format_check);
    census_cmd->add_option("--jobs", census_jobs, "worker threads (0 = all cores)")
        ->envname("ISOCLASS_JOBS");

    long long density_a = 0, density_q = 0, density_ell = 0;
    int density_n_max = 0;
    std::string density_format = "table";
    CLI::App* density_cmd =
        app.add_subcommand("density", "matrix counting ladder nu_{ell,n} for one prime");
    density_cmd->add_option("--a", density_a, "trace of Frobenius")->required();
    density_cmd->add_option("--q", density_q, "field order (prime power)")->required();
    density_cmd->add_option("--ell", density_ell, "prime to work at")->required();
    density_cmd->add_option("--n-max", density_n_max,
                            "ladder depth (0 = 2 v_ell(a^2 - 4q) + 4)");
    density_cmd->add_option("--format", density_format, "table, json, or csv")->check(format_check);

    long long classnum_delta = 0, classnum_a = 0, classnum_q = 0;
    std::string classnum_format = "table";
    CLI::App* classnum_cmd = app.add_subcommand(
        "classnum", "class numbers of the orders between Z[Frobenius] and the maximal order");
    classnum_cmd->add_option("--delta", classnum_delta, "discriminant (< 0, = 0 or 1 mod 4)");
    classnum_cmd->add_option("--a", classnum_a, "trace (with --q: delta = a^2 - 4q)");
    classnum_cmd->add_option("--q", classnum_q, "field order (with --a)");
    classnum_cmd->add_option("--format", classnum_format, "table, json, or csv")
        ->check(format_check);

    long long gekeler_a = 0, gekeler_q = 0, gekeler_prime_bound = 10000;
    std::string gekeler_format = "table";
    CLI::App* gekeler_cmd = app.add_subcommand(
        "gekeler", "assemble the local densities into the exact and truncated products");
    gekeler_cmd->add_option("--a", gekeler_a, "trace of Frobenius")->required();
    gekeler_cmd->add_option("--q", gekeler_q, "field order (prime power)")->required();
    gekeler_cmd->add_option("--prime-bound", gekeler_prime_bound,
                            "truncation point of the float product");
    gekeler_cmd->add_option("--format", gekeler_format, "table, json, or csv")->check(format_check);

    long long verify_q_max = 13, verify_prime_bound = 10000, verify_perturb = 0;
    int verify_jobs = 0;
    std::string verify_format = "table";
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check census = class numbers = LK product = exact Gekeler for all q <= q-max");
    verify_cmd->add_option("--q-max", verify_q_max, "largest field order to verify");
    verify_cmd->add_option("--prime-bound", verify_prime_bound,
                           "truncation point of the float product");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads (0 = all cores)")
        ->envname("ISOCLASS_JOBS");
    verify_cmd->add_option("--format", verify_format, "table, json, or csv")->check(format_check);
    verify_cmd->add_option("--perturb-ell", verify_perturb, "")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*census_cmd)
            return cmd_census(census_q, census_all, census_format, census_jobs, out);
        if (*density_cmd)
            return cmd_density(density_a, density_q, density_ell, density_n_max, density_format,
                               out);
        if (*classnum_cmd) {
            bool have_delta = classnum_cmd->count("--delta") > 0;
            bool have_a = classnum_cmd->count("--a") > 0;
            bool have_q = classnum_cmd->count("--q") > 0;
            long long delta = 0;
            if (have_delta && !have_a && !have_q) {
                delta = classnum_delta;
            } else if (!have_delta && have_a && have_q) {
                characteristic_of(classnum_q);
                delta = classnum_a * classnum_a - 4 * classnum_q;
            } else {
                err << "error: pass either --delta or both --a and --q\n";
                return 2;
            }
            return cmd_classnum(delta, classnum_format, out);
        }
        if (*gekeler_cmd)
            return cmd_gekeler(gekeler_a, gekeler_q, gekeler_prime_bound, gekeler_format, out);
        if (*verify_cmd)
            return cmd_verify(verify_q_max, verify_prime_bound, verify_jobs, verify_perturb,
                              verify_format, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace isoclass
