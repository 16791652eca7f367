// Command-line surface: theta constants, the Siegel modular function Theta,
// CM points, ray-class tables with invariants, and the property suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "siegel/error.hpp"
#include "siegel/rayclass.hpp"
#include "siegel/verify.hpp"

using json = nlohmann::ordered_json;
using namespace siegel;

namespace {

size_t decimal_digits(mpfr_prec_t prec) {
    return static_cast<size_t>(static_cast<double>(prec) * 0.30103) + 2;
}

std::vector<Rational> parse_fraction_list(const std::string& text) {
    std::vector<Rational> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty())
            return;
        Rational q(cur);
        q.canonicalize();
        out.push_back(q);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ';') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    flush();
    return out;
}

ThetaChar parse_char(const std::string& text, long level) {
    std::vector<Rational> v = parse_fraction_list(text);
    if (v.size() < 2 || v.size() % 2 != 0)
        throw Error("characteristic needs an even number of entries");
    return ThetaChar::from_vector(v, level);
}

SiegelPoint parse_z_json(const std::string& text, mpfr_prec_t prec) {
    json j = json::parse(text);
    if (!j.is_array() || j.empty())
        throw Error("Z must be a JSON array of rows");
    int g = static_cast<int>(j.size());
    CMat m(g, g, prec);
    for (int i = 0; i < g; ++i) {
        if (!j[static_cast<size_t>(i)].is_array() ||
            static_cast<int>(j[static_cast<size_t>(i)].size()) != g)
            throw Error("Z must be square");
        for (int k = 0; k < g; ++k) {
            const json& e = j[static_cast<size_t>(i)][static_cast<size_t>(k)];
            m.at(i, k) = BigComplex(BigReal::from_string(e.at("re").get<std::string>(), prec),
                                    BigReal::from_string(e.at("im").get<std::string>(), prec));
        }
    }
    return SiegelPoint::from_matrix(m);
}

json complex_to_json(const BigComplex& z, size_t digits) {
    return json{{"re", z.re().to_decimal(digits)}, {"im", z.im().to_decimal(digits)}};
}

json cm_point_to_json(const SiegelPoint& z, size_t digits) {
    json rows = json::array();
    for (int i = 0; i < z.g(); ++i) {
        json row = json::array();
        for (int k = 0; k < z.g(); ++k)
            row.push_back(complex_to_json(z.at(i, k), digits));
        rows.push_back(row);
    }
    return rows;
}

std::string fraction_over(long num, long den) {
    if (num == 0)
        return "0";
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string format_value_6(const BigComplex& z) {
    std::string re = z.re().to_decimal(6);
    std::string im = z.im().to_decimal(6);
    if (z.im().is_zero())
        return re;
    if (z.im().sign() < 0)
        return re + " - " + im.substr(1) + "i";
    return re + " + " + im + "i";
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f)
        throw Error("cannot open output file: " + out_path);
    f << payload;
}

struct InvariantRows {
    RayClassTable table;
    CmContext ctx;
};

std::string render_invariants(const RayClassTable& table, const std::string& format,
                              mpfr_prec_t prec) {
    std::ostringstream os;
    if (format == "json") {
        size_t digits = decimal_digits(prec);
        json j;
        j["ell"] = table.ell;
        j["N"] = table.n_level;
        j["prec_bits"] = static_cast<long>(prec);
        j["cm_point"] = cm_point_to_json(*table.cm, digits);
        json classes = json::array();
        for (size_t i = 0; i < table.classes.size(); ++i) {
            const RayClass& c = table.classes[i];
            json row;
            row["label"] = c.label;
            json rv = json::array();
            for (long r : c.r_vec)
                rv.push_back(fraction_over(r, table.n_level));
            row["r_vector"] = rv;
            row["theta"] = complex_to_json(table.invariants[i], digits);
            classes.push_back(row);
        }
        j["classes"] = classes;
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "label,r_vector,re,im\n";
        for (size_t i = 0; i < table.classes.size(); ++i) {
            const RayClass& c = table.classes[i];
            os << "C_" << c.label << ",";
            for (size_t k = 0; k < c.r_vec.size(); ++k)
                os << (k ? ";" : "") << fraction_over(c.r_vec[k], table.n_level);
            os << "," << table.invariants[i].re().to_decimal(6) << ","
               << table.invariants[i].im().to_decimal(6) << "\n";
        }
    } else {
        os << "Cl(" << table.n_level << " O_K) for ell = " << table.ell << ": order "
           << table.order << (table.cyclic ? ", cyclic" : "") << "\n";
        for (size_t i = 0; i < table.classes.size(); ++i) {
            const RayClass& c = table.classes[i];
            os << "C_" << c.label << "  [";
            for (size_t k = 0; k < c.r_vec.size(); ++k)
                os << (k ? ", " : "") << fraction_over(c.r_vec[k], table.n_level);
            os << "]  " << format_value_6(table.invariants[i]);
            if (!c.aligned)
                os << "  (alignment=fallback)";
            os << "\n";
        }
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta constants, Siegel modular functions and ray-class invariants "
                 "of cyclotomic CM-fields"};
    app.require_subcommand(1);

    long ell = 5, n_level = 5, prec = 0, seed = 1, threads = 0, level = 0;
    std::string char_text, z_text, z_file, format = "table", out_path, suite = "all";

    auto add_prec = [&](CLI::App* cmd, long def) {
        cmd->add_option("--prec", prec, "working precision in bits (>= 64)")
            ->default_val(def)
            ->check(CLI::Range(64L, 1L << 20));
    };

    CLI::App* c_theta = app.add_subcommand("theta", "evaluate a theta constant");
    c_theta->add_option("--char", char_text, "characteristic, e.g. \"1/2,0;1/2,0\"")->required();
    c_theta->add_option("--Z", z_text, "Siegel point as JSON [[{re,im},...],...]");
    c_theta->add_option("--Z-file", z_file, "file containing the Siegel point JSON");
    c_theta->add_option("--ell", ell, "use the CM point of Q(zeta_ell)")->check(CLI::Range(3L, 19L));
    add_prec(c_theta, 256);

    CLI::App* c_big = app.add_subcommand("big-theta", "evaluate the Siegel modular function");
    c_big->add_option("--char", char_text, "characteristic of length 2g")->required();
    c_big->add_option("--level", level, "level N (default: least common denominator)");
    c_big->add_option("--Z", z_text, "Siegel point as JSON");
    c_big->add_option("--Z-file", z_file, "file containing the Siegel point JSON");
    c_big->add_option("--ell", ell, "use the CM point of Q(zeta_ell)")->check(CLI::Range(3L, 19L));
    add_prec(c_big, 256);

    CLI::App* c_cm = app.add_subcommand("cm-point", "print the CM point of Q(zeta_ell)");
    c_cm->add_option("--ell", ell, "odd prime <= 19")->check(CLI::Range(3L, 19L));
    c_cm->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    c_cm->add_option("--out", out_path, "write output to a file");
    add_prec(c_cm, 256);

    CLI::App* c_rc = app.add_subcommand("ray-classes", "enumerate ray classes mod N*O_K");
    c_rc->add_option("--ell", ell, "odd prime <= 19")->check(CLI::Range(3L, 19L));
    c_rc->add_option("--N", n_level, "conductor level N >= 2")->check(CLI::Range(2L, 1024L));
    c_rc->add_option("--format", format, "table|json")->check(CLI::IsMember({"table", "json"}));
    c_rc->add_option("--out", out_path, "write output to a file");

    CLI::App* c_inv = app.add_subcommand("invariants", "compute all Siegel invariants mod N*O_K");
    c_inv->add_option("--ell", ell, "odd prime <= 19")->check(CLI::Range(3L, 19L));
    c_inv->add_option("--N", n_level, "conductor level N >= 2")->check(CLI::Range(2L, 1024L));
    c_inv->add_option("--format", format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    c_inv->add_option("--out", out_path, "write output to a file");
    c_inv->add_option("--threads", threads, "worker threads (0 = auto)");
    c_inv->add_option("--prec", prec, "working precision in bits (>= 256 here)")
        ->check(CLI::Range(64L, 1L << 20));

    CLI::App* c_ver = app.add_subcommand("verify", "run the property suites");
    c_ver->add_option("--suite", suite, "cyclo|symplectic|theta|cmdata|rayclass|all")
        ->check(CLI::IsMember({"cyclo", "symplectic", "theta", "cmdata", "rayclass", "all"}));
    c_ver->add_option("--seed", seed, "seed for the randomized suites");
    c_ver->add_option("--ell", ell, "odd prime <= 19")->check(CLI::Range(3L, 19L));
    c_ver->add_option("--N", n_level, "conductor level N >= 2")->check(CLI::Range(2L, 1024L));
    add_prec(c_ver, 256);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_theta) || app.got_subcommand(c_big)) {
            bool big = app.got_subcommand(c_big);
            ThetaChar v = parse_char(char_text, level);
            mpfr_prec_t p = static_cast<mpfr_prec_t>(prec);
            SiegelPoint z = [&]() {
                if (!z_file.empty()) {
                    std::ifstream f(z_file);
                    if (!f)
                        throw Error("cannot open Z file: " + z_file);
                    std::stringstream ss;
                    ss << f.rdbuf();
                    return parse_z_json(ss.str(), p + 32);
                }
                if (!z_text.empty())
                    return parse_z_json(z_text, p + 32);
                CmContext ctx = CmContext::make(ell);
                return cm_point(ctx, p + 64);
            }();
            if (z.g() != v.g())
                throw Error("characteristic length does not match the genus of Z");
            BigComplex val = big ? big_theta(v, z, p) : theta_eval(v, z, p);
            size_t digits = decimal_digits(p);
            std::cout << (big ? "Theta" : "theta") << " = " << val.re().to_decimal(digits)
                      << " + " << val.im().to_decimal(digits) << " i\n";
            return 0;
        }

        if (app.got_subcommand(c_cm)) {
            mpfr_prec_t p = static_cast<mpfr_prec_t>(prec);
            CmContext ctx = CmContext::make(ell);
            SiegelPoint z = cm_point(ctx, p);
            size_t digits = decimal_digits(p);
            if (format == "json") {
                json j;
                j["ell"] = ell;
                j["prec_bits"] = prec;
                j["cm_point"] = cm_point_to_json(z, digits);
                emit(out_path, j.dump(2) + "\n");
            } else {
                std::ostringstream os;
                for (int i = 0; i < z.g(); ++i) {
                    for (int k = 0; k < z.g(); ++k)
                        os << format_value_6(z.at(i, k)) << (k + 1 < z.g() ? "   " : "");
                    os << "\n";
                }
                emit(out_path, os.str());
            }
            return 0;
        }

        if (app.got_subcommand(c_rc)) {
            RayClassTable table = enumerate_ray_classes(ell, n_level);
            std::ostringstream os;
            if (format == "json") {
                json j;
                j["ell"] = table.ell;
                j["N"] = table.n_level;
                j["order"] = table.order;
                j["cyclic_factors"] = table.cyclic_factors;
                json classes = json::array();
                for (const auto& c : table.classes) {
                    json row;
                    row["label"] = c.label;
                    row["representative"] = c.representative.to_string();
                    json rv = json::array();
                    for (long r : c.r_vec)
                        rv.push_back(fraction_over(r, table.n_level));
                    row["r_vector"] = rv;
                    classes.push_back(row);
                }
                j["classes"] = classes;
                os << j.dump(2) << "\n";
            } else {
                os << "Cl(" << n_level << " O_K), ell = " << ell << ": order " << table.order;
                if (table.cyclic)
                    os << " (cyclic)";
                os << ", |(O/N)^x| = " << table.residue_unit_count
                   << ", unit image = " << table.unit_image_count << "\n";
                for (const auto& c : table.classes) {
                    os << "C_" << c.label << "  rep " << c.representative.to_string() << "  [";
                    for (size_t k = 0; k < c.r_vec.size(); ++k)
                        os << (k ? ", " : "") << fraction_over(c.r_vec[k], table.n_level);
                    os << "]";
                    if (!c.aligned)
                        os << "  (alignment=fallback)";
                    os << "\n";
                }
            }
            emit(out_path, os.str());
            return 0;
        }

        if (app.got_subcommand(c_inv)) {
            if (prec == 0)
                prec = n_level >= 6 ? 768 : 512;
            if (prec < 256)
                throw Error("insufficient precision for target magnitudes");
            CmContext ctx = CmContext::make(ell);
            RayClassTable table = enumerate_ray_classes(ell, n_level);
            compute_invariants(ctx, table, static_cast<mpfr_prec_t>(prec),
                               static_cast<int>(threads));
            emit(out_path, render_invariants(table, format, static_cast<mpfr_prec_t>(prec)));
            return 0;
        }

        if (app.got_subcommand(c_ver)) {
            VerifyOptions opt;
            opt.seed = static_cast<std::uint64_t>(seed);
            opt.ell = ell;
            opt.n = n_level;
            opt.prec = static_cast<mpfr_prec_t>(prec);
            std::vector<SuiteResult> results = run_suites(suite, opt);
            print_suite_report(std::cout, results);
            bool all_ok = true;
            for (const auto& r : results)
                all_ok = all_ok && r.passed;
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
