#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kfib/closedform.hpp"
#include "kfib/factorization.hpp"
#include "kfib/indexing.hpp"
#include "kfib/int_poly.hpp"
#include "kfib/paper_tables.hpp"
#include "kfib/recurrence.hpp"
#include "kfib/roots.hpp"
#include "kfib/triangle.hpp"
#include "kfib/verify.hpp"

using json = nlohmann::json;
using namespace kfib;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Rat parse_rational(const std::string& text) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw CLI::ValidationError("--at", "not a rational: " + text);
    r.canonicalize();
    return r;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);  // LF endings, UTF-8
    out << content;
}

json profile_json(const IndexProfile& p) {
    json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["q"] = p.q;
    j["r"] = p.r;
    j["rho"] = p.rho;
    j["vanishes"] = p.vanishes;
    if (p.degree) j["degree"] = *p.degree;
    else j["degree"] = nullptr;
    return j;
}

json root_report_json(const RootReport& rep) {
    json j;
    j["n"] = rep.n;
    j["k"] = rep.k;
    j["zeta"] = rep.zeta;
    j["residual"] = rep.residual;
    j["x_zero_multiplicity"] = rep.x_zero_multiplicity;
    j["xi_minus_one_multiplicity"] = rep.xi_minus_one_multiplicity;
    json xs = json::array();
    for (const Cplx& z : rep.xi_roots) xs.push_back({{"re", z.real()}, {"im", z.imag()}});
    j["xi_roots"] = xs;
    json rs = json::array();
    for (double x : rep.x_real_roots) rs.push_back(x);
    j["x_real_roots"] = rs;
    return j;
}

std::string zeta_csv(const std::vector<ZetaPoint>& sweep) {
    std::ostringstream out;
    out << "n,zeta,r\n";
    for (const ZetaPoint& pt : sweep) {
        out << pt.n << ',';
        if (pt.converged) out << format_double(pt.zeta);
        out << ',' << pt.r << '\n';
    }
    return out.str();
}

std::string argand_csv(SequenceCache& cache, long n, double tol) {
    RootReport rep = find_roots(cache, n, tol);
    std::ostringstream out;
    out << "re,im\n";
    for (long i = 0; i < rep.x_zero_multiplicity; ++i) out << "0,0\n";
    const long k = cache.k();
    for (const Cplx& xi : rep.xi_roots) {
        double radius = std::pow(std::abs(xi), 1.0 / double(k));
        double base = std::arg(xi) / double(k);
        for (long m = 0; m < k; ++m) {
            double a = base + 2.0 * std::numbers::pi * double(m) / double(k);
            out << format_double(radius * std::cos(a)) << ','
                << format_double(radius * std::sin(a)) << '\n';
        }
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-generalized Fibonacci polynomial toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    double tol = 1e-9;
    int jobs = 1;
    app.add_option("--format", format, "output format: text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--tol", tol, "numeric tolerance (default 1e-9)");
    app.add_option("--jobs", jobs, "parallel workers");

    long opt_k = 2, opt_n = 0, opt_from = 0, opt_to = 0, opt_rows = 4, opt_cols = -1, opt_tag = 1;
    std::string opt_at, opt_csv, opt_suites, opt_figure, opt_which;
    long opt_kmax = 6, opt_nmax = 150, opt_cases = 2000;
    bool opt_neg = false;

    CLI::App* eval = app.add_subcommand("eval", "print F_{n,k} or its exact evaluation");
    eval->add_option("--k", opt_k, "order k >= 2")->required();
    eval->add_option("--n", opt_n, "index n")->required();
    eval->add_option("--at", opt_at, "exact rational evaluation point, e.g. 3/4");

    CLI::App* prof = app.add_subcommand("profile", "index arithmetic q, r, rho, degree");
    prof->add_option("--k", opt_k)->required();
    prof->add_option("--n", opt_n)->required();

    CLI::App* vanish = app.add_subcommand("vanish", "identically vanishing index blocks");
    vanish->add_option("--k", opt_k)->required();

    CLI::App* tri = app.add_subcommand("triangle", "left-justified k-nomial triangle");
    tri->add_option("--k", opt_k)->required();
    tri->add_option("--rows", opt_rows, "row count");
    tri->add_option("--cols", opt_cols, "column count");
    tri->add_flag("--neg", opt_neg, "negative rows");
    CLI::Option* tag_opt = tri->add_option("--tag", opt_tag, "mark the diagonal of F_{n,k}");

    CLI::App* factor = app.add_subcommand("factor", "structural factorization");
    factor->add_option("--k", opt_k)->required();
    factor->add_option("--n", opt_n)->required();

    CLI::App* sigma = app.add_subcommand("sigma", "elementary symmetric polynomials of roots");
    sigma->add_option("--k", opt_k)->required();
    sigma->add_option("--n", opt_n)->required();

    CLI::App* roots_cmd = app.add_subcommand("roots", "numeric root report (JSON)");
    roots_cmd->add_option("--k", opt_k)->required();
    roots_cmd->add_option("--n", opt_n)->required();

    CLI::App* zeta = app.add_subcommand("zeta", "max |xi-root| sweep, CSV n,zeta,r");
    zeta->add_option("--k", opt_k)->required();
    zeta->add_option("--from", opt_from)->required();
    zeta->add_option("--to", opt_to)->required();
    zeta->add_option("--csv", opt_csv, "output path (stdout if omitted)");

    CLI::App* argand = app.add_subcommand("argand", "x-roots in the complex plane, CSV re,im");
    argand->add_option("--k", opt_k)->required();
    argand->add_option("--n", opt_n)->required();
    argand->add_option("--csv", opt_csv);

    CLI::App* table = app.add_subcommand("table", "reference tables");
    table->add_option("which", opt_which, "table1|table2|table3|table4")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the cross-check suites");
    verify->add_option("--suites", opt_suites, "comma-separated suite names (default all)");
    verify->add_option("--kmax", opt_kmax, "max k (default 6)");
    verify->add_option("--nmax", opt_nmax, "max |n| (default 150)");
    verify->add_option("--cases", opt_cases, "randomized property cases");

    CLI::App* fig = app.add_subcommand("figure-data", "CSV data behind the figures");
    fig->add_option("--figure", opt_figure, "fig1|fig2|fig3")->required();
    fig->add_option("--k", opt_k);
    fig->add_option("--n", opt_n);
    fig->add_option("--from", opt_from);
    fig->add_option("--to", opt_to);
    fig->add_option("--csv", opt_csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*eval) {
            SequenceCache cache(opt_k);
            const IntPoly& f = cache.at(opt_n);
            if (!opt_at.empty()) {
                Rat v = eval_rational(f, parse_rational(opt_at));
                std::cout << v.get_str() << "\n";
            } else if (format == "json") {
                std::cout << to_json_string(f) << "\n";
            } else {
                std::cout << to_string(f) << "\n";
            }
        } else if (*prof) {
            IndexProfile p = profile(opt_n, opt_k);
            if (format == "json") {
                std::cout << profile_json(p).dump() << "\n";
            } else {
                std::cout << "n=" << p.n << " k=" << p.k << " q=" << p.q << " r=" << p.r
                          << " rho=" << p.rho << " vanishes=" << (p.vanishes ? "true" : "false")
                          << " degree=" << (p.degree ? std::to_string(*p.degree) : "-") << "\n";
            }
        } else if (*vanish) {
            auto blocks = vanishing_indices(opt_k);
            long total = 0;
            for (const IndexInterval& b : blocks) total += b.count();
            if (format == "json") {
                json j;
                j["k"] = opt_k;
                j["count"] = total;
                json arr = json::array();
                for (const IndexInterval& b : blocks) arr.push_back({{"lo", b.lo}, {"hi", b.hi}});
                j["blocks"] = arr;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "k=" << opt_k << ": " << total << " vanishing indices\n";
                for (const IndexInterval& b : blocks)
                    std::cout << "  n in [" << b.lo << ", " << b.hi << "]\n";
            }
        } else if (*tri) {
            const bool tagging = tag_opt->count() > 0;
            std::vector<std::pair<long, long>> marks;
            if (tagging) marks = diagonal_cells(opt_k, opt_tag);
            long cols = opt_cols;
            if (cols < 0) cols = opt_neg ? opt_k * opt_rows : (opt_k - 1) * (opt_rows - 1) + 1;
            for (long i = 0; i < opt_rows; ++i) {
                long m = opt_neg ? -(i + 1) : i;
                TriangleRow row = TriangleRow::make(opt_k, m, cols);
                std::cout << m << ":";
                for (long j = 0; j < static_cast<long>(row.coeffs.size()); ++j) {
                    std::cout << " " << row.coeffs[static_cast<std::size_t>(j)].get_str();
                    for (const auto& [mm, jj] : marks)
                        if (mm == m && jj == j) std::cout << "*";
                }
                std::cout << "\n";
            }
        } else if (*factor) {
            SequenceCache cache(opt_k);
            Factorization f = factorize(cache, opt_n);
            if (format == "json") {
                json j;
                j["n"] = f.n;
                j["k"] = f.k;
                j["r"] = f.r;
                j["rho"] = f.rho;
                j["Q_xi"] = json::parse(to_json_string(f.Q_xi));
                j["factored"] = factored_compact(f);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << factored_compact(f) << "\n";
            }
        } else if (*sigma) {
            SequenceCache cache(opt_k);
            IndexProfile p = profile(opt_n, opt_k);
            if (p.vanishes) {
                std::cout << "F_{" << opt_n << "," << opt_k << "} vanishes identically\n";
                return kExitPass;
            }
            SymmetricSpec spec = opt_n > 0 ? sigma_pos(opt_n, opt_k) : sigma_neg(opt_n, opt_k);
            const IntPoly& f = cache.at(opt_n);
            IntPoly p_xi = to_xi(mul_monomial(f, 1, -p.r), opt_k);
            std::vector<Rat> exact = vieta_sigma_exact(p_xi);
            bool ok = spec.N == static_cast<long>(exact.size());
            std::cout << "N=" << spec.N << "\n";
            for (long h = 1; h <= spec.N; ++h) {
                const Rat& v = spec.sigma[static_cast<std::size_t>(h - 1)];
                std::cout << "sigma_" << h << " = " << v.get_str();
                if (ok && !(v == exact[static_cast<std::size_t>(h - 1)])) {
                    std::cout << "   [differs from exact "
                              << exact[static_cast<std::size_t>(h - 1)].get_str() << "]";
                    ok = false;
                }
                std::cout << "\n";
            }
            std::cout << "vieta-cross-check: " << (ok ? "ok" : "MISMATCH") << "\n";
            if (!ok) return kExitVerifyFail;
        } else if (*roots_cmd) {
            SequenceCache cache(opt_k);
            RootReport rep = find_roots(cache, opt_n, tol);
            std::cout << root_report_json(rep).dump(2) << "\n";
        } else if (*zeta) {
            auto sweep = zeta_sweep(opt_k, opt_from, opt_to, tol, jobs);
            write_output(opt_csv, zeta_csv(sweep));
        } else if (*argand) {
            SequenceCache cache(opt_k);
            write_output(opt_csv, argand_csv(cache, opt_n, tol));
        } else if (*table) {
            std::cout << render_table(make_table(table_id_from_name(opt_which)));
        } else if (*verify) {
            VerifyConfig cfg;
            cfg.k_max = opt_kmax;
            cfg.n_abs_max = opt_nmax;
            cfg.tol = tol;
            cfg.jobs = jobs;
            cfg.property_cases = opt_cases;
            if (!opt_suites.empty()) {
                std::stringstream ss(opt_suites);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    bool known = false;
                    for (const std::string& s : all_suite_names()) known = known || s == item;
                    if (!known) {
                        std::cerr << "unknown suite: " << item << "\n";
                        return kExitUsage;
                    }
                    cfg.suites.insert(item);
                }
            }
            VerifyReport report = run_verify(cfg);
            std::cout << (format == "json" ? render_report_json(report) : render_report(report));
            if (format == "json") std::cout << "\n";
            return report.all_pass ? kExitPass : kExitVerifyFail;
        } else if (*fig) {
            std::ostringstream out;
            if (opt_figure == "fig1") {
                long k = fig->count("--k") ? opt_k : 5;
                long lo = fig->count("--from") ? opt_from : -60;
                long hi = fig->count("--to") ? opt_to : 60;
                out << "n,degree\n";
                for (long n = lo; n <= hi; ++n) {
                    IndexProfile p = profile(n, k);
                    if (p.vanishes) continue;  // gap
                    out << n << ',' << *p.degree << '\n';
                }
            } else if (opt_figure == "fig2") {
                std::vector<std::pair<long, long>> pairs;
                if (fig->count("--k"))
                    pairs.emplace_back(fig->count("--from") ? opt_from : opt_n, opt_k);
                else
                    pairs = {{-40, 3}, {40, 8}};
                out << "k,n,re,im\n";
                for (const auto& [n, k] : pairs) {
                    SequenceCache cache(k);
                    std::istringstream rows(argand_csv(cache, n, tol));
                    std::string line;
                    std::getline(rows, line);  // drop inner header
                    while (std::getline(rows, line)) out << k << ',' << n << ',' << line << '\n';
                }
            } else if (opt_figure == "fig3") {
                out << "k,n,zeta,r\n";
                std::vector<std::tuple<long, long, long>> sweeps;
                if (fig->count("--k")) {
                    sweeps.emplace_back(opt_k, opt_from, opt_to);
                } else {
                    for (long k : {2L, 3L, 8L}) sweeps.emplace_back(k, 2, 120);
                    sweeps.emplace_back(4, -120, -1);
                }
                for (const auto& [k, lo, hi] : sweeps) {
                    auto sweep = zeta_sweep(k, lo, hi, tol, jobs);
                    for (const ZetaPoint& pt : sweep) {
                        out << k << ',' << pt.n << ',';
                        if (pt.converged) out << format_double(pt.zeta);
                        out << ',' << pt.r << '\n';
                    }
                }
            } else {
                std::cerr << "unknown figure: " << opt_figure << "\n";
                return kExitUsage;
            }
            write_output(opt_csv, out.str());
        }
    } catch (const KTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VanishingIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitPass;
}
