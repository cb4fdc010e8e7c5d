#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "chow0/intmath.hpp"
#include "chow0/io_text.hpp"
#include "chow0/localization.hpp"
#include "chow0/parallel.hpp"
#include "chow0/verify.hpp"
#include "chow0/z1_relations.hpp"

namespace chow0::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    std::string out_file;
    unsigned threads = 0;
    bool timings = false;
};

IntRange parse_range(const std::string& s) {
    const auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            const long v = std::stol(s);
            return {v, v};
        }
        const long lo = std::stol(s.substr(0, pos));
        const long hi = std::stol(s.substr(pos + 2));
        if (lo > hi) throw DomainError("empty range");
        return {lo, hi};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected an integer or 'a..b', got '" + s + "'");
    }
}

void require_odd_d(const IntRange& d) {
    if (d.lo == d.hi && (d.lo < 1 || d.lo % 2 == 0)) {
        throw CLI::ValidationError("--d", "degree d must be odd and positive");
    }
    if (d.odd_values().empty()) {
        throw CLI::ValidationError("--d", "range contains no odd degree");
    }
}

void emit(const Options& opt, std::ostream& out, const std::string& payload) {
    if (!opt.out_file.empty()) {
        std::ofstream f(opt.out_file);
        if (!f) throw CLI::ValidationError("--out", "cannot open '" + opt.out_file + "'");
        f << payload;
        return;
    }
    out << payload;
}

json poly_json(const ZPoly& p) { return json::parse(chern_poly_json(p)); }

struct GeneratorEntry {
    int i;
    int k;
    ZPoly poly;
};

std::vector<GeneratorEntry> reduced_generators(int r, int d) {
    std::vector<GeneratorEntry> out;
    out.push_back({1, 0, z1::genfun_alpha1(0, r, d)});
    out.push_back({1, 1, z1::genfun_alpha1(1, r, d)});
    for (long q : prime_powers_up_to(d)) {
        out.push_back({static_cast<int>(q), 0, zi::alpha_i0(static_cast<int>(q), r, d)});
    }
    return out;
}

std::vector<GeneratorEntry> full_generators(int r, int d) {
    std::vector<GeneratorEntry> out;
    for (int i = 1; i <= d; ++i) {
        for (int k = 0; k <= i; ++k) out.push_back({i, k, verify::production_alpha(i, k, r, d)});
    }
    return out;
}

int cmd_present(int r, int d, bool full, const Options& opt, std::ostream& out) {
    const auto reduced = reduced_generators(r, d);
    std::vector<GeneratorEntry> complete;
    if (full) complete = full_generators(r, d);

    if (opt.format == "json") {
        json doc;
        doc["command"] = "present";
        doc["r"] = r;
        doc["d"] = d;
        doc["ring"] = "Z[c1,c2]";
        doc["reduced_generators"] = json::array();
        for (const auto& g : reduced) {
            doc["reduced_generators"].push_back({{"i", g.i},
                                                 {"k", g.k},
                                                 {"degree", g.poly.degree()},
                                                 {"poly", poly_json(g.poly)},
                                                 {"text", g.poly.to_string()}});
        }
        if (full) {
            doc["full_generators"] = json::array();
            for (const auto& g : complete) {
                doc["full_generators"].push_back({{"i", g.i},
                                                  {"k", g.k},
                                                  {"degree", g.poly.degree()},
                                                  {"poly", poly_json(g.poly)},
                                                  {"text", g.poly.to_string()}});
            }
        }
        emit(opt, out, doc.dump(2) + "\n");
    } else if (opt.format == "latex") {
        std::ostringstream s;
        s << "A^*(\\mathcal{M}_0(\\mathbb{P}^{" << r << "}, " << d
          << ")) \\cong \\frac{\\mathbb{Z}[c_1, c_2]}{\\left(";
        for (std::size_t t = 0; t < reduced.size(); ++t) {
            if (t > 0) s << ",\\; ";
            s << chern_poly_latex(reduced[t].poly);
        }
        s << "\\right)}\n";
        if (full) {
            for (const auto& g : complete) {
                s << "\\alpha_{" << g.i << "," << g.k << "} &= " << chern_poly_latex(g.poly)
                  << " \\\\\n";
            }
        }
        emit(opt, out, s.str());
    } else {
        std::ostringstream s;
        s << "A*(M_0(P^" << r << ", " << d << ")) = Z[c1,c2] / I(r=" << r << ", d=" << d << ")\n";
        s << "reduced generators (first envelope + prime-power fundamental classes):\n";
        for (const auto& g : reduced) {
            s << "  alpha_{" << g.i << "," << g.k << "}  (degree " << g.poly.degree()
              << ")  = " << g.poly.to_string() << "\n";
        }
        if (full) {
            s << "full generating family:\n";
            for (const auto& g : complete) {
                s << "  alpha_{" << g.i << "," << g.k << "}  (degree " << g.poly.degree()
                  << ")  = " << g.poly.to_string() << "\n";
            }
        }
        emit(opt, out, s.str());
    }
    return 0;
}

int cmd_alpha(int i, int k, int r, int d, bool no_check, const Options& opt, std::ostream& out,
              std::ostream& err) {
    const ZPoly value = verify::production_alpha(i, k, r, d);
    bool checked = false;
    if (!no_check) {
        if (const auto oracle = verify::oracle_alpha(i, k, r, d)) {
            checked = true;
            if (!(*oracle == value)) {
                err << "cross-check failed: production and oracle paths disagree for alpha_{" << i
                    << "," << k << "}^{" << r << "," << d << "}\n";
                return 1;
            }
        }
    }

    if (opt.format == "json") {
        json doc;
        doc["command"] = "alpha";
        doc["i"] = i;
        doc["k"] = k;
        doc["r"] = r;
        doc["d"] = d;
        doc["degree"] = value.degree();
        doc["cross_checked"] = checked;
        doc["poly"] = poly_json(value);
        doc["text"] = value.to_string();
        emit(opt, out, doc.dump(2) + "\n");
    } else if (opt.format == "latex") {
        emit(opt, out, chern_poly_latex(value) + "\n");
    } else {
        emit(opt, out, value.to_string() + "\n");
    }
    return 0;
}

int cmd_verify(const std::string& kind, IntRange rr, IntRange dd, bool weak, const Options& opt,
               std::ostream& out) {
    verify::SuiteReport rep;
    if (kind == "cross") {
        rep = verify::verify_cross(rr, dd, opt.threads);
    } else if (kind == "identities") {
        rep = verify::verify_identities(dd, opt.threads);
    } else if (kind == "reduction") {
        rep = verify::verify_reduction(rr, dd, opt.threads);
    } else if (kind == "conjecture") {
        rep = verify::verify_conjecture(rr, dd, weak, opt.threads);
    } else {
        rep = verify::verify_rational(rr, dd, opt.threads);
    }

    if (opt.format == "json") {
        json doc;
        doc["command"] = "verify";
        doc["kind"] = rep.kind;
        doc["pass"] = rep.pass;
        doc["checked"] = rep.checked;
        doc["params"] = {{"r", {rr.lo, rr.hi}}, {"d", {dd.lo, dd.hi}}, {"weak", weak}};
        doc["cells"] = json::array();
        for (const auto& c : rep.cells) {
            json cell;
            if (c.i >= 0) cell["i"] = c.i;
            if (c.k >= 0) cell["k"] = c.k;
            cell["r"] = c.r;
            cell["d"] = c.d;
            cell["pass"] = c.pass;
            if (!c.note.empty()) cell["note"] = c.note;
            doc["cells"].push_back(std::move(cell));
        }
        if (opt.timings) doc["elapsed_seconds"] = rep.elapsed_seconds;
        emit(opt, out, doc.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "verify " << rep.kind << ": " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.checked
          << " checks)\n";
        for (const auto& c : rep.cells) {
            s << "  ";
            s << (c.pass ? "pass" : "FAIL");
            if (c.i >= 0) s << "  i=" << c.i;
            if (c.k >= 0) s << " k=" << c.k;
            s << " r=" << c.r << " d=" << c.d;
            if (!c.note.empty()) s << "  [" << c.note << "]";
            s << "\n";
        }
        if (opt.timings) s << "elapsed: " << rep.elapsed_seconds << "s\n";
        emit(opt, out, s.str());
    }
    return rep.pass ? 0 : 1;
}

int cmd_gcd_binomials(IntRange ii, const Options& opt, std::ostream& out) {
    if (ii.lo < 2) throw CLI::ValidationError("--i", "gcd-binomials needs i >= 2");
    if (opt.format == "json") {
        json doc;
        doc["command"] = "gcd-binomials";
        doc["results"] = json::array();
        for (long i = ii.lo; i <= ii.hi; ++i) {
            const auto g = binomial_gcd(i);
            json row;
            row["i"] = i;
            row["gcd"] = g.gcd.to_string();
            row["is_prime_power"] = g.is_prime_power;
            if (g.p) row["p"] = *g.p;
            doc["results"].push_back(std::move(row));
        }
        emit(opt, out, doc.dump(2) + "\n");
    } else {
        std::ostringstream s;
        for (long i = ii.lo; i <= ii.hi; ++i) {
            const auto g = binomial_gcd(i);
            s << "i=" << i << ": gcd " << g.gcd.to_string();
            if (g.is_prime_power) {
                s << " (prime power of " << *g.p << ")";
            } else {
                s << " (not a prime power)";
            }
            s << "\n";
        }
        emit(opt, out, s.str());
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Chow-ring relation computations for spaces of odd-degree rational maps"};
    app.name("chow0");
    app.require_subcommand(1);

    Options opt;
    std::string r_arg = "0";
    std::string d_arg = "1";
    std::string i_arg = "1";
    std::string k_arg = "0";
    bool full = false;
    bool no_check = false;
    bool weak = false;

    auto add_common = [&](CLI::App* cmd) {
        CLI::Option* fmt = cmd->add_option("--format", opt.format, "output format")
                               ->check(CLI::IsMember({"text", "json", "latex"}));
        cmd->add_option("--threads", opt.threads,
                        "worker threads (0 = CHOW0_THREADS or hardware)");
        cmd->add_option("--out", opt.out_file, "write output to a file instead of stdout");
        return fmt;
    };

    CLI::App* present = app.add_subcommand("present", "reduced generator list of the relation ideal");
    present->add_option("--r", r_arg, "target dimension r")->required();
    present->add_option("--d", d_arg, "map degree d (odd)")->required();
    present->add_flag("--full", full, "also list the complete alpha family");
    add_common(present);

    CLI::App* alpha = app.add_subcommand("alpha", "single relation class alpha_{i,k}^{r,d}");
    alpha->add_option("--i", i_arg, "envelope index")->required();
    alpha->add_option("--k", k_arg, "hyperplane power")->required();
    alpha->add_option("--r", r_arg, "target dimension r")->required();
    alpha->add_option("--d", d_arg, "map degree d (odd)")->required();
    alpha->add_flag("--no-check", no_check, "skip the oracle cross-check");
    add_common(alpha);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string kind;
    verify_cmd->add_option("kind", kind, "cross|identities|reduction|conjecture|rational")
        ->required()
        ->check(CLI::IsMember({"cross", "identities", "reduction", "conjecture", "rational"}));
    verify_cmd->add_option("--r", r_arg, "r range (a..b or single)");
    verify_cmd->add_option("--d", d_arg, "d range, odd values used (a..b or single)");
    verify_cmd->add_flag("--weak", weak, "conjecture: generation only, skip minimality");
    verify_cmd->add_flag("--timings", opt.timings, "include elapsed time in the report");
    CLI::Option* verify_fmt = add_common(verify_cmd);

    CLI::App* gcd = app.add_subcommand("gcd-binomials", "gcd of inner binomials C(i,1..i-1)");
    gcd->add_option("--i", i_arg, "index or range")->required();
    add_common(gcd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);

        if (present->parsed()) {
            const IntRange r = parse_range(r_arg);
            const IntRange d = parse_range(d_arg);
            if (r.lo != r.hi || d.lo != d.hi) {
                throw CLI::ValidationError("present", "expects single --r and --d values");
            }
            require_odd_d(d);
            if (r.lo < 0) throw CLI::ValidationError("--r", "r must be >= 0");
            return cmd_present(static_cast<int>(r.lo), static_cast<int>(d.lo), full, opt, out);
        }
        if (alpha->parsed()) {
            const IntRange r = parse_range(r_arg);
            const IntRange d = parse_range(d_arg);
            const IntRange i = parse_range(i_arg);
            const IntRange k = parse_range(k_arg);
            if (r.lo != r.hi || d.lo != d.hi || i.lo != i.hi || k.lo != k.hi) {
                throw CLI::ValidationError("alpha", "expects single values");
            }
            require_odd_d(d);
            if (r.lo < 0) throw CLI::ValidationError("--r", "r must be >= 0");
            if (i.lo < 1 || i.lo > d.lo) throw CLI::ValidationError("--i", "need 1 <= i <= d");
            if (k.lo < 0 || k.lo > i.lo) throw CLI::ValidationError("--k", "need 0 <= k <= i");
            return cmd_alpha(static_cast<int>(i.lo), static_cast<int>(k.lo),
                             static_cast<int>(r.lo), static_cast<int>(d.lo), no_check, opt, out,
                             err);
        }
        if (verify_cmd->parsed()) {
            const IntRange r = parse_range(r_arg);
            const IntRange d = parse_range(d_arg);
            require_odd_d(d);
            if (r.lo < 0) throw CLI::ValidationError("--r", "r must be >= 0");
            if (verify_fmt->count() == 0) opt.format = "json"; // reports default to JSON
            return cmd_verify(kind, r, d, weak, opt, out);
        }
        if (gcd->parsed()) {
            return cmd_gcd_binomials(parse_range(i_arg), opt, out);
        }
        err << app.help();
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "chow0: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "chow0: " << e.what() << "\n";
        return 2;
    }
}

} // namespace chow0::cli
