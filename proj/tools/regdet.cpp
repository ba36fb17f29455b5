#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "regdet/detengine.hpp"
#include "regdet/ktheory.hpp"
#include "regdet/numberfield.hpp"
#include "regdet/regprod.hpp"
#include "regdet/specfun.hpp"
#include "regdet/textio.hpp"

// regdet: evaluate the regularized determinant G_K(s), verify its identities,
// compute field signatures from defining polynomials, and emit value grids.
//
// Exit codes: 0 success, 1 failed identity, 2 parse/usage failure,
// 3 domain error (pole or out-of-domain evaluation).

namespace {

using regdet::detengine::VerificationReport;
using regdet::ktheory::Signature;
using regdet::specfun::Complex;
using regdet::specfun::EulerMaclaurinParams;
namespace textio = regdet::textio;

long parse_env_long(const char* name, const char* text) {
    char* end = nullptr;
    const long v = std::strtol(text, &end, 10);
    if (end == text || *end != '\0')
        throw std::invalid_argument(std::string(name) + ": \"" + text +
                                    "\" is not an integer");
    return v;
}

EulerMaclaurinParams params_from_env() {
    EulerMaclaurinParams p;
    if (const char* n = std::getenv("REGDET_EM_N"))
        p.cutoff_N = static_cast<int>(parse_env_long("REGDET_EM_N", n));
    if (const char* b = std::getenv("REGDET_EM_B"))
        p.bernoulli_terms = static_cast<int>(parse_env_long("REGDET_EM_B", b));
    p.validate();
    return p;
}

// Shared --r1/--r2/--poly resolution.  Exactly one source must be given;
// the polynomial path prints the irreducibility caveat to stderr.
struct SignatureArgs {
    int r1 = -1;
    int r2 = -1;
    std::string poly;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--r1", r1, "number of real places");
        cmd->add_option("--r2", r2, "number of complex places");
        cmd->add_option("--poly", poly,
                        "defining polynomial, comma-separated ascending integer "
                        "coefficients (e.g. \"-2,0,0,1\" is x^3-2)");
    }

    Signature resolve() const {
        const bool have_pair = r1 >= 0 || r2 >= 0;
        if (have_pair && !poly.empty())
            throw std::invalid_argument(
                "give either --r1/--r2 or --poly, not both");
        if (!have_pair && poly.empty())
            throw std::invalid_argument(
                "a signature is required: either --r1 and --r2, or --poly");
        if (!poly.empty()) {
            const auto f = regdet::numberfield::parse_polynomial(poly);
            const Signature sig = regdet::numberfield::signature_from_polynomial(f);
            std::cerr << "warning: irreducibility of the defining polynomial is "
                         "not verified; (r1, r2) describes Q[x]/(f) only when f "
                         "is irreducible over Q\n";
            return sig;
        }
        if (r1 < 0 || r2 < 0)
            throw std::invalid_argument("--r1 and --r2 must be given together");
        return Signature(r1, r2);
    }
};

std::string report_to_json(const VerificationReport& rep) {
    std::string out = "{\"identity\": \"" + textio::json_escape(rep.identity_name) +
                      "\", \"tolerance\": " + textio::format_double(rep.tolerance) +
                      ", \"max_residual\": " + textio::format_double(rep.max_residual) +
                      ", \"passed\": " + (rep.passed ? "true" : "false") +
                      ", \"points\": [";
    bool first = true;
    for (const auto& p : rep.gridpoints) {
        if (!first)
            out += ", ";
        first = false;
        out += "{\"s\": " + textio::format_complex_pair(p.s) +
               ", \"lhs\": " + textio::format_complex_pair(p.lhs) +
               ", \"rhs\": " + textio::format_complex_pair(p.rhs) +
               ", \"residual\": " + textio::format_double(p.residual) + "}";
    }
    out += "]}";
    return out;
}

struct GridArgs {
    double re_min = -4.0, re_max = 4.0;
    double im_min = -4.0, im_max = 4.0;
    int re_steps = 10, im_steps = 20;
    bool any_given = false;

    void add_to(CLI::App* cmd) {
        auto mark = [this](double) { any_given = true; };
        cmd->add_option("--re-min", re_min, "grid lower bound, real part")
            ->each([this](const std::string&) { any_given = true; });
        cmd->add_option("--re-max", re_max, "grid upper bound, real part")
            ->each([this](const std::string&) { any_given = true; });
        cmd->add_option("--re-steps", re_steps, "grid points along the real axis")
            ->each([this](const std::string&) { any_given = true; });
        cmd->add_option("--im-min", im_min, "grid lower bound, imaginary part")
            ->each([this](const std::string&) { any_given = true; });
        cmd->add_option("--im-max", im_max, "grid upper bound, imaginary part")
            ->each([this](const std::string&) { any_given = true; });
        cmd->add_option("--im-steps", im_steps, "grid points along the imaginary axis")
            ->each([this](const std::string&) { any_given = true; });
        (void)mark;
    }

    std::vector<Complex> build() const {
        return regdet::detengine::lattice_grid(re_min, re_max, re_steps, im_min,
                                               im_max, im_steps);
    }
};

int run_eval(const SignatureArgs& sig_args, const std::vector<std::string>& s_texts,
             const std::string& method, const EulerMaclaurinParams& em) {
    const Signature sig = sig_args.resolve();
    for (const auto& text : s_texts) {
        const Complex s = textio::parse_complex(text);
        Complex value;
        if (method == "closed")
            value = regdet::detengine::g_closed(s, sig);
        else if (method == "alt")
            value = regdet::detengine::g_alt(s, sig);
        else if (method == "regularized")
            value = regdet::detengine::g_regularized(s, sig, em);
        else
            throw std::invalid_argument("unknown method \"" + method +
                                        "\" (closed, alt, regularized)");
        std::cout << "{\"s\": " << textio::format_complex_pair(s)
                  << ", \"value\": " << textio::format_complex_pair(value)
                  << ", \"method\": \"" << method << "\", \"signature\": ["
                  << sig.r1 << ", " << sig.r2 << "]}\n";
    }
    return 0;
}

int run_verify(const SignatureArgs& sig_args, const std::string& identity,
               std::optional<double> tol, const GridArgs& grid_args,
               const EulerMaclaurinParams& em) {
    const Signature sig = sig_args.resolve();
    const std::vector<Complex> grid =
        grid_args.any_given ? grid_args.build()
                            : regdet::detengine::default_verification_grid();

    std::vector<VerificationReport> reports;
    const bool all = identity == "all";
    if (all || identity == "periodicity")
        reports.push_back(regdet::detengine::check_periodicity(
            sig, grid, tol.value_or(1e-10)));
    if (all || identity == "reflection")
        reports.push_back(regdet::detengine::check_reflection(
            sig, grid, tol.value_or(1e-10)));
    if (all || identity == "lerch")
        reports.push_back(regdet::detengine::check_lerch(tol.value_or(1e-8), em));
    if (reports.empty())
        throw std::invalid_argument("unknown identity \"" + identity +
                                    "\" (periodicity, reflection, lerch, all)");

    if (reports.size() == 1) {
        std::cout << report_to_json(reports.front()) << "\n";
    } else {
        std::cout << "[";
        for (size_t i = 0; i < reports.size(); ++i)
            std::cout << (i ? ", " : "") << report_to_json(reports[i]);
        std::cout << "]\n";
    }
    for (const auto& r : reports)
        if (!r.passed)
            return 1;
    return 0;
}

int run_signature(const std::string& poly, const std::string& format) {
    const auto f = regdet::numberfield::parse_polynomial(poly);
    const Signature sig = regdet::numberfield::signature_from_polynomial(f);
    std::cerr << "warning: irreducibility of the defining polynomial is not "
                 "verified; (r1, r2) describes Q[x]/(f) only when f is "
                 "irreducible over Q\n";
    if (format == "text")
        std::cout << "r1=" << sig.r1 << " r2=" << sig.r2
                  << " degree=" << sig.degree() << "\n";
    else if (format == "json")
        std::cout << "{\"r1\": " << sig.r1 << ", \"r2\": " << sig.r2
                  << ", \"degree\": " << sig.degree() << "}\n";
    else
        throw std::invalid_argument("unknown format \"" + format +
                                    "\" (text, json)");
    return 0;
}

int run_grid(const SignatureArgs& sig_args, const GridArgs& grid_args,
             const std::string& format, const std::string& output) {
    const Signature sig = sig_args.resolve();
    const std::vector<Complex> grid = grid_args.build();

    std::string body;
    if (format == "csv") {
        body = "re_s,im_s,re_G,im_G,abs_G\n";
        for (const Complex s : grid) {
            const Complex g = regdet::detengine::g_closed(s, sig);
            body += textio::format_double(s.real()) + "," +
                    textio::format_double(s.imag()) + "," +
                    textio::format_double(g.real()) + "," +
                    textio::format_double(g.imag()) + "," +
                    textio::format_double(std::abs(g)) + "\n";
        }
    } else if (format == "json") {
        body = "{\"signature\": [" + std::to_string(sig.r1) + ", " +
               std::to_string(sig.r2) + "], \"points\": [";
        bool first = true;
        for (const Complex s : grid) {
            const Complex g = regdet::detengine::g_closed(s, sig);
            if (!first)
                body += ", ";
            first = false;
            body += "{\"re_s\": " + textio::format_double(s.real()) +
                    ", \"im_s\": " + textio::format_double(s.imag()) +
                    ", \"re_G\": " + textio::format_double(g.real()) +
                    ", \"im_G\": " + textio::format_double(g.imag()) +
                    ", \"abs_G\": " + textio::format_double(std::abs(g)) + "}";
        }
        body += "]}\n";
    } else {
        throw std::invalid_argument("unknown format \"" + format + "\" (csv, json)");
    }

    if (output == "-") {
        std::cout << body;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out)
            throw std::invalid_argument("cannot open output file \"" + output + "\"");
        out << body;
    }
    return 0;
}

int run_regprod(double step, const std::string& offset_text,
                const std::string& method, const EulerMaclaurinParams& em) {
    const Complex offset = textio::parse_complex(offset_text);
    const regdet::regprod::ProgressionSpec spec(step, offset);
    const auto emit = [&](const char* name, Complex v) {
        std::cout << "{\"method\": \"" << name
                  << "\", \"step\": " << textio::format_double(step)
                  << ", \"offset\": " << textio::format_complex_pair(offset)
                  << ", \"value\": " << textio::format_complex_pair(v) << "}\n";
    };
    if (method != "closed" && method != "numeric" && method != "both")
        throw std::invalid_argument("unknown method \"" + method +
                                    "\" (closed, numeric, both)");
    if (method == "closed" || method == "both")
        emit("closed", regdet::regprod::regprod_closed(spec));
    if (method == "numeric" || method == "both")
        emit("numeric", regdet::regprod::regprod_numeric(spec, em));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "regularized determinants of the Riemann operator on higher K-groups\n"
        "\n"
        "Complex literals use the grammar a+bi with optional parts: \"2\",\n"
        "\"3i\", \"1-0.5i\", \"-1.5e-3+2i\", \"i\".  Polynomials are comma-\n"
        "separated ascending integer coefficients: \"-2,0,0,1\" is x^3 - 2.\n"
        "Floats in machine output carry 17 significant digits; identical\n"
        "invocations produce byte-identical output.\n"
        "\n"
        "Environment: REGDET_EM_N / REGDET_EM_B override the Euler-Maclaurin\n"
        "cutoff (default 32) and correction-term count (default 12).",
        "regdet"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate G_K(s)");
    SignatureArgs eval_sig;
    eval_sig.add_to(eval);
    std::vector<std::string> eval_points;
    eval->add_option("--s", eval_points, "evaluation point(s), a+bi")->required();
    std::string eval_method = "closed";
    eval->add_option("--method", eval_method,
                     "closed | alt | regularized (default closed)");

    // verify
    auto* verify = app.add_subcommand("verify", "run identity suites");
    SignatureArgs verify_sig;
    verify_sig.add_to(verify);
    std::string verify_identity = "all";
    verify->add_option("--identity", verify_identity,
                       "periodicity | reflection | lerch | all (default all). "
                       "One identity emits a single JSON report object; "
                       "several emit a JSON array");
    double verify_tol = 0.0;
    auto* tol_opt = verify->add_option(
        "--tol", verify_tol,
        "override the per-identity default tolerances (periodicity/reflection "
        "1e-10, lerch 1e-8)");
    GridArgs verify_grid;
    verify_grid.add_to(verify);

    // signature
    auto* signature = app.add_subcommand(
        "signature", "signature (r1, r2) from a defining polynomial");
    std::string signature_poly;
    signature->add_option("--poly", signature_poly, "defining polynomial")
        ->required();
    std::string signature_format = "text";
    signature->add_option("--format", signature_format,
                          "text | json (default text)");

    // grid
    auto* grid = app.add_subcommand("grid", "evaluate g_closed over a lattice");
    SignatureArgs grid_sig;
    grid_sig.add_to(grid);
    GridArgs grid_args;
    grid_args.add_to(grid);
    std::string grid_format = "csv";
    grid->add_option("--format", grid_format, "csv | json (default csv)");
    std::string grid_output = "-";
    grid->add_option("--output", grid_output,
                     "output path, or - for stdout (default)");

    // regprod
    auto* rp = app.add_subcommand(
        "regprod", "regularized product over one arithmetic progression d*k+a");
    double rp_step = 0.0;
    rp->add_option("--step", rp_step, "progression step d > 0")->required();
    std::string rp_offset;
    rp->add_option("--offset", rp_offset, "progression offset a, a+bi")->required();
    std::string rp_method = "both";
    rp->add_option("--method", rp_method, "closed | numeric | both (default both)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const EulerMaclaurinParams em = params_from_env();
        if (eval->parsed())
            return run_eval(eval_sig, eval_points, eval_method, em);
        if (verify->parsed())
            return run_verify(verify_sig, verify_identity,
                              tol_opt->count() ? std::optional<double>(verify_tol)
                                               : std::nullopt,
                              verify_grid, em);
        if (signature->parsed())
            return run_signature(signature_poly, signature_format);
        if (grid->parsed())
            return run_grid(grid_sig, grid_args, grid_format, grid_output);
        if (rp->parsed())
            return run_regprod(rp_step, rp_offset, rp_method, em);
        return 2; // unreachable with require_subcommand(1)
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
