#include <CLI11.hpp>

#include <array>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geoforge/dsl/eval.hpp"
#include "geoforge/dsl/parser.hpp"
#include "geoforge/identities.hpp"
#include "geoforge/naka.hpp"
#include "geoforge/report_io.hpp"
#include "geoforge/sampling.hpp"
#include "geoforge/scene.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertFailed = 1;
constexpr int kExitScriptError = 2;
constexpr int kExitGeometric = 3;
constexpr int kExitUsage = 4;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class S>
geoforge::Point<S> parse_point_arg(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw geoforge::ArithmeticError("expected \"x,y\", got \"" + text + "\"");
    using T = geoforge::ScalarTraits<S>;
    const std::string_view view(text);
    return {T::parse(view.substr(0, comma)), T::parse(view.substr(comma + 1))};
}

/// The triangle may arrive as one quoted string "x1,y1 x2,y2 x3,y3" or as up
/// to three separate arguments; splitting on whitespace handles both.
std::vector<std::string> split_vertices(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (const auto& arg : args) {
        std::istringstream words(arg);
        std::string word;
        while (words >> word) out.push_back(word);
    }
    return out;
}

template <class S>
int do_naka(const std::vector<std::string>& args, bool json, const S& tol) {
    std::array<geoforge::Point<S>, 3> p;
    try {
        const std::vector<std::string> vertices = split_vertices(args);
        if (vertices.size() != 3)
            throw geoforge::ArithmeticError("expected three vertices, got " +
                                            std::to_string(vertices.size()));
        for (int i = 0; i < 3; ++i) p[i] = parse_point_arg<S>(vertices[i]);
    } catch (const geoforge::ArithmeticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const geoforge::Triangle<S> tri(p[0], p[1], p[2], tol);
        const geoforge::NakaReport<S> report = geoforge::compute_report(tri, tol);
        if (json)
            std::cout << geoforge::report_json(report).dump(2) << "\n";
        else
            std::cout << geoforge::report_text(report);
    } catch (const geoforge::DegenerateInputError&) {
        std::cerr << "error: collinear input\n";
        return kExitGeometric;
    }
    return kExitOk;
}

template <class S>
int do_run(const std::string& path, const S& tol) {
    const std::optional<std::string> source = read_file(path);
    if (!source) {
        std::cerr << "error: cannot read \"" << path << "\"\n";
        return kExitUsage;
    }
    const geoforge::dsl::Script script = geoforge::dsl::parse_text(*source);
    const geoforge::dsl::EvalResult<S> result = geoforge::dsl::evaluate<S>(script, tol);
    bool all_pass = true;
    for (const auto& outcome : result.assertions) {
        std::cout << geoforge::dsl::outcome_line(outcome) << "\n";
        all_pass = all_pass && outcome.passed;
    }
    return all_pass ? kExitOk : kExitAssertFailed;
}

struct SuiteCounts {
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped_verdicts = 0;
};

/// One triangle drawn per iteration; every construction identity the kernel
/// promises is rechecked with exact arithmetic.
bool verify_triangle_iteration(geoforge::SampleRng& rng, std::uint64_t index,
                               SuiteCounts& counts) {
    using geoforge::Rational;
    const Rational zero{};
    const geoforge::Triangle<Rational> tri = geoforge::sample_triangle(rng);
    std::vector<std::string> complaints;

    const geoforge::CircumFrame<Rational> frame = geoforge::circumcenter_frame(tri);
    const geoforge::NakaPoints<Rational> def = geoforge::naka_def_closed_form(frame);
    const geoforge::NakaPoints<Rational> def_c = geoforge::naka_def_constructive(tri);
    if (!(def.d == def_c.d && def.e == def_c.e && def.f == def_c.f))
        complaints.push_back("constructive and closed-form DEF disagree");

    const geoforge::ExtendedPoints<Rational> ext = geoforge::extended_points_closed_form(frame);
    const geoforge::ExtendedPoints<Rational> ext_c = geoforge::extended_points_constructive(tri);
    if (!(ext.d_prime == ext_c.d_prime && ext.e_prime == ext_c.e_prime &&
          ext.f_prime == ext_c.f_prime))
        complaints.push_back("constructive and closed-form D'E'F' disagree");

    const Rational ratio_def =
        geoforge::similarity_ratio_sq_complex(frame, geoforge::RatioKind::def);
    const Rational ratio_ext =
        geoforge::similarity_ratio_sq_complex(frame, geoforge::RatioKind::ext);
    const geoforge::Triangle<Rational> def_tri(def.d, def.e, def.f);
    const geoforge::Triangle<Rational> ext_tri(ext.d_prime, ext.e_prime, ext.f_prime);
    const std::optional<Rational> k_def = geoforge::similar_sss(tri, def_tri);
    const std::optional<Rational> k_ext = geoforge::similar_sss(tri, ext_tri);
    if (!k_def || *k_def != ratio_def)
        complaints.push_back("DEF similarity ratio mismatch");
    if (!k_ext || *k_ext != ratio_ext)
        complaints.push_back("D'E'F' similarity ratio mismatch");
    if (ratio_ext != geoforge::ScalarTraits<Rational>::from_int(1) + ratio_def)
        complaints.push_back("extended ratio is not 1 + base ratio");
    if (!geoforge::check_ratio_consistency(tri))
        complaints.push_back("metric and complex ratio formulas disagree");

    const geoforge::Line<Rational> ab = geoforge::line_through(tri.p1(), tri.p2());
    if (!(ext.d_prime == geoforge::reflect_across(def.d, ab)))
        complaints.push_back("D' is not the reflection of D across AB");

    const std::array<Rational, 3> areas = geoforge::area_additivity(tri);
    if (areas[0] + areas[1] != areas[2])
        complaints.push_back("area additivity fails");

    const geoforge::AuxPoints<Rational> aux = geoforge::aux_points(tri, def);
    const std::array<geoforge::Verdict, 6> verdicts =
        geoforge::proposition_suite(tri, def, aux, zero);
    for (const geoforge::Verdict v : verdicts) {
        if (v == geoforge::Verdict::fail) {
            complaints.push_back("a proposition verdict came back false");
            break;
        }
    }
    for (const geoforge::Verdict v : verdicts)
        if (v == geoforge::Verdict::not_evaluable) ++counts.skipped_verdicts;

    if (complaints.empty()) {
        ++counts.passed;
        return true;
    }
    ++counts.failed;
    for (const auto& complaint : complaints)
        std::cerr << "iteration " << index << ": " << complaint << "\n";
    return false;
}

/// One unimodular triple drawn per iteration; the norm identity and the
/// permutation behaviour of N/Pi are rechecked exactly.
bool verify_identity_iteration(geoforge::SampleRng& rng, std::uint64_t index,
                               SuiteCounts& counts) {
    const geoforge::UnimodularTriple triple = geoforge::sample_unimodular_triple(rng);
    std::vector<std::string> complaints;

    if (!geoforge::check_norm_identity(triple))
        complaints.push_back("norm identity fails");
    if (geoforge::sigma(triple).is_zero())
        complaints.push_back("sigma vanished on a non-equilateral triple");

    const geoforge::PermutationReport perm = geoforge::permutation_behavior(triple);
    if (!perm.cyclic_invariant)
        complaints.push_back("N/Pi changed under a cyclic shift");
    if (!perm.transpositions_agree)
        complaints.push_back("the three transpositions disagree");
    if (!perm.norm_sq_invariant)
        complaints.push_back("|N/Pi|^2 changed under a transposition");
    if (!(perm.odd_value == perm.even_value.conj()))
        complaints.push_back("transposed N/Pi is not the conjugate");

    if (complaints.empty()) {
        ++counts.passed;
        return true;
    }
    ++counts.failed;
    for (const auto& complaint : complaints)
        std::cerr << "iteration " << index << ": " << complaint << "\n";
    return false;
}

int do_verify(std::uint64_t iterations, std::uint64_t seed) {
    geoforge::SampleRng rng(seed);
    SuiteCounts triangle_counts, identity_counts;
    std::uint64_t iterations_passed = 0;
    for (std::uint64_t i = 0; i < iterations; ++i) {
        const bool tri_ok = verify_triangle_iteration(rng, i, triangle_counts);
        const bool id_ok = verify_identity_iteration(rng, i, identity_counts);
        if (tri_ok && id_ok) ++iterations_passed;
    }
    std::cout << "backend exact, seed " << seed << ", iterations " << iterations << "\n";
    std::cout << "triangle suite: " << triangle_counts.passed << " passed, "
              << triangle_counts.failed << " failed, " << triangle_counts.skipped_verdicts
              << " skipped verdicts\n";
    std::cout << "identity suite: " << identity_counts.passed << " passed, "
              << identity_counts.failed << " failed\n";
    std::cout << iterations_passed << "/" << iterations << " passed\n";
    return iterations_passed == iterations ? kExitOk : kExitAssertFailed;
}

std::string output_name(const std::string& base, std::size_t index, std::size_t count) {
    if (count == 1) return base;
    const auto dot = base.rfind('.');
    const auto slash = base.find_last_of('/');
    const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
    const std::string suffix = "-" + std::to_string(index + 1);
    return has_ext ? base.substr(0, dot) + suffix + base.substr(dot) : base + suffix;
}

template <class S>
int do_render(const std::string& path, const std::string& out, const S& tol) {
    const std::optional<std::string> source = read_file(path);
    if (!source) {
        std::cerr << "error: cannot read \"" << path << "\"\n";
        return kExitUsage;
    }
    const geoforge::dsl::Script script = geoforge::dsl::parse_text(*source);
    std::vector<const geoforge::dsl::RenderDirective*> directives;
    for (const auto& stmt : script.statements)
        if (const auto* directive = std::get_if<geoforge::dsl::RenderDirective>(&stmt))
            directives.push_back(directive);
    if (directives.empty()) {
        std::cerr << "error: script has no render directive\n";
        return kExitUsage;
    }

    const geoforge::dsl::EvalResult<S> result = geoforge::dsl::evaluate<S>(script, tol);

    geoforge::StyleConfig style = geoforge::StyleConfig::defaults();
    if (const char* style_path = std::getenv("GEOFORGE_STYLE")) {
        try {
            style = geoforge::StyleConfig::load_file(style_path);
        } catch (const geoforge::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    for (std::size_t i = 0; i < directives.size(); ++i) {
        std::string svg;
        try {
            const geoforge::Scene scene = geoforge::build_scene<S>(*directives[i], result.env);
            svg = geoforge::render_svg(scene, style);
        } catch (const geoforge::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        const std::string name = output_name(out, i, directives.size());
        errno = 0;
        std::ofstream file(name, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open \"" << name << "\": " << std::strerror(errno) << "\n";
            return kExitUsage;
        }
        file << svg;
        file.flush();
        if (!file) {
            std::cerr << "error: write to \"" << name << "\" failed: " << std::strerror(errno)
                      << "\n";
            return kExitUsage;
        }
        std::cout << "wrote " << name << "\n";
    }
    return kExitOk;
}

struct BackendOpts {
    std::string backend = "exact";
    double tol = 1e-9;
};

void add_backend_opts(CLI::App* cmd, BackendOpts& opts) {
    cmd->add_option("--backend", opts.backend, "arithmetic backend")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    cmd->add_option("--tol", opts.tol, "relative tolerance, float backend only")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry toolkit for Naka triangle constructions"};
    app.require_subcommand(1);

    CLI::App* naka = app.add_subcommand("naka", "full construction report for one triangle");
    std::vector<std::string> naka_args;
    naka->add_option("triangle", naka_args, "vertices, e.g. \"1,0 0,1 -1,0\" (quote the whole "
                                            "triangle so negative coordinates survive)")
        ->required()
        ->expected(1, 3);
    bool naka_json = false;
    naka->add_flag("--json", naka_json, "emit the report as a single JSON document");
    BackendOpts naka_opts;
    add_backend_opts(naka, naka_opts);

    CLI::App* run = app.add_subcommand("run", "evaluate a .geo script's assertions");
    std::string run_path;
    run->add_option("script", run_path, "path to a .geo construction script")->required();
    BackendOpts run_opts;
    add_backend_opts(run, run_opts);

    CLI::App* verify = app.add_subcommand("verify", "fuzz the construction and identity suites");
    std::uint64_t iterations = 1000;
    verify->add_option("--iterations", iterations, "number of random inputs per suite")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()))
        ->capture_default_str();
    std::uint64_t seed = 42;
    verify->add_option("--seed", seed, "sample generator seed")->capture_default_str();

    CLI::App* render = app.add_subcommand("render", "render a script's render directives to SVG");
    std::string render_path;
    render->add_option("script", render_path, "path to a .geo construction script")->required();
    std::string render_out = "out.svg";
    render->add_option("-o,--output", render_out, "output SVG path; multiple directives get "
                                                  "-1, -2, ... before the extension")
        ->capture_default_str();
    BackendOpts render_opts;
    add_backend_opts(render, render_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*naka) {
            return naka_opts.backend == "float"
                       ? do_naka<double>(naka_args, naka_json, naka_opts.tol)
                       : do_naka<geoforge::Rational>(naka_args, naka_json, geoforge::Rational{});
        }
        if (*run) {
            return run_opts.backend == "float"
                       ? do_run<double>(run_path, run_opts.tol)
                       : do_run<geoforge::Rational>(run_path, geoforge::Rational{});
        }
        if (*verify) return do_verify(iterations, seed);
        if (*render) {
            return render_opts.backend == "float"
                       ? do_render<double>(render_path, render_out, render_opts.tol)
                       : do_render<geoforge::Rational>(render_path, render_out,
                                                       geoforge::Rational{});
        }
    } catch (const geoforge::dsl::ScriptError& e) {
        std::cerr << e.what() << "\n";
        return kExitScriptError;
    } catch (const geoforge::dsl::EvalError& e) {
        std::cerr << e.what() << "\n";
        return kExitGeometric;
    } catch (const geoforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGeometric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
