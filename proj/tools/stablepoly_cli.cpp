// Command-line front end: field inspection, irreducibility queries, orbit
// analysis, the exhaustive theorem sweep, step-by-step proof replay, and the
// function-field stability demonstration.
//
// Exit codes: 0 = all assertions hold, 1 = an assertion was falsified,
// 2 = usage or configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "stablepoly/dynamics.hpp"
#include "stablepoly/extension.hpp"
#include "stablepoly/funcfield.hpp"
#include "stablepoly/gf2m.hpp"
#include "stablepoly/poly.hpp"

namespace sp = stablepoly;
using nlohmann::json;

namespace {

struct CommonOpts {
    int m = 0;
    bool m_set = false;
    std::string modulus_hex;
    std::string format = "plain";
    std::string out_path;
};

uint64_t parse_hex_u64(const std::string& s) {
    size_t pos = 0;
    uint64_t v = std::stoull(s, &pos, 16);
    if (pos != s.size()) throw sp::ParseError("bad hex value: " + s);
    return v;
}

// Modulus resolution: --modulus flag, then the table file named by
// STABLEPOLY_MODULUS_TABLE, then the built-in default.
sp::FieldCtx open_field(const CommonOpts& opts) {
    if (!opts.m_set) throw sp::ParseError("--m is required for this command");
    if (!opts.modulus_hex.empty()) return sp::make_field(opts.m, parse_hex_u64(opts.modulus_hex));
    if (const char* table_path = std::getenv("STABLEPOLY_MODULUS_TABLE")) {
        auto table = sp::load_modulus_table(table_path);
        return sp::make_field(opts.m, sp::modulus_table_lookup(table, opts.m));
    }
    return sp::make_field(opts.m);
}

void emit(const CommonOpts& opts, const std::string& rendered) {
    if (opts.out_path.empty()) {
        std::cout << rendered << "\n";
        return;
    }
    std::ofstream out(opts.out_path);
    if (!out) throw sp::ParseError("cannot open output file: " + opts.out_path);
    out << rendered << "\n";
}

void require_format(const CommonOpts& opts, bool csv_allowed) {
    if (opts.format == "csv" && !csv_allowed)
        throw sp::ParseError("csv output is available for sweep reports only");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int cmd_field_info(const CommonOpts& opts) {
    require_format(opts, false);
    sp::FieldCtx ctx = open_field(opts);
    uint64_t trace_one = 0;
    if (ctx.degree() <= 16) {
        for (uint64_t v = 0; v < ctx.order(); ++v)
            trace_one += static_cast<uint64_t>(ctx.abs_trace(ctx.elem(v)));
    } else {
        trace_one = ctx.order() / 2;  // trace is a surjective GF(2)-linear form
    }
    if (opts.format == "json") {
        json j{{"m", ctx.degree()},
               {"q", ctx.order()},
               {"modulus_hex", ctx.modulus_hex()},
               {"trace_one_count", trace_one}};
        emit(opts, j.dump());
    } else {
        emit(opts, "m=" + std::to_string(ctx.degree()) + " q=" + std::to_string(ctx.order()) +
                       " modulus=0x" + ctx.modulus_hex() +
                       " trace_one_count=" + std::to_string(trace_one));
    }
    return 0;
}

int cmd_irred(const CommonOpts& opts, const std::string& poly_text, const std::string& poly_hex) {
    require_format(opts, false);
    sp::FieldCtx ctx = open_field(opts);
    if (poly_text.empty() == poly_hex.empty())
        throw sp::ParseError("irred needs exactly one of --poly or --hex");
    sp::Poly p = poly_text.empty() ? sp::parse_poly_hex(ctx, poly_hex) : sp::parse_poly(ctx, poly_text);
    const bool verdict = sp::is_irreducible(p);
    if (opts.format == "json") {
        json j{{"m", ctx.degree()},
               {"poly", sp::render_poly(p)},
               {"degree", p.degree()},
               {"irreducible", verdict}};
        emit(opts, j.dump());
    } else {
        emit(opts, "poly=" + sp::render_poly(p) + " degree=" + std::to_string(p.degree()) +
                       " irreducible=" + bool_str(verdict));
    }
    return 0;
}

int cmd_orbit(const CommonOpts& opts, const std::string& c_hex, const std::string& a_hex,
              const std::string& b_hex, int n_max) {
    require_format(opts, false);
    sp::FieldCtx ctx = open_field(opts);
    sp::QuadSpec spec =
        sp::make_quad_spec(ctx.from_hex(c_hex), ctx.from_hex(a_hex), ctx.from_hex(b_hex));
    sp::OrbitReport report = sp::orbit_length(spec, n_max);
    if (opts.format == "json") {
        json j{{"m", ctx.degree()},
               {"c", spec.c.to_hex()},
               {"a", spec.a.to_hex()},
               {"b", spec.b.to_hex()},
               {"n_max", report.n_max},
               {"irreducible_prefix_length", report.irreducible_prefix_length},
               {"halted_at", report.halted_at},
               {"degenerate", spec.degenerate()}};
        emit(opts, j.dump());
    } else {
        emit(opts, "f=" + sp::render_poly(sp::quad_poly(spec)) +
                       " prefix=" + std::to_string(report.irreducible_prefix_length) +
                       " halted_at=" + std::to_string(report.halted_at) +
                       " degenerate=" + bool_str(spec.degenerate()));
    }
    return 0;
}

int cmd_sweep(const CommonOpts& opts, bool include_degenerate, unsigned threads) {
    sp::FieldCtx ctx = open_field(opts);
    sp::SweepReport report = sp::verify_theorem_sweep(ctx, include_degenerate, threads);
    if (opts.format == "json") {
        emit(opts, sp::sweep_report_json(report));
    } else if (opts.format == "csv") {
        emit(opts, sp::sweep_report_csv(report));
    } else {
        emit(opts, "m=" + std::to_string(report.m) + " total=" + std::to_string(report.total_triples) +
                       " f_irred=" + std::to_string(report.count_f_irred) +
                       " ff_irred=" + std::to_string(report.count_ff_irred) +
                       " fff_irred=" + std::to_string(report.count_fff_irred) +
                       " counterexamples=" + std::to_string(report.counterexamples.size()) +
                       " elapsed_ms=" + std::to_string(report.elapsed_ms));
    }
    return report.counterexamples.empty() ? 0 : 1;
}

int cmd_proof_replay(const CommonOpts& opts, const std::string& a_hex, const std::string& b_hex) {
    require_format(opts, false);
    sp::FieldCtx ctx = open_field(opts);
    sp::QuadSpec spec = sp::make_quad_spec(ctx.one(), ctx.from_hex(a_hex), ctx.from_hex(b_hex));
    sp::ProofTranscript transcript = sp::proof_replay(spec);
    if (opts.format == "json") {
        emit(opts, sp::proof_transcript_json(transcript));
    } else {
        std::string lines;
        for (const sp::ProofStep& s : transcript.steps)
            lines += "step " + s.step + ": " + s.claim + " -> " + (s.holds ? "holds" : "FAILS") + "\n";
        lines += transcript.all_hold() ? "conclusion: fff is reducible over F_q"
                                       : "conclusion: transcript FAILED";
        emit(opts, lines);
    }
    return transcript.all_hold() ? 0 : 1;
}

int cmd_eisenstein(const CommonOpts& opts, int n_max) {
    require_format(opts, false);
    sp::StabilityTranscript transcript = sp::verify_stable_example(n_max);
    bool all = true;
    for (const sp::StabilityEntry& e : transcript) all = all && e.holds();
    if (opts.format == "json") {
        emit(opts, sp::stability_transcript_json(transcript));
    } else {
        std::string lines;
        for (const sp::StabilityEntry& e : transcript)
            lines += "n=" + std::to_string(e.n) + " closed_form=" + bool_str(e.matches_closed_form) +
                     " eisenstein=" + bool_str(e.eisenstein_holds) +
                     " binomial=" + bool_str(e.binomial_shape) +
                     " recurrence=" + bool_str(e.recurrence_holds) +
                     " primitive=" + bool_str(e.primitive) + "\n";
        lines += all ? "x^2 + t is stable up to n=" + std::to_string(n_max)
                     : "stability transcript FAILED";
        emit(opts, lines);
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic polynomial stability over binary fields: exhaustive verification "
                 "that third iterates are reducible over GF(2^m), and the stable example "
                 "x^2 + t over F_2(t)."};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts opts;
    app.add_option("--m", opts.m, "Extension degree of GF(2^m)")->each([&](const std::string&) {
        opts.m_set = true;
    });
    app.add_option("--modulus", opts.modulus_hex, "Field modulus as hex bits (default: built-in table)");
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--out", opts.out_path, "Write the report to a file instead of stdout");

    auto* info = app.add_subcommand("field-info", "Show q, modulus and trace statistics");

    std::string poly_text, poly_hex;
    auto* irred = app.add_subcommand("irred", "Test a polynomial for irreducibility");
    irred->add_option("--poly", poly_text, "Polynomial in caret notation, e.g. '1*x^4 + 1*x + 1'");
    irred->add_option("--hex", poly_hex, "GF(2) polynomial as packed hex bits, lowest degree = lowest bit");

    std::string c_hex = "1", a_hex, b_hex;
    int orbit_n_max = 8;
    auto* orbit = app.add_subcommand("orbit", "Length of the irreducible iterate prefix of f");
    orbit->add_option("--c", c_hex, "Leading coefficient (hex coordinates)");
    orbit->add_option("--a", a_hex, "Linear coefficient (hex)")->required();
    orbit->add_option("--b", b_hex, "Constant coefficient (hex)")->required();
    orbit->add_option("--n-max", orbit_n_max, "Iterate depth limit");

    bool include_degenerate = false;
    unsigned threads = 0;
    auto* sweep = app.add_subcommand("sweep", "Exhaustively verify that no quadratic has an "
                                              "irreducible third iterate");
    sweep->add_flag("--include-degenerate", include_degenerate,
                    "Also sweep the a=0 and b=0 rows (reducible from the start)");
    app.add_option("--threads", threads, "Worker count for the sweep (0 = hardware)");

    std::string pr_a, pr_b;
    auto* replay = app.add_subcommand("proof-replay", "Replay the reducibility argument for fff "
                                                      "over F_q[x]/(ff), step by step");
    replay->add_option("--a", pr_a, "Linear coefficient (hex); c is fixed to 1")->required();
    replay->add_option("--b", pr_b, "Constant coefficient (hex)")->required();

    int eis_n_max = 16;
    auto* eis = app.add_subcommand("eisenstein", "Verify the stable example x^2 + t over F_2(t)");
    eis->add_option("--n-max", eis_n_max, "Verify iterates up to this depth");

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_field_info(opts);
        if (irred->parsed()) return cmd_irred(opts, poly_text, poly_hex);
        if (orbit->parsed()) return cmd_orbit(opts, c_hex, a_hex, b_hex, orbit_n_max);
        if (sweep->parsed()) return cmd_sweep(opts, include_degenerate, threads);
        if (replay->parsed()) return cmd_proof_replay(opts, pr_a, pr_b);
        if (eis->parsed()) return cmd_eisenstein(opts, eis_n_max);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const sp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
