#include "stablepoly/dynamics.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include <json.hpp>

namespace stablepoly {

QuadSpec make_quad_spec(FieldElem c, FieldElem a, FieldElem b) {
    if (&a.ctx() != &c.ctx() || &b.ctx() != &c.ctx()) throw ContextMismatch();
    if (c.is_zero()) throw NotQuadratic("quadratic spec requires c != 0");
    return QuadSpec{c, a, b};
}

Poly quad_poly(const QuadSpec& spec) {
    return Poly(spec.ctx(), {spec.b, spec.a, spec.c});
}

namespace {

// Unreduced square: (sum a_i x^i)^2 = sum a_i^2 x^{2i} in characteristic 2.
Poly poly_square(const Poly& p) {
    const FieldCtx& ctx = p.ctx();
    if (p.is_zero()) return p;
    std::vector<FieldElem> out(static_cast<size_t>(2 * p.degree() + 1), ctx.zero());
    for (int i = 0; i <= p.degree(); ++i) {
        FieldElem c = p.coeff(i);
        out[static_cast<size_t>(2 * i)] = c * c;
    }
    return Poly(ctx, std::move(out));
}

// f(prev(x)) = c prev^2 + a prev + b; same value as poly_compose(f, prev).
Poly compose_quad(const QuadSpec& spec, const Poly& prev) {
    Poly acc = poly_scale(poly_square(prev), spec.c);
    acc = poly_add(acc, poly_scale(prev, spec.a));
    return poly_add(acc, Poly(spec.ctx(), {spec.b}));
}

}  // namespace

Poly iterate(const QuadSpec& spec, int n) {
    if (n < 1 || n > kMaxIterationDepth)
        throw IterationTooDeep("iteration depth must be in 1.." + std::to_string(kMaxIterationDepth) +
                               ", got " + std::to_string(n));
    Poly cur = quad_poly(spec);
    for (int i = 2; i <= n; ++i) cur = compose_quad(spec, cur);
    return cur;
}

FFCoeffs ff_coeffs(const QuadSpec& spec) {
    if (!spec.c.is_one()) throw NotMonic("closed-form ff coefficients require a monic spec");
    const FieldCtx& ctx = spec.ctx();
    const FieldElem a = spec.a, b = spec.b;
    return FFCoeffs{ctx.zero(), a * a + a, a * a, b * b + a * b + b};
}

OrbitReport orbit_length(const QuadSpec& spec, int n_max) {
    if (n_max < 1) throw Error("n_max must be >= 1");
    OrbitReport report{spec, n_max, 0, n_max};
    Poly cur(spec.ctx());
    for (int n = 1; n <= n_max; ++n) {
        cur = n == 1 ? quad_poly(spec) : compose_quad(spec, cur);
        if (!is_irreducible(cur)) {
            report.halted_at = n;
            return report;
        }
        report.irreducible_prefix_length = n;
    }
    return report;
}

bool capelli_check(const Poly& outer, const Poly& inner) {
    detail::require_same_ctx(outer, inner);
    if (inner.degree() < 1) throw ConstantPolynomial("capelli check requires deg(inner) >= 1");
    if (outer.degree() < 1) throw ConstantPolynomial("capelli check requires deg(outer) >= 1");
    const FieldCtx& base = outer.ctx();
    if (!is_irreducible(outer)) throw ReducibleOuter("capelli check requires an irreducible outer");
    ExtCtx ext(base, outer);
    // inner(x) - alpha over the extension; minus is plus in characteristic 2.
    std::vector<ExtElem> cs;
    cs.reserve(static_cast<size_t>(inner.degree()) + 1);
    for (int i = 0; i <= inner.degree(); ++i) cs.push_back(ext.embed(inner.coeff(i)));
    cs[0] += ext.alpha();
    return is_irreducible(ExtPoly(ext, std::move(cs)));
}

namespace {

struct TripleCounts {
    uint64_t f = 0, ff = 0, fff = 0;
    std::vector<std::array<uint32_t, 3>> counterexamples;
};

// One (c, a) row of the sweep: loops over b and classifies each triple.
void sweep_row(const FieldCtx& ctx, uint32_t c_coord, uint32_t a_coord, bool include_degenerate,
               TripleCounts& acc) {
    const FieldElem c = ctx.elem(c_coord);
    const FieldElem a = ctx.elem(a_coord);
    const uint32_t b_start = include_degenerate ? 0 : 1;
    for (uint32_t b_coord = b_start; b_coord < ctx.order(); ++b_coord) {
        const FieldElem b = ctx.elem(b_coord);
        if (!quad_irred_trace(c, a, b)) continue;
        ++acc.f;
        const QuadSpec spec{c, a, b};
        const Poly ff = iterate(spec, 2);
        if (!is_irreducible(ff)) continue;
        ++acc.ff;
        const Poly fff = compose_quad(spec, ff);
        if (!is_irreducible(fff)) continue;
        ++acc.fff;
        acc.counterexamples.push_back({c_coord, a_coord, b_coord});
    }
}

}  // namespace

SweepReport verify_theorem_sweep(const FieldCtx& ctx, bool include_degenerate, unsigned threads) {
    if (ctx.degree() > kMaxSweepDegree)
        throw SweepTooLarge("exhaustive sweep is guarded to m <= " + std::to_string(kMaxSweepDegree) +
                            ", got m = " + std::to_string(ctx.degree()));
    const auto t0 = std::chrono::steady_clock::now();
    const uint64_t q = ctx.order();
    const uint64_t a_count = include_degenerate ? q : q - 1;
    const uint64_t rows = (q - 1) * a_count;  // one row per (c, a)

    unsigned n_threads = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = static_cast<unsigned>(std::min<uint64_t>(n_threads, rows));

    std::vector<TripleCounts> partials(n_threads);
    const auto worker = [&](unsigned w) {
        for (uint64_t row = w; row < rows; row += n_threads) {
            const uint32_t c_coord = static_cast<uint32_t>(row / a_count) + 1;
            const uint64_t a_idx = row % a_count;
            const uint32_t a_coord = static_cast<uint32_t>(include_degenerate ? a_idx : a_idx + 1);
            sweep_row(ctx, c_coord, a_coord, include_degenerate, partials[w]);
        }
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned w = 0; w < n_threads; ++w) pool.emplace_back(worker, w);
        for (std::thread& t : pool) t.join();
    }

    SweepReport report;
    report.m = ctx.degree();
    report.modulus = ctx.modulus();
    report.include_degenerate = include_degenerate;
    report.total_triples = (q - 1) * a_count * (include_degenerate ? q : q - 1);
    std::vector<std::array<uint32_t, 3>> bad;
    for (const TripleCounts& part : partials) {
        report.count_f_irred += part.f;
        report.count_ff_irred += part.ff;
        report.count_fff_irred += part.fff;
        bad.insert(bad.end(), part.counterexamples.begin(), part.counterexamples.end());
    }
    std::sort(bad.begin(), bad.end());
    for (const auto& [cc, aa, bb] : bad)
        report.counterexamples.push_back(QuadSpec{ctx.elem(cc), ctx.elem(aa), ctx.elem(bb)});
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

ProofTranscript proof_replay(const QuadSpec& spec) {
    if (!spec.c.is_one()) throw NotMonic("proof replay follows the written argument, which is monic");
    if (spec.a.is_zero() || spec.b.is_zero())
        throw PreconditionFailed("proof replay requires a, b nonzero");
    if (!quad_irred_trace(spec.c, spec.a, spec.b))
        throw PreconditionFailed("proof replay requires f irreducible over F_q");
    const Poly ff = iterate(spec, 2);
    if (!is_irreducible(ff)) throw PreconditionFailed("proof replay requires ff irreducible over F_q");

    const FieldCtx& base = spec.ctx();
    ExtCtx ext(base, ff);  // F_{q^4} with alpha the residue root of ff
    const FieldElem a2 = spec.a * spec.a;
    const ExtElem alpha = ext.alpha();

    ProofTranscript transcript{spec, {}};

    // (i) b/a^2 lies in F_q, and Tr_{q^4|2} = 4 Tr_{q|2} on F_q = 0 in char 2.
    const int tr_b = ext.abs_trace(ext.embed(spec.b / a2));
    transcript.steps.push_back({"i", "Tr_{q^4|2}(b/a^2) = 0", tr_b == 0});

    // (ii) The relative trace of alpha is the x^3 coefficient of ff, which is 0.
    const FieldElem rel = ext.rel_trace(alpha);
    const FFCoeffs cs = ff_coeffs(spec);
    const bool step2 = rel.is_zero() && rel == cs.c3 && cs.c3 == ff.coeff(3);
    transcript.steps.push_back({"ii", "Tr_{q^4|q}(alpha) = c3 = 0", step2});

    // (iii) Transitivity: Tr_{q^4|2}(alpha/a^2) = Tr_{q|2}(Tr_{q^4|q}(alpha)/a^2) = 0.
    const int tr_alpha = ext.abs_trace(alpha / ext.embed(a2));
    transcript.steps.push_back({"iii", "Tr_{q^4|2}(alpha/a^2) = 0", tr_alpha == 0});

    // (iv) The trace criterion over F_{q^4} then makes f(x) - alpha reducible,
    // and with it fff over F_q.
    const int tr_total = ext.abs_trace((ext.embed(spec.b) + alpha) / ext.embed(a2));
    ExtPoly h(ext, {ext.embed(spec.b) + alpha, ext.embed(spec.a), ext.embed(spec.c)});
    const bool h_reducible = !is_irreducible(h);
    const bool fff_reducible = !is_irreducible(iterate(spec, 3));
    transcript.steps.push_back(
        {"iv", "Tr_{q^4|2}((b - alpha)/a^2) = 0, so f(x) - alpha and fff are reducible",
         tr_total == 0 && h_reducible && fff_reducible});
    return transcript;
}

std::string sweep_report_json(const SweepReport& report) {
    nlohmann::json j;
    j["m"] = report.m;
    j["modulus_hex"] = [&] {
        std::string s;
        uint64_t v = report.modulus;
        while (v != 0) {
            s.insert(s.begin(), "0123456789abcdef"[v & 0xf]);
            v >>= 4;
        }
        return s.empty() ? "0" : s;
    }();
    j["total"] = report.total_triples;
    j["f_irred"] = report.count_f_irred;
    j["ff_irred"] = report.count_ff_irred;
    j["fff_irred"] = report.count_fff_irred;
    j["counterexamples"] = nlohmann::json::array();
    for (const QuadSpec& spec : report.counterexamples)
        j["counterexamples"].push_back(
            {{"c", spec.c.to_hex()}, {"a", spec.a.to_hex()}, {"b", spec.b.to_hex()}});
    j["elapsed_ms"] = report.elapsed_ms;
    return j.dump();
}

std::string sweep_report_csv(const SweepReport& report) {
    std::string out = "m,modulus_hex,total,f_irred,ff_irred,fff_irred,elapsed_ms\n";
    nlohmann::json j = nlohmann::json::parse(sweep_report_json(report));
    out += std::to_string(report.m) + "," + j["modulus_hex"].get<std::string>() + "," +
           std::to_string(report.total_triples) + "," + std::to_string(report.count_f_irred) + "," +
           std::to_string(report.count_ff_irred) + "," + std::to_string(report.count_fff_irred) + "," +
           std::to_string(report.elapsed_ms) + "\n";
    return out;
}

std::string proof_transcript_json(const ProofTranscript& transcript) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ProofStep& s : transcript.steps)
        arr.push_back({{"step", s.step}, {"claim", s.claim}, {"holds", s.holds}});
    return arr.dump();
}

}  // namespace stablepoly
