#ifndef STABLEPOLY_DYNAMICS_HPP_
#define STABLEPOLY_DYNAMICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "stablepoly/extension.hpp"

namespace stablepoly {

/// The quadratic f(x) = c x^2 + a x + b over GF(2^m). c is nonzero by
/// construction; specs with a = 0 or b = 0 are degenerate (reducible from
/// the first iterate on) but representable so sweeps stay total.
struct QuadSpec {
    FieldElem c, a, b;

    bool degenerate() const { return a.is_zero() || b.is_zero(); }
    const FieldCtx& ctx() const { return c.ctx(); }
};

/// Throws NotQuadratic when c = 0, ContextMismatch on mixed contexts.
QuadSpec make_quad_spec(FieldElem c, FieldElem a, FieldElem b);

Poly quad_poly(const QuadSpec& spec);

inline constexpr int kMaxIterationDepth = 20;

/// n-fold self-composition f^(n); degree 2^n. Throws IterationTooDeep for
/// n < 1 or n > 20.
Poly iterate(const QuadSpec& spec, int n);

/// Closed-form coefficients of ff(x) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0
/// for a monic spec: c3 = 0, c2 = a^2 + a, c1 = a^2, c0 = b^2 + a b + b.
struct FFCoeffs {
    FieldElem c3, c2, c1, c0;
};
FFCoeffs ff_coeffs(const QuadSpec& spec);  // NotMonic unless c = 1

struct OrbitReport {
    QuadSpec spec;
    int n_max;
    /// Largest n <= n_max with f, f^(2), ..., f^(n) all irreducible.
    int irreducible_prefix_length;
    /// Index of the first reducible iterate, or n_max when none was found.
    int halted_at;
};

/// Tests iterates in order, stopping at the first reducible one.
OrbitReport orbit_length(const QuadSpec& spec, int n_max);

/// Capelli route to the irreducibility of outer(inner(x)): builds the
/// quotient extension F_q[x]/(outer), and tests inner(x) - alpha there for
/// the residue root alpha. Contractually equal to
/// is_irreducible(poly_compose(outer, inner)). Throws ReducibleOuter when
/// outer is reducible, ConstantPolynomial when deg(inner) < 1.
bool capelli_check(const Poly& outer, const Poly& inner);

inline constexpr int kMaxSweepDegree = 8;

struct SweepReport {
    int m = 0;
    uint64_t modulus = 0;
    bool include_degenerate = false;
    uint64_t total_triples = 0;
    uint64_t count_f_irred = 0;
    uint64_t count_ff_irred = 0;
    uint64_t count_fff_irred = 0;
    /// Triples with fff irreducible; empty exactly when the theorem holds.
    std::vector<QuadSpec> counterexamples;
    int64_t elapsed_ms = 0;
};

/// Exhaustive verification over all (c, a, b) in (F_q*)^3 (plus the a = 0 /
/// b = 0 rows when include_degenerate): counts irreducible f (trace
/// criterion), ff and fff (generic test), and records any triple whose third
/// iterate is irreducible. threads = 0 picks the hardware count; the report
/// is identical for every thread count. Throws SweepTooLarge for m > 8.
SweepReport verify_theorem_sweep(const FieldCtx& ctx, bool include_degenerate = false,
                                 unsigned threads = 0);

struct ProofStep {
    std::string step;
    std::string claim;
    bool holds = false;
};

struct ProofTranscript {
    QuadSpec spec;
    std::vector<ProofStep> steps;

    bool all_hold() const {
        for (const ProofStep& s : steps)
            if (!s.holds) return false;
        return true;
    }
};

/// Replays the reducibility argument for fff step by step over the quotient
/// extension F_q[x]/(ff), for a monic spec with a, b nonzero and f, ff
/// irreducible:
///   (i)   Tr_{q^4|2}(b/a^2) = 0, since b/a^2 lies in F_q and [F_{q^4}:F_q] = 4;
///   (ii)  Tr_{q^4|q}(alpha) = 0 and equals the x^3 coefficient of ff;
///   (iii) Tr_{q^4|2}(alpha/a^2) = 0 by trace transitivity;
///   (iv)  Tr_{q^4|2}((b - alpha)/a^2) = 0, so f(x) - alpha is reducible over
///         F_{q^4} and fff is reducible over F_q.
/// Throws NotMonic for c != 1, PreconditionFailed when a or b is zero or
/// f or ff is reducible.
ProofTranscript proof_replay(const QuadSpec& spec);

std::string sweep_report_json(const SweepReport& report);
std::string sweep_report_csv(const SweepReport& report);
std::string proof_transcript_json(const ProofTranscript& transcript);

}  // namespace stablepoly

#endif  // STABLEPOLY_DYNAMICS_HPP_
