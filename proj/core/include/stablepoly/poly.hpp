#ifndef STABLEPOLY_POLY_HPP_
#define STABLEPOLY_POLY_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stablepoly/errors.hpp"
#include "stablepoly/gf2m.hpp"

namespace stablepoly {

/// Dense univariate polynomial over a characteristic-2 field context.
///
/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has an empty coefficient vector and degree -1. E is the
/// coefficient type: FieldElem for polynomials over GF(2^m), ExtElem for
/// polynomials over a quotient-ring extension.
template <class E>
class PolyT {
  public:
    using Elem = E;
    using Ctx = typename E::CtxType;

    explicit PolyT(const Ctx& ctx) : ctx_(&ctx) {}

    PolyT(const Ctx& ctx, std::vector<E> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
        for (const E& e : c_)
            if (&e.ctx() != ctx_) throw ContextMismatch("coefficient from foreign context");
        normalize();
    }

    static PolyT x(const Ctx& ctx) { return PolyT(ctx, {ctx.zero(), ctx.one()}); }
    static PolyT constant(const E& v) { return PolyT(v.ctx(), {v}); }

    const Ctx& ctx() const { return *ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const std::vector<E>& coeffs() const { return c_; }

    /// Coefficient of x^i, zero beyond the degree.
    E coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return ctx_->zero();
        return c_[static_cast<size_t>(i)];
    }

    E leading() const {
        if (c_.empty()) return ctx_->zero();
        return c_.back();
    }

    bool operator==(const PolyT& o) const {
        if (ctx_ != o.ctx_) throw ContextMismatch("comparing polynomials over different contexts");
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const PolyT& o) const { return !(*this == o); }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const Ctx* ctx_;
    std::vector<E> c_;
};

using Poly = PolyT<FieldElem>;

namespace detail {
template <class E>
void require_same_ctx(const PolyT<E>& a, const PolyT<E>& b) {
    if (&a.ctx() != &b.ctx()) throw ContextMismatch("polynomials over different contexts");
}
}  // namespace detail

template <class E>
PolyT<E> poly_add(const PolyT<E>& a, const PolyT<E>& b) {
    detail::require_same_ctx(a, b);
    const auto& ctx = a.ctx();
    const int n = std::max(a.degree(), b.degree());
    std::vector<E> out;
    out.reserve(static_cast<size_t>(n + 1));
    for (int i = 0; i <= n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
    return PolyT<E>(ctx, std::move(out));
}

// In characteristic 2 subtraction and addition coincide.
template <class E>
PolyT<E> poly_sub(const PolyT<E>& a, const PolyT<E>& b) {
    return poly_add(a, b);
}

template <class E>
PolyT<E> poly_mul(const PolyT<E>& a, const PolyT<E>& b) {
    detail::require_same_ctx(a, b);
    const auto& ctx = a.ctx();
    if (a.is_zero() || b.is_zero()) return PolyT<E>(ctx);
    std::vector<E> out(static_cast<size_t>(a.degree() + b.degree() + 1), ctx.zero());
    for (int i = 0; i <= a.degree(); ++i) {
        const E ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            out[static_cast<size_t>(i + j)] += ai * b.coeff(j);
    }
    return PolyT<E>(ctx, std::move(out));
}

template <class E>
PolyT<E> poly_scale(const PolyT<E>& a, const E& s) {
    std::vector<E> out;
    out.reserve(a.coeffs().size());
    for (const E& c : a.coeffs()) out.push_back(c * s);
    return PolyT<E>(a.ctx(), std::move(out));
}

template <class E>
std::pair<PolyT<E>, PolyT<E>> poly_divmod(const PolyT<E>& a, const PolyT<E>& b) {
    detail::require_same_ctx(a, b);
    const auto& ctx = a.ctx();
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const int db = b.degree();
    if (a.degree() < db) return {PolyT<E>(ctx), a};
    std::vector<E> rem(a.coeffs());
    std::vector<E> quot(static_cast<size_t>(a.degree() - db + 1), ctx.zero());
    const E lead_inv = ctx.one() / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const E f = rem[static_cast<size_t>(i)] * lead_inv;
        if (f.is_zero()) continue;
        quot[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] += f * b.coeff(j);
    }
    rem.erase(rem.begin() + db, rem.end());
    return {PolyT<E>(ctx, std::move(quot)), PolyT<E>(ctx, std::move(rem))};
}

template <class E>
PolyT<E> poly_mod(const PolyT<E>& a, const PolyT<E>& b) {
    return poly_divmod(a, b).second;
}

template <class E>
PolyT<E> poly_quot(const PolyT<E>& a, const PolyT<E>& b) {
    return poly_divmod(a, b).first;
}

template <class E>
PolyT<E> make_monic(const PolyT<E>& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return poly_scale(a, a.ctx().one() / a.leading());
}

/// Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
template <class E>
PolyT<E> poly_gcd(PolyT<E> a, PolyT<E> b) {
    detail::require_same_ctx(a, b);
    while (!b.is_zero()) {
        PolyT<E> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <class E>
struct Egcd {
    PolyT<E> g, u, v;  // u*a + v*b = g, g monic (or zero)
};

template <class E>
Egcd<E> poly_egcd(const PolyT<E>& a, const PolyT<E>& b) {
    detail::require_same_ctx(a, b);
    const auto& ctx = a.ctx();
    PolyT<E> r0 = a, r1 = b;
    PolyT<E> u0 = PolyT<E>::constant(ctx.one()), u1(ctx);
    PolyT<E> v0(ctx), v1 = PolyT<E>::constant(ctx.one());
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        PolyT<E> u2 = poly_add(u0, poly_mul(q, u1));
        PolyT<E> v2 = poly_add(v0, poly_mul(q, v1));
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    const E s = ctx.one() / r0.leading();
    return {poly_scale(r0, s), poly_scale(u0, s), poly_scale(v0, s)};
}

template <class E>
E poly_eval(const PolyT<E>& p, const E& at) {
    if (&p.ctx() != &at.ctx()) throw ContextMismatch("evaluation point from foreign context");
    E acc = p.ctx().zero();
    for (int i = p.degree(); i >= 0; --i) acc = acc * at + p.coeff(i);
    return acc;
}

/// outer(inner(x)), by Horner over the polynomial ring.
template <class E>
PolyT<E> poly_compose(const PolyT<E>& outer, const PolyT<E>& inner) {
    detail::require_same_ctx(outer, inner);
    const auto& ctx = outer.ctx();
    PolyT<E> acc(ctx);
    for (int i = outer.degree(); i >= 0; --i)
        acc = poly_add(poly_mul(acc, inner), PolyT<E>(ctx, {outer.coeff(i)}));
    return acc;
}

/// u^2 mod pm, using (sum a_i x^i)^2 = sum a_i^2 x^{2i} in characteristic 2.
template <class E>
PolyT<E> poly_square_mod(const PolyT<E>& u, const PolyT<E>& pm) {
    const auto& ctx = u.ctx();
    if (u.is_zero()) return u;
    std::vector<E> out(static_cast<size_t>(2 * u.degree() + 1), ctx.zero());
    for (int i = 0; i <= u.degree(); ++i) {
        const E c = u.coeff(i);
        out[static_cast<size_t>(2 * i)] = c * c;
    }
    return poly_mod(PolyT<E>(ctx, std::move(out)), pm);
}

/// Deterministic irreducibility test for p of degree d over a field with
/// 2^s elements: p is irreducible iff x^(Q^d) = x (mod p) and
/// gcd(x^(Q^(d/r)) - x mod p, p) = 1 for every prime r dividing d,
/// with Q = 2^s. The Q-powers are built from repeated squaring mod p.
template <class E>
bool is_irreducible(const PolyT<E>& p) {
    const int d = p.degree();
    if (d < 1) throw ConstantPolynomial("irreducibility is undefined for constant polynomials");
    if (d == 1) return true;
    const auto& ctx = p.ctx();
    const PolyT<E> pm = make_monic(p);
    const PolyT<E> xp = PolyT<E>::x(ctx);
    const int s = ctx.field_bits();

    std::vector<int> checkpoints;  // d/r for each prime r | d
    {
        int dd = d;
        for (int r = 2; r * r <= dd; ++r) {
            if (dd % r != 0) continue;
            checkpoints.push_back(d / r);
            while (dd % r == 0) dd /= r;
        }
        if (dd > 1) checkpoints.push_back(d / dd);
    }

    PolyT<E> cur = xp;
    for (int k = 1; k <= d; ++k) {
        for (int i = 0; i < s; ++i) cur = poly_square_mod(cur, pm);
        for (int cp : checkpoints) {
            if (cp != k) continue;
            PolyT<E> g = poly_gcd(poly_add(cur, xp), pm);  // cur - x in char 2
            if (g.degree() != 0) return false;
        }
    }
    return cur == xp;
}

/// Irreducibility of the quadratic c x^2 + a x + b over GF(2^m) by the trace
/// criterion: for a != 0 this is Tr_{q|2}(b c / a^2) = 1; for a = 0 the
/// polynomial is a perfect square, hence reducible. Throws NotQuadratic
/// when c = 0.
bool quad_irred_trace(FieldElem c, FieldElem a, FieldElem b);

/// Caret notation with hex coefficients, e.g. "1*x^4 + 1*x + 1".
std::string render_poly(const Poly& p);
Poly parse_poly(const FieldCtx& ctx, std::string_view text);

/// Compact form for GF(2) polynomials: coefficient bits packed into a hex
/// string, lowest degree = lowest bit. Requires a GF(2) context.
std::string render_poly_hex(const Poly& p);
Poly parse_poly_hex(const FieldCtx& ctx, std::string_view hex);

}  // namespace stablepoly

#endif  // STABLEPOLY_POLY_HPP_
