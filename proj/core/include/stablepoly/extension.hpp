#ifndef STABLEPOLY_EXTENSION_HPP_
#define STABLEPOLY_EXTENSION_HPP_

#include <cstdint>
#include <string>
#include <utility>

#include "stablepoly/poly.hpp"

namespace stablepoly {

class ExtCtx;

/// Element of GF(q^n) = F_q[x]/(h): the residue class of a polynomial of
/// degree < n over the base field.
class ExtElem {
  public:
    using CtxType = ExtCtx;

    const Poly& rep() const { return rep_; }
    const ExtCtx& ctx() const { return *ctx_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.degree() == 0 && rep_.leading().is_one(); }

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const { return *this + o; }  // char 2
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator/(const ExtElem& o) const;
    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }
    bool operator==(const ExtElem& o) const;
    bool operator!=(const ExtElem& o) const { return !(*this == o); }

  private:
    friend class ExtCtx;
    ExtElem(Poly rep, const ExtCtx* ctx) : rep_(std::move(rep)), ctx_(ctx) {}

    Poly rep_;
    const ExtCtx* ctx_;
};

/// The extension GF(q^n) realized as the quotient ring F_q[x]/(h) for an
/// irreducible h of degree n over the base. The residue class of x is the
/// distinguished root alpha of h. Immutable after construction.
class ExtCtx {
  public:
    /// Throws ReducibleModulus when h is reducible; DegreeMismatch when h is
    /// constant. A non-monic h is normalized (same ideal, same quotient).
    ExtCtx(const FieldCtx& base, const Poly& h);

    ExtCtx(const ExtCtx&) = delete;
    ExtCtx& operator=(const ExtCtx&) = delete;
    ExtCtx(ExtCtx&&) = delete;
    ExtCtx& operator=(ExtCtx&&) = delete;

    const FieldCtx& base() const { return base_; }
    const Poly& modulus() const { return h_; }
    int ext_degree() const { return n_; }
    int field_bits() const { return base_.field_bits() * n_; }

    ExtElem zero() const { return ExtElem(Poly(base_), this); }
    ExtElem one() const { return ExtElem(Poly(base_, {base_.one()}), this); }
    ExtElem alpha() const;

    /// Constant embedding of the base field.
    ExtElem embed(FieldElem c) const;

    /// Residue class of an arbitrary base polynomial (reduced mod h).
    ExtElem from_poly(const Poly& p) const;

    ExtElem add(const ExtElem& x, const ExtElem& y) const;
    ExtElem mul(const ExtElem& x, const ExtElem& y) const;
    ExtElem inv(const ExtElem& x) const;
    ExtElem pow(const ExtElem& x, uint64_t k) const;

    /// x^q for the base field order q (m squarings).
    ExtElem frobenius_q(const ExtElem& x) const;

    /// Relative trace Tr_{q^n|q}(beta) = sum of beta^(q^i), i < n. The sum
    /// lies in the base field and is returned as a base element.
    FieldElem rel_trace(const ExtElem& beta) const;

    /// Absolute trace Tr_{q^n|2}(beta), computed by transitivity as
    /// Tr_{q|2}(Tr_{q^n|q}(beta)).
    int abs_trace(const ExtElem& beta) const;

  private:
    void check_ctx(const ExtElem& x) const {
        if (x.ctx_ != this) throw ContextMismatch();
    }

    const FieldCtx& base_;
    Poly h_;
    int n_;
};

ExtCtx make_extension(const FieldCtx& base, const Poly& h);

inline FieldElem ext_rel_trace(const ExtCtx& ext, const ExtElem& beta) { return ext.rel_trace(beta); }
inline int ext_abs_trace(const ExtCtx& ext, const ExtElem& beta) { return ext.abs_trace(beta); }

inline ExtElem ExtElem::operator+(const ExtElem& o) const { return ctx_->add(*this, o); }
inline ExtElem ExtElem::operator*(const ExtElem& o) const { return ctx_->mul(*this, o); }
inline ExtElem ExtElem::operator/(const ExtElem& o) const { return ctx_->mul(*this, ctx_->inv(o)); }

inline bool ExtElem::operator==(const ExtElem& o) const {
    if (ctx_ != o.ctx_) throw ContextMismatch();
    return rep_ == o.rep_;
}

using ExtPoly = PolyT<ExtElem>;

}  // namespace stablepoly

#endif  // STABLEPOLY_EXTENSION_HPP_
