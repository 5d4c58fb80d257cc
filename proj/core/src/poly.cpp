#include "stablepoly/poly.hpp"

#include <cctype>
#include <sstream>

namespace stablepoly {

bool quad_irred_trace(FieldElem c, FieldElem a, FieldElem b) {
    const FieldCtx& ctx = c.ctx();
    if (&a.ctx() != &ctx || &b.ctx() != &ctx) throw ContextMismatch();
    if (c.is_zero()) throw NotQuadratic();
    if (a.is_zero()) return false;  // c x^2 + b = (sqrt(c) x + sqrt(b))^2
    if (b.is_zero()) return false;  // x divides c x^2 + a x
    // Monic criterion applied to x^2 + (a/c) x + (b/c): Tr((b/c) / (a/c)^2) = Tr(b c / a^2).
    return ctx.abs_trace(b * c / (a * a)) == 1;
}

namespace {

std::string coeff_hex(FieldElem e) { return e.to_hex(); }

void append_term(std::string& out, FieldElem coeff, int deg) {
    if (!out.empty()) out += " + ";
    if (deg == 0) {
        out += coeff_hex(coeff);
    } else {
        out += coeff_hex(coeff);
        out += "*x";
        if (deg > 1) {
            out += '^';
            out += std::to_string(deg);
        }
    }
}

}  // namespace

std::string render_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        FieldElem c = p.coeff(i);
        if (c.is_zero()) continue;
        append_term(out, c, i);
    }
    return out;
}

Poly parse_poly(const FieldCtx& ctx, std::string_view text) {
    std::vector<std::pair<int, FieldElem>> terms;
    size_t pos = 0;
    const auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (pos == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (pos < text.size()) {
        if (!first) {
            if (text[pos] != '+') throw ParseError("expected '+' between polynomial terms");
            ++pos;
            skip_space();
        }
        first = false;
        // term: HEX | HEX*x | HEX*x^K | x | x^K
        std::string hex;
        while (pos < text.size() && std::isxdigit(static_cast<unsigned char>(text[pos]))) {
            // 'x' is the variable, never a hex digit here
            if (text[pos] == 'x') break;
            hex += text[pos];
            ++pos;
        }
        bool has_var = false;
        if (!hex.empty() && pos < text.size() && text[pos] == '*') {
            ++pos;
            if (pos == text.size() || text[pos] != 'x') throw ParseError("expected 'x' after '*'");
            ++pos;
            has_var = true;
        } else if (hex.empty() && pos < text.size() && text[pos] == 'x') {
            ++pos;
            has_var = true;
        }
        if (hex.empty() && !has_var) throw ParseError("malformed polynomial term");
        int deg = 0;
        if (has_var) {
            deg = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::string num;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    num += text[pos];
                    ++pos;
                }
                if (num.empty()) throw ParseError("missing exponent after '^'");
                deg = std::stoi(num);
            }
        }
        FieldElem coeff = hex.empty() ? ctx.one() : ctx.from_hex(hex);
        terms.emplace_back(deg, coeff);
        skip_space();
    }
    int maxdeg = 0;
    for (const auto& [d, c] : terms) maxdeg = std::max(maxdeg, d);
    std::vector<FieldElem> coeffs(static_cast<size_t>(maxdeg + 1), ctx.zero());
    for (const auto& [d, c] : terms) coeffs[static_cast<size_t>(d)] += c;
    return Poly(ctx, std::move(coeffs));
}

std::string render_poly_hex(const Poly& p) {
    if (p.ctx().degree() != 1) throw ParseError("compact hex form is defined for GF(2) polynomials only");
    if (p.is_zero()) return "0";
    const int nybbles = p.degree() / 4 + 1;
    std::string out;
    for (int k = nybbles - 1; k >= 0; --k) {
        unsigned v = 0;
        for (int b = 3; b >= 0; --b) {
            v <<= 1;
            const int i = 4 * k + b;
            if (i <= p.degree() && p.coeff(i).is_one()) v |= 1;
        }
        out += "0123456789abcdef"[v];
    }
    const size_t nz = out.find_first_not_of('0');
    return out.substr(nz);
}

Poly parse_poly_hex(const FieldCtx& ctx, std::string_view hex) {
    if (ctx.degree() != 1) throw ParseError("compact hex form is defined for GF(2) polynomials only");
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
    if (hex.empty()) throw ParseError("empty hex polynomial");
    std::vector<FieldElem> coeffs(hex.size() * 4, ctx.zero());
    for (size_t k = 0; k < hex.size(); ++k) {
        const char ch = hex[hex.size() - 1 - k];
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else throw ParseError("bad hex digit in polynomial");
        for (int b = 0; b < 4; ++b)
            if ((v >> b) & 1) coeffs[4 * k + static_cast<size_t>(b)] = ctx.one();
    }
    return Poly(ctx, std::move(coeffs));
}

}  // namespace stablepoly
