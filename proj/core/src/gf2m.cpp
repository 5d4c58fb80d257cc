#include "stablepoly/gf2m.hpp"

#include <array>
#include <bit>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>

#include "stablepoly/poly.hpp"

namespace stablepoly {

namespace {

std::string hex_of(uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

uint64_t parse_hex(std::string_view s, const char* what) {
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
    if (s.empty() || s.size() > 16) throw ParseError(std::string("bad hex string for ") + what);
    uint64_t v = 0;
    for (char ch : s) {
        int d;
        if (ch >= '0' && ch <= '9') d = ch - '0';
        else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') d = ch - 'A' + 10;
        else throw ParseError(std::string("bad hex digit in ") + what);
        v = (v << 4) | static_cast<uint64_t>(d);
    }
    return v;
}

// Bits of a binary polynomial as a Poly over the shared GF(2) context.
Poly bits_to_gf2_poly(uint64_t bits) {
    const FieldCtx& f2 = FieldCtx::gf2();
    std::vector<FieldElem> cs;
    int top = bits == 0 ? -1 : std::bit_width(bits) - 1;
    cs.reserve(static_cast<size_t>(top + 1));
    for (int i = 0; i <= top; ++i) cs.push_back((bits >> i) & 1 ? f2.one() : f2.zero());
    return Poly(f2, std::move(cs));
}

bool modulus_bits_irreducible(uint64_t bits) { return is_irreducible(bits_to_gf2_poly(bits)); }

}  // namespace

FieldCtx::FieldCtx(int m, uint64_t modulus, Unchecked) : m_(m), q_(1ull << m), mod_(modulus) {
    if (m_ >= 2 && m_ <= 16) build_tables();
}

const FieldCtx& FieldCtx::gf2() {
    static const FieldCtx ctx(1, 0b11, Unchecked{});
    return ctx;
}

uint32_t FieldCtx::raw_mul(uint32_t a, uint32_t b) const {
    uint64_t acc = 0;
    uint64_t aa = a;
    while (b != 0) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int i = 2 * m_ - 2; i >= m_; --i)
        if ((acc >> i) & 1) acc ^= mod_ << (i - m_);
    return static_cast<uint32_t>(acc);
}

void FieldCtx::build_tables() {
    const uint32_t qm1 = static_cast<uint32_t>(q_ - 1);
    exp_.assign(2 * qm1, 0);
    log_.assign(q_, 0);
    for (uint32_t g = 2; g < q_; ++g) {
        uint32_t cur = 1;
        bool primitive = true;
        for (uint32_t i = 0; i < qm1; ++i) {
            exp_[i] = cur;
            if (cur == 1 && i > 0) {
                primitive = false;  // order of g divides i < q-1
                break;
            }
            cur = raw_mul(cur, g);
        }
        if (primitive && cur == 1) break;
    }
    for (uint32_t i = 0; i < qm1; ++i) {
        log_[exp_[i]] = i;
        exp_[i + qm1] = exp_[i];
    }
}

FieldElem FieldCtx::elem(uint64_t coords) const {
    if (coords >= q_) throw ParseError("element coordinates exceed field size");
    return FieldElem(static_cast<uint32_t>(coords), this);
}

FieldElem FieldCtx::from_hex(std::string_view hex) const { return elem(parse_hex(hex, "field element")); }

std::string FieldElem::to_hex() const { return hex_of(v_); }

std::string FieldCtx::modulus_hex() const { return hex_of(mod_); }

FieldElem FieldCtx::mul(FieldElem x, FieldElem y) const {
    check_ctx(x);
    check_ctx(y);
    if (!exp_.empty()) {
        if (x.v_ == 0 || y.v_ == 0) return zero();
        return FieldElem(exp_[log_[x.v_] + log_[y.v_]], this);
    }
    return FieldElem(raw_mul(x.v_, y.v_), this);
}

FieldElem FieldCtx::inv(FieldElem x) const {
    check_ctx(x);
    if (x.v_ == 0) throw DivisionByZero("inverse of zero field element");
    if (!exp_.empty()) {
        const uint32_t qm1 = static_cast<uint32_t>(q_ - 1);
        return FieldElem(exp_[qm1 - log_[x.v_]], this);
    }
    return pow(x, q_ - 2);
}

FieldElem FieldCtx::pow(FieldElem x, uint64_t k) const {
    check_ctx(x);
    FieldElem r = one();
    FieldElem base = x;
    while (k != 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

int FieldCtx::abs_trace(FieldElem x) const {
    check_ctx(x);
    FieldElem acc = x;
    FieldElem cur = x;
    for (int i = 1; i < m_; ++i) {
        cur = mul(cur, cur);
        acc = add(acc, cur);
    }
    return static_cast<int>(acc.v_ & 1);
}

FieldCtx make_field(int m, std::optional<uint64_t> modulus) {
    if (m < 1 || m > FieldCtx::kMaxDegree)
        throw DegreeMismatch("extension degree m must be in 1..32, got " + std::to_string(m));
    const uint64_t mod = modulus ? *modulus : default_modulus(m);
    const int deg = mod == 0 ? -1 : std::bit_width(mod) - 1;
    if (deg != m)
        throw DegreeMismatch("modulus 0x" + hex_of(mod) + " has degree " + std::to_string(deg) +
                             ", expected " + std::to_string(m));
    if ((mod & 1) == 0) throw ReducibleModulus("modulus 0x" + hex_of(mod) + " is divisible by z");
    if (!modulus_bits_irreducible(mod))
        throw ReducibleModulus("modulus 0x" + hex_of(mod) + " is reducible over GF(2)");
    return FieldCtx(m, mod, FieldCtx::Unchecked{});
}

uint64_t default_modulus(int m) {
    if (m < 1 || m > FieldCtx::kMaxDegree)
        throw DegreeMismatch("extension degree m must be in 1..32, got " + std::to_string(m));
    static std::array<uint64_t, FieldCtx::kMaxDegree + 1> cache{};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache[static_cast<size_t>(m)] != 0) return cache[static_cast<size_t>(m)];
    for (uint64_t cand = (1ull << m) | 1;; cand += 2) {
        if (modulus_bits_irreducible(cand)) {
            cache[static_cast<size_t>(m)] = cand;
            return cand;
        }
    }
}

std::vector<std::pair<int, uint64_t>> load_modulus_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open modulus table file: " + path);
    std::vector<std::pair<int, uint64_t>> table;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        size_t colon = line.find(':', start);
        if (colon == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected m:hex");
        int m = 0;
        try {
            m = std::stoi(line.substr(start, colon - start));
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": bad degree field");
        }
        std::string hexpart = line.substr(colon + 1);
        while (!hexpart.empty() && (hexpart.back() == '\r' || hexpart.back() == ' ')) hexpart.pop_back();
        table.emplace_back(m, parse_hex(hexpart, "modulus table entry"));
    }
    return table;
}

uint64_t modulus_table_lookup(const std::vector<std::pair<int, uint64_t>>& table, int m) {
    for (const auto& [deg, mod] : table)
        if (deg == m) return mod;
    throw ParseError("modulus table has no entry for m=" + std::to_string(m));
}

}  // namespace stablepoly
