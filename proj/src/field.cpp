#include "etgrs/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace etgrs {

namespace {

constexpr uint32_t kMaxOrder = 1u << 16;

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// --- polynomial helpers over GF(p), coefficient vectors constant-first ---

void poly_trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
    // b monic (normalized by caller)
    poly_trim(a);
    const size_t db = b.size() - 1;
    while (a.size() > db) {
        uint32_t c = a.back();
        size_t shift = a.size() - 1 - db;
        if (c != 0) {
            for (size_t i = 0; i <= db; ++i) {
                uint64_t t = (uint64_t)c * b[i] % p;
                a[shift + i] = (uint32_t)((a[shift + i] + p - t) % p);
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() <= db) break;
    }
    poly_trim(a);
    return a;
}

std::vector<uint32_t> poly_make_monic(std::vector<uint32_t> a, uint32_t p) {
    poly_trim(a);
    uint32_t lead = a.back();
    if (lead == 1) return a;
    // lead^{-1} via Fermat
    uint64_t inv = 1, base = lead, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    for (auto& c : a) c = (uint32_t)(c * inv % p);
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    const size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        // enumerate monic divisors of degree d: d free coefficients
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> g(d + 1, 0);
            uint64_t t = idx;
            for (size_t i = 0; i < d; ++i) {
                g[i] = (uint32_t)(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Conway polynomials, constant-term first. Enough for all fields the
// tool's reference cases and tests use.
const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>& conway_table() {
    static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 1}},
        {{7, 2}, {3, 6, 1}},
        {{11, 2}, {2, 7, 1}},
        {{13, 2}, {2, 12, 1}},
    };
    return table;
}

std::vector<uint32_t> factor_distinct(uint64_t n) {
    std::vector<uint32_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back((uint32_t)d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back((uint32_t)n);
    return out;
}

}  // namespace

FieldSpec::FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("field: p = " + std::to_string(p_) + " is not prime");
    if (m_ < 1) throw std::invalid_argument("field: extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        q *= p_;
        if (q > kMaxOrder) throw std::invalid_argument("field: order exceeds 2^16");
    }
    q_ = (uint32_t)q;

    if (modulus_.size() != m_ + 1) throw std::invalid_argument("field: modulus must have m+1 coefficients");
    for (uint32_t c : modulus_)
        if (c >= p_) throw std::invalid_argument("field: modulus coefficient out of range");
    if (modulus_.back() != 1) throw std::invalid_argument("field: modulus must be monic");
    if (m_ > 1 && !poly_irreducible(modulus_, p_))
        throw std::invalid_argument("field: modulus is reducible over GF(" + std::to_string(p_) + ")");

    if (m_ > 1) {
        // x^m = -(lower part of modulus); extend to x^(m+e) for e < m-1
        reduction_.resize(m_ - 1);
        std::vector<uint32_t> cur(m_);
        for (uint32_t i = 0; i < m_; ++i) cur[i] = (p_ - modulus_[i]) % p_;
        reduction_[0] = cur;
        for (uint32_t e = 1; e + 1 < m_; ++e) {
            // multiply by x, reduce the overflow digit via reduction_[0]
            uint32_t top = cur[m_ - 1];
            std::vector<uint32_t> next(m_, 0);
            for (uint32_t i = m_ - 1; i >= 1; --i) next[i] = cur[i - 1];
            next[0] = 0;
            if (top != 0)
                for (uint32_t i = 0; i < m_; ++i)
                    next[i] = (uint32_t)((next[i] + (uint64_t)top * reduction_[0][i]) % p_);
            reduction_[e] = next;
            cur = next;
        }
    }

    // smallest encoding of multiplicative order q-1
    primitive_ = 1;
    if (q_ > 2) {
        const auto primes = factor_distinct(q_ - 1);
        for (uint32_t cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (uint32_t f : primes) {
                if (pow(cand, (q_ - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                primitive_ = cand;
                break;
            }
        }
    }
}

const FieldSpec& FieldSpec::get(uint32_t p, uint32_t m) {
    if (m == 1) return get(p, 1, std::vector<uint32_t>{0, 1});
    auto it = conway_table().find({p, m});
    if (it == conway_table().end())
        throw std::invalid_argument("field: no default modulus for GF(" + std::to_string(p) + "^" +
                                    std::to_string(m) + "); supply one explicitly");
    return get(p, m, it->second);
}

const FieldSpec& FieldSpec::get(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) {
    using Key = std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>;
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<FieldSpec>> registry;
    std::lock_guard<std::mutex> lock(mu);
    Key key{p, m, modulus};
    auto it = registry.find(key);
    if (it == registry.end()) {
        auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(p, m, modulus));
        it = registry.emplace(std::move(key), std::move(spec)).first;
    }
    return *it->second;
}

const FieldSpec& FieldSpec::parse(std::string_view text) {
    auto parse_u32 = [](std::string_view s, const char* what) {
        uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument(std::string("field: cannot parse ") + what + " '" + std::string(s) + "'");
        return v;
    };
    std::string_view head = text;
    std::vector<uint32_t> modulus;
    bool have_modulus = false;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
        head = text.substr(0, colon);
        std::string_view rest = text.substr(colon + 1);
        have_modulus = true;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            modulus.push_back(parse_u32(tok, "modulus coefficient"));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    uint32_t p = 0, m = 1;
    if (auto caret = head.find('^'); caret != std::string_view::npos) {
        p = parse_u32(head.substr(0, caret), "characteristic");
        m = parse_u32(head.substr(caret + 1), "extension degree");
    } else {
        p = parse_u32(head, "field order");
    }
    return have_modulus ? get(p, m, modulus) : get(p, m);
}

std::string FieldSpec::to_string() const {
    if (m_ == 1) return std::to_string(p_);
    std::string s = std::to_string(p_) + "^" + std::to_string(m_) + ":";
    for (size_t i = 0; i < modulus_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_[i]);
    }
    return s;
}

std::vector<uint32_t> FieldSpec::digits(uint32_t a) const {
    std::vector<uint32_t> d(m_);
    for (uint32_t i = 0; i < m_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

uint32_t FieldSpec::from_digits(const std::vector<uint32_t>& d) const {
    if (d.size() != m_) throw std::invalid_argument("field: digit vector has wrong length");
    uint32_t v = 0;
    for (size_t i = d.size(); i-- > 0;) {
        if (d[i] >= p_) throw std::invalid_argument("field: digit out of range");
        v = v * p_ + d[i];
    }
    return v;
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t out = 0, base = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * base;
        base *= p_;
    }
    return out;
}

uint32_t FieldSpec::neg(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t out = 0, base = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        out += (da == 0 ? 0 : p_ - da) * base;
        base *= p_;
    }
    return out;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return (uint32_t)((uint64_t)a * b % p_);
    if (a == 0 || b == 0) return 0;
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<uint32_t> prod(2 * m_ - 1, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m_; ++j)
            prod[i + j] = (uint32_t)((prod[i + j] + (uint64_t)da[i] * db[j]) % p_);
    }
    for (uint32_t e = 0; e + 1 < m_; ++e) {
        uint32_t c = prod[m_ + e];
        if (c == 0) continue;
        for (uint32_t i = 0; i < m_; ++i)
            prod[i] = (uint32_t)((prod[i] + (uint64_t)c * reduction_[e][i]) % p_);
    }
    prod.resize(m_);
    return from_digits(prod);
}

uint32_t FieldSpec::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t FieldSpec::inv(uint32_t a) const {
    if (a == 0) throw std::invalid_argument("field: inverse of zero");
    return pow(a, q_ - 2);
}

FieldElement::FieldElement(const FieldSpec& spec, uint32_t value) : spec_(&spec), value_(value) {
    if (value_ >= spec.q()) throw std::invalid_argument("field: element encoding out of range");
}

namespace {
const FieldSpec& require_same(const FieldElement& a, const FieldElement& b) {
    if (&a.spec() != &b.spec()) throw std::invalid_argument("field: operands belong to different fields");
    return a.spec();
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
    const auto& f = require_same(*this, o);
    return FieldElement(f, f.add(value_, o.value_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    const auto& f = require_same(*this, o);
    return FieldElement(f, f.sub(value_, o.value_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    const auto& f = require_same(*this, o);
    return FieldElement(f, f.mul(value_, o.value_));
}

FieldElement FieldElement::operator-() const { return FieldElement(*spec_, spec_->neg(value_)); }

FieldElement FieldElement::inv() const { return FieldElement(*spec_, spec_->inv(value_)); }

FieldElement FieldElement::pow(uint64_t e) const { return FieldElement(*spec_, spec_->pow(value_, e)); }

bool FieldElement::operator==(const FieldElement& o) const {
    require_same(*this, o);
    return value_ == o.value_;
}

FieldElement zero(const FieldSpec& spec) { return FieldElement(spec, 0); }
FieldElement one(const FieldSpec& spec) { return FieldElement(spec, 1); }

FieldElement primitive_element(const FieldSpec& spec) { return FieldElement(spec, spec.primitive_encoding()); }

std::vector<FieldElement> enumerate_elements(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.q());
    for (uint32_t v = 0; v < spec.q(); ++v) out.emplace_back(spec, v);
    return out;
}

FieldElement parse_element(const FieldSpec& spec, std::string_view text) {
    if (text.empty()) throw std::invalid_argument("field: empty element literal");
    if (text[0] == 'g') {
        uint64_t t = 1;
        if (text.size() > 1) {
            if (text[1] != '^') throw std::invalid_argument("field: bad element literal '" + std::string(text) + "'");
            std::string_view e = text.substr(2);
            uint64_t v = 0;
            auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), v);
            if (ec != std::errc() || ptr != e.data() + e.size())
                throw std::invalid_argument("field: bad exponent in '" + std::string(text) + "'");
            t = v;
        }
        return primitive_element(spec).pow(t);
    }
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::invalid_argument("field: bad element literal '" + std::string(text) + "'");
    if (v >= spec.q())
        throw std::invalid_argument("field: encoding " + std::to_string(v) + " out of range for " + spec.to_string());
    return FieldElement(spec, v);
}

uint64_t multiplicative_order(const FieldElement& a) {
    if (a.is_zero()) throw std::invalid_argument("field: order of zero is undefined");
    uint64_t ord = 1;
    FieldElement x = a;
    while (!x.is_one()) {
        x = x * a;
        ++ord;
    }
    return ord;
}

}  // namespace etgrs
