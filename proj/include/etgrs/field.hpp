#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace etgrs {

/// Thrown when an exhaustive search would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Description of a finite field GF(p^m), p prime, with a fixed monic
/// irreducible modulus polynomial (coefficients constant-term first).
///
/// Instances are interned: get() returns a reference to a canonical,
/// immutable object that lives for the duration of the program, so two
/// elements belong to the same field iff their spec pointers are equal.
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the polynomial-basis coordinates, constant term least
/// significant. Supported sizes: q <= 2^16.
class FieldSpec {
  public:
    /// Field with the default modulus (built-in Conway polynomial table
    /// for the supported extension fields; plain mod-p for m == 1).
    static const FieldSpec& get(uint32_t p, uint32_t m = 1);
    /// Field with an explicit monic modulus of degree m, constant-term first.
    static const FieldSpec& get(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);
    /// Parses "p", "p^m" or "p^m:c0,c1,...,cm".
    static const FieldSpec& parse(std::string_view text);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    std::string to_string() const;

    // Arithmetic on integer encodings.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;

    /// Base-p digits of an encoding, constant term first, length m.
    std::vector<uint32_t> digits(uint32_t a) const;
    uint32_t from_digits(const std::vector<uint32_t>& d) const;

    /// Smallest encoding whose multiplicative order is q - 1.
    uint32_t primitive_encoding() const { return primitive_; }

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

  private:
    FieldSpec(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t p_, m_, q_;
    std::vector<uint32_t> modulus_;
    // reduction_[e] = digits of x^(m+e) mod modulus, e = 0..m-2
    std::vector<std::vector<uint32_t>> reduction_;
    uint32_t primitive_;
};

/// An element of a finite field; a value type pairing an interned spec
/// with an integer encoding in [0, q).
class FieldElement {
  public:
    FieldElement(const FieldSpec& spec, uint32_t value);

    const FieldSpec& spec() const { return *spec_; }
    uint32_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(value_); }

  private:
    const FieldSpec* spec_;
    uint32_t value_;
};

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);

/// Element with the smallest encoding whose multiplicative order is q - 1.
FieldElement primitive_element(const FieldSpec& spec);

/// All q elements in ascending encoding order.
std::vector<FieldElement> enumerate_elements(const FieldSpec& spec);

/// Parses "0", a plain integer encoding, "g" or "g^t" (powers of the
/// primitive element).
FieldElement parse_element(const FieldSpec& spec, std::string_view text);

uint64_t multiplicative_order(const FieldElement& a);

}  // namespace etgrs
