#ifndef WGSHIFT_FIELD_HPP
#define WGSHIFT_FIELD_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "wgshift/errors.hpp"

namespace wgs {

bool is_prime(std::uint32_t n);

// Prime field GF(p). Values are canonical representatives in [0, p).
class FieldSpec {
public:
  explicit FieldSpec(std::uint32_t p); // throws NotPrime
  std::uint32_t p() const { return p_; }
  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }

private:
  std::uint32_t p_;
};

class FieldElement {
public:
  FieldElement() : value_(0), p_(2) {}
  FieldElement(const FieldSpec& spec, std::uint64_t value)
      : value_(static_cast<std::uint32_t>(value % spec.p())), p_(spec.p()) {}

  std::uint32_t value() const { return value_; }
  std::uint32_t p() const { return p_; }
  FieldSpec spec() const { return FieldSpec(p_); }
  bool is_zero() const { return value_ == 0; }

  bool operator==(const FieldElement& o) const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;

private:
  void check_same(const FieldElement& o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

FieldElement inv(const FieldElement& a);                 // throws ZeroInverse
FieldElement pow(const FieldElement& a, std::uint64_t e); // 0^0 = 1

// a^p == a, Fermat identity; holds for every element of GF(p).
bool pow_fermat_check(const FieldElement& a);

// Product over a sequence; empty product is 1.
FieldElement product(const FieldSpec& spec, std::span<const FieldElement> xs);

} // namespace wgs

#endif
