#include "wgshift/field.hpp"

namespace wgs {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::AddressOutOfRange: return "AddressOutOfRange";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, "field order " + std::to_string(p) + " is not prime");
  }
}

void FieldElement::check_same(const FieldElement& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorCode::SpecMismatch,
                "mixing GF(" + std::to_string(p_) + ") with GF(" + std::to_string(o.p_) + ")");
  }
}

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return value_ == o.value_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  FieldElement r;
  r.p_ = p_;
  r.value_ = (value_ + o.value_) % p_;
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  FieldElement r;
  r.p_ = p_;
  r.value_ = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(value_) * o.value_) % p_);
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (r.value() != 0) {
    return FieldElement(spec(), p_ - value_);
  }
  return r;
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  FieldElement acc(a.spec(), 1);
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElement inv(const FieldElement& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::ZeroInverse, "zero has no multiplicative inverse");
  }
  return pow(a, a.p() - 2);
}

bool pow_fermat_check(const FieldElement& a) {
  return pow(a, a.p()) == a;
}

FieldElement product(const FieldSpec& spec, std::span<const FieldElement> xs) {
  FieldElement acc(spec, 1);
  for (const auto& x : xs) acc = acc * x;
  return acc;
}

} // namespace wgs
