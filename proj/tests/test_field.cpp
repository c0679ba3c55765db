#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "wgshift/field.hpp"

using namespace wgs;

namespace {

bool throws_code(ErrorCode want, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

} // namespace

TEST_CASE("primality classifier") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 97u, 997u}) CHECK(is_prime(p));
  for (std::uint32_t n : {0u, 1u, 4u, 6u, 8u, 9u, 15u, 100u, 1001u}) CHECK(!is_prime(n));
}

TEST_CASE("field spec rejects composite orders") {
  for (std::uint32_t n : {0u, 1u, 4u, 6u, 9u})
    CHECK(throws_code(ErrorCode::NotPrime, [n] { FieldSpec f(n); (void)f; }));
  CHECK(FieldSpec(7).p() == 7);
}

TEST_CASE("construction reduces modulo p") {
  FieldSpec f(5);
  CHECK(FieldElement(f, 0).value() == 0);
  CHECK(FieldElement(f, 7).value() == 2);
  CHECK(FieldElement(f, 5).value() == 0);
  CHECK(FieldElement(f, 1234567).value() == 1234567 % 5);
}

TEST_CASE("arithmetic matches integer arithmetic mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    FieldSpec f(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK((FieldElement(f, a) + FieldElement(f, b)).value() == (a + b) % p);
        CHECK((FieldElement(f, a) * FieldElement(f, b)).value() == (a * b) % p);
      }
      CHECK((-FieldElement(f, a)).value() == (p - a % p) % p);
    }
  }
}

TEST_CASE("inverses multiply to one and zero has none") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    FieldSpec f(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      FieldElement x(f, a);
      CHECK((x * inv(x)).value() == 1);
    }
    CHECK(throws_code(ErrorCode::ZeroInverse, [&f] { inv(FieldElement(f, 0)); }));
  }
}

TEST_CASE("power matches repeated multiplication") {
  FieldSpec f(7);
  for (std::uint32_t a = 0; a < 7; ++a) {
    FieldElement acc(f, 1);
    for (std::uint64_t e = 0; e <= 12; ++e) {
      CHECK(pow(FieldElement(f, a), e) == acc);
      acc = acc * FieldElement(f, a);
    }
  }
  CHECK(pow(FieldElement(f, 0), 0).value() == 1);
}

TEST_CASE("fermat identity holds for every element") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 97u}) {
    FieldSpec f(p);
    for (std::uint32_t a = 0; a < p; ++a) CHECK(pow_fermat_check(FieldElement(f, a)));
  }
}

TEST_CASE("products fold left with empty product one") {
  FieldSpec f(5);
  CHECK(product(f, {}).value() == 1);
  std::vector<FieldElement> xs{FieldElement(f, 2), FieldElement(f, 3), FieldElement(f, 4)};
  CHECK(product(f, xs).value() == (2 * 3 * 4) % 5);
  xs.push_back(FieldElement(f, 0));
  CHECK(product(f, xs).value() == 0);
}

TEST_CASE("mixing fields is rejected") {
  FieldSpec f2(2), f3(3);
  CHECK(throws_code(ErrorCode::SpecMismatch,
                    [&] { (void)(FieldElement(f2, 1) + FieldElement(f3, 1)); }));
  CHECK(throws_code(ErrorCode::SpecMismatch,
                    [&] { (void)(FieldElement(f2, 1) == FieldElement(f3, 1)); }));
}
