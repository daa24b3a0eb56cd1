#include "doctest.h"

#include <random>

#include "skoda/parse.hpp"
#include "skoda/ring.hpp"

using namespace skoda;

namespace {

Poly random_poly(const Presentation& R, std::mt19937& rng, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, maxdeg);
  Poly p = R->zero();
  for (int t = 0; t < terms; ++t) {
    Poly m = R->constant(coef(rng));
    for (std::size_t v = 0; v < R->nvars(); ++v) m = m * Poly::variable(R->ambient(), v).pow(expo(rng));
    p = p + m;
  }
  return R->reduce(p);
}

}  // namespace

TEST_CASE("parse and print basics") {
  auto R = polynomial_ring({"x", "y"});
  Poly p = R->parse("x^2 - 1");
  CHECK(p.size() == 2);
  CHECK(p.to_string() == "x^2 - 1");
  CHECK(R->parse("(x+y)^2").to_string() == "x^2 + 2*x*y + y^2");
  CHECK(R->parse("3/2*x - x/2").to_string() == "x");
  CHECK(R->parse("0").is_zero());
}

TEST_CASE("parse reduces modulo relations") {
  auto A = polynomial_ring({"x", "y", "z"});
  auto R = ring_quotient(A, std::vector<std::string>{"x^3+y^3+z^3"});
  CHECK(R->parse("x^3+y^3+z^3").is_zero());
  CHECK(!R->is_zero_ring());
}

TEST_CASE("parse errors carry positions") {
  auto R = polynomial_ring({"x", "y"});
  try {
    R->parse("x + w");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(R->parse("x +* y"), ParseError);
  CHECK_THROWS_AS(R->parse("(x + y"), ParseError);
  CHECK_THROWS_AS(R->parse("x / 0"), ParseError);
}

TEST_CASE("ring_quotient examples") {
  auto Qx = polynomial_ring({"x"});
  auto R = ring_quotient(Qx, std::vector<std::string>{"x"});
  REQUIRE(R->relations().size() == 1);
  CHECK(R->relations()[0].to_string() == "x");
  CHECK(ring_quotient(Qx, std::vector<std::string>{"1"})->is_zero_ring());

  auto C = ring_quotient(polynomial_ring({"x", "y", "t"}), std::vector<std::string>{"x*t - y"});
  CHECK(C->parse("y - x*t").is_zero());
  CHECK(!C->is_zero_ring());
}

TEST_CASE("prime field arithmetic") {
  auto R = polynomial_ring({"x"}, Field::prime(7));
  CHECK(R->parse("8*x").to_string() == "x");
  CHECK(R->parse("x/3").to_string() == "5*x");
  CHECK(R->parse("7*x + 1").to_string() == "1");
  CHECK_THROWS(Field::prime(9));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(17);
  auto A = polynomial_ring({"x", "y", "z"});
  auto Q = ring_quotient(A, std::vector<std::string>{"x^2*y - z^2", "y^3 - x"});
  for (const auto& R : {A, Q}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly a = random_poly(R, rng, 4, 3), b = random_poly(R, rng, 4, 3), c = random_poly(R, rng, 3, 2);
      CHECK(R->mul(R->mul(a, b), c) == R->mul(a, R->mul(b, c)));
      CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
      CHECK(R->mul(a, b) == R->mul(b, a));
      CHECK(R->add(a, -a).is_zero());
      CHECK(R->reduce(a) == a);
    }
  }
}

TEST_CASE("print/parse round trip") {
  std::mt19937 rng(5);
  auto R = polynomial_ring({"x", "y", "z"});
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = random_poly(R, rng, 5, 4).scaled(Coeff(3, 7));
    CHECK(R->parse(p.to_string()) == p);
  }
  auto F = polynomial_ring({"a", "b"}, Field::prime(101));
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = random_poly(F, rng, 4, 3);
    CHECK(F->parse(p.to_string()) == p);
  }
}

TEST_CASE("monomial orders are total and transitive") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<unsigned> e(0, 3);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block({2, 2})};
  auto rnd = [&] {
    std::vector<unsigned> v(4);
    for (auto& x : v) x = e(rng);
    return Monomial(v);
  };
  for (const auto& ord : orders) {
    for (int t = 0; t < 300; ++t) {
      Monomial a = rnd(), b = rnd(), c = rnd();
      int ab = ord.compare(a, b), ba = ord.compare(b, a);
      CHECK(ab == -ba);
      if (ab == 0) CHECK(a == b);
      if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
      Monomial one(4);
      if (!(a == one)) CHECK(ord.compare(a, one) > 0);
      // Compatible with multiplication.
      CHECK(ord.compare(a * c, b * c) == ab);
    }
  }
  for (unsigned p = 0; p < 5; ++p)
    for (unsigned q = 0; q < 5; ++q) {
      Monomial a(std::vector<unsigned>{p, 0, 0}), b(std::vector<unsigned>{q, 0, 0});
      CHECK(MonomialOrder::lex().compare(a, b) == MonomialOrder::grevlex().compare(a, b));
    }
}

TEST_CASE("ring maps") {
  auto S = polynomial_ring({"x", "y"});
  auto T = ring_quotient(polynomial_ring({"x", "y", "t"}), std::vector<std::string>{"x*t - y"});
  RingMap phi(S, T, {T->var("x"), T->var("y")});
  CHECK(phi.is_well_defined());
  CHECK(phi(S->parse("x*y")) == T->parse("x^2*t"));

  auto P = ring_quotient(S, std::vector<std::string>{"x*y"});
  RingMap bad(P, S, {S->var("x"), S->var("y")});
  CHECK(!bad.is_well_defined());
}
