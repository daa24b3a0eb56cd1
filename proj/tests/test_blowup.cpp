#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "skoda/blowup.hpp"
#include "skoda/ideal_ops.hpp"

using namespace skoda;

namespace {

std::vector<Poly> polys(const Presentation& R, std::vector<std::string> s) {
  std::vector<Poly> out;
  for (const auto& e : s) out.push_back(R->parse(e));
  return out;
}

std::set<std::string> strings(const std::vector<Poly>& v) {
  std::set<std::string> out;
  for (const auto& p : v) out.insert(p.to_string());
  return out;
}

Ideal ideal_in(const Ideal& like, std::vector<std::string> exprs) { return Ideal(like.ring(), exprs); }

// Monomials of total degree <= D not divisible by any lead monomial of the relations.
std::vector<Monomial> standard_monomials(const RingPresentation& R, unsigned D) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= D; ++d)
    for (const auto& e : oracle::exponents_of_degree(R.nvars(), d)) {
      Monomial m(e);
      bool standard = std::none_of(R.relations().begin(), R.relations().end(),
                                   [&](const Poly& g) { return g.lead_monomial().divides(m); });
      if (standard) out.push_back(m);
    }
  return out;
}

}  // namespace

TEST_CASE("Rees presentations") {
  auto R = polynomial_ring({"x", "y"});
  auto rees = rees_presentation(Ideal(R, std::vector<std::string>{"x", "y"}));
  CHECK(ideal_equal(rees, ideal_in(rees, {"x*T2 - y*T1"})));

  auto principal = rees_presentation(Ideal(R, std::vector<std::string>{"x"}));
  CHECK(principal.is_zero());

  auto sq = rees_presentation(Ideal(R, std::vector<std::string>{"x^2", "x*y", "y^2"}));
  CHECK(ideal_equal(sq, ideal_in(sq, {"T2^2 - T1*T3", "x*T2 - y*T1", "x*T3 - y*T2"})));

  // Every generator vanishes under T_i -> g_i s.
  for (const auto& g : sq.gens()) {
    auto P = make_ring(Field::rationals(), {"x", "y", "s"});
    Poly s = Poly::variable(P, 2), x = Poly::variable(P, 0), y = Poly::variable(P, 1);
    std::vector<Poly> images{x, y, x * x * s, x * y * s, y * y * s};
    CHECK(substitute(g, images, P).is_zero());
  }
}

TEST_CASE("Rees presentation over a quotient keeps the relations") {
  auto R = ring_quotient(polynomial_ring({"x", "y"}), std::vector<std::string>{"x*y"});
  auto rees = rees_presentation(Ideal(R, std::vector<std::string>{"x", "y"}));
  CHECK(rees.contains(rees.ring()->parse("x*y")));
  CHECK(rees.contains(rees.ring()->parse("x*T2 - y*T1")));
}

TEST_CASE("blowup of the maximal ideal of the plane") {
  auto R = polynomial_ring({"x", "y"});
  auto M = build_blowup(R, polys(R, {"x", "y"}), polys(R, {"x", "y"}), 1);
  REQUIRE(M.ncharts() == 2);
  const auto& X = M.charts[0];
  CHECK(X.ring->vars() == std::vector<std::string>{"x", "y", "u1", "u2"});
  CHECK(X.ring->var("u1").is_one());
  CHECK(X.ring->reduce(X.ring->parse("x*u2 - y")).is_zero());
  CHECK(!X.ring->reduce(X.ring->parse("u2")).is_constant());
  CHECK(X.generator == X.ring->var("x"));
  CHECK(X.q[1] == X.ring->var("u2"));

  const auto& Y = M.charts[1];
  CHECK(Y.ring->var("u2").is_one());
  CHECK(Y.ring->reduce(Y.ring->parse("y*u1 - x")).is_zero());

  // The overlap inverts t = y/x.
  const auto& O = M.cells.at({0, 1});
  CHECK(O.ring->mul(O.ring->var("w"), O.ring->var("u2")).is_one());
  CHECK(M.cover.cells.size() == 2);
  CHECK(M.cover.cells[1] == std::vector<IndexSet>{{0, 1}});
  CHECK(M.has_ratios());
  CHECK(check_model(M).ok());

  // Chart x of the plane is a polynomial ring in x and t: its presentation has the expected two relations.
  CHECK(strings(X.ring->relations()).size() == 2);
}

TEST_CASE("blowup of the square of the maximal ideal") {
  auto R = polynomial_ring({"x", "y"});
  auto M = build_blowup(R, polys(R, {"x^2", "x*y", "y^2"}), polys(R, {"x", "y"}), 2);
  const auto& X = M.charts[0];
  auto& P = X.ring;
  CHECK(P->var("u1").is_one());
  CHECK(P->reduce(P->parse("x*u2 - y")).is_zero());
  CHECK(P->reduce(P->parse("u3 - u2^2")).is_zero());
  CHECK(X.ratio.has_value());
  CHECK((*X.ratio)[1] == P->var("u2"));
  CHECK(check_model(M).ok());
  CHECK(cech_complex(M).delta_squared_zero);
}

TEST_CASE("principal center gives the base back") {
  auto R = polynomial_ring({"x", "y"});
  auto M = build_blowup(R, polys(R, {"x"}), polys(R, {"x"}), 1);
  REQUIRE(M.ncharts() == 1);
  CHECK(M.cover.cells.size() == 1);
  CHECK(M.charts[0].ring->var("u1").is_one());
  CHECK(strings(M.charts[0].ring->relations()) == std::set<std::string>{"u1 - 1"});
  auto C = cech_complex(M);
  CHECK(C.delta_squared_zero);
  CHECK(C.cover.cells.size() == 1);
}

TEST_CASE("chart generators must lie in the center") {
  auto R = polynomial_ring({"x", "y"});
  CHECK_THROWS_AS(build_blowup(R, polys(R, {"x^2", "y^2"}), polys(R, {"x", "y"}), 1), std::invalid_argument);
  CHECK_THROWS_AS(build_blowup(R, {}, polys(R, {"x"}), 1), std::invalid_argument);
  // (x^2, y^2) does not contain x*y, so the ratio y/x is not recorded, but the model is valid.
  auto M = build_blowup(R, polys(R, {"x^2", "y^2"}), polys(R, {"x", "y"}), 2);
  CHECK(!M.has_ratios());
  CHECK(check_model(M).ok());
}

TEST_CASE("Cech differential on two charts") {
  auto R = polynomial_ring({"x", "y"});
  auto M = build_blowup(R, polys(R, {"x", "y"}), polys(R, {"x", "y"}), 1);
  const auto& A = M.charts[0].ring;
  const auto& B = M.charts[1].ring;
  Cochain c{{{0}, {A->parse("u2")}}, {{1}, {B->parse("u1^2")}}};
  Cochain d = cech_differential(M.cover, 0, c, 1);
  const auto& O = M.cells.at({0, 1}).ring;
  CHECK(d.at({0, 1})[0] == O->reduce(O->parse("w^2 - u2")));

  // A base element restricts to zero.
  Cochain r{{{0}, {M.charts[0].from_base(R->parse("x^2 + y"))}}, {{1}, {M.charts[1].from_base(R->parse("x^2 + y"))}}};
  CHECK(cech_differential(M.cover, 0, r, 1).at({0, 1})[0].is_zero());
}

TEST_CASE("three charts: squares commute and delta squares to zero") {
  auto R = polynomial_ring({"x", "y", "z"});
  for (unsigned p : {1u, 2u}) {
    std::vector<Poly> center = p == 1 ? polys(R, {"x", "y", "z"})
                                      : polys(R, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"});
    auto M = build_blowup(R, center, polys(R, {"x", "y", "z"}), p);
    CHECK(M.cover.cells.size() == 3);
    auto chk = check_model(M);
    CHECK(chk.ok());
    for (const auto& msg : chk.problems) MESSAGE(msg);
    CHECK(cech_complex(M).delta_squared_zero);
    for (const auto& C : M.charts) {
      // Chart relations are saturated with respect to the chart generator.
      Ideal ambient_rel(polynomial_ring(C.ring->ambient()), C.ring->relations());
      CHECK(ideal_equal(saturate(ambient_rel, Poly::variable(C.ring->ambient(), C.index)), ambient_rel));
    }
  }
}

TEST_CASE("blowup over a non-regular base") {
  auto R = ring_quotient(polynomial_ring({"x", "y", "z"}), std::vector<std::string>{"x*y - z^2"});
  auto M = build_blowup(R, polys(R, {"x", "z"}), polys(R, {"x", "z"}), 1);
  CHECK(check_model(M).ok());
  CHECK(cech_complex(M).delta_squared_zero);
}

TEST_CASE("kernel of delta on degree slices is the base ring") {
  auto R = polynomial_ring({"x", "y"});
  auto M = build_blowup(R, polys(R, {"x", "y"}), polys(R, {"x", "y"}), 1);
  const unsigned D = 6;
  const auto& A = M.charts[0].ring;
  const auto& B = M.charts[1].ring;
  const auto& resA = M.cover.restriction({0}, {0, 1});
  const auto& resB = M.cover.restriction({1}, {0, 1});
  auto basisA = standard_monomials(*A, D);
  auto basisB = standard_monomials(*B, D);

  // Columns: images of basis monomials under -resA and resB, in overlap normal-form coordinates.
  std::vector<Poly> columns;
  for (const auto& m : basisA) columns.push_back(-resA(Poly::term(A->ambient(), m, Coeff(1))));
  for (const auto& m : basisB) columns.push_back(resB(Poly::term(B->ambient(), m, Coeff(1))));
  std::vector<Monomial> rows;
  for (const auto& c : columns)
    for (const auto& t : c.terms())
      if (std::find(rows.begin(), rows.end(), t.mono) == rows.end()) rows.push_back(t.mono);
  std::vector<std::vector<Coeff>> mat(rows.size(), std::vector<Coeff>(columns.size(), Coeff(0)));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms())
      mat[std::find(rows.begin(), rows.end(), t.mono) - rows.begin()][j] = t.coeff;
  const std::size_t kernel_dim = columns.size() - oracle::rank(mat);

  // Base monomials x^i y^j map to standard monomials of the same degree on both charts.
  std::size_t base_dim = 0;
  for (unsigned d = 0; d <= D; ++d) base_dim += d + 1;
  CHECK(kernel_dim == base_dim);
}

TEST_CASE("blowups of J and J^2 agree") {
  auto R = polynomial_ring({"x", "y"});
  auto M1 = build_blowup(R, polys(R, {"x", "y"}), polys(R, {"x", "y"}), 1);
  auto M2 = build_blowup(R, polys(R, {"x^2", "x*y", "y^2"}), polys(R, {"x", "y"}), 2);
  for (std::size_t a = 0; a < 2; ++a) {
    const auto& C1 = M1.charts[a];
    const auto& C2 = M2.charts[a];
    // u for g g' goes to the product of the u's.
    auto u = [&](std::size_t l) { return C1.ring->var(2 + l); };
    RingMap down(C2.ring, C1.ring,
                 {C1.ring->var(0), C1.ring->var(1), C1.ring->mul(u(0), u(0)), C1.ring->mul(u(0), u(1)),
                  C1.ring->mul(u(1), u(1))});
    RingMap up(C1.ring, C2.ring, {C2.ring->var(0), C2.ring->var(1), (*C2.ratio)[0], (*C2.ratio)[1]});
    CHECK(down.is_well_defined());
    CHECK(up.is_well_defined());
    for (std::size_t v = 0; v < C1.ring->nvars(); ++v) CHECK(down(up(C1.ring->var(v))) == C1.ring->var(v));
    for (std::size_t v = 0; v < C2.ring->nvars(); ++v) CHECK(up(down(C2.ring->var(v))) == C2.ring->var(v));
  }
}

TEST_CASE("exceptional powers") {
  auto R = polynomial_ring({"x", "y"});
  auto M = build_blowup(R, polys(R, {"x^2", "x*y", "y^2"}), polys(R, {"x", "y"}), 2);
  CHECK(exceptional_power_membership(M, R->parse("x*y"), 2) == std::vector<bool>{true, true});
  CHECK(exceptional_power_membership(M, R->parse("x"), 2)[0] == false);
  CHECK(exceptional_power_membership(M, R->parse("x^2"), 2)[0] == true);
  CHECK(exceptional_power_membership(M, R->parse("y^3"), 3)[1] == true);
  CHECK(exceptional_power_membership(M, R->parse("x"), 1) == std::vector<bool>{true, true});
}

TEST_CASE("closure elements are redundant on every chart") {
  auto R = polynomial_ring({"x", "y"});
  Ideal J(R, std::vector<std::string>{"x^2", "y^2"});
  MonomialIdeal cl = monomial_integral_closure(MonomialIdeal::from_ideal(J), 2);
  auto center = cl.to_ideal().gens();
  auto M = build_blowup(R, center, J.gens(), 2);
  CHECK(check_model(M).ok());
  for (const auto& g : center) {
    // g^2 in (J^2)^2 for every closure generator; the chart statement follows.
    CHECK(ideal_member(R->pow(g, 2), ideal_power(J, 4)));
    auto red = power_redundancy(M, g, 2);
    CHECK(std::all_of(red.begin(), red.end(), [](bool b) { return b; }));
  }
  // x^3 y is not in J^2 but is redundant.
  CHECK(!ideal_member(R->parse("x^3*y"), ideal_power(J, 2)));
  auto red = power_redundancy(M, R->parse("x^3*y"), 2);
  CHECK(std::all_of(red.begin(), red.end(), [](bool b) { return b; }));
  auto bad = power_redundancy(M, R->parse("x^3"), 4);
  CHECK(!std::all_of(bad.begin(), bad.end(), [](bool b) { return b; }));
}

TEST_CASE("model JSON") {
  auto R = polynomial_ring({"x", "y"});
  auto M = build_blowup(R, polys(R, {"x", "y"}), polys(R, {"x", "y"}), 1);
  auto j = to_json(M);
  CHECK(j["power"] == 1);
  CHECK(j["charts"].size() == 2);
  CHECK(j["overlaps"].size() == 1);
  CHECK(j["overlaps"][0]["charts"] == nlohmann::json::array({1, 2}));
  CHECK(j["restrictions"].size() == 2);
  CHECK(j["base"]["field"] == "Q");
  CHECK(j.dump() == to_json(build_blowup(R, polys(R, {"x", "y"}), polys(R, {"x", "y"}), 1)).dump());
}
