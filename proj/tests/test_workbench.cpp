#include "doctest.h"

#include <fstream>
#include <set>

#include "oracles.hpp"
#include "skoda/workbench.hpp"

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

// Stage-zero equation d_1 z_0 = h on every chart, recomputed from the witness.
bool stage_zero_holds(const TotalComplexSystem& S, const Poly& h, const Witness& w) {
  for (const auto& cell : S.cover.cells[0]) {
    auto lhs = S.L_on_cell.at(cell).differential(1).apply(w.z[0].at(cell));
    if (!(lhs[0] == S.base_to_cell.at(cell)(h))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Briancon-Skoda containment on small monomial ideals") {
  auto R = polynomial_ring({"x", "y"});
  auto r = bs_check(Ideal(R, polys(R, {"x^2", "y^2"})), 1);
  CHECK(r.holds);
  CHECK(r.n == 2);
  std::vector<Poly> gens;
  for (const auto& g : r.generators) {
    gens.push_back(g.g);
    CHECK(g.in_Jk);
    CHECK(recheck(g.verdict, g.g, Ideal(R, polys(R, {"x^2", "y^2"})), 2));
  }
  CHECK(strings(gens) == std::set<std::string>{"x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"});

  auto m = bs_check(Ideal(R, polys(R, {"x", "y"})), 2);
  CHECK(m.holds);
  CHECK(m.generators.size() == 4);

  // Supplied generators are certified, then checked like computed ones.
  auto weak = bs_check(Ideal(R, polys(R, {"x", "y"})), 2, std::vector<ClosureHint>{{R->parse("x^3"), 0, {}}});
  CHECK(weak.holds);
  CHECK_THROWS_AS(bs_check(Ideal(R, polys(R, {"x^2", "y^2"})), 1, std::vector<ClosureHint>{{R->parse("x^3"), 0, {}}}),
                  CertificationError);
}

TEST_CASE("main theorem witnesses") {
  auto R = polynomial_ring({"x", "y"});
  auto f = polys(R, {"x", "y"});
  auto r = main_theorem_verify(R, R->parse("x*y"), f, 1);
  REQUIRE(r.vanishing.witness);
  CHECK(!r.alarm);
  CHECK(r.vanishing.method == LiftMethod::Twisted);
  CHECK(verify_witness(*r.system, R->parse("x*y"), *r.vanishing.witness));
  CHECK(stage_zero_holds(*r.system, R->parse("x*y"), *r.vanishing.witness));
  // Tampering with the witness is detected.
  Witness bad = *r.vanishing.witness;
  auto& v = bad.z[0].begin()->second;
  v[0] = r.system->cover.rings.at(bad.z[0].begin()->first)->add(v[0], r.system->cover.rings.at({0})->one());
  CHECK(!verify_witness(*r.system, R->parse("x*y"), bad));

  auto p = main_theorem_verify(R, R->parse("x^2"), f, 1);
  CHECK(p.vanishing.witness);

  auto q = main_theorem_verify(R, R->parse("x^3*y"), polys(R, {"x^2", "y^2"}), 1);
  CHECK(q.vanishing.witness);
  CHECK(q.certificate.member());

  CHECK_THROWS_AS(main_theorem_verify(R, R->parse("x"), f, 1), CertificationError);
}

TEST_CASE("main theorem on three generators") {
  auto R = polynomial_ring({"x", "y", "z"});
  auto f = polys(R, {"x", "y", "z"});
  for (const char* h : {"x*y*z", "x^3", "x*y^2"}) {
    auto r = main_theorem_verify(R, R->parse(h), f, 1);
    CHECK(r.vanishing.witness);
    CHECK(r.system->cover.cells.size() == 3);
  }
}

TEST_CASE("direct and twisted routes agree on small systems") {
  auto R = polynomial_ring({"x", "y"});
  auto f = polys(R, {"x", "y"});
  auto M = closure_model(R, f, 1, {});
  auto S = total_system(M, f, 1);
  REQUIRE(S.twist);
  for (const char* h : {"x^2", "x*y", "y^2 + x*y", "x^3*y"}) {
    CHECK(class_vanishes_in_H0(S, R->parse(h)).witness);
    CHECK(class_vanishes_direct(S, R->parse(h)).witness);
  }
}

TEST_CASE("total differential squares to zero") {
  auto R = polynomial_ring({"x", "y", "z"});
  auto f = polys(R, {"x", "y", "z"});
  auto M = closure_model(R, f, 1, {});
  auto S = total_system(M, f, 1);
  for (std::size_t j = 0; j <= S.L.length(); ++j)
    for (std::size_t p = 0; p < S.cover.cells.size(); ++p) {
      Cochain x;
      std::size_t width = j < S.L.ranks.size() ? S.L.ranks[j] : 0;
      for (const auto& cell : S.cover.cells[p]) {
        const auto& C = S.cover.rings.at(cell);
        std::vector<Poly> v;
        for (std::size_t q = 0; q < width; ++q) v.push_back(C->var((q + cell.size()) % C->nvars()));
        x[cell] = v;
      }
      CHECK(total_differential_squares_to_zero(S, j, p, x));
    }
}

TEST_CASE("chart-level screen") {
  auto R = polynomial_ring({"x", "y"});
  auto f = polys(R, {"x", "y"});
  CHECK(chart_level_check(R, R->parse("x*y"), f, 1) == std::vector<bool>{true, true});
  CHECK(chart_level_check(R, R->parse("x"), f, 2)[1] == false);
  CHECK(chart_level_check(R, R->parse("x^2"), f, 1)[0] == true);
  CHECK(chart_level_check(R, R->parse("y^3"), f, 2)[1] == true);
}

TEST_CASE("witnesses imply the chart-level screen") {
  auto R = polynomial_ring({"x", "y"});
  for (const auto& fs : std::vector<std::vector<std::string>>{{"x", "y"}, {"x^2", "y^2"}, {"x^2", "y^3"}})
    for (unsigned k : {1u, 2u}) {
      auto f = polys(R, fs);
      auto G = closure_generators(Ideal(R, f), static_cast<unsigned>(f.size()) + k - 1);
      for (const auto& g : G.accepted) {
        auto r = main_theorem_verify(R, g.g, f, k);
        REQUIRE(r.vanishing.witness);
        auto screen = chart_level_check(R, g.g, f, k);
        for (bool b : screen) CHECK(b);
      }
    }
}

TEST_CASE("Bir pre-closure on a regular base coincides with J^k") {
  auto R = polynomial_ring({"x", "y"});
  for (const auto& fs : std::vector<std::vector<std::string>>{{"x", "y"}, {"x^2", "y^2"}, {"x*y", "y^2"}})
    for (unsigned k : {1u, 2u}) {
      Ideal J(R, polys(R, fs));
      auto M = closure_model(R, J.gens(), k, {});
      Ideal Jk = ideal_power(J, k);
      for (unsigned d = 0; d <= 2 * k + 1; ++d)
        for (const auto& e : oracle::exponents_of_degree(2, d)) {
          Poly h = Poly::term(R->ambient(), Monomial(e), Coeff(1));
          auto b = bir_preclosure_member(h, J, k, M);
          INFO(h.to_string(), " J=", J.to_string(), " k=", k);
          CHECK(b.member == ideal_member(h, Jk));
        }
    }
}

TEST_CASE("certified closure generators are in the Bir pre-closure") {
  auto R = polynomial_ring({"x", "y"});
  Ideal J(R, polys(R, {"x^2", "y^2"}));
  auto G = closure_generators(J, 2);
  std::vector<Poly> center;
  for (const auto& g : G.accepted) center.push_back(g.g);
  auto M = build_blowup(R, center, J.gens(), 2);
  for (const auto& g : G.accepted) {
    auto b = bir_preclosure_member(g.g, J, 1, M);
    CHECK(b.member);
  }
  CHECK(bir_preclosure_member(R->parse("x^2"), J, 1, M).route == "base");
}

TEST_CASE("Bir pre-closure with charts not indexed by J") {
  auto R = polynomial_ring({"x", "y"});
  Ideal J(R, polys(R, {"x^2", "y^2"}));
  // Blowup of the maximal ideal; the direct route is used.
  auto M = build_blowup(R, polys(R, {"x", "y"}), polys(R, {"x", "y"}), 1);
  auto b = bir_preclosure_member(R->parse("x*y"), J, 1, M);
  CHECK(b.route == "direct");
  CHECK(!b.member);
  CHECK(bir_preclosure_member(R->parse("x^2*y^2"), J, 2, M).route == "base");
}

TEST_CASE("elliptic curve times the projective line") {
  auto R = elliptic_cross_p1();
  CHECK(R->vars() == std::vector<std::string>{"a", "b", "c", "d", "e", "g"});
  // Independent check: every relation vanishes under the parametrization.
  auto P = make_ring(Field::rationals(), {"x", "y", "z", "u", "v"});
  auto par = [&](const char* s) { return RingPresentation(P, {}).parse(s); };
  std::vector<Poly> images{par("x*u"), par("x*v"), par("y*u"), par("y*v"), par("z*u"), par("z*v")};
  Ideal cubic(polynomial_ring(P), std::vector<std::string>{"x^3 + y^3 + z^3"});
  for (const auto& g : R->relations()) CHECK(cubic.contains(substitute(g, images, P)));
  CHECK(R->relations().size() == 7);

  auto cx = counterexample_suite();
  CHECK(cx.segre_relation);
  CHECK(cx.h_cube_in_Jp6);
  CHECK(cx.h_not_in_J);
  CHECK(!cx.report.holds);
  REQUIRE(cx.report.failing.size() == 1);
  CHECK(cx.report.failing[0] == R->parse("a*c^2*e"));
  CHECK(cx.as_expected());
  CHECK(recheck(cx.report.generators[0].verdict, R->parse("a*c^2*e"), Ideal(R, polys(R, {"a^2", "e^2"})), 2));
}

TEST_CASE("cached elliptic fixture matches the derivation") {
  std::ifstream in(std::string(SKODA_SOURCE_DIR) + "/fixtures/rings/elliptic_cross_p1.json");
  REQUIRE(in.good());
  auto j = nlohmann::json::parse(in);
  auto base = polynomial_ring(j["vars"].get<std::vector<std::string>>());
  auto cached = ring_quotient(base, j["relations"].get<std::vector<std::string>>());
  CHECK(strings(cached->relations()) == strings(elliptic_cross_p1()->relations()));
}

TEST_CASE("report JSON") {
  auto R = polynomial_ring({"x", "y"});
  auto r = bs_check(Ideal(R, polys(R, {"x^2", "y^2"})), 1);
  auto j = to_json(r);
  CHECK(j["verdict"] == "HOLDS");
  CHECK(j["generators"].size() == 5);
  CHECK(!j.contains("seconds"));
  CHECK(to_json(r, true).contains("seconds"));

  auto m = to_json(main_theorem_verify(R, R->parse("x*y"), polys(R, {"x", "y"}), 1));
  CHECK(m["alarm"] == false);
  CHECK(m["method"] == "twisted");
  CHECK(m["witness"]["stages"].size() == 2);
}
