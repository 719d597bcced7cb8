#include <doctest.h>

#include <random>

#include "gitfan/groebner.hpp"
#include "oracles.hpp"

using namespace gitfan;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("weighted ordering with negative reverse lexicographic tie-break") {
  const auto ord = MonomialOrder::weighted({1, 1});
  CHECK(ord.greater(mono({1, 0}), mono({0, 1})));

  const auto ord2 = MonomialOrder::weighted({2, 1});
  CHECK(ord2.compare(mono({1, 0}), mono({0, 2})) > 0);
  CHECK(ord2.greater(mono({0, 3}), mono({1, 0})));

  // Tie-break sequence (2,1): variable 1 is compared first.
  const auto ord3 = MonomialOrder::weighted({1, 1}, {1, 0});
  CHECK(ord3.greater(mono({0, 1}), mono({1, 0})));

  CHECK_THROWS_AS(MonomialOrder::weighted({1, 0}), ComputationError);
}

TEST_CASE("every non-constant monomial is greater than 1") {
  std::mt19937 rng(1);
  for (int iter = 0; iter < 200; ++iter) {
    QVector w(4);
    for (auto& x : w) x = Rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3));
    for (auto& x : w) x.canonicalize();
    std::vector<std::size_t> seq{0, 1, 2, 3};
    std::shuffle(seq.begin(), seq.end(), rng);
    const auto ord = MonomialOrder::weighted(w, seq);
    Monomial m(4);
    for (auto& e : m.e) e = rng() % 3;
    m.update_mask();
    if (m.is_one()) continue;
    CHECK(ord.compare(m, Monomial(4)) > 0);
  }
}

TEST_CASE("parse and print") {
  const auto ring = make_ring(4);
  const auto g = parse_polynomial("T1*T3 - T2*T4", ring);
  CHECK(g.size() == 2);
  CHECK(g.to_string() == "T1*T3 - T2*T4");
  CHECK(parse_polynomial("T(1)*T(3) - T(2)*T(4)", ring) == g);
  CHECK(parse_polynomial("-(T2*T4) + T3*T1", ring) == g);
  CHECK(parse_polynomial("(T1 + T2)^2", ring).to_string() == "T1^2 + 2*T1*T2 + T2^2");
  CHECK(parse_polynomial("3*T1 - 3*T1", ring).is_zero());
  CHECK(parse_polynomial("0", ring).to_string() == "0");

  CHECK_THROWS_AS(parse_polynomial("T(1)^^2", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2 T1", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("T1T2", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("T(5)", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("T1 +", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(T1", ring), ParseError);
  try {
    parse_polynomial("T1 +\n  * T2", ring);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(9);
  const auto ring = make_ring(std::vector<std::string>{"x", "y", "z"});
  const auto ord = MonomialOrder::degrevlex(3);
  for (int iter = 0; iter < 100; ++iter) {
    const Polynomial f = oracle::random_polynomial(rng, ring, 4, 3, 5);
    CHECK(parse_polynomial(f.to_string(ord), ring) == f);
  }
  const auto half = Rational(1, 2) * parse_polynomial("x - 3*y", ring);
  CHECK(half.to_string() == "1/2*x - 3/2*y");
}

TEST_CASE("normal form") {
  const auto ring = make_ring(4);
  const auto ord = MonomialOrder::degrevlex(4);
  const auto g = parse_polynomial("T1*T3 - T2*T4", ring);
  const auto t13 = parse_polynomial("T1*T3", ring);
  // Leading term under this ordering is T1*T3 (T4 compared first, exponent 0 wins).
  CHECK(g.leading_term(ord).m == t13.terms().front().m);
  const auto r = normal_form(t13, {g}, ord);
  CHECK(r == parse_polynomial("T2*T4", ring));
  CHECK(t13 - r == g);
  CHECK(normal_form(g, {g}, ord).is_zero());
  CHECK(normal_form(Polynomial::constant(ring, 1), {g}, ord) == Polynomial::constant(ring, 1));
}

TEST_CASE("normal form agrees with the naive division oracle") {
  std::mt19937 rng(21);
  const auto ring = make_ring(3);
  for (int iter = 0; iter < 100; ++iter) {
    const auto ord = MonomialOrder::weighted({1 + Rational(rng() % 2), 1, 2});
    std::vector<Polynomial> g;
    for (int i = 0; i < 3; ++i) {
      auto p = oracle::random_polynomial(rng, ring, 3, 2, 3);
      if (!p.is_zero()) g.push_back(p);
    }
    if (g.empty()) continue;
    const auto f = oracle::random_polynomial(rng, ring, 4, 4, 3);
    const auto r = normal_form(f, g, ord);
    CHECK(oracle::irreducible(r, g, ord));
    CHECK(r == oracle::divide(f, g, ord));
  }
}

TEST_CASE("buchberger examples") {
  const auto ring = make_ring(3);
  const auto ord = MonomialOrder::degrevlex(3);
  const auto gb = buchberger({parse_polynomial("T1^2 - T2", ring), parse_polynomial("T1*T2 - T3", ring)}, ord);
  CHECK(oracle::is_groebner(gb, ord));
  for (const auto* lead : {"T1^2", "T1*T2", "T2^2"}) {
    const Monomial m = parse_polynomial(lead, ring).terms().front().m;
    bool in_lead_ideal = false;
    for (const auto& g : gb) in_lead_ideal = in_lead_ideal || g.leading_term(ord).m.divides(m);
    CHECK(in_lead_ideal);
  }
  const auto single = parse_polynomial("T1*T3 - T2^2", ring);
  const auto gb1 = buchberger({single}, ord);
  REQUIRE(gb1.size() == 1);
  CHECK(gb1.front() == single.monic(ord));
}

TEST_CASE("buchberger on the Pluecker relations") {
  const auto ring = make_ring(10);
  std::vector<Polynomial> gens;
  for (const auto* s : {"T5*T10-T6*T9+T7*T8", "T1*T9-T2*T7+T4*T5", "T1*T8-T2*T6+T3*T5", "T1*T10-T3*T7+T4*T6",
                        "T2*T10-T3*T9+T4*T8"}) {
    gens.push_back(parse_polynomial(s, ring));
  }
  const auto ord = MonomialOrder::degrevlex(10);
  const auto gb = buchberger(gens, ord);
  CHECK(oracle::is_groebner(gb, ord));
  for (const auto& g : gens) CHECK(oracle::divide(g, gb, ord).is_zero());
  for (const auto& g : gb) CHECK(g.leading_term(ord).c == 1);
}

TEST_CASE("buchberger on random ideals: criterion and ordering independence") {
  std::mt19937 rng(33);
  const auto ring = make_ring(4);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Polynomial> gens;
    const int ngens = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ngens; ++i) {
      auto p = oracle::random_polynomial(rng, ring, 3, 2, 3);
      if (!p.is_zero()) gens.push_back(p);
    }
    const auto o1 = MonomialOrder::degrevlex(4);
    const auto o2 = MonomialOrder::weighted({3, 1, 2, 1}, {2, 0, 3, 1});
    const auto g1 = buchberger(gens, o1);
    const auto g2 = buchberger(gens, o2);
    CHECK(oracle::is_groebner(g1, o1));
    CHECK(oracle::is_groebner(g2, o2));
    for (const auto& f : gens) CHECK(oracle::divide(f, g1, o1).is_zero());
    for (const auto& f : g1) CHECK(oracle::divide(f, g2, o2).is_zero());
    for (const auto& f : g2) CHECK(oracle::divide(f, g1, o1).is_zero());
  }
}

TEST_CASE("ideal membership and equality") {
  const auto ring = make_ring(3);
  Ideal a(ring, {parse_polynomial("T1*T2", ring), parse_polynomial("T1*T3", ring)});
  CHECK(a.contains(parse_polynomial("T1*T2*T3 + T1*T3^2", ring)));
  CHECK_FALSE(a.contains(parse_polynomial("T1", ring)));
  Ideal b(ring, {parse_polynomial("T1*T2 + T1*T3", ring), parse_polynomial("T1*T3", ring)});
  CHECK(a == b);
  CHECK_FALSE(a.is_unit());
  Ideal one(ring, {parse_polynomial("T1 - 1", ring), parse_polynomial("T1", ring)});
  CHECK(one.is_unit());
}
