#include <doctest.h>

#include <random>
#include <set>

#include "gitfan/symmetry.hpp"

using namespace gitfan;

namespace {

const IntMatrix kCubeQ = int_matrix({{1, -1, -1, 1}, {1, 1, -1, -1}});

SymmetryGroup cube_group() {
  return group_closure({parse_permutation("(1,2)(3,4)", 4), parse_permutation("(1,2,3,4)", 4)}, 4);
}

IntMatrix g25_q() {
  return int_matrix({{1, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                     {1, 0, 0, 0, 1, 1, 1, 0, 0, 0},
                     {0, 1, 1, 0, 0, 0, -1, 1, 0, 0},
                     {0, 1, 0, 1, 0, -1, 0, 0, 1, 0},
                     {0, 0, 1, 1, -1, 0, 0, 0, 0, 1}});
}

SymmetryGroup g25_group() {
  return group_closure({with_signs(parse_permutation("(2,3)(5,6)(9,10)", 10), {1, 1, 1, 1, 1, 1, 1, -1, 1, 1}),
                        with_signs(parse_permutation("(1,5,9,10,3)(2,7,8,4,6)", 10), {1, 1, 1, 1, 1, 1, 1, 1, -1, -1})},
                       10);
}

Ideal pluecker() {
  const auto ring = make_ring(10);
  std::vector<Polynomial> gens;
  for (const auto* s : {"T5*T10-T6*T9+T7*T8", "T1*T9-T2*T7+T4*T5", "T1*T8-T2*T6+T3*T5", "T1*T10-T3*T7+T4*T6",
                        "T2*T10-T3*T9+T4*T8"}) {
    gens.push_back(parse_polynomial(s, ring));
  }
  return Ideal(ring, gens);
}

// Orbit of a subset by breadth-first search over the generators only.
std::set<std::uint64_t> generator_orbit(const SymmetryGroup& g, std::uint64_t mask) {
  std::set<std::uint64_t> seen{mask};
  std::vector<std::uint64_t> todo{mask};
  while (!todo.empty()) {
    const auto m = todo.back();
    todo.pop_back();
    for (const auto& s : g.generators()) {
      const auto img = s.apply_mask(m);
      if (seen.insert(img).second) todo.push_back(img);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("cycle notation") {
  const auto p = parse_permutation("(1,5,9,10,3)(2,7,8,4,6)", 10);
  CHECK(p.perm[0] == 4);
  CHECK(p.perm[2] == 0);
  CHECK(p.cycles() == "(1,5,9,10,3)(2,7,8,4,6)");
  CHECK(parse_permutation(" ( 2 , 3 ) ", 3).cycles() == "(2,3)");
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation("", 3).is_identity());
  CHECK_THROWS_AS(parse_permutation("(1,1)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("(1,4)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("(1)(1,2)", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("1,2", 3), ValidationError);
  CHECK_THROWS_AS(parse_permutation("(1,2", 3), ValidationError);
  CHECK_THROWS_AS(with_signs(p, {1, -1}), ValidationError);
}

TEST_CASE("group closure") {
  CHECK(cube_group().size() == 8);
  CHECK(g25_group().size() == 120);
  CHECK(SymmetryGroup::trivial(5).size() == 1);
  CHECK_THROWS_AS(group_closure({parse_permutation("(1,2,3,4,5,6,7)", 7), parse_permutation("(1,2)", 7)}, 7, 100),
                  ComputationError);
  const auto g = cube_group();
  CHECK(g[0].is_identity());
  for (const auto& a : g.elements()) {
    CHECK(g.index_of(inverse(a)) < g.size());
    CHECK(compose(a, inverse(a)).is_identity());
    for (const auto& b : g.elements()) CHECK(g.index_of(compose(a, b)) < g.size());
  }
}

TEST_CASE("induced matrices") {
  CHECK(induced_matrix(parse_permutation("(1,2)(3,4)", 4), kCubeQ) == to_rational(int_matrix({{-1, 0}, {0, 1}})));
  CHECK(induced_matrix(parse_permutation("(1,2,3,4)", 4), kCubeQ) == to_rational(int_matrix({{0, -1}, {1, 0}})));
  CHECK(induced_matrix(SignedPermutation::identity(4), kCubeQ) == QMatrix::identity(2));
  CHECK_THROWS_AS(induced_matrix(parse_permutation("(1,2)", 4), kCubeQ), ComputationError);
  CHECK_THROWS_AS(induced_matrix(parse_permutation("(1,2)", 4), int_matrix({{1, 1, 1, 1}, {2, 2, 2, 2}})),
                  ValidationError);
}

TEST_CASE("induced action is a homomorphism and commutes with the grading") {
  for (const auto& [g, q] : {std::pair{cube_group(), kCubeQ}, std::pair{g25_group(), g25_q()}}) {
    const auto mats = induced_matrices(g, q);
    const QMatrix qq = to_rational(q);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < q.cols(); ++j) {
        CHECK(mats[i] * to_rational(q.col(j)) == to_rational(q.col(g[i].perm[j])));
      }
      for (std::size_t k = 0; k < g.size(); k += 7) {
        const auto idx = g.index_of(compose(g[i], g[k]));
        CHECK(mats[idx] == mats[i] * mats[k]);
      }
    }
    (void)qq;
  }
}

TEST_CASE("ideal action") {
  const auto ring = make_ring(4);
  const Ideal a(ring, {parse_polynomial("T1*T3 - T2*T4", ring)});
  const auto rot = parse_permutation("(1,2,3,4)", 4);
  CHECK(act_on_ideal(rot, a).generators().front() == parse_polynomial("T2*T4 - T1*T3", ring));
  CHECK(verify_ideal_invariance(cube_group(), a));
  CHECK(act_on_ideal(SignedPermutation::identity(4), a) == a);

  const Ideal p = pluecker();
  CHECK(verify_ideal_invariance(g25_group(), p));
  const auto unsigned_gen = group_closure({parse_permutation("(2,3)(5,6)(9,10)", 10)}, 10);
  CHECK_FALSE(verify_ideal_invariance(unsigned_gen, p));
}

TEST_CASE("degree equivariance") {
  const Ideal p = pluecker();
  const auto g = g25_group();
  const auto q = g25_q();
  const auto mats = induced_matrices(g, q);
  for (std::size_t i = 0; i < g.size(); i += 11) {
    for (const auto& f : p.generators()) {
      const auto d = multidegree(f.terms().front().m, q);
      const auto img = act_on_polynomial(g[i], f);
      for (const auto& t : img.terms()) CHECK(to_rational(multidegree(t.m, q)) == mats[i] * to_rational(d));
    }
  }
}

TEST_CASE("subset orbits") {
  const auto g = cube_group();
  const auto o = orbit_of_subset(g, FaceIndexSet::from_indices({1}));
  CHECK(o.size() == 4);
  const auto reps = subset_orbit_representatives(g);
  CHECK(reps.size() == 6);
  CHECK(subset_orbit_representatives(g25_group()).size() == 34);
  CHECK(subset_orbit_representatives(SymmetryGroup::trivial(3)).size() == 8);
}

TEST_CASE("subset orbit representatives partition all subsets") {
  std::mt19937 rng(61);
  std::vector<SymmetryGroup> groups{cube_group(), g25_group()};
  for (int i = 0; i < 3; ++i) {
    const std::size_t r = 6 + rng() % 7;
    std::vector<std::size_t> p(r);
    for (std::size_t j = 0; j < r; ++j) p[j] = j;
    std::shuffle(p.begin(), p.end(), rng);
    SignedPermutation s = SignedPermutation::identity(r);
    s.perm = p;
    groups.push_back(group_closure({s, parse_permutation("(1,2)", r)}, r, 100000));
  }
  for (const auto& g : groups) {
    const std::size_t r = g.degree();
    std::vector<int> hit(std::size_t{1} << r, 0);
    for (const auto& rep : subset_orbit_representatives(g)) {
      const auto orbit = generator_orbit(g, rep.bits());
      CHECK(*orbit.begin() == rep.bits());
      CHECK(orbit.size() == orbit_of_subset(g, rep).size());
      for (auto m : orbit) ++hit[m];
    }
    CHECK(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("cone orbits and compatibility with orthant faces") {
  const auto g = cube_group();
  const auto mats = induced_matrices(g, kCubeQ);
  const Cone gamma2 = Cone::from_rays(2, {{1, 1}, {-1, 1}});
  CHECK(orbit_of_cone(mats, gamma2).size() == 4);
  const auto rot = induced_matrix(parse_permutation("(1,2,3,4)", 4), kCubeQ);
  std::set<std::string> keys{gamma2.canonical_key()};
  Cone c = gamma2;
  for (int i = 0; i < 3; ++i) {
    c = act_on_cone(rot, c);
    keys.insert(c.canonical_key());
  }
  CHECK(keys.size() == 4);
  CHECK(act_on_cone(QMatrix::identity(2), gamma2).canonical_key() == gamma2.canonical_key());

  const auto image = [](const IntMatrix& q, FaceIndexSet s) {
    std::vector<IntVector> rays;
    for (auto i : s.indices()) rays.push_back(q.col(i - 1));
    return Cone::from_rays(q.rows(), rays);
  };
  for (const auto& [grp, q] : {std::pair{cube_group(), kCubeQ}, std::pair{g25_group(), g25_q()}}) {
    const auto ms = induced_matrices(grp, q);
    const std::uint64_t n = std::uint64_t{1} << q.cols();
    for (std::uint64_t m = 0; m < n; m += (q.cols() > 4 ? 37 : 1)) {
      const FaceIndexSet s(m);
      const Cone base = image(q, s);
      for (std::size_t i = 0; i < grp.size(); i += (q.cols() > 4 ? 13 : 1)) {
        CHECK(act_on_cone(ms[i], base).canonical_key() == image(q, grp[i].apply(s)).canonical_key());
      }
    }
  }
}
