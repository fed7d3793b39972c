#include "schottky/bounds.hpp"
#include "schottky/errors.hpp"
#include "schottky/serialize.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace schottky;
using testing_support::Q;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261019);
  return gen;
}

// Uniform rational in (lo, hi) with denominator den.
Rational random_rational(const Rational& lo, const Rational& hi, long den = 1000003) {
  std::uniform_int_distribution<long> pick(1, den - 1);
  return lo + (hi - lo) * Rational(pick(rng()), den);
}

PaperParams random_params() { return {random_rational(1, 10), random_rational(0, Q("1/2"))}; }

ReducedWord random_word(std::size_t length) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::vector<Letter> letters;
  while (letters.size() < length) {
    const Letter x = kLetters[pick(rng())];
    if (!letters.empty() && inverse(letters.back()) == x) continue;
    letters.push_back(x);
  }
  return ReducedWord(letters);
}

}  // namespace

TEST_CASE("pairing identity holds exactly for random parameters") {
  for (int i = 0; i < 50; ++i) {
    const PaperParams p = random_params();
    const GeneratorPair g = build_generators(p);
    const SchottkySystem sys = build_circles(p);
    CHECK(image_under_map(sys.circles[2], g.h1) == sys.circles[1]);
    CHECK(image_under_map(sys.circles[3], g.h2) == sys.circles[0]);
  }
}

TEST_CASE("fixed points of h** are +-sqrt(A)") {
  for (int i = 0; i < 20; ++i) {
    const PaperParams p = random_params();
    const Rational a = (p.lambda + 2) * (p.lambda + 2) - (1 - p.kappa) * (1 - p.kappa);
    const auto [u, v] = fixed_points(build_generators(p).h2);
    CHECK(u == BoundaryPoint(-AlgebraicPoint::sqrt(a)));
    CHECK(v == BoundaryPoint(AlgebraicPoint::sqrt(a)));
    const PaperParams zero{p.lambda, 0};
    CHECK(fixed_points(build_generators(zero).h2).second == BoundaryPoint(derived_constants(zero).tau));
  }
}

TEST_CASE("contraction dichotomy across the isometric circle") {
  for (const char* lambda : {"2", "5/3"}) {
    const PaperParams p = testing_support::params(lambda, "1e-12");
    const GeneratorPair g = build_generators(p);
    const SchottkySystem sys = build_circles(p);
    for (int which = 0; which < 2; ++which) {
      const MobiusMap& h = which == 0 ? g.h1 : g.h2;
      const Semicircle& c = sys.circles[which == 0 ? 2 : 3];
      const Rational lo = c.p().value().as_rational(), hi = c.q().value().as_rational();
      for (int i = 0; i < 200; ++i) {
        CHECK(boundary_derivative(h, random_rational(lo, hi)) > AlgebraicPoint(1));
        const Rational left = random_rational(lo - 20, lo), right = random_rational(hi, hi + 20);
        CHECK(boundary_derivative(h, left) < AlgebraicPoint(1));
        CHECK(boundary_derivative(h, right) < AlgebraicPoint(1));
      }
      CHECK(boundary_derivative(h, c.p().value()) == AlgebraicPoint(1));
      CHECK(boundary_derivative(h, c.q().value()) == AlgebraicPoint(1));
    }
  }
}

TEST_CASE("closed form matches the commutator fixed points") {
  PrecisionScope scope;
  const Real tol("1e-30");
  std::vector<PaperParams> cases{testing_support::params("2", "0"), testing_support::params("5/3", "0")};
  for (int i = 0; i < 10; ++i) {
    cases.emplace_back(Rational(2), random_rational(0, Q("1e-6")));
    cases.emplace_back(Q("5/3"), random_rational(0, Q("1e-6")));
  }
  for (const auto& p : cases) {
    const ClosedFormFixedPoints cf = commutator_fixed_points_closed_form(p);
    const auto [u, v] = fixed_points(commutator_map(p));
    CHECK(abs(to_real(cf.z_minus) - to_real(u.value())) < tol);
    CHECK(abs(to_real(cf.z_plus) - to_real(v.value())) < tol);
  }
}

TEST_CASE("lemma ratios and linearity") {
  PrecisionScope scope;
  for (int i = 0; i < 10; ++i) {
    const PaperParams p{random_rational(1, 10), random_rational(0, Q("1e-6"))};
    const Real ratio = lemma23_bound(p).value / lemma22_bound(p).value;
    CHECK(abs(ratio - to_real(p.lambda + 2)) < Real("1e-45"));
    const Real eps = to_real(random_rational(0, 1));
    const Real c = to_real(random_rational(0, 100));
    const Real lhs = lemma24_bound(p, c * eps).value, rhs = c * lemma24_bound(p, eps).value;
    CHECK(abs(lhs - rhs) <= abs(rhs) * Real("1e-45"));
  }
}

TEST_CASE("interior points stay in the upper half plane") {
  std::uniform_real_distribution<double> coord(-50, 50), height(1e-6, 50);
  for (int i = 0; i < 1000; ++i) {
    Rational a = random_rational(-20, 20), b = random_rational(-20, 20), c = random_rational(-20, 20),
             d = random_rational(-20, 20);
    // Swapping the rows flips the sign of the determinant.
    if (a * d - b * c < 0) std::swap(a, c), std::swap(b, d);
    if (a * d - b * c == 0) continue;
    const MobiusMap g(a, b, c, d);
    CHECK(apply_interior(g, {coord(rng()), height(rng())}).y > 0);
  }
}

TEST_CASE("inverse is an involution and compose is a homomorphism") {
  const Generators gens = build_circles(random_params()).generators();
  for (int i = 0; i < 100; ++i) {
    const ReducedWord u = random_word(1 + i % 4), v = random_word(1 + (i / 4) % 4);
    const MobiusMap g = word_map(u, gens);
    CHECK(inverse(inverse(g)) == g);
    CHECK(compose(g, inverse(g)) == MobiusMap::identity());
    if (ReducedWord::concatenation_reduced(u, v))
      CHECK(word_map(ReducedWord::concat(u, v), gens) == compose(g, word_map(v, gens)));
  }
}

TEST_CASE("chain rule equals the matrix derivative") {
  const Generators gens = build_circles(testing_support::params("2", "1e-12")).generators();
  for (int i = 0; i < 100; ++i) {
    const ReducedWord w = random_word(1 + i % 4);
    const Rational x = random_rational(-30, 30);
    try {
      CHECK(chainrule_derivative(w, x, gens) == boundary_derivative(word_map(w, gens), x));
    } catch (const PoleError&) {
      // A random rational hitting a pole is vanishingly rare; skip it.
    }
  }
}

TEST_CASE("word counts follow 4 * 3^(l-1)") {
  std::size_t total = 0, layer = 4;
  const auto words = enumerate_words(8);
  for (unsigned l = 1; l <= 8; ++l, layer *= 3) {
    total += layer;
    const auto n = std::count_if(words.begin(), words.end(), [&](const ReducedWord& w) { return w.length() == l; });
    CHECK(static_cast<std::size_t>(n) == layer);
  }
  CHECK(words.size() == total);
}

TEST_CASE("orbits are laminar with unique nesting parents") {
  const SchottkySystem sys = build_circles(testing_support::params("2", "1e-12"));
  const auto orbit = orbit_circles(sys, 3);
  std::vector<Semicircle> circles;
  for (const auto& e : orbit) circles.push_back(e.circle);
  CHECK_FALSE(find_crossing_pair(circles).has_value());
  // Every non-base circle has a tightest enclosing circle, and it is unique.
  for (std::size_t i = 4; i < circles.size(); ++i) {
    std::vector<std::size_t> parents;
    for (std::size_t j = 0; j < circles.size(); ++j)
      if (j != i && nested_inside(circles[i], circles[j])) parents.push_back(j);
    REQUIRE_FALSE(parents.empty());
    std::size_t tight = 0;
    for (std::size_t j : parents) {
      bool minimal = true;
      for (std::size_t k : parents) minimal &= k == j || !nested_inside(circles[k], circles[j]);
      tight += minimal;
    }
    CHECK(tight == 1);
  }
}

TEST_CASE("algebraic values survive a JSON round trip") {
  for (int i = 0; i < 50; ++i) {
    const AlgebraicPoint x(random_rational(-5, 5), random_rational(-5, 5), random_rational(0, 50, 97));
    CHECK(algebraic_from_json(Json::parse(to_json(x).dump())) == x);
  }
}
