#pragma once

#include "schottky/geometry.hpp"
#include "schottky/words.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace schottky {

// map(circles[source]) should equal circles[target]; map sends the exterior
// of the source onto the interior of the target.
struct GeneratorPairing {
  MobiusMap map;
  int source = 0;  // index into SchottkySystem::circles
  int target = 0;
};

// Exactly two pairings: pairings[0] is generator A, pairings[1] is B.
// Circle labels are SC1..SC4 for indices 0..3.
struct SchottkySystem {
  std::array<Semicircle, 4> circles;
  std::array<GeneratorPairing, 2> pairings;

  Generators generators() const { return make_generators(pairings[0].map, pairings[1].map); }
  // Circle whose interior receives everything the letter maps in.
  int target_circle(Letter x) const;
  // Circle whose exterior the letter maps inward (the target of its inverse).
  int source_circle(Letter x) const { return target_circle(inverse(x)); }

  // Throws DomainError naming the mismatched endpoints if a pairing fails.
  void validate_pairings() const;
};

std::string circle_label(int index);

enum class FailureKind { disjointness, tangency, pairing, orientation };

std::string to_string(FailureKind k);

struct ClassicalFailure {
  FailureKind kind;
  std::vector<int> circles;             // indices involved
  std::vector<BoundaryPoint> points;    // exact witness points
  std::string detail;
};

struct ClassicalVerdict {
  std::vector<ClassicalFailure> failures;
  bool passed() const noexcept { return failures.empty(); }
};

// Ping-pong check on the given circles only: pairwise disjoint closed
// intervals, exact pairing, and inf mapped into the open target interior by
// each generator and its inverse.
ClassicalVerdict classical_check(const SchottkySystem& system);

struct OrbitEntry {
  ReducedWord word;
  int seed = 0;  // base circle index
  Semicircle circle;
  std::size_t depth() const noexcept { return word.length(); }
};

// Base circles, then for each reduced word w of length <= max_depth and each
// base circle other than the source circle of w's last letter, w(circle).
// Order: depth, word, seed. `workers` > 1 splits the work by first letter;
// the result does not depend on it.
std::vector<OrbitEntry> orbit_circles(const SchottkySystem& system, unsigned max_depth, unsigned workers = 1);

enum class ChainInterval { upper, middle, lower, none };  // [tau, l+3), (l+1, tau), (-tau, l+1]

std::string to_string(ChainInterval c);

struct FamilyMember {
  OrbitEntry entry;
  ChainInterval meets = ChainInterval::none;
  bool contains_minus_tau = false;
};

struct NestedFamily {
  std::vector<FamilyMember> chain;  // ordered outermost to innermost about -tau
  std::size_t candidates_examined = 0;
  bool chain_verified = false;       // every consecutive pair keeps SC^j from -tau
  std::vector<std::string> findings; // empty chain, broken links, ...
};

// Orbit circles meeting (-tau, lambda+3) in exactly one endpoint and
// separating +-tau, ordered by nesting, with each consecutive link checked.
NestedFamily nested_family(const SchottkySystem& system, unsigned max_depth, const AlgebraicPoint& tau,
                           const Rational& lambda);

struct FundamentalDomain {
  std::array<Semicircle, 4> boundary;
  AlgebraicPoint window_lo;
  AlgebraicPoint window_hi;
  std::vector<GapInterval> real_trace;     // free boundary inside the window
  std::vector<BoundaryPoint> vertices;     // the eight circle endpoints, ascending
  bool infinity_is_ordinary = true;
};

// Complement of the four half-disks. Throws DomainError when the system fails
// classical_check.
FundamentalDomain fundamental_domain(const SchottkySystem& system, const AlgebraicPoint& window_lo,
                                     const AlgebraicPoint& window_hi);

}  // namespace schottky
