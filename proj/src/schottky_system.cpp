#include "schottky/schottky_system.hpp"

#include "schottky/errors.hpp"

#include <algorithm>
#include <future>

namespace schottky {

std::string circle_label(int index) { return "SC" + std::to_string(index + 1); }

std::string to_string(FailureKind k) {
  switch (k) {
    case FailureKind::disjointness: return "disjointness";
    case FailureKind::tangency: return "tangency";
    case FailureKind::pairing: return "pairing";
    case FailureKind::orientation: return "orientation";
  }
  return "unknown";
}

std::string to_string(ChainInterval c) {
  switch (c) {
    case ChainInterval::upper: return "[tau, lambda+3)";
    case ChainInterval::middle: return "(lambda+1, tau)";
    case ChainInterval::lower: return "(-tau, lambda+1]";
    case ChainInterval::none: return "none";
  }
  return "none";
}

int SchottkySystem::target_circle(Letter x) const {
  switch (x) {
    case Letter::A: return pairings[0].target;
    case Letter::A_inv: return pairings[0].source;
    case Letter::B: return pairings[1].target;
    case Letter::B_inv: return pairings[1].source;
  }
  return 0;
}

void SchottkySystem::validate_pairings() const {
  for (std::size_t i = 0; i < pairings.size(); ++i) {
    const auto& pr = pairings[i];
    const Semicircle image = image_under_map(circles[pr.source], pr.map);
    if (!(image == circles[pr.target])) {
      throw DomainError("pairing " + std::string(i == 0 ? "A" : "B") + " maps " + circle_label(pr.source) + " to " +
                        image.str() + ", expected " + circle_label(pr.target) + " = " + circles[pr.target].str());
    }
  }
}

ClassicalVerdict classical_check(const SchottkySystem& system) {
  ClassicalVerdict verdict;
  const auto& cs = system.circles;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const CircleRelation rel = relation(cs[i], cs[j]);
      if (rel == CircleRelation::disjoint) continue;
      ClassicalFailure f;
      f.circles = {i, j};
      if (rel == CircleRelation::tangent) {
        f.kind = FailureKind::tangency;
        for (const BoundaryPoint& x : {cs[i].p(), cs[i].q()}) {
          if (on_circle(cs[j], x)) f.points.push_back(x);
        }
      } else {
        f.kind = FailureKind::disjointness;
        f.points = {cs[i].p(), cs[i].q(), cs[j].p(), cs[j].q()};
      }
      f.detail = circle_label(i) + " and " + circle_label(j) + " are " + to_string(rel);
      verdict.failures.push_back(std::move(f));
    }
  }
  for (std::size_t k = 0; k < system.pairings.size(); ++k) {
    const auto& pr = system.pairings[k];
    const std::string name = k == 0 ? "A" : "B";
    const Semicircle image = image_under_map(cs[pr.source], pr.map);
    if (!(image == cs[pr.target])) {
      verdict.failures.push_back({FailureKind::pairing,
                                  {pr.source, pr.target},
                                  {image.p(), image.q()},
                                  name + " maps " + circle_label(pr.source) + " onto " + image.str() + ", not " +
                                      circle_label(pr.target)});
    }
    // inf lies outside every finite circle, so its images must land inside the partner circles.
    const BoundaryPoint forward = apply_boundary(pr.map, BoundaryPoint::infinity());
    if (!interior_contains(cs[pr.target], forward)) {
      verdict.failures.push_back({FailureKind::orientation,
                                  {pr.target},
                                  {forward},
                                  name + "(inf) = " + forward.str() + " is not inside " + circle_label(pr.target)});
    }
    const BoundaryPoint backward = apply_boundary(inverse(pr.map), BoundaryPoint::infinity());
    if (!interior_contains(cs[pr.source], backward)) {
      verdict.failures.push_back({FailureKind::orientation,
                                  {pr.source},
                                  {backward},
                                  name + "'(inf) = " + backward.str() + " is not inside " + circle_label(pr.source)});
    }
  }
  return verdict;
}

namespace {

struct Node {
  ReducedWord word;
  MobiusMap map;
};

std::vector<OrbitEntry> orbit_branch(const SchottkySystem& system, const Generators& gens, Letter first,
                                     unsigned max_depth) {
  std::vector<OrbitEntry> out;
  std::vector<Node> layer{{ReducedWord({first}), gens[first]}};
  for (unsigned depth = 1; depth <= max_depth; ++depth) {
    std::vector<Node> next;
    for (const Node& n : layer) {
      const int consumed = system.source_circle(n.word.letters().back());
      for (int seed = 0; seed < 4; ++seed) {
        if (seed == consumed) continue;
        out.push_back({n.word, seed, image_under_map(system.circles[seed], n.map)});
      }
      if (depth == max_depth) continue;
      for (Letter x : kLetters) {
        if (x == inverse(n.word.letters().back())) continue;
        next.push_back({n.word.extended(x), compose(n.map, gens[x])});
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<OrbitEntry> orbit_circles(const SchottkySystem& system, unsigned max_depth, unsigned workers) {
  std::vector<OrbitEntry> entries;
  for (int seed = 0; seed < 4; ++seed) entries.push_back({ReducedWord(), seed, system.circles[seed]});
  if (max_depth == 0) return entries;

  const Generators gens = system.generators();
  std::vector<std::vector<OrbitEntry>> parts(4);
  if (workers <= 1) {
    for (std::size_t i = 0; i < 4; ++i) parts[i] = orbit_branch(system, gens, kLetters[i], max_depth);
  } else {
    const std::size_t pool = std::min<std::size_t>(workers, 4);
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < pool; ++w) {
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < 4; i += pool) parts[i] = orbit_branch(system, gens, kLetters[i], max_depth);
      }));
    }
    for (auto& t : tasks) t.get();
  }
  for (auto& part : parts) {
    entries.insert(entries.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::stable_sort(entries.begin(), entries.end(), [](const OrbitEntry& x, const OrbitEntry& y) {
    if (x.depth() != y.depth()) return x.depth() < y.depth();
    if (x.word != y.word) return x.word < y.word;
    return x.seed < y.seed;
  });
  return entries;
}

NestedFamily nested_family(const SchottkySystem& system, unsigned max_depth, const AlgebraicPoint& tau,
                           const Rational& lambda) {
  NestedFamily family;
  const BoundaryPoint plus_tau(tau);
  const BoundaryPoint minus_tau(-tau);
  const AlgebraicPoint lo = -tau;
  const AlgebraicPoint hi(lambda + 3);
  const AlgebraicPoint mid(lambda + 1);

  for (OrbitEntry& entry : orbit_circles(system, max_depth)) {
    const Semicircle& c = entry.circle;
    if (c.is_line()) continue;
    ++family.candidates_examined;
    std::vector<AlgebraicPoint> inside;
    for (const BoundaryPoint& x : {c.p(), c.q()}) {
      if (lo < x.value() && x.value() < hi) inside.push_back(x.value());
    }
    if (inside.size() != 1) continue;
    if (on_circle(c, plus_tau) || on_circle(c, minus_tau)) {
      family.findings.push_back("circle " + c.str() + " passes through a fixed point; skipped");
      continue;
    }
    if (!separates(c, plus_tau, minus_tau)) continue;
    FamilyMember m;
    const AlgebraicPoint& e = inside.front();
    if (!(e < tau)) m.meets = ChainInterval::upper;
    else if (mid < e) m.meets = ChainInterval::middle;
    else m.meets = ChainInterval::lower;
    m.contains_minus_tau = interior_contains(c, minus_tau);
    m.entry = std::move(entry);
    family.chain.push_back(std::move(m));
  }

  // Circles around +tau from the inside out, then circles around -tau from the outside in.
  std::stable_sort(family.chain.begin(), family.chain.end(), [](const FamilyMember& x, const FamilyMember& y) {
    if (x.contains_minus_tau != y.contains_minus_tau) return !x.contains_minus_tau;
    const bool x_in_y = nested_inside(x.entry.circle, y.entry.circle);
    const bool y_in_x = nested_inside(y.entry.circle, x.entry.circle);
    if (x.contains_minus_tau) return y_in_x && !x_in_y;
    return x_in_y && !y_in_x;
  });

  if (family.chain.empty()) {
    family.findings.push_back("no orbit circle up to depth " + std::to_string(max_depth) +
                              " meets (-tau, lambda+3) once and separates the fixed points");
    return family;
  }
  bool ok = true;
  for (std::size_t j = 0; j + 1 < family.chain.size(); ++j) {
    const Semicircle& cur = family.chain[j].entry.circle;
    const Semicircle& nxt = family.chain[j + 1].entry.circle;
    const bool tau_side = interior_contains(nxt, minus_tau);
    bool link = relation(cur, nxt) != CircleRelation::crossing;
    for (const BoundaryPoint& x : {cur.p(), cur.q()}) {
      if (on_circle(nxt, x) || interior_contains(nxt, x) == tau_side) link = false;
    }
    if (!link) {
      ok = false;
      family.findings.push_back("link " + std::to_string(j + 1) + " -> " + std::to_string(j + 2) + ": " + nxt.str() +
                                " does not keep " + cur.str() + " apart from -tau");
    }
  }
  family.chain_verified = ok;
  return family;
}

FundamentalDomain fundamental_domain(const SchottkySystem& system, const AlgebraicPoint& window_lo,
                                     const AlgebraicPoint& window_hi) {
  const ClassicalVerdict verdict = classical_check(system);
  if (!verdict.passed()) {
    throw DomainError("fundamental domain needs a classical configuration: " + verdict.failures.front().detail);
  }
  FundamentalDomain fd;
  fd.boundary = system.circles;
  fd.window_lo = window_lo;
  fd.window_hi = window_hi;
  fd.real_trace = gaps_on_real_line(system.circles, window_lo, window_hi);
  for (const auto& c : system.circles) {
    fd.vertices.push_back(c.p());
    fd.vertices.push_back(c.q());
  }
  std::sort(fd.vertices.begin(), fd.vertices.end());
  return fd;
}

}  // namespace schottky
