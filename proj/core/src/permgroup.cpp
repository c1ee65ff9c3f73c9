#include "sphere12/permgroup.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sphere12/named.hpp"
#include "sphere12/parallel.hpp"

namespace sphere12 {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= n() || seen[v])
      throw std::domain_error("Permutation: images must be a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (n() != rhs.n()) throw std::domain_error("Permutation: size mismatch");
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[i] = img_[rhs.img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(n());
  for (int i = 0; i < n(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(n(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Parity parity(const Permutation& p) {
  int transpositions = 0;
  for (const auto& c : p.cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

Permutation match_to_reference(const Configuration& endpoint,
                               const Configuration& reference) {
  if (endpoint.n() != reference.n())
    throw std::domain_error("match_to_reference: size mismatch");
  const int n = endpoint.n();

  auto try_match = [&](const Configuration& pts) -> std::vector<int> {
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    for (int k = 0; k < n; ++k) {
      double best = 1e9, second = 1e9;
      int arg = -1;
      for (int m = 0; m < n; ++m) {
        const double d = angular_distance(pts[k], reference[m]);
        if (d < best) {
          second = best;
          best = d;
          arg = m;
        } else if (d < second) {
          second = d;
        }
      }
      if (best >= 1e-3) return {};  // no close reference point
      if (second <= 0.1)
        throw matching_error("induced_permutation: ambiguous point matching");
      if (used[arg])
        throw matching_error("induced_permutation: two points matched one target");
      used[arg] = true;
      img[k] = arg;
    }
    return img;
  };

  // Endpoints of library-built paths land on the reference set exactly.
  std::vector<int> img = try_match(endpoint);
  if (!img.empty()) return Permutation(std::move(img));

  // Otherwise align the point sets: derive candidate rotations from anchor
  // correspondences and keep the first that matches everything.
  for (int a = 0; a < n; ++a) {
    const double d01 = angular_distance(endpoint[0], endpoint[1]);
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      if (std::abs(angular_distance(reference[a], reference[b]) - d01) > 1e-4)
        continue;
      // Rotation taking endpoint[0] -> ref[a], endpoint[1] -> ref[b].
      const Rotation r1 = Rotation::taking(endpoint[0], reference[a]);
      const UnitVector e1 = r1(endpoint[1]);
      const Vec3 axis = reference[a].vec();
      const Vec3 p = e1.vec() - e1.vec().dot(axis) * axis;
      const Vec3 q = reference[b].vec() - reference[b].vec().dot(axis) * axis;
      if (p.norm() < 1e-9 || q.norm() < 1e-9) continue;
      double ang = std::atan2(p.cross(q).dot(axis), p.dot(q));
      const Rotation r = Rotation::about_axis(axis, ang) * r1;
      img = try_match(rotate_all(r, endpoint));
      if (!img.empty()) return Permutation(std::move(img));
    }
  }
  throw std::domain_error(
      "induced_permutation: endpoint is not equivalent to the reference");
}

Permutation induced_permutation(const DeformationPath& path,
                                const Configuration& reference) {
  return match_to_reference(path.end(), reference);
}

// ---------------------------------------------------------------------------
// Schreier-Sims stabilizer chain
// ---------------------------------------------------------------------------

namespace {

// Iterative Schreier-Sims: strong generators per level, orbits rebuilt after
// every insertion, deferred closure verification. Each insertion strictly
// grows the product of orbit sizes, so the fix-up loop terminates.
struct Chain {
  int n = 0;
  std::vector<int> base;
  std::vector<std::vector<Permutation>> gens;        // generators fixing base[0..l-1]
  std::vector<std::map<int, Permutation>> trans;     // orbit point -> coset rep

  // Orbit of base[l] under every generator stored at level >= l.
  void rebuild_orbit(std::size_t l) {
    auto& tv = trans[l];
    tv.clear();
    tv.emplace(base[l], Permutation::identity(n));
    std::vector<int> queue{base[l]};
    while (!queue.empty()) {
      const int pt = queue.back();
      queue.pop_back();
      const Permutation rep = tv.at(pt);
      for (std::size_t k = l; k < gens.size(); ++k)
        for (const Permutation& g : gens[k]) {
          const int img = g(pt);
          if (!tv.count(img)) {
            tv.emplace(img, g * rep);
            queue.push_back(img);
          }
        }
    }
  }

  Permutation sift(Permutation p, std::size_t from = 0) const {
    for (std::size_t l = from; l < base.size(); ++l) {
      const auto it = trans[l].find(p(base[l]));
      if (it == trans[l].end()) return p;
      p = it->second.inverse() * p;
    }
    return p;
  }

  // Sift g and store the surviving residue at the level whose transversal it
  // escapes, extending the base if it fixes every existing base point.
  void insert(const Permutation& g0) {
    Permutation g = g0;
    std::size_t l = 0;
    while (true) {
      if (g.is_identity()) return;
      if (l == base.size()) {
        int moved = 0;
        while (g(moved) == moved) ++moved;
        base.push_back(moved);
        gens.emplace_back();
        trans.emplace_back();
      }
      const auto it = trans[l].find(g(base[l]));
      if (it == trans[l].end()) break;
      g = it->second.inverse() * g;
      ++l;
    }
    gens[l].push_back(g);
    for (std::size_t k = 0; k <= l; ++k) rebuild_orbit(k);
  }

  // One pass over all Schreier generators; inserts the first survivor and
  // reports that another pass is needed.
  bool closure_pass() {
    for (std::size_t l = 0; l < base.size(); ++l) {
      for (const auto& [pt, rep] : trans[l]) {
        for (std::size_t k = l; k < gens.size(); ++k)
          for (const Permutation& s : gens[k]) {
            const Permutation to = s * rep;
            const Permutation schreier =
                trans[l].at(to(base[l])).inverse() * to;
            if (schreier.is_identity()) continue;
            const Permutation residue = sift(schreier, l);
            if (!residue.is_identity()) {
              insert(residue);
              return false;
            }
          }
      }
    }
    return true;
  }
};

}  // namespace

std::int64_t generated_group_order(const std::vector<Permutation>& gens) {
  if (gens.empty()) return 1;
  const int n = gens.front().n();
  Chain chain;
  chain.n = n;
  for (const Permutation& g : gens) {
    if (g.n() != n) throw std::domain_error("generated_group_order: size mismatch");
    chain.insert(chain.sift(g));
  }
  while (!chain.closure_pass()) {
  }
  std::int64_t order = 1;
  for (const auto& tv : chain.trans)
    order *= static_cast<std::int64_t>(tv.size());
  return order;
}

std::int64_t brute_force_group_order(const std::vector<Permutation>& gens,
                                     std::size_t max_size) {
  if (gens.empty()) return 1;
  std::set<std::vector<int>> seen;
  std::vector<Permutation> frontier{Permutation::identity(gens.front().n())};
  seen.insert(frontier.front().images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier)
      for (const Permutation& g : gens) {
        Permutation q = g * p;
        if (seen.insert(q.images()).second) {
          if (seen.size() > max_size)
            throw std::domain_error("brute_force_group_order: group too large");
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

ComponentEvidence component_lower_bound_check(double r, int compositions,
                                              std::uint64_t seed) {
  if (!(r >= 1.0))
    throw std::domain_error("component_lower_bound_check: need r >= 1");

  std::vector<Permutation> gens(12, Permutation::identity(12));
  const Configuration dod = named_dod();
  const bool modified = r > 1.0;
  if (modified && r > min_bottleneck_radius() + 1e-12)
    throw std::domain_error("component_lower_bound_check: r above min bottleneck radius");

  parallel_for(12, [&](long p) {
    const DeformationPath path = modified
                                     ? modified_m5_path(static_cast<int>(p), +1, r)
                                     : m5_path(static_cast<int>(p), +1, r);
    gens[p] = induced_permutation(path, dod);
  });

  ComponentEvidence ev;
  ev.words_checked = compositions;
  bool all_even = true;
  for (const Permutation& g : gens)
    if (parity(g) != Parity::Even) all_even = false;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 11);
  std::uniform_int_distribution<int> len(2, 8);
  for (int w = 0; w < compositions && all_even; ++w) {
    Permutation word = Permutation::identity(12);
    const int l = len(rng);
    for (int s = 0; s < l; ++s) {
      const Permutation& g = gens[pick(rng)];
      word = (rng() % 2 == 0 ? g : g.inverse()) * word;
    }
    if (parity(word) != Parity::Even) all_even = false;
  }

  // At radius 1 the M6 composite provides an odd permutation, so evenness
  // alone does not separate components there.
  ev.even_odd_separated_evidence = modified && all_even;
  return ev;
}

}  // namespace sphere12
