#pragma once

#include <cstdint>
#include <vector>

#include "sphere12/moves.hpp"

namespace sphere12 {

/// A bijection of 0..n-1, stored as the image list.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that images is a bijection.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  /// (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles
  bool is_identity() const;

 private:
  std::vector<int> img_;
};

enum class Parity { Even, Odd };

/// Sign via cycle decomposition.
Parity parity(const Permutation& p);

/// Label bijection induced by a closed deformation path: the endpoint is
/// aligned onto the reference, then each endpoint point is matched to its
/// nearest reference point. Matches must be unambiguous (nearest < 1e-3 rad,
/// second-nearest > 0.1 rad); sigma(k) = m means the ball labeled k ends on
/// reference point m.
Permutation induced_permutation(const DeformationPath& path,
                                const Configuration& reference);

/// Same matching applied to an explicit endpoint configuration.
Permutation match_to_reference(const Configuration& endpoint,
                               const Configuration& reference);

/// Exact order of <gens> via a Schreier-Sims stabilizer chain.
std::int64_t generated_group_order(const std::vector<Permutation>& gens);

/// Test oracle: breadth-first closure, aborts above max_size.
std::int64_t brute_force_group_order(const std::vector<Permutation>& gens,
                                     std::size_t max_size = 20000);

struct ComponentEvidence {
  bool even_odd_separated_evidence = false;
  int words_checked = 0;
};

/// Evidence for the two-component picture at radius r in (1, r1]: extracts
/// the twelve modified-M5 permutations at radius r and checks that random
/// compositions stay even. At r = 1 the M6 composite supplies an odd
/// permutation, so the evidence flag is false there.
ComponentEvidence component_lower_bound_check(double r, int compositions = 50,
                                              std::uint64_t seed = 7);

}  // namespace sphere12
