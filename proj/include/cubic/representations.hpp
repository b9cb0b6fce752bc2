#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubic/circulant.hpp"

namespace cubic {

/// Integer triple with cubic_norm(triple) == n.
class Witness {
 public:
  /// Witness for whatever C(triple) is.
  explicit Witness(Triple<Integer> triple);
  /// Throws std::invalid_argument if C(triple) != n.
  Witness(Integer n, Triple<Integer> triple);

  const Integer& n() const { return n_; }
  const Triple<Integer>& triple() const { return triple_; }

  friend bool operator==(const Witness&, const Witness&) = default;

 private:
  Integer n_;
  Triple<Integer> triple_;
};

/// Witness for m*n from witnesses for m and n, via multiplicativity of C
/// under compose.
Witness compose_witnesses(const Witness& w1, const Witness& w2);

/// For every 0 <= n <= bound_n, the first triple in [-bound_box, bound_box]^3
/// with C = n, scanning a0, then a1, then a2 ascending. A missing entry
/// only means no witness exists inside the box.
struct RepresentationTable {
  Integer bound_n;
  Integer bound_box;
  std::vector<std::optional<Witness>> entries;  // indexed by n

  const std::optional<Witness>& at(std::size_t n) const { return entries.at(n); }

  friend bool operator==(const RepresentationTable&, const RepresentationTable&) = default;
};

constexpr std::int64_t kMaxSearchBox = 1'000'000;
constexpr std::int64_t kMaxSearchN = 10'000'000;

/// Throws std::invalid_argument for negative bounds or bounds above
/// kMaxSearchBox / kMaxSearchN. The a0 range is split across threads; the
/// result does not depend on the split.
RepresentationTable search_representations(const Integer& bound_n, const Integer& bound_box);

/// The zero-product condition on a pair: (trace(a) = 0 and b diagonal) or
/// (a diagonal and trace(b) = 0).
bool zero_divisor_pair_condition(const Triple<Integer>& a, const Triple<Integer>& b);

/// Every pair (a, b) of nonzero triples with entries in [-bound, bound] and
/// compose(a, b) = 0, found by exhaustive composition; a ascends in scan
/// order, then b. Throws std::invalid_argument if bound < 1.
std::vector<std::pair<Triple<Integer>, Triple<Integer>>> zero_divisor_scan(const Integer& bound);

}  // namespace cubic
