#include "cubic/representations.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <thread>

namespace cubic {

Witness::Witness(Triple<Integer> triple) : n_(cubic_norm(triple)), triple_(std::move(triple)) {}

Witness::Witness(Integer n, Triple<Integer> triple) : n_(std::move(n)), triple_(std::move(triple)) {
  if (cubic_norm(triple_) != n_) {
    throw std::invalid_argument("C(" + to_string(triple_) + ") = " + cubic_norm(triple_).to_string() +
                                ", not " + n_.to_string());
  }
}

Witness compose_witnesses(const Witness& w1, const Witness& w2) {
  return Witness(w1.n() * w2.n(), compose(w1.triple(), w2.triple()));
}

namespace {

using Point = std::array<std::int64_t, 3>;
using Slice = std::vector<std::optional<Point>>;

// First witness per n among triples with a0 in [lo, hi).
Slice scan_slice(std::int64_t lo, std::int64_t hi, std::int64_t box, std::int64_t max_n) {
  Slice found(static_cast<std::size_t>(max_n) + 1);
  for (std::int64_t a0 = lo; a0 < hi; ++a0) {
    for (std::int64_t a1 = -box; a1 <= box; ++a1) {
      for (std::int64_t a2 = -box; a2 <= box; ++a2) {
        const std::int64_t c = a0 * a0 * a0 + a1 * a1 * a1 + a2 * a2 * a2 - 3 * a0 * a1 * a2;
        if (c < 0 || c > max_n) continue;
        auto& slot = found[static_cast<std::size_t>(c)];
        if (!slot) slot = Point{a0, a1, a2};
      }
    }
  }
  return found;
}

std::int64_t checked_bound(const Integer& value, std::int64_t max, const char* what) {
  if (value.sign() < 0 || value > Integer(max)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, " + std::to_string(max) + "]");
  }
  return value.to_int64();
}

}  // namespace

RepresentationTable search_representations(const Integer& bound_n, const Integer& bound_box) {
  const std::int64_t max_n = checked_bound(bound_n, kMaxSearchN, "bound_n");
  const std::int64_t box = checked_bound(bound_box, kMaxSearchBox, "bound_box");

  const std::int64_t width = 2 * box + 1;
  const std::int64_t workers =
      std::clamp<std::int64_t>(std::thread::hardware_concurrency(), 1, std::min<std::int64_t>(width, 16));
  std::vector<std::future<Slice>> slices;
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t lo = -box + width * w / workers;
    const std::int64_t hi = -box + width * (w + 1) / workers;
    slices.push_back(std::async(std::launch::async, scan_slice, lo, hi, box, max_n));
  }

  // Slices cover ascending a0 ranges, so the first slice with a hit holds
  // the scan-order minimum.
  Slice merged(static_cast<std::size_t>(max_n) + 1);
  for (auto& f : slices) {
    const Slice s = f.get();
    for (std::size_t n = 0; n < s.size(); ++n) {
      if (!merged[n] && s[n]) merged[n] = s[n];
    }
  }

  RepresentationTable table{bound_n, bound_box, {}};
  table.entries.reserve(merged.size());
  for (std::size_t n = 0; n < merged.size(); ++n) {
    if (!merged[n]) {
      table.entries.emplace_back(std::nullopt);
      continue;
    }
    const Point& p = *merged[n];
    table.entries.emplace_back(Witness(Integer(static_cast<std::int64_t>(n)), Triple<Integer>(p[0], p[1], p[2])));
  }
  return table;
}

bool zero_divisor_pair_condition(const Triple<Integer>& a, const Triple<Integer>& b) {
  return (a.trace().is_zero() && b.is_diagonal()) || (a.is_diagonal() && b.trace().is_zero());
}

std::vector<std::pair<Triple<Integer>, Triple<Integer>>> zero_divisor_scan(const Integer& bound) {
  if (bound < Integer(1)) throw std::invalid_argument("bound must be at least 1");
  const std::int64_t k = bound.to_int64();
  std::vector<Triple<Integer>> box;
  for (std::int64_t a0 = -k; a0 <= k; ++a0) {
    for (std::int64_t a1 = -k; a1 <= k; ++a1) {
      for (std::int64_t a2 = -k; a2 <= k; ++a2) {
        if (a0 != 0 || a1 != 0 || a2 != 0) box.emplace_back(a0, a1, a2);
      }
    }
  }
  std::vector<std::pair<Triple<Integer>, Triple<Integer>>> pairs;
  for (const auto& a : box) {
    for (const auto& b : box) {
      if (compose(a, b).is_zero()) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

}  // namespace cubic
