#include "cubic/ternary_cubic.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubic {

const VarSet& ternary_vars() {
  static const VarSet vars{"a0", "a1", "a2"};
  return vars;
}

const std::array<std::array<std::uint32_t, 3>, 10>& cubic_exponents() {
  static const std::array<std::array<std::uint32_t, 3>, 10> exps{{
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
      {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
  }};
  return exps;
}

std::size_t cubic_slot(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  const auto& exps = cubic_exponents();
  for (std::size_t s = 0; s < exps.size(); ++s) {
    if (exps[s][0] == i && exps[s][1] == j && exps[s][2] == k) return s;
  }
  throw std::out_of_range("exponent (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ") is not cubic");
}

NondegeneracyResult nondegenerate(const TernaryCubic<Rational>& f) {
  const TrilinearForm<Rational> t = polarize(f);

  // Row (j, k), column i: coefficient of a_i in T(a, e_j, e_k).
  std::vector<std::array<Rational, 3>> m;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) m.push_back({t.at(0, j, k), t.at(1, j, k), t.at(2, j, k)});
  }

  // Reduced row echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < 3 && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = m[row][col].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < 3; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  NondegeneracyResult result;
  result.nondegenerate = pivot_cols.size() == 3;
  for (std::size_t free = 0; free < 3; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    Triple<Rational> v;
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    result.kernel.push_back(v);
  }
  return result;
}

std::string to_string(OrbitStatus status) {
  switch (status) {
    case OrbitStatus::Degenerate:
      return "degenerate";
    case OrbitStatus::Cycle:
      return "cycle";
    case OrbitStatus::Unresolved:
      return "unresolved";
  }
  return "?";
}

TernaryCubic<Integer> normalize(const TernaryCubic<Integer>& f) {
  if (f.is_zero()) return f;
  return TernaryCubic<Integer>::from_poly(content_and_primitive(f.to_poly()).second);
}

OrbitReport hessian_orbit(const TernaryCubic<Integer>& f, std::size_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("max_steps must be at least 1");
  OrbitReport report;
  report.forms.push_back(normalize(f));
  if (report.forms.back().is_zero()) {
    report.status = OrbitStatus::Degenerate;
    return report;
  }
  std::map<TernaryCubic<Integer>, std::size_t> seen{{report.forms.back(), 0}};
  for (std::size_t step = 1; step <= max_steps; ++step) {
    const TernaryCubic<Integer> h = hessian(report.forms.back());
    if (h.is_zero()) {
      report.status = OrbitStatus::Degenerate;
      report.step = step;
      return report;
    }
    auto [content, primitive] = content_and_primitive(h.to_poly());
    report.contents.push_back(content);
    TernaryCubic<Integer> g = TernaryCubic<Integer>::from_poly(primitive);
    if (const auto it = seen.find(g); it != seen.end()) {
      report.status = OrbitStatus::Cycle;
      report.step = it->second;
      report.period = step - it->second;
      return report;
    }
    seen.emplace(g, step);
    report.forms.push_back(std::move(g));
  }
  report.status = OrbitStatus::Unresolved;
  report.step = max_steps;
  return report;
}

}  // namespace cubic
