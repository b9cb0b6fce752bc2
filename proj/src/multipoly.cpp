#include "cubic/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace cubic {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

}  // namespace

VarSet::VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

VarSet::VarSet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!is_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::size_t VarSet::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownVariable(std::string(name));
}

bool operator==(const VarSet& lhs, const VarSet& rhs) {
  return lhs.names_ == rhs.names_ || *lhs.names_ == *rhs.names_;
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (size() != rhs.size()) throw VarSetMismatch();
  Monomial out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += rhs.exps_[i];
  out.degree_ += rhs.degree_;
  return out;
}

Monomial Monomial::with_exponent(std::size_t i, std::uint32_t value) const {
  Monomial out = *this;
  out.degree_ = out.degree_ - out.exps_[i] + value;
  out.exps_[i] = value;
  return out;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto ea = a.exponents();
  const auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

std::string format_monomial(const Monomial& m, const VarSet& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::pair<Integer, MultiPoly<Integer>> content_and_primitive(const MultiPoly<Integer>& p) {
  if (p.is_zero()) throw std::domain_error("content of the zero polynomial");
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) g = gcd(g, c);
  if (p.leading_coefficient().sign() < 0) g = -g;
  MultiPoly<Integer> q(p.vars());
  for (const auto& [m, c] : p.terms()) q.accumulate(m, c / g);
  return {g, q};
}

}  // namespace cubic
