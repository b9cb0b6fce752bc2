#pragma once

#include <array>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cubic/circulant.hpp"
#include "cubic/identities.hpp"
#include "cubic/representations.hpp"
#include "cubic/ternary_cubic.hpp"

namespace cubic {

using Json = nlohmann::json;

/// ["1/2","-1/2","1/2"]
template <Scalar S>
Json triple_to_json(const Triple<S>& t) {
  return Json::array({to_string(t[0]), to_string(t[1]), to_string(t[2])});
}

/// Throws ParseError or Json::exception on malformed input.
Triple<Rational> triple_from_json(const Json& j);

/// {"x": "...", "y": "..."}
Json eisenstein_to_json(const EisensteinRational& a);

/// Object keyed by all ten monomials ("a0^3", "a0^2*a1", ..., "a2^3") with
/// exact scalar strings as values.
template <Scalar S>
Json cubic_to_json(const TernaryCubic<S>& f) {
  Json j = Json::object();
  for (std::size_t s = 0; s < 10; ++s) {
    const auto& e = cubic_exponents()[s];
    j[format_monomial(Monomial({e[0], e[1], e[2]}), ternary_vars())] = to_string(f.coefficients()[s]);
  }
  return j;
}

/// Missing monomial keys read as zero; unknown keys are rejected.
TernaryCubic<Rational> cubic_from_json(const Json& j);

/// 3x3x3 nested arrays of scalar strings, indexed [i][j][k].
template <Scalar S>
Json trilinear_to_json(const TrilinearForm<S>& t) {
  Json out = Json::array();
  for (const auto& plane : t.values()) {
    Json p = Json::array();
    for (const auto& row : plane) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_string(v));
      p.push_back(std::move(r));
    }
    out.push_back(std::move(p));
  }
  return out;
}

Json nondegeneracy_to_json(const NondegeneracyResult& r);

/// {"status": "cycle", "step": 0, "period": 1, "contents": ["-54"]}
Json orbit_to_json(const OrbitReport& r);

/// {"class": "TraceZeroPlane", "annihilator": {"kind": "line", "vector": [...]}}
Json zero_divisor_to_json(const ZeroDivisorInfo& info);

/// {"name": ..., "holds": ..., "residual_term_count": ..., "elapsed_ms": ...};
/// adds "residual" when `verbose`.
Json identity_report_to_json(const IdentityReport& r, bool verbose = false);

/// {"n": "4", "triple": ["1","2","1"]}
Json witness_to_json(const Witness& w);

/// {"bound_n": N, "bound_box": B, "entries": {"0": [0,0,0], "3": null, ...}}
Json table_to_json(const RepresentationTable& table);

/// Inverse of table_to_json; re-validates every witness.
RepresentationTable table_from_json(const Json& j);

/// {"bound": B, "pairs": [[[a0,a1,a2],[b0,b1,b2]], ...]} with integer entries.
Json zero_divisor_scan_to_json(const Integer& bound,
                               const std::vector<std::pair<Triple<Integer>, Triple<Integer>>>& pairs);

}  // namespace cubic
