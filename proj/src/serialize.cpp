#include "cubic/serialize.hpp"

#include "cubic/poly_parser.hpp"

namespace cubic {

namespace {

Json int_triple(const Triple<Integer>& t) {
  return Json::array({t[0].to_int64(), t[1].to_int64(), t[2].to_int64()});
}

}  // namespace

Triple<Rational> triple_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected an array of three scalars", 0);
  Triple<Rational> t;
  for (std::size_t i = 0; i < 3; ++i) {
    if (j[i].is_number_integer()) {
      t[i] = Rational(Integer(j[i].get<std::int64_t>()));
    } else {
      t[i] = Rational::parse(j[i].get<std::string>());
    }
  }
  return t;
}

Json eisenstein_to_json(const EisensteinRational& a) {
  return {{"x", a.x().to_string()}, {"y", a.y().to_string()}};
}

TernaryCubic<Rational> cubic_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected an object of monomial coefficients", 0);
  TernaryCubic<Rational> f;
  for (const auto& [key, value] : j.items()) {
    const auto m = parse_polynomial(key, ternary_vars());
    if (m.term_count() != 1 || !m.is_homogeneous(3) || m.leading_coefficient() != Rational(1)) {
      throw ParseError("'" + key + "' is not a cubic monomial", 0);
    }
    const Monomial& mono = m.terms().begin()->first;
    f.set_coefficient(mono[0], mono[1], mono[2], Rational::parse(value.get<std::string>()));
  }
  return f;
}

Json nondegeneracy_to_json(const NondegeneracyResult& r) {
  Json kernel = Json::array();
  for (const auto& v : r.kernel) kernel.push_back(triple_to_json(v));
  return {{"nondegenerate", r.nondegenerate}, {"kernel", kernel}};
}

Json orbit_to_json(const OrbitReport& r) {
  Json contents = Json::array();
  for (const auto& c : r.contents) contents.push_back(c.to_string());
  return {{"status", to_string(r.status)}, {"step", r.step}, {"period", r.period}, {"contents", contents}};
}

Json zero_divisor_to_json(const ZeroDivisorInfo& info) {
  Json annihilator = {{"kind", to_string(info.annihilator.kind)}};
  if (info.annihilator.kind == AnnihilatorKind::Line || info.annihilator.kind == AnnihilatorKind::Plane) {
    annihilator["vector"] = triple_to_json(info.annihilator.vector);
  }
  return {{"class", to_string(info.tag)}, {"annihilator", annihilator}};
}

Json identity_report_to_json(const IdentityReport& r, bool verbose) {
  Json j = {{"name", r.name},
            {"holds", r.holds},
            {"residual_term_count", r.residual_term_count},
            {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
  if (verbose) j["residual"] = r.residual;
  return j;
}

Json witness_to_json(const Witness& w) {
  return {{"n", w.n().to_string()}, {"triple", triple_to_json(w.triple())}};
}

Json table_to_json(const RepresentationTable& table) {
  Json entries = Json::object();
  for (std::size_t n = 0; n < table.entries.size(); ++n) {
    const auto& e = table.entries[n];
    entries[std::to_string(n)] = e ? int_triple(e->triple()) : Json(nullptr);
  }
  return {{"bound_n", table.bound_n.to_int64()}, {"bound_box", table.bound_box.to_int64()}, {"entries", entries}};
}

RepresentationTable table_from_json(const Json& j) {
  RepresentationTable table{Integer(j.at("bound_n").get<std::int64_t>()),
                            Integer(j.at("bound_box").get<std::int64_t>()),
                            {}};
  const auto& entries = j.at("entries");
  const std::int64_t max_n = table.bound_n.to_int64();
  for (std::int64_t n = 0; n <= max_n; ++n) {
    const Json& e = entries.at(std::to_string(n));
    if (e.is_null()) {
      table.entries.emplace_back(std::nullopt);
      continue;
    }
    table.entries.emplace_back(
        Witness(Integer(n), Triple<Integer>(e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>(),
                                            e.at(2).get<std::int64_t>())));
  }
  return table;
}

Json zero_divisor_scan_to_json(const Integer& bound,
                               const std::vector<std::pair<Triple<Integer>, Triple<Integer>>>& pairs) {
  Json list = Json::array();
  for (const auto& [a, b] : pairs) list.push_back(Json::array({int_triple(a), int_triple(b)}));
  return {{"bound", bound.to_int64()}, {"pairs", list}};
}

}  // namespace cubic
