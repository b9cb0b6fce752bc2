#include "cubic/cli.hpp"

#include <CLI11.hpp>

#include "cubic/poly_parser.hpp"
#include "cubic/serialize.hpp"

namespace cubic {

namespace {

struct Options {
  bool json = false;
  bool verbose = false;
  std::string a, b, poly;
  std::size_t max_steps = kDefaultOrbitSteps;
  std::int64_t max_n = 0;
  std::int64_t box = 0;
};

TernaryCubic<Rational> parse_form(const std::string& text) {
  return TernaryCubic<Rational>::from_poly(parse<Rational>(text, ternary_vars()));
}

Triple<Integer> parse_integer_triple(const std::string& text) {
  const Triple<Rational> t = parse_triple(text);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!t[i].is_integer()) throw std::invalid_argument("witness triples must have integer entries");
  }
  return {t[0].num(), t[1].num(), t[2].num()};
}

// Clears denominators; orbits are projective, so scaling is harmless.
TernaryCubic<Integer> integral_form(const TernaryCubic<Rational>& f) {
  Integer lcm = 1;
  for (const auto& c : f.coefficients()) lcm = lcm / gcd(lcm, c.den()) * c.den();
  std::array<Integer, 10> coeffs;
  for (std::size_t s = 0; s < 10; ++s) coeffs[s] = (f.coefficients()[s] * Rational(lcm)).as_integer();
  return TernaryCubic<Integer>(coeffs);
}

void print_annihilator(std::ostream& out, const Annihilator& ann) {
  switch (ann.kind) {
    case AnnihilatorKind::Trivial:
      out << "annihilator: trivial\n";
      break;
    case AnnihilatorKind::Line:
      out << "annihilator: line through " << to_string(ann.vector) << "\n";
      break;
    case AnnihilatorKind::Plane:
      out << "annihilator: plane orthogonal to " << to_string(ann.vector) << "\n";
      break;
    case AnnihilatorKind::Everything:
      out << "annihilator: everything\n";
      break;
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_all()) {
    all = all && r.holds;
    if (o.json) {
      out << identity_report_to_json(r, o.verbose).dump() << "\n";
      continue;
    }
    out << (r.holds ? "PASS " : "FAIL ") << r.name << " (" << r.residual_term_count << " residual terms, "
        << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms)\n";
    if (o.verbose && !r.holds) out << "  residual: " << r.residual << "\n";
  }
  return all ? kExitOk : kExitMathError;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const auto c = compose(parse_triple(o.a), parse_triple(o.b));
  out << (o.json ? triple_to_json(c).dump() : to_string(c)) << "\n";
  return kExitOk;
}

int cmd_norm(const Options& o, std::ostream& out) {
  const auto a = parse_triple(o.a);
  const Rational n = cubic_norm(a);
  if (o.json) {
    out << Json{{"triple", triple_to_json(a)}, {"norm", n.to_string()}}.dump() << "\n";
  } else {
    out << n << "\n";
  }
  return kExitOk;
}

int cmd_invert(const Options& o, std::ostream& out) {
  const auto inv = invert(parse_triple(o.a));
  out << (o.json ? triple_to_json(inv).dump() : to_string(inv)) << "\n";
  return kExitOk;
}

int cmd_eigen(const Options& o, std::ostream& out) {
  const auto ev = eigenvalues(parse_triple(o.a));
  if (o.json) {
    Json j = Json::array();
    for (const auto& e : ev) j.push_back(eisenstein_to_json(e));
    out << j.dump() << "\n";
  } else {
    for (const auto& e : ev) out << e << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto info = classify_zero_divisor(parse_triple(o.a));
  if (o.json) {
    out << zero_divisor_to_json(info).dump() << "\n";
  } else {
    out << to_string(info.tag) << "\n";
    print_annihilator(out, info.annihilator);
  }
  return kExitOk;
}

int cmd_hessian(const Options& o, std::ostream& out) {
  const auto h = hessian(parse_form(o.poly));
  out << (o.json ? cubic_to_json(h).dump() : to_string(h)) << "\n";
  return kExitOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const OrbitReport r = hessian_orbit(integral_form(parse_form(o.poly)), o.max_steps);
  if (o.json) {
    out << orbit_to_json(r).dump() << "\n";
    return kExitOk;
  }
  out << "status: " << to_string(r.status) << "\n"
      << "step: " << r.step << "\n"
      << "period: " << r.period << "\n"
      << "contents:";
  for (const auto& c : r.contents) out << " " << c;
  out << "\n";
  return kExitOk;
}

int cmd_polarize(const Options& o, std::ostream& out) {
  const auto t = polarize(parse_form(o.poly));
  if (o.json) {
    out << Json{{"values", trilinear_to_json(t)}}.dump() << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) out << "T[" << i << "][" << j << "][" << k << "] = " << t.at(i, j, k) << "\n";
    }
  }
  return kExitOk;
}

int cmd_nondegenerate(const Options& o, std::ostream& out) {
  const auto r = nondegenerate(parse_form(o.poly));
  if (o.json) {
    out << nondegeneracy_to_json(r).dump() << "\n";
    return kExitOk;
  }
  out << "nondegenerate: " << (r.nondegenerate ? "true" : "false") << "\n";
  for (const auto& v : r.kernel) out << "kernel: " << to_string(v) << "\n";
  return kExitOk;
}

int cmd_represent(const Options& o, std::ostream& out) {
  const auto table = search_representations(Integer(o.max_n), Integer(o.box));
  if (o.json) {
    out << table_to_json(table).dump() << "\n";
    return kExitOk;
  }
  for (std::size_t n = 0; n < table.entries.size(); ++n) {
    const auto& e = table.entries[n];
    out << n << ": " << (e ? to_string(e->triple()) : std::string("none")) << "\n";
  }
  return kExitOk;
}

int cmd_witness_mul(const Options& o, std::ostream& out) {
  const Witness w = compose_witnesses(Witness(parse_integer_triple(o.a)), Witness(parse_integer_triple(o.b)));
  if (o.json) {
    out << witness_to_json(w).dump() << "\n";
  } else {
    out << w.n() << ": " << to_string(w.triple()) << "\n";
  }
  return kExitOk;
}

int cmd_zdscan(const Options& o, std::ostream& out) {
  const Integer bound(o.box);
  const auto pairs = zero_divisor_scan(bound);
  if (o.json) {
    out << zero_divisor_scan_to_json(bound, pairs).dump() << "\n";
    return kExitOk;
  }
  for (const auto& [a, b] : pairs) out << to_string(a) << " * " << to_string(b) << " = 0\n";
  out << "pairs: " << pairs.size() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic for the cubic form a0^3 + a1^3 + a2^3 - 3*a0*a1*a2", "cubic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto triple_arg = [&](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "Triple such as 1,-1,0 or 1/2,0,1")->required();
  };
  auto poly_arg = [&](CLI::App* sub) {
    sub->add_option("POLY", o.poly, "Cubic form in a0, a1, a2, e.g. \"a0^3 + a1^3\"")->required();
  };

  auto* verify = app.add_subcommand("verify", "Prove every identity as a zero polynomial");
  verify->add_flag("--verbose", o.verbose, "Include residual polynomials");
  handlers.emplace_back(verify, cmd_verify);

  auto* compose_cmd = app.add_subcommand("compose", "Compose two triples");
  triple_arg(compose_cmd, o.a, "A");
  triple_arg(compose_cmd, o.b, "B");
  handlers.emplace_back(compose_cmd, cmd_compose);

  auto* norm = app.add_subcommand("norm", "Cubic norm C(a)");
  triple_arg(norm, o.a, "A");
  handlers.emplace_back(norm, cmd_norm);

  auto* inv = app.add_subcommand("invert", "Inverse under composition");
  triple_arg(inv, o.a, "A");
  handlers.emplace_back(inv, cmd_invert);

  auto* eigen = app.add_subcommand("eigen", "Eigenvalues in Q(w)");
  triple_arg(eigen, o.a, "A");
  handlers.emplace_back(eigen, cmd_eigen);

  auto* classify = app.add_subcommand("classify", "Zero-divisor class and annihilator");
  triple_arg(classify, o.a, "A");
  handlers.emplace_back(classify, cmd_classify);

  auto* hess = app.add_subcommand("hessian", "Hessian of a ternary cubic");
  poly_arg(hess);
  handlers.emplace_back(hess, cmd_hessian);

  auto* orbit = app.add_subcommand("orbit", "Iterate the normalized Hessian");
  poly_arg(orbit);
  orbit->add_option("--max-steps", o.max_steps, "Iteration cap")->check(CLI::PositiveNumber);
  handlers.emplace_back(orbit, cmd_orbit);

  auto* polar = app.add_subcommand("polarize", "Symmetric trilinear polarization");
  poly_arg(polar);
  handlers.emplace_back(polar, cmd_polarize);

  auto* nondeg = app.add_subcommand("nondegenerate", "Non-degeneracy test with kernel basis");
  poly_arg(nondeg);
  handlers.emplace_back(nondeg, cmd_nondegenerate);

  auto* represent = app.add_subcommand("represent", "Witnesses for C(a) = n, 0 <= n <= max-n");
  represent->add_option("--max-n", o.max_n, "Largest n")->required();
  represent->add_option("--box", o.box, "Coordinate bound")->required();
  handlers.emplace_back(represent, cmd_represent);

  auto* wmul = app.add_subcommand("witness-mul", "Multiply two witness triples");
  triple_arg(wmul, o.a, "W1");
  triple_arg(wmul, o.b, "W2");
  handlers.emplace_back(wmul, cmd_witness_mul);

  auto* zdscan = app.add_subcommand("zdscan", "Exhaustive zero-divisor pair scan");
  zdscan->add_option("--box", o.box, "Coordinate bound")->required();
  handlers.emplace_back(zdscan, cmd_zdscan);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler(o, out);
    }
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return kExitMathError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cubic
