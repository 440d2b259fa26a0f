#include "nsmm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nsmm::cli {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  // models, zhu, fusion
  long p = 7, q = 3;
  std::string h;
  // singular
  std::string c = "-11/14", level;
  // ode
  std::string h1 = "-1/14", h2 = "-1/14", h3 = "2/7", h4 = "2/7", t1 = "1/14", t2 = "1/14";
  std::string pairing = "Q00,Q11", null_text, rho, z;
  int slot = 3;
  std::size_t order = 40;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string fraction(const Rational& q) { return to_string(q); }

// ---- cache for singular vectors ---------------------------------------

std::string cache_key(const Rational& c, const Rational& h, const Rational& level) {
  auto part = [](const Rational& q) {
    std::string s = to_fraction_string(q);
    std::replace(s.begin(), s.end(), '/', '_');
    std::replace(s.begin(), s.end(), '-', 'm');
    return s;
  };
  return "singular_c" + part(c) + "_h" + part(h) + "_l" + part(level) + ".txt";
}

std::vector<VermaVector> singular_cached(const Rational& c, const Rational& h, const Rational& level) {
  const char* dir = std::getenv("NSMM_CACHE_DIR");
  std::filesystem::path file;
  if (dir && *dir) {
    file = std::filesystem::path(dir) / cache_key(c, h, level);
    std::ifstream in(file);
    if (in) {
      std::string header, line;
      std::getline(in, header);
      std::vector<VermaVector> out;
      while (std::getline(in, line))
        if (!line.empty()) out.push_back(parse_element(line, c));
      return out;
    }
  }
  Module m(c, h);
  auto vectors = m.singular_vectors(level);
  if (!file.empty()) {
    std::filesystem::create_directories(file.parent_path());
    std::ofstream(file) << format_fixture(c, h, level, vectors);
  }
  return vectors;
}

// ---- subcommands ---------------------------------------------------------

int cmd_models(const Options& o, std::ostream& out) {
  const Rational c = central_charge(o.p, o.q);
  const auto labels = irreducible_list(o.p, o.q);
  if (o.json) {
    json mods = json::array();
    for (const auto& l : labels)
      mods.push_back({{"m", l.m}, {"n", l.n}, {"h_num", l.h.get_num().get_str()}, {"h_den", l.h.get_den().get_str()}});
    emit(out, {{"p", o.p}, {"q", o.q}, {"c", fraction(c)}, {"modules", mods}});
    return kOk;
  }
  out << "(p, q) = (" << o.p << ", " << o.q << ")  c = " << to_string(c) << "\n";
  out << std::left << std::setw(4) << "m" << std::setw(4) << "n" << "h\n";
  for (const auto& l : labels) out << std::setw(4) << l.m << std::setw(4) << l.n << to_string(l.h) << "\n";
  return kOk;
}

int cmd_singular(const Options& o, std::ostream& out) {
  const Rational c = parse_rational(o.c), h = parse_rational(o.h), level = parse_rational(o.level);
  if (level <= 0 || Rational(2 * level).get_den() != 1) throw InvalidArgument("level must be a positive multiple of 1/2");
  const auto vectors = singular_cached(c, h, level);
  if (o.json) {
    json v = json::array();
    for (const auto& x : vectors) v.push_back(x.to_string());
    emit(out, {{"c", fraction(c)}, {"h", fraction(h)}, {"level", fraction(level)}, {"vectors", v}});
    return kOk;
  }
  out << format_fixture(c, h, level, vectors);
  return kOk;
}

int cmd_zhu(const Options& o, std::ostream& out) {
  if (!o.h.empty()) {
    const Rational h = parse_rational(o.h);
    const ModuleLabel label = label_for_weight(o.p, o.q, h);
    const FusionIdeals ideals = bimodule_ideals(central_charge(o.p, o.q), h, maximal_submodule_generators(o.p, o.q, label));
    auto strings = [](const std::vector<Poly2>& ps) {
      std::vector<std::string> s;
      for (const auto& p : ps) s.push_back(p.to_string());
      return s;
    };
    if (o.json) {
      emit(out, {{"h", fraction(h)},
                 {"even", strings(ideals.even)},
                 {"odd", strings(ideals.odd)},
                 {"stabilized", ideals.stabilized},
                 {"cutoff", fraction(ideals.last_level)}});
      return kOk;
    }
    out << "A(L(" << to_string(central_charge(o.p, o.q)) << ", " << to_string(h) << ")) = C[x,y]/I1 + C[x,y]v/I2 v\n";
    out << "I1 generators:\n";
    for (const auto& s : strings(ideals.even)) out << "  " << s << "\n";
    out << "I2 generators:\n";
    for (const auto& s : strings(ideals.odd)) out << "  " << s << "\n";
    out << (ideals.stabilized ? "stabilized" : "warning: not stabilized") << " (levels up to " << to_string(ideals.last_level)
        << ")\n";
    return kOk;
  }
  const VacuumZhu z = zhu_algebra_vacuum(o.p, o.q);
  std::vector<std::string> roots;
  for (const auto& r : z.roots) roots.push_back(fraction(r));
  if (o.json) {
    emit(out, {{"p", o.p},
               {"q", o.q},
               {"generator", z.generator.to_string()},
               {"roots", roots},
               {"singular_level", fraction(z.singular_level)},
               {"singular_vector", z.singular_vector.to_string()},
               {"stabilized", z.stabilized}});
    return kOk;
  }
  out << "A(L(" << to_string(central_charge(o.p, o.q)) << ", 0)) = C[x]/(" << z.generator.to_string() << ")\n";
  out << "roots:";
  for (const auto& r : z.roots) out << " " << to_string(r);
  out << "\nsingular vector of V at level " << to_string(z.singular_level) << ": " << z.singular_vector.to_string() << "\n";
  if (!z.stabilized) out << "warning: ideal not stabilized\n";
  return kOk;
}

int cmd_fusion(const Options& o, std::ostream& out) {
  const auto table = fusion_table(o.p, o.q);
  if (o.json) {
    json rows = json::array();
    for (const auto& r : table) rows.push_back(to_json(r));
    emit(out, {{"p", o.p}, {"q", o.q}, {"rows", rows}});
    return kOk;
  }
  out << std::left << std::setw(8) << "h1" << std::setw(8) << "h2" << std::setw(8) << "h3" << std::setw(6) << "even"
      << std::setw(6) << "odd" << "total\n";
  for (const auto& r : table)
    out << std::setw(8) << to_string(r.h1) << std::setw(8) << to_string(r.h2) << std::setw(8) << to_string(r.h3)
        << std::setw(6) << r.count.even << std::setw(6) << r.count.odd << r.count.total << "\n";
  return kOk;
}

struct OdeSetup {
  CorrelatorSpec spec;
  std::vector<Component> pairing;
  VermaVector null;
  Rational level;
  DiffOpSystem system;
  OdeSystem ode;
};

OdeSetup ode_setup(const Options& o) {
  OdeSetup s;
  s.spec = {parse_rational(o.c), parse_rational(o.h1), parse_rational(o.h2), parse_rational(o.h3),
            parse_rational(o.h4), parse_rational(o.t1), parse_rational(o.t2)};
  std::stringstream ps(o.pairing);
  for (std::string item; std::getline(ps, item, ',');) s.pairing.push_back(parse_component(item));
  if (o.slot < 1 || o.slot > 3) throw InvalidArgument("--slot must be 1, 2 or 3");
  const Rational& h = o.slot == 1 ? s.spec.h1 : o.slot == 2 ? s.spec.h2 : s.spec.h3;
  if (!o.null_text.empty()) {
    s.null = parse_element(o.null_text, s.spec.c);
    s.level = vector_level(s.null);
  } else {
    Module m(s.spec.c, h);
    if (!o.level.empty()) {
      s.level = parse_rational(o.level);
      auto v = singular_cached(s.spec.c, h, s.level);
      if (v.empty()) throw ComputationError("no singular vector at level " + to_string(s.level));
      s.null = v.front();
    } else {
      auto found = m.scan_singular(8);
      if (found.empty()) throw ComputationError("no singular vector up to level 8");
      s.level = found.front().first;
      s.null = found.front().second.front();
    }
  }
  s.system = derive_system(s.null, o.slot, s.spec, s.pairing);
  s.ode = reduce_to_one_variable(s.system, s.spec);
  return s;
}

bool is_reference_case(const OdeSetup& s, const Options& o) {
  const CorrelatorSpec e = CorrelatorSpec::reference_case();
  return o.slot == 3 && s.spec.c == e.c && s.spec.h1 == e.h1 && s.spec.h2 == e.h2 && s.spec.h3 == e.h3 &&
         s.spec.h4 == e.h4 && s.spec.t1 == e.t1 && s.spec.t2 == e.t2 && s.level == 2 &&
         (o.pairing == "Q00,Q11" || o.pairing == "Q10,Q01");
}

int cmd_ode_derive(const Options& o, std::ostream& out) {
  const OdeSetup s = ode_setup(o);
  const RegularSingularSystem rs = companion_form(s.ode);
  std::vector<DiffEntry> diff;
  if (is_reference_case(s, o)) diff = diff_systems(reference_system(o.pairing), s.ode);
  if (o.json) {
    json d = json::array();
    for (const auto& e : diff) d.push_back(to_json(e));
    emit(out, {{"null", s.null.to_string()},
               {"slot", o.slot},
               {"level", fraction(s.level)},
               {"two_variable", to_json(s.system)},
               {"one_variable", to_json(s.ode)},
               {"first_order", to_json(rs)},
               {"comparison", d}});
    return kOk;
  }
  out << "null vector at slot " << o.slot << " (level " << to_string(s.level) << "): " << s.null.to_string() << "\n\n";
  out << "two-variable system:\n" << to_string(s.system) << "\n";
  out << "one-variable system in z = (z2/z1)^(1/2):\n" << to_string(to_derivative_form(s.ode)) << "\n";
  out << to_string(rs);
  if (!diff.empty()) {
    int match = 0;
    for (const auto& e : diff) match += e.match;
    out << "\ncomparison with the reference equations (" << match << "/" << diff.size() << " terms agree):\n";
    for (const auto& e : diff) {
      out << "  " << e.equation << " = ... " << e.term << ": " << (e.match ? "agrees" : "differs");
      if (!e.match && e.ratio) out << " (derived/reference = " << to_string(*e.ratio) << ")";
      out << "\n";
      if (!e.match) out << "    reference " << e.reference.to_string() << "\n    derived " << e.derived.to_string() << "\n";
    }
  }
  return kOk;
}

int cmd_ode_solve(const Options& o, std::ostream& out) {
  const OdeSetup s = ode_setup(o);
  const RegularSingularSystem rs = companion_form(s.ode);
  const IndicialExponents ex = indicial_exponents(rs);
  std::vector<Rational> targets;
  if (!o.rho.empty())
    targets.push_back(parse_rational(o.rho));
  else
    for (const auto& [r, m] : ex.roots) targets.push_back(r);
  std::optional<Rational> z;
  if (!o.z.empty()) z = parse_rational(o.z);

  json sols = json::array();
  std::ostringstream text;
  text << "first-order system of size " << rs.size() << "; characteristic polynomial of A(0): "
       << ex.characteristic.to_string() << "\nexponents:";
  for (const auto& [r, m] : ex.roots) text << " " << to_string(r) << (m > 1 ? " (x" + std::to_string(m) + ")" : "");
  if (!ex.complete) text << " plus roots of " << ex.remainder.to_string();
  text << "\n";
  for (const auto& rho : targets) {
    json entry;
    try {
      const SeriesSolution sol = series_solution(rs, rho, o.order);
      const Rational res = residual(sol, rs);
      entry = to_json(sol);
      entry["residual"] = fraction(res);
      entry["growth_ratio"] = growth_ratio(sol);
      text << "rho = " << to_string(rho) << ": residual " << to_string(res) << " to order " << o.order
           << ", growth ratio " << std::setprecision(6) << growth_ratio(sol) << ", c_0 = (";
      for (std::size_t i = 0; i < sol.coefficients[0].size(); ++i)
        text << (i ? ", " : "") << to_string(sol.coefficients[0][i]);
      text << ")\n";
      if (z) {
        const Evaluation ev = evaluate(sol, *z);
        json vals = json::array();
        text << "  Y(" << to_string(*z) << ") =";
        for (const auto& v : ev.value) {
          vals.push_back({v.real(), v.imag()});
          text << " " << std::setprecision(12) << v.real() << (v.imag() >= 0 ? "+" : "") << v.imag() << "i";
        }
        text << "  (tail bound " << std::setprecision(3) << ev.tail_bound << ", heuristic)\n";
        entry["value"] = vals;
        entry["tail_bound"] = ev.tail_bound;
      }
    } catch (const ResonanceError& e) {
      if (!o.rho.empty()) throw;
      entry = {{"exponent", fraction(rho)}, {"resonant", e.what()}};
      text << "rho = " << to_string(rho) << ": resonant, skipped (" << e.what() << ")\n";
    }
    sols.push_back(std::move(entry));
  }
  if (o.json) {
    std::vector<json> roots;
    for (const auto& [r, m] : ex.roots) roots.push_back({{"exponent", fraction(r)}, {"multiplicity", m}});
    emit(out, {{"characteristic", ex.characteristic.to_string()},
               {"exponents", roots},
               {"complete", ex.complete},
               {"solutions", sols}});
    return kOk;
  }
  out << text.str();
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto checks = acceptance_checks();
  bool ok = true;
  json rows = json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    if (o.json)
      rows.push_back({{"criterion", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
    else
      out << (c.pass ? "PASS " : "FAIL ") << c.id << " " << c.title << ": " << c.detail << "\n";
  }
  if (o.json) emit(out, {{"pass", ok}, {"criteria", rows}});
  return ok ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Neveu-Schwarz minimal models: singular vectors, Zhu algebras, fusion rules and null-vector ODEs"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--json", o.json, "Shorthand for --format json");

  auto* models = app.add_subcommand("models", "Central charge and irreducible modules of a minimal model");
  auto* singular = app.add_subcommand("singular", "Singular vectors of M(c,h) at a level");
  auto* zhu = app.add_subcommand("zhu", "Zhu algebra of the vacuum module, or bimodule ideals with --h");
  auto* fusion = app.add_subcommand("fusion", "Fusion table of a minimal model");
  auto* derive = app.add_subcommand("ode-derive", "Differential system from a null vector");
  auto* solve = app.add_subcommand("ode-solve", "Frobenius solutions of the derived system");
  auto* verify = app.add_subcommand("verify", "Run the golden checks; exit 1 on any mismatch");

  for (auto* s : {models, zhu, fusion}) {
    s->add_option("--p", o.p, "p")->capture_default_str();
    s->add_option("--q", o.q, "q")->capture_default_str();
  }
  zhu->add_option("--h", o.h, "Lowest weight (num/den) for the bimodule ideals");
  singular->add_option("--c", o.c, "Central charge")->capture_default_str();
  singular->add_option("--h", o.h, "Lowest weight")->required();
  singular->add_option("--level", o.level, "Level (multiple of 1/2)")->required();
  for (auto* s : {derive, solve}) {
    s->add_option("--c", o.c, "Central charge")->capture_default_str();
    s->add_option("--h1", o.h1, "Weight at slot 1")->capture_default_str();
    s->add_option("--h2", o.h2, "Weight at slot 2")->capture_default_str();
    s->add_option("--h3", o.h3, "Weight at slot 3")->capture_default_str();
    s->add_option("--h4", o.h4, "Weight of the dual state")->capture_default_str();
    s->add_option("--t1", o.t1, "Ansatz exponent t1")->capture_default_str();
    s->add_option("--t2", o.t2, "Ansatz exponent t2")->capture_default_str();
    s->add_option("--slot", o.slot, "Slot of the null vector")->capture_default_str();
    s->add_option("--level", o.level, "Level of the null vector (default: lowest)");
    s->add_option("--null", o.null_text, "Null vector as an expression, e.g. \"8*L(-2) - 21*L(-1)^2 + ...\"");
    s->add_option("--pairing", o.pairing, "Components, e.g. Q00,Q11")->capture_default_str();
  }
  solve->add_option("--order", o.order, "Truncation order")->capture_default_str();
  solve->add_option("--rho", o.rho, "Solve only for this exponent");
  solve->add_option("--z", o.z, "Evaluate the solutions at this point");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  o.json = o.json || format == "json";

  try {
    if (*models) return cmd_models(o, out);
    if (*singular) return cmd_singular(o, out);
    if (*zhu) return cmd_zhu(o, out);
    if (*fusion) return cmd_fusion(o, out);
    if (*derive) return cmd_ode_derive(o, out);
    if (*solve) return cmd_ode_solve(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}

}  // namespace nsmm::cli
