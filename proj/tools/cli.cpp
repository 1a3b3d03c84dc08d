#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grassorbit/error.hpp"
#include "grassorbit/parse.hpp"
#include "grassorbit/wedge.hpp"

namespace grassorbit::cli {

namespace {

using nlohmann::json;

struct Options {
  Code q = 2;
  std::string modulus;
  std::string blocks;
  std::string seed;
  std::string query;
  std::optional<long long> query_power;
  int t = -1;
  std::string method = "orbit";
  std::string format = "text";
  bool enumerate = false;
  bool legend = false;
};

// Re-raises a library error with the name of the flag that caused it.
template <class F>
auto with_flag(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const UsageError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const AlgebraError& e) {
    throw AlgebraError(flag + ": " + e.what());
  }
}

Field make_field(const Options& o) {
  if (o.modulus.empty()) return with_flag("--q", [&] { return Field::of_order(o.q); });
  const Field guess = with_flag("--q", [&] { return Field::of_order(o.q); });
  const Field base = Field::prime(guess.characteristic());
  const Polynomial m = with_flag("--modulus", [&] { return parse_polynomial(base, o.modulus); });
  if (!m.degree() || *m.degree() != guess.degree()) {
    throw UsageError("--modulus: degree must be " + std::to_string(guess.degree()) + " for q=" +
                     std::to_string(o.q));
  }
  return with_flag("--modulus",
                   [&] { return Field::extension(guess.characteristic(), m.coeffs()); });
}

GeneratorSpec make_generator(const Field& f, const Options& o) {
  if (o.blocks.empty()) throw UsageError("--blocks: required");
  return with_flag("--blocks", [&] { return GeneratorSpec(f, parse_polynomial_list(f, o.blocks)); });
}

Subspace make_subspace(const Field& f, const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + ": required");
  return with_flag(flag, [&] { return Subspace(parse_matrix(f, text)); });
}

void check_width(const GeneratorSpec& g, const Subspace& s, const std::string& flag) {
  if (s.ambient() != g.n()) {
    throw UsageError(flag + ": has " + std::to_string(s.ambient()) +
                     " columns but --blocks act on dimension " + std::to_string(g.n()));
  }
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

json field_json(const Field& f) {
  return {{"q", f.order()}, {"characteristic", f.characteristic()}, {"modulus", f.modulus()}};
}

json generator_json(const GeneratorSpec& g) {
  json blocks = json::array();
  for (const auto& p : g.blocks()) blocks.push_back(p.coeffs());
  return {{"blocks", blocks},
          {"class", to_string(classify(g))},
          {"order", generator_order(g)}};
}

std::string legend(int n, int k) {
  std::string out;
  for (const auto& t : lex_tuples(n, k)) {
    if (!out.empty()) out += ' ';
    out += to_string(t);
  }
  return out;
}

// The query subspace: --query, or seed P^i from --query-power.
Subspace make_query(const Field& f, const Options& o, const Subspace& seed) {
  if (!o.query.empty() && o.query_power) {
    throw UsageError("--query-power: cannot be combined with --query");
  }
  if (o.query_power) {
    if (*o.query_power < 0) throw UsageError("--query-power: must be nonnegative");
    const GeneratorSpec g = make_generator(f, o);
    check_width(g, seed, "--seed");
    return seed * pow(generator_matrix(g), static_cast<std::uint64_t>(*o.query_power));
  }
  if (o.query.empty()) throw UsageError("--query: required (or --query-power)");
  const Subspace v = make_subspace(f, o.query, "--query");
  if (v.ambient() != seed.ambient()) {
    throw UsageError("--query: ambient dimension " + std::to_string(v.ambient()) +
                     " differs from --seed ambient dimension " + std::to_string(seed.ambient()));
  }
  return v;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const GeneratorSpec g = make_generator(f, o);
  const Subspace seed = make_subspace(f, o.seed, "--seed");
  check_width(g, seed, "--seed");
  const OrbitCode code = orbit(g, seed);
  if (o.format == "json") {
    json words = json::array();
    for (const auto& w : code.codewords) words.push_back(matrix_json(w.basis()));
    json doc = {{"schema", 1},
                {"field", field_json(f)},
                {"generator", generator_json(g)},
                {"seed", matrix_json(seed.basis())},
                {"codewords", words},
                {"orbit_length", code.orbit_length},
                {"min_distance", code.min_distance ? json(*code.min_distance) : json(nullptr)}};
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "field: " << f.name() << '\n';
  out << "generator:";
  for (const auto& p : g.blocks()) out << ' ' << to_string(p) << (&p == &g.blocks().back() ? "" : ";");
  out << " (" << to_string(classify(g)) << ", order " << generator_order(g) << ")\n";
  for (std::size_t i = 0; i < code.codewords.size(); ++i) {
    out << "codeword " << i << ": " << format_matrix(code.codewords[i].basis()) << '\n';
  }
  out << "orbit_length: " << code.orbit_length << '\n';
  out << "min_distance: " << (code.min_distance ? std::to_string(*code.min_distance) : "none")
      << '\n';
  return kOk;
}

int cmd_pluecker(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const GeneratorSpec g = make_generator(f, o);
  const Subspace seed = make_subspace(f, o.seed, "--seed");
  check_width(g, seed, "--seed");

  std::vector<PlueckerPoint> via_orbit;
  std::vector<PlueckerPoint> via_minors;
  if (o.method != "minors") via_orbit = plucker_orbit(g, seed);
  if (o.method != "orbit") {
    for (const auto& w : orbit(g, seed).codewords) via_minors.push_back(plucker_direct(w));
  }
  const bool both = o.method == "both";
  const bool agree = !both || via_orbit == via_minors;
  const auto& shown = o.method == "minors" ? via_minors : via_orbit;

  if (o.format == "json") {
    json points = json::array();
    for (const auto& p : shown) points.push_back(p.coords());
    json doc = {{"schema", 1},
                {"method", o.method},
                {"n", g.n()},
                {"k", seed.dim()},
                {"points", points}};
    if (o.legend) {
      json tuples = json::array();
      for (const auto& t : lex_tuples(g.n(), seed.dim())) tuples.push_back(t.entries());
      doc["legend"] = tuples;
    }
    if (both) doc["agree"] = agree;
    out << doc.dump(2) << '\n';
  } else {
    if (o.legend) out << "legend: " << legend(g.n(), seed.dim()) << '\n';
    for (const auto& p : shown) out << to_string(p) << '\n';
    if (both) out << (agree ? "AGREE" : "DISAGREE") << '\n';
  }
  return agree ? kOk : kAlgebra;
}

int cmd_ball(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const Subspace center = make_subspace(f, o.seed, "--seed");
  if (o.t < 0 || o.t > center.dim()) {
    throw UsageError("--t: must lie in [0, " + std::to_string(center.dim()) + "], got " +
                     std::to_string(o.t));
  }
  auto verdict = [](bool m) { return m ? "member" : "non-member"; };

  std::vector<Subspace> queries;
  if (o.enumerate) {
    if (!o.query.empty() || o.query_power) {
      throw UsageError("--enumerate: cannot be combined with --query or --query-power");
    }
    queries = with_flag("--enumerate", [&] {
      return enumerate_grassmannian(f, center.dim(), center.ambient());
    });
  } else {
    queries.push_back(make_query(f, o, center));
  }
  if (queries.front().dim() != center.dim()) {
    throw UsageError("--query: dimension " + std::to_string(queries.front().dim()) +
                     " differs from --seed dimension " + std::to_string(center.dim()));
  }

  std::size_t members = 0;
  std::size_t disagreements = 0;
  json rows = json::array();
  for (const auto& v : queries) {
    const bool by_pluecker = ball_membership(center, v, o.t);
    const bool by_distance = ball_membership_by_distance(center, v, o.t);
    members += by_pluecker ? 1 : 0;
    disagreements += by_pluecker != by_distance ? 1 : 0;
    if (o.format == "json") {
      rows.push_back({{"query", matrix_json(v.basis())},
                      {"pluecker", by_pluecker},
                      {"distance", by_distance}});
    } else {
      if (o.enumerate) out << format_matrix(v.basis()) << ' ';
      out << verdict(by_pluecker) << '/' << verdict(by_distance);
      if (by_pluecker != by_distance) out << " DISAGREE";
      out << '\n';
    }
  }
  if (o.format == "json") {
    out << json{{"schema", 1},
                {"center", matrix_json(center.basis())},
                {"t", o.t},
                {"queries", rows},
                {"members", members},
                {"disagreements", disagreements}}
               .dump(2)
        << '\n';
  } else if (o.enumerate) {
    out << "members: " << members << " of " << queries.size() << '\n';
    out << "disagreements: " << disagreements << '\n';
  }
  return disagreements == 0 ? kOk : kAlgebra;
}

int cmd_distance(const Options& o, std::ostream& out) {
  const Field f = make_field(o);
  const Subspace u = make_subspace(f, o.seed, "--seed");
  const Subspace v = make_query(f, o, u);
  const int d = subspace_distance(u, v);
  if (o.format == "json") {
    out << json{{"schema", 1}, {"distance", d}}.dump(2) << '\n';
  } else {
    out << d << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic orbit codes and their Plücker coordinates over finite fields",
               "grassorbit"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Field order, a prime power")->capture_default_str();
    sub->add_option("--modulus", o.modulus, "Extension modulus over GF(p), e.g. x^2+x+1");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* orbit_cmd = app.add_subcommand("orbit", "Enumerate the cyclic orbit code of a seed");
  add_field(orbit_cmd);
  orbit_cmd->add_option("--blocks", o.blocks, "Companion block polynomials, ';'-separated")
      ->required();
  orbit_cmd->add_option("--seed", o.seed, "Seed basis, rows ';'-separated")->required();

  auto* pl_cmd = app.add_subcommand("pluecker", "Plücker coordinates of every codeword");
  add_field(pl_cmd);
  pl_cmd->add_option("--blocks", o.blocks, "Companion block polynomials")->required();
  pl_cmd->add_option("--seed", o.seed, "Seed basis")->required();
  pl_cmd->add_option("--method", o.method, "orbit: wedge action, minors: determinants, both")
      ->check(CLI::IsMember({"orbit", "minors", "both"}))
      ->capture_default_str();
  pl_cmd->add_flag("--legend", o.legend, "Print the coordinate index tuples");

  auto* ball_cmd = app.add_subcommand("ball", "Membership in the ball of radius 2t");
  add_field(ball_cmd);
  ball_cmd->add_option("--seed", o.seed, "Ball center basis")->required();
  ball_cmd->add_option("--t", o.t, "Radius parameter, 0 <= t <= k")->required();
  ball_cmd->add_option("--query", o.query, "Query subspace basis");
  ball_cmd->add_option("--query-power", o.query_power, "Use seed P^i as the query");
  ball_cmd->add_option("--blocks", o.blocks, "Generator for --query-power");
  ball_cmd->add_flag("--enumerate", o.enumerate, "Test every subspace of the Grassmannian");

  auto* dist_cmd = app.add_subcommand("distance", "Subspace distance");
  add_field(dist_cmd);
  dist_cmd->add_option("--seed", o.seed, "First subspace basis")->required();
  dist_cmd->add_option("--query", o.query, "Second subspace basis");
  dist_cmd->add_option("--query-power", o.query_power, "Use seed P^i as the second subspace");
  dist_cmd->add_option("--blocks", o.blocks, "Generator for --query-power");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (orbit_cmd->parsed()) return cmd_orbit(o, out);
    if (pl_cmd->parsed()) return cmd_pluecker(o, out);
    if (ball_cmd->parsed()) return cmd_ball(o, out);
    if (dist_cmd->parsed()) return cmd_distance(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return kAlgebra;
  }
  return kUsage;
}

}  // namespace grassorbit::cli
