#include "lierep_cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lierep/classification.hpp"
#include "lierep/errors.hpp"
#include "lierep/lemma_lab.hpp"
#include "lierep/multiplicity.hpp"
#include "lierep/serialize.hpp"
#include "lierep/weight_lattice.hpp"

namespace lierep::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

using Row = std::vector<std::string>;

// Left-aligned columns separated by two spaces, trailing blanks trimmed.
void render_table(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const Row& r) {
    std::string s;
    for (std::size_t c = 0; c < r.size(); ++c) {
      s += r[c];
      if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void render_csv(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  auto line = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << csv_field(r[c]);
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

const Row kProfileHeader{"type", "weight", "n1", "n2", "dim"};

Row profile_row(const LieType& type, const Weight& w, const WeightProfile& p) {
  return {type.name(), w.to_string(), to_string(p.count(1)), to_string(p.count(2)), to_string(p.dim)};
}

void emit_profiles(std::ostream& out, Format format, const std::vector<Row>& rows) {
  if (format == Format::csv) {
    render_csv(out, kProfileHeader, rows);
  } else {
    render_table(out, {"type", "highest weight", "n1", "n2", "dimension"}, rows);
  }
}

LieType parse_type(const std::string& text) {
  try {
    return LieType::parse(text);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("--type: ") + e.what());
  }
}

Weight parse_weight(const RootSystem& rs, const std::string& text, const char* flag) {
  Weight w;
  try {
    w = Weight::parse(text);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string(flag) + ": " + e.what());
  }
  if (w.rank() != rs.rank()) {
    throw InvalidArgument(std::string(flag) + ": " + rs.type().name() + " needs " + std::to_string(rs.rank()) +
                          " coordinates, got " + std::to_string(w.rank()));
  }
  return w;
}

Weight parse_highest(const RootSystem& rs, const std::string& text) {
  Weight w = parse_weight(rs, text, "--highest");
  if (!w.is_dominant()) throw InvalidArgument("--highest: " + w.to_string() + " is not dominant");
  return w;
}

std::vector<int> parse_index_list(const std::string& text, int rank, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int i = std::stoi(item, &used);
      if (used != item.size() || i < 1 || i > rank) throw std::out_of_range("");
      out.push_back(i - 1);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string(flag) + ": expected indices 1.." + std::to_string(rank) + ", got \"" +
                            item + "\"");
    }
  }
  if (out.empty()) throw InvalidArgument(std::string(flag) + ": empty index list");
  return out;
}

std::vector<RootVector> parse_base(const std::string& text, int rank) {
  std::vector<RootVector> roots;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    Weight w;
    try {
      w = Weight::parse(item);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(std::string("--base: ") + e.what());
    }
    if (w.rank() != rank) {
      throw InvalidArgument("--base: root " + item + " needs " + std::to_string(rank) + " coordinates");
    }
    roots.emplace_back(w.coords().begin(), w.coords().end());
  }
  if (roots.empty()) throw InvalidArgument("--base: empty base");
  return roots;
}

struct Options {
  std::string type;
  std::string highest;
  std::string weight;
  std::string levi;
  std::string base;
  std::string suite;
  std::string tier = "default";
  int bound = 4;
  int k = 2;
  int a_max = 20;
  int ab_max = 6;
  bool no_prune = false;
  Format format = Format::text;
};

int cmd_mult(const Options& o, std::ostream& out) {
  MultiplicityCache cache;
  const RootSystem& rs = cache.root_system(parse_type(o.type));
  const Weight lam = parse_highest(rs, o.highest);
  if (!o.weight.empty()) {
    const Weight mu = parse_weight(rs, o.weight, "--weight");
    const std::int64_t m = cache.multiplicity(rs.type(), lam, mu);
    if (o.format == Format::json) {
      out << json{{"type", rs.type().name()}, {"highest", to_json(lam)}, {"weight", to_json(mu)}, {"multiplicity", m}}
                 .dump(2)
          << '\n';
    } else if (o.format == Format::csv) {
      render_csv(out, {"type", "highest", "weight", "multiplicity"},
                 {{rs.type().name(), lam.to_string(), mu.to_string(), std::to_string(m)}});
    } else {
      out << m << '\n';
    }
    return kOk;
  }
  const auto& table = cache.table(rs.type(), lam);
  if (o.format == Format::json) {
    out << to_json(rs, table).dump(2) << '\n';
    return kOk;
  }
  std::vector<Row> rows;
  for (const auto& [mu, m] : table.entries()) {
    rows.push_back({mu.to_string(), std::to_string(m), std::to_string(weyl_orbit_size(rs, mu))});
  }
  if (o.format == Format::csv) {
    render_csv(out, {"weight", "multiplicity", "orbit_size"}, rows);
  } else {
    render_table(out, {"dominant weight", "multiplicity", "orbit size"}, rows);
  }
  return kOk;
}

int cmd_dim(const Options& o, std::ostream& out) {
  const RootSystem rs(parse_type(o.type));
  const Weight lam = parse_highest(rs, o.highest);
  const Integer dim = weyl_dimension(rs, lam);
  if (o.format == Format::json) {
    out << json{{"type", rs.type().name()}, {"highest", to_json(lam)}, {"dim", integer_to_json(dim)}}.dump(2) << '\n';
  } else if (o.format == Format::csv) {
    render_csv(out, {"type", "highest", "dim"}, {{rs.type().name(), lam.to_string(), to_string(dim)}});
  } else {
    out << dim << '\n';
  }
  return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const RootSystem rs(parse_type(o.type));
  const Weight lam = parse_highest(rs, o.highest);
  const auto table = multiplicity_table(rs, lam);
  const WeightProfile p = weight_count_profile(rs, table);
  if (o.format == Format::json) {
    out << json{{"type", rs.type().name()},
                {"highest", to_json(lam)},
                {"max_multiplicity", table.max()},
                {"profile", to_json(p)}}
               .dump(2)
        << '\n';
    return kOk;
  }
  emit_profiles(out, o.format, {profile_row(rs.type(), lam, p)});
  return kOk;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const RootSystem rs(parse_type(o.type));
  const Weight w = parse_weight(rs, o.weight, "--weight");
  const Weight dom = dominant_representative(rs, w);
  const std::uint64_t size = weyl_orbit_size(rs, dom);
  if (o.format == Format::json) {
    out << json{{"type", rs.type().name()}, {"weight", to_json(w)}, {"dominant", to_json(dom)}, {"orbit_size", size}}
               .dump(2)
        << '\n';
  } else if (o.format == Format::csv) {
    render_csv(out, {"type", "weight", "dominant", "orbit_size"},
               {{rs.type().name(), w.to_string(), dom.to_string(), std::to_string(size)}});
  } else {
    out << size << '\n';
  }
  return kOk;
}

int cmd_restrict(const Options& o, std::ostream& out) {
  const RootSystem rs(parse_type(o.type));
  const Weight lam = parse_highest(rs, o.highest);
  if (o.levi.empty() == o.base.empty()) throw InvalidArgument("restrict needs exactly one of --levi or --base");
  Restriction r;
  if (!o.levi.empty()) {
    r = levi_restriction(rs, lam, parse_index_list(o.levi, rs.rank(), "--levi"));
  } else {
    r = subsystem_restrict(rs, lam, SubsystemBase::from_roots(rs, parse_base(o.base, rs.rank())));
  }
  if (o.format == Format::json) {
    json j = to_json(r);
    j["type"] = rs.type().name();
    j["highest"] = to_json(lam);
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::vector<Row> rows;
  for (const auto& c : r.components) {
    std::string nodes;
    for (int n : c.nodes) nodes += (nodes.empty() ? "" : " ") + std::to_string(n + 1);
    rows.push_back({c.type.name(), nodes, c.weight.to_string()});
  }
  if (o.format == Format::csv) {
    render_csv(out, {"type", "nodes", "weight"}, rows);
  } else {
    render_table(out, {"component", o.levi.empty() ? "base roots" : "simple roots", "highest weight"}, rows);
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  MultiplicityCache cache;
  const RootSystem& rs = cache.root_system(parse_type(o.type));
  const auto result = omega_search(rs, o.k, o.bound, !o.no_prune, cache);
  if (o.format == Format::json) {
    json j = to_json(result);
    json profiles = json::object();
    for (const auto& w : result.prime(o.k)) {
      profiles[w.to_string()] = to_json(weight_count_profile(rs, cache.table(rs.type(), w)));
    }
    j["profiles"] = profiles;
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::vector<Row> rows;
  for (const auto& w : result.prime(o.k)) {
    rows.push_back(profile_row(rs.type(), w, weight_count_profile(rs, cache.table(rs.type(), w))));
  }
  if (o.format == Format::csv) {
    render_csv(out, kProfileHeader, rows);
    return kOk;
  }
  for (int j = 1; j <= o.k; ++j) {
    out << (j == 1 ? "Omega_1" : "Omega'_" + std::to_string(j)) << ":";
    for (const auto& w : result.prime(j)) out << ' ' << w.to_string();
    out << '\n';
  }
  out << '\n';
  emit_profiles(out, o.format, rows);
  out << "\n" << rs.type().name() << ": verified within bound " << o.bound << " (" << result.evaluated << " of "
      << result.candidates << " candidates evaluated)\n";
  return kOk;
}

VerifyConfig verify_config(const Options& o, bool bound_given) {
  if (o.tier == "extended") return extended_config();
  return default_config(bound_given ? o.bound : 4);
}

int verify_table1_cmd(const Options& o, bool bound_given, std::ostream& out) {
  VerifyConfig config = verify_config(o, bound_given);
  config.prune = !o.no_prune;
  const auto v = verify_table1(config);
  if (o.format == Format::json) {
    out << to_json(v).dump(2) << '\n';
    return v.passed() ? kOk : kFailed;
  }
  std::vector<Row> rows;
  for (const auto& r : v.reports)
    for (const auto& w : r.omega2_prime) rows.push_back(profile_row(r.type, w, r.profiles.at(w)));
  if (o.format == Format::csv) {
    render_csv(out, kProfileHeader, rows);
    return v.passed() ? kOk : kFailed;
  }
  emit_profiles(out, o.format, rows);
  std::vector<Row> diffs;
  std::vector<std::string> notes;
  for (const auto& r : v.reports) {
    for (const auto& d : r.diffs) {
      diffs.push_back({r.type.name(), d.weight.to_string(), d.field, d.table_value.dump(), d.computed_value.dump(),
                       d.annotated ? "annotated" : "UNANNOTATED"});
    }
    for (const auto& n : r.notes) notes.push_back(r.type.name() + ": " + n);
  }
  if (!diffs.empty()) {
    out << '\n';
    render_table(out, {"type", "entry", "field", "table", "computed", "status"}, diffs);
  }
  if (!notes.empty()) out << '\n';
  for (const auto& n : notes) out << n << '\n';
  std::map<int, std::string> by_bound;
  for (const auto& t : config.targets) by_bound[t.bound] += (by_bound[t.bound].empty() ? "" : " ") + t.type.name();
  out << '\n';
  for (const auto& [b, types] : by_bound) out << "verified within bound " << b << ": " << types << '\n';
  out << v.unannotated_diffs() << " unannotated diffs\n";
  return v.passed() ? kOk : kFailed;
}

int verify_table2_cmd(const Options& o, bool bound_given, std::ostream& out) {
  VerifyConfig config = verify_config(o, bound_given);
  config.prune = !o.no_prune;
  const auto v = verify_table2(config);
  if (o.format == Format::json) {
    out << to_json(v).dump(2) << '\n';
    return v.passed() ? kOk : kFailed;
  }
  std::vector<Row> rows;
  for (const auto& r : v.reports) {
    for (const auto& [entry, m] : r.listed) {
      rows.push_back({r.type.name(), entry.weight.to_string(), entry.label, std::to_string(m),
                      m == 1 ? "ok" : "FAIL"});
    }
    for (const auto& w : r.missing) rows.push_back({r.type.name(), w.to_string(), "-", "1", "MISSING"});
  }
  if (o.format == Format::csv) {
    render_csv(out, {"type", "weight", "label", "max_multiplicity", "status"}, rows);
  } else {
    render_table(out, {"type", "weight", "label", "max multiplicity", "status"}, rows);
    out << '\n' << (v.passed() ? "passed" : "FAILED") << " (each type verified within its bound)\n";
  }
  return v.passed() ? kOk : kFailed;
}

int verify_a2_cmd(const Options& o, std::ostream& out) {
  const auto report = a2_family_check(o.a_max, o.ab_max);
  if (o.format == Format::json) {
    out << to_json(report).dump(2) << '\n';
    return report.passed() ? kOk : kFailed;
  }
  const LieType a2(Family::A, 2);
  std::vector<Row> rows;
  for (const auto& c : report.family) rows.push_back(profile_row(a2, c.weight, c.computed));
  if (o.format == Format::csv) {
    render_csv(out, kProfileHeader, rows);
    return report.passed() ? kOk : kFailed;
  }
  emit_profiles(out, o.format, rows);
  const auto bad_family = std::count_if(report.family.begin(), report.family.end(),
                                        [](const A2FamilyCase& c) { return !c.passed(); });
  const auto bad_triples = std::count_if(report.triples.begin(), report.triples.end(),
                                         [](const A2TripleCase& c) { return !c.passed(); });
  out << "\n(1,a),(a,1) for a <= " << report.a_max << ": " << report.family.size() - bad_family << "/"
      << report.family.size() << " match (3a+3, a(a+1)/2, (a+1)(a+3))\n";
  out << "m_(a,b)(lambda - 2(alpha_1+alpha_2)) = 3 for 2 <= a,b <= " << report.ab_max << ": "
      << report.triples.size() - bad_triples << "/" << report.triples.size() << '\n';
  return report.passed() ? kOk : kFailed;
}

int verify_lemmas_cmd(const Options& o, std::ostream& out) {
  const auto report = run_lemma_suite();
  if (o.format == Format::json) {
    out << to_json(report).dump(2) << '\n';
    return report.passed() ? kOk : kFailed;
  }
  std::vector<Row> rows;
  for (const auto& s : report.lemmas) {
    rows.push_back({s.name, std::to_string(s.cases), std::to_string(s.skipped), std::to_string(s.failures.size())});
  }
  if (o.format == Format::csv) {
    render_csv(out, {"lemma", "cases", "skipped", "failures"}, rows);
  } else {
    render_table(out, {"lemma", "cases", "skipped", "failures"}, rows);
    for (const auto& s : report.lemmas)
      for (const auto& f : s.failures) out << s.name << ": " << f.dump() << '\n';
    out << '\n' << (report.passed() ? "passed" : "FAILED") << '\n';
  }
  return report.passed() ? kOk : kFailed;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const RootSystem rs(parse_type(o.type));
  if (o.format == Format::json) {
    out << to_json(rs).dump(2) << '\n';
    return kOk;
  }
  std::vector<Row> rows;
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
    const auto& beta = rs.positive_roots()[i];
    std::string c;
    for (auto x : beta) c += (c.empty() ? "" : ",") + std::to_string(x);
    rows.push_back({"(" + c + ")", rs.positive_roots_fundamental()[i].to_string(), std::to_string(height(beta))});
  }
  if (o.format == Format::csv) {
    render_csv(out, {"root", "fundamental", "height"}, rows);
  } else {
    render_table(out, {"root", "fundamental coordinates", "height"}, rows);
    out << '\n' << rs.positive_roots().size() << " positive roots, |W| = " << rs.weyl_group_order() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weight multiplicities and small-multiplicity classification for simple Lie algebras", "lierep"};
  app.require_subcommand(1);
  Options o;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_type = [&](CLI::App* sub) { sub->add_option("--type", o.type, "Type, e.g. C3, E8")->required(); };

  auto* mult = app.add_subcommand("mult", "Weight multiplicity (or the whole dominant table without --weight)");
  add_type(mult);
  mult->add_option("--highest", o.highest, "Highest weight, e.g. 0,1,0")->required();
  mult->add_option("--weight", o.weight, "Weight mu, any integral weight");
  add_format(mult);

  auto* dim = app.add_subcommand("dim", "Dimension by Weyl's formula");
  add_type(dim);
  dim->add_option("--highest", o.highest, "Highest weight")->required();
  add_format(dim);

  auto* profile = app.add_subcommand("profile", "Counts n_m of weights of each multiplicity");
  add_type(profile);
  profile->add_option("--highest", o.highest, "Highest weight")->required();
  add_format(profile);

  auto* orbit = app.add_subcommand("orbit", "Weyl orbit size of a weight");
  add_type(orbit);
  orbit->add_option("--weight", o.weight, "Weight")->required();
  add_format(orbit);

  auto* restrict_cmd = app.add_subcommand("restrict", "Restriction of a highest weight to a subsystem");
  add_type(restrict_cmd);
  restrict_cmd->add_option("--highest", o.highest, "Highest weight")->required();
  restrict_cmd->add_option("--levi", o.levi, "Simple roots of a Levi subsystem, 1-based, e.g. 1,2");
  restrict_cmd->add_option("--base", o.base, "Subsystem base in root coordinates, e.g. \"1,1,0;0,0,1\"");
  add_format(restrict_cmd);

  auto* classify = app.add_subcommand("classify", "Bounded search for Omega_1 .. Omega_k");
  add_type(classify);
  classify->add_option("--bound", o.bound, "Maximum coordinate sum")->check(CLI::PositiveNumber);
  classify->add_option("--k", o.k, "Multiplicity cap (1 or 2)")->check(CLI::Range(1, 2));
  classify->add_flag("--no-prune", o.no_prune, "Evaluate every candidate");
  add_format(classify);

  auto* verify = app.add_subcommand("verify", "Check the reference tables and lemmas");
  verify->add_option("suite", o.suite, "table1, table2, a2 or lemmas")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "a2", "lemmas"}));
  auto* bound_opt = verify->add_option("--bound", o.bound, "Maximum coordinate sum")->check(CLI::PositiveNumber);
  verify->add_option("--tier", o.tier, "default or extended")->check(CLI::IsMember({"default", "extended"}));
  verify->add_flag("--no-prune", o.no_prune, "Evaluate every candidate");
  verify->add_option("--a-max", o.a_max, "a2: largest a in (1,a)")->check(CLI::Range(3, 200));
  verify->add_option("--ab-max", o.ab_max, "a2: largest a, b in (a,b)")->check(CLI::Range(2, 60));
  add_format(verify);

  auto* roots = app.add_subcommand("roots", "Positive roots and Cartan data");
  add_type(roots);
  add_format(roots);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (mult->parsed()) return cmd_mult(o, out);
    if (dim->parsed()) return cmd_dim(o, out);
    if (profile->parsed()) return cmd_profile(o, out);
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (restrict_cmd->parsed()) return cmd_restrict(o, out);
    if (classify->parsed()) return cmd_classify(o, out);
    if (roots->parsed()) return cmd_roots(o, out);
    const bool bound_given = bound_opt->count() > 0;
    if (o.suite == "table1") return verify_table1_cmd(o, bound_given, out);
    if (o.suite == "table2") return verify_table2_cmd(o, bound_given, out);
    if (o.suite == "a2") return verify_a2_cmd(o, out);
    return verify_lemmas_cmd(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
}

}  // namespace lierep::cli
