#include "lierep/serialize.hpp"

#include <limits>
#include <string>

#include "lierep/errors.hpp"

namespace lierep {

using nlohmann::json;

namespace {

json weights_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

std::string statement(int bound) { return "verified within bound " + std::to_string(bound); }

}  // namespace

json integer_to_json(const Integer& value) {
  if (value <= std::numeric_limits<std::int64_t>::max() && value >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

json to_json(const Weight& w) { return std::vector<std::int64_t>(w.coords().begin(), w.coords().end()); }

Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected a weight array, got " + j.dump());
  std::vector<std::int64_t> coords;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidArgument("weight coordinates must be integers: " + j.dump());
    coords.push_back(x.get<std::int64_t>());
  }
  return Weight(std::move(coords));
}

json to_json(const RootSystem& rs) {
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  json lengths = json::array();
  for (int i = 0; i < rs.rank(); ++i) lengths.push_back(to_string(rs.root_length2(i)));
  json roots = json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r);
  json fundamental = json::array();
  for (const auto& w : rs.positive_roots_fundamental()) fundamental.push_back(to_json(w));
  return {{"type", rs.type().name()},
          {"rank", rs.rank()},
          {"cartan", cartan},
          {"weyl_group_order", rs.weyl_group_order()},
          {"root_lengths2", lengths},
          {"positive_roots", roots},
          {"positive_roots_fundamental", fundamental}};
}

json to_json(const WeightProfile& profile) {
  json counts = json::object();
  for (const auto& [m, n] : profile.counts) counts[std::to_string(m)] = integer_to_json(n);
  return {{"dim", integer_to_json(profile.dim)},
          {"n1", integer_to_json(profile.count(1))},
          {"n2", integer_to_json(profile.count(2))},
          {"counts", counts}};
}

WeightProfile profile_from_json(const json& j) {
  WeightProfile profile;
  profile.dim = integer_from_json(j.at("dim"));
  for (const auto& [m, n] : j.at("counts").items()) {
    std::size_t used = 0;
    const std::int64_t key = std::stoll(m, &used);
    if (used != m.size()) throw InvalidArgument("bad multiplicity key " + m);
    profile.counts[key] = integer_from_json(n);
  }
  return profile;
}

json to_json(const RootSystem& rs, const MultiplicityTable& table) {
  json entries = json::array();
  for (const auto& [mu, m] : table.entries()) entries.push_back({to_json(mu), m});
  return {{"type", rs.type().name()},
          {"highest", to_json(table.highest())},
          {"entries", entries},
          {"profile", to_json(weight_count_profile(rs, table))}};
}

json to_json(const Restriction& restriction) {
  json comps = json::array();
  for (const auto& c : restriction.components) {
    json nodes = json::array();
    for (int n : c.nodes) nodes.push_back(n + 1);
    comps.push_back({{"type", c.type.name()}, {"nodes", nodes}, {"weight", to_json(c.weight)}});
  }
  return {{"components", comps}};
}

json to_json(const OmegaSearchResult& result) {
  json out = {{"type", result.type.name()},
              {"k", result.k},
              {"bound", result.bound},
              {"statement", statement(result.bound)},
              {"pruned", result.pruned},
              {"candidates", result.candidates},
              {"evaluated", result.evaluated}};
  for (int j = 1; j <= result.k; ++j) {
    out["omega" + std::to_string(j)] = weights_json(result.at(j));
    if (j > 1) out["omega" + std::to_string(j) + "_prime"] = weights_json(result.prime(j));
  }
  return out;
}

json to_json(const ClassificationReport& report) {
  json profiles = json::object();
  for (const auto& [w, p] : report.profiles) profiles[w.to_string()] = to_json(p);
  json diffs = json::array();
  for (const auto& d : report.diffs) {
    json item = {{"entry", d.entry},
                 {"weight", to_json(d.weight)},
                 {"field", d.field},
                 {"table_value", d.table_value},
                 {"computed_value", d.computed_value},
                 {"annotated", d.annotated}};
    if (!d.note.empty()) item["note"] = d.note;
    diffs.push_back(std::move(item));
  }
  return {{"type", report.type.name()},
          {"bound", report.bound},
          {"statement", statement(report.bound)},
          {"omega1", weights_json(report.omega1)},
          {"omega2_prime", weights_json(report.omega2_prime)},
          {"profiles", profiles},
          {"diffs", diffs},
          {"unannotated_diffs", report.unannotated_diffs()},
          {"notes", report.notes}};
}

json to_json(const Table1Verification& verification) {
  json reports = json::array();
  json unannotated = json::array();
  for (const auto& r : verification.reports) {
    reports.push_back(to_json(r));
    for (const auto& d : r.diffs) {
      if (!d.annotated) {
        unannotated.push_back({{"type", r.type.name()}, {"entry", d.entry}, {"field", d.field}});
      }
    }
  }
  return {{"table", "table1"},
          {"reports", reports},
          {"unannotated_diffs", unannotated},
          {"passed", verification.passed()}};
}

json to_json(const Table2Verification& verification) {
  json reports = json::array();
  for (const auto& r : verification.reports) {
    json listed = json::array();
    for (const auto& [entry, m] : r.listed) {
      listed.push_back({{"weight", to_json(entry.weight)}, {"label", entry.label}, {"max_multiplicity", m}});
    }
    reports.push_back({{"type", r.type.name()},
                       {"bound", r.bound},
                       {"statement", statement(r.bound)},
                       {"listed", listed},
                       {"missing", weights_json(r.missing)},
                       {"passed", r.passed()}});
  }
  return {{"table", "table2"}, {"characteristic", 0}, {"reports", reports}, {"passed", verification.passed()}};
}

json to_json(const A2FamilyReport& report) {
  json family = json::array();
  for (const auto& c : report.family) {
    family.push_back({{"weight", to_json(c.weight)},
                      {"max_multiplicity", c.max_multiplicity},
                      {"computed", to_json(c.computed)},
                      {"expected", to_json(c.expected)},
                      {"passed", c.passed()}});
  }
  json triples = json::array();
  for (const auto& c : report.triples) {
    triples.push_back({{"weight", to_json(c.weight)},
                       {"mu", to_json(c.mu)},
                       {"multiplicity", c.multiplicity},
                       {"passed", c.passed()}});
  }
  return {{"a_max", report.a_max},
          {"ab_max", report.ab_max},
          {"family", family},
          {"triples", triples},
          {"passed", report.passed()}};
}

}  // namespace lierep
