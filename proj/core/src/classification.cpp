#include "lierep/classification.hpp"

#include <algorithm>
#include <set>

#include "lierep/errors.hpp"
#include "lierep/weight_lattice.hpp"

namespace lierep {

namespace {

using nlohmann::json;

json integer_value(const Integer& v) {
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

bool coordinatewise_le(const Weight& x, const Weight& y) {
  for (int i = 0; i < x.rank(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

std::string weight_list(const std::vector<Weight>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + ws[i].to_string();
  return s + "}";
}

}  // namespace

std::vector<Weight> OmegaSearchResult::prime(int j) const {
  const auto& upper = at(j);
  if (j == 1) return upper;
  const auto& lower = at(j - 1);
  std::vector<Weight> out;
  std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(), std::back_inserter(out));
  return out;
}

OmegaSearchResult omega_search(const RootSystem& rs, int k, int bound, bool prune, MultiplicityCache& cache) {
  if (k != 1 && k != 2) throw InvalidArgument("omega_search supports k = 1 or 2, got " + std::to_string(k));
  if (bound < 1) throw InvalidArgument("search bound must be >= 1, got " + std::to_string(bound));
  OmegaSearchResult out{rs.type(), k, bound, prune, std::vector<std::vector<Weight>>(k), 0, 0};
  std::vector<Weight> failed;
  for (const auto& w : dominant_weights_up_to(rs.rank(), bound)) {
    ++out.candidates;
    if (prune) {
      const bool dominated = std::any_of(failed.begin(), failed.end(), [&](const Weight& f) {
        return coordinatewise_le(f, w) && dominates(rs, w, f);
      });
      if (dominated) {
        failed.push_back(w);
        continue;
      }
    }
    ++out.evaluated;
    const std::int64_t m = cache.max_multiplicity(rs.type(), w);
    if (m > k) {
      failed.push_back(w);
      continue;
    }
    for (int j = static_cast<int>(m); j <= k; ++j) out.omega[j - 1].push_back(w);
  }
  for (auto& set : out.omega) std::sort(set.begin(), set.end());
  return out;
}

OmegaSearchResult omega_search(const RootSystem& rs, int k, int bound, bool prune) {
  MultiplicityCache cache;
  return omega_search(rs, k, bound, prune, cache);
}

std::size_t ClassificationReport::unannotated_diffs() const {
  return static_cast<std::size_t>(
      std::count_if(diffs.begin(), diffs.end(), [](const TableDiff& d) { return !d.annotated; }));
}

std::size_t Table1Verification::unannotated_diffs() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.unannotated_diffs();
  return n;
}

VerifyConfig default_config(int bound) {
  VerifyConfig config;
  auto add = [&](Family f, int lo, int hi) {
    for (int r = lo; r <= hi; ++r) config.targets.push_back({LieType(f, r), bound});
  };
  add(Family::A, 2, 6);
  add(Family::B, 2, 5);
  add(Family::C, 2, 6);
  add(Family::D, 4, 6);
  add(Family::G, 2, 2);
  add(Family::F, 4, 4);
  return config;
}

VerifyConfig extended_config() {
  VerifyConfig config = default_config(6);
  for (int r = 6; r <= 8; ++r) config.targets.push_back({LieType(Family::E, r), 3});
  return config;
}

ClassificationReport classify_type(const RootSystem& rs, int bound, bool prune, MultiplicityCache& cache) {
  const auto search = omega_search(rs, 2, bound, prune, cache);
  ClassificationReport report{rs.type(), bound, {}, {}, {}, {}, {}};
  report.omega1 = search.at(1);
  report.omega2_prime = search.prime(2);

  auto profile = [&](const Weight& w) -> const WeightProfile& {
    auto it = report.profiles.find(w);
    if (it == report.profiles.end()) {
      it = report.profiles.emplace(w, weight_count_profile(rs, cache.table(rs.type(), w))).first;
    }
    return it->second;
  };

  const auto entries = table1_entries(rs.type(), bound);
  std::set<Weight> listed;
  for (const auto& entry : entries) {
    listed.insert(entry.weight);
    const bool found = std::binary_search(report.omega2_prime.begin(), report.omega2_prime.end(), entry.weight);
    if (!found) {
      report.diffs.push_back({entry.weight, entry.label, "membership", "listed",
                              "max multiplicity " + std::to_string(cache.max_multiplicity(rs.type(), entry.weight)),
                              false, ""});
    }
    const WeightProfile& p = profile(entry.weight);
    const std::pair<const char*, Integer> computed[] = {{"n1", p.count(1)}, {"n2", p.count(2)}, {"dim", p.dim}};
    for (const auto& [field, value] : computed) {
      const Integer& table_value = entry.field(field);
      if (table_value == value) continue;
      TableDiff diff{entry.weight, entry.label, field, integer_value(table_value), integer_value(value), false, ""};
      if (const auto it = entry.annotations.find(field); it != entry.annotations.end()) {
        diff.note = it->second.note;
        diff.annotated = !it->second.alternative || *it->second.alternative == value;
        if (!diff.annotated) diff.note += " (computed value differs from the annotated alternative)";
      }
      report.diffs.push_back(std::move(diff));
    }
  }
  for (const auto& w : report.omega2_prime) {
    profile(w);
    if (!listed.count(w)) {
      report.diffs.push_back({w, w.to_string(), "membership", "not listed", "max multiplicity 2", false, ""});
    }
  }
  std::sort(report.diffs.begin(), report.diffs.end(), [](const TableDiff& x, const TableDiff& y) {
    return std::tie(x.weight, x.field) < std::tie(y.weight, y.field);
  });

  for (const auto& note : table1_notes(rs.type())) {
    report.notes.push_back(note + "; computed Omega'_2 = " + weight_list(report.omega2_prime) +
                           " within bound " + std::to_string(bound));
  }
  return report;
}

Table1Verification verify_table1(const VerifyConfig& config) {
  Table1Verification out;
  for (const auto& target : config.targets) {
    MultiplicityCache cache;
    const RootSystem& rs = cache.root_system(target.type);
    out.reports.push_back(classify_type(rs, target.bound, config.prune, cache));
  }
  return out;
}

bool Table2TypeReport::passed() const {
  return missing.empty() &&
         std::all_of(listed.begin(), listed.end(), [](const auto& e) { return e.second == 1; });
}

bool Table2Verification::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const Table2TypeReport& r) { return r.passed(); });
}

Table2Verification verify_table2(const VerifyConfig& config) {
  std::vector<TypeBound> targets = config.targets;
  const LieType a1(Family::A, 1);
  if (std::none_of(targets.begin(), targets.end(), [&](const TypeBound& t) { return t.type == a1; })) {
    const int bound = targets.empty() ? 4 : targets.front().bound;
    targets.insert(targets.begin(), {a1, bound});
  }
  Table2Verification out;
  for (const auto& target : targets) {
    MultiplicityCache cache;
    const RootSystem& rs = cache.root_system(target.type);
    Table2TypeReport report{target.type, target.bound, {}, {}};
    std::set<Weight> listed;
    for (auto& entry : table2_entries(target.type, target.bound)) {
      listed.insert(entry.weight);
      const std::int64_t m = cache.max_multiplicity(target.type, entry.weight);
      report.listed.emplace_back(std::move(entry), m);
    }
    const auto search = omega_search(rs, 1, target.bound, config.prune, cache);
    for (const auto& w : search.at(1)) {
      if (!w.is_zero() && !listed.count(w)) report.missing.push_back(w);
    }
    out.reports.push_back(std::move(report));
  }
  return out;
}

bool A2FamilyCase::passed() const { return max_multiplicity == 2 && computed == expected; }

bool A2FamilyReport::passed() const {
  return std::all_of(family.begin(), family.end(), [](const A2FamilyCase& c) { return c.passed(); }) &&
         std::all_of(triples.begin(), triples.end(), [](const A2TripleCase& c) { return c.passed(); });
}

A2FamilyReport a2_family_check(int a_max, int ab_max) {
  if (a_max < 3) throw InvalidArgument("a_max must be >= 3, got " + std::to_string(a_max));
  if (ab_max < 2) throw InvalidArgument("ab_max must be >= 2, got " + std::to_string(ab_max));
  MultiplicityCache cache;
  const LieType a2(Family::A, 2);
  const RootSystem& rs = cache.root_system(a2);
  A2FamilyReport report;
  report.a_max = a_max;
  report.ab_max = ab_max;
  for (std::int64_t a = 1; a <= a_max; ++a) {
    WeightProfile expected;
    expected.dim = Integer((a + 1) * (a + 3));
    expected.counts[1] = Integer(3 * a + 3);
    expected.counts[2] = Integer(a * (a + 1) / 2);
    for (const Weight& w : {Weight{1, a}, Weight{a, 1}}) {
      if (a == 1 && !report.family.empty() && report.family.back().weight == w) continue;
      const auto& table = cache.table(a2, w);
      report.family.push_back({w, table.max(), weight_count_profile(rs, table), expected});
    }
  }
  const Weight drop = rs.simple_root(0) + rs.simple_root(1);
  for (std::int64_t a = 2; a <= ab_max; ++a) {
    for (std::int64_t b = 2; b <= ab_max; ++b) {
      const Weight w{a, b};
      const Weight mu = w - 2 * drop;
      report.triples.push_back({w, mu, cache.multiplicity(a2, w, mu)});
    }
  }
  return report;
}

}  // namespace lierep
