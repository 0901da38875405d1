#include "lierep/golden_tables.hpp"

#include <algorithm>
#include <string_view>

#include <nlohmann/json.hpp>

#include "formula.hpp"

namespace lierep {

namespace detail {
std::string_view golden_tables_json();
}

namespace {

using nlohmann::json;
using Bindings = std::map<char, Rational>;

const json& data() {
  static const json parsed = json::parse(detail::golden_tables_json());
  return parsed;
}

Integer eval_integer(const std::string& text, const Bindings& vars) {
  return to_integer(detail::evaluate_formula(text, vars), ("golden table formula " + text).c_str());
}

std::int64_t eval_int64(const std::string& text, const Bindings& vars) {
  return to_int64(eval_integer(text, vars));
}

bool row_applies(const json& row, const LieType& type) {
  if (row.at("family").get<std::string>() != std::string(1, static_cast<char>(type.family()))) return false;
  if (type.rank() < row.value("rank_min", 1)) return false;
  if (row.contains("rank_max") && type.rank() > row.at("rank_max").get<int>()) return false;
  // Only characteristic-0 rows; rows valid in a single positive
  // characteristic are skipped.
  return !row.contains("characteristic");
}

// Calls f(bindings) for every parameter assignment; unbounded parameters run
// up to the search bound (every parameter appears as a coordinate).
template <class F>
void for_each_binding(const json& row, int rank, int bound, F&& f) {
  Bindings base{{'n', Rational(rank)}};
  std::vector<std::pair<char, std::pair<std::int64_t, std::int64_t>>> ranges;
  if (row.contains("params")) {
    for (const auto& [name, range] : row.at("params").items()) {
      const std::int64_t lo = eval_int64(range.at("min").template get<std::string>(), base);
      const std::int64_t hi = range.contains("max") ? eval_int64(range.at("max").template get<std::string>(), base) : bound;
      ranges.push_back({name.at(0), {lo, hi}});
    }
  }
  Bindings vars = base;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == ranges.size()) {
      f(vars);
      return;
    }
    for (std::int64_t v = ranges[k].second.first; v <= ranges[k].second.second; ++v) {
      vars[ranges[k].first] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

Weight build_weight(const json& entry, int rank, const Bindings& vars) {
  std::vector<std::int64_t> coords(rank, 0);
  if (entry.contains("weight")) {
    const auto& w = entry.at("weight");
    if (static_cast<int>(w.size()) != rank) throw ConsistencyError("golden table weight has wrong rank");
    for (int i = 0; i < rank; ++i) coords[i] = eval_int64(w[i].get<std::string>(), vars);
  } else {
    for (const auto& [index, value] : entry.at("support").items()) {
      const std::int64_t i = eval_int64(index, vars);
      if (i < 1 || i > rank) throw ConsistencyError("golden table support index out of range");
      coords[i - 1] = eval_int64(value.get<std::string>(), vars);
    }
  }
  return Weight(std::move(coords));
}

template <class Entry>
void sort_unique(std::vector<Entry>& entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return x.weight < y.weight; });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& x, const Entry& y) { return x.weight == y.weight; }),
                entries.end());
}

}  // namespace

const Integer& Table1Entry::field(const std::string& name) const {
  if (name == "n1") return n1;
  if (name == "n2") return n2;
  if (name == "dim") return dim;
  throw InvalidArgument("unknown table field " + name);
}

int golden_tables_version() { return data().at("version").get<int>(); }

std::vector<Table1Entry> table1_entries(const LieType& type, int bound) {
  std::vector<Table1Entry> out;
  for (const auto& row : data().at("table1")) {
    if (!row_applies(row, type)) continue;
    for_each_binding(row, type.rank(), bound, [&](const Bindings& vars) {
      for (const auto& e : row.at("entries")) {
        Weight w = build_weight(e, type.rank(), vars);
        if (w.coordinate_sum() > bound) continue;
        Table1Entry entry{type,
                          std::move(w),
                          e.at("label").get<std::string>(),
                          eval_integer(e.at("n1").get<std::string>(), vars),
                          eval_integer(e.at("n2").get<std::string>(), vars),
                          eval_integer(e.at("dim").get<std::string>(), vars),
                          {}};
        if (e.contains("annotations")) {
          for (const auto& [field, a] : e.at("annotations").items()) {
            Annotation ann{a.at("note").get<std::string>(), std::nullopt, a.value("known", false)};
            if (a.contains("alternative")) ann.alternative = eval_integer(a.at("alternative").get<std::string>(), vars);
            entry.annotations.emplace(field, std::move(ann));
          }
        }
        out.push_back(std::move(entry));
      }
    });
  }
  sort_unique(out);
  return out;
}

std::vector<std::string> table1_notes(const LieType& type) {
  std::vector<std::string> out;
  for (const auto& row : data().at("table1")) {
    if (row_applies(row, type) && row.contains("note")) out.push_back(row.at("note").get<std::string>());
  }
  return out;
}

std::vector<Table2Entry> table2_entries(const LieType& type, int bound) {
  std::vector<Table2Entry> out;
  for (const auto& row : data().at("table2")) {
    if (!row_applies(row, type)) continue;
    for_each_binding(row, type.rank(), bound, [&](const Bindings& vars) {
      for (const auto& e : row.at("entries")) {
        Weight w = build_weight(e, type.rank(), vars);
        if (w.coordinate_sum() > bound || w.is_zero()) continue;
        out.push_back({type, std::move(w), e.at("label").get<std::string>()});
      }
    });
  }
  sort_unique(out);
  return out;
}

}  // namespace lierep
