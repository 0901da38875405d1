#include "lierep/lemma_lab.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lierep/dynkin.hpp"
#include "lierep/errors.hpp"
#include "lierep/weight_lattice.hpp"

namespace lierep {

namespace {

using nlohmann::json;

json weight_json(const Weight& w) { return json(std::vector<std::int64_t>(w.coords().begin(), w.coords().end())); }

json weights_json(const std::vector<Weight>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(weight_json(w));
  return out;
}

std::vector<int> sorted_unique(std::span<const int> s, int rank, const char* what) {
  std::vector<int> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int i : out) {
    if (i < 0 || i >= rank) {
      throw InvalidArgument(std::string(what) + ": simple root index " + std::to_string(i + 1) +
                            " out of range 1.." + std::to_string(rank));
    }
  }
  return out;
}

std::vector<std::vector<int>> proper_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << rank); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Monotonicity

HighestWeightMonotonicity check_highest_weight_monotonicity(const RootSystem& rs, const Weight& omega,
                                                            const Weight& mu, const Weight& nu,
                                                            MultiplicityCache& cache) {
  HighestWeightMonotonicity out;
  if (!omega.is_dominant() || !mu.is_dominant() || !nu.is_dominant() || omega.rank() != rs.rank() ||
      mu.rank() != rs.rank() || nu.rank() != rs.rank()) {
    out.skip_reason = "weights must be dominant of rank " + std::to_string(rs.rank());
    return out;
  }
  if (mu == omega || !dominates(rs, omega, mu)) {
    out.skip_reason = "mu is not strictly below omega";
    return out;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (omega[i] < mu[i]) {
      out.skip_reason = "omega is not coordinatewise >= mu";
      return out;
    }
  }
  if (nu == mu || !dominates(rs, mu, nu)) {
    out.skip_reason = "nu is not strictly below mu";
    return out;
  }
  out.applicable = true;
  out.m_omega_nu = cache.multiplicity(rs.type(), omega, nu);
  out.m_mu_nu = cache.multiplicity(rs.type(), mu, nu);
  out.holds = out.m_omega_nu >= out.m_mu_nu;
  return out;
}

HighestWeightMonotonicity check_highest_weight_monotonicity(const RootSystem& rs, const Weight& omega,
                                                            const Weight& mu, const Weight& nu) {
  MultiplicityCache cache;
  return check_highest_weight_monotonicity(rs, omega, mu, nu, cache);
}

DominanceMonotonicity check_dominance_monotonicity(const RootSystem& rs, const MultiplicityTable& table) {
  DominanceMonotonicity out;
  out.highest = table.highest();
  const auto& entries = table.entries();
  for (const auto& [lower, m_lower] : entries) {
    for (const auto& [upper, m_upper] : entries) {
      if (lower == upper || !dominates(rs, upper, lower)) continue;
      ++out.pairs_checked;
      if (m_lower < m_upper) out.violations.push_back({lower, upper, m_lower, m_upper});
    }
  }
  return out;
}

DominanceMonotonicity check_dominance_monotonicity(const RootSystem& rs, const Weight& lam) {
  return check_dominance_monotonicity(rs, multiplicity_table(rs, lam));
}

// ---------------------------------------------------------------------------
// Support reduction

SupportReduction reduce_by_support(const RootSystem& rs, const Weight& omega, const Weight& mu,
                                   std::span<const int> J, MultiplicityCache& cache) {
  require_dominant(rs, omega, "highest weight");
  require_dominant(rs, mu, "weight");
  const auto c = root_coordinates(rs, omega, mu);
  if (!c) throw InvalidArgument("weight " + mu.to_string() + " is not below " + omega.to_string());
  const auto indices = sorted_unique(J, rs.rank(), "support reduction");

  SupportReduction out;
  Weight shift = Weight::zero(rs.rank());
  for (int j : indices) {
    if ((*c)[j] > omega[j]) {
      throw InvalidArgument("index " + std::to_string(j + 1) + " violates c_j <= a_j (c_j = " +
                            std::to_string((*c)[j]) + ", a_j = " + std::to_string(omega[j]) + ")");
    }
    shift[j] = omega[j] - (*c)[j];
  }
  out.omega_prime = omega - shift;
  out.mu_prime = mu - shift;
  out.m_original = cache.multiplicity(rs.type(), omega, mu);
  out.m_reduced = cache.multiplicity(rs.type(), out.omega_prime, out.mu_prime);
  return out;
}

SupportReduction reduce_by_support(const RootSystem& rs, const Weight& omega, const Weight& mu,
                                   std::span<const int> J) {
  MultiplicityCache cache;
  return reduce_by_support(rs, omega, mu, J, cache);
}

// ---------------------------------------------------------------------------
// Subsystems

SubsystemBase SubsystemBase::from_roots(const RootSystem& rs, std::vector<RootVector> roots) {
  if (roots.empty()) throw InvalidArgument("empty subsystem base");
  const auto positives = rs.positive_roots();
  for (const auto& beta : roots) {
    if (static_cast<int>(beta.size()) != rs.rank()) throw InvalidArgument("base root rank mismatch");
    if (std::find(positives.begin(), positives.end(), beta) == positives.end()) {
      std::string text;
      for (auto x : beta) text += (text.empty() ? "" : ",") + std::to_string(x);
      throw InvalidArgument("(" + text + ") is not a positive root of " + rs.type().name());
    }
  }
  if (std::set<RootVector>(roots.begin(), roots.end()).size() != roots.size()) {
    throw InvalidArgument("subsystem base has repeated roots");
  }

  SubsystemBase base;
  const int r = static_cast<int>(roots.size());
  std::vector<Rational> norms;
  for (const auto& beta : roots) norms.push_back(rs.root_inner_product(beta, beta));
  base.induced_cartan_ = Matrix<int>(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rational pairing = 2 * rs.root_inner_product(roots[i], roots[j]) / norms[j];
      base.induced_cartan_(i, j) = static_cast<int>(to_int64(to_integer(pairing, "induced Cartan entry")));
    }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && base.induced_cartan_(i, j) > 0) {
        throw InvalidArgument("base roots " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " have positive pairing; not a simple system");
      }
  auto components = recognize_cartan(base.induced_cartan_);
  if (!components) throw InvalidArgument("induced Cartan matrix is not of finite type");
  for (auto& comp : *components) base.components_.push_back({comp.type, std::move(comp.nodes)});

  for (int b = 0; b < r; ++b) {
    std::vector<std::int64_t> coeffs(rs.rank());
    for (int k = 0; k < rs.rank(); ++k) {
      const Rational x = Rational(roots[b][k]) * rs.root_length2(k) / norms[b];
      coeffs[k] = to_int64(to_integer(x, "coroot coefficient"));
    }
    base.coroot_coeffs_.push_back(std::move(coeffs));
  }
  base.roots_ = std::move(roots);
  return base;
}

SubsystemBase SubsystemBase::from_simple_roots(const RootSystem& rs, std::span<const int> indices) {
  std::vector<RootVector> roots;
  for (int i : sorted_unique(indices, rs.rank(), "subsystem")) {
    RootVector e(rs.rank(), 0);
    e[i] = 1;
    roots.push_back(std::move(e));
  }
  return from_roots(rs, std::move(roots));
}

std::vector<LieType> SubsystemBase::induced_types() const {
  std::vector<LieType> out;
  for (const auto& c : components_) out.push_back(c.type);
  return out;
}

std::vector<Weight> SubsystemBase::restrict(const Weight& w) const {
  std::vector<Weight> out;
  for (const auto& comp : components_) {
    std::vector<std::int64_t> coords;
    for (int member : comp.members) {
      const auto& coeffs = coroot_coeffs_.at(member);
      if (coeffs.size() != w.coords().size()) throw InvalidArgument("weight rank mismatch in restriction");
      std::int64_t value = 0;
      for (std::size_t k = 0; k < coeffs.size(); ++k) value += coeffs[k] * w[k];
      coords.push_back(value);
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

Restriction subsystem_restrict(const RootSystem& rs, const Weight& omega, const SubsystemBase& base) {
  require_dominant(rs, omega, "highest weight");
  Restriction out;
  const auto weights = base.restrict(omega);
  for (std::size_t c = 0; c < weights.size(); ++c) {
    out.components.push_back({base.components()[c].type, base.components()[c].members, weights[c]});
  }
  return out;
}

Restriction levi_restriction(const RootSystem& rs, const Weight& omega, std::span<const int> S) {
  const auto indices = sorted_unique(S, rs.rank(), "Levi restriction");
  if (indices.empty() || static_cast<int>(indices.size()) == rs.rank()) {
    throw InvalidArgument("Levi subsystem needs a non-empty proper subset of the simple roots");
  }
  const auto base = SubsystemBase::from_simple_roots(rs, indices);
  Restriction out = subsystem_restrict(rs, omega, base);
  for (auto& comp : out.components)
    for (int& node : comp.nodes) node = indices[node];
  return out;
}

LeviEquality check_levi_equality(const RootSystem& rs, const Weight& omega, std::span<const int> S,
                                 const Weight& mu, MultiplicityCache& cache) {
  LeviEquality out;
  const auto indices = sorted_unique(S, rs.rank(), "Levi equality");
  if (indices.empty() || static_cast<int>(indices.size()) == rs.rank()) {
    throw InvalidArgument("Levi subsystem needs a non-empty proper subset of the simple roots");
  }
  require_dominant(rs, omega, "highest weight");
  if (mu.rank() != rs.rank() || !mu.is_dominant()) {
    out.skip_reason = "mu is not dominant";
    return out;
  }
  const auto c = root_coordinates(rs, omega, mu);
  if (!c) {
    out.skip_reason = "mu is not below omega";
    return out;
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if ((*c)[i] != 0 && !std::binary_search(indices.begin(), indices.end(), i)) {
      out.skip_reason = "omega - mu is not supported on S";
      return out;
    }
  }
  out.applicable = true;
  const auto base = SubsystemBase::from_simple_roots(rs, indices);
  const auto omega_x = base.restrict(omega);
  out.mu_restricted = base.restrict(mu);
  out.m_ambient = cache.multiplicity(rs.type(), omega, mu);
  out.m_restricted = 1;
  for (std::size_t k = 0; k < omega_x.size(); ++k) {
    out.m_restricted *= cache.multiplicity(base.components()[k].type, omega_x[k], out.mu_restricted[k]);
  }
  return out;
}

LeviEquality check_levi_equality(const RootSystem& rs, const Weight& omega, std::span<const int> S,
                                 const Weight& mu) {
  MultiplicityCache cache;
  return check_levi_equality(rs, omega, S, mu, cache);
}

SubsystemBound check_subsystem_bound(const RootSystem& rs, const Weight& omega, const SubsystemBase& base,
                                     MultiplicityCache& cache) {
  SubsystemBound out;
  out.restriction = subsystem_restrict(rs, omega, base);
  out.ambient_max = cache.max_multiplicity(rs.type(), omega);
  out.restricted_max = 1;
  for (const auto& comp : out.restriction.components) {
    out.restricted_max *= cache.max_multiplicity(comp.type, comp.weight);
  }
  return out;
}

TypeALowerBound check_type_a_lower_bound(const RootSystem& rs, const Weight& omega, MultiplicityCache& cache) {
  TypeALowerBound out;
  if (rs.type().family() != Family::A) {
    out.skip_reason = "type A only";
    return out;
  }
  require_dominant(rs, omega, "highest weight");
  int first = -1, last = -1;
  for (int i = 0; i < rs.rank(); ++i) {
    if (omega[i] == 0) continue;
    if (first < 0) first = i;
    last = i;
  }
  if (first < 0 || first == last) {
    out.skip_reason = "needs two distinct non-zero coordinates a_j, a_k with j < k";
    return out;
  }
  out.applicable = true;
  out.j = first + 1;
  out.k = last + 1;
  out.bound = last - first;
  out.max_multiplicity = cache.max_multiplicity(rs.type(), omega);
  out.holds = out.max_multiplicity >= out.bound;
  return out;
}

TypeALowerBound check_type_a_lower_bound(const RootSystem& rs, const Weight& omega) {
  MultiplicityCache cache;
  return check_type_a_lower_bound(rs, omega, cache);
}

std::vector<SubsystemBase> named_subsystem_bases(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<RootVector>> candidates;
  auto unit = [n](std::initializer_list<std::pair<int, int>> terms) {
    RootVector v(n, 0);
    for (auto [i, c] : terms) v[i] += c;
    return v;
  };
  auto span_sum = [n](int from, int to) {  // alpha_from + ... + alpha_to, 0-based inclusive
    RootVector v(n, 0);
    for (int i = from; i <= to; ++i) v[i] = 1;
    return v;
  };
  switch (rs.type().family()) {
    case Family::B:
      if (n >= 3) {
        // Long roots alpha_1, ..., alpha_{n-1}, alpha_{n-1} + 2 alpha_n: type D_n.
        std::vector<RootVector> b;
        for (int i = 0; i + 1 < n; ++i) b.push_back(unit({{i, 1}}));
        b.push_back(unit({{n - 2, 1}, {n - 1, 2}}));
        candidates.push_back(std::move(b));
      }
      break;
    case Family::C:
      if (n >= 4) {
        // Type C3: alpha_1 + ... + alpha_{n-2}, alpha_{n-1}, alpha_n.
        candidates.push_back({span_sum(0, n - 3), unit({{n - 2, 1}}), unit({{n - 1, 1}})});
      }
      if (n >= 5) {
        // Type C4: alpha_1, alpha_2 + ... + alpha_{n-2}, alpha_{n-1}, alpha_n.
        candidates.push_back({unit({{0, 1}}), span_sum(1, n - 3), unit({{n - 2, 1}}), unit({{n - 1, 1}})});
      }
      break;
    case Family::D:
      if (n >= 5) {
        // Type D4: alpha_1, alpha_2 + ... + alpha_{n-2}, alpha_{n-1}, alpha_n.
        candidates.push_back({unit({{0, 1}}), span_sum(1, n - 3), unit({{n - 2, 1}}), unit({{n - 1, 1}})});
      }
      break;
    default:
      break;
  }
  std::vector<SubsystemBase> out;
  for (auto& roots : candidates) {
    try {
      out.push_back(SubsystemBase::from_roots(rs, std::move(roots)));
    } catch (const InvalidArgument&) {
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<LieType> types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    for (int r = 1; r <= max_rank; ++r)
      if (is_valid_type(f, r)) out.emplace_back(f, r);
  }
  return out;
}

LemmaStats sweep_dominance_monotonicity(const LemmaSuiteConfig& config, MultiplicityCache& cache) {
  LemmaStats stats{"dominance_monotonicity", 0, 0, {}};
  for (const auto& type : types_up_to_rank(config.monotonicity_max_rank)) {
    const RootSystem& rs = cache.root_system(type);
    for (const auto& lam : dominant_weights_up_to(type.rank(), config.monotonicity_max_sum)) {
      const auto result = check_dominance_monotonicity(rs, cache.table(type, lam));
      stats.cases += result.pairs_checked;
      for (const auto& v : result.violations) {
        stats.failures.push_back({{"type", type.name()},
                                  {"highest", weight_json(lam)},
                                  {"lower", weight_json(v.lower)},
                                  {"upper", weight_json(v.upper)},
                                  {"m_lower", v.m_lower},
                                  {"m_upper", v.m_upper}});
      }
    }
  }
  return stats;
}

LemmaStats sweep_highest_weight_monotonicity(const LemmaSuiteConfig& config, MultiplicityCache& cache) {
  LemmaStats stats{"highest_weight_monotonicity", 0, 0, {}};
  for (const auto& type : types_up_to_rank(config.monotonicity_max_rank)) {
    const RootSystem& rs = cache.root_system(type);
    for (const auto& omega : dominant_weights_up_to(type.rank(), config.monotonicity_max_sum)) {
      for (const auto& mu : subdominant_weights(rs, omega)) {
        for (const auto& nu : subdominant_weights(rs, mu)) {
          const auto r = check_highest_weight_monotonicity(rs, omega, mu, nu, cache);
          if (!r.applicable) {
            ++stats.skipped;
            continue;
          }
          ++stats.cases;
          if (!r.holds) {
            stats.failures.push_back({{"type", type.name()},
                                      {"omega", weight_json(omega)},
                                      {"mu", weight_json(mu)},
                                      {"nu", weight_json(nu)},
                                      {"m_omega_nu", r.m_omega_nu},
                                      {"m_mu_nu", r.m_mu_nu}});
          }
        }
      }
    }
  }
  return stats;
}

LemmaStats sweep_support_reduction(const LemmaSuiteConfig& config, MultiplicityCache& cache) {
  LemmaStats stats{"support_reduction", 0, 0, {}};
  for (const auto& type : types_up_to_rank(config.reduction_max_rank)) {
    const RootSystem& rs = cache.root_system(type);
    for (const auto& omega : dominant_weights_up_to(type.rank(), config.reduction_max_sum)) {
      for (const auto& [mu, m] : cache.table(type, omega).entries()) {
        const auto c = root_coordinates(rs, omega, mu);
        std::vector<int> eligible;
        for (int j = 0; j < rs.rank(); ++j)
          if ((*c)[j] <= omega[j]) eligible.push_back(j);
        for (std::uint32_t mask = 0; mask < (1u << eligible.size()); ++mask) {
          std::vector<int> J;
          for (std::size_t b = 0; b < eligible.size(); ++b)
            if (mask & (1u << b)) J.push_back(eligible[b]);
          const auto r = reduce_by_support(rs, omega, mu, J, cache);
          ++stats.cases;
          if (!r.equal()) {
            std::vector<int> one_based;
            for (int j : J) one_based.push_back(j + 1);
            stats.failures.push_back({{"type", type.name()},
                                      {"omega", weight_json(omega)},
                                      {"mu", weight_json(mu)},
                                      {"J", one_based},
                                      {"omega_prime", weight_json(r.omega_prime)},
                                      {"mu_prime", weight_json(r.mu_prime)},
                                      {"m_original", r.m_original},
                                      {"m_reduced", r.m_reduced}});
          }
        }
      }
    }
  }
  return stats;
}

LemmaStats sweep_levi_equality(const LemmaSuiteConfig& config, MultiplicityCache& cache) {
  LemmaStats stats{"levi_equality", 0, 0, {}};
  for (const auto& type : types_up_to_rank(config.levi_max_rank)) {
    if (type.rank() < 2) continue;
    const RootSystem& rs = cache.root_system(type);
    const auto subsets = proper_subsets(rs.rank());
    for (const auto& omega : dominant_weights_up_to(type.rank(), config.levi_max_sum)) {
      for (const auto& [mu, m] : cache.table(type, omega).entries()) {
        for (const auto& S : subsets) {
          const auto r = check_levi_equality(rs, omega, S, mu, cache);
          if (!r.applicable) {
            ++stats.skipped;
            continue;
          }
          ++stats.cases;
          if (!r.equal()) {
            std::vector<int> one_based;
            for (int j : S) one_based.push_back(j + 1);
            stats.failures.push_back({{"type", type.name()},
                                      {"omega", weight_json(omega)},
                                      {"mu", weight_json(mu)},
                                      {"S", one_based},
                                      {"mu_restricted", weights_json(r.mu_restricted)},
                                      {"m_ambient", r.m_ambient},
                                      {"m_restricted", r.m_restricted}});
          }
        }
      }
    }
  }
  return stats;
}

LemmaStats sweep_subsystem_bound(const LemmaSuiteConfig& config, MultiplicityCache& cache) {
  LemmaStats stats{"subsystem_bound", 0, 0, {}};
  for (const auto& type : types_up_to_rank(config.levi_max_rank)) {
    if (type.rank() < 2) continue;
    const RootSystem& rs = cache.root_system(type);
    std::vector<SubsystemBase> bases = named_subsystem_bases(rs);
    for (const auto& S : proper_subsets(rs.rank())) bases.push_back(SubsystemBase::from_simple_roots(rs, S));
    for (const auto& omega : dominant_weights_up_to(type.rank(), config.levi_max_sum)) {
      for (const auto& base : bases) {
        const auto r = check_subsystem_bound(rs, omega, base, cache);
        ++stats.cases;
        if (!r.holds()) {
          json roots = json::array();
          for (const auto& beta : base.roots()) roots.push_back(beta);
          stats.failures.push_back({{"type", type.name()},
                                    {"omega", weight_json(omega)},
                                    {"base", roots},
                                    {"ambient_max", r.ambient_max},
                                    {"restricted_max", r.restricted_max}});
        }
      }
    }
  }
  return stats;
}

LemmaStats sweep_type_a_lower_bound(const LemmaSuiteConfig& config, MultiplicityCache& cache) {
  LemmaStats stats{"type_a_lower_bound", 0, 0, {}};
  for (int n = 1; n <= config.type_a_max_rank; ++n) {
    const LieType type(Family::A, n);
    const RootSystem& rs = cache.root_system(type);
    for (const auto& omega : dominant_weights_up_to(n, config.type_a_max_sum)) {
      const auto r = check_type_a_lower_bound(rs, omega, cache);
      if (!r.applicable) {
        ++stats.skipped;
        continue;
      }
      ++stats.cases;
      if (!r.holds) {
        stats.failures.push_back({{"type", type.name()},
                                  {"omega", weight_json(omega)},
                                  {"j", r.j},
                                  {"k", r.k},
                                  {"bound", r.bound},
                                  {"max_multiplicity", r.max_multiplicity}});
      }
    }
  }
  return stats;
}

bool LemmaSuiteReport::passed() const noexcept {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaStats& s) { return s.passed(); });
}

const LemmaStats& LemmaSuiteReport::find(const std::string& name) const {
  for (const auto& s : lemmas)
    if (s.name == name) return s;
  throw InvalidArgument("no lemma named " + name + " in report");
}

LemmaSuiteReport run_lemma_suite(const LemmaSuiteConfig& config) {
  MultiplicityCache cache;
  LemmaSuiteReport report;
  report.config = config;
  report.lemmas.push_back(sweep_dominance_monotonicity(config, cache));
  report.lemmas.push_back(sweep_highest_weight_monotonicity(config, cache));
  report.lemmas.push_back(sweep_support_reduction(config, cache));
  report.lemmas.push_back(sweep_levi_equality(config, cache));
  report.lemmas.push_back(sweep_subsystem_bound(config, cache));
  report.lemmas.push_back(sweep_type_a_lower_bound(config, cache));
  return report;
}

json to_json(const LemmaSuiteReport& report) {
  json lemmas = json::array();
  for (const auto& s : report.lemmas) {
    lemmas.push_back({{"lemma", s.name},
                      {"cases", s.cases},
                      {"skipped", s.skipped},
                      {"failures", s.failures},
                      {"passed", s.passed()}});
  }
  const auto& c = report.config;
  const json config = {
      {"monotonicity", {{"max_rank", c.monotonicity_max_rank}, {"max_sum", c.monotonicity_max_sum}}},
      {"support_reduction", {{"max_rank", c.reduction_max_rank}, {"max_sum", c.reduction_max_sum}}},
      {"levi_and_subsystem", {{"max_rank", c.levi_max_rank}, {"max_sum", c.levi_max_sum}}},
      {"type_a_lower_bound", {{"max_rank", c.type_a_max_rank}, {"max_sum", c.type_a_max_sum}}}};
  return {{"config", config}, {"lemmas", lemmas}, {"passed", report.passed()}};
}

}  // namespace lierep
