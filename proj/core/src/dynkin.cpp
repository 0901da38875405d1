#include "lierep/dynkin.hpp"

#include <algorithm>
#include <functional>

namespace lierep {

namespace {

void link(Matrix<int>& a, int i, int j, int aij = -1, int aji = -1) {
  a(i, j) = aij;
  a(j, i) = aji;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

// Candidate simple types of a given rank, in family order.
std::vector<LieType> types_of_rank(int r) {
  std::vector<LieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    if (is_valid_type(f, r)) out.emplace_back(f, r);
  }
  return out;
}

// Lexicographically first assignment nodes[k] -> members index such that
// target(k, l) == m(members[nodes[k]], members[nodes[l]]).
std::optional<std::vector<int>> match(const Matrix<int>& target, const Matrix<int>& m,
                                      const std::vector<int>& members) {
  const int r = static_cast<int>(members.size());
  std::vector<int> assigned(r, -1);
  std::vector<bool> used(r, false);
  std::function<bool(int)> place = [&](int k) -> bool {
    if (k == r) return true;
    for (int cand = 0; cand < r; ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int l = 0; l < k && ok; ++l) {
        const int pl = members[assigned[l]];
        const int pc = members[cand];
        ok = target(k, l) == m(pc, pl) && target(l, k) == m(pl, pc);
      }
      if (!ok) continue;
      assigned[k] = cand;
      used[cand] = true;
      if (place(k + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  std::vector<int> nodes(r);
  for (int k = 0; k < r; ++k) nodes[k] = members[assigned[k]];
  return nodes;
}

}  // namespace

Matrix<int> cartan_matrix(const LieType& type) {
  const int n = type.rank();
  Matrix<int> a(n, n, 0);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  switch (type.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-6-7-8 with 2 attached to 4.
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::F:
      link(a, 0, 1);
      link(a, 1, 2, -2, -1);  // alpha_3, alpha_4 short
      link(a, 2, 3);
      break;
    case Family::G:
      link(a, 0, 1, -1, -3);  // alpha_1 short
      break;
  }
  return a;
}

std::uint64_t weyl_group_order(const LieType& type) {
  const int n = type.rank();
  switch (type.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case Family::E:
      return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::optional<std::vector<DynkinComponent>> recognize_cartan(const Matrix<int>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != m.rows()) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 2) return std::nullopt;
  }
  std::vector<int> component(n, -1);
  std::vector<std::vector<int>> members;
  for (int start = 0; start < n; ++start) {
    if (component[start] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{start};
    component[start] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      members[id].push_back(v);
      for (int u = 0; u < n; ++u) {
        if (component[u] < 0 && (m(v, u) != 0 || m(u, v) != 0)) {
          component[u] = id;
          stack.push_back(u);
        }
      }
    }
    std::sort(members[id].begin(), members[id].end());
  }

  std::vector<DynkinComponent> out;
  for (const auto& mem : members) {
    std::optional<DynkinComponent> best;
    for (const LieType& candidate : types_of_rank(static_cast<int>(mem.size()))) {
      auto nodes = match(cartan_matrix(candidate), m, mem);
      if (nodes && (!best || *nodes < best->nodes)) best = DynkinComponent{candidate, *nodes};
    }
    if (!best) return std::nullopt;
    out.push_back(std::move(*best));
  }
  return out;
}

}  // namespace lierep
