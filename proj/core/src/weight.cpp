#include "lierep/weight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <string>

#include "lierep/errors.hpp"

namespace lierep {

Weight Weight::fundamental(int rank, int index) {
  if (index < 0 || index >= rank) {
    throw InvalidArgument("fundamental weight index " + std::to_string(index) +
                          " out of range for rank " + std::to_string(rank));
  }
  Weight w = zero(rank);
  w.coords_[index] = 1;
  return w;
}

Weight Weight::parse(std::string_view text) {
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || std::isspace(static_cast<unsigned char>(ch))) continue;
    cleaned.push_back(ch);
  }
  if (cleaned.empty()) throw InvalidArgument("empty weight string");
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const auto next = std::min(cleaned.find(',', pos), cleaned.size());
    const std::string_view field(cleaned.data() + pos, next - pos);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw InvalidArgument("malformed weight '" + std::string(text) +
                            "': expected comma-separated integers");
    }
    coords.push_back(value);
    pos = next + 1;
  }
  return Weight(std::move(coords));
}

bool Weight::is_dominant() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t Weight::coordinate_sum() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

Weight Weight::reversed() const {
  return Weight(std::vector<std::int64_t>(coords_.rbegin(), coords_.rend()));
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw InvalidArgument("weight rank mismatch in addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw InvalidArgument("weight rank mismatch in subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight operator*(std::int64_t k, Weight w) {
  for (auto& c : w.coords_) c *= k;
  return w;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lierep
