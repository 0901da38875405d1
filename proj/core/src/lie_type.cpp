#include "lierep/lie_type.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "lierep/errors.hpp"

namespace lierep {

namespace {

std::string rank_constraint(Family family) {
  switch (family) {
    case Family::A: return "rank >= 1";
    case Family::B: return "rank >= 2";
    case Family::C: return "rank >= 2";
    case Family::D: return "rank >= 4";
    case Family::E: return "rank in {6,7,8}";
    case Family::F: return "rank = 4";
    case Family::G: return "rank = 2";
  }
  return "unknown family";
}

}  // namespace

bool is_valid_type(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  if (!is_valid_type(family, rank)) {
    throw InvalidArgument(std::string("invalid type ") + static_cast<char>(family) +
                          std::to_string(rank) + ": family " +
                          static_cast<char>(family) + " requires " + rank_constraint(family));
  }
}

LieType LieType::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2) throw InvalidArgument("cannot parse type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G') {
    throw InvalidArgument("unknown family letter in '" + std::string(text) + "'");
  }
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("cannot parse rank in '" + std::string(text) + "'");
  }
  return LieType(static_cast<Family>(letter), rank);
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

}  // namespace lierep
