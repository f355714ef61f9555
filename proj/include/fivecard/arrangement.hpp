#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fivecard {

/// Face of one card in the five-card circle.
enum class Card : std::uint8_t { Black, Red };

char to_char(Card c);
Card card_from_char(char ch);

/// A circle of five face-down cards, always three black and two red.
///
/// The canonical text form writes black as 'B' and red as 'r', e.g. "rBBrB".
/// Position 0 is the top of the stack before any cut.  Arrangements are value
/// types with total order given by the text form, so they can key std::map.
class Arrangement {
 public:
  static constexpr int kSize = 5;

  /// Builds from explicit cards.  Throws std::invalid_argument unless the
  /// multiset is exactly three Black and two Red.
  explicit Arrangement(const std::array<Card, kSize>& cards);

  /// Parses the five-character "rBBrB" form.  Throws std::invalid_argument on
  /// bad length, bad characters, or a wrong color count.
  static Arrangement parse(std::string_view text);

  Card at(int i) const;
  std::string str() const;

  /// Applies a cut of depth k: the bottom k cards move to the top, so the
  /// card previously at position i ends up at position (i + k) mod 5.
  /// Throws std::domain_error unless 0 <= k <= 4.
  Arrangement rotated(int k) const;

  auto operator<=>(const Arrangement&) const = default;

 private:
  std::array<Card, kSize> cards_;
};

std::ostream& operator<<(std::ostream& os, const Arrangement& arr);

/// Lays out the protocol's starting circle for private bits (a, b):
/// the first player's pair, the fixed black card, the second player's pair.
/// A one-bit is committed as "rB" for the first player and "Br" for the
/// second; a zero-bit is the reverse.
Arrangement encode_initial(bool a, bool b);

/// Reads the protocol output off a revealed circle: true exactly when the
/// two red cards sit next to each other cyclically.
bool evaluate_and(const Arrangement& arr);

/// The unique cut depth taking `from` to `to`, or nullopt when the two are
/// not rotations of each other.  Uniqueness holds because no arrangement of
/// three black and two red cards is invariant under a nontrivial rotation.
std::optional<int> cut_depth_between(const Arrangement& from, const Arrangement& to);

/// The four possible starting circles, one per input pair (a, b).
const std::vector<Arrangement>& initial_arrangements();

/// Every circle reachable by cutting some starting circle; there are ten.
const std::vector<Arrangement>& final_arrangements();

/// Starting circles compatible with the second player's bit fixed to zero.
const std::vector<Arrangement>& restricted_initial_arrangements();

/// Circles reachable by cutting a restricted starting circle, listed in cut
/// order of "rBBrB" (depths 0 through 4); there are five.
const std::vector<Arrangement>& restricted_final_arrangements();

bool contains(const std::vector<Arrangement>& set, const Arrangement& arr);

}  // namespace fivecard
