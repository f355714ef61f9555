#include "fivecard/arrangement.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace fivecard {

char to_char(Card c) { return c == Card::Red ? 'r' : 'B'; }

Card card_from_char(char ch) {
  if (ch == 'r') return Card::Red;
  if (ch == 'B') return Card::Black;
  throw std::invalid_argument(std::string("bad card character '") + ch +
                              "', expected 'r' or 'B'");
}

Arrangement::Arrangement(const std::array<Card, kSize>& cards) : cards_(cards) {
  int reds = static_cast<int>(std::count(cards_.begin(), cards_.end(), Card::Red));
  if (reds != 2) {
    throw std::invalid_argument("arrangement must hold exactly two red and three black cards");
  }
}

Arrangement Arrangement::parse(std::string_view text) {
  if (text.size() != kSize) {
    throw std::invalid_argument("arrangement text must be exactly five characters, got \"" +
                                std::string(text) + "\"");
  }
  std::array<Card, kSize> cards{};
  for (int i = 0; i < kSize; ++i) cards[i] = card_from_char(text[i]);
  return Arrangement(cards);
}

Card Arrangement::at(int i) const {
  if (i < 0 || i >= kSize) throw std::out_of_range("card index out of range");
  return cards_[i];
}

std::string Arrangement::str() const {
  std::string out(kSize, '?');
  for (int i = 0; i < kSize; ++i) out[i] = to_char(cards_[i]);
  return out;
}

Arrangement Arrangement::rotated(int k) const {
  if (k < 0 || k >= kSize) throw std::domain_error("cut depth must lie in 0..4");
  std::array<Card, kSize> out{};
  for (int i = 0; i < kSize; ++i) out[i] = cards_[(i + kSize - k) % kSize];
  return Arrangement(out);
}

std::ostream& operator<<(std::ostream& os, const Arrangement& arr) {
  return os << arr.str();
}

Arrangement encode_initial(bool a, bool b) {
  std::string text;
  text += a ? "rB" : "Br";
  text += 'B';
  text += b ? "Br" : "rB";
  return Arrangement::parse(text);
}

bool evaluate_and(const Arrangement& arr) {
  int first = -1, second = -1;
  for (int i = 0; i < Arrangement::kSize; ++i) {
    if (arr.at(i) != Card::Red) continue;
    if (first < 0) {
      first = i;
    } else {
      second = i;
    }
  }
  int gap = second - first;
  return gap == 1 || gap == Arrangement::kSize - 1;
}

std::optional<int> cut_depth_between(const Arrangement& from, const Arrangement& to) {
  for (int k = 0; k < Arrangement::kSize; ++k) {
    if (from.rotated(k) == to) return k;
  }
  return std::nullopt;
}

const std::vector<Arrangement>& initial_arrangements() {
  static const std::vector<Arrangement> all = [] {
    std::vector<Arrangement> v;
    for (int a = 0; a <= 1; ++a)
      for (int b = 0; b <= 1; ++b) v.push_back(encode_initial(a != 0, b != 0));
    return v;
  }();
  return all;
}

const std::vector<Arrangement>& final_arrangements() {
  static const std::vector<Arrangement> all = [] {
    std::set<Arrangement> seen;
    for (const Arrangement& init : initial_arrangements())
      for (int k = 0; k < Arrangement::kSize; ++k) seen.insert(init.rotated(k));
    return std::vector<Arrangement>(seen.begin(), seen.end());
  }();
  return all;
}

const std::vector<Arrangement>& restricted_initial_arrangements() {
  static const std::vector<Arrangement> all = {encode_initial(true, false),
                                               encode_initial(false, false)};
  return all;
}

const std::vector<Arrangement>& restricted_final_arrangements() {
  static const std::vector<Arrangement> all = [] {
    std::vector<Arrangement> v;
    const Arrangement base = encode_initial(true, false);
    for (int k = 0; k < Arrangement::kSize; ++k) v.push_back(base.rotated(k));
    return v;
  }();
  return all;
}

bool contains(const std::vector<Arrangement>& set, const Arrangement& arr) {
  return std::find(set.begin(), set.end(), arr) != set.end();
}

}  // namespace fivecard
