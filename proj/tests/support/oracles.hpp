#pragma once

// Deliberately naive reference implementations. None of these reuse the
// library's reduction or traversal code.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "generators.hpp"

namespace opgroup::testing {

/// Free reduction by cancelling a randomly chosen adjacent inverse pair
/// until none remain. Confluence makes the order irrelevant.
template <class Letter, class InverseOf>
std::vector<Letter> naive_reduce(std::vector<Letter> letters, Rng& rng, InverseOf inverse_of) {
  for (;;) {
    std::vector<std::size_t> redexes;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (inverse_of(letters[i], letters[i + 1])) redexes.push_back(i);
    }
    if (redexes.empty()) return letters;
    std::size_t at = redexes[uniform(rng, 0, redexes.size() - 1)];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(at),
                  letters.begin() + static_cast<std::ptrdiff_t>(at) + 2);
  }
}

/// Maximum '<' nesting in printed form.
inline std::size_t printed_depth(std::string_view text) {
  std::size_t level = 0, best = 0;
  for (char c : text) {
    if (c == '<') best = std::max(best, ++level);
    if (c == '>') --level;
  }
  return best;
}

/// Number of top-level space-separated terms in printed form.
inline std::size_t printed_breadth(std::string_view text) {
  if (text == "1") return 0;
  std::size_t level = 0, terms = 1;
  for (char c : text) {
    if (c == '<') ++level;
    if (c == '>') --level;
    if (c == ' ' && level == 0) ++terms;
  }
  return terms;
}

/// Same-sign adjacency check on printed form, scanning each nesting level
/// independently. Returns true iff the text describes an RB word.
inline bool printed_is_rb(std::string_view text) {
  // Stack of "sign of last top-level term at this level": 0 none/generator,
  // +1 positive bracket, -1 negative bracket.
  std::vector<int> last{0};
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '<') {
      last.push_back(0);
    } else if (c == '>') {
      last.pop_back();
      int sign = text.substr(i + 1, 3) == "^-1" ? -1 : 1;
      if (last.back() == sign) return false;
      last.back() = sign;
    } else if (c != ' ' && c != '^' && c != '-' && c != '1' && last.size() > 0 &&
               (i == 0 || text[i - 1] == ' ' || text[i - 1] == '<')) {
      last.back() = 0;  // a generator starts here
    }
  }
  return true;
}

}  // namespace opgroup::testing
