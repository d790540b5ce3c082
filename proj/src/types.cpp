#include "pullback/types.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pullback {

Params Params::clamped() const {
  const int cap = std::max(n - 1, 0);
  return Params{m, n, std::min(k, cap), std::min(l, cap)};
}

void validate(const Params& p) {
  if (p.m < 0 || p.n < 0 || p.k < 0 || p.l < 0) {
    throw InputError("parameters must be nonnegative, got " + to_string(p));
  }
}

std::string to_string(const Params& p) {
  std::ostringstream os;
  os << "(m=" << p.m << ", n=" << p.n << ", k=" << p.k << ", l=" << p.l << ")";
  return os.str();
}

std::string format_word(const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string::npos ? text.size() : comma;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (first == last || ec != std::errc{} || ptr != last) {
      throw InputError("expected a comma-separated list of integers, got '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace pullback
