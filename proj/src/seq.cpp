#include "rank2/seq.hpp"

#include <algorithm>
#include <sstream>

namespace rank2 {

Seq rotated(const Seq& s, std::size_t offset) {
  if (s.empty()) return s;
  offset %= s.size();
  Seq out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(offset), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(offset));
  return out;
}

Seq reversed(const Seq& s) { return Seq(s.rbegin(), s.rend()); }

Seq periodic_prefix(const Seq& s, std::size_t count) {
  Seq out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(s[k % s.size()]);
  return out;
}

std::string seq_to_string(const Seq& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) os << ',';
    os << s[k];
  }
  os << ')';
  return os.str();
}

}  // namespace rank2
