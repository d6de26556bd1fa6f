#include "rainbow/subset.hpp"

#include <algorithm>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

Subset Subset::from_elements(const std::vector<int>& elements) {
  Subset s;
  for (int e : elements) s = s.with(e);
  return s;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (int e : *this) out.push_back(e);
  return out;
}

void sort_canonical(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess{});
}

std::string to_string(Subset s, const char* prefix) {
  std::string out;
  for (int e : s) {
    if (!out.empty()) out += ' ';
    out += prefix;
    out += std::to_string(e);
  }
  return out;
}

Subset parse_subset(const std::string& text, int n) {
  std::istringstream in(text);
  std::string token;
  Subset s;
  while (in >> token) {
    std::size_t used = 0;
    int e = -1;
    try {
      e = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw InputError("bad element index '" + token + "'");
    }
    if (used != token.size()) throw InputError("bad element index '" + token + "'");
    if (e < 0 || e >= n) {
      throw InputError("element " + token + " outside ground set of size " + std::to_string(n));
    }
    s = s.with(e);
  }
  return s;
}

Subset expand(Subset minor_subset, Subset kept) {
  Subset out;
  int position = 0;
  for (int e : kept) {
    if (minor_subset.contains(position)) out = out.with(e);
    ++position;
  }
  return out;
}

Subset compress(Subset s, Subset kept) {
  Subset out;
  int position = 0;
  for (int e : kept) {
    if (s.contains(e)) out = out.with(position);
    ++position;
  }
  return out;
}

}  // namespace rainbow
