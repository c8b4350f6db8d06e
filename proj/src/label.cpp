#include "kmin/label.hpp"

namespace kmin {

bool Label::from_string(std::string_view text, Label& out) {
  if (text.empty()) return false;
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') return false;
    bits.push_back(c == '1');
  }
  out = Label(std::move(bits));
  return true;
}

std::string Label::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (bool b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace kmin
