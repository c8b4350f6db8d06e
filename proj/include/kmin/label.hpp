#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kmin {

/// A state label: a fixed-width vector of k bits, one per atomic proposition.
/// Only equality matters to minimization, so the bits are treated as opaque.
class Label {
 public:
  Label() = default;
  explicit Label(std::size_t width) : bits_(width, false) {}
  explicit Label(std::vector<bool> bits) : bits_(std::move(bits)) {}

  /// Parses a string of '0'/'1' characters, most significant proposition
  /// first. Returns false on any other character or an empty string.
  static bool from_string(std::string_view text, Label& out);

  std::size_t width() const { return bits_.size(); }
  bool bit(std::size_t i) const { return bits_[i]; }
  void set_bit(std::size_t i, bool value) { bits_[i] = value; }
  void flip(std::size_t i) { bits_[i] = !bits_[i]; }

  std::string to_string() const;
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label& a, const Label& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<bool> bits_;
};

}  // namespace kmin

template <>
struct std::hash<kmin::Label> {
  std::size_t operator()(const kmin::Label& label) const noexcept {
    return std::hash<std::vector<bool>>{}(label.bits());
  }
};
