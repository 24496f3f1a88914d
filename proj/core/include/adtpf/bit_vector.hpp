#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace adtpf {

/// Fixed-width bit vector. Bit i corresponds to the i-th basic step of one
/// actor in canonical order; the string form lists bit 0 first, so "10"
/// means the first step is active and the second is not.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }

  /// Advances to the next vector in binary counting order (bit 0 is the
  /// least significant). Returns false after wrapping back to all-zero.
  bool increment() noexcept;

  /// Lexicographic order of the string form: the first differing position
  /// decides, and 0 sorts before 1.
  bool lex_less(const BitVector& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

using DefenseVector = BitVector;
using AttackVector = BitVector;

}  // namespace adtpf
