#include "adtpf/bit_vector.hpp"

#include <bit>
#include <stdexcept>

namespace adtpf {

BitVector::BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may only contain '0' and '1'");
  }
  return v;
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::increment() noexcept {
  if (size_ == 0) return false;
  const std::size_t tail = size_ & 63;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const bool last = w + 1 == words_.size();
    const std::uint64_t limit =
        (last && tail != 0) ? (std::uint64_t{1} << tail) - 1 : ~std::uint64_t{0};
    if (words_[w] != limit) {
      ++words_[w];
      return true;
    }
    words_[w] = 0;
  }
  return false;
}

bool BitVector::lex_less(const BitVector& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    const std::uint64_t diff = words_[w] ^ other.words_[w];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (words_[w] & lowest) == 0;
    }
  }
  return false;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

}  // namespace adtpf
