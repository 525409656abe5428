#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace coxfsa {

using Generator = std::uint32_t;

// Maximum rank supported by GeneratorSet.
inline constexpr std::size_t kMaxRank = 64;

// A subset of S, stored as a bitmask over generator indices.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  GeneratorSet(std::initializer_list<Generator> gens) {
    for (Generator g : gens) insert(g);
  }
  static constexpr GeneratorSet from_mask(std::uint64_t mask) {
    GeneratorSet s;
    s.bits_ = mask;
    return s;
  }
  static constexpr GeneratorSet all(std::size_t rank) {
    return from_mask(rank >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << rank) - 1);
  }

  constexpr bool contains(Generator g) const { return (bits_ >> g) & 1U; }
  constexpr void insert(Generator g) { bits_ |= std::uint64_t{1} << g; }
  constexpr void erase(Generator g) { bits_ &= ~(std::uint64_t{1} << g); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr std::uint64_t mask() const { return bits_; }

  constexpr GeneratorSet operator&(GeneratorSet o) const {
    return from_mask(bits_ & o.bits_);
  }
  constexpr GeneratorSet operator|(GeneratorSet o) const {
    return from_mask(bits_ | o.bits_);
  }
  constexpr GeneratorSet minus(GeneratorSet o) const {
    return from_mask(bits_ & ~o.bits_);
  }
  constexpr bool is_subset_of(GeneratorSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  // Members in increasing index order.
  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Generator>(std::countr_zero(b)));
    }
    return out;
  }

  constexpr auto operator<=>(const GeneratorSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// A word over S as a sequence of generator indices.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Generator> letters) : letters_(letters) {}
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }
  Generator& operator[](std::size_t i) { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  Generator back() const { return letters_.back(); }

  void push_back(Generator g) { letters_.push_back(g); }
  void pop_back() { letters_.pop_back(); }
  void append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  // v(i): the prefix of length i, or the whole word when i >= size().
  Word prefix(std::size_t i) const {
    if (i >= letters_.size()) return *this;
    return Word(std::vector<Generator>(letters_.begin(), letters_.begin() + i));
  }
  // v(i, j) for 1 <= i <= j: letters i..j (1-based, inclusive), with j
  // saturated at size().
  Word infix(std::size_t i, std::size_t j) const {
    const std::size_t stop = j < letters_.size() ? j : letters_.size();
    if (i == 0 || i > stop) return Word();
    return Word(std::vector<Generator>(letters_.begin() + (i - 1),
                                       letters_.begin() + stop));
  }
  Word reversed() const {
    return Word(std::vector<Generator>(letters_.rbegin(), letters_.rend()));
  }

  const std::vector<Generator>& letters() const { return letters_; }

  // Plain lexicographic order on the letter sequences.
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Generator> letters_;
};

// Length first, then lexicographic.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline Word operator+(Word a, const Word& b) {
  a.append(b);
  return a;
}

}  // namespace coxfsa

template <>
struct std::hash<coxfsa::Word> {
  std::size_t operator()(const coxfsa::Word& w) const noexcept {
    std::size_t h = w.size();
    for (coxfsa::Generator g : w) h = h * 1000003U ^ (g + 0x9e3779b9U);
    return h;
  }
};

template <>
struct std::hash<coxfsa::GeneratorSet> {
  std::size_t operator()(const coxfsa::GeneratorSet& s) const noexcept {
    return std::hash<std::uint64_t>()(s.mask());
  }
};
