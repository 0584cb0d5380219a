#pragma once

// String monoids underlying Munarini graphs:
//
//  * generalized Pell strings F_{n,k}: words over {0,...,k} in which every
//    maximal run of k has even length, i.e. the free monoid on
//    {0, 1, ..., k-1, kk};
//  * Munarini strings F*_{n,k}: binary words of length kn over the letters
//    A_0 = 0^k and A_i = 0^{i-1} 1 0^{k-i}, where every A_k is followed by
//    A_0;
//  * the letter-wise codec Psi between the two.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "munarini/integer.hpp"

namespace munarini {

using Symbol = std::uint32_t;

/// A generalized Pell string over {0, ..., arity}.
///
/// Always valid: the constructor rejects symbols above the arity and odd
/// runs of the top symbol. The empty string is a valid value of every arity.
class PellString {
 public:
  PellString() = default;
  PellString(std::vector<Symbol> symbols, unsigned arity);

  /// Parses the text form produced by to_string().
  static PellString parse(std::string_view text, unsigned arity);

  unsigned arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// |u|_s, the number of occurrences of `s`.
  std::size_t count(Symbol s) const noexcept;

  /// Decimal digits concatenated; for arity >= 10 the symbols are joined
  /// with '.' so that the text stays unambiguous.
  std::string to_string() const;

  friend bool operator==(const PellString&, const PellString&) = default;
  friend std::strong_ordering operator<=>(const PellString& a,
                                          const PellString& b) {
    if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
    return a.arity_ <=> b.arity_;
  }

 private:
  std::vector<Symbol> symbols_;
  unsigned arity_ = 1;
};

/// A fixed-length bit string: a vertex of some hypercube Q_m.
class BinaryLabel {
 public:
  BinaryLabel() = default;
  explicit BinaryLabel(std::size_t length);

  /// Parses a bare string of '0' and '1'.
  static BinaryLabel parse(std::string_view bits);

  std::size_t size() const noexcept { return length_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i);
  BinaryLabel flipped(std::size_t i) const;

  std::size_t weight() const noexcept;
  std::size_t hamming(const BinaryLabel& other) const;
  /// Coordinatewise order: every 1 of *this is a 1 of `other`.
  bool is_below(const BinaryLabel& other) const;
  /// Indices of the 1-bits in increasing order.
  std::vector<std::size_t> ones() const;

  /// Coordinatewise majority of three equal-length labels.
  static BinaryLabel majority(const BinaryLabel& a, const BinaryLabel& b,
                              const BinaryLabel& c);

  std::string to_string() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const BinaryLabel&, const BinaryLabel&) = default;
  /// Lexicographic on the bit strings.
  friend std::strong_ordering operator<=>(const BinaryLabel& a,
                                          const BinaryLabel& b);

 private:
  void require_same_length(const BinaryLabel& other) const;

  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

/// A binary string that factors over {A_0, ..., A_{k-1}, A_k A_0}.
class MunariniString {
 public:
  /// Validates `bits` against the letter set of the given arity.
  static MunariniString from_label(BinaryLabel bits, unsigned arity);

  const BinaryLabel& label() const noexcept { return bits_; }
  unsigned arity() const noexcept { return arity_; }
  /// Number of k-bit blocks, i.e. the length of the decoded Pell string.
  std::size_t blocks() const noexcept { return bits_.size() / arity_; }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const MunariniString&,
                         const MunariniString&) = default;

 private:
  MunariniString(BinaryLabel bits, unsigned arity)
      : bits_(std::move(bits)), arity_(arity) {}

  BinaryLabel bits_;
  unsigned arity_ = 1;
};

/// True iff every maximal run of `arity` has even length. Throws InputError
/// if a symbol exceeds `arity`.
bool is_pell_string(std::span<const Symbol> symbols, unsigned arity);

/// F_{n,k} in lexicographic order; its size is F_{n+1,k}.
std::vector<PellString> enumerate_pell_strings(std::size_t n, unsigned arity);

/// Strings of F_{n,k} containing no 0, lexicographic. Requires arity >= 2.
std::vector<PellString> enumerate_maximal_strings(std::size_t n,
                                                  unsigned arity);

MunariniString encode_psi(const PellString& u);
PellString decode_psi(const MunariniString& v);
/// Throws InputError if `bits` is not a Munarini string of this arity.
PellString decode_psi(const BinaryLabel& bits, unsigned arity);
bool is_munarini_string(const BinaryLabel& bits, unsigned arity);

/// sum_{i=1}^{k-1} |u|_i + |u|_k / 2, the distance from u to 0^n in M_{n,k}.
std::size_t weight(const PellString& u);

/// Number of words of length n over {0, ..., 2k} with no odd run of 0s and
/// no odd run of 1s; equal to the cube number of M_{n,k}.
Integer count_ank_words(std::size_t n, unsigned k);

}  // namespace munarini

template <>
struct std::hash<munarini::PellString> {
  std::size_t operator()(const munarini::PellString& s) const noexcept;
};

template <>
struct std::hash<munarini::BinaryLabel> {
  std::size_t operator()(const munarini::BinaryLabel& b) const noexcept {
    return b.hash();
  }
};
