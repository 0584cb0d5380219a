#include "munarini/strings.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "munarini/error.hpp"

namespace munarini {

namespace {

constexpr std::size_t kWordBits = 64;

void require_arity(unsigned arity) {
  if (arity == 0) throw UnsupportedParameter("arity k must be at least 1");
}

std::size_t mix(std::size_t seed, std::size_t value) noexcept {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

void enumerate_into(std::vector<Symbol>& prefix, std::size_t n,
                    unsigned arity, std::vector<PellString>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix, arity);
    return;
  }
  // Letters in the order 0 < 1 < ... < k-1 < kk give lexicographic output.
  for (Symbol s = 0; s < arity; ++s) {
    prefix.push_back(s);
    enumerate_into(prefix, n, arity, out);
    prefix.pop_back();
  }
  if (prefix.size() + 2 <= n) {
    prefix.push_back(arity);
    prefix.push_back(arity);
    enumerate_into(prefix, n, arity, out);
    prefix.resize(prefix.size() - 2);
  }
}

// Index of the single 1 inside block `b`, or -1 for 0^k, or -2 if the block
// holds more than one 1.
long block_letter(const BinaryLabel& bits, std::size_t b, unsigned arity) {
  long found = -1;
  for (unsigned j = 0; j < arity; ++j) {
    if (bits.test(b * arity + j)) {
      if (found != -1) return -2;
      found = static_cast<long>(j);
    }
  }
  return found;
}

}  // namespace

// ---------------------------------------------------------------------------
// PellString
// ---------------------------------------------------------------------------

PellString::PellString(std::vector<Symbol> symbols, unsigned arity)
    : symbols_(std::move(symbols)), arity_(arity) {
  require_arity(arity);
  if (!is_pell_string(symbols_, arity)) {
    throw InputError("odd run of the symbol " + std::to_string(arity) +
                     " in '" + to_string() + "'");
  }
}

PellString PellString::parse(std::string_view text, unsigned arity) {
  require_arity(arity);
  std::vector<Symbol> symbols;
  auto parse_symbol = [&](std::string_view token) {
    Symbol value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw InputError("bad symbol '" + std::string(token) + "'");
    }
    symbols.push_back(value);
  };
  if (arity < 10) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      parse_symbol(text.substr(i, 1));
    }
  } else if (!text.empty()) {
    std::size_t start = 0;
    while (true) {
      auto dot = text.find('.', start);
      parse_symbol(text.substr(start, dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  }
  return PellString(std::move(symbols), arity);
}

std::size_t PellString::count(Symbol s) const noexcept {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), s));
}

std::string PellString::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (arity_ >= 10 && i != 0) out += '.';
    out += std::to_string(symbols_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// BinaryLabel
// ---------------------------------------------------------------------------

BinaryLabel::BinaryLabel(std::size_t length)
    : words_((length + kWordBits - 1) / kWordBits, 0), length_(length) {}

BinaryLabel BinaryLabel::parse(std::string_view bits) {
  BinaryLabel out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw InputError("bad bit '" + std::string(1, bits[i]) + "' in '" +
                       std::string(bits) + "'");
    }
  }
  return out;
}

bool BinaryLabel::test(std::size_t i) const {
  if (i >= length_) throw std::out_of_range("bit index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BinaryLabel::set(std::size_t i, bool value) {
  if (i >= length_) throw std::out_of_range("bit index out of range");
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

void BinaryLabel::flip(std::size_t i) {
  if (i >= length_) throw std::out_of_range("bit index out of range");
  words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

BinaryLabel BinaryLabel::flipped(std::size_t i) const {
  BinaryLabel out = *this;
  out.flip(i);
  return out;
}

std::size_t BinaryLabel::weight() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void BinaryLabel::require_same_length(const BinaryLabel& other) const {
  if (length_ != other.length_) {
    throw InputError("label lengths differ: " + std::to_string(length_) +
                     " vs " + std::to_string(other.length_));
  }
}

std::size_t BinaryLabel::hamming(const BinaryLabel& other) const {
  require_same_length(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] ^ other.words_[i]));
  }
  return total;
}

bool BinaryLabel::is_below(const BinaryLabel& other) const {
  require_same_length(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> BinaryLabel::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits != 0) {
      out.push_back(w * kWordBits +
                    static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BinaryLabel BinaryLabel::majority(const BinaryLabel& a, const BinaryLabel& b,
                                  const BinaryLabel& c) {
  a.require_same_length(b);
  a.require_same_length(c);
  BinaryLabel out(a.length_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const auto x = a.words_[i], y = b.words_[i], z = c.words_[i];
    out.words_[i] = (x & y) | (x & z) | (y & z);
  }
  return out;
}

std::string BinaryLabel::to_string() const {
  std::string out(length_, '0');
  for (auto i : ones()) out[i] = '1';
  return out;
}

std::size_t BinaryLabel::hash() const noexcept {
  std::size_t seed = length_;
  for (auto w : words_) seed = mix(seed, static_cast<std::size_t>(w));
  return seed;
}

std::strong_ordering operator<=>(const BinaryLabel& a, const BinaryLabel& b) {
  const std::size_t common_words = std::min(a.words_.size(), b.words_.size());
  const std::size_t common_bits = std::min(a.length_, b.length_);
  for (std::size_t w = 0; w < common_words; ++w) {
    const auto diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const auto index =
        w * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
    if (index >= common_bits) break;
    return a.test(index) ? std::strong_ordering::greater
                         : std::strong_ordering::less;
  }
  return a.length_ <=> b.length_;
}

// ---------------------------------------------------------------------------
// MunariniString and the codec
// ---------------------------------------------------------------------------

MunariniString MunariniString::from_label(BinaryLabel bits, unsigned arity) {
  require_arity(arity);
  if (!is_munarini_string(bits, arity)) {
    throw InputError("'" + bits.to_string() +
                     "' is not a Munarini string for k = " +
                     std::to_string(arity));
  }
  return MunariniString(std::move(bits), arity);
}

bool is_munarini_string(const BinaryLabel& bits, unsigned arity) {
  require_arity(arity);
  if (bits.size() % arity != 0) return false;
  const std::size_t blocks = bits.size() / arity;
  for (std::size_t b = 0; b < blocks; ++b) {
    const long letter = block_letter(bits, b, arity);
    if (letter == -2) return false;
    if (letter == static_cast<long>(arity) - 1) {
      // A_k must be followed by A_0.
      if (b + 1 >= blocks || block_letter(bits, b + 1, arity) != -1) {
        return false;
      }
      ++b;
    }
  }
  return true;
}

MunariniString encode_psi(const PellString& u) {
  const unsigned k = u.arity();
  BinaryLabel bits(u.size() * k);
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Symbol s = u[i];
    if (s == k) {
      // kk -> A_k A_0; the second k is absorbed by the A_0 block.
      bits.set(i * k + k - 1);
      ++i;
    } else if (s != 0) {
      bits.set(i * k + s - 1);
    }
  }
  return MunariniString::from_label(std::move(bits), k);
}

PellString decode_psi(const MunariniString& v) {
  return decode_psi(v.label(), v.arity());
}

PellString decode_psi(const BinaryLabel& bits, unsigned arity) {
  if (!is_munarini_string(bits, arity)) {
    throw InputError("'" + bits.to_string() +
                     "' does not factor over the Munarini letters for k = " +
                     std::to_string(arity));
  }
  const std::size_t blocks = bits.size() / arity;
  std::vector<Symbol> symbols;
  symbols.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const long letter = block_letter(bits, b, arity);
    if (letter == -1) {
      symbols.push_back(0);
    } else if (letter == static_cast<long>(arity) - 1) {
      symbols.push_back(arity);
      symbols.push_back(arity);
      ++b;
    } else {
      symbols.push_back(static_cast<Symbol>(letter + 1));
    }
  }
  return PellString(std::move(symbols), arity);
}

// ---------------------------------------------------------------------------
// Enumeration and counting
// ---------------------------------------------------------------------------

bool is_pell_string(std::span<const Symbol> symbols, unsigned arity) {
  require_arity(arity);
  std::size_t run = 0;
  for (auto s : symbols) {
    if (s > arity) {
      throw InputError("symbol " + std::to_string(s) + " exceeds k = " +
                       std::to_string(arity));
    }
    if (s == arity) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return run % 2 == 0;
}

std::vector<PellString> enumerate_pell_strings(std::size_t n, unsigned arity) {
  require_arity(arity);
  std::vector<PellString> out;
  std::vector<Symbol> prefix;
  prefix.reserve(n);
  enumerate_into(prefix, n, arity, out);
  return out;
}

std::vector<PellString> enumerate_maximal_strings(std::size_t n,
                                                  unsigned arity) {
  if (arity < 2) {
    throw UnsupportedParameter(
        "maximal strings are defined here for k >= 2 only");
  }
  auto all = enumerate_pell_strings(n, arity);
  std::erase_if(all, [](const PellString& u) { return u.count(0) != 0; });
  return all;
}

std::size_t weight(const PellString& u) {
  std::size_t total = 0;
  for (auto s : u.symbols()) {
    if (s != 0 && s != u.arity()) ++total;
  }
  return total + u.count(u.arity()) / 2;
}

Integer count_ank_words(std::size_t n, unsigned k) {
  require_arity(k);
  // a_n = (2k-1) a_{n-1} + 2 a_{n-2}: prepend a symbol in {2..2k}, or 00, or 11.
  Integer previous = 1;
  if (n == 0) return previous;
  Integer current = 2 * k - 1;
  for (std::size_t i = 2; i <= n; ++i) {
    Integer next = (2 * k - 1) * current + 2 * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

}  // namespace munarini

std::size_t std::hash<munarini::PellString>::operator()(
    const munarini::PellString& s) const noexcept {
  std::size_t seed = s.arity();
  for (auto sym : s.symbols()) {
    seed ^= sym + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
