#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scc {

enum class Kind : std::uint8_t { X, Y };

/// One signed symplectic generator x_i^{±1} or y_i^{±1}.
struct Letter {
  Kind kind = Kind::X;
  int index = 1;  // 1-based generator index
  int sign = 1;   // +1 or -1

  Letter inverse() const { return {kind, index, -sign}; }
  bool cancels(const Letter& other) const {
    return kind == other.kind && index == other.index && sign == -other.sign;
  }
  /// Position of the generator in the ordered basis X1, Y1, ..., Xg, Yg.
  int basis() const { return 2 * (index - 1) + (kind == Kind::Y ? 1 : 0); }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced element of the free group on x1, y1, ..., xg, yg.
///
/// Every Word carries its genus; binary operations on words of different
/// genus throw DomainError.
class Word {
 public:
  /// The identity of the free group of rank 2*genus.
  explicit Word(int genus);

  /// Freely reduces `letters`. Throws DomainError on out-of-range indices.
  Word(int genus, std::span<const Letter> letters);

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  static Word generator(int genus, Kind kind, int index, int sign = 1);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int genus_;
  std::vector<Letter> letters_;
};

/// Stack-based free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::span<const Letter> letters);

/// Parses the word grammar:
///   word  := term { term }          (terms separated by whitespace or '*')
///   term  := atom ["^" int] | "[" word "," word "]" ["^" int] | "(" word ")" ["^" int]
///   atom  := ("x"|"y") index | "zeta" | "1"
/// Throws ParseError on malformed input.
Word parse_word(std::string_view text, int genus);

/// Canonical text: runs of a repeated letter collapse to `g^k`; the identity is "1".
std::string format_word(const Word& w);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);
Word power(const Word& w, int k);
/// g h g^-1
Word conjugate(const Word& g, const Word& h);
/// [g,h] = g h g^-1 h^-1
Word commutator(const Word& g, const Word& h);
/// The boundary loop zeta = [x1,y1][x2,y2]...[xg,yg].
Word boundary_word(int genus);

/// Uniform draw of `length` signed letters, then freely reduced.
Word random_word(int genus, std::size_t length, std::uint64_t seed);
/// Product of `count` commutators [u_k, v_k] of seed-determined random words.
Word random_commutator_element(int genus, std::size_t count, std::uint64_t seed,
                               std::size_t max_length = 6);

}  // namespace scc
