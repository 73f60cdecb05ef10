#include "scc/word.hpp"

#include "scc/error.hpp"

#include <cctype>
#include <charconv>
#include <random>

namespace scc {

namespace {

void check_genus(int genus) {
  if (genus < 1) throw DomainError("genus must be at least 1, got " + std::to_string(genus));
}

void check_same_genus(const Word& u, const Word& v) {
  if (u.genus() != v.genus()) {
    throw DomainError("genus mismatch: " + std::to_string(u.genus()) + " vs " +
                      std::to_string(v.genus()));
  }
}

Word concat(int genus, std::initializer_list<const Word*> parts) {
  std::vector<Letter> letters;
  for (const Word* w : parts) letters.insert(letters.end(), w->letters().begin(), w->letters().end());
  return Word(genus, letters);
}

// Recursive-descent parser over the word grammar. Words are expanded eagerly.
class Parser {
 public:
  Parser(std::string_view text, int genus) : text_(text), genus_(genus) {}

  Word parse() {
    skip_separators();
    if (at_end()) throw ParseError("empty word (use '1' for the identity)", "");
    std::vector<Letter> letters = parse_word_until("");
    skip_separators();
    if (!at_end()) throw ParseError("unexpected character", token_here());
    return Word(genus_, letters);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string token_here() const {
    auto word_char = [](char ch) {
      return std::isalnum(static_cast<unsigned char>(ch)) || ch == '^' || ch == '-' || ch == '+';
    };
    std::size_t end = pos_;
    while (end < text_.size() && word_char(text_[end])) ++end;
    if (end == pos_ && !at_end()) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == '*')) ++pos_;
  }

  // Parses terms until one of `stops` (or end of input) is reached.
  std::vector<Letter> parse_word_until(std::string_view stops) {
    std::vector<Letter> out;
    bool any = false;
    for (;;) {
      skip_separators();
      if (at_end() || stops.find(peek()) != std::string_view::npos) break;
      std::vector<Letter> term = parse_term();
      out.insert(out.end(), term.begin(), term.end());
      any = true;
    }
    if (!any) throw ParseError("expected a term", token_here());
    return out;
  }

  std::vector<Letter> parse_term() {
    std::vector<Letter> base;
    char c = peek();
    if (c == '[') {
      std::string open = token_here();
      ++pos_;
      std::vector<Letter> g = parse_word_until(",]");
      if (peek() != ',') throw ParseError("expected ',' in commutator", at_end() ? open : token_here());
      ++pos_;
      std::vector<Letter> h = parse_word_until(",]");
      if (peek() != ']') throw ParseError("unbalanced bracket", at_end() ? open : token_here());
      ++pos_;
      base = g;
      base.insert(base.end(), h.begin(), h.end());
      for (auto it = g.rbegin(); it != g.rend(); ++it) base.push_back(it->inverse());
      for (auto it = h.rbegin(); it != h.rend(); ++it) base.push_back(it->inverse());
    } else if (c == '(') {
      std::string open = token_here();
      ++pos_;
      base = parse_word_until(")],");
      if (peek() != ')') throw ParseError("unbalanced parenthesis", at_end() ? open : token_here());
      ++pos_;
    } else {
      base = parse_atom();
    }
    if (peek() == '^') {
      ++pos_;
      int k = parse_exponent();
      return raise(base, k);
    }
    return base;
  }

  std::vector<Letter> parse_atom() {
    if (text_.substr(pos_, 4) == "zeta") {
      pos_ += 4;
      return boundary_word(genus_).letters();
    }
    char c = peek();
    if (c == '1' && !(pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {};
    }
    if (c == 'x' || c == 'y') {
      std::string tok = token_here();
      ++pos_;
      std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) throw ParseError("generator needs an index", tok);
      int index = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, index);
      if (ec != std::errc() || index < 1 || index > genus_) {
        throw ParseError("generator index out of range 1.." + std::to_string(genus_), tok);
      }
      return {Letter{c == 'x' ? Kind::X : Kind::Y, index, 1}};
    }
    if (c == ')' || c == ']' || c == ',') throw ParseError("unbalanced bracket or parenthesis", token_here());
    throw ParseError("unknown token", token_here());
  }

  int parse_exponent() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string tok(text_.substr(start, pos_ - start));
    if (digits == pos_) throw ParseError("exponent must be a signed integer", tok.empty() ? token_here() : tok);
    int k = 0;
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, k);
    if (ec != std::errc()) throw ParseError("exponent out of range", tok);
    if (k == 0) throw ParseError("exponent must be nonzero", tok);
    return k;
  }

  static std::vector<Letter> raise(const std::vector<Letter>& base, int k) {
    std::vector<Letter> unit = base;
    if (k < 0) {
      unit.clear();
      for (auto it = base.rbegin(); it != base.rend(); ++it) unit.push_back(it->inverse());
      k = -k;
    }
    std::vector<Letter> out;
    out.reserve(unit.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  std::string_view text_;
  int genus_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!out.empty() && out.back().cancels(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(int genus) : genus_(genus) { check_genus(genus); }

Word::Word(int genus, std::span<const Letter> letters) : genus_(genus) {
  check_genus(genus);
  for (const Letter& l : letters) {
    if (l.index < 1 || l.index > genus || (l.sign != 1 && l.sign != -1)) {
      throw DomainError("letter outside the generators of genus " + std::to_string(genus));
    }
  }
  letters_ = free_reduce(letters);
}

Word Word::generator(int genus, Kind kind, int index, int sign) {
  Letter l{kind, index, sign};
  return Word(genus, std::span<const Letter>(&l, 1));
}

Word parse_word(std::string_view text, int genus) {
  check_genus(genus);
  return Parser(text, genus).parse();
}

std::string format_word(const Word& w) {
  const auto& ls = w.letters();
  if (ls.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int run = static_cast<int>(j - i) * ls[i].sign;
    if (!out.empty()) out += ' ';
    out += ls[i].kind == Kind::X ? 'x' : 'y';
    out += std::to_string(ls[i].index);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

Word multiply(const Word& u, const Word& v) {
  check_same_genus(u, v);
  return concat(u.genus(), {&u, &v});
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(w.genus(), out);
}

Word power(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  Word out(w.genus());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(out, base);
  return out;
}

Word conjugate(const Word& g, const Word& h) {
  check_same_genus(g, h);
  Word gi = invert(g);
  return concat(g.genus(), {&g, &h, &gi});
}

Word commutator(const Word& g, const Word& h) {
  check_same_genus(g, h);
  Word gi = invert(g);
  Word hi = invert(h);
  return concat(g.genus(), {&g, &h, &gi, &hi});
}

Word boundary_word(int genus) {
  check_genus(genus);
  std::vector<Letter> letters;
  for (int j = 1; j <= genus; ++j) {
    letters.push_back({Kind::X, j, 1});
    letters.push_back({Kind::Y, j, 1});
    letters.push_back({Kind::X, j, -1});
    letters.push_back({Kind::Y, j, -1});
  }
  return Word(genus, letters);
}

Word random_word(int genus, std::size_t length, std::uint64_t seed) {
  check_genus(genus);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 4 * genus - 1);
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    int r = pick(rng);
    int basis = r / 2;
    letters.push_back({basis % 2 == 0 ? Kind::X : Kind::Y, basis / 2 + 1, r % 2 == 0 ? 1 : -1});
  }
  return Word(genus, letters);
}

Word random_commutator_element(int genus, std::size_t count, std::uint64_t seed,
                               std::size_t max_length) {
  check_genus(genus);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  Word out(genus);
  for (std::size_t k = 0; k < count; ++k) {
    Word u = random_word(genus, len(rng), rng());
    Word v = random_word(genus, len(rng), rng());
    out = multiply(out, commutator(u, v));
  }
  return out;
}

}  // namespace scc
