#pragma once

#include "braidcryst/error.hpp"
#include "braidcryst/group.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace braidcryst {

/// One signed letter sigma_i^e or a_{j,r}^e.
struct Letter {
  enum class Kind { Sigma, A };
  Kind kind = Kind::Sigma;
  int i = 1;  // sigma index, or strand j of a_{j,r}
  int r = 0;  // handle index of a_{j,r}; 0 for sigma
  std::int64_t exponent = 1;

  static Letter sigma(int i, std::int64_t e = 1) { return {Kind::Sigma, i, 0, e}; }
  static Letter a(int j, int r, std::int64_t e = 1) { return {Kind::A, j, r, e}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the generators; the empty word is the identity.
struct BraidWord {
  std::vector<Letter> letters;

  BraidWord& append(const BraidWord& o) {
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
  }
  friend BraidWord operator+(BraidWord a, const BraidWord& b) { return a.append(b); }
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

inline BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Letter l = *it;
    l.exponent = -l.exponent;
    out.letters.push_back(l);
  }
  return out;
}

/// Canonical text form, readable back by parse(): "s1^-1 a[2,1]^3".
inline std::string to_string(const BraidWord& w) {
  std::string s;
  for (const auto& l : w.letters) {
    if (!s.empty()) s += ' ';
    if (l.kind == Letter::Kind::Sigma) {
      s += 's' + std::to_string(l.i);
    } else {
      s += "a[" + std::to_string(l.i) + ',' + std::to_string(l.r) + ']';
    }
    if (l.exponent != 1) s += '^' + std::to_string(l.exponent);
  }
  return s;
}

namespace detail {

inline void check_letter_indices(const GroupDescriptor& G, const Letter& l) {
  if (l.kind == Letter::Kind::Sigma) {
    if (l.i < 1 || l.i > G.n - 1)
      throw DomainError(Errc::IndexOutOfRange, "s" + std::to_string(l.i) + ": index " +
                                                   std::to_string(l.i) + " outside 1.." +
                                                   std::to_string(G.n - 1));
  } else {
    if (l.i < 1 || l.i > G.n)
      throw DomainError(Errc::IndexOutOfRange, "a[" + std::to_string(l.i) + "," +
                                                   std::to_string(l.r) + "]: strand index " +
                                                   std::to_string(l.i) + " outside 1.." +
                                                   std::to_string(G.n));
    if (l.r < 1 || l.r > G.handles())
      throw DomainError(Errc::IndexOutOfRange, "a[" + std::to_string(l.i) + "," +
                                                   std::to_string(l.r) + "]: handle index " +
                                                   std::to_string(l.r) + " outside 1.." +
                                                   std::to_string(G.handles()));
  }
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  BraidWord parse() {
    BraidWord w;
    skip_space();
    if (at_end()) return w;
    w.letters.push_back(term());
    while (true) {
      const std::size_t before = pos_;
      skip_space();
      bool star = false;
      if (!at_end() && peek() == '*') {
        ++pos_;
        star = true;
        skip_space();
      }
      if (at_end()) {
        if (star) throw ParseError(pos_, "expected a generator after '*'");
        return w;
      }
      if (pos_ == before) throw ParseError(pos_, "expected whitespace or '*' between terms");
      w.letters.push_back(term());
    }
  }

 private:
  Letter term() {
    Letter l;
    const char c = peek();
    if (c == 's') {
      ++pos_;
      l = Letter::sigma(static_cast<int>(unsigned_int()));
    } else if (c == 'a') {
      ++pos_;
      expect('[');
      const auto j = static_cast<int>(unsigned_int());
      expect(',');
      const auto r = static_cast<int>(unsigned_int());
      expect(']');
      l = Letter::a(j, r);
    } else {
      throw ParseError(pos_, std::string("expected 's' or 'a[', found '") + c + "'");
    }
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t exp_pos = pos_;
      bool negative = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        negative = peek() == '-';
        ++pos_;
      }
      const std::int64_t e = unsigned_int();
      if (e == 0) throw ParseError(exp_pos, "exponent must be nonzero");
      l.exponent = negative ? -e : e;
    }
    return l;
  }

  std::int64_t unsigned_int() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100000000000000LL) throw ParseError(start, "integer too large");
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected an integer");
    return v;
  }

  void expect(char c) {
    if (at_end() || peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: word := term (('*'|whitespace) term)*; term := gen ('^' int)?;
/// gen := 's' int | 'a[' int ',' int ']'. Indices are checked against G.
inline BraidWord parse(const GroupDescriptor& G, std::string_view text) {
  BraidWord w = detail::WordParser(text).parse();
  for (const auto& l : w.letters) detail::check_letter_indices(G, l);
  return w;
}

/// Left fold: a_{j,r}^e adds e at (perm(j), r); sigma_i^e right-multiplies
/// the permutation by tau_i^e. No lattice correction arises because psi is a
/// homomorphism.
inline Element normalize(const GroupDescriptor& G, const BraidWord& w) {
  Element x = identity(G);
  for (const auto& l : w.letters) {
    detail::check_letter_indices(G, l);
    if (l.kind == Letter::Kind::Sigma) {
      if (l.exponent % 2 != 0) x.perm = x.perm * Permutation::transposition(G.n, l.i);
    } else {
      x.coeffs.at(x.perm(l.i), l.r) += l.exponent;
    }
  }
  return x;
}

inline Element normalize(const GroupDescriptor& G, std::string_view text) {
  return normalize(G, parse(G, text));
}

/// Reduced word for w: w = tau_{i_1} ... tau_{i_k} with k the inversion count.
inline BraidWord permutation_word(const Permutation& w) {
  std::vector<int> idx;
  Permutation p = w;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < p.degree(); ++i)
      if (p(i) > p(i + 1)) {
        idx.push_back(i);
        p = p * Permutation::transposition(p.degree(), i);
        found = true;
        break;
      }
  }
  BraidWord out;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) out.letters.push_back(Letter::sigma(*it));
  return out;
}

namespace detail {
inline std::int64_t word_exponent(const Int& c) {
  if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
    throw DomainError(Errc::InvalidArgument, "coefficient " + c.str() + " too large for word form");
  return static_cast<std::int64_t>(c);
}
}  // namespace detail

/// Normal-form word: lattice letters in strand-major order, then a reduced
/// sigma word for the permutation. normalize(to_word(x)) == x.
inline BraidWord to_word(const GroupDescriptor& G, const Element& x) {
  detail::require_member(G, x);
  BraidWord w;
  for (int j = 1; j <= G.n; ++j)
    for (int r = 1; r <= G.handles(); ++r)
      if (x.coeffs.at(j, r) != 0)
        w.letters.push_back(Letter::a(j, r, detail::word_exponent(x.coeffs.at(j, r))));
  return w.append(permutation_word(x.perm));
}

/// Word builders for the classical braids. Indices are validated against G.
class ClassicalWords {
 public:
  explicit ClassicalWords(GroupDescriptor G) : G_(G) {}

  /// T_{i,j} = s_i ... s_{j-2} s_{j-1}^2 s_{j-2} ... s_i, and T_{i,i+1} = s_i^2.
  BraidWord T_word(int i, int j) const {
    check_pair(i, j);
    BraidWord w;
    for (int k = i; k <= j - 2; ++k) w.letters.push_back(Letter::sigma(k));
    w.letters.push_back(Letter::sigma(j - 1, 2));
    for (int k = j - 2; k >= i; --k) w.letters.push_back(Letter::sigma(k));
    return w;
  }

  /// A_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1.
  BraidWord A_word(int i, int j) const {
    check_pair(i, j);
    BraidWord w;
    for (int k = j - 1; k >= i + 1; --k) w.letters.push_back(Letter::sigma(k));
    w.letters.push_back(Letter::sigma(i, 2));
    for (int k = i + 1; k <= j - 1; ++k) w.letters.push_back(Letter::sigma(k, -1));
    return w;
  }

  /// Delta_n^2 = (s_1 ... s_{n-1})^n, expanded.
  BraidWord full_twist_word() const {
    BraidWord w;
    for (int rep = 0; rep < G_.n; ++rep)
      for (int k = 1; k <= G_.n - 1; ++k) w.letters.push_back(Letter::sigma(k));
    return w;
  }

  /// alpha_{n-1} = s_1 ... s_{n-1}.
  BraidWord alpha_word() const {
    BraidWord w;
    for (int k = 1; k <= G_.n - 1; ++k) w.letters.push_back(Letter::sigma(k));
    return w;
  }

  /// Atilde_{j,r} = a_{j,1} ... a_{j,r-1} a_{j,r+1}^-1 ... a_{j,2g}^-1.
  BraidWord Atilde_word(int j, int r) const {
    if (j < 1 || j > G_.n || r < 1 || r > G_.handles())
      throw DomainError(Errc::IndexOutOfRange, "Atilde(" + std::to_string(j) + "," +
                                                   std::to_string(r) + ") out of range");
    BraidWord w;
    for (int s = 1; s < r; ++s) w.letters.push_back(Letter::a(j, s));
    for (int s = r + 1; s <= G_.handles(); ++s) w.letters.push_back(Letter::a(j, s, -1));
    return w;
  }

 private:
  void check_pair(int i, int j) const {
    if (i < 1 || j > G_.n || i >= j)
      throw DomainError(Errc::IndexOutOfRange, "need 1 <= i < j <= " + std::to_string(G_.n) +
                                                   ", got (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ")");
  }

  GroupDescriptor G_;
};

inline ClassicalWords classical_words(const GroupDescriptor& G) { return ClassicalWords(G); }

struct RelationReport {
  std::size_t instances = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

namespace detail {

template <class Normalizer>
void check_equal(RelationReport& rep, const Normalizer& norm, const std::string& label,
                 const BraidWord& lhs, const BraidWord& rhs) {
  ++rep.instances;
  if (norm(lhs) != norm(rhs))
    rep.failures.push_back(label + ": " + to_string(lhs) + " != " + to_string(rhs));
}

/// Presentation relations shared by the orientable and non-orientable
/// quotients: Artin, sigma_i^2 = 1, commuting a's, and the strand action.
template <class Normalizer>
void check_presentation(RelationReport& rep, const GroupDescriptor& G, const Normalizer& norm) {
  const BraidWord empty;
  for (int i = 1; i <= G.n - 1; ++i) {
    for (int j = i + 2; j <= G.n - 1; ++j)
      check_equal(rep, norm, "artin-commute",
                  BraidWord{{Letter::sigma(i), Letter::sigma(j)}},
                  BraidWord{{Letter::sigma(j), Letter::sigma(i)}});
    if (i + 1 <= G.n - 1)
      check_equal(rep, norm, "artin-braid",
                  BraidWord{{Letter::sigma(i), Letter::sigma(i + 1), Letter::sigma(i)}},
                  BraidWord{{Letter::sigma(i + 1), Letter::sigma(i), Letter::sigma(i + 1)}});
    check_equal(rep, norm, "involution", BraidWord{{Letter::sigma(i, 2)}}, empty);
  }
  const int h = G.handles();
  for (int i = 1; i <= G.n; ++i)
    for (int r = 1; r <= h; ++r)
      for (int j = 1; j <= G.n; ++j)
        for (int s = 1; s <= h; ++s)
          check_equal(rep, norm, "commutator",
                      BraidWord{{Letter::a(i, r), Letter::a(j, s), Letter::a(i, r, -1),
                                 Letter::a(j, s, -1)}},
                      empty);
  for (int i = 1; i <= G.n - 1; ++i) {
    const Permutation t = Permutation::transposition(G.n, i);
    for (int j = 1; j <= G.n; ++j)
      for (int r = 1; r <= h; ++r)
        check_equal(rep, norm, "action",
                    BraidWord{{Letter::sigma(i), Letter::a(j, r), Letter::sigma(i, -1)}},
                    BraidWord{{Letter::a(t(j), r)}});
  }
}

}  // namespace detail

/// Normalizes both sides of every presentation relation instance, plus the
/// classical braids T_{i,j}, A_{i,j} and the full twist, which must vanish.
inline RelationReport check_relations(const GroupDescriptor& G) {
  detail::require_orientable(G);
  RelationReport rep;
  auto norm = [&G](const BraidWord& w) { return normalize(G, w); };
  detail::check_presentation(rep, G, norm);
  const auto cw = classical_words(G);
  const BraidWord empty;
  for (int i = 1; i <= G.n; ++i)
    for (int j = i + 1; j <= G.n; ++j) {
      detail::check_equal(rep, norm, "T(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          cw.T_word(i, j), empty);
      detail::check_equal(rep, norm, "A(" + std::to_string(i) + "," + std::to_string(j) + ")",
                          cw.A_word(i, j), empty);
    }
  detail::check_equal(rep, norm, "full-twist", cw.full_twist_word(), empty);
  return rep;
}

}  // namespace braidcryst
