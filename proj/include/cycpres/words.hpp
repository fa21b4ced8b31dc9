#pragma once

#include <string>
#include <vector>

#include "cycpres/arith.hpp"

namespace cycpres {

// One syllable g^e of a word; sym indexes into a generator list.
struct Letter {
  int sym = 0;
  long long exp = 0;
  bool operator==(const Letter&) const = default;
};

// Freely reduced word: adjacent letters have distinct syms, no zero exponents.
struct Word {
  std::vector<Letter> letters;
  bool operator==(const Word&) const = default;
  bool empty() const { return letters.empty(); }
  long long length() const;  // sum of |exp|
};

Word reduce(const Word& w);
Word concat(const Word& a, const Word& b);
Word inverse(const Word& w);
Word letter_word(int sym, long long exp);

// x_0 x_f x_{2f} ... x_{(r-1)f}, subscripts mod n; empty when r = 0.
Word lambda_block(long long r, long long f, long long n);

// Subscript shift x_i -> x_{i+k mod n}.
Word shift(const Word& w, long long k, long long n);

// Parameter tuple for the two-block cyclic words handled here.
// Invariants: r >= 0, n >= 1, f and A stored reduced mod n, f*(r-s) = 0 mod n.
struct ParamsM {
  long long r = 0, n = 1, s = 0, f = 0, A = 0;
  bool operator==(const ParamsM&) const = default;
};

// Throws std::invalid_argument naming the failed invariant.
ParamsM params_m(long long r, long long n, long long s, long long f, long long A);
bool params_m_valid(long long r, long long n, long long s, long long f, long long A);

struct TypeFParams {
  long long r = 0, n = 1, s = 0, f = 0, A = 0, B = 0;
};

// General two-block word: positive block lambda(r,f), second block of length |s|
// placed at B (s >= 0, inverted) or at A + r f (s < 0). Requires (r-s)f = B-A mod n.
Word type_f_word(const TypeFParams& p);

// The B = A specialization used for the main parameter tuples.
Word type_m_word(const ParamsM& p);

struct CyclicPresentation {
  long long n = 1;
  Word w;  // subscripts in [0, n)
};

CyclicPresentation make_cyclic(long long n, const Word& w);

struct FinitePresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  bool operator==(const FinitePresentation&) const = default;
};

// Generators x0..x{n-1}, relators shift(w, i) for i in [0, n).
FinitePresentation cyclic_presentation(const CyclicPresentation& cp);

// <t, x | t^n, W> where W rewrites w via x_i = t^i x t^-i.
FinitePresentation shift_extension(const CyclicPresentation& cp);

// <t, y | t^n, y^r t^A y^-s t^-A>, relators kept literal (A not reduced).
FinitePresentation e_presentation(long long r, long long n, long long s, long long A);

// <t, y | t^n, y^r t^A y^-s t^-B>.
FinitePresentation f_presentation(long long r, long long n, long long s, long long A,
                                  long long B);

// Column sequence (sym doubled, +1 for an inverse) of the cyclically reduced
// word, least over all rotations of it and of its inverse. Two words get the
// same form exactly when they agree as cyclic words up to inversion.
std::vector<int> cyclic_normal_form(const Word& w);

// Text grammar: relators are '*'-joined powers, e.g. "x0^2*x1"; a presentation is
// "< g1, g2 | rel1, rel2 >".
std::string word_text(const Word& w, const std::vector<std::string>& gens);
Word parse_word(const std::string& text, const std::vector<std::string>& gens);
std::string presentation_text(const FinitePresentation& p);
FinitePresentation parse_presentation(const std::string& text);

std::vector<std::string> x_generators(long long n);

}  // namespace cycpres
