#include "cycpres/words.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

using namespace cycpres;

namespace {

Word w_of(std::initializer_list<Letter> ls) {
  Word w;
  w.letters = ls;
  return w;
}

}  // namespace

TEST_CASE("free reduction cancels across merged syllables") {
  // x0 x1 x1^-1 x0^-1 x2 collapses from the middle outward
  Word w = w_of({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}});
  CHECK(reduce(w) == w_of({{2, 1}}));

  Word merge = w_of({{0, 2}, {0, 3}, {1, 1}});
  CHECK(reduce(merge) == w_of({{0, 5}, {1, 1}}));

  CHECK(reduce(w_of({{4, 3}, {4, -3}})).empty());
}

TEST_CASE("concat and inverse") {
  Word a = w_of({{0, 2}, {1, 1}});
  CHECK(concat(a, inverse(a)).empty());
  CHECK(inverse(a) == w_of({{1, -1}, {0, -2}}));
  CHECK(concat(a, w_of({{1, 2}})) == w_of({{0, 2}, {1, 3}}));
  CHECK(letter_word(3, -2) == w_of({{3, -2}}));
  CHECK(letter_word(3, 0).empty());
  CHECK(a.length() == 3);
}

TEST_CASE("lambda blocks walk subscripts by f mod n") {
  CHECK(lambda_block(3, 2, 8) == w_of({{0, 1}, {2, 1}, {4, 1}}));
  CHECK(lambda_block(0, 5, 8).empty());
  // subscripts reduce mod n
  CHECK(lambda_block(2, 5, 3) == w_of({{0, 1}, {2, 1}}));
  CHECK(shift(lambda_block(3, 2, 6), 3, 6) == w_of({{3, 1}, {5, 1}, {1, 1}}));
}

TEST_CASE("parameter tuples validate and normalize") {
  ParamsM p = params_m(2, 6, -1, 2, 1);
  CHECK(p.f == 2);
  CHECK(p.A == 1);
  CHECK(params_m_valid(2, 6, -1, 2, 1));

  // f and A stored reduced mod n
  ParamsM q = params_m(2, 4, -1, 4, 5);
  CHECK(q.f == 0);
  CHECK(q.A == 1);

  // f*(r-s) must vanish mod n
  CHECK_FALSE(params_m_valid(2, 6, -1, 1, 1));
  CHECK_THROWS_AS(params_m(2, 6, -1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(params_m(-2, 6, -1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(params_m(2, 0, -1, 0, 1), std::invalid_argument);
}

TEST_CASE("two-block words") {
  CHECK(type_m_word(params_m(2, 4, -1, 0, 1)) == w_of({{0, 2}, {1, 1}}));

  // r = s with aligned blocks gives the empty word
  CHECK(type_m_word(params_m(3, 6, 3, 2, 0)).empty());

  // equal blocks offset by A = 3: x0 x2 x4 x1^-1 x5^-1 x3^-1
  CHECK(type_m_word(params_m(3, 6, 3, 2, 3)) ==
        w_of({{0, 1}, {2, 1}, {4, 1}, {1, -1}, {5, -1}, {3, -1}}));
}

TEST_CASE("general placement agrees with the B = A specialization") {
  for (auto [r, n, s, f, A] :
       {std::array<long long, 5>{2, 4, -1, 0, 1}, {3, 6, 3, 2, 3},
        {2, 6, -1, 2, 1}, {3, 6, 3, 2, 0}, {4, 5, -2, 0, 3}}) {
    ParamsM p = params_m(r, n, s, f, A);
    TypeFParams q{p.r, p.n, p.s, p.f, p.A, p.A};
    CHECK(type_f_word(q) == type_m_word(p));
  }
  // placement constraint (r-s)f = B-A mod n enforced
  CHECK_THROWS_AS(type_f_word(TypeFParams{2, 6, -1, 1, 0, 0}),
                  std::invalid_argument);
  CHECK_NOTHROW(type_f_word(TypeFParams{2, 6, -1, 1, 0, 3}));
}

TEST_CASE("cyclic presentations expand to shifted relators") {
  CyclicPresentation cp = make_cyclic(4, w_of({{0, 2}, {1, 1}}));
  FinitePresentation fp = cyclic_presentation(cp);
  CHECK(fp.generators == std::vector<std::string>{"x0", "x1", "x2", "x3"});
  REQUIRE(fp.relators.size() == 4);
  CHECK(fp.relators[0] == w_of({{0, 2}, {1, 1}}));
  CHECK(fp.relators[1] == w_of({{1, 2}, {2, 1}}));
  CHECK(fp.relators[3] == w_of({{3, 2}, {0, 1}}));

  CHECK_THROWS_AS(make_cyclic(2, w_of({{5, 1}})), std::invalid_argument);
}

TEST_CASE("shift extension rewrites x_i as t^i x t^-i") {
  // x0 x1 x2 x3^-1 over n = 6
  CyclicPresentation cp =
      make_cyclic(6, w_of({{0, 1}, {1, 1}, {2, 1}, {3, -1}}));
  FinitePresentation fp = shift_extension(cp);
  CHECK(fp.generators == std::vector<std::string>{"t", "x"});
  REQUIRE(fp.relators.size() == 2);
  CHECK(word_text(fp.relators[0], fp.generators) == "t^6");
  CHECK(word_text(fp.relators[1], fp.generators) == "x*t*x*t*x*t*x^-1*t^-3");

  CyclicPresentation cp2 = make_cyclic(8, w_of({{0, 1}, {1, 1}, {3, 1}}));
  FinitePresentation f2 = shift_extension(cp2);
  CHECK(word_text(f2.relators[1], f2.generators) == "x*t*x*t^2*x*t^-3");

  // n = 1: the extension is the group itself with a redundant t
  FinitePresentation f1 = shift_extension(make_cyclic(1, w_of({{0, 1}})));
  CHECK(word_text(f1.relators[0], f1.generators) == "t");
  CHECK(word_text(f1.relators[1], f1.generators) == "x");
}

TEST_CASE("two-generator presentations") {
  FinitePresentation e = e_presentation(2, 4, -1, 1);
  CHECK(e.generators == std::vector<std::string>{"t", "y"});
  CHECK(word_text(e.relators[0], e.generators) == "t^4");
  CHECK(word_text(e.relators[1], e.generators) == "y^2*t*y*t^-1");

  FinitePresentation f = f_presentation(2, 8, -1, 1, 4);
  CHECK(word_text(f.relators[1], f.generators) == "y^2*t*y*t^-4");

  FinitePresentation e2 = e_presentation(1, 2, -2, 1);
  CHECK(word_text(e2.relators[1], e2.generators) == "y*t*y^2*t^-1");
}

TEST_CASE("word and presentation text round trips") {
  auto gens = x_generators(4);
  Word w = w_of({{0, 2}, {1, 1}});
  CHECK(word_text(w, gens) == "x0^2*x1");
  CHECK(parse_word("x0^2*x1", gens) == w);
  CHECK(word_text(Word{}, gens) == "1");
  CHECK(parse_word("1", gens).empty());
  CHECK_THROWS_AS(parse_word("z3", gens), std::invalid_argument);

  FinitePresentation p = e_presentation(2, 6, -1, 2);
  FinitePresentation back = parse_presentation(presentation_text(p));
  CHECK(back == p);

  FinitePresentation cyc =
      cyclic_presentation(make_cyclic(4, w_of({{0, 2}, {1, 1}})));
  CHECK(parse_presentation(presentation_text(cyc)) == cyc);
}

TEST_CASE("cyclic normal form is rotation and inversion invariant") {
  // x0 x1^-1 x2 in all rotations, and inverted
  Word w = w_of({{0, 1}, {1, -1}, {2, 1}});
  auto canon = cyclic_normal_form(w);
  CHECK(cyclic_normal_form(w_of({{1, -1}, {2, 1}, {0, 1}})) == canon);
  CHECK(cyclic_normal_form(w_of({{2, 1}, {0, 1}, {1, -1}})) == canon);
  CHECK(cyclic_normal_form(inverse(w)) == canon);
  // conjugating by any word leaves the cyclic reduction alone
  Word conj = concat(w_of({{3, 2}}), concat(w, w_of({{3, -2}})));
  CHECK(cyclic_normal_form(conj) == canon);

  // a genuinely different word separates
  CHECK(cyclic_normal_form(w_of({{0, 1}, {2, -1}, {1, 1}})) != canon);
  // exponents unravel into repeated columns: x0^2 == x0 x0
  CHECK(cyclic_normal_form(w_of({{0, 2}})) ==
        cyclic_normal_form(concat(letter_word(0, 1), letter_word(0, 1))));
  CHECK(cyclic_normal_form(Word{}).empty());
}
