#include "cycpres/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cycpres {

long long Word::length() const {
  long long n = 0;
  for (const auto& l : letters) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

Word reduce(const Word& w) {
  Word out;
  for (const auto& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().sym == l.sym) {
      out.letters.back().exp += l.exp;
      if (out.letters.back().exp == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return reduce(out);
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->sym, -it->exp});
  return out;
}

Word letter_word(int sym, long long exp) {
  Word out;
  if (exp != 0) out.letters.push_back({sym, exp});
  return out;
}

Word lambda_block(long long r, long long f, long long n) {
  if (r < 0) throw std::invalid_argument("lambda_block: r must be nonnegative");
  if (n < 1) throw std::invalid_argument("lambda_block: n must be positive");
  Word out;
  for (long long i = 0; i < r; ++i)
    out.letters.push_back({static_cast<int>(mod_ll(i * f, n)), 1});
  return reduce(out);
}

Word shift(const Word& w, long long k, long long n) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (const auto& l : w.letters)
    out.letters.push_back({static_cast<int>(mod_ll(l.sym + k, n)), l.exp});
  return reduce(out);
}

bool params_m_valid(long long r, long long n, long long s, long long f, long long A) {
  (void)A;
  if (r < 0 || n < 1) return false;
  return mod_ll(f * (r - s), n) == 0;
}

ParamsM params_m(long long r, long long n, long long s, long long f, long long A) {
  if (n < 1) throw std::invalid_argument("params_m: n must be positive");
  if (r < 0) throw std::invalid_argument("params_m: r must be nonnegative");
  long long fr = mod_ll(f, n), Ar = mod_ll(A, n);
  long long c = mod_ll(fr * (r - s), n);
  if (c != 0) {
    std::ostringstream os;
    os << "params_m: f*(r-s) = " << c << " (mod " << n << "), expected 0";
    throw std::invalid_argument(os.str());
  }
  return ParamsM{r, n, s, fr, Ar};
}

Word type_f_word(const TypeFParams& p) {
  if (p.r < 0) throw std::invalid_argument("type_f_word: r must be nonnegative");
  if (p.n < 1) throw std::invalid_argument("type_f_word: n must be positive");
  long long want = mod_ll(p.B - p.A, p.n);
  long long got = mod_ll((p.r - p.s) * p.f, p.n);
  if (got != want) {
    std::ostringstream os;
    os << "type_f_word: (r-s)f = " << got << " but B-A = " << want << " (mod " << p.n
       << ")";
    throw std::invalid_argument(os.str());
  }
  if (p.s >= 0) {
    Word second = shift(lambda_block(p.s, p.f, p.n), p.B, p.n);
    return concat(lambda_block(p.r, p.f, p.n), inverse(second));
  }
  Word second = shift(lambda_block(-p.s, p.f, p.n), p.A + p.r * p.f, p.n);
  return concat(lambda_block(p.r, p.f, p.n), second);
}

Word type_m_word(const ParamsM& p) {
  if (p.s >= 0) {
    Word second = shift(lambda_block(p.s, p.f, p.n), p.A, p.n);
    return concat(lambda_block(p.r, p.f, p.n), inverse(second));
  }
  Word second = shift(lambda_block(-p.s, p.f, p.n), p.A + p.r * p.f, p.n);
  return concat(lambda_block(p.r, p.f, p.n), second);
}

CyclicPresentation make_cyclic(long long n, const Word& w) {
  if (n < 1) throw std::invalid_argument("make_cyclic: n must be positive");
  Word r = reduce(w);
  for (const auto& l : r.letters)
    if (l.sym < 0 || l.sym >= n)
      throw std::invalid_argument("make_cyclic: subscript out of range");
  return CyclicPresentation{n, r};
}

std::vector<std::string> x_generators(long long n) {
  std::vector<std::string> gens;
  gens.reserve(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) gens.push_back("x" + std::to_string(i));
  return gens;
}

FinitePresentation cyclic_presentation(const CyclicPresentation& cp) {
  FinitePresentation out;
  out.generators = x_generators(cp.n);
  out.relators.reserve(static_cast<size_t>(cp.n));
  for (long long i = 0; i < cp.n; ++i) out.relators.push_back(shift(cp.w, i, cp.n));
  return out;
}

FinitePresentation shift_extension(const CyclicPresentation& cp) {
  FinitePresentation out;
  out.generators = {"t", "x"};
  Word big;
  for (const auto& l : cp.w.letters) {
    big = concat(big, letter_word(0, l.sym));
    big = concat(big, letter_word(1, l.exp));
    big = concat(big, letter_word(0, -l.sym));
  }
  out.relators.push_back(letter_word(0, cp.n));
  out.relators.push_back(big);
  return out;
}

FinitePresentation f_presentation(long long r, long long n, long long s, long long A,
                                  long long B) {
  if (n < 1) throw std::invalid_argument("f_presentation: n must be positive");
  FinitePresentation out;
  out.generators = {"t", "y"};
  out.relators.push_back(letter_word(0, n));
  Word rel = concat(letter_word(1, r), letter_word(0, A));
  rel = concat(rel, letter_word(1, -s));
  rel = concat(rel, letter_word(0, -B));
  out.relators.push_back(rel);
  return out;
}

FinitePresentation e_presentation(long long r, long long n, long long s, long long A) {
  return f_presentation(r, n, s, A, A);
}

std::string word_text(const Word& w, const std::vector<std::string>& gens) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : w.letters) {
    if (l.sym < 0 || static_cast<size_t>(l.sym) >= gens.size())
      throw std::invalid_argument("word_text: symbol out of range");
    if (!first) os << "*";
    first = false;
    os << gens[static_cast<size_t>(l.sym)];
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::string parse_ident(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  while (i < s.size() &&
         (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
    ++i;
  if (i == start) throw std::invalid_argument("parse: expected identifier in '" + s + "'");
  return s.substr(start, i - start);
}

long long parse_int(const std::string& s, size_t& i) {
  skip_ws(s, i);
  size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw std::invalid_argument("parse: expected integer in '" + s + "'");
  return std::stoll(s.substr(start, i - start));
}

int sym_of(const std::string& name, const std::vector<std::string>& gens) {
  for (size_t k = 0; k < gens.size(); ++k)
    if (gens[k] == name) return static_cast<int>(k);
  throw std::invalid_argument("parse: unknown generator '" + name + "'");
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  Word out;
  size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws(text, i);
    if (i == text.size()) return out;
    throw std::invalid_argument("parse: trailing input after '1'");
  }
  while (true) {
    std::string name = parse_ident(text, i);
    long long exp = 1;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '^') {
      ++i;
      exp = parse_int(text, i);
    }
    out.letters.push_back({sym_of(name, gens), exp});
    skip_ws(text, i);
    if (i == text.size()) break;
    if (text[i] != '*')
      throw std::invalid_argument("parse: expected '*' in '" + text + "'");
    ++i;
  }
  return reduce(out);
}

std::string presentation_text(const FinitePresentation& p) {
  std::ostringstream os;
  os << "< ";
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (i) os << ", ";
    os << p.generators[i];
  }
  os << " | ";
  for (size_t i = 0; i < p.relators.size(); ++i) {
    if (i) os << ", ";
    os << word_text(p.relators[i], p.generators);
  }
  os << " >";
  return os.str();
}

std::vector<int> cyclic_normal_form(const Word& w) {
  std::vector<int> seq;
  for (const auto& l : reduce(w).letters) {
    int c = 2 * l.sym + (l.exp < 0 ? 1 : 0);
    long long k = l.exp < 0 ? -l.exp : l.exp;
    for (long long i = 0; i < k; ++i) seq.push_back(c);
  }
  while (seq.size() >= 2 && seq.front() == (seq.back() ^ 1)) {
    seq.erase(seq.begin());
    seq.pop_back();
  }
  if (seq.empty()) return seq;
  auto least_rotation = [](std::vector<int> cur) {
    std::vector<int> best = cur;
    for (size_t i = 1; i < cur.size(); ++i) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    return best;
  };
  std::vector<int> inv(seq.rbegin(), seq.rend());
  for (int& c : inv) c ^= 1;
  std::vector<int> a = least_rotation(std::move(seq));
  std::vector<int> b = least_rotation(std::move(inv));
  return a < b ? a : b;
}

FinitePresentation parse_presentation(const std::string& text) {
  size_t open = text.find('<');
  size_t bar = text.find('|');
  size_t close = text.rfind('>');
  if (open == std::string::npos || bar == std::string::npos ||
      close == std::string::npos || !(open < bar && bar < close))
    throw std::invalid_argument("parse: presentation must look like '< gens | rels >'");
  FinitePresentation out;
  std::string gens = text.substr(open + 1, bar - open - 1);
  std::string rels = text.substr(bar + 1, close - bar - 1);
  std::istringstream gs(gens);
  std::string tok;
  while (std::getline(gs, tok, ',')) {
    size_t i = 0;
    out.generators.push_back(parse_ident(tok, i));
  }
  std::istringstream rs(rels);
  while (std::getline(rs, tok, ',')) {
    bool blank = true;
    for (char c : tok)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.relators.push_back(parse_word(tok, out.generators));
  }
  return out;
}

}  // namespace cycpres
