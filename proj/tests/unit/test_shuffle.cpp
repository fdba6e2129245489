#include <gtest/gtest.h>

#include <random>

#include "elliptikit/shuffle.hpp"
#include "oracles.hpp"

using namespace elliptikit;

namespace {

using Element = ShuffleElement<GaussRational>;

const Letter kLog{1, 0.0};
const Letter kA{0, 0.0};
const Letter kB{2, 0.0};
const Letter kC{1, Complex(0.5, 0.5)};
const Letter kD{2, Complex(0.5, 0.5)};

Element word(std::initializer_list<Letter> letters) { return Element(Word(letters)); }

Element random_element(std::mt19937& rng, int max_length, int words) {
  const std::vector<Letter> alphabet{kLog, kA, kB, kC, kD};
  std::uniform_int_distribution<int> len(0, max_length), pick(0, 4), coef(-3, 3);
  Element e;
  for (int k = 0; k < words; ++k) {
    Word w;
    int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(alphabet[static_cast<std::size_t>(pick(rng))]);
    e.add(w, GaussRational(Rational(coef(rng)), Rational(coef(rng))));
  }
  return e;
}

Element brute_product(const Element& u, const Element& v) {
  Element out;
  for (const auto& [a, ca] : u.terms()) {
    for (const auto& [b, cb] : v.terms()) {
      for (const auto& [w, m] : oracle::shuffle_by_positions(a, b)) out.add(w, ca * cb * GaussRational(m));
    }
  }
  return out;
}

}  // namespace

TEST(Shuffle, LengthOneWords) {
  EXPECT_EQ(shuffle_product(word({kA}), word({kB})), word({kA, kB}) + word({kB, kA}));
  EXPECT_EQ(shuffle_product(word({kA}), word({kA})), word({kA, kA}) * GaussRational(2));
}

TEST(Shuffle, UnitIsEmptyWord) {
  Element w = word({kA, kC, kB});
  EXPECT_EQ(shuffle_product(w, Element::unit()), w);
  EXPECT_EQ(shuffle_product(Element::unit(), w), w);
}

TEST(Shuffle, PowersOfOneLetter) {
  Element x = word({kB});
  Element p = Element::unit();
  for (int k = 1; k <= 4; ++k) {
    p = shuffle_product(p, x);
    Word w(static_cast<std::size_t>(k), kB);
    EXPECT_EQ(p, Element(w, GaussRational(factorial(k))));
  }
}

TEST(Shuffle, ZeroCoefficientsAreDropped) {
  Element e = word({kA}) - word({kA});
  EXPECT_TRUE(e.is_zero());
  EXPECT_EQ(e.size(), 0u);
}

TEST(Shuffle, MatchesPositionEnumeration) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Element u = random_element(rng, 4, 3), v = random_element(rng, 4, 3);
    EXPECT_EQ(shuffle_product(u, v), brute_product(u, v));
  }
}

TEST(Shuffle, CommutativeAndAssociative) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    Element u = random_element(rng, 3, 2), v = random_element(rng, 3, 2), w = random_element(rng, 2, 2);
    EXPECT_EQ(shuffle_product(u, v), shuffle_product(v, u));
    EXPECT_EQ(shuffle_product(shuffle_product(u, v), w), shuffle_product(u, shuffle_product(v, w)));
  }
}

TEST(Deconcatenate, Splittings) {
  auto e = deconcatenate(Word{});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_TRUE(e[0].first.empty() && e[0].second.empty());
  auto one = deconcatenate(Word{kA});
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0].second, Word{kA});
  EXPECT_EQ(one[1].first, Word{kA});
  auto three = deconcatenate(Word{kA, kB, kC});
  ASSERT_EQ(three.size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(three[k].first.size(), k);
    Word joined = three[k].first;
    joined.insert(joined.end(), three[k].second.begin(), three[k].second.end());
    EXPECT_EQ(joined, (Word{kA, kB, kC}));
  }
}

TEST(Antipode, SignReversal) {
  EXPECT_EQ(antipode(word({kA, kB})), word({kB, kA}));
  EXPECT_EQ(antipode(word({kA})), word({kA}) * GaussRational(-1));
  EXPECT_EQ(antipode(word({kA, kB, kC})), word({kC, kB, kA}) * GaussRational(-1));
}

TEST(Antipode, HopfAxiom) {
  std::mt19937 rng(41);
  const std::vector<Letter> alphabet{kLog, kA, kB, kC, kD};
  std::uniform_int_distribution<int> pick(0, 4);
  for (int len = 0; len <= 4; ++len) {
    for (int trial = 0; trial < 5; ++trial) {
      Word w;
      for (int j = 0; j < len; ++j) w.push_back(alphabet[static_cast<std::size_t>(pick(rng))]);
      Element left, right;
      for (const auto& [a, b] : deconcatenate(w)) {
        left += shuffle_product(antipode(Element(a)), Element(b));
        right += shuffle_product(Element(a), antipode(Element(b)));
      }
      Element expected = len == 0 ? Element::unit() : Element();
      EXPECT_EQ(left, expected);
      EXPECT_EQ(right, expected);
    }
  }
}

TEST(Coproduct, CoassociativeAndCounital) {
  Element e = word({kA, kB, kC}) + word({kD}) * GaussRational(3);
  auto cop = coproduct(e);
  Element via_left, via_right;
  for (const auto& [ab, c] : cop) {
    via_left += Element(ab.first, c * counit(Element(ab.second)));
    via_right += Element(ab.second, c * counit(Element(ab.first)));
  }
  EXPECT_EQ(via_left, e);
  EXPECT_EQ(via_right, e);
  EXPECT_EQ(counit(Element::unit() * GaussRational(5)), GaussRational(5));
  EXPECT_EQ(counit(word({kA})), GaussRational(0));
}

TEST(Coproduct, IsAlgebraMorphism) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    Element u = random_element(rng, 2, 2), v = random_element(rng, 2, 2);
    auto lhs = coproduct(shuffle_product(u, v));
    std::map<std::pair<Word, Word>, GaussRational> rhs;
    for (const auto& [ab, c] : coproduct(u)) {
      for (const auto& [cd, d] : coproduct(v)) {
        Element first = shuffle_product(Element(ab.first), Element(cd.first));
        Element second = shuffle_product(Element(ab.second), Element(cd.second));
        for (const auto& [x, cx] : first.terms()) {
          for (const auto& [y, cy] : second.terms()) {
            auto& slot = rhs[{x, y}];
            slot += c * d * cx * cy;
          }
        }
      }
    }
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Regularity, LeadingLogLetter) {
  EXPECT_TRUE(is_regular(Element::unit()));
  EXPECT_TRUE(is_regular(word({kA, kLog})));
  EXPECT_FALSE(is_regular(word({kLog, kA})));
  EXPECT_TRUE(is_regular(word({kC})));
}

TEST(StarDecompose, Examples) {
  StarPolynomial<GaussRational> x = star_decompose(word({kLog}));
  ASSERT_EQ(x.size(), 2u);
  EXPECT_TRUE(x[0].is_zero());
  EXPECT_EQ(x[1], Element::unit());

  StarPolynomial<GaussRational> b = star_decompose(word({kB}));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], word({kB}));

  StarPolynomial<GaussRational> p = star_decompose(word({kLog, kD}));
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1], word({kD}));
  EXPECT_EQ(p[0], word({kD, kLog}) * GaussRational(-1));
  EXPECT_EQ(reconstruct(p), word({kLog, kD}));
}

TEST(StarDecompose, RoundTripAndRegularCoefficients) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    Element e = random_element(rng, 4, 4);
    StarPolynomial<GaussRational> p = star_decompose(e);
    for (const auto& c : p) EXPECT_TRUE(is_regular(c));
    EXPECT_EQ(reconstruct(p), e);
  }
}

TEST(StarDecompose, IsMultiplicative) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    Element u = random_element(rng, 2, 2), v = random_element(rng, 2, 2);
    StarPolynomial<GaussRational> pu = star_decompose(u), pv = star_decompose(v);
    StarPolynomial<GaussRational> prod(pu.size() + pv.size());
    for (std::size_t i = 0; i < pu.size(); ++i) {
      for (std::size_t j = 0; j < pv.size(); ++j) prod[i + j] += shuffle_product(pu[i], pv[j]);
    }
    StarPolynomial<GaussRational> direct = star_decompose(shuffle_product(u, v));
    prod.resize(std::max(prod.size(), direct.size()));
    direct.resize(prod.size());
    EXPECT_EQ(prod, direct);
  }
}

TEST(Degree, Examples) {
  EXPECT_FALSE(degree(Element()).has_value());
  EXPECT_EQ(degree(word({kB})), 0);
  EXPECT_EQ(degree(word({kLog, kLog})), 2);
  EXPECT_EQ(degree(word({kA, kLog})), 0);
  EXPECT_EQ(degree(word({kLog, kA}) + word({kC})), 1);
}

TEST(ParseWord, Syntax) {
  std::map<std::string, Complex> labels{{"s", Complex(0.5, 0.5)}};
  EXPECT_EQ(parse_word("G[]"), Word{});
  EXPECT_EQ(parse_word("[1,0; 2,s]", labels), (Word{kLog, kD}));
  EXPECT_THROW(parse_word("[1]"), ParseError);
  EXPECT_THROW(parse_word("[1,0"), ParseError);
  EXPECT_THROW(parse_word("[x,0]"), ParseError);
  EXPECT_THROW(parse_word("[1,q]", labels), ParseError);
  try {
    parse_word("[1,0] x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}
