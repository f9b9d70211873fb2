#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "soergel/json_io.hpp"

using namespace soergel;

TEST_SUITE("coxeter") {

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(CoxeterMatrix({"s", "t"}, {{1, 3}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterMatrix({"s", "t"}, {{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterMatrix({"s", "s"}, {{1, 3}, {3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_coxeter("E8"), std::invalid_argument);
}

TEST_CASE("word parsing") {
  CoxeterMatrix a2 = builtin_coxeter("A2");
  CHECK(a2.parse_word("sts") == Word{0, 1, 0});
  CHECK(a2.parse_word("s,t") == Word{0, 1});
  CHECK(a2.parse_word("").empty());
  CHECK(a2.parse_word("e").empty());
  CHECK(a2.format_word({}) == "e");
  CHECK_THROWS_AS(a2.parse_word("sx"), std::invalid_argument);
  CoxeterMatrix long_labels({"s1", "s2"}, {{1, 3}, {3, 1}});
  CHECK(long_labels.parse_word("s1,s2") == Word{0, 1});
  CHECK(long_labels.format_word({1, 0}) == "s2,s1");
}

TEST_CASE("group orders and length histograms") {
  CHECK(GroupTable(builtin_coxeter("A1")).size() == 2);
  GroupTable a2(builtin_coxeter("A2"));
  CHECK(a2.size() == 6);
  CHECK(a2.max_length() == 3);
  CHECK(GroupTable(builtin_coxeter("B2")).size() == 8);
  CHECK(GroupTable(builtin_coxeter("H2")).size() == 10);
  CHECK(GroupTable(builtin_coxeter("I2(8)")).size() == 16);
  GroupTable a3(builtin_coxeter("A3"));
  REQUIRE(a3.size() == 24);
  std::vector<int> hist(7);
  for (Element x : a3.elements()) ++hist[a3.length(x)];
  CHECK(hist == std::vector<int>{1, 3, 5, 6, 5, 3, 1});
  CHECK(a3.reflections().size() == 6);
}

TEST_CASE("infinite dihedral normal forms") {
  GroupTable g(builtin_coxeter("I2(inf)"), 4);
  CHECK_FALSE(g.is_finite());
  std::vector<std::string> words;
  for (Element x : g.elements()) words.push_back(g.word_string(x));
  CHECK(words == std::vector<std::string>{"e", "s", "t", "st", "ts", "sts", "tst", "stst", "tsts"});
  Element stst = *g.find({0, 1, 0, 1});
  CHECK_THROWS_AS(g.right(stst, 0), OutOfRange);
  CHECK(g.multiply(*g.find({0, 1}), *g.find({1, 0})) == g.identity());
}

TEST_CASE("multiplication") {
  GroupTable g(builtin_coxeter("A2"));
  Element st = *g.find({0, 1}), ts = *g.find({1, 0}), s = *g.find({0});
  CHECK(g.multiply(st, ts) == g.identity());
  CHECK(g.multiply(s, s) == g.identity());
  CHECK(g.multiply(st, g.identity()) == st);
  CHECK(g.evaluate({0, 1, 0}) == g.evaluate({1, 0, 1}));
  CHECK(g.word_string(g.evaluate({1, 0, 1})) == "sts");
}

TEST_CASE("canonical words are ShortLex-least reduced words") {
  for (const char* type : {"A2", "B2", "A3"}) {
    GroupTable g(builtin_coxeter(type));
    std::map<int, Word> best;
    // every word up to the longest length, in ShortLex order
    std::vector<Word> layer{{}};
    for (int l = 0; l <= g.max_length(); ++l) {
      std::vector<Word> next;
      for (const Word& w : layer) {
        Element x = g.evaluate(w);
        if (g.length(x) == l && !best.count(x.index)) best[x.index] = w;
        for (int s = 0; s < g.rank(); ++s) {
          Word u = w;
          u.push_back(s);
          next.push_back(std::move(u));
        }
      }
      layer = std::move(next);
    }
    for (Element x : g.elements()) CHECK(g.word(x) == best.at(x.index));
  }
}

TEST_CASE("exchange condition") {
  std::mt19937 rng(5);
  GroupTable g(builtin_coxeter("A3"));
  for (int i = 0; i < 200; ++i) {
    Element w{static_cast<int>(rng() % g.size())};
    int s = static_cast<int>(rng() % 3);
    Element ws = g.right(w, s);
    CHECK(std::abs(g.length(ws) - g.length(w)) == 1);
    if (g.length(ws) < g.length(w)) {
      CHECK(g.right_descent(w, s));
      Word u = g.word(ws);
      u.push_back(s);
      CHECK(g.evaluate(u) == w);
      CHECK(static_cast<int>(u.size()) == g.length(w));
    }
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (const char* type : {"A2", "B2", "A3"}) {
    GroupTable g(builtin_coxeter(type));
    for (Element w : g.elements()) {
      std::set<int> ideal = oracle::bruhat_ideal(g, w);
      for (Element x : g.elements()) CHECK(g.bruhat_leq(x, w) == (ideal.count(x.index) == 1));
    }
  }
  GroupTable a2(builtin_coxeter("A2"));
  CHECK(a2.bruhat_leq(*a2.find({0}), *a2.find({0, 1, 0})));
  CHECK_FALSE(a2.bruhat_leq(*a2.find({0, 1}), *a2.find({1, 0})));
}

TEST_CASE("Bruhat order in the infinite dihedral group") {
  GroupTable g(builtin_coxeter("I2(inf)"), 6);
  for (Element w : g.elements()) {
    std::set<int> ideal = oracle::bruhat_ideal(g, w);
    for (Element x : g.elements()) CHECK(g.bruhat_leq(x, w) == (ideal.count(x.index) == 1));
  }
}

TEST_CASE("element cap and unsupported systems") {
  // affine A2: infinite, not dihedral
  CoxeterMatrix affine({"s", "t", "u"}, {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  CHECK_THROWS_AS(GroupTable(affine, 12, 1000), GroupTooLarge);
  CHECK_THROWS_AS(GroupTable(builtin_coxeter("A3"), 12, 10), GroupTooLarge);
  CoxeterMatrix mixed({"s", "t", "u"}, {{1, 4, 2}, {4, 1, 5}, {2, 5, 1}});
  CHECK_THROWS_AS(two_cos_table(mixed), std::invalid_argument);
}

TEST_CASE("json files") {
  json j = json::parse(R"({"labels": ["a", "b"], "m": [[1, "inf"], ["inf", 1]]})");
  CoxeterMatrix cm = coxeter_from_json(j);
  CHECK(cm.m(0, 1) == kInfinity);
  CHECK(coxeter_to_json(cm) == j);
  CHECK_THROWS_AS(coxeter_from_json(json::parse(R"({"labels": ["a"]})")), InputError);
  CHECK_THROWS_AS(coxeter_from_json(json::parse(R"({"labels": ["a","b"], "m": [[1,1],[1,1]]})")), InputError);
}

}
