#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "argmine/features.hpp"
#include "support/testutil.hpp"

using namespace argmine;

namespace {

EmbeddingTable tiny_table() {
  return EmbeddingTable(2, {{"a", {1.0, 0.0}}, {"b", {0.0, 1.0}}});
}

}  // namespace

TEST_CASE("vector file loading") {
  argmine::test::TempDir dir;
  const auto ok = dir.write("vec.txt", "a 1.0 0.0\nb 0.0 1.0\n");
  const auto table = EmbeddingTable::load(ok);
  CHECK(table.dimension() == 2);
  CHECK(table.size() == 2);
  REQUIRE(table.find("a") != nullptr);
  CHECK((*table.find("a"))[0] == 1.0);
  CHECK(table.find("A") != nullptr);  // case-normalized lookup
  CHECK(table.find("zzz") == nullptr);

  const auto mismatched = dir.write("bad.txt", "a 1.0 0.0\nb 0.0 1.0 2.0\n");
  CHECK_THROWS_WITH_AS(EmbeddingTable::load(mismatched),
                       doctest::Contains("dimension mismatch"),
                       std::runtime_error);

  const auto empty = dir.write("empty.txt", "");
  CHECK_THROWS_WITH_AS(EmbeddingTable::load(empty),
                       doctest::Contains("no vectors"), std::runtime_error);

  const auto garbage = dir.write("garbage.txt", "a 1.0 zebra\n");
  CHECK_THROWS_WITH_AS(EmbeddingTable::load(garbage),
                       doctest::Contains("non-numeric"), std::runtime_error);

  CHECK_THROWS_AS(EmbeddingTable::load(dir.path() / "nope.txt"),
                  std::runtime_error);
  CHECK_THROWS_AS(EmbeddingTable::load(ok, 5), std::runtime_error);

  const auto dup = dir.write("dup.txt", "a 1.0 2.0\na 3.0 4.0\n");
  const auto first_wins = EmbeddingTable::load(dup);
  CHECK((*first_wins.find("a"))[0] == 1.0);
}

TEST_CASE("tokenize lowercases and drops punctuation") {
  const auto tokens = tokenize("I believe, that X-rays (really) work!");
  const std::vector<std::string> expected = {"i", "believe", "that", "x",
                                             "rays", "really", "work"};
  CHECK(tokens == expected);
  CHECK(tokenize("Größe zählt.") ==
        std::vector<std::string>{"größe", "zählt"});
  CHECK(tokenize("").empty());
}

TEST_CASE("sentence embedding averages found vectors") {
  const auto table = tiny_table();
  const auto both = sentence_embedding({"a", "b"}, table);
  CHECK(both.values == std::vector<double>{0.5, 0.5});
  CHECK_FALSE(both.all_oov);

  const auto twice = sentence_embedding({"a", "a"}, table);
  CHECK(twice.values == std::vector<double>{1.0, 0.0});

  const auto oov = sentence_embedding({"zzz"}, table);
  CHECK(oov.values == std::vector<double>{0.0, 0.0});
  CHECK(oov.all_oov);

  const auto skip = sentence_embedding({"a", "zzz"}, table);
  CHECK(skip.values == std::vector<double>{1.0, 0.0});
  CHECK_FALSE(skip.all_oov);
}

TEST_CASE("sentence embedding is permutation invariant") {
  std::mt19937_64 rng(5);
  EmbeddingTable table(3, {{"x", {1, 2, 3}},
                           {"y", {-1, 0, 1}},
                           {"z", {0.5, 0.25, 0}},
                           {"w", {2, -2, 4}}});
  std::vector<std::string> tokens = {"x", "y", "z", "w", "x", "oov"};
  const auto base = sentence_embedding(tokens, table);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(tokens.begin(), tokens.end(), rng);
    const auto shuffled = sentence_embedding(tokens, table);
    for (std::size_t d = 0; d < 3; ++d)
      CHECK(shuffled.values[d] == doctest::Approx(base.values[d]).epsilon(1e-12));
  }
}

TEST_CASE("cosine basics") {
  const std::vector<double> x{1.0, 0.0}, y{0.0, 1.0}, nx{-1.0, 0.0};
  CHECK(cosine(x, x) == doctest::Approx(1.0));
  CHECK(cosine(x, y) == doctest::Approx(0.0));
  CHECK(cosine(x, nx) == doctest::Approx(-1.0));
  CHECK(cosine(std::vector<double>{0.0, 0.0}, x) == 0.0);
  CHECK_THROWS_AS(cosine(x, std::vector<double>{1.0, 2.0, 3.0}),
                  std::invalid_argument);
}

TEST_CASE("feature extraction fills every slot") {
  const auto table = tiny_table();
  SentenceSpan span{0, 0, 18, "I believe that a works."};
  const auto fv = extract_features(span, 4, table, Language::EN);
  CHECK(fv.first_person);
  CHECK(fv.relative_position == 0.0);
  CHECK(fv.sentence_index == 0.0);
  CHECK(fv.token_count == 5);
  CHECK(fv.punctuation_count == 1);
  CHECK_FALSE(fv.claim_indicator);
  CHECK(fv.schema_id == feature_schema_id(2));
  CHECK(fv.dense().size() == 12);

  SentenceSpan claim{3, 40, 62, "Therefore, b holds."};
  const auto cv = extract_features(claim, 4, table, Language::EN);
  CHECK(cv.claim_indicator);
  CHECK(cv.relative_position == doctest::Approx(1.0));
  CHECK_FALSE(cv.first_person);

  SentenceSpan modal{1, 20, 39, "They should act because a."};
  const auto mv = extract_features(modal, 4, table, Language::EN);
  CHECK(mv.modal_verb);
  CHECK(mv.premise_indicator);
  CHECK(mv.clause_count_proxy == doctest::Approx(2.0));  // "because"

  CHECK_THROWS_AS(extract_features(span, 0, table, Language::EN),
                  std::invalid_argument);
}

TEST_CASE("indicator matching respects word boundaries") {
  const auto table = tiny_table();
  SentenceSpan span{0, 0, 10, "The thesis."};  // "the" != "therefore"
  const auto fv = extract_features(span, 1, table, Language::EN);
  CHECK_FALSE(fv.claim_indicator);

  SentenceSpan multi{0, 0, 24, "In conclusion, a is b."};
  CHECK(extract_features(multi, 1, table, Language::EN).claim_indicator);
}

TEST_CASE("depth proxy tracks nesting") {
  const auto table = tiny_table();
  SentenceSpan flat{0, 0, 7, "a is b."};
  CHECK(extract_features(flat, 1, table, Language::EN).token_depth_proxy ==
        doctest::Approx(1.0));
  SentenceSpan nested{0, 0, 30, "a (which b said (loudly)) is b."};
  CHECK(extract_features(nested, 1, table, Language::EN).token_depth_proxy >=
        doctest::Approx(3.0));
}

TEST_CASE("scaling the table scales embeddings and keeps cosine fixed") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  std::uniform_real_distribution<double> scale_dist(0.1, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c = scale_dist(rng);
    std::unordered_map<std::string, std::vector<double>> base, scaled;
    for (const std::string token : {"t1", "t2", "t3"}) {
      std::vector<double> v{value(rng), value(rng), value(rng)};
      std::vector<double> sv = v;
      for (auto& x : sv) x *= c;
      base[token] = v;
      scaled[token] = sv;
    }
    EmbeddingTable t1(3, base), t2(3, scaled);
    const auto e1 = sentence_embedding({"t1", "t2"}, t1);
    const auto e2 = sentence_embedding({"t1", "t2"}, t2);
    for (std::size_t d = 0; d < 3; ++d)
      CHECK(e2.values[d] == doctest::Approx(c * e1.values[d]).epsilon(1e-9));
    const auto f1 = sentence_embedding({"t3"}, t1);
    const auto f2 = sentence_embedding({"t3"}, t2);
    CHECK(cosine(e1.values, f1.values) ==
          doctest::Approx(cosine(e2.values, f2.values)).epsilon(1e-9));
  }
}
