#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "generators.hpp"
#include "oracles.hpp"
#include "rsd/dataset.hpp"
#include "rsd/error.hpp"

using namespace rsd;

namespace {

CsvText csv(const std::string& s) {
  std::istringstream in(s);
  return parse_csv_text(in);
}

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no rsd::Error thrown";
  return Errc::InvalidConfig;
}

std::vector<AttributeSpec> specs_xyz(int bins = 4) {
  return {AttributeSpec::numeric("x", bins), AttributeSpec::control("c"), AttributeSpec::target("y")};
}

}  // namespace

TEST(Csv, ParsesQuotesBomAndBlankLines) {
  const auto t = csv("\xEF\xBB\xBF" "a,\"b, c\",d\n1,\"x \"\"q\"\"\",\n\n2,y,3\n");
  ASSERT_EQ(t.header, (std::vector<std::string>{"a", "b, c", "d"}));
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0][1], "x \"q\"");
  EXPECT_EQ(t.rows[0][2], "");
}

TEST(Csv, HeaderOnlyIsEmptyTable) {
  const auto t = csv("x,c,y\n");
  EXPECT_EQ(error_of([&] { type_table(t, specs_xyz()); }), Errc::EmptyTable);
  EXPECT_EQ(error_of([] { csv(""); }), Errc::EmptyTable);
}

TEST(Csv, MissingTargetColumn) {
  const auto t = csv("x,c\n1,a\n");
  EXPECT_EQ(error_of([&] { type_table(t, specs_xyz()); }), Errc::MissingColumn);
  EXPECT_EQ(error_of([&] { infer_specs(t, "y", "c", 4); }), Errc::MissingColumn);
}

TEST(Csv, UnreadableFile) {
  EXPECT_EQ(error_of([] { read_csv_text("/nonexistent/none.csv"); }), Errc::UnreadableFile);
}

TEST(Csv, RaggedRowAndDuplicateHeader) {
  EXPECT_EQ(error_of([] { csv("a,b\n1\n"); }), Errc::InvalidSpec);
  EXPECT_EQ(error_of([] { csv("a,a\n1,2\n"); }), Errc::InvalidSpec);
}

TEST(Csv, LoadsRowCount) {
  std::string s = "x,c,y\n";
  for (int i = 0; i < 268; ++i) s += std::to_string(i) + "," + (i % 2 ? "a" : "b") + "," + std::to_string(i % 7) + "\n";
  const RawTable raw = type_table(csv(s), specs_xyz());
  EXPECT_EQ(raw.row_count(), 268u);
}

TEST(Discretize, EqualFrequencyCodes) {
  std::string s = "x,c,y\n";
  for (int v = 1; v <= 8; ++v) s += std::to_string(v) + "," + (v % 2 ? "a" : "b") + ",1\n";
  const auto specs = specs_xyz();
  const DiscreteTable t = discretize(type_table(csv(s), specs), specs);
  ASSERT_EQ(t.attributes.size(), 1u);
  EXPECT_EQ(t.attributes[0].codes, (std::vector<int>{0, 0, 1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(t.attributes[0].labels, (std::vector<std::string>{"V.Lo", "Lo", "Hi", "V.Hi"}));
}

TEST(Discretize, ConstantColumnHasTooFewValues) {
  std::string s = "x,c,y\n";
  for (int v = 1; v <= 8; ++v) s += "5," + std::string(v % 2 ? "a" : "b") + "," + std::to_string(v) + "\n";
  const auto specs = specs_xyz();
  EXPECT_EQ(error_of([&] { discretize(type_table(csv(s), specs), specs); }), Errc::TooFewDistinctValues);
}

TEST(Discretize, CategoricalFirstAppearanceAndMissing) {
  const auto t0 = csv("k,c,y\nwhite,a,1\nred,b,2\n,a,3\nwhite,b,4\nx,,5\n");
  const std::vector<AttributeSpec> specs{AttributeSpec::categorical("k"), AttributeSpec::control("c"),
                                         AttributeSpec::target("y")};
  const DiscreteTable t = discretize(type_table(t0, specs), specs);
  ASSERT_EQ(t.size(), 4u);  // the row without a control is dropped
  EXPECT_EQ(t.attributes[0].labels, (std::vector<std::string>{"white", "red"}));
  EXPECT_EQ(t.attributes[0].codes, (std::vector<int>{0, 1, kMissingCode, 0}));
  EXPECT_EQ(t.control_labels, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(t.row_ids, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Discretize, BinsPartitionIntoRoughlyEqualCounts) {
  proptest::Gen g(7);
  for (int round = 0; round < 50; ++round) {
    const int bins = static_cast<int>(g.between(2, 6));
    const std::size_t n = g.between(20, 200);
    std::string s = "x,c,y\n";
    for (std::size_t i = 0; i < n; ++i) s += std::to_string(g.unit()) + "," + (i % 2 ? "a" : "b") + ",1\n";
    const auto specs = specs_xyz(bins);
    const DiscreteTable t = discretize(type_table(csv(s), specs), specs);
    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    for (int c : t.attributes[0].codes) ++counts.at(static_cast<std::size_t>(c));
    for (std::size_t c : counts) EXPECT_LE(c, n / static_cast<std::size_t>(bins) + 2);
    EXPECT_TRUE(std::is_sorted(t.attributes[0].cut_points.begin(), t.attributes[0].cut_points.end()));
  }
}

namespace {

DiscreteTable split_table(std::size_t a, std::size_t b) {
  DiscreteTable t;
  t.target_name = "y";
  t.control_name = "c";
  t.control_labels = {"a", "b"};
  DiscreteAttribute attr;
  attr.name = "k";
  attr.labels = {"u", "v"};
  for (std::size_t i = 0; i < a + b; ++i) {
    t.target.push_back(static_cast<double>(i));
    t.control.push_back(i < a ? 0 : 1);
    t.row_ids.push_back(i);
    attr.codes.push_back(static_cast<int>(i % 2));
  }
  t.attributes.push_back(attr);
  return t;
}

}  // namespace

TEST(Stratify, DownsamplesMajority) {
  const DiscreteTable s = stratify(split_table(60, 40), 3);
  EXPECT_EQ(s.size(), 80u);
  EXPECT_EQ(std::count(s.control.begin(), s.control.end(), 0), 40);
  EXPECT_TRUE(std::is_sorted(s.row_ids.begin(), s.row_ids.end()));
  EXPECT_EQ(s.attributes[0].codes.size(), 80u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s.target[i], static_cast<double>(s.row_ids[i]));
}

TEST(Stratify, BalancedIsIdentityAndSeedIsDeterministic) {
  const DiscreteTable b = split_table(30, 30);
  const DiscreteTable s = stratify(b, 9);
  EXPECT_EQ(s.row_ids, b.row_ids);
  EXPECT_EQ(s.target, b.target);
  EXPECT_EQ(stratify(split_table(70, 20), 5).row_ids, stratify(split_table(70, 20), 5).row_ids);
  EXPECT_NE(stratify(split_table(70, 20), 5).row_ids, stratify(split_table(70, 20), 6).row_ids);
}

TEST(Stratify, RejectsNonBinary) {
  DiscreteTable t = split_table(3, 3);
  t.control_labels.push_back("z");
  t.control[0] = 2;
  EXPECT_EQ(error_of([&] { stratify(t, 0); }), Errc::NotBinaryControl);
  DiscreteTable one = split_table(4, 0);
  EXPECT_EQ(error_of([&] { stratify(one, 0); }), Errc::EmptyClass);
}

TEST(Population, SortsByTargetDescending) {
  const Population p = Population::from_columns({3, 1, 2}, {0, 1, 0});
  EXPECT_EQ(std::vector<double>(p.targets().begin(), p.targets().end()), (std::vector<double>{3, 2, 1}));
  EXPECT_EQ(p.cls(0), 0);
  EXPECT_EQ(p.cls(1), 0);
  EXPECT_EQ(p.cls(2), 1);
  EXPECT_EQ(p.source_row(1), 2u);
}

TEST(Population, ConstantTargetRejected) {
  EXPECT_EQ(error_of([] { Population::from_columns({2, 2, 2}, {0, 1, 0}); }), Errc::ConstantTarget);
}

TEST(Population, DMaxMatchesSubsetEnumeration) {
  const Population bal = Population::from_columns({1, 2, 3, 4, 5, 6}, {0, 1, 0, 1, 0, 1});
  EXPECT_DOUBLE_EQ(bal.d_max(), 0.5);
  EXPECT_DOUBLE_EQ(proptest::brute_d_max(bal), 0.5);

  proptest::Gen g(11);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = g.between(2, 14);
    const bool balanced = n % 2 == 0 && g.coin();
    const Population p = proptest::random_population(g, n, balanced, proptest::TargetShape::uniform);
    EXPECT_TRUE(proptest::near(p.d_max(), proptest::brute_d_max(p)));
  }
}

TEST(Population, BuildFromTableKeepsAttributes) {
  const Population p = build_population(split_table(2, 2));
  EXPECT_EQ(p.size(), 4u);
  EXPECT_TRUE(p.balanced());
  ASSERT_EQ(p.attribute_count(), 1u);
  EXPECT_EQ(p.attribute(0).name, "k");
  EXPECT_EQ(p.code(0, 0), 1);  // row 3 has the largest target
  EXPECT_DOUBLE_EQ(p.mean_y(), 1.5);
  EXPECT_DOUBLE_EQ(p.denom(), 4 * 1.5);
}

TEST(InferSpecs, NumericNeedsEnoughDistinctValues) {
  const auto t = csv("a,b,c,y\n1,x,1,1\n2,y,1,2\n3,x,2,3\n4,y,2,4\n");
  const auto specs = infer_specs(t, "y", "b", 4);
  ASSERT_EQ(specs.size(), 4u);
  EXPECT_EQ(specs[0].kind, AttributeKind::numeric);
  EXPECT_EQ(specs[1].kind, AttributeKind::control);
  EXPECT_EQ(specs[2].kind, AttributeKind::categorical);
  EXPECT_EQ(specs[3].kind, AttributeKind::target);
}
