#include "bbq/errors.hpp"
#include "bbq/link.hpp"

#include <gtest/gtest.h>

using namespace bbq;

namespace {

// Each semiarc is the out-arc of exactly one token and the in-arc of exactly
// one token, and a component's semiarcs are consecutive ids.
void expect_perfect_matching(const LinkDiagram &d) {
  std::vector<int> in(d.semiarc_count, 0), out(d.semiarc_count, 0);
  for (const auto &[id, c] : d.crossings) {
    ++in[c.under_in];
    ++in[c.over_in];
    ++out[c.under_out];
    ++out[c.over_out];
  }
  std::size_t free_arcs = 0;
  for (const auto &comp : d.components) {
    free_arcs += comp.empty() ? 1 : 0;
  }
  std::size_t untouched = 0;
  for (std::size_t s = 0; s < d.semiarc_count; ++s) {
    EXPECT_EQ(in[s], out[s]) << "semiarc " << s;
    EXPECT_LE(in[s], 1) << "semiarc " << s;
    untouched += in[s] == 0 ? 1 : 0;
  }
  EXPECT_EQ(untouched, free_arcs);
}

} // namespace

TEST(ParseGauss, Trefoil) {
  const auto d = parse_gauss("O1+U2+O3+U1+O2+U3+");
  EXPECT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.crossing_count(), 3u);
  EXPECT_EQ(d.semiarc_count, 6u);
  // Token i's out-arc is semiarc i and its in-arc is semiarc i - 1.
  const Crossing &c1 = d.crossings.at(1);
  EXPECT_EQ(c1.sign, Sign::Positive);
  EXPECT_EQ(c1.over_in, 5u);
  EXPECT_EQ(c1.over_out, 0u);
  EXPECT_EQ(c1.under_in, 2u);
  EXPECT_EQ(c1.under_out, 3u);
  expect_perfect_matching(d);
}

TEST(ParseGauss, EmptyCodeIsUnknot) {
  const auto d = parse_gauss("");
  EXPECT_EQ(d.components.size(), 1u);
  EXPECT_EQ(d.crossing_count(), 0u);
  EXPECT_EQ(d.semiarc_count, 1u);
}

TEST(ParseGauss, MultipleComponents) {
  const auto hopf = parse_gauss("O1+U2+;U1+O2+");
  EXPECT_EQ(hopf.components.size(), 2u);
  EXPECT_EQ(hopf.semiarc_count, 4u);
  expect_perfect_matching(hopf);

  const auto split = parse_gauss("O1+U1+;");
  EXPECT_EQ(split.components.size(), 2u);
  EXPECT_EQ(split.semiarc_count, 3u);
  expect_perfect_matching(split);

  EXPECT_EQ(parse_gauss(";;").semiarc_count, 3u);
}

TEST(ParseGauss, WhitespaceBetweenTokens) {
  EXPECT_EQ(parse_gauss(" O1+ U2+\tO3+\nU1+ O2+ U3+ "), parse_gauss("O1+U2+O3+U1+O2+U3+"));
  EXPECT_THROW(parse_gauss("O 1+U1+"), ParseError);
  EXPECT_THROW(parse_gauss("O1 +U1+"), ParseError);
}

TEST(ParseGauss, Errors) {
  EXPECT_THROW(parse_gauss("bad"), ParseError);
  EXPECT_THROW(parse_gauss("O1"), ParseError);
  EXPECT_THROW(parse_gauss("O+U+"), ParseError);
  EXPECT_THROW(parse_gauss("O0+U0+"), ParseError);
  EXPECT_THROW(parse_gauss("X1+U1+"), ParseError);
  EXPECT_THROW(parse_gauss("O1\xe2\x88\x92U1+"), ParseError); // unicode minus
  EXPECT_THROW(parse_gauss("O99999999999+U1+"), ParseError);
  EXPECT_THROW(parse_gauss("O1+"), UnmatchedCrossing);
  EXPECT_THROW(parse_gauss("O1+O1+"), UnmatchedCrossing);
  EXPECT_THROW(parse_gauss("O1+U1+U1+"), UnmatchedCrossing);
  EXPECT_THROW(parse_gauss("O1+U2+;U1+"), UnmatchedCrossing);
  EXPECT_THROW(parse_gauss("O1+U1-"), SignMismatch);
}

TEST(ToGauss, RoundTrip) {
  for (const auto &code : {"", "O1+U2+O3+U1+O2+U3+", "O1+U2+;U1+O2+", "O1+U2-U1+O2-", "O1+U1+;",
                           "O7-U3-;U7-O3-;", "O1+U2-O3-U1+O4+U3-O2-U4+"}) {
    const auto d = parse_gauss(code);
    EXPECT_EQ(to_gauss(d), code);
    EXPECT_EQ(parse_gauss(to_gauss(d)), d);
  }
  EXPECT_EQ(to_gauss(parse_gauss(" O1+ U1+ ")), "O1+U1+");
}

TEST(CrossingRelations, TrefoilMatchesKnotBiquandlePresentation) {
  const auto rel = crossing_relations(parse_gauss("O1+U2+O3+U1+O2+U3+"));
  ASSERT_EQ(rel.size(), 6u);
  // Crossing 1: under 2 -> 3 below over 5 -> 0.
  EXPECT_EQ(rel[0], (CrossingRelation{3, 2, 5, Operation::Up}));
  EXPECT_EQ(rel[1], (CrossingRelation{0, 5, 2, Operation::Low}));
  for (const auto &r : rel) {
    EXPECT_TRUE(r.op == Operation::Up || r.op == Operation::Low);
  }
}

TEST(CrossingRelations, NegativeCrossingsUseBarredOperations) {
  const auto rel = crossing_relations(parse_gauss("O1-U2-O3-U1-O2-U3-"));
  ASSERT_EQ(rel.size(), 6u);
  for (std::size_t k = 0; k < rel.size(); ++k) {
    EXPECT_EQ(rel[k].op, k % 2 == 0 ? Operation::UpBar : Operation::LowBar);
  }
}

TEST(CrossingRelations, Small) {
  EXPECT_TRUE(crossing_relations(parse_gauss("")).empty());
  const auto kink = crossing_relations(parse_gauss("O1+U1+"));
  ASSERT_EQ(kink.size(), 2u);
  // Over leaves on arc 0 and enters from arc 1; under does the reverse.
  EXPECT_EQ(kink[0], (CrossingRelation{1, 0, 1, Operation::Up}));
  EXPECT_EQ(kink[1], (CrossingRelation{0, 1, 0, Operation::Low}));
}

TEST(CrossingRelations, AlwaysTwoPerCrossing) {
  for (const auto &name : builtin_link_names()) {
    const auto d = builtin_link(name);
    EXPECT_EQ(crossing_relations(d).size(), 2 * d.crossing_count()) << name;
    expect_perfect_matching(d);
  }
}

TEST(BuiltinLink, Catalogue) {
  EXPECT_EQ(builtin_link("trefoil").crossing_count(), 3u);
  EXPECT_EQ(builtin_link("trefoil").semiarc_count, 6u);
  EXPECT_EQ(builtin_link("unknot").crossing_count(), 0u);
  EXPECT_EQ(builtin_link("unknot").semiarc_count, 1u);
  EXPECT_EQ(builtin_link("hopf_pos").components.size(), 2u);
  EXPECT_EQ(builtin_link("figure8").crossing_count(), 4u);
  EXPECT_EQ(builtin_link_names(),
            (std::vector<std::string>{"unknot", "trefoil", "trefoil_mirror", "hopf_pos", "figure8"}));
  EXPECT_THROW(builtin_link("nosuch"), UnknownLink);
}
