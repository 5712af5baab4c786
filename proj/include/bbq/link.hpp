#pragma once

// Signed Gauss codes of oriented classical and virtual link diagrams.
//
//   code      := component (';' component)*
//   component := token*          (empty: a crossingless unknot component)
//   token     := ('O' | 'U') digits ('+' | '-')
//
// Virtual crossings are not recorded; any code is accepted whether or not
// it is planar.

#include "bbq/biquandle.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bbq {

enum class Strand { Over, Under };
enum class Sign { Positive, Negative };

struct GaussToken {
  Strand kind;
  int crossing; // >= 1
  Sign sign;

  friend bool operator==(const GaussToken &, const GaussToken &) = default;
};

/// The four semiarcs meeting at a classical crossing.
struct Crossing {
  Sign sign;
  std::size_t under_in, under_out, over_in, over_out;

  friend bool operator==(const Crossing &, const Crossing &) = default;
};

/// Semiarcs are numbered per component in traversal order: in a component
/// with tokens t_0 ... t_{k-1}, the semiarc leaving t_i gets the i-th id of
/// that component. A component without tokens owns one free semiarc.
struct LinkDiagram {
  std::vector<std::vector<GaussToken>> components;
  std::map<int, Crossing> crossings;
  std::size_t semiarc_count = 0;

  std::size_t crossing_count() const noexcept { return crossings.size(); }

  friend bool operator==(const LinkDiagram &, const LinkDiagram &) = default;
};

/// Throws ParseError, UnmatchedCrossing or SignMismatch.
LinkDiagram parse_gauss(std::string_view text);

/// Canonical code text; parse_gauss(to_gauss(d)) == d.
std::string to_gauss(const LinkDiagram &d);

/// output = op(left, right), e.g. under_out = up(under_in, over_in).
struct CrossingRelation {
  std::size_t output;
  std::size_t left, right;
  Operation op;

  friend bool operator==(const CrossingRelation &, const CrossingRelation &) = default;
};

/// Two relations per crossing, in crossing-id order:
///   positive: under_out = up(under_in, over_in),  over_out = low(over_in, under_in)
///   negative: under_out = upbar(under_in, over_in), over_out = lowbar(over_in, under_in)
std::vector<CrossingRelation> crossing_relations(const LinkDiagram &d);

/// unknot, trefoil, trefoil_mirror, hopf_pos, figure8. Throws UnknownLink.
LinkDiagram builtin_link(std::string_view name);
std::string_view builtin_link_code(std::string_view name);
std::vector<std::string> builtin_link_names();

} // namespace bbq
