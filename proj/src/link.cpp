#include "bbq/link.hpp"

#include "bbq/errors.hpp"

#include <array>
#include <cctype>
#include <optional>

namespace bbq {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<GaussToken> parse_component(std::string_view text, std::size_t component) {
  std::vector<GaussToken> tokens;
  std::size_t pos = 0;
  auto fail = [&](const std::string &what) {
    throw ParseError("component " + std::to_string(component + 1) + ", offset " +
                     std::to_string(pos) + ": " + what);
  };
  while (true) {
    while (pos < text.size() && is_space(text[pos])) {
      ++pos;
    }
    if (pos == text.size()) {
      break;
    }
    GaussToken tok{};
    if (text[pos] == 'O') {
      tok.kind = Strand::Over;
    } else if (text[pos] == 'U') {
      tok.kind = Strand::Under;
    } else {
      fail(std::string("expected 'O' or 'U', got '") + text[pos] + "'");
    }
    ++pos;
    long long id = 0;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      id = id * 10 + (text[pos] - '0');
      if (id > 1'000'000'000) {
        fail("crossing id too large");
      }
      ++pos;
    }
    if (pos == digits_start) {
      fail("expected a crossing id");
    }
    if (id < 1) {
      fail("crossing ids start at 1");
    }
    tok.crossing = static_cast<int>(id);
    if (pos == text.size() || (text[pos] != '+' && text[pos] != '-')) {
      fail("expected '+' or '-' after crossing id");
    }
    tok.sign = text[pos] == '+' ? Sign::Positive : Sign::Negative;
    ++pos;
    tokens.push_back(tok);
  }
  return tokens;
}

} // namespace

LinkDiagram parse_gauss(std::string_view text) {
  LinkDiagram d;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    d.components.push_back(
        parse_component(text.substr(start, end == std::string_view::npos ? end : end - start),
                        d.components.size()));
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }

  struct Ends {
    std::size_t under_in = 0, under_out = 0, over_in = 0, over_out = 0;
    std::optional<Sign> under_sign, over_sign;
  };
  std::map<int, Ends> ends;

  std::size_t base = 0;
  for (const auto &comp : d.components) {
    const std::size_t k = comp.size();
    if (k == 0) {
      ++base; // free semiarc
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const GaussToken &tok = comp[i];
      Ends &e = ends[tok.crossing];
      const std::size_t in = base + (i + k - 1) % k;
      const std::size_t out = base + i;
      if (tok.kind == Strand::Under) {
        if (e.under_sign) {
          throw UnmatchedCrossing("crossing " + std::to_string(tok.crossing) +
                                  " has two under tokens");
        }
        e.under_sign = tok.sign;
        e.under_in = in;
        e.under_out = out;
      } else {
        if (e.over_sign) {
          throw UnmatchedCrossing("crossing " + std::to_string(tok.crossing) +
                                  " has two over tokens");
        }
        e.over_sign = tok.sign;
        e.over_in = in;
        e.over_out = out;
      }
    }
    base += k;
  }
  d.semiarc_count = base;

  for (const auto &[id, e] : ends) {
    if (!e.under_sign || !e.over_sign) {
      throw UnmatchedCrossing("crossing " + std::to_string(id) + " has no " +
                              (e.under_sign ? "over" : "under") + " token");
    }
    if (*e.under_sign != *e.over_sign) {
      throw SignMismatch("crossing " + std::to_string(id) +
                         " has different signs on its over and under tokens");
    }
    d.crossings.emplace(id, Crossing{*e.under_sign, e.under_in, e.under_out, e.over_in,
                                     e.over_out});
  }
  return d;
}

std::string to_gauss(const LinkDiagram &d) {
  std::string out;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    if (c) {
      out += ';';
    }
    for (const auto &tok : d.components[c]) {
      out += tok.kind == Strand::Over ? 'O' : 'U';
      out += std::to_string(tok.crossing);
      out += tok.sign == Sign::Positive ? '+' : '-';
    }
  }
  return out;
}

std::vector<CrossingRelation> crossing_relations(const LinkDiagram &d) {
  std::vector<CrossingRelation> out;
  out.reserve(2 * d.crossings.size());
  for (const auto &[id, c] : d.crossings) {
    const bool pos = c.sign == Sign::Positive;
    out.push_back({c.under_out, c.under_in, c.over_in, pos ? Operation::Up : Operation::UpBar});
    out.push_back({c.over_out, c.over_in, c.under_in, pos ? Operation::Low : Operation::LowBar});
  }
  return out;
}

namespace {

struct BuiltinLink {
  std::string_view name;
  std::string_view code;
};

// trefoil/hopf_pos/figure8 are closures of s1^3, s1^2 and s1 s2^-1 s1 s2^-1.
constexpr std::array<BuiltinLink, 5> builtin_links{{
    {"unknot", ""},
    {"trefoil", "O1+U2+O3+U1+O2+U3+"},
    {"trefoil_mirror", "O1-U2-O3-U1-O2-U3-"},
    {"hopf_pos", "O1+U2+;U1+O2+"},
    {"figure8", "O1+U2-O3-U1+O4+U3-O2-U4+"},
}};

} // namespace

std::string_view builtin_link_code(std::string_view name) {
  for (const auto &link : builtin_links) {
    if (link.name == name) {
      return link.code;
    }
  }
  throw UnknownLink("unknown link '" + std::string(name) + "'");
}

LinkDiagram builtin_link(std::string_view name) { return parse_gauss(builtin_link_code(name)); }

std::vector<std::string> builtin_link_names() {
  std::vector<std::string> names;
  for (const auto &link : builtin_links) {
    names.emplace_back(link.name);
  }
  return names;
}

} // namespace bbq
