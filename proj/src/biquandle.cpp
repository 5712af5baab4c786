#include "bbq/biquandle.hpp"

#include "bbq/errors.hpp"

#include <charconv>
#include <sstream>

namespace bbq {

std::string_view operation_name(Operation op) noexcept {
  switch (op) {
  case Operation::Up:
    return "up";
  case Operation::UpBar:
    return "upbar";
  case Operation::Low:
    return "low";
  case Operation::LowBar:
    return "lowbar";
  }
  return "?";
}

OpTable::OpTable(std::size_t size, std::vector<Index> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) {
    throw ShapeError("operation table for " + std::to_string(size_) + " elements needs " +
                     std::to_string(size_ * size_) + " entries, got " +
                     std::to_string(entries_.size()));
  }
  for (Index e : entries_) {
    if (e >= size_) {
      throw IndexOutOfRange("table entry " + std::to_string(e) + " is not below " +
                            std::to_string(size_));
    }
  }
}

FiniteBiquandle::FiniteBiquandle(OpTable up, OpTable upbar, OpTable low, OpTable lowbar,
                                 std::vector<ModVector> carrier)
    : up_(std::move(up)), upbar_(std::move(upbar)), low_(std::move(low)),
      lowbar_(std::move(lowbar)), carrier_(std::move(carrier)) {
  const std::size_t n = up_.size();
  if (upbar_.size() != n || low_.size() != n || lowbar_.size() != n) {
    throw ShapeError("operation tables have different sizes");
  }
  if (!carrier_.empty() && carrier_.size() != n) {
    throw ShapeError("carrier has " + std::to_string(carrier_.size()) + " elements but tables are " +
                     std::to_string(n) + "x" + std::to_string(n));
  }
}

const OpTable &FiniteBiquandle::table(Operation op) const noexcept {
  switch (op) {
  case Operation::Up:
    return up_;
  case Operation::UpBar:
    return upbar_;
  case Operation::Low:
    return low_;
  case Operation::LowBar:
    break;
  }
  return lowbar_;
}

std::string FiniteBiquandle::label(std::size_t i) const {
  if (has_module_carrier()) {
    return carrier_.at(i).to_string();
  }
  return "x" + std::to_string(i + 1);
}

namespace {

OpTable table_from_rows(std::size_t size, const TableRows &rows, std::string_view name) {
  if (rows.size() != size) {
    throw ShapeError(std::string(name) + " table has " + std::to_string(rows.size()) +
                     " rows, expected " + std::to_string(size));
  }
  std::vector<Index> flat;
  flat.reserve(size * size);
  for (const auto &row : rows) {
    if (row.size() != size) {
      throw ShapeError(std::string(name) + " table row has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(size));
    }
    for (std::size_t e : row) {
      if (e >= size) {
        throw IndexOutOfRange(std::string(name) + " table entry " + std::to_string(e) +
                              " is not below " + std::to_string(size));
      }
      flat.push_back(static_cast<Index>(e));
    }
  }
  return OpTable(size, std::move(flat));
}

} // namespace

FiniteBiquandle make_biquandle(std::size_t size, const TableRows &up, const TableRows &upbar,
                               const TableRows &low, const TableRows &lowbar) {
  return FiniteBiquandle(table_from_rows(size, up, "up"), table_from_rows(size, upbar, "upbar"),
                         table_from_rows(size, low, "low"),
                         table_from_rows(size, lowbar, "lowbar"));
}

FiniteBiquandle make_biquandle(std::vector<ModVector> carrier, const TableRows &up,
                               const TableRows &upbar, const TableRows &low,
                               const TableRows &lowbar) {
  const std::size_t size = carrier.size();
  return FiniteBiquandle(table_from_rows(size, up, "up"), table_from_rows(size, upbar, "upbar"),
                         table_from_rows(size, low, "low"), table_from_rows(size, lowbar, "lowbar"),
                         std::move(carrier));
}

// Axioms. Each checker returns the first violation it finds.

namespace {

using Witness = std::optional<AxiomWitness>;

Witness violation(std::vector<Index> elements, std::string equation) {
  return AxiomWitness{std::move(elements), std::move(equation)};
}

// Direct type II: S followed by S^-1 (and the reverse) is the identity.
Witness check_axiom1(const FiniteBiquandle &B) {
  const std::size_t n = B.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (B.upbar(B.up(a, b), B.low(b, a)) != a) {
        return violation({a, b}, "a = upbar(up(a,b), low(b,a))");
      }
      if (B.lowbar(B.low(b, a), B.up(a, b)) != b) {
        return violation({a, b}, "b = lowbar(low(b,a), up(a,b))");
      }
      if (B.up(B.upbar(a, b), B.lowbar(b, a)) != a) {
        return violation({a, b}, "a = up(upbar(a,b), lowbar(b,a))");
      }
      if (B.low(B.lowbar(b, a), B.upbar(a, b)) != b) {
        return violation({a, b}, "b = low(lowbar(b,a), upbar(a,b))");
      }
    }
  }
  return std::nullopt;
}

// Reverse type II: the witnesses must satisfy all three equations at once.
Witness check_axiom2(const FiniteBiquandle &B) {
  const std::size_t n = B.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      bool found_x = false;
      for (Index x = 0; x < n && !found_x; ++x) {
        const Index bx = B.lowbar(b, x);
        found_x = x == B.up(a, bx) && a == B.upbar(x, b) && b == B.low(bx, a);
      }
      if (!found_x) {
        return violation({a, b}, "exists x: x = up(a, lowbar(b,x)), a = upbar(x,b), "
                                 "b = low(lowbar(b,x), a)");
      }
      bool found_y = false;
      for (Index y = 0; y < n && !found_y; ++y) {
        const Index by = B.low(b, y);
        found_y = y == B.upbar(a, by) && a == B.up(y, b) && b == B.lowbar(by, a);
      }
      if (!found_y) {
        return violation({a, b}, "exists y: y = upbar(a, low(b,y)), a = up(y,b), "
                                 "b = lowbar(low(b,y), a)");
      }
    }
  }
  return std::nullopt;
}

// Type III, all-positive and all-negative. These are the three components
// of the set-theoretic Yang-Baxter equation for S(a,b) = (b_a, a^b) and for
// S^-1(a,b) = (b^{a-bar}, a_{b-bar}).
Witness check_axiom3(const FiniteBiquandle &B) {
  const std::size_t n = B.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index ab = B.up(a, b), ba = B.low(b, a);
      const Index ab_ = B.upbar(a, b), ba_ = B.lowbar(b, a);
      for (Index c = 0; c < n; ++c) {
        const Index cb = B.low(c, b), bc = B.up(b, c);
        if (B.up(ab, c) != B.up(B.up(a, cb), bc)) {
          return violation({a, b, c}, "up(up(a,b),c) = up(up(a,low(c,b)), up(b,c))");
        }
        if (B.low(cb, a) != B.low(B.low(c, ab), ba)) {
          return violation({a, b, c}, "low(low(c,b),a) = low(low(c,up(a,b)), low(b,a))");
        }
        if (B.up(ba, B.low(c, ab)) != B.low(bc, B.up(a, cb))) {
          return violation({a, b, c},
                           "up(low(b,a), low(c,up(a,b))) = low(up(b,c), up(a,low(c,b)))");
        }
        const Index cb_ = B.lowbar(c, b), bc_ = B.upbar(b, c);
        if (B.upbar(ab_, c) != B.upbar(B.upbar(a, cb_), bc_)) {
          return violation({a, b, c},
                           "upbar(upbar(a,b),c) = upbar(upbar(a,lowbar(c,b)), upbar(b,c))");
        }
        if (B.lowbar(cb_, a) != B.lowbar(B.lowbar(c, ab_), ba_)) {
          return violation({a, b, c},
                           "lowbar(lowbar(c,b),a) = lowbar(lowbar(c,upbar(a,b)), lowbar(b,a))");
        }
        if (B.upbar(ba_, B.lowbar(c, ab_)) != B.lowbar(bc_, B.upbar(a, cb_))) {
          return violation({a, b, c}, "upbar(lowbar(b,a), lowbar(c,upbar(a,b))) = "
                                      "lowbar(upbar(b,c), upbar(a,lowbar(c,b)))");
        }
      }
    }
  }
  return std::nullopt;
}

// Type I.
Witness check_axiom4(const FiniteBiquandle &B) {
  const std::size_t n = B.size();
  for (Index a = 0; a < n; ++a) {
    bool found_x = false;
    for (Index x = 0; x < n && !found_x; ++x) {
      found_x = x == B.low(a, x) && a == B.up(x, a);
    }
    if (!found_x) {
      return violation({a}, "exists x: x = low(a,x), a = up(x,a)");
    }
    bool found_y = false;
    for (Index y = 0; y < n && !found_y; ++y) {
      found_y = y == B.upbar(a, y) && a == B.lowbar(y, a);
    }
    if (!found_y) {
      return violation({a}, "exists y: y = upbar(a,y), a = lowbar(y,a)");
    }
  }
  return std::nullopt;
}

AxiomResult to_result(Witness w) {
  AxiomResult r;
  r.pass = !w.has_value();
  r.witness = std::move(w);
  return r;
}

} // namespace

AxiomReport check_axioms(const FiniteBiquandle &B) {
  AxiomReport report;
  report.axioms[0] = to_result(check_axiom1(B));
  report.axioms[1] = to_result(check_axiom2(B));
  report.axioms[2] = to_result(check_axiom3(B));
  report.axioms[3] = to_result(check_axiom4(B));
  return report;
}

bool satisfies_axioms(const FiniteBiquandle &B) {
  return !check_axiom1(B) && !check_axiom4(B) && !check_axiom2(B) && !check_axiom3(B);
}

// Constructors

FiniteBiquandle alexander_biquandle(Scalar n_value, Scalar s, Scalar t) {
  const Modulus n(n_value);
  const Scalar s_inv = inv_scalar(s, n);
  const Scalar t_inv = inv_scalar(t, n);
  const auto size = static_cast<std::size_t>(n_value);

  // Element x_k is k mod n for k = 1..n, so the last element is 0.
  std::vector<ModVector> carrier;
  carrier.reserve(size);
  for (std::size_t k = 1; k <= size; ++k) {
    carrier.emplace_back(n, std::vector<Scalar>{static_cast<Scalar>(k)});
  }
  auto index_of = [&](Scalar value) {
    const Scalar r = n.reduce(value);
    return static_cast<std::size_t>(r == 0 ? n_value - 1 : r - 1);
  };
  auto val = [&](std::size_t i) { return carrier[i][0]; };

  const Scalar up_b = n.sub(1, n.mul(s, t));
  const Scalar upbar_b = n.sub(1, n.mul(s_inv, t_inv));
  auto up = OpTable::tabulate(size, [&](std::size_t a, std::size_t b) {
    return index_of(n.mul(t, val(a)) + n.mul(up_b, val(b)));
  });
  auto upbar = OpTable::tabulate(size, [&](std::size_t a, std::size_t b) {
    return index_of(n.mul(t_inv, val(a)) + n.mul(upbar_b, val(b)));
  });
  auto low = OpTable::tabulate(size, [&](std::size_t a, std::size_t) {
    return index_of(n.mul(s, val(a)));
  });
  auto lowbar = OpTable::tabulate(size, [&](std::size_t a, std::size_t) {
    return index_of(n.mul(s_inv, val(a)));
  });
  return FiniteBiquandle(std::move(up), std::move(upbar), std::move(low), std::move(lowbar),
                         std::move(carrier));
}

FiniteBiquandle symplectic_quandle(Scalar n_value, std::size_t m, const FormMatrix &A,
                                   std::size_t carrier_bound) {
  const Modulus n(n_value);
  if (A.modulus() != n || A.dim() != m) {
    throw DimensionMismatch("form matrix does not match (Z_" + std::to_string(n_value) + ")^" +
                            std::to_string(m));
  }
  if (!A.is_antisymmetric() || !A.has_zero_diagonal()) {
    throw NotAntisymmetric("symplectic quandle needs A^t = -A with zero diagonal, got " +
                           A.to_string());
  }
  auto carrier = enumerate_module(n, m, carrier_bound);
  const std::size_t size = carrier.size();
  auto combine = [&](std::size_t a, std::size_t b, Scalar sign) {
    const Scalar f = n.mul(sign, bilinear_eval(A, carrier[a], carrier[b]));
    return lex_index(carrier[a] + f * carrier[b]);
  };
  auto up = OpTable::tabulate(size, [&](std::size_t a, std::size_t b) { return combine(a, b, 1); });
  auto upbar =
      OpTable::tabulate(size, [&](std::size_t a, std::size_t b) { return combine(a, b, -1); });
  auto identity = OpTable::tabulate(size, [](std::size_t a, std::size_t) { return a; });
  return FiniteBiquandle(std::move(up), std::move(upbar), identity, identity, std::move(carrier));
}

bool is_quandle(const FiniteBiquandle &B) noexcept {
  const std::size_t n = B.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (B.low(a, b) != a || B.lowbar(a, b) != a) {
        return false;
      }
    }
  }
  return true;
}

Scalar omega(Scalar alpha, Scalar beta, Modulus n) {
  const Scalar ai = inv_scalar(alpha, n);
  const Scalar bi = inv_scalar(beta, n);
  const Scalar ai2 = n.mul(ai, ai);
  const Scalar bi2 = n.mul(bi, bi);
  return n.reduce(-n.mul(ai2, bi2) - n.mul(ai, beta) + ai2);
}

// Block matrix text

std::string block_matrix_encode(const FiniteBiquandle &B) {
  const std::size_t n = B.size();
  std::ostringstream os;
  os << n << '\n';
  auto row = [&](const OpTable &left, const OpTable &right, std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      os << (j ? " " : "") << left(i, j) + 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
      os << ' ' << right(i, j) + 1;
    }
    os << '\n';
  };
  for (std::size_t i = 0; i < n; ++i) {
    row(B.table(Operation::UpBar), B.table(Operation::Up), i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    row(B.table(Operation::LowBar), B.table(Operation::Low), i);
  }
  return os.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto pos = text.find('\n');
    std::string_view line = text.substr(0, pos);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    lines.push_back(line);
    if (pos == std::string_view::npos) {
      break;
    }
    text.remove_prefix(pos + 1);
  }
  // blank lines carry no rows
  std::erase_if(lines, [](std::string_view l) {
    return l.find_first_not_of(" \t") == std::string_view::npos;
  });
  return lines;
}

std::vector<long long> parse_row(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (true) {
    pos = line.find_first_not_of(" \t", pos);
    if (pos == std::string_view::npos) {
      break;
    }
    const std::size_t end = std::min(line.find_first_of(" \t", pos), line.size());
    const std::string_view tok = line.substr(pos, end - pos);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(tok) +
                       "' is not an integer");
    }
    out.push_back(v);
    pos = end;
  }
  return out;
}

} // namespace

FiniteBiquandle block_matrix_decode(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError("empty biquandle matrix");
  }
  const auto header = parse_row(lines[0], 1);
  if (header.size() != 1 || header[0] < 1) {
    throw ParseError("first line must be a single positive element count");
  }
  const auto n = static_cast<std::size_t>(header[0]);
  if (lines.size() != 2 * n + 1) {
    throw ParseError("expected " + std::to_string(2 * n) + " matrix rows, got " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Index> upbar(n * n), up(n * n), lowbar(n * n), low(n * n);
  for (std::size_t r = 0; r < 2 * n; ++r) {
    const auto row = parse_row(lines[r + 1], r + 2);
    if (row.size() != 2 * n) {
      throw ParseError("line " + std::to_string(r + 2) + ": expected " + std::to_string(2 * n) +
                       " entries, got " + std::to_string(row.size()));
    }
    for (std::size_t c = 0; c < 2 * n; ++c) {
      const long long v = row[c];
      if (v < 1 || v > static_cast<long long>(n)) {
        throw ParseError("line " + std::to_string(r + 2) + ": entry " + std::to_string(v) +
                         " is outside [1, " + std::to_string(n) + "]");
      }
      const std::size_t i = r % n, j = c % n;
      auto &dest = r < n ? (c < n ? upbar : up) : (c < n ? lowbar : low);
      dest[i * n + j] = static_cast<Index>(v - 1);
    }
  }
  return FiniteBiquandle(OpTable(n, std::move(up)), OpTable(n, std::move(upbar)),
                         OpTable(n, std::move(low)), OpTable(n, std::move(lowbar)));
}

} // namespace bbq
