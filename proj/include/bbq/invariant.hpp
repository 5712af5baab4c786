#pragma once

// Colorings of link diagrams by finite biquandles, the counting invariant
// and the bilinear-biquandle polynomial phi_BB.

#include "bbq/bilinear.hpp"
#include "bbq/biquandle.hpp"
#include "bbq/link.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bbq {

/// Carrier index per semiarc id.
using Coloring = std::vector<Index>;

/// Every coloring of d by T, lexicographic in the semiarc-indexed
/// assignment. With threads > 1 the values of semiarc 0 are split across
/// workers; the result is the same.
std::vector<Coloring> enumerate_colorings(const LinkDiagram &d, const FiniteBiquandle &T,
                                          unsigned threads = 1);

/// Streams colorings in the same order until `visit` returns false.
void for_each_coloring(const LinkDiagram &d, const FiniteBiquandle &T,
                       const std::function<bool(const Coloring &)> &visit);

std::uint64_t counting_invariant(const LinkDiagram &d, const FiniteBiquandle &T,
                                 unsigned threads = 1);

/// Smallest subset of T containing `seeds` and closed under all four
/// operations, sorted ascending.
std::vector<Index> generated_subbiquandle(const FiniteBiquandle &T, std::span<const Index> seeds);

/// Sum of c q^i z^j with positive coefficients.
class BBPolynomial {
public:
  using Exponents = std::pair<std::uint32_t, std::uint32_t>; // (q, z)

  void add(std::uint32_t q_exp, std::uint32_t z_exp, std::uint64_t coefficient = 1);
  BBPolynomial &operator+=(const BBPolynomial &other);

  std::uint64_t coefficient(std::uint32_t q_exp, std::uint32_t z_exp) const;
  const std::map<Exponents, std::uint64_t> &terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const BBPolynomial &, const BBPolynomial &) = default;

private:
  std::map<Exponents, std::uint64_t> terms_;
};

/// For each coloring f, adds q^|Im f| z^|Span Im f|. Im f is the
/// sub-biquandle generated by the colors f uses (the image of the knot
/// biquandle), Span the submodule its vectors generate.
/// Throws InvariantViolation when the spec's tables are not a biquandle.
BBPolynomial phi_bb(const LinkDiagram &d, const BilinearSpec &spec, unsigned threads = 1,
                    std::size_t carrier_bound = default_carrier_bound());

std::int64_t phi_specialize(const BBPolynomial &p, std::int64_t q, std::int64_t z);

/// "q z + 3 q z^2 + 12 q^2 z^4"; the empty polynomial is "0".
std::string phi_to_string(const BBPolynomial &p);

} // namespace bbq
