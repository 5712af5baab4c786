#pragma once

// Finite biquandles as four operation tables, the exhaustive axiom
// verifier, the standard constructors and the block-matrix text format.

#include "bbq/modular.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bbq {

using Index = std::uint32_t;

/// The four biquandle operations. Up is a^b, UpBar is a^{b-bar},
/// Low is a_b, LowBar is a_{b-bar}.
enum class Operation { Up, UpBar, Low, LowBar };

std::string_view operation_name(Operation op) noexcept;

/// Dense N x N table of carrier indices; entry (a, b) is the result of
/// applying the operation to a with parameter b.
class OpTable {
public:
  OpTable() = default;
  OpTable(std::size_t size, std::vector<Index> entries);

  template <class F> static OpTable tabulate(std::size_t size, F &&f) {
    std::vector<Index> entries(size * size);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        entries[a * size + b] = static_cast<Index>(f(a, b));
      }
    }
    return OpTable(size, std::move(entries));
  }

  std::size_t size() const noexcept { return size_; }
  Index operator()(std::size_t a, std::size_t b) const noexcept { return entries_[a * size_ + b]; }
  const std::vector<Index> &entries() const noexcept { return entries_; }

  friend bool operator==(const OpTable &, const OpTable &) = default;

private:
  std::size_t size_ = 0;
  std::vector<Index> entries_;
};

/// Biquandle on the ordered carrier {0, ..., N-1}. When the carrier is a
/// module (Z_n)^m the element vectors are kept alongside the tables, in
/// lexicographic order.
class FiniteBiquandle {
public:
  /// Throws ShapeError or IndexOutOfRange. No axiom checking.
  FiniteBiquandle(OpTable up, OpTable upbar, OpTable low, OpTable lowbar,
                  std::vector<ModVector> carrier = {});

  std::size_t size() const noexcept { return up_.size(); }

  Index up(std::size_t a, std::size_t b) const noexcept { return up_(a, b); }
  Index upbar(std::size_t a, std::size_t b) const noexcept { return upbar_(a, b); }
  Index low(std::size_t a, std::size_t b) const noexcept { return low_(a, b); }
  Index lowbar(std::size_t a, std::size_t b) const noexcept { return lowbar_(a, b); }
  Index apply(Operation op, std::size_t a, std::size_t b) const noexcept {
    return table(op)(a, b);
  }
  const OpTable &table(Operation op) const noexcept;

  bool has_module_carrier() const noexcept { return !carrier_.empty(); }
  const std::vector<ModVector> &carrier() const noexcept { return carrier_; }
  /// Vector text for module carriers, otherwise the 1-based position "x<k>".
  std::string label(std::size_t i) const;

  friend bool operator==(const FiniteBiquandle &, const FiniteBiquandle &) = default;

private:
  OpTable up_, upbar_, low_, lowbar_;
  std::vector<ModVector> carrier_;
};

using TableRows = std::vector<std::vector<std::size_t>>;

FiniteBiquandle make_biquandle(std::size_t size, const TableRows &up, const TableRows &upbar,
                               const TableRows &low, const TableRows &lowbar);
FiniteBiquandle make_biquandle(std::vector<ModVector> carrier, const TableRows &up,
                               const TableRows &upbar, const TableRows &low,
                               const TableRows &lowbar);

struct AxiomWitness {
  std::vector<Index> elements; // (a, b) or (a, b, c) or (a)
  std::string equation;
};

struct AxiomResult {
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  std::array<AxiomResult, 4> axioms;

  bool ok() const noexcept {
    for (const auto &a : axioms) {
      if (!a.pass) {
        return false;
      }
    }
    return true;
  }
  /// 1-based, matching the axiom numbering.
  const AxiomResult &axiom(int k) const { return axioms.at(static_cast<std::size_t>(k - 1)); }
};

/// Exhaustive check of all four axioms; each axiom stops at its first
/// failure and keeps that witness.
AxiomReport check_axioms(const FiniteBiquandle &B);

/// Same verdict as check_axioms(B).ok(), checking axioms in order of cost
/// (1, 4, 2, 3) and returning at the first failure.
bool satisfies_axioms(const FiniteBiquandle &B);

/// a^b = ta + (1-st)b, a^{b-bar} = t^-1 a + (1 - s^-1 t^-1) b, a_b = sa,
/// a_{b-bar} = s^-1 a on Z_n. Throws NotInvertible.
FiniteBiquandle alexander_biquandle(Scalar n, Scalar s, Scalar t);

/// x^y = x + f(x,y)y, x^{y-bar} = x - f(x,y)y, lower operations trivial.
/// Throws NotAntisymmetric unless A is alternating.
FiniteBiquandle symplectic_quandle(Scalar n, std::size_t m, const FormMatrix &A,
                                   std::size_t carrier_bound = default_carrier_bound());

/// Both lower tables are the identity in their first argument.
bool is_quandle(const FiniteBiquandle &B) noexcept;

/// -a^-2 b^-2 - a^-1 b + a^-2 mod n, the factor with f' = omega f.
Scalar omega(Scalar alpha, Scalar beta, Modulus n);

/// Block-matrix text: N on the first line, then 2N rows of 2N 1-based
/// entries laid out as [upbar | up ; lowbar | low].
std::string block_matrix_encode(const FiniteBiquandle &B);

/// Inverse of block_matrix_encode (opaque carrier). Throws ParseError.
FiniteBiquandle block_matrix_decode(std::string_view text);

} // namespace bbq
