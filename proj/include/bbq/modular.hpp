#pragma once

// Exact arithmetic in Z_n and in the free module (Z_n)^m.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bbq {

using Scalar = std::int64_t;

/// The ring Z_n, n >= 2. All arithmetic helpers return canonical
/// representatives in [0, n).
class Modulus {
public:
  explicit Modulus(Scalar n);

  Scalar value() const noexcept { return n_; }

  Scalar reduce(Scalar x) const noexcept {
    const Scalar r = x % n_;
    return r < 0 ? r + n_ : r;
  }
  Scalar add(Scalar a, Scalar b) const noexcept { return reduce(a + b); }
  Scalar sub(Scalar a, Scalar b) const noexcept { return reduce(a - b); }
  Scalar mul(Scalar a, Scalar b) const noexcept { return reduce(reduce(a) * reduce(b)); }
  Scalar neg(Scalar a) const noexcept { return reduce(-a); }

  friend bool operator==(Modulus, Modulus) = default;
  friend auto operator<=>(Modulus, Modulus) = default;

private:
  Scalar n_;
};

/// Element of (Z_n)^m. Immutable; coordinates are always reduced.
class ModVector {
public:
  ModVector(Modulus n, std::vector<Scalar> coords);

  static ModVector zero(Modulus n, std::size_t m);

  Modulus modulus() const noexcept { return n_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  Scalar operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Scalar> coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  ModVector operator+(const ModVector &other) const;
  ModVector operator-(const ModVector &other) const;
  ModVector operator-() const;
  friend ModVector operator*(Scalar c, const ModVector &v);

  /// "(x1,...,xm)"
  std::string to_string() const;

  friend bool operator==(const ModVector &, const ModVector &) = default;
  // Lexicographic on coordinates; vectors over different (n, m) order by
  // modulus first so that mixed containers stay well-ordered.
  friend std::strong_ordering operator<=>(const ModVector &a, const ModVector &b);

private:
  void require_compatible(const ModVector &other) const;

  Modulus n_;
  std::vector<Scalar> coords_;
};

/// Square m x m matrix over Z_n, stored row-major. Represents the bilinear
/// form f(x, y) = x A y^t.
class FormMatrix {
public:
  FormMatrix(Modulus n, std::size_t m, std::vector<Scalar> row_major);

  static FormMatrix zero(Modulus n, std::size_t m);
  static FormMatrix from_rows(Modulus n, const std::vector<std::vector<Scalar>> &rows);

  Modulus modulus() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_; }
  Scalar operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }

  FormMatrix transposed() const;
  /// A^t == -A (mod n). The diagonal is only forced to zero when n is odd.
  bool is_antisymmetric() const noexcept;
  bool has_zero_diagonal() const noexcept;

  /// "[[a11,...,a1m],...,[am1,...,amm]]"
  std::string to_string() const;

  friend bool operator==(const FormMatrix &, const FormMatrix &) = default;
  friend std::strong_ordering operator<=>(const FormMatrix &a, const FormMatrix &b);

private:
  Modulus n_;
  std::size_t m_;
  std::vector<Scalar> entries_;
};

bool is_unit(Scalar x, Modulus n) noexcept;

/// y with x*y == 1 (mod n). Throws NotInvertible when gcd(x, n) != 1.
Scalar inv_scalar(Scalar x, Modulus n);

/// Units of Z_n in ascending order.
std::vector<Scalar> units(Modulus n);

/// sum_ij x_i A_ij y_j mod n. Throws DimensionMismatch.
Scalar bilinear_eval(const FormMatrix &A, const ModVector &x, const ModVector &y);

/// Carrier cap: BBQ_CARRIER_BOUND if set to a positive integer, else 10^4.
std::size_t default_carrier_bound();

/// n^m, or CapacityExceeded when it is larger than `bound`.
std::size_t module_cardinality(Modulus n, std::size_t m, std::size_t bound);

/// All n^m vectors in lexicographic order; index 0 is the zero vector.
std::vector<ModVector> enumerate_module(Modulus n, std::size_t m,
                                        std::size_t bound = default_carrier_bound());

/// Position of v in enumerate_module(v.modulus(), v.dim()).
std::size_t lex_index(const ModVector &v) noexcept;

/// Smallest submodule containing `generators` and 0, sorted ascending.
std::vector<ModVector> submodule_span(std::span<const ModVector> generators, Modulus n,
                                      std::size_t m);

} // namespace bbq
