#pragma once

// Bilinear biquandles on (Z_n)^m:
//   x^y = alpha x + f(x,y) y,          x_y = beta x,
//   x^{y-bar} = alpha^-1 x + omega f(x,y) y,  x_{y-bar} = beta^-1 x,
// with f(x,y) = x A y^t, and the exhaustive search for all of them.

#include "bbq/biquandle.hpp"
#include "bbq/modular.hpp"

#include <compare>
#include <tuple>
#include <string>
#include <string_view>
#include <vector>

namespace bbq {

/// (n, m, alpha, beta, A) plus the derived alpha^-1, beta^-1 and omega.
/// Construction enforces the structural constraints every bilinear
/// biquandle must meet: alpha and beta are units, every diagonal entry of A
/// is beta^-1 - alpha, and every entry x of A has
/// alpha (1 - beta^2) x = beta (1 - beta^2) x = 0.
class BilinearSpec {
public:
  /// Throws NotInvertible, DimensionMismatch or InvariantViolation.
  BilinearSpec(Scalar n, std::size_t m, Scalar alpha, Scalar beta, FormMatrix A);

  Modulus modulus() const noexcept { return n_; }
  std::size_t dim() const noexcept { return m_; }
  Scalar alpha() const noexcept { return alpha_; }
  Scalar beta() const noexcept { return beta_; }
  Scalar alpha_inv() const noexcept { return alpha_inv_; }
  Scalar beta_inv() const noexcept { return beta_inv_; }
  Scalar omega() const noexcept { return omega_; }
  const FormMatrix &form() const noexcept { return A_; }

  /// alpha = beta = 1 and A antisymmetric, i.e. a symplectic quandle.
  bool is_symplectic() const noexcept;

  /// "n,m,alpha,beta,[[a11,...,a1m],...,[am1,...,amm]]"
  std::string to_string() const;

  friend bool operator==(const BilinearSpec &a, const BilinearSpec &b) noexcept {
    return a.key() == b.key();
  }
  friend auto operator<=>(const BilinearSpec &a, const BilinearSpec &b) noexcept {
    return a.key() <=> b.key();
  }

private:
  std::tuple<Scalar, std::size_t, Scalar, Scalar, const FormMatrix &> key() const noexcept {
    return {n_.value(), m_, alpha_, beta_, A_};
  }

  Modulus n_;
  std::size_t m_;
  Scalar alpha_, beta_;
  FormMatrix A_;
  Scalar alpha_inv_, beta_inv_, omega_;
};

/// Parses the spec text form. Throws ParseError, or the BilinearSpec
/// constructor's errors when the numbers parse but violate the constraints.
BilinearSpec parse_spec(std::string_view text);

/// Materializes the four tables over enumerate_module(n, m). No axiom check.
/// Throws CapacityExceeded.
FiniteBiquandle build_bilinear(const BilinearSpec &spec,
                               std::size_t carrier_bound = default_carrier_bound());

/// All x in Z_n with alpha (1 - beta^2) x = beta (1 - beta^2) x = 0.
std::vector<Scalar> candidate_entries(Scalar alpha, Scalar beta, Modulus n);

/// Lexicographically least row-major matrix P A P^t over P in GL_m(Z_n).
/// Congruent forms give isomorphic bilinear biquandles (x -> x P).
FormMatrix congruence_representative(const FormMatrix &A);

struct SearchOptions {
  bool exclude_symplectic = true;
  /// Keep one spec per congruence class of A (see congruence_representative).
  bool reduce_isomorphic = true;
  unsigned threads = 1;
  std::size_t carrier_bound = default_carrier_bound();
};

/// Every (alpha, beta, A) with diagonal beta^-1 - alpha and off-diagonal
/// entries from candidate_entries whose biquandle passes the axioms,
/// ordered by (alpha, beta, row-major A). Throws CapacityExceeded.
std::vector<BilinearSpec> search(Scalar n, std::size_t m, const SearchOptions &options = {});

/// As search, but off-diagonal entries range over all of Z_n.
std::vector<BilinearSpec> brute_force_search(Scalar n, std::size_t m,
                                             const SearchOptions &options = {});

} // namespace bbq
