#include "bbq/modular.hpp"

#include "bbq/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace bbq {

Modulus::Modulus(Scalar n) : n_(n) {
  if (n < 2) {
    throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(n));
  }
}

// ModVector

ModVector::ModVector(Modulus n, std::vector<Scalar> coords) : n_(n), coords_(std::move(coords)) {
  for (auto &c : coords_) {
    c = n_.reduce(c);
  }
}

ModVector ModVector::zero(Modulus n, std::size_t m) {
  return ModVector(n, std::vector<Scalar>(m, 0));
}

bool ModVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Scalar c) { return c == 0; });
}

void ModVector::require_compatible(const ModVector &other) const {
  if (n_ != other.n_ || dim() != other.dim()) {
    throw DimensionMismatch("vectors over (Z_" + std::to_string(n_.value()) + ")^" +
                            std::to_string(dim()) + " and (Z_" +
                            std::to_string(other.n_.value()) + ")^" +
                            std::to_string(other.dim()));
  }
}

ModVector ModVector::operator+(const ModVector &other) const {
  require_compatible(other);
  std::vector<Scalar> out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    out[i] = n_.add(coords_[i], other.coords_[i]);
  }
  return ModVector(n_, std::move(out));
}

ModVector ModVector::operator-(const ModVector &other) const { return *this + (-other); }

ModVector ModVector::operator-() const { return Scalar{-1} * *this; }

ModVector operator*(Scalar c, const ModVector &v) {
  std::vector<Scalar> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    out[i] = v.n_.mul(c, v.coords_[i]);
  }
  return ModVector(v.n_, std::move(out));
}

std::string ModVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    os << (i ? "," : "") << coords_[i];
  }
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const ModVector &a, const ModVector &b) {
  if (auto c = a.n_ <=> b.n_; c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                b.coords_.begin(), b.coords_.end());
}

// FormMatrix

FormMatrix::FormMatrix(Modulus n, std::size_t m, std::vector<Scalar> row_major)
    : n_(n), m_(m), entries_(std::move(row_major)) {
  if (entries_.size() != m_ * m_) {
    throw ShapeError("form matrix of dimension " + std::to_string(m_) + " needs " +
                     std::to_string(m_ * m_) + " entries, got " +
                     std::to_string(entries_.size()));
  }
  for (auto &e : entries_) {
    e = n_.reduce(e);
  }
}

FormMatrix FormMatrix::zero(Modulus n, std::size_t m) {
  return FormMatrix(n, m, std::vector<Scalar>(m * m, 0));
}

FormMatrix FormMatrix::from_rows(Modulus n, const std::vector<std::vector<Scalar>> &rows) {
  const std::size_t m = rows.size();
  std::vector<Scalar> flat;
  flat.reserve(m * m);
  for (const auto &row : rows) {
    if (row.size() != m) {
      throw ShapeError("form matrix is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FormMatrix(n, m, std::move(flat));
}

FormMatrix FormMatrix::transposed() const {
  std::vector<Scalar> t(m_ * m_);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      t[j * m_ + i] = (*this)(i, j);
    }
  }
  return FormMatrix(n_, m_, std::move(t));
}

bool FormMatrix::is_antisymmetric() const noexcept {
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = i; j < m_; ++j) {
      if (n_.add((*this)(i, j), (*this)(j, i)) != 0) {
        return false;
      }
    }
  }
  return true;
}

bool FormMatrix::has_zero_diagonal() const noexcept {
  for (std::size_t i = 0; i < m_; ++i) {
    if ((*this)(i, i) != 0) {
      return false;
    }
  }
  return true;
}

std::string FormMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m_; ++j) {
      os << (j ? "," : "") << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const FormMatrix &a, const FormMatrix &b) {
  if (auto c = a.n_ <=> b.n_; c != 0) {
    return c;
  }
  if (auto c = a.m_ <=> b.m_; c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

// Scalars

bool is_unit(Scalar x, Modulus n) noexcept { return std::gcd(n.reduce(x), n.value()) == 1; }

Scalar inv_scalar(Scalar x, Modulus n) {
  // Extended Euclid on (x mod n, n).
  Scalar old_r = n.reduce(x), r = n.value();
  Scalar old_s = 1, s = 0;
  while (r != 0) {
    const Scalar q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(n.reduce(x)) + " is not a unit mod " +
                        std::to_string(n.value()));
  }
  return n.reduce(old_s);
}

std::vector<Scalar> units(Modulus n) {
  std::vector<Scalar> out;
  for (Scalar x = 1; x < n.value(); ++x) {
    if (std::gcd(x, n.value()) == 1) {
      out.push_back(x);
    }
  }
  return out;
}

Scalar bilinear_eval(const FormMatrix &A, const ModVector &x, const ModVector &y) {
  const Modulus n = A.modulus();
  const std::size_t m = A.dim();
  if (x.modulus() != n || y.modulus() != n || x.dim() != m || y.dim() != m) {
    throw DimensionMismatch("bilinear_eval: form is " + std::to_string(m) + "x" +
                            std::to_string(m) + " over Z_" + std::to_string(n.value()) +
                            ", vectors are " + x.to_string() + " and " + y.to_string());
  }
  Scalar acc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) {
      continue;
    }
    Scalar row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      row = n.add(row, n.mul(A(i, j), y[j]));
    }
    acc = n.add(acc, n.mul(x[i], row));
  }
  return acc;
}

// Module enumeration

std::size_t default_carrier_bound() {
  constexpr std::size_t fallback = 10'000;
  const char *env = std::getenv("BBQ_CARRIER_BOUND");
  if (env == nullptr || *env == '\0') {
    return fallback;
  }
  char *end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) {
    return fallback;
  }
  return static_cast<std::size_t>(v);
}

std::size_t module_cardinality(Modulus n, std::size_t m, std::size_t bound) {
  std::size_t size = 1;
  const auto base = static_cast<std::size_t>(n.value());
  for (std::size_t i = 0; i < m; ++i) {
    if (size > bound / base) {
      throw CapacityExceeded("(Z_" + std::to_string(n.value()) + ")^" + std::to_string(m) +
                             " exceeds the carrier bound " + std::to_string(bound));
    }
    size *= base;
  }
  if (size > bound) {
    throw CapacityExceeded("carrier of size " + std::to_string(size) +
                           " exceeds the carrier bound " + std::to_string(bound));
  }
  return size;
}

std::vector<ModVector> enumerate_module(Modulus n, std::size_t m, std::size_t bound) {
  if (m == 0) {
    throw DimensionMismatch("module dimension must be at least 1");
  }
  const std::size_t size = module_cardinality(n, m, bound);
  std::vector<ModVector> out;
  out.reserve(size);
  std::vector<Scalar> digits(m, 0);
  for (std::size_t k = 0; k < size; ++k) {
    out.emplace_back(n, digits);
    // odometer, last coordinate fastest
    for (std::size_t i = m; i-- > 0;) {
      if (++digits[i] < n.value()) {
        break;
      }
      digits[i] = 0;
    }
  }
  return out;
}

std::size_t lex_index(const ModVector &v) noexcept {
  std::size_t idx = 0;
  const auto base = static_cast<std::size_t>(v.modulus().value());
  for (Scalar c : v.coords()) {
    idx = idx * base + static_cast<std::size_t>(c);
  }
  return idx;
}

std::vector<ModVector> submodule_span(std::span<const ModVector> generators, Modulus n,
                                      std::size_t m) {
  const ModVector zero = ModVector::zero(n, m);
  for (const auto &g : generators) {
    if (g.modulus() != n || g.dim() != m) {
      throw DimensionMismatch("span generator " + g.to_string() + " is not in (Z_" +
                              std::to_string(n.value()) + ")^" + std::to_string(m));
    }
  }
  // Breadth-first closure under adding a generator. Over Z_n every scalar
  // multiple is an iterated sum, so this is the submodule.
  std::set<ModVector> seen{zero};
  std::deque<ModVector> frontier{zero};
  while (!frontier.empty()) {
    const ModVector v = std::move(frontier.front());
    frontier.pop_front();
    for (const auto &g : generators) {
      ModVector w = v + g;
      if (seen.insert(w).second) {
        frontier.push_back(std::move(w));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

} // namespace bbq
