#include "bbq/bilinear.hpp"

#include "bbq/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <thread>

namespace bbq {

namespace {

bool entry_admissible(Scalar x, Scalar alpha, Scalar beta, Modulus n) {
  const Scalar k = n.sub(1, n.mul(beta, beta));
  return n.mul(n.mul(alpha, k), x) == 0 && n.mul(n.mul(beta, k), x) == 0;
}

// Tables for the bilinear operations with the given constants, without
// checking the entry constraints on A. Shared by build_bilinear and the
// unpruned search, which must be able to build inadmissible candidates.
FiniteBiquandle build_tables(Modulus n, std::size_t m, Scalar alpha, Scalar beta,
                             const FormMatrix &A, std::size_t carrier_bound) {
  const Scalar alpha_inv = inv_scalar(alpha, n);
  const Scalar beta_inv = inv_scalar(beta, n);
  const Scalar w = omega(alpha, beta, n);

  std::vector<ModVector> carrier = enumerate_module(n, m, carrier_bound);
  const std::size_t size = carrier.size();

  // Row-major coordinates and the row vectors x A, one per element.
  std::vector<Scalar> coords(size * m), xa(size * m, 0);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      coords[i * m + k] = carrier[i][k];
    }
    for (std::size_t l = 0; l < m; ++l) {
      Scalar acc = 0;
      for (std::size_t k = 0; k < m; ++k) {
        acc += coords[i * m + k] * A(k, l);
      }
      xa[i * m + l] = n.reduce(acc);
    }
  }
  const auto base = static_cast<std::size_t>(n.value());
  auto combine = [&](std::size_t i, Scalar cx, std::size_t j, Scalar cy) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) {
      idx = idx * base + static_cast<std::size_t>(n.reduce(cx * coords[i * m + k] +
                                                           cy * coords[j * m + k]));
    }
    return idx;
  };
  auto form = [&](std::size_t i, std::size_t j) {
    Scalar acc = 0;
    for (std::size_t l = 0; l < m; ++l) {
      acc += xa[i * m + l] * coords[j * m + l];
    }
    return n.reduce(acc);
  };

  std::vector<Index> up(size * size), upbar(size * size), low(size * size), lowbar(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto lo = static_cast<Index>(combine(i, beta, i, 0));
    const auto lo_bar = static_cast<Index>(combine(i, beta_inv, i, 0));
    for (std::size_t j = 0; j < size; ++j) {
      const Scalar f = form(i, j);
      up[i * size + j] = static_cast<Index>(combine(i, alpha, j, f));
      upbar[i * size + j] = static_cast<Index>(combine(i, alpha_inv, j, n.mul(w, f)));
      low[i * size + j] = lo;
      lowbar[i * size + j] = lo_bar;
    }
  }
  return FiniteBiquandle(OpTable(size, std::move(up)), OpTable(size, std::move(upbar)),
                         OpTable(size, std::move(low)), OpTable(size, std::move(lowbar)),
                         std::move(carrier));
}

} // namespace

// BilinearSpec

BilinearSpec::BilinearSpec(Scalar n, std::size_t m, Scalar alpha, Scalar beta, FormMatrix A)
    : n_(n), m_(m), alpha_(n_.reduce(alpha)), beta_(n_.reduce(beta)), A_(std::move(A)),
      alpha_inv_(inv_scalar(alpha_, n_)), beta_inv_(inv_scalar(beta_, n_)),
      omega_(bbq::omega(alpha_, beta_, n_)) {
  if (m_ == 0) {
    throw DimensionMismatch("module dimension must be at least 1");
  }
  if (A_.modulus() != n_ || A_.dim() != m_) {
    throw DimensionMismatch("form matrix is " + std::to_string(A_.dim()) + "x" +
                            std::to_string(A_.dim()) + " over Z_" +
                            std::to_string(A_.modulus().value()) + ", expected " +
                            std::to_string(m_) + "x" + std::to_string(m_) + " over Z_" +
                            std::to_string(n));
  }
  const Scalar diag = n_.sub(beta_inv_, alpha_);
  for (std::size_t i = 0; i < m_; ++i) {
    if (A_(i, i) != diag) {
      throw InvariantViolation("diagonal entry A" + std::to_string(i + 1) +
                               std::to_string(i + 1) + " = " + std::to_string(A_(i, i)) +
                               " but beta^-1 - alpha = " + std::to_string(diag));
    }
  }
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      if (!entry_admissible(A_(i, j), alpha_, beta_, n_)) {
        throw InvariantViolation("entry A" + std::to_string(i + 1) + std::to_string(j + 1) +
                                 " = " + std::to_string(A_(i, j)) +
                                 " is not annihilated by alpha(1-beta^2) and beta(1-beta^2)");
      }
    }
  }
}

bool BilinearSpec::is_symplectic() const noexcept {
  return alpha_ == 1 && beta_ == 1 && A_.is_antisymmetric();
}

std::string BilinearSpec::to_string() const {
  return std::to_string(n_.value()) + "," + std::to_string(m_) + "," + std::to_string(alpha_) +
         "," + std::to_string(beta_) + "," + A_.to_string();
}

// Spec text

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  BilinearSpec parse() {
    const Scalar n = integer();
    expect(',');
    const Scalar m = integer();
    expect(',');
    const Scalar alpha = integer();
    expect(',');
    const Scalar beta = integer();
    expect(',');
    std::vector<std::vector<Scalar>> rows;
    expect('[');
    do {
      rows.push_back(row());
    } while (accept(','));
    expect(']');
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing characters");
    }
    if (n < 2) {
      fail("modulus must be at least 2");
    }
    if (m < 1) {
      fail("dimension must be at least 1");
    }
    if (rows.size() != static_cast<std::size_t>(m)) {
      fail("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(m));
    }
    for (const auto &r : rows) {
      if (r.size() != static_cast<std::size_t>(m)) {
        fail("matrix row has " + std::to_string(r.size()) + " entries, expected " +
             std::to_string(m));
      }
    }
    const Modulus mod(n);
    return BilinearSpec(n, static_cast<std::size_t>(m), alpha, beta,
                        FormMatrix::from_rows(mod, rows));
  }

private:
  std::vector<Scalar> row() {
    std::vector<Scalar> out;
    expect('[');
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(']');
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  Scalar integer() {
    skip_space();
    const char *begin = text_.data() + pos_;
    const char *end = text_.data() + text_.size();
    Scalar v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{}) {
      fail("expected an integer");
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                     what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

BilinearSpec parse_spec(std::string_view text) { return SpecParser(text).parse(); }

FiniteBiquandle build_bilinear(const BilinearSpec &spec, std::size_t carrier_bound) {
  return build_tables(spec.modulus(), spec.dim(), spec.alpha(), spec.beta(), spec.form(),
                      carrier_bound);
}

std::vector<Scalar> candidate_entries(Scalar alpha, Scalar beta, Modulus n) {
  std::vector<Scalar> out;
  for (Scalar x = 0; x < n.value(); ++x) {
    if (entry_admissible(x, alpha, beta, n)) {
      out.push_back(x);
    }
  }
  return out;
}

// Congruence classes

namespace {

using Matrix = std::vector<Scalar>; // row-major m x m

Matrix congruent(const Matrix &P, const Matrix &A, std::size_t m, Modulus n) {
  Matrix PA(m * m, 0), out(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (P[i * m + k] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < m; ++j) {
        PA[i * m + j] += P[i * m + k] * A[k * m + j];
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Scalar acc = 0;
      for (std::size_t k = 0; k < m; ++k) {
        acc += n.reduce(PA[i * m + k]) * P[j * m + k];
      }
      out[i * m + j] = n.reduce(acc);
    }
  }
  return out;
}

// Elementary transvections and unit scalings of one basis vector; together
// they generate GL_m(Z_n).
std::vector<Matrix> gl_generators(std::size_t m, Modulus n) {
  std::vector<Matrix> gens;
  auto identity = [&] {
    Matrix I(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      I[i * m + i] = 1;
    }
    return I;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) {
        Matrix E = identity();
        E[i * m + j] = 1;
        gens.push_back(std::move(E));
      }
    }
    for (Scalar u : units(n)) {
      if (u != 1) {
        Matrix D = identity();
        D[i * m + i] = u;
        gens.push_back(std::move(D));
      }
    }
  }
  return gens;
}

} // namespace

FormMatrix congruence_representative(const FormMatrix &A) {
  const Modulus n = A.modulus();
  const std::size_t m = A.dim();
  const auto gens = gl_generators(m, n);
  const Matrix start(A.entries().begin(), A.entries().end());
  std::set<Matrix> orbit{start};
  std::deque<Matrix> frontier{start};
  while (!frontier.empty()) {
    const Matrix cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto &P : gens) {
      Matrix next = congruent(P, cur, m, n);
      if (orbit.insert(next).second) {
        frontier.push_back(std::move(next));
      }
    }
  }
  return FormMatrix(n, m, *orbit.begin());
}

// Search

namespace {

struct CandidateBlock {
  Scalar alpha, beta, diagonal;
  std::vector<Scalar> entries;
  std::size_t count = 0;
  std::size_t offset = 0;
};

constexpr std::size_t max_candidates = std::size_t{1} << 40;

std::vector<BilinearSpec> run_search(Scalar n_value, std::size_t m, const SearchOptions &options,
                                     bool prune) {
  const Modulus n(n_value);
  if (m == 0) {
    throw DimensionMismatch("module dimension must be at least 1");
  }
  module_cardinality(n, m, options.carrier_bound);

  const std::size_t off_diagonal = m * (m - 1);
  std::vector<CandidateBlock> blocks;
  std::size_t total = 0;
  for (Scalar alpha : units(n)) {
    for (Scalar beta : units(n)) {
      CandidateBlock block;
      block.alpha = alpha;
      block.beta = beta;
      block.diagonal = n.sub(inv_scalar(beta, n), alpha);
      if (prune) {
        block.entries = candidate_entries(alpha, beta, n);
      } else {
        block.entries.resize(static_cast<std::size_t>(n_value));
        for (Scalar x = 0; x < n_value; ++x) {
          block.entries[static_cast<std::size_t>(x)] = x;
        }
      }
      block.count = 1;
      for (std::size_t k = 0; k < off_diagonal; ++k) {
        if (block.count > max_candidates / block.entries.size()) {
          throw CapacityExceeded("search space over (Z_" + std::to_string(n_value) + ")^" +
                                 std::to_string(m) + " is too large to enumerate");
        }
        block.count *= block.entries.size();
      }
      block.offset = total;
      total += block.count;
      blocks.push_back(std::move(block));
    }
  }

  // Global candidate index -> (block, A). The last off-diagonal position
  // varies fastest, so index order is row-major order on A.
  auto decode = [&](std::size_t global) {
    auto it = std::upper_bound(blocks.begin(), blocks.end(), global,
                               [](std::size_t g, const CandidateBlock &b) { return g < b.offset; });
    const CandidateBlock &block = *std::prev(it);
    std::size_t local = global - block.offset;
    std::vector<Scalar> entries(m * m);
    const std::size_t radix = block.entries.size();
    for (std::size_t pos = m * m; pos-- > 0;) {
      const std::size_t i = pos / m, j = pos % m;
      if (i == j) {
        entries[pos] = block.diagonal;
      } else {
        entries[pos] = block.entries[local % radix];
        local /= radix;
      }
    }
    return std::pair{&block, FormMatrix(n, m, std::move(entries))};
  };

  auto accepts = [&](std::size_t global) {
    auto [block, A] = decode(global);
    if (options.exclude_symplectic && block->alpha == 1 && block->beta == 1 &&
        A.is_antisymmetric()) {
      return false;
    }
    return satisfies_axioms(build_tables(n, m, block->alpha, block->beta, A,
                                         options.carrier_bound));
  };

  std::vector<std::size_t> accepted;
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t g = 0; g < total; ++g) {
      if (accepts(g)) {
        accepted.push_back(g);
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<std::size_t>> found(threads);
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          for (std::size_t g = next++; g < total; g = next++) {
            if (accepts(g)) {
              found[t].push_back(g);
            }
          }
        });
      }
    }
    for (auto &f : found) {
      accepted.insert(accepted.end(), f.begin(), f.end());
    }
    std::sort(accepted.begin(), accepted.end());
  }

  std::vector<BilinearSpec> out;
  for (std::size_t g : accepted) {
    auto [block, A] = decode(g);
    FormMatrix form = options.reduce_isomorphic ? congruence_representative(A) : A;
    // An accepted inadmissible A would contradict the type III constraint
    // on the entries; the constructor reports it as InvariantViolation.
    out.emplace_back(n_value, m, block->alpha, block->beta, std::move(form));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

std::vector<BilinearSpec> search(Scalar n, std::size_t m, const SearchOptions &options) {
  return run_search(n, m, options, true);
}

std::vector<BilinearSpec> brute_force_search(Scalar n, std::size_t m,
                                             const SearchOptions &options) {
  return run_search(n, m, options, false);
}

} // namespace bbq
