#include "bbq/invariant.hpp"

#include "bbq/errors.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <thread>

namespace bbq {

namespace {

constexpr Index unset = std::numeric_limits<Index>::max();

// Backtracking over semiarcs: branch on the smallest unassigned semiarc,
// then push values forward through every relation whose inputs are known.
class ColoringSearch {
public:
  ColoringSearch(const LinkDiagram &d, const FiniteBiquandle &T)
      : T_(T), relations_(crossing_relations(d)), watchers_(d.semiarc_count),
        values_(d.semiarc_count, unset) {
    for (std::size_t k = 0; k < relations_.size(); ++k) {
      const auto &r = relations_[k];
      watchers_[r.left].push_back(k);
      if (r.right != r.left) {
        watchers_[r.right].push_back(k);
      }
    }
  }

  std::size_t semiarcs() const noexcept { return values_.size(); }

  // Visits colorings in lexicographic order; `first` pins semiarc 0.
  template <class Visit> void run(Visit &&visit, std::optional<Index> first = std::nullopt) {
    if (values_.empty()) {
      visit(values_);
      return;
    }
    if (first) {
      if (try_assign(0, *first)) {
        dfs(1, visit);
      }
      undo(0);
      return;
    }
    dfs(0, visit);
  }

private:
  template <class Visit> bool dfs(std::size_t from, Visit &visit) {
    while (from < values_.size() && values_[from] != unset) {
      ++from;
    }
    if (from == values_.size()) {
      return visit(values_);
    }
    for (Index v = 0; v < T_.size(); ++v) {
      const std::size_t mark = trail_.size();
      const bool keep_going = !try_assign(from, v) || dfs(from + 1, visit);
      undo(mark);
      if (!keep_going) {
        return false;
      }
    }
    return true;
  }

  bool try_assign(std::size_t s, Index v) {
    pending_.clear();
    return assign(s, v) && propagate();
  }

  bool assign(std::size_t s, Index v) {
    if (values_[s] == unset) {
      values_[s] = v;
      trail_.push_back(s);
      pending_.push_back(s);
      return true;
    }
    return values_[s] == v;
  }

  bool propagate() {
    while (!pending_.empty()) {
      const std::size_t s = pending_.back();
      pending_.pop_back();
      for (const std::size_t k : watchers_[s]) {
        const auto &r = relations_[k];
        if (values_[r.left] == unset || values_[r.right] == unset) {
          continue;
        }
        if (!assign(r.output, T_.apply(r.op, values_[r.left], values_[r.right]))) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = unset;
      trail_.pop_back();
    }
  }

  const FiniteBiquandle &T_;
  std::vector<CrossingRelation> relations_;
  std::vector<std::vector<std::size_t>> watchers_;
  Coloring values_;
  std::vector<std::size_t> trail_, pending_;
};

// Runs one branch per value of semiarc 0 and returns the per-branch
// accumulators in value order.
template <class Acc, class Visit>
std::vector<Acc> run_branches(const LinkDiagram &d, const FiniteBiquandle &T, unsigned threads,
                              Visit visit) {
  if (d.semiarc_count == 0 || threads <= 1) {
    std::vector<Acc> out(1);
    ColoringSearch(d, T).run([&](const Coloring &c) {
      visit(out[0], c);
      return true;
    });
    return out;
  }
  std::vector<Acc> out(T.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    ColoringSearch search(d, T);
    for (std::size_t v; (v = next.fetch_add(1)) < T.size();) {
      search.run(
          [&](const Coloring &c) {
            visit(out[v], c);
            return true;
          },
          static_cast<Index>(v));
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned count = std::min<std::size_t>(threads, T.size());
    for (unsigned i = 0; i < count; ++i) {
      pool.emplace_back(worker);
    }
  }
  return out;
}

} // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram &d, const FiniteBiquandle &T,
                                          unsigned threads) {
  auto branches = run_branches<std::vector<Coloring>>(
      d, T, threads, [](std::vector<Coloring> &acc, const Coloring &c) { acc.push_back(c); });
  std::vector<Coloring> out;
  for (auto &b : branches) {
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }
  return out;
}

void for_each_coloring(const LinkDiagram &d, const FiniteBiquandle &T,
                       const std::function<bool(const Coloring &)> &visit) {
  ColoringSearch(d, T).run(visit);
}

std::uint64_t counting_invariant(const LinkDiagram &d, const FiniteBiquandle &T,
                                 unsigned threads) {
  const auto branches = run_branches<std::uint64_t>(
      d, T, threads, [](std::uint64_t &acc, const Coloring &) { ++acc; });
  std::uint64_t total = 0;
  for (const auto b : branches) {
    total += b;
  }
  return total;
}

std::vector<Index> generated_subbiquandle(const FiniteBiquandle &T, std::span<const Index> seeds) {
  std::vector<char> member(T.size(), 0);
  std::vector<Index> elements;
  auto insert = [&](Index x) {
    if (!member[x]) {
      member[x] = 1;
      elements.push_back(x);
    }
  };
  for (const Index s : seeds) {
    insert(s);
  }
  constexpr Operation ops[] = {Operation::Up, Operation::UpBar, Operation::Low,
                               Operation::LowBar};
  // Element i is combined with every j <= i in both orders once it is reached.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const Index a = elements[i];
      const Index b = elements[j];
      for (const Operation op : ops) {
        insert(T.apply(op, a, b));
        insert(T.apply(op, b, a));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

void BBPolynomial::add(std::uint32_t q_exp, std::uint32_t z_exp, std::uint64_t coefficient) {
  if (coefficient != 0) {
    terms_[{q_exp, z_exp}] += coefficient;
  }
}

BBPolynomial &BBPolynomial::operator+=(const BBPolynomial &other) {
  for (const auto &[e, c] : other.terms_) {
    add(e.first, e.second, c);
  }
  return *this;
}

std::uint64_t BBPolynomial::coefficient(std::uint32_t q_exp, std::uint32_t z_exp) const {
  const auto it = terms_.find({q_exp, z_exp});
  return it == terms_.end() ? 0 : it->second;
}

namespace {

struct PhiAccumulator {
  BBPolynomial poly;
  // Keyed by the sorted set of colors used.
  std::map<std::vector<Index>, BBPolynomial::Exponents> memo;
};

} // namespace

BBPolynomial phi_bb(const LinkDiagram &d, const BilinearSpec &spec, unsigned threads,
                    std::size_t carrier_bound) {
  const FiniteBiquandle T = build_bilinear(spec, carrier_bound);
  if (!satisfies_axioms(T)) {
    throw InvariantViolation(spec.to_string() + " does not define a biquandle");
  }
  const Modulus n = spec.modulus();
  const std::size_t m = spec.dim();

  auto visit = [&](PhiAccumulator &acc, const Coloring &c) {
    std::vector<Index> used(c);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto it = acc.memo.find(used);
    if (it == acc.memo.end()) {
      const auto image = generated_subbiquandle(T, used);
      std::vector<ModVector> vectors;
      vectors.reserve(used.size());
      for (const Index i : used) {
        vectors.push_back(T.carrier()[i]);
      }
      const auto span = submodule_span(vectors, n, m);
      it = acc.memo
               .emplace(std::move(used),
                        BBPolynomial::Exponents{static_cast<std::uint32_t>(image.size()),
                                                static_cast<std::uint32_t>(span.size())})
               .first;
    }
    acc.poly.add(it->second.first, it->second.second);
  };

  BBPolynomial out;
  for (const auto &b : run_branches<PhiAccumulator>(d, T, threads, visit)) {
    out += b.poly;
  }
  return out;
}

std::int64_t phi_specialize(const BBPolynomial &p, std::int64_t q, std::int64_t z) {
  auto power = [](std::int64_t base, std::uint32_t e) {
    std::int64_t r = 1;
    while (e--) {
      r *= base;
    }
    return r;
  };
  std::int64_t total = 0;
  for (const auto &[e, c] : p.terms()) {
    total += static_cast<std::int64_t>(c) * power(q, e.first) * power(z, e.second);
  }
  return total;
}

std::string phi_to_string(const BBPolynomial &p) {
  if (p.empty()) {
    return "0";
  }
  auto variable = [](char name, std::uint32_t e) {
    std::string s(1, name);
    if (e != 1) {
      s += '^' + std::to_string(e);
    }
    return s;
  };
  std::string out;
  for (const auto &[e, c] : p.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    if (c != 1) {
      out += std::to_string(c) + ' ';
    }
    out += variable('q', e.first) + ' ' + variable('z', e.second);
  }
  return out;
}

} // namespace bbq
