#include "bbq/cli.hpp"

#include "bbq/bilinear.hpp"
#include "bbq/biquandle.hpp"
#include "bbq/errors.hpp"
#include "bbq/invariant.hpp"
#include "bbq/link.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace bbq {

namespace {

unsigned resolve_threads(unsigned requested) {
  return requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteBiquandle parse_alexander(const std::string &text) {
  std::array<Scalar, 3> v{};
  std::istringstream in(text);
  for (std::size_t i = 0; i < v.size(); ++i) {
    char comma = ',';
    if ((i > 0 && !(in >> comma)) || comma != ',' || !(in >> v[i])) {
      throw ParseError("--alexander expects n,s,t");
    }
  }
  if (in >> std::ws; !in.eof()) {
    throw ParseError("--alexander expects n,s,t");
  }
  return alexander_biquandle(v[0], v[1], v[2]);
}

LinkDiagram resolve_link(const std::string &name, const std::string &gauss) {
  return name.empty() ? parse_gauss(gauss) : builtin_link(name);
}

FiniteBiquandle checked_biquandle(const BilinearSpec &spec) {
  FiniteBiquandle T = build_bilinear(spec);
  if (!satisfies_axioms(T)) {
    throw InvariantViolation(spec.to_string() + " does not define a biquandle");
  }
  return T;
}

std::string describe(const FiniteBiquandle &B, const AxiomWitness &w) {
  static constexpr const char *names[] = {"a", "b", "c"};
  std::string s;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    s += names[i];
    s += '=' + B.label(w.elements[i]) + ", ";
  }
  return s + w.equation;
}

struct Options {
  Scalar n = 0;
  std::size_t m = 0;
  bool include_symplectic = false;
  bool all_representatives = false;
  unsigned threads = 1;
  std::string spec, matrix_file, alexander, link, gauss;
  std::size_t limit = 0;
  std::size_t max_cardinality = 27;
};

int cmd_search(const Options &o, std::ostream &out) {
  SearchOptions so;
  so.exclude_symplectic = !o.include_symplectic;
  so.reduce_isomorphic = !o.all_representatives;
  so.threads = resolve_threads(o.threads);
  const auto found = search(o.n, o.m, so);
  for (const auto &spec : found) {
    out << spec.to_string() << '\n';
  }
  out << "found " << found.size() << '\n';
  return 0;
}

int cmd_verify(const Options &o, std::ostream &out) {
  const FiniteBiquandle B = o.spec.empty() ? block_matrix_decode(read_file(o.matrix_file))
                                           : build_bilinear(parse_spec(o.spec));
  const AxiomReport report = check_axioms(B);
  for (int k = 1; k <= 4; ++k) {
    const AxiomResult &r = report.axiom(k);
    out << "axiom" << k << ": ";
    if (r.pass) {
      out << "pass\n";
    } else {
      out << "fail (" << describe(B, *r.witness) << ")\n";
    }
  }
  return report.ok() ? 0 : 1;
}

int cmd_matrix(const Options &o, std::ostream &out) {
  std::optional<FiniteBiquandle> B;
  if (!o.spec.empty()) {
    B = build_bilinear(parse_spec(o.spec));
  } else if (!o.alexander.empty()) {
    B = parse_alexander(o.alexander);
  } else {
    B = block_matrix_decode(read_file(o.matrix_file));
  }
  out << block_matrix_encode(*B);
  return 0;
}

int cmd_invariant(const Options &o, std::ostream &out) {
  const LinkDiagram d = resolve_link(o.link, o.gauss);
  const BilinearSpec spec = parse_spec(o.spec);
  const unsigned threads = resolve_threads(o.threads);
  const BBPolynomial phi = phi_bb(d, spec, threads);
  out << "phi = " << phi_to_string(phi) << '\n';
  out << "hom = " << counting_invariant(d, build_bilinear(spec), threads) << '\n';
  return 0;
}

int cmd_color(const Options &o, std::ostream &out) {
  const LinkDiagram d = resolve_link(o.link, o.gauss);
  const FiniteBiquandle T = checked_biquandle(parse_spec(o.spec));
  std::size_t shown = 0;
  for_each_coloring(d, T, [&](const Coloring &c) {
    if (o.limit != 0 && shown == o.limit) {
      return false;
    }
    for (std::size_t s = 0; s < c.size(); ++s) {
      out << (s ? " " : "") << T.label(c[s]);
    }
    out << '\n';
    ++shown;
    return true;
  });
  if (o.limit != 0 && shown == o.limit) {
    const std::uint64_t total = counting_invariant(d, T);
    if (total > shown) {
      out << "... " << (total - shown) << " more\n";
    }
  }
  return 0;
}

int cmd_table(const Options &o, std::ostream &out) {
  const std::size_t K = o.max_cardinality;
  if (K > default_carrier_bound()) {
    throw CapacityExceeded("--max-cardinality " + std::to_string(K) +
                           " exceeds the carrier bound " +
                           std::to_string(default_carrier_bound()));
  }
  SearchOptions so;
  so.threads = resolve_threads(o.threads);
  std::size_t entries = 0;
  for (Scalar n = 2; static_cast<std::size_t>(n * n) <= K; ++n) {
    std::size_t size = static_cast<std::size_t>(n * n);
    for (std::size_t m = 2; size <= K; ++m, size *= static_cast<std::size_t>(n)) {
      const auto found = search(n, m, so);
      out << "(Z_" << n << ")^" << m << ": " << found.size() << '\n';
      for (const auto &spec : found) {
        out << "  " << spec.to_string()
            << (is_quandle(build_bilinear(spec)) ? " quandle" : " non-quandle") << '\n';
      }
      entries += found.size();
    }
  }
  out << "entries " << entries << '\n';
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Bilinear biquandles and the phi_BB link invariant", "bbq"};
  app.require_subcommand(1);
  Options o;

  auto *search_cmd = app.add_subcommand("search", "Find all bilinear biquandles on (Z_n)^m");
  search_cmd->add_option("--n", o.n, "Modulus")->required();
  search_cmd->add_option("--m", o.m, "Dimension")->required();
  search_cmd->add_flag("--include-symplectic", o.include_symplectic,
                       "Keep symplectic quandles (alpha = beta = 1, A antisymmetric)");
  search_cmd->add_flag("--all-representatives", o.all_representatives,
                       "List every form matrix, not one per congruence class");
  search_cmd->add_option("--threads", o.threads, "Worker threads, 0 for all cores");

  auto *verify_cmd = app.add_subcommand("verify", "Check the four biquandle axioms");
  auto *verify_src = verify_cmd->add_option_group("source");
  verify_src->add_option("--spec", o.spec, "n,m,alpha,beta,[[...],...]");
  verify_src->add_option("--matrix-file", o.matrix_file, "Block-matrix file");
  verify_src->require_option(1);

  auto *matrix_cmd = app.add_subcommand("matrix", "Print the block-matrix encoding");
  auto *matrix_src = matrix_cmd->add_option_group("source");
  matrix_src->add_option("--spec", o.spec, "n,m,alpha,beta,[[...],...]");
  matrix_src->add_option("--alexander", o.alexander, "n,s,t");
  matrix_src->add_option("--matrix-file", o.matrix_file, "Block-matrix file");
  matrix_src->require_option(1);

  auto add_link_options = [&](CLI::App *cmd) {
    auto *g = cmd->add_option_group("link");
    g->add_option("--link", o.link, "Built-in link name");
    g->add_option("--gauss", o.gauss, "Signed Gauss code");
    g->require_option(1);
    cmd->add_option("--spec", o.spec, "n,m,alpha,beta,[[...],...]")->required();
  };

  auto *invariant_cmd = app.add_subcommand("invariant", "Compute phi_BB and the counting invariant");
  add_link_options(invariant_cmd);
  invariant_cmd->add_option("--threads", o.threads, "Worker threads, 0 for all cores");

  auto *color_cmd = app.add_subcommand("color", "List colorings");
  add_link_options(color_cmd);
  color_cmd->add_option("--limit", o.limit, "Show at most this many colorings");

  auto *table_cmd = app.add_subcommand("table", "Search every (Z_n)^m up to a cardinality");
  table_cmd->add_option("--max-cardinality", o.max_cardinality, "Largest n^m to search")
      ->capture_default_str();
  table_cmd->add_option("--threads", o.threads, "Worker threads, 0 for all cores");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*search_cmd) {
      return cmd_search(o, out);
    }
    if (*verify_cmd) {
      return cmd_verify(o, out);
    }
    if (*matrix_cmd) {
      return cmd_matrix(o, out);
    }
    if (*invariant_cmd) {
      return cmd_invariant(o, out);
    }
    if (*color_cmd) {
      return cmd_color(o, out);
    }
    return cmd_table(o, out);
  } catch (const CapacityExceeded &e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

} // namespace bbq
