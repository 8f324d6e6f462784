#include "oeg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "oeg/biclosed.hpp"
#include "oeg/error.hpp"
#include "oeg/exchange.hpp"
#include "oeg/io.hpp"
#include "oeg/lattice.hpp"
#include "oeg/stringmod.hpp"

namespace oeg::cli {

namespace {

using io::json;

struct Options {
  std::string input = "-";
  int at = 0;
  std::size_t cap = default_node_cap;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::size_t max_sequences = 10000;
};

std::string read_input(const std::string& arg, std::istream& in) {
  if (arg == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream f(arg);
  if (!f) throw InputError("cannot open input file " + arg);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

IceQuiver unframed(const IceQuiver& q) {
  if (q.frozen_count() == 0) return q;
  std::vector<IceQuiver::Entry> b;
  for (int i = 0; i < q.mutable_count(); ++i)
    for (int j = 0; j < q.mutable_count(); ++j) b.push_back(q.at(i, j));
  return IceQuiver(q.mutable_count(), q.mutable_count(), std::move(b));
}

// Unframed input is framed; input with m = 2n is taken as already framed.
IceQuiver framed(const IceQuiver& q) {
  if (q.frozen_count() == 0) return frame(q, FrameMode::framed);
  if (q.vertex_count() != 2 * q.mutable_count())
    throw InputError("expected an unframed quiver or one with exactly n frozen vertices");
  return q;
}

json sequences_json(const std::vector<GreenSequence>& seqs) {
  json out = json::array();
  for (const auto& s : seqs) {
    json one = json::array();
    for (int v : s) one.push_back(v + 1);
    out.push_back(one);
  }
  return out;
}

json sets_json(const Algebra& a, const std::vector<Mask>& sets) {
  json out = json::array();
  for (Mask x : sets) out.push_back(io::module_set_to_json(a, x));
  return out;
}

std::vector<std::string> set_labels(const Algebra& a, const std::vector<Mask>& sets) {
  std::vector<std::string> out;
  for (Mask x : sets) out.push_back(format_set(a, x));
  return out;
}

// ---- check suites -------------------------------------------------------

struct Reporter {
  std::ostream& out;
  int failures = 0;
  void result(const std::string& name, bool pass, const std::string& detail = {}) {
    out << (pass ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out << ": " << detail;
    out << "\n";
    if (!pass) ++failures;
  }
  void note(const std::string& name, const std::string& detail) { out << "NOTE " << name << ": " << detail << "\n"; }
};

std::string census_string(const std::map<int, int>& census) {
  std::string s = "{";
  for (const auto& [sides, count] : census) s += (s.size() > 1 ? ", " : "") + std::to_string(sides) + ":" + std::to_string(count);
  return s + "}";
}

bool census_within(const std::map<int, int>& census, std::initializer_list<int> allowed) {
  for (const auto& [sides, count] : census)
    if (std::find(allowed.begin(), allowed.end(), sides) == allowed.end()) return false;
  return true;
}

void quiver_suite(Reporter& r, const std::string& tag, const IceQuiver& q, std::mt19937_64& rng) {
  const IceQuiver base = framed(q);
  const int n = base.mutable_count();
  if (n == 0) return;
  bool involution = true;
  IceQuiver::Entry largest = 0;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int trial = 0; trial < 1000 && involution; ++trial) {
    IceQuiver cur = base;
    for (int step = 0; step < 8 && involution; ++step) {
      const int k = pick(rng);
      const IceQuiver next = mutate(cur, k);
      involution = mutate(next, k) == cur;
      cur = next;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) largest = std::max(largest, std::abs(cur.at(i, j)));
    }
  }
  r.result(tag + " mutation is an involution (1000 random sequences)", involution);
  if (largest > 2) r.note(tag, "mutable entries reach magnitude " + std::to_string(largest));

  bool orbit = true;
  const CanonicalForm c0 = canonical_form(base);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int trial = 0; trial < 50 && orbit; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const CanonicalForm c = canonical_form(permute(base, perm));
    orbit = c.quiver == c0.quiver && permute(permute(base, perm), c.permutation) == c.quiver;
  }
  r.result(tag + " canonical form is constant on orbits", orbit);
}

void exchange_suite(Reporter& r, const std::string& tag, const OrientedExchangeGraph& g) {
  r.result(tag + " exchange graph is acyclic, n-regular and sign-coherent", true,
           std::to_string(g.nodes().size()) + " nodes, " + std::to_string(g.edges().size()) + " edges");
  const FiniteLattice l = g.as_lattice();
  r.result(tag + " edges are the covers of a lattice", l.cover_count() == static_cast<int>(g.edges().size()));
  const GreenLengthSet lengths = green_length_set(g);
  std::string ls;
  for (int x : lengths.lengths) ls += (ls.empty() ? "" : ",") + std::to_string(x);
  r.result(tag + " maximal green sequence lengths form an interval", lengths.is_interval, "{" + ls + "}");
  const auto positive = positive_c_vectors(g).size();
  r.result(tag + " longest maximal green sequence is at most the number of positive c-vectors",
           !lengths.lengths.empty() && static_cast<std::size_t>(lengths.lengths.back()) <= positive);
}

void lattice_suite(Reporter& r, const std::string& tag, const FiniteLattice& eg) {
  const auto sd = check_semidistributive(eg);
  r.result(tag + " exchange lattice is semidistributive", sd.ok());
  const auto poly = check_polygonal(eg);
  r.result(tag + " exchange lattice is polygonal with squares and pentagons only",
           poly.polygonal && census_within(poly.census, {4, 5}), census_string(poly.census));
  const FlipGraph flips = polygonal_flip_graph(eg);
  r.result(tag + " maximal chains are flip-connected", flips.connected,
           std::to_string(flips.chains.size()) + " chains");
}

void stringmod_suite(Reporter& r, const std::string& tag, const Algebra& a, const OrientedExchangeGraph& g) {
  bool bounded = true;
  bool dims = true;
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v) {
      bounded = bounded && a.hom_dim(u, v) <= 1;
      if (const auto& z = a.nonsplit_extension(u, v)) {
        std::vector<int> sum(a.vertex_count(), 0);
        for (int m : *z)
          for (int k = 0; k < a.vertex_count(); ++k) sum[k] += a.indecomposables()[m].dim[k];
        for (int k = 0; k < a.vertex_count(); ++k)
          dims = dims && sum[k] == a.indecomposables()[u].dim[k] + a.indecomposables()[v].dim[k];
      }
    }
  r.result(tag + " hom dimensions are at most 1", bounded);
  r.result(tag + " extension middles have the right dimension vector", dims);
  const auto positive = positive_c_vectors(g);
  std::vector<CVector> dimvecs;
  for (const auto& m : a.indecomposables()) dimvecs.emplace_back(m.dim.begin(), m.dim.end());
  std::sort(dimvecs.begin(), dimvecs.end());
  r.result(tag + " positive c-vectors are the dimension vectors", positive == dimvecs,
           std::to_string(a.size()) + " indecomposables");
  const auto tors = torsion_classes(a);
  r.result(tag + " torsion classes match exchange graph nodes", tors.size() == g.nodes().size(),
           std::to_string(tors.size()) + " torsion classes");
  const FiniteLattice tl = inclusion_lattice(tors);
  r.result(tag + " c-vector labels map the exchange graph onto tors, source to top",
           torsion_class_labels(a, g).has_value());
  r.result(tag + " tors is semidistributive", is_semidistributive(tl));
}

void biclosed_suite(Reporter& r, const std::string& tag, const Algebra& a, const OrientedExchangeGraph& g) {
  const QuotientReport rep = verify_quotient_theorem(a, &g);
  for (const Check& c : rep.checks) r.result(tag + " " + c.name, c.pass, c.detail);
  const BiclosedLattice bic = enumerate_biclosed(cvector_space(a).space);
  const auto poly = check_polygonal(bic.lattice);
  r.result(tag + " Bic is polygonal with squares and hexagons only",
           poly.polygonal && census_within(poly.census, {4, 6}), census_string(poly.census));
  r.result(tag + " Bic is semidistributive", is_semidistributive(bic.lattice),
           std::to_string(bic.sets.size()) + " biclosed sets");
  r.result(tag + " Bic is congruence-uniform", is_congruence_uniform(bic.lattice));
}

int run_check(const Options& o, const std::vector<std::pair<std::string, IceQuiver>>& families, std::ostream& out) {
  static const std::vector<std::string> suites = {"all", "quiver", "exchange", "lattice", "stringmod", "biclosed"};
  if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
    throw InputError("unknown suite " + o.suite);
  auto want = [&](const char* s) { return o.suite == "all" || o.suite == s; };
  Reporter r{out};
  std::mt19937_64 rng(o.seed);
  for (const auto& [tag, q] : families) {
    if (want("quiver")) quiver_suite(r, tag, q, rng);
    if (!want("exchange") && !want("lattice") && !want("stringmod") && !want("biclosed")) continue;
    const OrientedExchangeGraph g = build_exchange_graph(framed(q), o.cap);
    if (want("exchange")) exchange_suite(r, tag, g);
    if (want("lattice")) lattice_suite(r, tag, g.as_lattice());
    if (!want("stringmod") && !want("biclosed")) continue;
    std::optional<Algebra> a;
    try {
      a = Algebra::from_quiver(unframed(q));
    } catch (const UnsupportedQuiver& e) {
      r.note(tag, std::string("string-module suites skipped: ") + e.what());
      continue;
    }
    if (want("stringmod")) stringmod_suite(r, tag, *a, g);
    if (want("biclosed")) biclosed_suite(r, tag, *a, g);
  }
  out << (r.failures == 0 ? "all checks passed" : std::to_string(r.failures) + " check(s) failed") << "\n";
  return r.failures == 0 ? ok : check_failed;
}

// ---- subcommands --------------------------------------------------------

int dispatch(const std::string& cmd, const Options& o, std::istream& in, std::ostream& out) {
  if (cmd == "check") {
    std::vector<std::pair<std::string, IceQuiver>> families;
    if (o.input.empty()) {
      families = {{"[A2]", path_quiver(2)}, {"[A3]", path_quiver(3)}, {"[Q3]", cyclic_quiver(3)},
                  {"[Q4]", cyclic_quiver(4)}};
    } else {
      families = {{"[input]", io::parse_quiver(read_input(o.input, in))}};
    }
    return run_check(o, families, out);
  }

  const IceQuiver q = io::parse_quiver(read_input(o.input, in));
  if (cmd == "mutate") {
    if (o.at < 1 || o.at > q.mutable_count()) throw DomainError("--at must name a mutable vertex");
    out << io::quiver_to_json(mutate(q, o.at - 1)).dump() << "\n";
    return ok;
  }
  if (cmd == "exchange") {
    const OrientedExchangeGraph g = build_exchange_graph(framed(q), o.cap);
    out << (o.format == "dot" ? io::exchange_to_dot(g) : io::exchange_to_json(g).dump() + "\n");
    return ok;
  }
  if (cmd == "green") {
    const OrientedExchangeGraph g = build_exchange_graph(framed(q), o.cap);
    const std::uint64_t count = count_maximal_green_sequences(g);
    const GreenLengthSet lengths = green_length_set(g);
    json j{{"count", count}, {"lengths", lengths.lengths}, {"interval", lengths.is_interval}};
    if (count <= o.max_sequences) j["sequences"] = sequences_json(maximal_green_sequences(g));
    else j["sequences"] = nullptr;
    out << j.dump() << "\n";
    return ok;
  }
  const Algebra a = Algebra::from_quiver(unframed(q));
  if (cmd == "tors") {
    const auto tors = torsion_classes(a);
    const FiniteLattice l = inclusion_lattice(tors);
    if (o.format == "dot") {
      out << io::lattice_to_dot(l, set_labels(a, tors));
      return ok;
    }
    json j{{"indecomposables", io::indecomposables_to_json(a)}, {"classes", sets_json(a, tors)},
           {"lattice", io::lattice_to_json(l)}};
    out << j.dump() << "\n";
    return ok;
  }
  if (cmd == "bic") {
    const CVectorSpace cs = cvector_space(a);
    const BiclosedLattice bic = enumerate_biclosed(cs.space);
    if (o.format == "dot") {
      out << io::lattice_to_dot(bic.lattice, set_labels(a, bic.sets));
      return ok;
    }
    json j{{"indecomposables", io::indecomposables_to_json(a)}, {"space", io::closure_space_to_json(cs.space)},
           {"sets", sets_json(a, bic.sets)}, {"lattice", io::lattice_to_json(bic.lattice)}};
    out << j.dump() << "\n";
    return ok;
  }
  if (cmd == "quotient") {
    const QuotientReport rep = verify_quotient_theorem(a);
    const CVectorSpace cs = cvector_space(a);
    const BiclosedLattice bic = enumerate_biclosed(cs.space);
    json fibers = json::array();
    for (Mask b : bic.sets)
      fibers.push_back({{"set", io::module_set_to_json(a, b)}, {"pi_down", io::module_set_to_json(a, pi_down(a, b))},
                        {"pi_up", io::module_set_to_json(a, pi_up(a, b))}});
    json checks = json::array();
    for (const Check& c : rep.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json j{{"bic", rep.bic_size}, {"tors", rep.tors_size}, {"contracted_covers", rep.contracted_covers},
           {"checks", checks}, {"fibers", fibers}};
    out << j.dump() << "\n";
    return rep.ok() ? ok : check_failed;
  }
  throw InputError("unknown subcommand " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"oriented exchange graphs, torsion classes and biclosed sets"};
  app.require_subcommand(1);
  Options o;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* opt = sub->add_option("input", o.input, "quiver JSON file, inline JSON, or - for stdin");
    if (input_required) opt->required();
    sub->add_option("--cap", o.cap, "exchange graph node cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto* mutate_cmd = app.add_subcommand("mutate", "mutate a quiver at one vertex");
  add_common(mutate_cmd, true);
  mutate_cmd->add_option("--at", o.at, "mutable vertex (1-based)")->required();
  add_common(app.add_subcommand("exchange", "oriented exchange graph of the framed quiver"), true);
  auto* green_cmd = app.add_subcommand("green", "maximal green sequences and their lengths");
  add_common(green_cmd, true);
  green_cmd->add_option("--max-sequences", o.max_sequences, "list sequences only up to this count");
  add_common(app.add_subcommand("tors", "lattice of torsion classes"), true);
  add_common(app.add_subcommand("bic", "lattice of biclosed sets of c-vectors"), true);
  add_common(app.add_subcommand("quotient", "biclosed sets modulo pi_down versus torsion classes"), true);
  auto* check_cmd = app.add_subcommand("check", "run the invariant suites");
  add_common(check_cmd, false);
  check_cmd->add_option("--suite", o.suite, "all, quiver, exchange, lattice, stringmod or biclosed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  o.format = format;
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "check" && check_cmd->count("input") == 0) o.input.clear();
  try {
    return dispatch(cmd, o, in, out);
  } catch (const NotFiniteType& e) {
    err << "error: " << e.what() << "\n";
    return not_finite_type;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const UnsupportedQuiver& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return check_failed;
  }
}

}  // namespace oeg::cli
