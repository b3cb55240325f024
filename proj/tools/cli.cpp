#include "cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "schurlab/autgrp.hpp"
#include "schurlab/constructions.hpp"
#include "schurlab/io.hpp"
#include "schurlab/schemes.hpp"
#include "schurlab/schurity.hpp"
#include "schurlab/srings.hpp"

namespace schurlab::cli {

namespace {

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kInput = 2;

struct SemanticFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool human(const RunConfig &cfg) { return cfg.format == OutputFormat::human; }

std::string format_set(const FiniteGroup &g, const std::vector<Elem> &set, bool tokens)
{
  std::ostringstream out;
  out << '{';
  for (std::size_t t = 0; t < set.size(); ++t) {
    if (t)
      out << ' ';
    if (tokens)
      out << g.format(set[t]);
    else
      out << set[t];
  }
  out << '}';
  return out.str();
}

SRing load_sring(const RunConfig &cfg)
{
  if (cfg.group_spec.empty())
    throw InputError("--group is required");
  if (!cfg.partition_path)
    throw InputError("--partition is required");
  GroupPtr g = parse_group_spec(cfg.group_spec, cfg.order_cap);
  PartitionText text = read_partition_file(*g, *cfg.partition_path);
  return structure_constants(verify_partition(g, std::move(text.classes), std::move(text.labels)));
}

void print_classes(const SRing &s, std::ostream &out)
{
  const auto &p = s.partition();
  const auto &g = *s.group();
  out << "basic sets: " << p.size() << '\n';
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  " << class_symbol(p, i) << " (" << p.label(i) << ", size " << p.cell(i).size()
        << "):";
    for (Elem x : p.cell(i))
      out << ' ' << g.format(x);
    out << '\n';
  }
}

void print_constants(const SRing &s, const RunConfig &cfg, std::ostream &out)
{
  if (!human(cfg)) {
    out << format_constants_machine(s);
    return;
  }
  const bool commutative = is_commutative(s);
  out << "structure constants:\n";
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = commutative ? i : 0; j < s.rank(); ++j)
      out << "  " << format_product(s, i, j) << '\n';
  out << "commutative: " << (commutative ? "yes" : "no") << '\n';
}

std::string describe_group(const FiniteGroup &g)
{
  return g.name() + " (" + g.spec() + "), order " + std::to_string(g.order());
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, bool with_summary)
{
  SRing s = load_sring(cfg);
  if (with_summary && human(cfg)) {
    out << "group: " << describe_group(*s.group()) << '\n';
    print_classes(s, out);
    out << "S-ring: valid\n";
  }
  print_constants(s, cfg, out);
  return kOk;
}

void print_orbits(const FiniteGroup &g, const std::vector<std::vector<Elem>> &cells,
                  bool tokens, std::ostream &out)
{
  out << "orbits=";
  for (std::size_t c = 0; c < cells.size(); ++c)
    out << (c ? " " : "") << format_set(g, cells[c], tokens);
  out << '\n';
}

int cmd_aut(const RunConfig &cfg, std::ostream &out)
{
  SRing s = load_sring(cfg);
  const auto &g = *s.group();
  const PermGroup aut = scheme_automorphisms(to_scheme(s), SearchOptions{cfg.parallel});
  const PermGroup aut_e = stabilizer(aut, 0);
  out << "order=" << aut.order() << '\n';
  for (const auto &gen : aut.generators())
    out << "generator: " << gen.to_string() << '\n';
  out << "stabilizer_order=" << aut_e.order() << '\n';
  print_orbits(g, orbits(aut_e), human(cfg), out);
  return kOk;
}

int report_verdict(const SRing &s, const SchurityVerdict &v, const RunConfig &cfg,
                   std::ostream &out, std::ostream &err)
{
  const auto &g = *s.group();
  out << format_verdict(v, g);
  if (human(cfg) && v.mismatch_witness) {
    const auto &w = *v.mismatch_witness;
    out << "mismatch: basic set " << s.partition().label(w.basic_set)
        << " is not a single orbit; orbit " << format_set(g, w.orbit, true) << '\n';
  }
  if (cfg.expect) {
    const bool want = *cfg.expect == Expectation::schurian;
    if (want != v.schurian) {
      err << "expectation failed: expected " << (want ? "schurian" : "non-schurian") << '\n';
      return kSemantic;
    }
  }
  return kOk;
}

int cmd_schurity(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
  SRing s = load_sring(cfg);
  return report_verdict(s, is_schurian(s, SearchOptions{cfg.parallel}), cfg, out, err);
}

int cmd_quotient(const RunConfig &cfg, std::ostream &out)
{
  SRing s = load_sring(cfg);
  const GroupPtr &g = s.group();
  const Subgroup upper = cfg.upper_gens.empty()
                             ? whole_group(g)
                             : subgroup_generated(g, g->parse_list(cfg.upper_gens));
  const Subgroup lower = subgroup_generated(g, g->parse_list(cfg.lower_gens));
  if (!is_a_subgroup(s, upper) || !is_a_subgroup(s, lower))
    throw SemanticFailure("U and L must both be A-subgroups");
  if (!is_normal_in(upper, lower))
    throw SemanticFailure("L is not normal in U");

  const SRing q = quotient_sring(s, upper, lower);
  if (human(cfg)) {
    out << "section: |U| = " << upper.size() << ", |L| = " << lower.size() << '\n';
    out << "quotient group: order " << q.group()->order() << '\n';
    print_classes(q, out);
  }
  print_constants(q, cfg, out);
  const BigInt order = identity_stabilizer_automorphisms(to_scheme(q), SearchOptions{cfg.parallel})
                           .order();
  out << "quotient Aut order = " << order << '\n';
  return kOk;
}

Partition family_partition(const RunConfig &cfg)
{
  if (cfg.family == "m27")
    return m27_partition(cfg.order_cap);
  if (cfg.family == "m3n") {
    if (cfg.n < 4)
      throw InputError("m3n needs --n >= 4; for n = 3 use `paper m27`");
    return m3n_partition(cfg.n, cfg.order_cap);
  }
  throw InputError("unknown family '" + cfg.family + "' (expected m27 or m3n)");
}

std::string join_labels(const Partition &p, const Subgroup &h)
{
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!h.contains(p.cell(i).front()))
      continue;
    out += (first ? "" : ",") + p.label(i);
    first = false;
  }
  return out + "}";
}

int cmd_paper(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
  const Partition p = family_partition(cfg);
  const SRing s = structure_constants(p);
  const GroupPtr &g = s.group();
  const SearchOptions opts{cfg.parallel};

  out << "group: " << describe_group(*g) << '\n';
  print_classes(s, out);
  print_constants(s, cfg, out);
  if (auto failure = check_tensor_identities(s))
    throw std::logic_error("tensor identity failed: " + *failure);
  out << "tensor identities: ok\n";

  out << "A-subgroups:";
  for (const auto &h : a_subgroups(s))
    out << ' ' << join_labels(p, h);
  out << '\n';

  const PermGroup aut = scheme_automorphisms(to_scheme(s), opts);
  std::vector<std::pair<std::string, Subgroup>> named;
  if (cfg.family == "m27") {
    named.emplace_back("U", m27_subgroup_u(g));
  } else {
    auto subs = m3n_subgroups(g);
    named.emplace_back("B", subs.b);
    named.emplace_back("C", subs.c);
    named.emplace_back("H", subs.h);
  }
  for (const auto &[name, h] : named)
    out << name << (is_a_subgroup(s, h) ? " is an A-subgroup" : " is not an A-subgroup")
        << '\n';
  const PermGroup k = stabilizer(aut, g->identity());
  for (const auto &[name, h] : named) {
    out << "left cosets of " << name << " are blocks of K = Aut(C(A))_e: "
        << (is_block_system(k, left_cosets(g, h)) ? "yes" : "no") << '\n';
    out << "right cosets of " << name << " are blocks of Aut(C(A)): "
        << (is_block_system(aut, right_cosets(g, h)) ? "yes" : "no") << '\n';
  }

  if (cfg.family == "m3n") {
    const auto &h = named.back().second;
    out << "quotient Aut order = " << quotient_aut_order(s, whole_group(g), h, opts)
        << " (G/H)\n";
  }

  return report_verdict(s, is_schurian(s, opts), cfg, out, err);
}

int cmd_export(const RunConfig &cfg, std::ostream &out)
{
  const std::string text = format_partition(family_partition(cfg));
  if (!cfg.output_path) {
    out << text;
    return kOk;
  }
  std::ofstream file(*cfg.output_path);
  if (!file)
    throw InputError("cannot write '" + *cfg.output_path + "'");
  file << text;
  return kOk;
}

int dispatch(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
  switch (cfg.command) {
  case Command::verify: return cmd_verify(cfg, out, true);
  case Command::constants: return cmd_verify(cfg, out, false);
  case Command::aut: return cmd_aut(cfg, out);
  case Command::schurity: return cmd_schurity(cfg, out, err);
  case Command::quotient: return cmd_quotient(cfg, out);
  case Command::paper: return cmd_paper(cfg, out, err);
  case Command::exportp: return cmd_export(cfg, out);
  }
  return kInput;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Schur rings over finite groups: verification, automorphisms, schurity"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, OutputFormat> formats{{"human", OutputFormat::human},
                                                    {"machine", OutputFormat::machine}};
  const std::map<std::string, Expectation> expectations{
      {"schurian", Expectation::schurian}, {"non-schurian", Expectation::non_schurian}};
  Expectation expect_value = Expectation::schurian;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--format", cfg.format, "human or machine")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--cap", cfg.order_cap, "largest admissible group order");
    sub->add_flag("--parallel", cfg.parallel, "search automorphisms concurrently");
  };
  auto input = [&](CLI::App *sub) {
    sub->add_option("--group", cfg.group_spec,
                    "metacyclic:p=<p>,n=<n> | cyclic:m=<m> | table:<path>")
        ->required();
    sub->add_option("--partition", cfg.partition_path, "partition file")->required();
    common(sub);
  };

  struct Sub {
    const char *name;
    const char *help;
    Command command;
  };
  const Sub input_subs[] = {
      {"verify", "check a partition and print its structure constants", Command::verify},
      {"constants", "print the structure-constant table", Command::constants},
      {"aut", "automorphism group of the Cayley scheme", Command::aut},
      {"schurity", "decide whether the S-ring is schurian", Command::schurity},
      {"quotient", "quotient S-ring over a section U/L", Command::quotient},
  };
  std::vector<std::pair<CLI::App *, Command>> subs;
  CLI::Option *expect_opt = nullptr;
  for (const auto &sub : input_subs) {
    CLI::App *app_sub = app.add_subcommand(sub.name, sub.help);
    input(app_sub);
    subs.emplace_back(app_sub, sub.command);
    if (sub.command == Command::schurity)
      expect_opt = app_sub->add_option("--expect", expect_value, "schurian or non-schurian")
                       ->transform(CLI::CheckedTransformer(expectations, CLI::ignore_case));
    if (sub.command == Command::quotient) {
      app_sub->add_option("--upper", cfg.upper_gens, "generators of U (default: G)");
      app_sub->add_option("--lower", cfg.lower_gens, "generators of L")->required();
    }
  }

  CLI::App *paper = app.add_subcommand("paper", "reproduce the M_27 or M_{3^n} construction");
  paper->add_option("family", cfg.family, "m27 or m3n")->required();
  paper->add_option("--n", cfg.n, "n for the m3n family (n >= 4)");
  CLI::Option *paper_expect =
      paper->add_option("--expect", expect_value, "schurian or non-schurian")
          ->transform(CLI::CheckedTransformer(expectations, CLI::ignore_case));
  common(paper);
  subs.emplace_back(paper, Command::paper);

  CLI::App *exp = app.add_subcommand("export", "write a built-in family partition as a partition file");
  exp->add_option("family", cfg.family, "m27 or m3n")->required();
  exp->add_option("--n", cfg.n, "n for the m3n family (n >= 4)");
  exp->add_option("-o,--output", cfg.output_path, "output path (default: stdout)");
  exp->add_option("--cap", cfg.order_cap, "largest admissible group order");
  subs.emplace_back(exp, Command::exportp);

  std::vector<const char *> argv{"schurlab"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kInput;
  }

  for (const auto &[sub, command] : subs)
    if (sub->parsed())
      cfg.command = command;
  if ((expect_opt && expect_opt->count() > 0) || paper_expect->count() > 0)
    cfg.expect = expect_value;

  try {
    return dispatch(cfg, out, err);
  } catch (const NotClosedError &e) {
    const auto &w = e;
    err << "not an S-ring: " << e.what() << '\n';
    out << "witness: i=" << w.i << " j=" << w.j << " k=" << w.k << " x=" << w.x
        << " coeff_x=" << w.coeff_x << " y=" << w.y << " coeff_y=" << w.coeff_y << '\n';
    return kSemantic;
  } catch (const PartitionError &e) {
    err << "not an S-ring partition: " << e.what() << '\n';
    if (e.offending_class)
      out << "offending class: " << *e.offending_class << '\n';
    return kSemantic;
  } catch (const SemanticFailure &e) {
    err << "error: " << e.what() << '\n';
    return kSemantic;
  } catch (const InputError &e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const GroupError &e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument &e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  }
}

}  // namespace schurlab::cli
