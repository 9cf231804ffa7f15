#include "cli.hpp"

#include "rlcode/channel.hpp"
#include "rlcode/codes.hpp"
#include "rlcode/errors.hpp"
#include "rlcode/fuzzy.hpp"
#include "rlcode/fuzzy_lattice.hpp"
#include "rlcode/ideals.hpp"
#include "rlcode/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>

namespace rlcode::cli {
namespace {

constexpr const char* kFormats = R"(File formats ('#' starts a comment line; blank lines are ignored):

  Algebra file (.wal for Wajsberg, .rl for residuated lattices). `elements:`
  comes first; each table is the next n lines, row x column y holding x o y.
    elements: 0 a b 1
    kind: wajsberg
    circ:
    1 1 1 1
    b 1 b 1
    a a 1 1
    0 a b 1
    neg: 1 b a 0
  A residuated file uses `kind: residuated`, the tables join:, meet:, prod:,
  impl:, and the lines `bottom: 0` and `top: 1`.

  Fuzzy file: one `element = grade` line per element, grades in [0,1] as
  integers or p/q.
    0 = 0
    a = 1/2
    b = 1/3
    1 = 0

  Matrix file: one row of 0/1 characters per line.
    # rows=2 cols=4
    1100
    1010

Exit status: 0 success, 1 user error (parse, precondition, failed axioms),
2 internal invariant breach.
)";

struct Loaded {
  AlgebraDocument doc;
  LoadedAlgebra algebra;
};

Loaded load_algebra(const std::string& path) {
  auto doc = parse_algebra(read_text_file(path));
  auto algebra = build_algebra(doc);
  return {std::move(doc), std::move(algebra)};
}

const WajsbergAlgebra& require_wajsberg(const Loaded& a, const std::string& what) {
  if (!a.algebra.wajsberg) throw PreconditionError(what + " needs a Wajsberg algebra");
  return *a.algebra.wajsberg;
}

BitMatrix load_matrix(const std::string& path) { return parse_matrix(read_text_file(path)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Subset parse_member_list(const ResiduatedLattice& l, const std::string& text) {
  Subset s(l.size());
  for (const auto& name : split(text, ',')) {
    const auto e = l.find(name);
    if (!e) throw ParseError("unknown element '" + name + "' in '" + text + "'");
    s.insert(*e);
  }
  if (s.empty()) throw ParseError("empty element list");
  return s;
}

ValueGrid parse_grid(const std::string& text) {
  std::vector<Grade> values;
  for (const auto& item : split(text, ',')) values.push_back(parse_grade(item));
  return ValueGrid(std::move(values));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_ideals(std::ostream& out, const ResiduatedLattice& l, const std::vector<IdealSet>& ideals, bool bits) {
  for (const auto& i : ideals) out << (bits ? subset_bits(i.members()) : format_subset(l.names(), i.members())) << '\n';
}

void print_code(std::ostream& out, const BinaryCode& code) {
  out << serialize_matrix(code.generator()) << format_params(code.params()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ideals, fuzzy ideals and binary codes over finite residuated lattices", "rlcode"};
  app.footer(kFormats);
  app.require_subcommand(1);

  // validate
  std::string validate_file;
  auto* validate = app.add_subcommand("validate", "Check the axioms of the declared kind; list violations");
  validate->add_option("file", validate_file, "Algebra file")->required();

  // ideals
  std::string ideals_file;
  bool ideals_proper = false, ideals_prime = false, ideals_bits = false;
  std::string prime_reading = "as-written";
  auto* ideals = app.add_subcommand("ideals", "List ideals in canonical order (cardinality, then bit pattern)");
  ideals->add_option("file", ideals_file, "Algebra file")->required();
  ideals->add_flag("--proper", ideals_proper, "Omit {0} and the whole algebra");
  ideals->add_flag("--prime", ideals_prime, "Keep prime ideals only (Wajsberg algebras)");
  ideals->add_option("--reading", prime_reading, "Prime-ideal reading: as-written or conventional")
      ->check(CLI::IsMember({"as-written", "conventional"}));
  ideals->add_flag("--bits", ideals_bits, "Print indicator bit strings instead of element sets");

  // fuzzy
  auto* fuzzy = app.add_subcommand("fuzzy", "Fuzzy-ideal operations");
  fuzzy->require_subcommand(1);
  std::string fz_algebra, fz_file, fz_file2, fz_grid;
  bool laws_tsv = false;
  auto* check = fuzzy->add_subcommand("check", "Verdicts of every fuzzy-ideal characterization");
  check->add_option("algebra", fz_algebra, "Algebra file")->required();
  check->add_option("fuzzy", fz_file, "Fuzzy file")->required();
  auto* close = fuzzy->add_subcommand("close", "Least fuzzy ideal containing the fuzzy subset");
  close->add_option("algebra", fz_algebra, "Algebra file")->required();
  close->add_option("fuzzy", fz_file, "Fuzzy file")->required();
  auto* arrow = fuzzy->add_subcommand("arrow", "Relative pseudocomplement mu1 ~> mu2 of two fuzzy ideals");
  arrow->add_option("algebra", fz_algebra, "Algebra file")->required();
  arrow->add_option("mu1", fz_file, "Fuzzy file")->required();
  arrow->add_option("mu2", fz_file2, "Fuzzy file")->required();
  arrow->add_option("--grid", fz_grid, "Grade grid, e.g. 0,1/2,1 (default: 0, 1 and both images)");
  auto* laws = fuzzy->add_subcommand("laws", "Check the Heyting laws on all grid-valued fuzzy ideals");
  laws->add_option("algebra", fz_algebra, "Algebra file")->required();
  laws->add_option("--grid", fz_grid, "Grade grid, e.g. 0,1/2,1")->required();
  laws->add_flag("--tsv", laws_tsv, "Tab-separated law, status, witness");

  // code
  auto* code = app.add_subcommand("code", "Binary codes from ideals");
  code->require_subcommand(1);
  std::string code_algebra, code_matrix, code_matrix2;
  std::vector<std::string> code_ideals;
  std::size_t code_order = 0;
  bool code_header = false;
  auto* from_ideals = code->add_subcommand("from-ideals", "Generator matrix of ideal codewords and [n,k,d]_2");
  from_ideals->add_option("algebra", code_algebra, "Algebra file")->required();
  from_ideals->add_option("--ideals", code_ideals,
                          "Ideal as comma-separated elements, repeatable (default: all proper ideals)");
  auto* hadamard = code->add_subcommand("hadamard", "Hadamard code from the Boolean algebra of order 2^n");
  hadamard->add_option("--order", code_order, "n, between 2 and 6")->required();
  auto* construct = code->add_subcommand("construct", "Boolean algebra and ideals reproducing a Boolean-form matrix");
  construct->add_option("--matrix", code_matrix, "Matrix file")->required();
  auto* params = code->add_subcommand("params", "[n,k,d]_2 and rate of the row space");
  params->add_option("--matrix", code_matrix, "Matrix file")->required();
  auto* boolean_form = code->add_subcommand("boolean-form", "The n x 2^n Boolean-form matrix");
  boolean_form->add_option("--order", code_order, "n, between 2 and 24")->required();
  boolean_form->add_flag("--header", code_header, "Prefix a `# rows=k cols=n` line");
  auto* roweq = code->add_subcommand("roweq", "Whether two matrices have the same row space");
  roweq->add_option("m1", code_matrix, "Matrix file")->required();
  roweq->add_option("m2", code_matrix2, "Matrix file")->required();

  // simulate
  std::string sim_matrix, sim_p;
  std::uint64_t sim_trials = 1000, sim_seed = 0;
  std::size_t sim_weight = 0;
  bool sim_exhaustive = false;
  auto* simulate = app.add_subcommand("simulate", "Binary symmetric channel with minimum-distance decoding");
  simulate->add_option("--matrix", sim_matrix, "Generator matrix file")->required();
  simulate->add_option("--p", sim_p, "Flip probability p/q in [0,1)");
  simulate->add_option("--trials", sim_trials, "Number of random messages")->capture_default_str();
  simulate->add_option("--seed", sim_seed, "Trial t uses seed + t")->capture_default_str();
  auto* exhaustive_opt =
      simulate->add_option("--exhaustive", sim_weight, "Instead: every error pattern up to this weight");
  exhaustive_opt->excludes(simulate->get_option("--p"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? 0 : 1;
  }
  sim_exhaustive = exhaustive_opt->count() > 0;

  try {
    if (validate->parsed()) {
      const auto doc = parse_algebra(read_text_file(validate_file));
      ValidationReport report;
      std::string kind;
      if (const auto* w = std::get_if<WajsbergTables>(&doc)) {
        kind = "wajsberg";
        report = validate_wajsberg(*w);
        if (report.ok()) report = validate_residuated_lattice(residuated_tables_of(*w));
      } else {
        kind = "residuated";
        report = validate_residuated_lattice(std::get<ResiduatedTables>(doc));
      }
      const auto& names = std::visit([](const auto& t) -> const std::vector<std::string>& { return t.names; }, doc);
      if (report.ok()) {
        out << "ok " << kind << " order=" << names.size() << '\n';
        return 0;
      }
      out << "invalid " << kind << '\n' << report.describe(names);
      return 1;
    }

    if (ideals->parsed()) {
      const auto a = load_algebra(ideals_file);
      const auto& l = a.algebra.lattice;
      auto list = enumerate_ideals(l, ideals_proper ? IdealScope::proper : IdealScope::all);
      if (ideals_prime) {
        const auto& w = require_wajsberg(a, "--prime");
        const auto reading = prime_reading == "conventional" ? PrimeReading::conventional : PrimeReading::as_written;
        std::erase_if(list, [&](const IdealSet& i) { return !is_prime_ideal(w, i, reading); });
      }
      print_ideals(out, l, list, ideals_bits);
      return 0;
    }

    if (fuzzy->parsed()) {
      const auto a = load_algebra(fz_algebra);
      const auto& l = a.algebra.lattice;
      if (laws->parsed()) {
        const auto report = heyting_axioms_check(l, parse_grid(fz_grid));
        out << (laws_tsv ? report.tsv() : report.text());
        return report.ok() ? 0 : 1;
      }
      const auto mu = parse_fuzzy(l, read_text_file(fz_file));
      if (check->parsed()) {
        const auto v = fuzzy_ideal_verdicts(l, mu);
        out << "definition\t" << yes_no(v.definition) << '\n'
            << "split-product\t" << yes_no(v.split_product) << '\n'
            << "split-implication\t" << yes_no(v.split_implication) << '\n'
            << "boxplus\t" << yes_no(v.boxplus) << '\n'
            << "bound-unit-equation\t" << yes_no(v.bound_unit_equation) << '\n'
            << "bound-order\t" << yes_no(v.bound_order) << '\n';
        if (!v.agree()) throw InvariantError("fuzzy-ideal characterizations disagree on " + format_grades(mu));
        out << "fuzzy-ideal\t" << yes_no(v.definition) << '\n';
        return 0;
      }
      if (close->parsed()) {
        out << serialize_fuzzy(l, fuzzy_closure(l, mu));
        return 0;
      }
      const auto mu2 = parse_fuzzy(l, read_text_file(fz_file2));
      const auto result = fz_grid.empty() ? heyting_arrow(l, mu, mu2) : heyting_arrow(l, mu, mu2, parse_grid(fz_grid));
      out << serialize_fuzzy(l, result);
      return 0;
    }

    if (from_ideals->parsed()) {
      const auto a = load_algebra(code_algebra);
      const auto& l = a.algebra.lattice;
      std::vector<IdealSet> chosen;
      if (code_ideals.empty()) {
        chosen = generator_order(enumerate_ideals(l, IdealScope::proper));
        if (chosen.empty()) throw PreconditionError("the algebra has no proper ideals");
      } else {
        for (const auto& text : code_ideals) chosen.push_back(IdealSet::from(l, parse_member_list(l, text)));
      }
      print_code(out, generator_matrix(chosen));
      return 0;
    }

    if (hadamard->parsed()) {
      const auto h = hadamard_from_boolean(code_order);
      print_ideals(out, h.algebra.lattice(), h.ideals, false);
      print_code(out, h.code);
      out << "hadamard-type\t" << yes_no(is_hadamard_type(h.code.params())) << '\n'
          << "columns-all-bitvectors\t" << yes_no(columns_all_bitvectors(h.code.generator())) << '\n'
          << "row-equivalent-boolean-form\t"
          << yes_no(row_equivalent(h.code.generator(), boolean_form_matrix(code_order))) << '\n';
      return 0;
    }

    if (construct->parsed()) {
      const auto m = load_matrix(code_matrix);
      const auto b = boolean_from_matrix(m);
      out << serialize_algebra(AlgebraDocument(b.algebra.tables()));
      for (const auto& i : b.ideals)
        out << "# ideal " << format_subset(b.algebra.names(), i.members()) << ' ' << subset_bits(i.members())
            << '\n';
      return 0;
    }

    if (params->parsed()) {
      out << format_params(code_params(load_matrix(code_matrix))) << '\n';
      return 0;
    }

    if (boolean_form->parsed()) {
      out << serialize_matrix(boolean_form_matrix(code_order), code_header);
      return 0;
    }

    if (roweq->parsed()) {
      out << yes_no(row_equivalent(load_matrix(code_matrix), load_matrix(code_matrix2))) << '\n';
      return 0;
    }

    if (simulate->parsed()) {
      const BinaryCode c(load_matrix(sim_matrix));
      if (sim_exhaustive) {
        const auto r = exhaustive_correction(c, sim_weight);
        out << "max_weight\tpatterns\tmessages\tcorrected\tambiguous\tmiscorrected\n"
            << r.max_weight << '\t' << r.patterns << '\t' << r.messages << '\t' << r.corrected << '\t'
            << r.ambiguous << '\t' << r.miscorrected << '\n';
        return 0;
      }
      if (sim_p.empty()) throw PreconditionError("simulate needs --p or --exhaustive");
      out << run_channel(c, {parse_grade(sim_p), sim_trials, sim_seed}).tsv();
      return 0;
    }
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 1;
}

}  // namespace rlcode::cli
