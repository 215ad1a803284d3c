#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "bikei/birack.hpp"
#include "bikei/counting.hpp"
#include "bikei/diagram.hpp"
#include "bikei/errors.hpp"
#include "bikei/matrix_io.hpp"
#include "bikei/presentation.hpp"
#include "bikei/search.hpp"
#include "bikei/serialize.hpp"
#include "bikei/tsr.hpp"

namespace bikei::cli {

namespace {

struct BirackSource {
  std::string matrix_path;
  std::vector<long long> tsr;
  std::vector<std::string> constant_action;
};

struct DiagramSource {
  std::string braid;
  std::string gauss;
  std::string presentation_path;
  int strands = 0;
  bool oriented = false;
  std::vector<int> reverse;
};

struct Loaded {
  FiniteBirack birack;
  std::optional<TsrParams> tsr;
};

void add_birack_options(CLI::App* cmd, BirackSource& src) {
  auto* group = cmd->add_option_group("birack source");
  group->add_option("--matrix", src.matrix_path, "birack matrix file");
  group->add_option("--tsr", src.tsr, "(t,s,r)-birack on Z_n: N T S R")->expected(4);
  group->add_option("--constant-action", src.constant_action,
                    "constant action birack: SIGMA RHO as 1-based image lists, e.g. 2,1 1,2")
      ->expected(2);
  group->require_option(1);
}

void add_diagram_options(CLI::App* cmd, DiagramSource& src) {
  auto* group = cmd->add_option_group("diagram source");
  group->add_option("--braid", src.braid, "braid word, e.g. \"s1 S2 v1\"");
  group->add_option("--gauss", src.gauss, "signed Gauss code, e.g. \"O+1 U+2 / ...\"");
  group->add_option("--presentation", src.presentation_path, "presentation file");
  group->require_option(1);
  cmd->add_option("--strands", src.strands, "strand count for braid words");
  cmd->add_flag("--oriented", src.oriented, "treat the diagram as oriented");
  cmd->add_option("--reverse", src.reverse, "1-based components to traverse backwards");
}

Permutation parse_permutation(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  Permutation p;
  int v = 0;
  while (in >> v) p.push_back(v - 1);
  if (!in.eof()) throw InputError("malformed permutation '" + text + "'");
  if (!is_permutation(p)) throw InputError("'" + text + "' is not a permutation of 1..n");
  return p;
}

Loaded load_birack(const BirackSource& src) {
  if (!src.matrix_path.empty()) return {from_matrix(read_matrix_file(src.matrix_path)), {}};
  if (!src.tsr.empty()) {
    const TsrParams p = normalize_tsr({src.tsr[0], src.tsr[1], src.tsr[2], src.tsr[3]});
    return {make_tsr(p), p};
  }
  return {make_constant_action(parse_permutation(src.constant_action[0]),
                               parse_permutation(src.constant_action[1])),
          {}};
}

Presentation load_presentation(const DiagramSource& src) {
  if (!src.presentation_path.empty()) {
    if (!src.reverse.empty())
      throw InputError("--reverse applies to braid words and Gauss codes only");
    return read_presentation_file(src.presentation_path);
  }
  const LinkDiagram d =
      !src.braid.empty() || src.gauss.empty()
          ? parse_braid_word(src.braid, src.oriented,
                             src.strands > 0 ? std::optional<int>(src.strands) : std::nullopt)
          : parse_gauss_code(src.gauss, src.oriented);
  std::vector<int> reversed;
  for (int k : src.reverse) reversed.push_back(k - 1);
  return extract_presentation(d, reversed);
}

std::uint64_t resolve_budget(std::uint64_t flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("BIKEI_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("BIKEI_BUDGET is not an integer");
    }
  }
  return kDefaultBudget;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + std::to_string(p[i] + 1);
  return out;
}

nlohmann::json flags_json(const ClassificationFlags& f) {
  return {{"birack", f.is_birack},       {"involutory", f.is_involutory},
          {"rack", f.is_rack},           {"quandle", f.is_quandle},
          {"biquandle", f.is_biquandle}, {"bikei", f.is_bikei},
          {"kei", f.is_kei}};
}

void print_flags(std::ostream& out, const ClassificationFlags& f, std::optional<int> rank) {
  out << "birack: " << yes_no(f.is_birack) << ", involutory: " << yes_no(f.is_involutory)
      << ", bikei: " << yes_no(f.is_bikei);
  if (rank) out << ", N=" << *rank;
  out << "\n";
  out << "rack: " << yes_no(f.is_rack) << ", quandle: " << yes_no(f.is_quandle)
      << ", biquandle: " << yes_no(f.is_biquandle) << ", kei: " << yes_no(f.is_kei) << "\n";
}

int cmd_verify(const BirackSource& src, const std::string& format, std::ostream& out) {
  const Loaded loaded = load_birack(src);
  const FiniteBirack& b = loaded.birack;
  const AxiomReport report = verify_axioms(b);
  const ClassificationFlags flags = classify(b);
  const std::optional<int> rank = flags.is_birack ? std::optional<int>(b.rank()) : std::nullopt;
  const BirackMatrix m = to_matrix(b);

  if (format == "json") {
    nlohmann::json axioms = nlohmann::json::array();
    for (const auto& r : report.results) {
      nlohmann::json w = nlohmann::json::array();
      for (Element e : r.witness) w.push_back(e + 1);
      axioms.push_back({{"axiom", axiom_name(r.axiom)},
                        {"passed", r.passed},
                        {"evaluated", r.evaluated},
                        {"witness", w},
                        {"detail", r.detail}});
    }
    nlohmann::json j = {{"axioms", axioms}, {"flags", flags_json(flags)}, {"matrix", to_json(m)}};
    if (rank) {
      j["rank"] = *rank;
      std::vector<int> pi;
      for (Element e : b.kink_map()) pi.push_back(e + 1);
      j["kink_map"] = pi;
    }
    out << j.dump(2) << "\n";
  } else {
    print_flags(out, flags, rank);
    out << "axioms:\n";
    for (const auto& r : report.results) {
      out << "  " << axiom_name(r.axiom) << ": " << (r.passed ? "pass" : "FAIL");
      if (!r.detail.empty()) out << " (" << r.detail << ")";
      out << "\n";
    }
    if (rank) out << "kink map: " << format_permutation(b.kink_map()) << "\n";
    out << "matrix:\n" << format_matrix(m);
  }
  return report.all_passed() ? kSuccess : kAxiomFailure;
}

int cmd_classify(const BirackSource& src, const std::string& format, std::ostream& out) {
  const Loaded loaded = load_birack(src);
  const ClassificationFlags flags = classify(loaded.birack);
  const std::optional<int> rank =
      flags.is_birack ? std::optional<int>(loaded.birack.rank()) : std::nullopt;
  if (format == "json") {
    nlohmann::json j = flags_json(flags);
    if (rank) j["rank"] = *rank;
    out << j.dump(2) << "\n";
  } else {
    print_flags(out, flags, rank);
  }
  return flags.is_birack ? kSuccess : kAxiomFailure;
}

struct InvariantArgs {
  std::string enhancement = "none";
  std::string format = "text";
  bool raw_image = false;
  bool backtrack = false;
  std::uint64_t budget = kDefaultBudget;
};

int cmd_invariant(const BirackSource& bsrc, const DiagramSource& dsrc, const InvariantArgs& args,
                  std::ostream& out) {
  const Loaded loaded = load_birack(bsrc);
  const Presentation p = load_presentation(dsrc);
  CountOptions opts;
  opts.budget = args.budget;
  opts.close_image = !args.raw_image;
  if (!args.backtrack) opts.linear = loaded.tsr;

  const IntegralResult integral = phi_integral(p, loaded.birack, dsrc.oriented, opts);
  std::optional<EnhancementPolynomial> poly;
  CountOptions enh = opts;
  enh.linear.reset();
  if (args.enhancement == "image")
    poly = phi_image(p, loaded.birack, dsrc.oriented, enh);
  else if (args.enhancement == "writhe")
    poly = phi_writhe(p, loaded.birack, dsrc.oriented, opts);
  else if (args.enhancement == "colgroup")
    poly = phi_column_group(p, loaded.birack, dsrc.oriented, enh);

  if (args.format == "json") {
    out << to_json(integral, poly).dump(2) << "\n";
    return kSuccess;
  }
  out << "total: " << integral.total << "\n";
  out << "per framing:\n";
  for (const auto& f : integral.per_framing) {
    out << "  w=(";
    for (std::size_t i = 0; i < f.framing.size(); ++i) out << (i ? "," : "") << f.framing[i];
    out << "): " << f.count << "\n";
  }
  if (poly) out << args.enhancement << ": " << poly->to_string() << "\n";
  return kSuccess;
}

int cmd_present(const DiagramSource& src, std::ostream& out) {
  out << format_presentation(load_presentation(src));
  return kSuccess;
}

struct SearchArgs {
  std::int64_t tsr_all = 0;
  int tables = 0;
  int converse = 0;
  std::string pred = "birack";
  std::string format = "text";
  std::uint64_t budget = kDefaultBudget;
};

int cmd_search(const SearchArgs& args, std::ostream& out) {
  const bool json = args.format == "json";
  if (args.tsr_all > 0) {
    const auto found = search_tsr(args.tsr_all);
    std::size_t involutory = 0;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : found) {
      involutory += c.involutory;
      if (json) {
        arr.push_back({{"n", c.params.n},
                       {"t", c.params.t},
                       {"s", c.params.s},
                       {"r", c.params.r},
                       {"involutory", c.involutory},
                       {"rank", c.rank}});
      } else {
        out << "t=" << c.params.t << " s=" << c.params.s << " r=" << c.params.r
            << " involutory=" << yes_no(c.involutory) << " N=" << c.rank << "\n";
      }
    }
    if (json)
      out << arr.dump(2) << "\n";
    else
      out << "summary: n=" << args.tsr_all << " tsr=" << found.size()
          << " involutory=" << involutory << "\n";
    return kSuccess;
  }
  if (args.converse > 0) {
    const ConverseReport r = column_involution_converse(args.converse, args.budget);
    if (json) {
      nlohmann::json w = nlohmann::json::array();
      for (const auto& b : r.witnesses) w.push_back(to_json(to_matrix(b)));
      out << nlohmann::json{{"n", r.n},
                            {"involutory", r.involutory},
                            {"column_involutive", r.column_involutive},
                            {"inclusion_holds", r.inclusion_holds},
                            {"witnesses", w}}
                 .dump(2)
          << "\n";
    } else {
      for (const auto& b : r.witnesses) out << format_matrix(to_matrix(b)) << "\n";
      out << "summary: n=" << r.n << " involutory=" << r.involutory
          << " column-involutive=" << r.column_involutive
          << " column-involutive-not-involutory=" << r.witnesses.size()
          << " inclusion=" << (r.inclusion_holds ? "holds" : "FAILS") << "\n";
    }
    return kSuccess;
  }
  const SearchPredicate pred = SearchPredicate::parse(args.pred);
  const auto result = enumerate_biracks(args.tables, pred, args.budget);
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : result.structures) arr.push_back(to_json(to_matrix(b)));
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& b : result.structures) out << format_matrix(to_matrix(b)) << "\n";
    out << "summary: n=" << args.tables << " pred=" << pred.describe()
        << " found=" << result.structures.size() << " nodes=" << result.nodes << "\n";
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite involutory biracks and their link counting invariants", "bikei"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  BirackSource verify_src, classify_src, invariant_src;
  DiagramSource invariant_diagram, present_diagram;
  std::string verify_format = "text", classify_format = "text";
  InvariantArgs inv;
  SearchArgs search;

  auto* verify = app.add_subcommand("verify", "check the birack axioms and print the matrix");
  add_birack_options(verify, verify_src);
  verify->add_option("--format", verify_format)->check(CLI::IsMember(formats));

  auto* classify_cmd = app.add_subcommand("classify", "print classification flags");
  add_birack_options(classify_cmd, classify_src);
  classify_cmd->add_option("--format", classify_format)->check(CLI::IsMember(formats));

  auto* invariant = app.add_subcommand("invariant", "compute the counting invariant");
  add_birack_options(invariant, invariant_src);
  add_diagram_options(invariant, invariant_diagram);
  invariant->add_option("--enhancement", inv.enhancement)
      ->check(CLI::IsMember({"none", "image", "writhe", "colgroup"}));
  invariant->add_flag("--raw-image", inv.raw_image, "image enhancement uses the raw label set");
  invariant->add_flag("--backtrack", inv.backtrack, "never use the linear solver");
  invariant->add_option("--format", inv.format)->check(CLI::IsMember(formats));
  auto* inv_budget = invariant->add_option("--budget", inv.budget, "search node budget");

  auto* present = app.add_subcommand("present", "print the extracted presentation");
  add_diagram_options(present, present_diagram);

  auto* search_cmd = app.add_subcommand("search", "enumerate small biracks");
  auto* modes = search_cmd->add_option_group("mode");
  modes->add_option("--tsr-all", search.tsr_all, "all (t,s,r)-biracks over Z_n");
  modes->add_option("--tables", search.tables, "all tables of order n matching --pred");
  modes->add_option("--converse", search.converse,
                    "compare column-involutive and involutory biracks of order n");
  modes->require_option(1);
  search_cmd->add_option("--pred", search.pred, "predicate list, e.g. involutory or yb,cols");
  search_cmd->add_option("--format", search.format)->check(CLI::IsMember(formats));
  auto* search_budget = search_cmd->add_option("--budget", search.budget, "search node budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*verify) return cmd_verify(verify_src, verify_format, out);
    if (*classify_cmd) return cmd_classify(classify_src, classify_format, out);
    if (*invariant) {
      inv.budget = resolve_budget(inv.budget, inv_budget->count() > 0);
      return cmd_invariant(invariant_src, invariant_diagram, inv, out);
    }
    if (*present) return cmd_present(present_diagram, out);
    if (*search_cmd) {
      search.budget = resolve_budget(search.budget, search_budget->count() > 0);
      return cmd_search(search, out);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return kSemanticError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  }
  return kInputError;
}

}  // namespace bikei::cli
