#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "monadic/nondet.hpp"
#include "monadic/state_array.hpp"
#include "monadic/suites.hpp"
#include "monadic/transformers.hpp"
#include "monadic/typed_store.hpp"

namespace monadic::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class N>
N parse_number(const std::string& text, const std::string& what) {
  N value{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) throw UsageError("malformed " + what + ": '" + text + "'");
  return value;
}

/// "2,3,0" -> {2, 3, 0}; the empty string is the empty list.
template <class N>
std::vector<N> parse_list(const std::string& text) {
  std::vector<N> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_number<N>(item, "list element"));
  if (text.back() == ',') throw UsageError("malformed list: trailing comma in '" + text + "'");
  return out;
}

std::string show_option(const OptionVal<Nat>& v) { return v ? "Ret " + show(*v) : std::string("Fail"); }

int demo_fastprod(const std::string& list, std::ostream& out) {
  const auto s = parse_list<Nat>(list);
  const auto w = work(s);
  const auto f = fastprod(s);
  const Nat p = product(s);
  out << "input:    " << show(s) << "\n";
  out << "work:     " << show_option(w) << "\n";
  out << "fastprod: " << show_option(f) << "\n";
  out << "product:  " << p << "\n";
  const bool ok = f == OptionVal<Nat>(p);
  out << "fastprodE: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

int demo_qperm(const std::string& list, std::ostream& out) {
  const auto s = parse_list<int>(list);
  const auto perms = qperm(powerset, s);
  const auto sorted = slowsort(powerset, s);
  out << "input: " << show(s) << "\n";
  out << "qperm: " << perms.size() << " outcome(s)\n";
  for (const auto& p : perms) out << "  " << show(p) << "\n";
  out << "slowsort: " << powerset.show(sorted) << "\n";
  auto expected = s;
  std::sort(expected.begin(), expected.end());
  const bool ok = sorted == OutcomeSet<std::vector<int>>({expected});
  out << "slowsort = {sort s}: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

int demo_quicksort(const std::string& list, std::size_t offset, std::ostream& out) {
  const auto s = parse_list<int>(list);
  const auto am = make_pure_array(0);
  const auto init = am.empty_store();
  const auto prog = then(am, write_list(am, offset, s), iqsort(am, offset, s.size()));
  const auto written = am.run(write_list(am, offset, s), init).second;
  const auto final_store = am.run(prog, init).second;
  auto expected = s;
  std::sort(expected.begin(), expected.end());
  out << "input:   " << show(s) << " at offset " << offset << "\n";
  out << "written: " << show(written) << "\n";
  out << "sorted:  " << show(final_store) << "\n";
  const bool ok = final_store.segment(offset, s.size()) == expected &&
                  final_store == am.run(write_list(am, offset, expected), init).second;
  out << "iqsort: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

Value parse_value(const MlType& t, const std::string& text) {
  if (t == MlType::ml_bool()) {
    if (text == "true") return true;
    if (text == "false") return false;
    throw UsageError("malformed bool: '" + text + "'");
  }
  return parse_number<Nat>(text, "nat");
}

int demo_cycle(const std::string& type, const std::string& a_text, const std::string& b_text, std::ostream& out) {
  MlType t = MlType::ml_bool();
  if (type == "nat") {
    t = MlType::ml_nat();
  } else if (type != "bool") {
    throw UsageError("unsupported cycle type '" + type + "' (expected bool or nat)");
  }
  const Value a = a_text.empty() ? value_for(t, 0) : parse_value(t, a_text);
  const Value b = b_text.empty() ? value_for(t, 1) : parse_value(t, b_text);
  const auto ts = make_typed_store();
  const auto result = ts.run(cycle(ts, t, a, b), TypedStore{});
  out << "type: " << show(t) << "  a = " << show(a) << "  b = " << show(b) << "\n";
  if (!result) {
    out << "cycle: Fail\n";
    return 1;
  }
  out << "cycle returns " << show(result->first) << "\n";
  out << "store (" << result->second.size() << " bindings):\n";
  for (std::size_t k = 0; k < result->second.size(); ++k) out << "  " << k << ": " << show(result->second[k]) << "\n";
  auto initial = store_probes();
  const bool ok = check_rtl_tl_self(ts, t, a, b, initial);
  out << "rtl_tl_self: " << (ok ? "OK" : "FAILED") << " (" << initial.size() << " initial stores)\n";
  return ok ? 0 : 1;
}

int run_refine(const std::string& name, std::size_t max_len, int alphabet, std::size_t offsets, std::ostream& out) {
  const auto r = name == "iqsort-slowsort" ? check_iqsort_refines_slowsort(max_len, alphabet, offsets)
                                           : check_swap_rcons_suite(max_len, alphabet, offsets);
  const std::size_t lists = all_lists(max_len, alphabet).size();
  const bool iq = name == "iqsort-slowsort";
  const std::size_t inputs = iq ? lists : lists * lists * static_cast<std::size_t>(alphabet);
  out << name << ": " << (r.holds ? "holds" : "fails") << " (" << inputs << (iq ? " list" : " (ys, zs, x) triple")
      << (inputs == 1 ? "" : "s") << ", " << r.instances << " instance" << (r.instances == 1 ? "" : "s")
      << " over offsets and stores)\n";
  if (r.witness) out << "witness: " << *r.witness << "\n";
  return r.holds ? 0 : 1;
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names{"fastprod", "qperm", "quicksort", "cycle"};
  return names;
}

const std::vector<std::string>& refine_names() {
  static const std::vector<std::string> names{"iqsort-slowsort", "swap-rcons"};
  return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Executable monadic equational reasoning: law suites, demos and refinement checks", "monadic"};
  app.require_subcommand(1);

  auto* laws_cmd = app.add_subcommand("laws", "Check a law suite");
  std::string suite;
  CheckConfig cfg;
  std::string format = "text";
  unsigned jobs = 1;
  laws_cmd->add_option("--suite", suite, "Suite name (functor, monad, ..., typed-store, all)")->required();
  laws_cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  laws_cmd->add_option("--exhaustive-bound", cfg.exhaustive_bound, "Enumeration bound")->capture_default_str();
  laws_cmd->add_option("--trials", cfg.random_trials, "Random trials per law")->capture_default_str();
  laws_cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  laws_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 64u))->capture_default_str();

  auto* demo_cmd = app.add_subcommand("demo", "Run a worked example");
  std::string demo;
  std::string list;
  bool list_given = false;
  std::size_t offset = 0;
  std::string type = "bool";
  std::string a_text;
  std::string b_text;
  demo_cmd->add_option("name", demo, "fastprod, qperm, quicksort or cycle")->required();
  auto* list_opt = demo_cmd->add_option("--list", list, "Comma-separated naturals");
  demo_cmd->add_option("--offset", offset, "Array offset (quicksort)")->capture_default_str();
  demo_cmd->add_option("--type", type, "Cell type for cycle: bool or nat")->capture_default_str();
  demo_cmd->add_option("--a", a_text, "First cycle value");
  demo_cmd->add_option("--b", b_text, "Second cycle value");

  auto* refine_cmd = app.add_subcommand("refine", "Check a refinement by outcome-set inclusion");
  std::string check;
  std::size_t max_len = 0;
  int alphabet = 3;
  std::size_t offsets = 3;
  refine_cmd->add_option("name", check, "iqsort-slowsort or swap-rcons")->required();
  auto* max_len_opt = refine_cmd->add_option("--max-len", max_len, "Maximum list length (default 4 for iqsort, 3 for swap)");
  refine_cmd->add_option("--alphabet", alphabet, "Elements range over 0..alphabet-1")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  refine_cmd->add_option("--offsets", offsets, "Offsets range over 0..offsets-1")
      ->check(CLI::Range(std::size_t{1}, std::size_t{16}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  list_given = list_opt->count() > 0;

  try {
    if (*laws_cmd) {
      if (!is_suite(suite)) throw UnknownSuite(suite);
      const auto reports = run_suite(suite, cfg, jobs);
      out << (format == "json" ? render_json(reports) : render_text(reports));
      return all_passed(reports) ? 0 : 1;
    }
    if (*demo_cmd) {
      if (demo == "fastprod") return demo_fastprod(list_given ? list : "2,3", out);
      if (demo == "qperm") return demo_qperm(list_given ? list : "1,2", out);
      if (demo == "quicksort") return demo_quicksort(list_given ? list : "3,1,2", offset, out);
      if (demo == "cycle") return demo_cycle(type, a_text, b_text, out);
      err << "unknown demo '" << demo << "'\n";
      return 2;
    }
    if (std::find(refine_names().begin(), refine_names().end(), check) == refine_names().end()) {
      err << "unknown check '" << check << "'\n";
      return 2;
    }
    if (max_len_opt->count() == 0) max_len = check == "swap-rcons" ? 3 : 4;
    return run_refine(check, max_len, alphabet, offsets, out);
  } catch (const UnknownSuite& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace monadic::cli
