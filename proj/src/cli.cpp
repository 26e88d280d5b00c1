#include "abelian/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <future>
#include <optional>
#include <sstream>
#include <thread>

#include "abelian/builtins.hpp"
#include "abelian/concrete_group.hpp"
#include "abelian/counting.hpp"
#include "abelian/errors.hpp"
#include "abelian/group_type.hpp"
#include "abelian/lattice.hpp"
#include "abelian/symgen.hpp"
#include "abelian/verify.hpp"

namespace abelian {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OutputRecord {
  std::string group;
  std::string function;
  std::string value;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string json_line(const OutputRecord& r) {
  nlohmann::json j;
  j["group"] = r.group;
  j["function"] = r.function;
  j["value"] = r.value;
  return j.dump();
}

// csv and json-lines stream record by record; aligned needs every record to
// size its columns.
class RecordWriter {
 public:
  RecordWriter(std::string format, std::ostream& out) : format_(std::move(format)), out_(out) {
    if (format_ == "csv") out_ << "group,function,value\n";
  }

  void write(const OutputRecord& r) {
    if (format_ == "csv") {
      out_ << csv_field(r.group) << ',' << csv_field(r.function) << ',' << csv_field(r.value) << '\n';
    } else if (format_ == "json-lines") {
      out_ << json_line(r) << '\n';
    } else {
      pending_.push_back(r);
    }
  }

  void finish() {
    if (format_ != "aligned") return;
    std::vector<OutputRecord> rows{{"group", "function", "value"}};
    rows.insert(rows.end(), pending_.begin(), pending_.end());
    std::size_t wg = 0, wf = 0, wv = 0;
    for (const auto& r : rows) {
      wg = std::max(wg, r.group.size());
      wf = std::max(wf, r.function.size());
      wv = std::max(wv, r.value.size());
    }
    for (const auto& r : rows) {
      out_ << r.group << std::string(wg - r.group.size() + 2, ' ') << r.function
           << std::string(wf - r.function.size() + 2, ' ') << std::string(wv - r.value.size(), ' ')
           << r.value << '\n';
    }
    pending_.clear();
  }

 private:
  std::string format_;
  std::ostream& out_;
  std::vector<OutputRecord> pending_;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::int64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
    throw UsageError("bad " + what + " '" + s + "'");
  }
  return v;
}

AbelianFunction lookup_function(const std::string& name) {
  auto f = builtins::by_name(name);
  if (!f) {
    std::string known;
    for (const auto& n : builtins::names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown function '" + name + "' (known: " + known + ")");
  }
  return *f;
}

std::vector<AbelianFunction> lookup_functions(const std::string& list) {
  std::vector<AbelianFunction> fs;
  for (const auto& name : split(list, ',')) fs.push_back(lookup_function(name));
  return fs;
}

std::string render_profile(const OrderProfile& p) {
  std::string s;
  for (const auto& [order, count] : p) {
    s += (s.empty() ? "" : " ") + std::to_string(order) + ":" + std::to_string(count);
  }
  return s;
}

// Moduli exactly as written; coordinates of symgen elements refer to them.
ConcreteGroup parse_presentation(const std::string& text) {
  std::vector<std::int64_t> moduli;
  for (const auto& part : split(text, ',')) {
    const auto m = parse_int(part, "modulus");
    if (m < 2) throw UsageError("symgen needs every modulus >= 2, got '" + part + "'");
    moduli.push_back(m);
  }
  return ConcreteGroup(std::move(moduli));
}

Element parse_element(const ConcreteGroup& g, const std::string& text) {
  Element e;
  for (const auto& part : split(text, ',')) e.push_back(parse_int(part, "coordinate"));
  if (!g.is_valid(e)) throw UsageError("'" + text + "' is not an element of " + g.type().to_string());
  return e;
}

std::vector<Transposition> parse_transpositions(const ConcreteGroup& g, const std::string& text) {
  std::vector<Transposition> taus;
  if (text.empty()) return taus;
  for (const auto& pair : split(text, ';')) {
    const auto arrow = pair.find('>');
    if (arrow == std::string::npos) throw UsageError("transposition '" + pair + "' is not of the form x>y");
    taus.push_back({parse_element(g, pair.substr(0, arrow)), parse_element(g, pair.substr(arrow + 1))});
    if (taus.back().x == taus.back().y) throw UsageError("transposition '" + pair + "' has equal endpoints");
  }
  return taus;
}

GroupType parse_group_arg(const std::string& text) { return parse_group(text); }

// Computes one type's records on a worker; results come back in type order.
void emit_table(const std::vector<AbelianFunction>& fs, std::int64_t max_order, int jobs, RecordWriter& writer) {
  const auto types = types_up_to(max_order);
  auto row = [&](const GroupType& g) {
    std::vector<OutputRecord> out;
    for (const auto& f : fs) out.push_back({g.to_string(), f.name(), to_string(f(g))});
    return out;
  };
  if (jobs <= 1) {
    for (const auto& g : types) {
      for (const auto& r : row(g)) writer.write(r);
    }
    return;
  }
  std::vector<std::promise<std::vector<OutputRecord>>> slots(types.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < types.size(); i = next++) {
        try {
          slots[i].set_value(row(types[i]));
        } catch (...) {
          slots[i].set_exception(std::current_exception());
        }
      }
    });
  }
  std::exception_ptr failure;
  for (auto& slot : slots) {
    auto fut = slot.get_future();
    if (failure) continue;
    try {
      for (const auto& r : fut.get()) writer.write(r);
    } catch (...) {
      failure = std::current_exception();
    }
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact abelian-function algebra, counting formulas and brute-force checks", "abelian"};
  app.fallthrough();
  app.require_subcommand(1);

  std::int64_t max_lattice = lattice_bound();
  int jobs = 1;
  std::string format;
  app.add_option("--max-lattice-order", max_lattice, "Largest group order whose subgroup lattice may be enumerated")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", jobs, "Worker threads for table")->check(CLI::Range(1, 256));
  auto* format_opt = app.add_option("--format", format, "csv, json-lines or aligned")
                         ->check(CLI::IsMember({"csv", "json-lines", "aligned"}));

  std::string fn_arg, group_arg, group_b_arg, extra_arg, suite_arg;
  std::int64_t bound_arg = 0;

  auto* eval = app.add_subcommand("eval", "Evaluate a function on a group, e.g. eval mu 2,2");
  eval->add_option("function", fn_arg)->required();
  eval->add_option("group", group_arg, "Comma-separated cyclic orders; 1 is the trivial group")->required();

  auto* table = app.add_subcommand("table", "Tabulate functions over all types up to an order");
  table->add_option("functions", fn_arg, "Comma-separated function names")->required();
  table->add_option("max_order", bound_arg)->required()->check(CLI::NonNegativeNumber);
  auto* table_format = table->add_option("format", extra_arg)->check(CLI::IsMember({"csv", "json-lines", "aligned"}));

  std::vector<CLI::App*> morphisms;
  for (const char* name : {"hom", "mono", "epi"}) {
    const std::string kind = std::string(name) == "hom" ? "homo" : name;
    auto* sub = app.add_subcommand(name, "Number of " + kind + "morphisms A -> B");
    sub->add_option("A", group_arg)->required();
    sub->add_option("B", group_b_arg)->required();
    morphisms.push_back(sub);
  }
  auto* aut = app.add_subcommand("aut", "Number of automorphisms of B");
  aut->add_option("B", group_arg)->required();
  auto* subcount = app.add_subcommand("subcount", "Number of subgroups of A isomorphic to B");
  subcount->add_option("B", group_arg)->required();
  subcount->add_option("A", group_b_arg)->required();

  auto* profile = app.add_subcommand("profile", "Element-order and subgroup-order profiles");
  profile->add_option("group", group_arg)->required();

  auto* conjecture = app.add_subcommand("conjecture", "Search for equal subgroup-order profiles of distinct types");
  conjecture->add_option("max_order", bound_arg)->required()->check(CLI::NonNegativeNumber);

  auto* symgen = app.add_subcommand("symgen", "Do translations and transpositions generate Sym(G)?");
  symgen->add_option("group", group_arg, "Moduli as written; coordinates refer to them")->required();
  symgen->add_option("transpositions", extra_arg, "x>y pairs separated by ';', e.g. 0,1>1,0;0,0>1,1")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "Compare formulas with brute-force oracles");
  std::string suites;
  for (const auto& s : verify::suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  verify_cmd->add_option("suite", suite_arg, suites)->required();
  verify_cmd->add_option("bound", bound_arg, "Largest group order swept")->required()->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    ScopedLatticeBound scoped(max_lattice);
    if (eval->parsed()) {
      const auto f = lookup_function(fn_arg);
      const auto g = parse_group_arg(group_arg);
      const OutputRecord record{g.to_string(), f.name(), to_string(f(g))};
      if (format_opt->count() == 0) {
        out << record.value << '\n';
      } else {
        RecordWriter writer(format, out);
        writer.write(record);
        writer.finish();
      }
    } else if (table->parsed()) {
      if (table_format->count() && format_opt->count() && extra_arg != format) {
        throw UsageError("conflicting formats '" + extra_arg + "' and '" + format + "'");
      }
      const std::string fmt = table_format->count() ? extra_arg : format_opt->count() ? format : "aligned";
      const auto fs = lookup_functions(fn_arg);
      RecordWriter writer(fmt, out);
      emit_table(fs, bound_arg, jobs, writer);
      writer.finish();
    } else if (auto hit = std::find_if(morphisms.begin(), morphisms.end(), [](auto* s) { return s->parsed(); });
               hit != morphisms.end()) {
      const auto a = parse_group_arg(group_arg);
      const auto b = parse_group_arg(group_b_arg);
      const std::string name = (*hit)->get_name();
      const BigInt v = name == "hom" ? hom_count(a, b) : name == "mono" ? mono_count(a, b) : epi_count(a, b);
      out << to_string(v) << '\n';
    } else if (aut->parsed()) {
      out << to_string(aut_count(parse_group_arg(group_arg))) << '\n';
    } else if (subcount->parsed()) {
      out << to_string(sub_count(parse_group_arg(group_arg), parse_group_arg(group_b_arg))) << '\n';
    } else if (profile->parsed()) {
      const auto g = parse_group_arg(group_arg);
      out << "group " << g.to_string() << '\n';
      out << "elements " << render_profile(element_order_profile(g)) << '\n';
      out << "subgroups " << render_profile(subgroup_order_profile(g)) << '\n';
    } else if (conjecture->parsed()) {
      const auto found = conjecture_search(bound_arg);
      if (found.empty()) out << "no counterexamples\n";
      for (const auto& [a, b] : found) out << "counterexample " << a.to_string() << " " << b.to_string() << '\n';
    } else if (symgen->parsed()) {
      const auto g = parse_presentation(group_arg);
      const auto taus = parse_transpositions(g, extra_arg);
      out << (generates_full_symmetric(g, taus) ? "true" : "false") << '\n';
    } else if (verify_cmd->parsed()) {
      const auto names = verify::suite_names();
      if (std::find(names.begin(), names.end(), suite_arg) == names.end()) {
        throw UsageError("unknown suite '" + suite_arg + "' (known: " + suites + ")");
      }
      const auto report = verify::run_suite(suite_arg, bound_arg);
      if (!report.ok()) {
        for (const auto& line : report.mismatches) out << "MISMATCH " << line << '\n';
        out << "FAILED " << report.mismatches.size() << " of " << report.checked << " checks\n";
        return kExitMismatch;
      }
      out << "OK\n";
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitModule;
  }
  return kExitOk;
}

}  // namespace abelian
