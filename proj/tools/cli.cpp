#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <thread>

#include "pullback/oracle.hpp"
#include "pullback/parking.hpp"
#include "pullback/perm_count.hpp"
#include "pullback/recursion.hpp"
#include "pullback/verify.hpp"

namespace pullback::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Plain, Csv, Json };
enum class Method { Brute, Perm, Recursive, Auto, All };

// Instances at most this large are counted by brute force under --method auto.
constexpr std::uint64_t kAutoBruteLimit = 100'000;

std::string method_name(Method m) {
  switch (m) {
    case Method::Brute:
      return "brute";
    case Method::Perm:
      return "perm";
    case Method::Recursive:
      return "recursive";
    case Method::Auto:
      return "auto";
    case Method::All:
      return "all";
  }
  return "?";
}

struct Globals {
  Format format = Format::Plain;
  std::optional<std::uint64_t> ceiling;
  unsigned jobs = 1;
  bool seedless = false;

  EnumerationLimits limits() const { return EnumerationLimits{ceiling.value_or(EnumerationLimits::kDefaultCeiling), jobs}; }
};

// --k/--l and the rule shorthands.
struct RuleFlags {
  std::optional<std::string> k;
  std::optional<std::string> l;
  bool naples = false;
  bool classical = false;
  bool vacillating = false;
  std::optional<int> interval;

  void attach(CLI::App* cmd, bool ranges) {
    const std::string hint = ranges ? "RANGE" : "INT";
    cmd->add_option("--k", k, "Backward allowance")->type_name(hint);
    cmd->add_option("--l", l, "Forward allowance")->type_name(hint);
    cmd->add_flag("--naples", naples, "Shorthand for --l n-1");
    cmd->add_flag("--classical", classical, "Shorthand for --k 0 --l n-1");
    cmd->add_flag("--vacillating", vacillating, "Shorthand for --k 1 --l 1");
    cmd->add_option("--interval", interval, "Shorthand for --k 0 --l L")->type_name("L");
  }

  // Resolved (k, l) as range expressions in n.
  std::pair<std::string, std::string> resolve(const std::string& default_k, const std::optional<std::string>& default_l) const {
    const int shorthands = int(naples) + int(classical) + int(vacillating) + int(interval.has_value());
    if (shorthands > 1) throw UsageError("use at most one of --naples, --classical, --vacillating, --interval");
    std::optional<std::string> rk = k;
    std::optional<std::string> rl = l;
    auto set = [&](std::optional<std::string>& slot, const std::string& value, const char* flag) {
      if (slot && *slot != value) throw UsageError(std::string("rule shorthand conflicts with ") + flag);
      slot = value;
    };
    if (naples) set(rl, "n-1", "--l");
    if (classical) {
      set(rk, "0", "--k");
      set(rl, "n-1", "--l");
    }
    if (vacillating) {
      set(rk, "1", "--k");
      set(rl, "1", "--l");
    }
    if (interval) {
      if (*interval < 0) throw UsageError("--interval must be nonnegative");
      set(rk, "0", "--k");
      set(rl, std::to_string(*interval), "--l");
    }
    if (!rl) {
      if (!default_l) throw UsageError("--l (or a rule shorthand) is required");
      rl = default_l;
    }
    return {rk.value_or(default_k), *rl};
  }
};

int parse_int(std::string_view text, const std::string& whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("cannot parse '" + whole + "' as a parameter value");
  }
  return value;
}

int eval_bound(std::string_view text, int n_value, const std::string& whole) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == 'n') {
    text.remove_prefix(1);
    if (text.empty()) return n_value;
    const char sign = text.front();
    text.remove_prefix(1);
    if (sign == '-') return n_value - parse_int(text, whole);
    if (sign == '+') return n_value + parse_int(text, whole);
    throw UsageError("cannot parse '" + whole + "' as a parameter value");
  }
  return parse_int(text, whole);
}

int single_value(const std::string& text, int n_value) {
  const auto values = expand_range(text, n_value);
  if (values.size() != 1 || text.find("..") != std::string::npos) {
    throw UsageError("expected a single value, got '" + text + "'");
  }
  return values.front();
}

Count count_with(Method method, const Params& p, const EnumerationLimits& limits) {
  switch (method) {
    case Method::Brute:
      return oracle::count_by_enumeration(p, limits);
    case Method::Perm:
      return perm::total_count(p, limits);
    case Method::Recursive:
      return recursion::pf_count_recursive(p);
    case Method::Auto:
      if (oracle::search_space(p.m, p.n) <= std::min(kAutoBruteLimit, limits.ceiling)) {
        return oracle::count_by_enumeration(p, limits);
      }
      return recursion::pf_count_recursive(p);
    case Method::All:
      break;
  }
  throw UsageError("method 'all' cannot be used here");
}

Method resolved_auto(const Params& p, const EnumerationLimits& limits) {
  return oracle::search_space(p.m, p.n) <= std::min(kAutoBruteLimit, limits.ceiling) ? Method::Brute
                                                                                       : Method::Recursive;
}

json count_row(const Params& p, const std::string& method, const Count& c) {
  return json{{"m", p.m}, {"n", p.n}, {"k", p.k}, {"l", p.l}, {"method", method}, {"count", to_string(c)}};
}

void write_csv_row(std::ostream& out, const Params& p, const Count& c, const std::string& method) {
  out << p.m << ',' << p.n << ',' << p.k << ',' << p.l << ',' << to_string(c) << ',' << method << '\n';
}

constexpr const char* kCountHeader = "m,n,k,l,count,method\n";

json trace_json(const CarTrace& t) {
  json j{{"car", t.car},
         {"preferred", t.preferred},
         {"backward_checked", t.backward_checked},
         {"forward_checked", t.forward_checked}};
  j["parked_at"] = t.parked_at ? json(*t.parked_at) : json(nullptr);
  return j;
}

std::string join(const std::vector<int>& values, char sep) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string prefs;
  int n = 0;
  RuleFlags rule;
  bool contained = false;
};

int cmd_check(const CheckArgs& a, const Globals& g, std::ostream& out) {
  const PreferenceList prefs = parse_word(a.prefs);
  const auto [ks, ls] = a.rule.resolve("0", std::nullopt);
  const int k = single_value(ks, a.n);
  const int l = single_value(ls, a.n);
  const int m = static_cast<int>(prefs.size());
  const SimulationResult r = a.contained ? simulate_contained(prefs, m, a.n, k, l) : simulate(prefs, Params{m, a.n, k, l});

  switch (g.format) {
    case Format::Json: {
      json j{{"m", m}, {"n", a.n}, {"k", k}, {"l", l}, {"contained", a.contained}, {"is_pf", r.ok()},
             {"status", to_string(r.status)}};
      j["failed_car"] = r.ok() ? json(nullptr) : json(r.offending_car);
      j["outcome"] = r.outcome ? json(*r.outcome) : json(nullptr);
      j["traces"] = json::array();
      for (const auto& t : r.traces) j["traces"].push_back(trace_json(t));
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "car,preferred,backward_checked,forward_checked,parked_at\n";
      for (const auto& t : r.traces) {
        out << t.car << ',' << t.preferred << ',' << join(t.backward_checked, ';') << ','
            << join(t.forward_checked, ';') << ',' << (t.parked_at ? std::to_string(*t.parked_at) : "FAIL") << '\n';
      }
      break;
    case Format::Plain:
      out << "is_pf=" << (r.ok() ? "true" : "false") << '\n';
      if (r.status == ParkStatus::Failed) out << "failed_car=" << r.offending_car << '\n';
      if (r.status == ParkStatus::ContainmentViolation) out << "containment_violation_car=" << r.offending_car << '\n';
      if (r.outcome) out << "outcome=" << format_word(*r.outcome) << '\n';
      for (const auto& t : r.traces) {
        out << "car " << t.car << ": prefers " << t.preferred;
        if (!t.backward_checked.empty()) out << ", back " << join(t.backward_checked, ' ');
        if (!t.forward_checked.empty()) out << ", forward " << join(t.forward_checked, ' ');
        if (!t.parked_at) {
          out << ", fails\n";
        } else if (*t.parked_at == 0) {
          out << ", backs into spot 0\n";
        } else {
          out << ", parks at " << *t.parked_at << '\n';
        }
      }
      break;
  }
  return r.ok() ? kOk : kNegative;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  int m = 0;
  int n = 0;
  RuleFlags rule;
  Method method = Method::Auto;
};

int cmd_count(const CountArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const auto [ks, ls] = a.rule.resolve("0", std::nullopt);
  const Params p{a.m, a.n, single_value(ks, a.n), single_value(ls, a.n)};
  validate(p);
  const auto limits = g.limits();

  std::vector<std::pair<std::string, Count>> results;
  if (a.method == Method::All) {
    for (Method m : {Method::Brute, Method::Perm, Method::Recursive}) results.emplace_back(method_name(m), count_with(m, p, limits));
  } else {
    const Method used = a.method == Method::Auto ? resolved_auto(p, limits) : a.method;
    results.emplace_back(method_name(used), count_with(used, p, limits));
  }
  const bool agree = std::all_of(results.begin(), results.end(), [&](const auto& r) { return r.second == results.front().second; });

  switch (g.format) {
    case Format::Json:
      if (results.size() == 1) {
        out << count_row(p, results.front().first, results.front().second).dump() << '\n';
      } else {
        json arr = json::array();
        for (const auto& [name, c] : results) arr.push_back(count_row(p, name, c));
        out << arr.dump() << '\n';
      }
      break;
    case Format::Csv:
      out << kCountHeader;
      for (const auto& [name, c] : results) write_csv_row(out, p, c, name);
      break;
    case Format::Plain:
      if (results.size() == 1) {
        out << to_string(results.front().second) << '\n';
      } else {
        for (const auto& [name, c] : results) out << name << ' ' << to_string(c) << '\n';
      }
      break;
  }
  if (!agree) {
    err << "methods disagree for " << to_string(p) << '\n';
    return kNegative;
  }
  return kOk;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string m = "n";
  std::string n;
  RuleFlags rule;
  Method method = Method::Auto;
};

int cmd_table(const TableArgs& a, const Globals& g, std::ostream& out) {
  if (a.method == Method::All) throw UsageError("table takes a single method");
  const auto [ks, ls] = a.rule.resolve("0", std::string("n-1"));
  if (a.n.find('n') != std::string::npos) throw UsageError("--n range cannot refer to n");

  std::vector<Params> cells;
  for (int n : expand_range(a.n, 0)) {
    if (n < 0) throw UsageError("n must be nonnegative");
    for (int m : expand_range(a.m, n)) {
      if (m > n) continue;  // trivially 0
      for (int k : expand_range(ks, n)) {
        for (int l : expand_range(ls, n)) {
          const Params p{m, n, k, l};
          validate(p);
          cells.push_back(p);
        }
      }
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());

  const auto limits = g.limits();
  std::vector<Count> counts(cells.size());
  std::vector<std::string> methods(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    // Inner enumerations stay sequential; parallelism is across cells.
    const EnumerationLimits inner{limits.ceiling, 1};
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const Method used = a.method == Method::Auto ? resolved_auto(cells[i], inner) : a.method;
        methods[i] = method_name(used);
        counts[i] = count_with(used, cells[i], inner);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned workers = std::max(1U, std::min<unsigned>(g.jobs, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1))));
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  switch (g.format) {
    case Format::Json: {
      json arr = json::array();
      for (std::size_t i = 0; i < cells.size(); ++i) arr.push_back(count_row(cells[i], methods[i], counts[i]));
      out << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << kCountHeader;
      for (std::size_t i = 0; i < cells.size(); ++i) write_csv_row(out, cells[i], counts[i], methods[i]);
      break;
    case Format::Plain:
      out << std::setw(4) << "m" << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(4) << "l" << "  count\n";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& p = cells[i];
        out << std::setw(4) << p.m << std::setw(4) << p.n << std::setw(4) << p.k << std::setw(4) << p.l << "  "
            << to_string(counts[i]) << '\n';
      }
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- outcomes

struct OutcomesArgs {
  int m = 0;
  int n = 0;
  RuleFlags rule;
  bool with_oracle = false;
  std::optional<std::string> word;
};

int cmd_outcomes(const OutcomesArgs& a, const Globals& g, std::ostream& out) {
  const auto [ks, ls] = a.rule.resolve("0", std::nullopt);
  const Params p{a.m, a.n, single_value(ks, a.n), single_value(ls, a.n)};
  validate(p);
  if (p.m > p.n) throw InputError("more cars than spots");
  const auto limits = g.limits();

  std::vector<OutcomeWord> words;
  if (a.word) {
    OutcomeWord w = parse_word(*a.word);
    const auto cars = std::count_if(w.begin(), w.end(), [](int v) { return v > 0; });
    if (static_cast<int>(w.size()) != p.n || cars != p.m) {
      throw InputError("--word must have " + std::to_string(p.n) + " entries with " + std::to_string(p.m) + " cars");
    }
    words.push_back(std::move(w));
  } else {
    if (perm::word_count(p.m, p.n) > limits.ceiling) {
      throw ResourceLimitError("listing " + to_string(perm::word_count(p.m, p.n)) + " outcome words exceeds the ceiling of " +
                               std::to_string(limits.ceiling));
    }
    perm::for_each_outcome(p.m, p.n, [&](const OutcomeWord& w) { words.push_back(w); });
  }

  // A single word only needs the lists that land on it, not the whole histogram.
  std::optional<oracle::FiberHistogram> hist;
  if (a.with_oracle && !a.word) hist = oracle::fiber_histogram(p, limits);
  auto enumerated = [&](const OutcomeWord& w) -> Count {
    if (!hist) return oracle::fiber_by_enumeration(p, w);
    auto it = hist->find(w);
    return it == hist->end() ? Count(0) : it->second;
  };

  switch (g.format) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& w : words) {
        json row{{"outcome", w}, {"fiber", to_string(perm::fiber_size(w, p.k, p.l))}};
        if (a.with_oracle) row["oracle"] = to_string(enumerated(w));
        arr.push_back(std::move(row));
      }
      out << arr.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "outcome,fiber" << (a.with_oracle ? ",oracle" : "") << '\n';
      for (const auto& w : words) {
        out << '"' << format_word(w) << "\"," << to_string(perm::fiber_size(w, p.k, p.l));
        if (a.with_oracle) out << ',' << to_string(enumerated(w));
        out << '\n';
      }
      break;
    case Format::Plain:
      for (const auto& w : words) {
        out << format_word(w) << " → " << to_string(perm::fiber_size(w, p.k, p.l));
        if (a.with_oracle) out << " (oracle " << to_string(enumerated(w)) << ')';
        out << '\n';
      }
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  int max_n = 6;
  bool inject_fault = false;
  bool timings = false;
};

json params_json(const Params& p) { return json{{"m", p.m}, {"n", p.n}, {"k", p.k}, {"l", p.l}}; }

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  if (a.max_n < 0) throw UsageError("--max-n must be nonnegative");
  verify::Options opts;
  opts.max_n = a.max_n;
  opts.limits = g.limits();
  opts.inject_fault = a.inject_fault;
  const verify::Report report = verify::run(opts);

  switch (g.format) {
    case Format::Json: {
      json j{{"max_n", report.max_n}, {"checks", report.checks}, {"clean", report.clean()}};
      j["cells"] = json::array();
      for (const auto& c : report.cells) {
        json row = params_json(c.params);
        row["brute"] = to_string(c.brute);
        row["perm"] = to_string(c.perm);
        row["recursive"] = to_string(c.recursive);
        j["cells"].push_back(std::move(row));
      }
      j["disagreements"] = json::array();
      for (const auto& d : report.disagreements) {
        json row = params_json(d.params);
        row["check"] = d.check;
        row["detail"] = d.detail;
        j["disagreements"].push_back(std::move(row));
      }
      if (a.timings) {
        for (const auto& t : report.timings) j["seconds"][t.method] = t.seconds;
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "m,n,k,l,brute,perm,recursive\n";
      for (const auto& c : report.cells) {
        out << c.params.m << ',' << c.params.n << ',' << c.params.k << ',' << c.params.l << ',' << to_string(c.brute)
            << ',' << to_string(c.perm) << ',' << to_string(c.recursive) << '\n';
      }
      break;
    case Format::Plain:
      out << "grid: 1 <= m <= n <= " << report.max_n << ", 0 <= k,l <= n-1 (" << report.cells.size() << " cells)\n";
      for (const auto& c : report.checks) out << "check: " << c << '\n';
      if (a.timings) {
        for (const auto& t : report.timings) {
          out << "time " << t.method << ": " << std::fixed << std::setprecision(3) << t.seconds << "s\n";
        }
      }
      for (const auto& d : report.disagreements) {
        out << "DISAGREE [" << d.check << "] " << to_string(d.params) << ' ' << d.detail << '\n';
      }
      out << "disagreements: " << report.disagreements.size() << '\n';
      break;
  }
  return report.clean() ? kOk : kNegative;
}

std::optional<std::uint64_t> ceiling_from_env() {
  const char* raw = std::getenv("PULLBACK_CEILING");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  std::uint64_t value = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw UsageError("PULLBACK_CEILING must be a nonnegative integer, got '" + std::string(raw) + "'");
  }
  return value;
}

}  // namespace

std::vector<int> expand_range(const std::string& text, int n_value) {
  const auto dots = text.find("..");
  std::vector<int> out;
  if (dots == std::string::npos) {
    out.push_back(eval_bound(text, n_value, text));
    return out;
  }
  const int lo = eval_bound(std::string_view(text).substr(0, dots), n_value, text);
  const int hi = eval_bound(std::string_view(text).substr(dots + 2), n_value, text);
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pullback parking functions: membership, counts, outcomes and cross-verification", "pullback"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  std::optional<std::uint64_t> ceiling;
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}})
                      .description(""))
      ->type_name("plain|csv|json");
  app.add_option("--ceiling", ceiling, "Largest enumeration allowed (env PULLBACK_CEILING)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--seedless", g.seedless, "Reserved; every computation is deterministic");

  const std::map<std::string, Method> methods{{"brute", Method::Brute},         {"perm", Method::Perm},
                                              {"recursive", Method::Recursive}, {"auto", Method::Auto},
                                              {"all", Method::All}};

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Run the parking rule on one preference list");
  check_cmd->add_option("--prefs", check.prefs, "Comma-separated preferences; m is the list length")->required();
  check_cmd->add_option("--n", check.n, "Number of spots")->required()->check(CLI::NonNegativeNumber);
  check.rule.attach(check_cmd, false);
  check_cmd->add_flag("--contained", check.contained, "Add a vacant spot 0 that cars may not back into");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Count parking functions");
  count_cmd->add_option("--m", count.m, "Number of cars")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--n", count.n, "Number of spots")->required()->check(CLI::NonNegativeNumber);
  count.rule.attach(count_cmd, false);
  count_cmd->add_option("--method", count.method, "brute | perm | recursive | auto | all")
      ->transform(CLI::CheckedTransformer(methods).description(""))->type_name("METHOD");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Sweep parameter ranges, e.g. --n 1..5 --m n --k 0..n-1");
  table_cmd->add_option("--m", table.m, "Range of car counts (default n)")->type_name("RANGE");
  table_cmd->add_option("--n", table.n, "Range of spot counts")->required()->type_name("RANGE");
  table.rule.attach(table_cmd, true);
  table_cmd->add_option("--method", table.method, "brute | perm | recursive | auto")
      ->transform(CLI::CheckedTransformer(methods).description(""))->type_name("METHOD");

  OutcomesArgs outcomes;
  auto* outcomes_cmd = app.add_subcommand("outcomes", "List outcome words with their fiber sizes");
  outcomes_cmd->add_option("--m", outcomes.m, "Number of cars")->required()->check(CLI::NonNegativeNumber);
  outcomes_cmd->add_option("--n", outcomes.n, "Number of spots")->required()->check(CLI::NonNegativeNumber);
  outcomes.rule.attach(outcomes_cmd, false);
  outcomes_cmd->add_flag("--with-oracle", outcomes.with_oracle, "Also report the enumerated fiber");
  outcomes_cmd->add_option("--word", outcomes.word, "Only report this comma-separated outcome word");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all counting methods and identities");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest street in the grid");
  verify_cmd->add_flag("--inject-fault", verify_args.inject_fault, "Corrupt the permutation route (harness self-test)");
  verify_cmd->add_flag("--timings", verify_args.timings, "Report wall time per method");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    g.ceiling = ceiling ? ceiling : ceiling_from_env();
    if (*check_cmd) return cmd_check(check, g, out);
    if (*count_cmd) return cmd_count(count, g, out, err);
    if (*table_cmd) return cmd_table(table, g, out);
    if (*outcomes_cmd) return cmd_outcomes(outcomes, g, out);
    if (*verify_cmd) return cmd_verify(verify_args, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pullback::cli
