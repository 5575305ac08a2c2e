// omega-point: exact certificates for rational points on y^2 = x^3 + ax + b.
//
// Subcommands: classify, certify, eval, search, verify, bench. Every run
// produces one output record (human-readable by default, a single JSON
// object per line with --json) and exits 0 on success/found/true, 1 on
// not-found/false/inconclusive, 2 on usage errors, 3 on resource limits.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "omegapoint/certificate.hpp"
#include "omegapoint/cubic.hpp"
#include "omegapoint/search.hpp"
#include "omegapoint/sets.hpp"
#include "omegapoint/symmetric.hpp"

namespace {

using json = nlohmann::json;
using namespace omegapoint;

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

BigInt parse_big(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size())
    throw MalformedInput(what + ": '" + text + "' is not a decimal integer");
  for (; pos < text.size(); ++pos)
    if (text[pos] < '0' || text[pos] > '9')
      throw MalformedInput(what + ": '" + text + "' is not a decimal integer");
  return BigInt(text);
}

// "p" or "p/q" with q a positive integer.
std::pair<BigInt, BigInt> parse_fraction(const std::string& text, const std::string& what) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return {parse_big(text, what), BigInt(1)};
  const BigInt num = parse_big(text.substr(0, slash), what);
  const std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
    throw MalformedInput(what + ": denominator must be unsigned, got '" + den_text + "'");
  const BigInt den = parse_big(den_text, what);
  if (den == 0) throw MalformedInput(what + ": denominator must be nonzero");
  return {num, den};
}

IntegerList parse_list(const std::string& text, const std::string& what) {
  IntegerList out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(parse_big(item, what));
  if (out.empty()) throw MalformedInput(what + ": expected a comma-separated integer list");
  return out;
}

// Guard resolution: --max-width flag > OMEGA_POINT_MAX_WIDTH > built-in 512.
std::uint64_t resolve_guard(const std::optional<std::uint64_t>& flag_value) {
  if (flag_value) return *flag_value;
  if (const char* env = std::getenv("OMEGA_POINT_MAX_WIDTH")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) return parsed;
    std::cerr << "warning: ignoring unparsable OMEGA_POINT_MAX_WIDTH='" << env << "'\n";
  }
  return kDefaultMaxWindowWidth;
}

std::string fraction_text(const BigInt& num, const BigInt& den) {
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

json point_json(const RationalPoint& p) {
  return json{{"x", fraction_text(p.x_num, p.x_den)},
              {"y", fraction_text(p.y_num, p.y_den)},
              {"witness",
               {{"x", p.witness_x.str()}, {"y", p.witness_y.str()}, {"n", p.witness_n.str()}}}};
}

std::string point_text(const RationalPoint& p) {
  return "(" + fraction_text(p.x_num, p.x_den) + ", " + fraction_text(p.y_num, p.y_den) + ")";
}

int sign_of(const BigInt& v) { return v < 0 ? -1 : v > 0 ? 1 : 0; }

constexpr const char* kDegenerateFamilyNote =
    "the rational points of y^2 = x^3 are exactly (r^2, r^3) for rational r";

struct Record {
  std::string command;
  bool json_mode = false;
  json inputs = json::object();
  json result = json::object();
  json timings = json::object();
  json resource = json::object();
  std::string status = "true";
  std::vector<std::string> lines;

  void human(std::string line) { lines.push_back(std::move(line)); }

  int finish(int code) {
    if (json_mode) {
      const json record{{"command", command}, {"inputs", inputs},   {"status", status},
                        {"result", result},   {"timings", timings}, {"resource", resource}};
      std::cout << record.dump() << "\n";
    } else {
      for (const std::string& line : lines) std::cout << line << "\n";
    }
    return code;
  }
};

template <class Body>
int run_recorded(Record& rec, Body body) {
  try {
    return body();
  } catch (const ResourceLimit& e) {
    rec.status = "error";
    rec.result = json{{"error", e.what()}, {"kind", "resource_limit"}};
    if (e.width) rec.result["width"] = e.width->str();
    rec.lines = {std::string("error (resource limit): ") + e.what()};
    return rec.finish(3);
  } catch (const InvalidBounds& e) {
    rec.status = "error";
    rec.result = json{{"error", e.what()}, {"kind", "invalid_bounds"}};
    rec.lines = {std::string("error (invalid bounds): ") + e.what()};
    return rec.finish(2);
  } catch (const BranchNotAdmissible& e) {
    rec.status = "error";
    rec.result = json{{"error", e.what()}, {"kind", "branch_not_admissible"}};
    rec.lines = {std::string("error (branch not admissible): ") + e.what()};
    return rec.finish(2);
  } catch (const MalformedInput& e) {
    rec.status = "error";
    rec.result = json{{"error", e.what()}, {"kind", "malformed_input"}};
    rec.lines = {std::string("error (malformed input): ") + e.what()};
    return rec.finish(2);
  } catch (const InternalInconsistency& e) {
    rec.status = "error";
    rec.result = json{{"error", e.what()}, {"kind", "internal_inconsistency"}};
    rec.lines = {std::string("internal inconsistency (please report): ") + e.what()};
    return rec.finish(2);
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.result = json{{"error", e.what()}, {"kind", "unexpected"}};
    rec.lines = {std::string("error: ") + e.what()};
    return rec.finish(2);
  }
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
  std::string a, b;
  bool json_mode = false;
};

int cmd_classify(const ClassifyArgs& args) {
  Record rec;
  rec.command = "classify";
  rec.json_mode = args.json_mode;
  return run_recorded(rec, [&] {
    Timer timer;
    const BigInt a = parse_big(args.a, "-a");
    const BigInt b = parse_big(args.b, "-b");
    rec.inputs = json{{"a", a.str()}, {"b", b.str()}};
    const Region region = classify(a, b);
    const BigInt disc = 4 * a * a * a + 27 * b * b;
    std::string condition;
    switch (region) {
      case Region::Degenerate: condition = "none"; break;
      case Region::TouchBelow: condition = "2/3"; break;
      default: condition = std::to_string(condition_index(region)); break;
    }
    rec.result = json{{"region", region_tag(region)},
                      {"condition", condition},
                      {"sign_4a3_plus_27b2", sign_of(disc)},
                      {"sign_b", sign_of(b)}};
    rec.human(std::string("region: ") + region_tag(region));
    rec.human("condition: " + condition);
    rec.human("sign(4a^3 + 27b^2): " + std::to_string(sign_of(disc)));
    rec.human("sign(b): " + std::to_string(sign_of(b)));
    if (region == Region::Degenerate) {
      rec.result["degenerate_family"] = kDegenerateFamilyNote;
      rec.human(std::string("note: ") + kDegenerateFamilyNote);
    }
    rec.timings = json{{"total_ms", timer.ms()}};
    rec.resource = json{{"max_window_width", 0}, {"peak_bits", bit_length(disc)}};
    rec.status = "true";
    return rec.finish(0);
  });
}

// ----------------------------------------------------------------- certify

struct CertifyArgs {
  std::string a_list, b_list;
  std::optional<std::string> lower, upper;
  std::optional<std::uint64_t> max_width;
  bool json_mode = false;
};

int cmd_certify(const CertifyArgs& args) {
  Record rec;
  rec.command = "certify";
  rec.json_mode = args.json_mode;
  return run_recorded(rec, [&] {
    Timer timer;
    const std::uint64_t guard = resolve_guard(args.max_width);
    IntegerList a_set = parse_list(args.a_list, "--A");
    IntegerList b_set = parse_list(args.b_list, "--B");
    rec.inputs = json{{"A", args.a_list}, {"B", args.b_list}};
    CertificateInput input = make_certificate_input(std::move(a_set), std::move(b_set));
    if (args.lower) input.lower = parse_big(*args.lower, "--M");
    if (args.upper) input.upper = parse_big(*args.upper, "--N");
    rec.inputs["M"] = input.lower.str();
    rec.inputs["N"] = input.upper.str();

    const CertificateReport rep = certify(input, guard);
    json per_term = json::array();
    for (std::size_t k = 0; k < input.a_set.size(); ++k)
      per_term.push_back(json{{"element", input.a_set[k].str()},
                              {"chi", rep.per_term_chi[k].str()},
                              {"omega", rep.per_term_omega[k].str()}});
    rec.result = json{{"chi", rep.chi.str()},
                      {"omega", rep.omega.str()},
                      {"nonempty", rep.nonempty},
                      {"per_term", per_term},
                      {"window",
                       {{"lower", input.lower.str()},
                        {"upper", input.upper.str()},
                        {"width", rep.window_width.str()}}}};
    rec.human("chi = " + rep.chi.str());
    rec.human("omega = " + rep.omega.str());
    rec.human(std::string("intersection nonempty: ") + (rep.nonempty ? "true" : "false"));
    rec.human("window: [" + input.lower.str() + ", " + input.upper.str() + "], width " +
              rep.window_width.str());
    for (std::size_t k = 0; k < input.a_set.size(); ++k)
      rec.human("  element " + input.a_set[k].str() + ": chi " + rep.per_term_chi[k].str() +
                ", omega " + rep.per_term_omega[k].str());
    rec.timings = json{{"total_ms", timer.ms()}};
    rec.resource = json{{"max_window_width", rep.window_width.str()},
                        {"peak_bits", rep.peak_bits}};
    rec.status = rep.nonempty ? "true" : "false";
    return rec.finish(rep.nonempty ? 0 : 1);
  });
}

// -------------------------------------------------------------------- eval

struct EvalArgs {
  std::string a, b, n;
  std::uint64_t y_limit = 1, window_len = 1;
  std::optional<std::uint64_t> max_width;
  bool json_mode = false;
};

int cmd_eval(const EvalArgs& args) {
  Record rec;
  rec.command = "eval";
  rec.json_mode = args.json_mode;
  return run_recorded(rec, [&] {
    Timer timer;
    const std::uint64_t guard = resolve_guard(args.max_width);
    const BigInt a = parse_big(args.a, "-a");
    const BigInt b = parse_big(args.b, "-b");
    const BigInt n = parse_big(args.n, "-n");
    rec.inputs = json{{"a", a.str()},
                      {"b", b.str()},
                      {"n", n.str()},
                      {"I", args.y_limit},
                      {"J", args.window_len}};

    const ExistenceReport rep = evaluate_existence(a, b, n, args.y_limit, args.window_len, guard);
    json branches = json::array();
    BigInt max_width = 0;
    std::size_t peak_bits = 0;
    for (const BranchEvaluation& ev : rep.per_branch) {
      json row{{"branch", ev.branch}, {"guarded", ev.guarded}, {"width", ev.width.str()}};
      if (!ev.guarded) {
        row["omega"] = ev.omega.str();
        row["chi"] = ev.chi.str();
        row["window"] = json{{"lower", ev.lower.str()}, {"upper", ev.upper.str()}};
        rec.human("branch " + std::to_string(ev.branch) + ": omega = " + ev.omega.str() +
                  "  window [" + ev.lower.str() + ", " + ev.upper.str() + "], width " +
                  ev.width.str());
      } else {
        rec.human("branch " + std::to_string(ev.branch) + ": guarded (width " + ev.width.str() +
                  " exceeds guard " + std::to_string(guard) + ")");
      }
      if (ev.width > max_width) max_width = ev.width;
      peak_bits = std::max(peak_bits, ev.peak_bits);
      branches.push_back(std::move(row));
    }
    rec.result = json{{"region", region_tag(rep.region)},
                      {"condition", rep.condition},
                      {"satisfied", rep.satisfied},
                      {"branches", branches}};
    rec.lines.insert(rec.lines.begin(),
                     {std::string("region: ") + region_tag(rep.region),
                      "condition: " + std::to_string(rep.condition)});
    if (rep.lattice_solution) {
      rec.result["lattice_solution"] = json{{"x", rep.lattice_solution->first.str()},
                                            {"y", rep.lattice_solution->second.str()}};
      rec.human("lattice solution: (" + rep.lattice_solution->first.str() + ", 0) at scale " +
                n.str());
    }
    rec.human(std::string("satisfied: ") + (rep.satisfied ? "true" : "false"));
    rec.timings = json{{"total_ms", timer.ms()}};
    rec.resource =
        json{{"max_window_width", max_width.str()}, {"peak_bits", peak_bits}};
    rec.status = rep.satisfied ? "true" : "false";
    return rec.finish(rep.satisfied ? 0 : 1);
  });
}

// ------------------------------------------------------------------ search

struct SearchArgs {
  std::string a, b;
  std::uint64_t max_n = 6, max_i = 12, max_j = 12;
  std::optional<std::uint64_t> timeout_secs;
  unsigned threads = 1;
  std::optional<std::uint64_t> max_width;
  bool json_mode = false;
};

const char* cell_status_name(CellStatus s) {
  switch (s) {
    case CellStatus::OmegaZero: return "omega_zero";
    case CellStatus::OmegaPositive: return "omega_positive";
    case CellStatus::Guarded: return "guarded";
    case CellStatus::Lattice: return "lattice";
  }
  return "?";
}

int cmd_search(const SearchArgs& args) {
  Record rec;
  rec.command = "search";
  rec.json_mode = args.json_mode;
  return run_recorded(rec, [&] {
    Timer timer;
    const BigInt a = parse_big(args.a, "-a");
    const BigInt b = parse_big(args.b, "-b");
    SearchLimits limits;
    limits.max_n = args.max_n;
    limits.max_i = args.max_i;
    limits.max_j = args.max_j;
    limits.window_guard = resolve_guard(args.max_width);
    if (args.timeout_secs)
      limits.deadline = std::chrono::milliseconds(*args.timeout_secs * 1000);
    rec.inputs = json{{"a", a.str()},           {"b", b.str()},
                      {"max_n", limits.max_n},  {"max_I", limits.max_i},
                      {"max_J", limits.max_j},  {"threads", args.threads},
                      {"max_width", limits.window_guard}};

    const SearchResult res =
        search(a, b, limits, args.threads == 0 ? 1u : args.threads);
    const double search_ms = timer.ms();

    json trace_entries = json::array();
    BigInt max_width = 0;
    std::size_t peak_bits = 0;
    for (const TraceEntry& row : res.trace) {
      trace_entries.push_back(json{{"n", row.n},
                                   {"I", row.y_limit},
                                   {"J", row.window_len},
                                   {"branch", row.branch},
                                   {"status", cell_status_name(row.status)},
                                   {"width", row.width.str()}});
      if (row.status != CellStatus::Guarded && row.width > max_width) max_width = row.width;
      peak_bits = std::max(peak_bits, row.peak_bits);
    }
    rec.result["trace"] = json{{"windows_evaluated", res.windows_evaluated},
                               {"windows_guarded", res.windows_guarded},
                               {"deadline_hit", res.deadline_hit},
                               {"entries", trace_entries}};

    Timer supplement_timer;
    if (!(a == 0 && b == 0)) {
      json supplement = json::array();
      std::string supplement_text;
      for (const RationalPoint& p : x_axis_points(a, b)) {
        supplement.push_back(point_json(p));
        supplement_text += (supplement_text.empty() ? "" : ", ") + point_text(p);
      }
      rec.result["supplement"] = json{{"x_axis_points", supplement}};
      rec.human("supplement (x-axis rational points, outside the certificate method): " +
                (supplement_text.empty() ? std::string("none") : supplement_text));
    }
    const double supplement_ms = supplement_timer.ms();

    switch (res.status) {
      case SearchStatus::DegenerateFamily:
        rec.status = "found";
        rec.result["degenerate_family"] = kDegenerateFamilyNote;
        rec.lines.insert(rec.lines.begin(), std::string("found: ") + kDegenerateFamilyNote);
        break;
      case SearchStatus::Found: {
        rec.status = "found";
        rec.result["point"] = point_json(*res.point);
        rec.result["condition"] = res.condition;
        rec.lines.insert(
            rec.lines.begin(),
            {"found point " + point_text(*res.point),
             "witness: X = " + res.point->witness_x.str() + ", Y = " +
                 res.point->witness_y.str() + ", n = " + res.point->witness_n.str() +
                 "  (condition " + std::to_string(res.condition) + ")"});
        break;
      }
      case SearchStatus::Inconclusive:
        rec.status = "inconclusive";
        rec.lines.insert(
            rec.lines.begin(),
            "inconclusive: limits exhausted (max-n " + std::to_string(limits.max_n) +
                ", max-I " + std::to_string(limits.max_i) + ", max-J " +
                std::to_string(limits.max_j) +
                ") without a certificate; existence is undecided at these limits" +
                (res.deadline_hit ? " (deadline hit)" : ""));
        break;
    }
    rec.human("windows evaluated: " + std::to_string(res.windows_evaluated) + ", guarded: " +
              std::to_string(res.windows_guarded));

    rec.timings =
        json{{"search_ms", search_ms}, {"supplement_ms", supplement_ms}, {"total_ms", timer.ms()}};
    rec.resource =
        json{{"max_window_width", max_width.str()}, {"peak_bits", peak_bits}};
    return rec.finish(res.status == SearchStatus::Inconclusive ? 1 : 0);
  });
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string a, b, x, y;
  bool json_mode = false;
};

int cmd_verify(const VerifyArgs& args) {
  Record rec;
  rec.command = "verify";
  rec.json_mode = args.json_mode;
  return run_recorded(rec, [&] {
    Timer timer;
    const BigInt a = parse_big(args.a, "-a");
    const BigInt b = parse_big(args.b, "-b");
    const auto [x_num, x_den] = parse_fraction(args.x, "--x");
    const auto [y_num, y_den] = parse_fraction(args.y, "--y");
    rec.inputs = json{{"a", a.str()}, {"b", b.str()}, {"x", args.x}, {"y", args.y}};
    const bool on_curve = verify_point_fractions(a, b, x_num, x_den, y_num, y_den);
    rec.result = json{{"on_curve", on_curve},
                      {"x", fraction_text(x_num, x_den)},
                      {"y", fraction_text(y_num, y_den)}};
    rec.human(std::string("on curve: ") + (on_curve ? "true" : "false"));
    rec.timings = json{{"total_ms", timer.ms()}};
    rec.resource = json{{"max_window_width", 0}, {"peak_bits", 0}};
    rec.status = on_curve ? "true" : "false";
    return rec.finish(on_curve ? 0 : 1);
  });
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::uint64_t max_width = 200;  // sweep limit; the guard still comes from env/default
  bool json_mode = false;
};

int cmd_bench(const BenchArgs& args) {
  Record rec;
  rec.command = "bench";
  rec.json_mode = args.json_mode;
  return run_recorded(rec, [&] {
    Timer timer;
    const std::uint64_t guard = resolve_guard(std::nullopt);
    rec.inputs = json{{"max_width", args.max_width}};
    if (args.max_width > guard)
      throw ResourceLimit("bench width " + std::to_string(args.max_width) + " exceeds guard " +
                              std::to_string(guard),
                          BigInt(args.max_width));

    std::vector<std::uint64_t> widths;
    for (std::uint64_t w = 8; w <= args.max_width; w *= 2) widths.push_back(w);
    if (widths.empty() || widths.back() != args.max_width) widths.push_back(args.max_width);

    json rows = json::array();
    rec.human("width   sigma_ms   chi_ms   peak_bits");
    std::size_t overall_peak = 0;
    for (const std::uint64_t w : widths) {
      Timer sigma_timer;
      const IntegerList sigma = elementary_symmetric_range(0, w, guard);
      const double sigma_ms = sigma_timer.ms();
      std::size_t peak = 0;
      for (const BigInt& v : sigma) peak = std::max(peak, bit_length(v));

      // Synthetic certificate spanning the whole window [0, w].
      IntegerList a_set{BigInt(0), BigInt(w / 2), BigInt(w)};
      IntegerList b_set;
      if (w >= 8)
        for (std::uint64_t j = 0; j <= 8; ++j) b_set.push_back(BigInt(j * (w / 8)));
      else
        for (std::uint64_t j = 0; j <= w; ++j) b_set.push_back(BigInt(j));
      Timer chi_timer;
      const CertificateReport rep =
          chi(make_certificate_input(std::move(a_set), std::move(b_set), 0, w), guard);
      const double chi_ms = chi_timer.ms();
      peak = std::max(peak, rep.peak_bits);
      overall_peak = std::max(overall_peak, peak);

      rows.push_back(json{
          {"width", w}, {"sigma_ms", sigma_ms}, {"chi_ms", chi_ms}, {"peak_bits", peak}});
      std::ostringstream line;
      line << w << "\t" << sigma_ms << "\t" << chi_ms << "\t" << peak;
      rec.human(line.str());
    }
    rec.result = json{{"rows", rows}, {"guard", guard}};
    rec.timings = json{{"total_ms", timer.ms()}};
    rec.resource =
        json{{"max_window_width", args.max_width}, {"peak_bits", overall_peak}};
    rec.status = "true";
    return rec.finish(0);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational-point certificates for y^2 = x^3 + ax + b"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "shape class and condition index of (a, b)");
  classify_cmd->add_option("-a", classify_args.a, "curve coefficient a")->required();
  classify_cmd->add_option("-b", classify_args.b, "curve coefficient b")->required();
  classify_cmd->add_flag("--json", classify_args.json_mode, "one JSON record per line");

  CertifyArgs certify_args;
  auto* certify_cmd =
      app.add_subcommand("certify", "intersection certificate chi/omega for two integer lists");
  certify_cmd->add_option("--A", certify_args.a_list, "comma-separated integers")->required();
  certify_cmd->add_option("--B", certify_args.b_list, "comma-separated integers")->required();
  certify_cmd->add_option("--M", [&certify_args](const std::vector<std::string>& v) {
    certify_args.lower = v.front();
    return true;
  }, "window lower bound (default: min of A u B)");
  certify_cmd->add_option("--N", [&certify_args](const std::vector<std::string>& v) {
    certify_args.upper = v.front();
    return true;
  }, "window upper bound (default: max of A u B)");
  certify_cmd->add_option("--max-width", certify_args.max_width,
                          "window guard override (default 512 or OMEGA_POINT_MAX_WIDTH)");
  certify_cmd->add_flag("--json", certify_args.json_mode, "one JSON record per line");

  EvalArgs eval_args;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate the seven-way existence condition at one (n, I, J)");
  eval_cmd->add_option("-a", eval_args.a, "curve coefficient a")->required();
  eval_cmd->add_option("-b", eval_args.b, "curve coefficient b")->required();
  eval_cmd->add_option("-n", eval_args.n, "denominator scale n >= 1")->required();
  eval_cmd->add_option("--I", eval_args.y_limit, "largest y index I >= 1")->required();
  eval_cmd->add_option("--J", eval_args.window_len, "window length J >= 1")->required();
  eval_cmd->add_option("--max-width", eval_args.max_width, "window guard override");
  eval_cmd->add_flag("--json", eval_args.json_mode, "one JSON record per line");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "sweep (n, I, J) until a certificate fires");
  search_cmd->add_option("-a", search_args.a, "curve coefficient a")->required();
  search_cmd->add_option("-b", search_args.b, "curve coefficient b")->required();
  search_cmd->add_option("--max-n", search_args.max_n, "largest denominator scale (default 6)");
  search_cmd->add_option("--max-I", search_args.max_i, "largest y index (default 12)");
  search_cmd->add_option("--max-J", search_args.max_j, "largest window length (default 12)");
  search_cmd->add_option("--timeout-secs", search_args.timeout_secs, "wall-clock budget");
  search_cmd->add_option("--threads", search_args.threads, "concurrent cells per sweep step");
  search_cmd->add_option("--max-width", search_args.max_width, "window guard override");
  search_cmd->add_flag("--json", search_args.json_mode, "one JSON record per line");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check a rational point against the curve");
  verify_cmd->add_option("-a", verify_args.a, "curve coefficient a")->required();
  verify_cmd->add_option("-b", verify_args.b, "curve coefficient b")->required();
  verify_cmd->add_option("--x", verify_args.x, "x coordinate, 'p' or 'p/q'")->required();
  verify_cmd->add_option("--y", verify_args.y, "y coordinate, 'p' or 'p/q'")->required();
  verify_cmd->add_flag("--json", verify_args.json_mode, "one JSON record per line");

  BenchArgs bench_args;
  auto* bench_cmd =
      app.add_subcommand("bench", "time sigma tables and chi as the window width grows");
  bench_cmd->add_option("--max-width", bench_args.max_width, "largest width to sweep (default 200)");
  bench_cmd->add_flag("--json", bench_args.json_mode, "one JSON record per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (classify_cmd->parsed()) return cmd_classify(classify_args);
  if (certify_cmd->parsed()) return cmd_certify(certify_args);
  if (eval_cmd->parsed()) return cmd_eval(eval_args);
  if (search_cmd->parsed()) return cmd_search(search_args);
  if (verify_cmd->parsed()) return cmd_verify(verify_args);
  if (bench_cmd->parsed()) return cmd_bench(bench_args);
  return 2;
}
