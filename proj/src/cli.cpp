#include "qiclass/cli.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <optional>

#include <CLI11.hpp>

#include "qiclass/cayley.hpp"
#include "qiclass/extension.hpp"
#include "qiclass/invariants.hpp"
#include "qiclass/presentation.hpp"
#include "qiclass/small_cancellation.hpp"

namespace qiclass::cli {

using nlohmann::json;

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Report {
  explicit Report(std::string cmd = {}) : command(std::move(cmd)) {}

  std::string command;
  json inputs = json::object();
  std::string verdict;
  json witnesses = json::array();
  json trace = json::array();
  json counts = json::array();
  json bound = nullptr;
  std::vector<std::string> plain;  // human-readable lines for --plain
};

struct Options {
  bool plain = false;
  std::uint64_t seed = 0;

  std::string lambda = "1/7";
  int max_index = 10;
  std::optional<int> max_index_override;

  std::vector<std::string> word;  // tokens, joined with spaces
  std::string alpha;
  std::string beta;
  std::string strategy = "deterministic";

  std::string group = "G";
  std::string left;
  std::string right = "GxZ";
  int radius = 1;
  bool elements = false;

  int n = 1;
  int max_len = 2;
  int max_exp = 4;
};

AlphaSequence parse_alpha_or_throw(const std::string& text) { return AlphaSequence::parse(text); }

json word_json(const Word& w) { return format_word(w); }

GroupContext context_from(const std::string& name, const Options& opt) {
  if (name == "G") return GroupContext::group_G();
  if (name == "GxZ") return GroupContext::product_GxZ();
  if (name == "E" || name == "Ealpha") {
    if (opt.alpha.empty()) throw InputError("group " + name + " needs --alpha");
    return GroupContext::extension(parse_alpha_or_throw(opt.alpha));
  }
  throw InputError("unknown group '" + name + "' (expected G, GxZ or E)");
}

Strategy strategy_from(const Options& opt) {
  if (opt.strategy == "deterministic") return Strategy::deterministic();
  if (opt.strategy == "random") return Strategy::seeded_random(opt.seed);
  throw InputError("unknown strategy '" + opt.strategy + "' (expected deterministic or random)");
}

std::string join_counts(const std::vector<std::size_t>& counts) {
  std::string s;
  for (auto c : counts) s += (s.empty() ? "" : " ") + std::to_string(c);
  return s;
}

Report cmd_check(const Options& opt) {
  Report rep{"check"};
  Rational lambda = Rational::parse(opt.lambda);
  if (lambda.num <= 0 || lambda.num >= lambda.den) throw InputError("--lambda must lie strictly between 0 and 1");
  if (opt.max_index < 0) throw InputError("--max-index must be nonnegative");
  rep.inputs = {{"lambda", lambda.to_string()}, {"max_index", opt.max_index}};

  auto metric = verify_metric_condition(lambda, opt.max_index);
  std::vector<int> powers;
  for (int i = 0; i <= opt.max_index; ++i)
    if (is_proper_power(relator(i))) powers.push_back(i);

  const bool pass = metric.pass && powers.empty();
  rep.verdict = pass ? "PASS" : "FAIL";
  if (metric.worst) {
    const auto& w = *metric.worst;
    rep.witnesses.push_back({{"kind", "worst_piece"},
                             {"container_index", w.container_index},
                             {"other_index", w.other_index},
                             {"piece", word_json(w.piece)},
                             {"piece_length", w.piece_length},
                             {"relator_length", w.container_length},
                             {"ratio", std::to_string(w.piece_length) + "/" + std::to_string(w.container_length)},
                             {"bound", Rational{lambda.num * static_cast<std::int64_t>(w.container_length), lambda.den}.to_string()},
                             {"satisfied", metric.pass}});
    rep.plain.push_back("worst piece: '" + format_word(w.piece) + "' length " + std::to_string(w.piece_length) +
                        " in r_" + std::to_string(w.container_index) + " (|r| = " +
                        std::to_string(w.container_length) + ", shared with r_" + std::to_string(w.other_index) + ")");
  }
  rep.witnesses.push_back({{"kind", "proper_powers"}, {"indices", powers}});
  rep.inputs["symmetrized_words"] = metric.symmetrized_words;
  rep.plain.insert(rep.plain.begin(), "C'(" + lambda.to_string() + ") for r_0..r_" + std::to_string(opt.max_index) +
                                          ": " + (metric.pass ? "holds" : "violated") + "; proper powers: " +
                                          (powers.empty() ? "none" : std::to_string(powers.size())));
  rep.plain.insert(rep.plain.begin(), rep.verdict);
  return rep;
}

Report cmd_solve(const Options& opt) {
  Report rep{"solve"};
  std::string text;
  for (const auto& t : opt.word) text += (text.empty() ? "" : " ") + t;
  Word w = parse_word(text);
  Strategy strategy = strategy_from(opt);
  rep.inputs = {{"word", format_word(w)}, {"strategy", opt.strategy}};
  DehnTrace trace;
  if (opt.alpha.empty()) {
    if (w.contains(Generator::z)) throw InputError("word contains z; pass --alpha to work in E_alpha");
    auto result = is_trivial_in_G(w, strategy);
    rep.verdict = result.trivial ? "trivial" : "nontrivial";
    trace = std::move(result.trace);
    rep.witnesses.push_back({{"kind", "normal_data"}, {"g_word", word_json(trace.final_word)}});
    rep.plain.push_back(rep.verdict + " in G");
  } else {
    AlphaSequence alpha = parse_alpha_or_throw(opt.alpha);
    rep.inputs["alpha"] = alpha.to_string();
    auto eval = evaluate_with_trace(alpha, w, strategy);
    const auto& e = eval.element;
    rep.verdict = !e.g_word.empty() ? "nontrivial" : (e.z_exp == 0 ? "trivial" : "central");
    trace = std::move(eval.trace);
    rep.witnesses.push_back({{"kind", "normal_data"}, {"g_word", word_json(e.g_word)}, {"z_exp", e.z_exp}});
    rep.plain.push_back(rep.verdict + " in E_alpha: (" + (e.g_word.empty() ? std::string("empty") : format_word(e.g_word)) +
                        ", " + std::to_string(e.z_exp) + ")");
  }
  rep.trace = trace_to_json(trace);
  rep.plain.push_back("final G-word: " + (trace.final_word.empty() ? std::string("(empty)") : format_word(trace.final_word)));
  for (const auto& m : trace.moves)
    rep.plain.push_back("  move at " + std::to_string(m.position) + ": " + std::to_string(m.matched_length) +
                        " letters of r_" + std::to_string(m.relator_index) + (m.sign > 0 ? "" : "^-1") +
                        " rotation " + std::to_string(m.rotation));
  return rep;
}

json rich_json(const std::string& name, const AlphaSequence& alpha, Report& rep) {
  auto rich = is_rich(alpha);
  json j = {{"kind", "rich"}, {"sequence", name}, {"rich", rich.rich}, {"gcd", rich.gcd}};
  if (rich.witness) {
    j["witness"] = rich.witness->to_string();
    j["central_generator"] = word_json(express_central_generator(alpha, static_cast<int>(alpha.span())));
  }
  rep.plain.push_back(name + " = " + alpha.to_string() + ": " +
                      (rich.rich ? "rich, witness " + rich.witness->to_string() : "not rich in range (gcd " + std::to_string(rich.gcd) + ")"));
  return j;
}

json bound_json(const std::string& name, const AlphaSequence& alpha, Report& rep) {
  auto cert = weak_boundedness_bound(alpha);
  rep.plain.push_back(name + " bound " + std::to_string(cert.bound) + ": " + cert.criterion);
  return {{"kind", "weak_boundedness"}, {"sequence", name}, {"bound", cert.bound}, {"criterion", cert.criterion}};
}

Report cmd_invariants(const Options& opt) {
  Report rep{"invariants"};
  AlphaSequence alpha = parse_alpha_or_throw(opt.alpha);
  rep.inputs = {{"alpha", alpha.to_string()}};
  rep.witnesses.push_back(rich_json("alpha", alpha, rep));
  rep.witnesses.push_back(bound_json("alpha", alpha, rep));
  rep.bound = alpha.bound();
  rep.verdict = is_rich(alpha).rich ? "rich" : "not rich in range";
  if (!opt.beta.empty()) {
    AlphaSequence beta = parse_alpha_or_throw(opt.beta);
    rep.inputs["beta"] = beta.to_string();
    rep.witnesses.push_back(rich_json("beta", beta, rep));
    rep.witnesses.push_back(bound_json("beta", beta, rep));
    auto d = are_distinguished(alpha, beta);
    rep.verdict = d ? "distinguished" : "not distinguished";
    if (d) {
      rep.witnesses.push_back({{"kind", "distinguishing"},
                               {"cell", d->cell.to_string()},
                               {"kernel_of", d->in_kernel_of_beta ? "beta" : "alpha"},
                               {"pairing_alpha", pairing(alpha, d->cell)},
                               {"pairing_beta", pairing(beta, d->cell)}});
      rep.plain.push_back("distinguished, witness " + d->cell.to_string() + " in ker f_" +
                          (d->in_kernel_of_beta ? "beta" : "alpha"));
    } else {
      rep.plain.push_back("not distinguished: equal kernels");
    }
  }
  rep.plain.insert(rep.plain.begin(), rep.verdict);
  return rep;
}

Report cmd_ball(const Options& opt, int cap) {
  Report rep{"ball"};
  GroupContext ctx = context_from(opt.group, opt);
  rep.inputs = {{"group", ctx.describe()}, {"radius", opt.radius}, {"radius_cap", cap}};
  if (opt.radius > cap) throw Refusal(RadiusCapExceeded(opt.radius, cap).what());
  auto report = ball(ctx, opt.radius, cap, opt.elements);
  rep.verdict = "ok";
  rep.counts = report.counts;
  if (opt.elements)
    for (const auto& w : report.elements) rep.witnesses.push_back({{"kind", "element"}, {"word", word_json(w)}});
  rep.plain.push_back(ctx.describe() + " ball sizes: " + join_counts(report.counts));
  return rep;
}

Report cmd_compare(const Options& opt, int cap) {
  Report rep{"compare"};
  std::string left_name = opt.left.empty() ? (opt.alpha.empty() ? "G" : "E") : opt.left;
  GroupContext left = context_from(left_name, opt);
  GroupContext right = context_from(opt.right, opt);
  rep.inputs = {{"left", left.describe()}, {"right", right.describe()}, {"radius", opt.radius}, {"radius_cap", cap}};
  if (opt.radius > cap) throw Refusal(RadiusCapExceeded(opt.radius, cap).what());
  auto cmp = growth_compare(left, right, opt.radius, cap);
  rep.verdict = cmp.left.counts == cmp.right.counts ? "equal counts" : "different counts";
  rep.counts = json::array({cmp.left.counts, cmp.right.counts});
  rep.plain.push_back("radius  " + left.describe() + "  " + right.describe() + "  ratio");
  for (std::size_t r = 0; r < cmp.ratios.size(); ++r) {
    rep.witnesses.push_back({{"kind", "ratio"},
                             {"radius", r},
                             {"left", cmp.left.counts[r]},
                             {"right", cmp.right.counts[r]},
                             {"ratio", cmp.ratios[r]}});
    std::ostringstream line;
    line << std::setw(6) << r << "  " << cmp.left.counts[r] << "  " << cmp.right.counts[r] << "  " << std::fixed
         << std::setprecision(4) << cmp.ratios[r];
    rep.plain.push_back(line.str());
  }
  return rep;
}

Report cmd_zpower(const Options& opt) {
  Report rep{"zpower"};
  AlphaSequence alpha = parse_alpha_or_throw(opt.alpha);
  if (opt.n < 0) throw InputError("--n must be nonnegative");
  int max_index = opt.max_index_override.value_or(static_cast<int>(alpha.span()));
  rep.inputs = {{"alpha", alpha.to_string()}, {"n", opt.n}, {"max_index", max_index}};
  Word w;
  try {
    w = central_power_length_upper(alpha, opt.n, max_index);
  } catch (const NotRichInRange& e) {
    throw Refusal(e.what());
  }
  Word generator = express_central_generator(alpha, max_index);
  auto e = evaluate(alpha, w);
  const bool certified = e.g_word.empty() && e.z_exp == opt.n;
  rep.verdict = certified ? "certified" : "uncertified";
  rep.witnesses.push_back({{"kind", "central_power"},
                           {"word", word_json(w)},
                           {"length", w.size()},
                           {"generator_length", generator.size()},
                           {"evaluates_to", {{"g_word", word_json(e.g_word)}, {"z_exp", e.z_exp}}}});
  rep.plain.push_back("z^" + std::to_string(opt.n) + " = word of length " + std::to_string(w.size()) + " (" +
                      rep.verdict + ")");
  rep.plain.push_back(format_word(w));
  return rep;
}

Report cmd_probe(const Options& opt) {
  Report rep{"probe-torsion"};
  if (opt.max_len < 0 || opt.max_exp < 2) throw InputError("--max-len must be >= 0 and --max-exp >= 2");
  if (opt.max_len > 3 || opt.max_exp > 5) throw Refusal("torsion probe bounds are limited to --max-len 3, --max-exp 5");
  std::optional<AlphaSequence> alpha;
  if (!opt.alpha.empty()) alpha = parse_alpha_or_throw(opt.alpha);
  rep.inputs = {{"group", alpha ? "E_alpha(" + alpha->to_string() + ")" : "G"},
                {"max_len", opt.max_len},
                {"max_exp", opt.max_exp}};
  auto found = order_probe(alpha, opt.max_len, opt.max_exp);
  rep.verdict = found.empty() ? "no torsion found" : "torsion found";
  for (const auto& t : found) rep.witnesses.push_back({{"kind", "torsion"}, {"word", word_json(t.word)}, {"exponent", t.exponent}});
  rep.plain.push_back(rep.verdict);
  return rep;
}

Report cmd_present(const Options& opt) {
  Report rep{"present"};
  AlphaSequence alpha = parse_alpha_or_throw(opt.alpha);
  if (opt.max_index < 0) throw InputError("--max-index must be nonnegative");
  rep.inputs = {{"alpha", alpha.to_string()}, {"max_index", opt.max_index}};
  rep.verdict = "ok";
  json rels = json::array();
  for (const auto& r : extension_relators(alpha, opt.max_index)) rels.push_back(word_json(r));
  std::string text = extension_presentation(alpha, opt.max_index);
  rep.witnesses.push_back({{"kind", "presentation"}, {"relators", rels}, {"text", text}});
  rep.plain.push_back(text);
  return rep;
}

void emit(const Report& rep, const Options& opt, double elapsed_ms, std::ostream& out) {
  if (opt.plain) {
    for (const auto& line : rep.plain) out << line << '\n';
    return;
  }
  json j = {{"command", rep.command},
            {"inputs", rep.inputs},
            {"verdict", rep.verdict},
            {"witnesses", rep.witnesses},
            {"trace", rep.trace},
            {"counts", rep.counts},
            {"bound", rep.bound},
            {"seed", opt.seed},
            {"elapsed_ms", elapsed_ms},
            {"version", std::string(kVersion)}};
  out << j.dump(2) << '\n';
}

}  // namespace

json trace_to_json(const DehnTrace& trace) {
  json moves = json::array();
  for (const auto& m : trace.moves)
    moves.push_back({{"position", m.position},
                     {"relator_index", m.relator_index},
                     {"sign", m.sign},
                     {"rotation", m.rotation},
                     {"matched_length", m.matched_length}});
  return moves;
}

std::vector<DehnMove> moves_from_json(const json& trace) {
  std::vector<DehnMove> moves;
  for (const auto& m : trace)
    moves.push_back(DehnMove{m.at("position").get<std::size_t>(), m.at("matched_length").get<std::size_t>(),
                             m.at("relator_index").get<int>(), m.at("sign").get<int>(),
                             m.at("rotation").get<std::size_t>(), Word{}});
  return moves;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Small-cancellation group G, its central extensions E_alpha, and their invariants", "qiclass"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--plain", opt.plain, "Human-readable output instead of JSON");
  app.add_option("--seed", opt.seed, "Seed for every random choice (default 0)");
  app.set_version_flag("--version", std::string(kVersion));

  auto* check = app.add_subcommand("check", "Verify C'(lambda) and the absence of proper powers for r_0..r_N");
  check->add_option("--lambda", opt.lambda, "Small-cancellation constant p/q")->capture_default_str();
  check->add_option("--max-index", opt.max_index, "Largest relator index checked")->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Word problem in G, or in E_alpha with --alpha");
  solve->add_option("word", opt.word, "Word, e.g. \"a1 t2^-3 z^2\" (one or more arguments)")->required();
  solve->add_option("--alpha", opt.alpha, "Sequence selecting E_alpha, e.g. \"0,1,(0,1)*\"");
  solve->add_option("--strategy", opt.strategy, "deterministic | random")->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "Rich / distinguished / weakly bounded verdicts");
  inv->add_option("--alpha", opt.alpha, "First sequence")->required();
  inv->add_option("--beta", opt.beta, "Second sequence");

  auto* ball_cmd = app.add_subcommand("ball", "Ball sizes in the Cayley graph");
  ball_cmd->add_option("--group", opt.group, "G | GxZ | E")->capture_default_str();
  ball_cmd->add_option("--alpha", opt.alpha, "Sequence for E");
  ball_cmd->add_option("--radius", opt.radius, "Radius")->capture_default_str();
  ball_cmd->add_flag("--elements", opt.elements, "List one word per element");

  auto* compare = app.add_subcommand("compare", "Side-by-side growth of two groups");
  compare->add_option("--left", opt.left, "G | GxZ | E (default E with --alpha, else G)");
  compare->add_option("--right", opt.right, "G | GxZ | E")->capture_default_str();
  compare->add_option("--alpha", opt.alpha, "Sequence for E");
  compare->add_option("--radius", opt.radius, "Radius")->capture_default_str();

  auto* zpower = app.add_subcommand("zpower", "Word over G's generators equal to z^n in E_alpha");
  zpower->add_option("--alpha", opt.alpha, "Sequence")->required();
  zpower->add_option("--n", opt.n, "Power of z")->capture_default_str();
  zpower->add_option("--max-index", opt.max_index_override, "Relator range searched for the gcd witness");

  auto* probe = app.add_subcommand("probe-torsion", "Exhaustive search for elements of finite order");
  probe->add_option("--alpha", opt.alpha, "Probe E_alpha instead of G");
  probe->add_option("--max-len", opt.max_len, "Word length bound (<= 3)")->capture_default_str();
  probe->add_option("--max-exp", opt.max_exp, "Exponent bound (<= 5)")->capture_default_str();

  auto* present = app.add_subcommand("present", "Truncated presentation of E_alpha");
  present->add_option("--alpha", opt.alpha, "Sequence")->required();
  present->add_option("--max-index", opt.max_index, "Largest relator index")->default_val(3);

  std::vector<std::string> argv_storage{"qiclass"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  const int cap = radius_cap_from_env();
  const auto start = std::chrono::steady_clock::now();
  try {
    Report rep;
    if (check->parsed()) rep = cmd_check(opt);
    else if (solve->parsed()) rep = cmd_solve(opt);
    else if (inv->parsed()) rep = cmd_invariants(opt);
    else if (ball_cmd->parsed()) rep = cmd_ball(opt, cap);
    else if (compare->parsed()) rep = cmd_compare(opt, cap);
    else if (zpower->parsed()) rep = cmd_zpower(opt);
    else if (probe->parsed()) rep = cmd_probe(opt);
    else rep = cmd_present(opt);
    rep.inputs["argv"] = args;
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(rep, opt, elapsed, out);
    if (rep.verdict == "FAIL" || rep.verdict == "torsion found" || rep.verdict == "uncertified") return kViolation;
    return kOk;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
    return kViolation;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace qiclass::cli
