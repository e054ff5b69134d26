#include "cli.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "rlcm/boundary_affine.hpp"
#include "rlcm/regular_rep.hpp"
#include "rlcm/registry.hpp"
#include "rlcm/self_similar.hpp"
#include "rlcm/star_calculus.hpp"
#include "rlcm/text.hpp"
#include "rlcm/zappa_szep.hpp"
#include "rlcm/zoo.hpp"

namespace rlcm::cli {

namespace {

constexpr std::size_t kMaxWitnesses = 10;
constexpr std::size_t kOracleSamples = 10000;
constexpr std::int64_t kCompatRange = 8;

struct Options {
  std::string semigroup;
  std::string model;
  std::string suite;
  int radius = 3;
  std::string bidegree = "2,2";
  std::string mode;
  std::uint64_t seed = 0;
  std::vector<std::string> args;
};

/// Errors that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string status_of(const CheckReport& r) {
  if (!r.passed()) return "FAIL";
  if (r.compared == 0 && r.skipped > 0) return "UNDECIDED";
  return "PASS";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

SemigroupDescriptor require_semigroup(const Options& o) {
  if (o.semigroup.empty()) throw UsageError("--semigroup is required");
  return semigroup_for(o.semigroup);
}

int emit(std::ostream& out, std::vector<CheckReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.suite < b.suite; });
  int code = 0;
  for (const auto& r : reports) {
    out << report_line(r) << '\n';
    if (!r.passed()) code = 1;
  }
  return code;
}

std::string lcm_text(const SemigroupDescriptor& s, const LcmWitness& w) {
  return s.display(w.lcm) + " ; comp " + s.display(w.left_comp) + " " + s.display(w.right_comp);
}

int cmd_mul(const Options& o, std::ostream& out) {
  const auto s = require_semigroup(o);
  if (o.args.empty()) throw UsageError("mul needs at least one element");
  Element acc = s.identity;
  for (const auto& a : o.args) acc = s.multiply(acc, s.parse(a));
  out << s.display(acc) << '\n';
  return 0;
}

int cmd_lcm(const Options& o, std::ostream& out) {
  const auto s = require_semigroup(o);
  if (o.args.size() != 2) throw UsageError("lcm needs exactly two elements");
  const auto p = s.parse(o.args[0]);
  const auto q = s.parse(o.args[1]);
  if (s.has_right_lcm()) {
    try {
      auto l = s.right_lcm(p, q);
      out << (l ? lcm_text(s, *l) : "disjoint") << '\n';
      return 0;
    } catch (const HypothesisViolation& e) {
      out << "RESULT FAIL lcm:" << s.name << " compared=1 skipped=0 failed=1 | hypothesis " << e.what() << '\n';
      return 1;
    }
  }
  const auto ball = enumerate_ball(s, o.radius);
  const auto found = search_right_lcm(s, p, q, ball);
  switch (found.status) {
    case SearchStatus::Found:
      out << lcm_text(s, *found.result) << '\n';
      break;
    case SearchStatus::Disjoint:
      out << "disjoint within radius " << o.radius << '\n';
      break;
    case SearchStatus::BallTooSmall:
      out << "RESULT UNDECIDED lcm:" << s.name << " compared=0 skipped=1 failed=0 | ball radius " << o.radius
          << " too small\n";
      break;
  }
  return 0;
}

bool looks_like_word(const std::string& text) {
  static const std::regex token(R"(^\s*[vtse]\()");
  return std::regex_search(text, token);
}

int cmd_normalize(const Options& o, std::ostream& out) {
  if (o.semigroup.empty()) throw UsageError("--semigroup is required");
  if (o.args.empty()) throw UsageError("normalize needs a word or an element");
  const auto text = join(o.args, " ");
  auto ctx = word_context(o.semigroup);
  if (!looks_like_word(text)) {
    out << ctx.semigroup.display(ctx.semigroup.parse(text)) << '\n';
    return 0;
  }
  const auto word = parse_word(ctx, text);
  auto s = ctx.semigroup;
  if (!s.has_right_lcm()) s = with_brute_lcm(s, enumerate_ball(s, o.radius));
  try {
    out << mono_text(s, word_normalize(s, word)) << '\n';
  } catch (const BallTooSmall& e) {
    out << "RESULT UNDECIDED normalize:" << s.name << " compared=0 skipped=1 failed=0 | " << e.what() << '\n';
  }
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto s = require_semigroup(o);
  if (o.args.size() != 1) throw UsageError("decompose needs exactly one element");
  const auto p = s.parse(o.args[0]);
  if (o.semigroup == "nxn") {
    const auto [u, t] = nxn_decompose(decode_nxn(p));
    out << text::pair_text(u.r, u.x) << " " << text::pair_text(t.m, t.a) << '\n';
  } else if (o.semigroup == "zxz") {
    const auto [u, t] = zxz_decompose(decode_zxz(p));
    out << text::pair_text(u.r, u.x) << " " << text::pair_text(t.m, t.a) << '\n';
  } else if (auto zs = zs_for(o.semigroup)) {
    const auto z = zs_decode(p);
    out << zs->U.display(z.u) << " " << zs->A.display(z.a) << '\n';
  } else if (o.semigroup.rfind("bs:", 0) == 0) {
    const auto z = bs_to_zs(decode_bs(p));
    const auto d = zs_for("zs:" + o.semigroup);
    out << d->U.display(z.u) << " " << d->A.display(z.a) << '\n';
  } else {
    throw UsageError("decompose is defined for nxn, zxz, bs:c,d and zs:<name>");
  }
  return 0;
}

int cmd_check_axioms(const Options& o, std::ostream& out) {
  const auto s = require_semigroup(o);
  const auto zs = zs_for(o.semigroup);
  std::string suite = o.suite;
  if (suite.empty()) suite = zs ? "zs" : (o.semigroup.rfind("ftheta:", 0) == 0 ? "compat" : "lcm");
  std::vector<CheckReport> reports;
  if (suite == "zs" || suite == "all") {
    if (!zs) throw UsageError("suite zs needs a zs:<name> selector");
    reports.push_back(zs_axiom_check(*zs, enumerate_ball(zs->U, o.radius), enumerate_ball(zs->A, o.radius)));
  }
  if (suite == "lcm" || suite == "all") reports.push_back(check_cancellativity_and_lcm(s, enumerate_ball(s, o.radius)));
  if (suite == "compat") {
    if (o.semigroup.rfind("ftheta:", 0) != 0) throw UsageError("suite compat needs an ftheta:m,n selector");
    const auto pos = o.semigroup.find(':');
    const auto comma = o.semigroup.find(',');
    const int m = std::stoi(o.semigroup.substr(pos + 1, comma - pos - 1));
    const int n = std::stoi(o.semigroup.substr(comma + 1));
    reports.push_back(prop_compat_check(theta_build(m, n), adding_machine(m), adding_machine(n), -kCompatRange,
                                        kCompatRange));
  }
  if (reports.empty()) throw UsageError("unknown axiom suite " + suite);
  return emit(out, std::move(reports));
}

RelationSuite relation_suite(const std::string& name) {
  if (name == "Li" || name == "li") return RelationSuite::Li;
  if (name == "covariance") return RelationSuite::Covariance;
  if (name == "K") return RelationSuite::K;
  throw UsageError("unknown relation suite " + name);
}

int cmd_check_relations(const Options& o, std::ostream& out) {
  if (!o.model.empty()) {
    const auto suite = o.suite.empty() ? std::string("boundary") : o.suite;
    if (suite == "phi") return emit(out, verify_generator_maps());
    if (suite != "boundary") throw UsageError("model suites are boundary and phi");
    return emit(out, verify_boundary_suite(build_model(o.model), suite));
  }
  const auto s = require_semigroup(o);
  if (!s.has_right_lcm()) throw UsageError(s.name + " has no closed right LCM; relation suites need one");
  const auto zs = zs_for(o.semigroup);
  const auto ball = enumerate_ball(s, o.radius);
  std::vector<std::string> suites;
  if (o.suite.empty()) {
    suites = {"Li", "covariance"};
    if (zs) suites.push_back("K");
  } else {
    suites = {o.suite};
  }
  std::vector<CheckReport> reports;
  for (const auto& name : suites) {
    if (name == "oracle") {
      const auto tokens = enumerate_ball(s, 2).elements();
      std::mt19937_64 rng(o.seed);
      const std::size_t samples = o.mode == "exact" ? 0 : kOracleSamples;
      reports.push_back(oracle_check_words(s, tokens, 4, ball, samples, rng));
      continue;
    }
    const auto suite = relation_suite(name);
    if (suite == RelationSuite::K && !zs) throw UsageError("suite K needs a zs:<name> selector");
    reports.push_back(verify_relations(s, ball, suite, zs ? &*zs : nullptr));
  }
  return emit(out, std::move(reports));
}

int cmd_foundation(const Options& o, std::ostream& out) {
  const auto s = require_semigroup(o);
  if (o.args.empty()) throw UsageError("foundation needs at least one element");
  std::vector<Element> f;
  for (const auto& a : o.args) f.push_back(s.parse(a));
  const auto mode = o.mode.empty() ? std::string("bounded") : o.mode;
  FoundationVerdict v;
  if (mode == "exact") {
    try {
      v = is_foundation_exact(s, f);
    } catch (const ModeUnsupported& e) {
      throw UsageError(e.what());
    }
  } else if (mode == "bounded") {
    v = is_foundation_bounded(s, f, enumerate_ball(s, o.radius));
  } else {
    throw UsageError("--mode must be exact or bounded");
  }
  static const char* const status[] = {"PASS", "FAIL", "UNDECIDED"};
  static const char* const verdict[] = {"Foundation", "NotFoundation", "UndecidedBeyondBall"};
  const auto k = static_cast<int>(v.status);
  out << "RESULT " << status[k] << " foundation:" << mode << ":" << s.name << " checked=" << v.checked << " "
      << verdict[k];
  if (v.witness) out << " | witness " << s.display(*v.witness);
  out << '\n';
  return v.status == FoundationStatus::NotFoundation ? 1 : 0;
}

int cmd_survey(const Options& o, std::ostream& out) {
  const auto sel = o.semigroup.empty() && !o.args.empty() ? "ftheta:" + o.args[0] : o.semigroup;
  if (sel.rfind("ftheta:", 0) != 0) throw UsageError("survey-ftheta needs --semigroup ftheta:m,n");
  const auto s = semigroup_for(sel);  // validates m, n
  const auto comma = sel.find(',');
  const int m = std::stoi(sel.substr(7, comma - 7));
  const int n = std::stoi(sel.substr(comma + 1));
  int bx = 0;
  int by = 0;
  {
    std::istringstream in(o.bidegree);
    char c = 0;
    if (!(in >> bx >> c >> by) || c != ',' || bx < 0 || by < 0) throw UsageError("--bidegree must be a,b");
  }
  const auto v = ftheta_right_lcm_survey(theta_build(m, n), bx, by);
  out << "RESULT " << (v.right_lcm() ? "PASS" : "FAIL") << " survey:" << s.name << " elements=" << v.elements
      << " pairs=" << v.pairs << " common=" << v.pairs_with_common << " counterexamples=" << v.counterexamples.size()
      << (v.right_lcm() ? " RightLCM" : " Counterexample");
  for (std::size_t i = 0; i < std::min(kMaxWitnesses, v.counterexamples.size()); ++i) {
    const auto& c = v.counterexamples[i];
    std::vector<std::string> mins;
    for (const auto& z : c.minimal) mins.push_back(ftheta_text(z));
    out << " | " << ftheta_text(c.p) << " " << ftheta_text(c.q) << " -> " << join(mins, " ");
  }
  out << '\n';
  return v.right_lcm() ? 0 : 1;
}

}  // namespace

std::string report_line(const CheckReport& r) {
  std::ostringstream line;
  line << "RESULT " << status_of(r) << " " << r.suite << " compared=" << r.compared << " skipped=" << r.skipped
       << " failed=" << r.violations.size();
  std::vector<std::string> ws;
  for (const auto& v : r.violations) ws.push_back(v.check + " " + v.witness);
  std::sort(ws.begin(), ws.end());
  for (std::size_t i = 0; i < std::min(kMaxWitnesses, ws.size()); ++i) line << " | " << ws[i];
  return line.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for right LCM semigroups and Zappa-Szep products", "rlcm"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"mul", "multiply elements left to right"},
      {"lcm", "right LCM of two elements"},
      {"normalize", "normal form of an element or a *-word"},
      {"check-axioms", "axiom and LCM certification over balls"},
      {"check-relations", "relation suites (Li, covariance, K, oracle, boundary, phi)"},
      {"foundation", "foundation-set verdict"},
      {"survey-ftheta", "right LCM survey for a 2-graph"},
      {"decompose", "unique factorisation p = u a"},
  };
  for (const auto& [name, help] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--semigroup", o.semigroup, "semigroup selector");
    sub->add_option("--model", o.model, "boundary model (QN, QZ, Q2, BS1n(d), NxN, ZxZ)");
    sub->add_option("--suite", o.suite, "check suite");
    sub->add_option("--radius", o.radius, "ball radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--bidegree", o.bidegree, "bidegree box a,b");
    sub->add_option("--mode", o.mode, "exact or bounded");
    sub->add_option("--seed", o.seed, "seed for randomised suites");
    sub->add_option("args", o.args, "elements or word tokens");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  const auto* sub = app.get_subcommands().front();
  const auto verb = sub->get_name();
  try {
    if (verb == "mul") return cmd_mul(o, out);
    if (verb == "lcm") return cmd_lcm(o, out);
    if (verb == "normalize") return cmd_normalize(o, out);
    if (verb == "decompose") return cmd_decompose(o, out);
    if (verb == "check-axioms") return cmd_check_axioms(o, out);
    if (verb == "check-relations") return cmd_check_relations(o, out);
    if (verb == "foundation") return cmd_foundation(o, out);
    if (verb == "survey-ftheta") return cmd_survey(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownSelector& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownModel& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"rlcm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rlcm::cli
