// Copyright 2026 The genlyndon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "genlyndon/genlyndon.hpp"

namespace genlyndon::cli {
namespace {

using nlohmann::json;

enum class Format { Text, Json };

struct Config {
  std::string order;
  std::string alphabet;
  std::string sep;
  std::string format;
  std::size_t max_length = kDefaultFactorizeGuard;
  std::uint64_t guard = kDefaultSearchGuard;
};

struct Context {
  AlphabetPtr alphabet;
  OrderSchedule schedule;
  Format format = Format::Text;
};

class Usage : public Error {
 public:
  using Error::Error;
};

Format resolve_format(const std::string& flag) {
  std::string value = flag;
  if (value.empty()) {
    const char* env = std::getenv("GENLYNDON_FORMAT");
    value = env != nullptr ? env : "text";
  }
  if (value == "text") return Format::Text;
  if (value == "json") return Format::Json;
  throw Usage("unknown output format '" + value + "' (expected text or json)");
}

std::optional<unsigned long> numeric(const std::string& label) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
  if (ec != std::errc() || ptr != label.data() + label.size()) return std::nullopt;
  return value;
}

// Sorted distinct labels of the given words; numeric labels sort by value.
AlphabetPtr derive_alphabet(const std::vector<std::string>& words, const std::string& sep) {
  std::set<std::string> distinct;
  for (const auto& w : words)
    for (auto& label : split_labels(w, sep)) distinct.insert(std::move(label));
  if (distinct.empty()) throw Usage("cannot derive an alphabet: pass --alphabet or --order");
  std::vector<std::string> labels(distinct.begin(), distinct.end());
  const bool all_numeric = std::all_of(labels.begin(), labels.end(),
                                       [](const std::string& l) { return numeric(l).has_value(); });
  if (all_numeric)
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      return *numeric(a) < *numeric(b);
    });
  return std::make_shared<const Alphabet>(std::move(labels));
}

Context make_context(const Config& cfg, const std::vector<std::string>& words) {
  const Format format = resolve_format(cfg.format);
  AlphabetPtr alphabet;
  if (!cfg.alphabet.empty()) alphabet = Alphabet::from_labels(cfg.alphabet, cfg.sep);
  if (!cfg.order.empty()) {
    auto parsed = parse_order_spec(cfg.order, alphabet, cfg.sep);
    return {parsed.alphabet, parsed.schedule, format};
  }
  if (!alphabet) alphabet = derive_alphabet(words, cfg.sep);
  return {alphabet, OrderSchedule::lex(alphabet), format};
}

Word parse_word(const Context& ctx, const Config& cfg, const std::string& text) {
  Word w = Word::parse(ctx.alphabet, text, cfg.sep);
  if (w.size() > cfg.max_length)
    throw GuardExceeded("word length " + std::to_string(w.size()) + " exceeds --max-length " +
                        std::to_string(cfg.max_length));
  return w;
}

Word parse_nonempty(const Context& ctx, const Config& cfg, const std::string& text) {
  Word w = parse_word(ctx, cfg, text);
  if (w.empty()) throw Usage("word must be nonempty");
  return w;
}

json words_json(const std::vector<Word>& words, const std::string& sep) {
  json out = json::array();
  for (const auto& w : words) out.push_back(w.str(sep));
  return out;
}

std::string join(const std::vector<Word>& words, const std::string& sep) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w.str(sep);
  }
  return out;
}

std::string rational_str(const Rational& r) { return r.str(); }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args);

 private:
  int compare(bool omega);
  int check();
  int factorize_cmd();
  int single_factor(bool first);
  int first_prefix();
  int enumerate();
  int cf_compare_cmd();
  int regressions();

  void emit(const Context& ctx, const json& j, const std::string& text) {
    if (ctx.format == Format::Json)
      out_ << j.dump() << '\n';
    else
      out_ << text << '\n';
  }

  std::ostream& out_;
  std::ostream& err_;
  Config cfg_;
  std::vector<std::string> operands_;
  std::string method_ = "suffix";
  std::size_t max_len_ = 0;
  std::size_t prefix_len_ = 0;
  std::size_t bound_ = 0;
  bool explain_ = false;
};

int Runner::compare(bool omega) {
  const auto ctx = make_context(cfg_, operands_);
  const Word u = omega ? parse_nonempty(ctx, cfg_, operands_[0]) : parse_word(ctx, cfg_, operands_[0]);
  const Word v = omega ? parse_nonempty(ctx, cfg_, operands_[1]) : parse_word(ctx, cfg_, operands_[1]);
  const Ordering o = omega ? compare_omega(u, v, ctx.schedule) : compare_finite(u, v, ctx.schedule);
  json j{{"u", u.str(cfg_.sep)},
         {"v", v.str(cfg_.sep)},
         {"order", ctx.schedule.spec(cfg_.sep)},
         {"ordering", std::string(symbol(o))}};
  std::string text;
  if (omega) {
    const auto pos = comparison_position(u, v);
    j["position"] = pos ? json(*pos) : json(nullptr);
    text = "(" + u.str(cfg_.sep) + ")^w " + std::string(symbol(o)) + " (" + v.str(cfg_.sep) + ")^w";
    if (pos) text += " at position " + std::to_string(*pos);
  } else {
    text = u.str(cfg_.sep) + " " + std::string(symbol(o)) + " " + v.str(cfg_.sep);
  }
  emit(ctx, j, text);
  return kExitOk;
}

int Runner::check() {
  const auto ctx = make_context(cfg_, operands_);
  const Word w = parse_nonempty(ctx, cfg_, operands_[0]);
  std::vector<LyndonMethod> methods;
  const std::vector<LyndonMethod> all{LyndonMethod::Rotations, LyndonMethod::SplitCompare,
                                      LyndonMethod::SuffixCompare};
  if (method_ == "all") {
    methods = all;
  } else {
    for (auto m : all)
      if (method_name(m) == method_) methods.push_back(m);
  }
  json results = json::object();
  std::ostringstream text;
  bool any = false, every = true;
  for (auto m : methods) {
    const bool r = is_generalized_lyndon(w, ctx.schedule, m);
    results[std::string(method_name(m))] = r;
    any = any || r;
    every = every && r;
    if (methods.size() > 1) text << method_name(m) << ": ";
    text << (r ? "true" : "false");
    if (m != methods.back()) text << '\n';
  }
  if (any != every) throw InternalError("Lyndon characterizations disagree on " + w.str(cfg_.sep));
  emit(ctx,
       {{"word", w.str(cfg_.sep)}, {"order", ctx.schedule.spec(cfg_.sep)}, {"results", results},
        {"lyndon", every}},
       text.str());
  return every ? kExitOk : kExitFalse;
}

int Runner::factorize_cmd() {
  const auto ctx = make_context(cfg_, operands_);
  const Word w = parse_word(ctx, cfg_, operands_[0]);
  const auto f = factorize(w, ctx.schedule, cfg_.max_length);
  if (ctx.format == Format::Json)
    out_ << to_json(f, cfg_.sep) << '\n';
  else
    out_ << f.str(cfg_.sep) << '\n';
  return kExitOk;
}

int Runner::single_factor(bool first) {
  const auto ctx = make_context(cfg_, operands_);
  const Word w = parse_nonempty(ctx, cfg_, operands_[0]);
  const Word f = first ? first_factor(w, ctx.schedule) : last_factor(w, ctx.schedule);
  emit(ctx,
       {{"word", w.str(cfg_.sep)}, {"order", ctx.schedule.spec(cfg_.sep)}, {"factor", f.str(cfg_.sep)}},
       f.str(cfg_.sep));
  return kExitOk;
}

int Runner::first_prefix() {
  const auto ctx = make_context(cfg_, operands_);
  const Word w = parse_nonempty(ctx, cfg_, operands_[0]);
  json j{{"word", w.str(cfg_.sep)}, {"order", ctx.schedule.spec(cfg_.sep)}};
  Word p = w;
  switch (ctx.schedule.kind()) {
    case OrderSchedule::Kind::Constant:
      p = classical_first_prefix(w, ClassicalContext(ctx.alphabet, ctx.schedule.base()));
      j["family"] = "classical";
      break;
    case OrderSchedule::Kind::Alternating: {
      const GaloisContext galois(ctx.alphabet, ctx.schedule.base());
      p = galois_first_prefix(w, galois);
      j["family"] = "galois";
      j["multiplicity"] = multiplicity(factorize(w, galois.schedule(), cfg_.max_length));
      break;
    }
    default:
      throw Usage("first-prefix needs a constant or alternating order");
  }
  j["prefix"] = p.str(cfg_.sep);
  emit(ctx, j, p.str(cfg_.sep));
  return kExitOk;
}

int Runner::enumerate() {
  const auto ctx = make_context(cfg_, operands_);
  if (prefix_len_ > 0) {
    const std::size_t bound = bound_ > 0 ? bound_ : std::max(max_len_, prefix_len_);
    const auto prefixes =
        lyndon_prefixes_of_length(ctx.schedule, ctx.alphabet, prefix_len_, bound, cfg_.guard);
    emit(ctx,
         {{"order", ctx.schedule.spec(cfg_.sep)},
          {"length", prefix_len_},
          {"bound", bound},
          {"count", prefixes.size()},
          {"prefixes", words_json(prefixes, cfg_.sep)}},
         "prefixes of length " + std::to_string(prefix_len_) + " (bound " + std::to_string(bound) +
             "): " + std::to_string(prefixes.size()) + ": " + join(prefixes, cfg_.sep));
    return kExitOk;
  }
  if (max_len_ == 0) throw Usage("enumerate needs --max-len N or --prefixes N");
  const auto report = enumerate_lyndon(ctx.schedule, ctx.alphabet, max_len_, cfg_.guard);
  if (ctx.format == Format::Json) {
    out_ << to_json(report, cfg_.sep) << '\n';
    return kExitOk;
  }
  for (std::size_t n = 1; n <= report.words.size(); ++n)
    out_ << "length " << n << ": " << report.words[n - 1].size() << ": "
         << join(report.words[n - 1], cfg_.sep) << '\n';
  out_ << "total: " << report.total() << '\n';
  return kExitOk;
}

int Runner::cf_compare_cmd() {
  if (!cfg_.order.empty()) throw Usage("cf-compare always uses the numeric alternating order");
  Config cfg = cfg_;
  if (cfg.sep.empty()) cfg.sep = ",";
  const AlphabetPtr alphabet = cfg.alphabet.empty() ? derive_alphabet(operands_, cfg.sep)
                                                    : Alphabet::from_labels(cfg.alphabet, cfg.sep);
  const Context ctx{alphabet, numeric_alternating(alphabet), resolve_format(cfg.format)};
  const Word u = parse_nonempty(ctx, cfg, operands_[0]);
  const Word v = parse_nonempty(ctx, cfg, operands_[1]);
  const auto r = cf_compare_explained(u, v);
  json j{{"u", u.str(cfg.sep)}, {"v", v.str(cfg.sep)}, {"ordering", std::string(symbol(r.ordering))}};
  std::string text = u.str(cfg.sep) + " " + std::string(symbol(r.ordering)) + " " + v.str(cfg.sep);
  if (explain_) {
    j["depth"] = r.depth;
    if (r.depth > 0) {
      j["u_interval"] = {rational_str(r.u_interval.lo), rational_str(r.u_interval.hi)};
      j["v_interval"] = {rational_str(r.v_interval.lo), rational_str(r.v_interval.hi)};
      text += "\ndepth: " + std::to_string(r.depth) + "\nu in [" + rational_str(r.u_interval.lo) +
              ", " + rational_str(r.u_interval.hi) + "]\nv in [" + rational_str(r.v_interval.lo) +
              ", " + rational_str(r.v_interval.hi) + "]";
    } else {
      text += "\ndepth: 0 (equal omega-words)";
    }
  }
  emit(ctx, j, text);
  return kExitOk;
}

int Runner::regressions() {
  const Format format = resolve_format(cfg_.format);
  const auto items = run_regressions();
  bool ok = true;
  json j = json::array();
  for (const auto& item : items) {
    ok = ok && item.passed;
    j.push_back({{"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
    if (format == Format::Text) {
      out_ << (item.passed ? "[PASS] " : "[FAIL] ") << item.name;
      if (!item.passed && !item.detail.empty()) out_ << ": " << item.detail;
      out_ << '\n';
    }
  }
  if (format == Format::Json) out_ << j.dump() << '\n';
  return ok ? kExitOk : kExitFalse;
}

int Runner::main(const std::vector<std::string>& args) {
  CLI::App app{"Generalized Lyndon words under position-dependent orders", "genlyndon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--order", cfg_.order, "Order spec, e.g. lex:ab, alt:ab, primeflip:ab");
  app.add_option("--alphabet", cfg_.alphabet, "Alphabet labels in natural order");
  app.add_option("--sep", cfg_.sep, "Label separator for multi-character labels");
  app.add_option("--format", cfg_.format, "Output format: text or json (default $GENLYNDON_FORMAT)")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-length", cfg_.max_length, "Longest accepted word");
  app.add_option("--guard", cfg_.guard, "Largest search space for enumeration");

  std::function<int()> action;
  const auto words = [&](CLI::App* sub, std::size_t n) {
    sub->add_option("words", operands_, n == 1 ? "Word" : "Words")->expected(static_cast<int>(n))->required();
  };

  auto* cmp = app.add_subcommand("compare", "Compare two finite words");
  words(cmp, 2);
  cmp->callback([&] { action = [&] { return compare(false); }; });

  auto* omega = app.add_subcommand("compare-omega", "Compare the omega-powers of two words");
  words(omega, 2);
  omega->callback([&] { action = [&] { return compare(true); }; });

  auto* chk = app.add_subcommand("check", "Test generalized Lyndon membership");
  words(chk, 1);
  chk->add_option("--method", method_, "rotations, split, suffix or all")
      ->check(CLI::IsMember({"rotations", "split", "suffix", "all"}));
  chk->callback([&] { action = [&] { return check(); }; });

  auto* fac = app.add_subcommand("factorize", "Nonincreasing factorization");
  words(fac, 1);
  fac->callback([&] { action = [&] { return factorize_cmd(); }; });

  auto* ff = app.add_subcommand("first-factor", "First factor of the factorization");
  words(ff, 1);
  ff->callback([&] { action = [&] { return single_factor(true); }; });

  auto* lf = app.add_subcommand("last-factor", "Last factor of the factorization");
  words(lf, 1);
  lf->callback([&] { action = [&] { return single_factor(false); }; });

  auto* fp = app.add_subcommand("first-prefix", "Shortest prefix characterizing the first factor");
  words(fp, 1);
  fp->callback([&] { action = [&] { return first_prefix(); }; });

  auto* en = app.add_subcommand("enumerate", "List generalized Lyndon words or their prefixes");
  en->add_option("--max-len", max_len_, "Longest word to enumerate")->check(CLI::PositiveNumber);
  en->add_option("--prefixes", prefix_len_, "Length of the prefixes to list")->check(CLI::PositiveNumber);
  en->add_option("--bound", bound_, "Extension bound for --prefixes")->check(CLI::PositiveNumber);
  en->callback([&] { action = [&] { return enumerate(); }; });

  auto* cf = app.add_subcommand("cf-compare", "Compare continued fractions with periodic quotients");
  words(cf, 2);
  cf->add_flag("--explain", explain_, "Print the separating depth and intervals");
  cf->callback([&] { action = [&] { return cf_compare_cmd(); }; });

  auto* reg = app.add_subcommand("regressions", "Run the pinned example corpus");
  reg->callback([&] { action = [&] { return regressions(); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const GuardExceeded& e) {
    err_ << "genlyndon: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InternalError& e) {
    err_ << "genlyndon: internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const Error& e) {
    err_ << "genlyndon: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).main(args);
}

}  // namespace genlyndon::cli
