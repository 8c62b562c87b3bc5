#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hallbase/basis.hpp"
#include "hallbase/cache.hpp"
#include "hallbase/errors.hpp"
#include "hallbase/serialize.hpp"
#include "hallbase/type_a.hpp"

using namespace hallbase;

namespace {

enum Exit { kOk = 0, kInput = 1, kVerification = 2, kResource = 3 };

struct Options {
  std::string quiver;
  std::string word;
  std::string dims;
  std::string lambda, mu, nu;
  std::string reps;
  std::string cache;
  bool verify_cache = false;
  bool json_out = false;
  bool all = false;
  bool covers = false;
  int primes = 1;
  std::size_t cap = 1000000;
  int max_length = 5;
};

class Session {
 public:
  explicit Session(const Options& o)
      : opt_(o),
        rt_(load_quiver_file(o.quiver)),
        engine_(rt_, make_options(o)),
        monoid_(engine_, o.cap),
        basis_(monoid_) {
    if (opt_.cache.empty())
      if (const char* env = std::getenv("HALLBASE_CACHE")) opt_.cache = env;
    if (!opt_.cache.empty()) {
      if (opt_.verify_cache) verify_cache_file();
      cache_load(engine_, opt_.cache);
    }
  }

  void save() const {
    if (!opt_.cache.empty()) cache_store(engine_, opt_.cache);
  }

  const Options& opt() const { return opt_; }
  const RepTheory& rt() const { return rt_; }
  const RootSystem& rs() const { return rt_.roots(); }
  const HallEngine& engine() const { return engine_; }
  const MonoidWords& monoid() const { return monoid_; }
  const BasisLab& basis() const { return basis_; }

  Word word() const {
    if (opt_.word.empty()) throw InputError("this command needs a word (-w)");
    return parse_word(opt_.word, rt_.quiver().vertex_count());
  }
  DimVector dims() const {
    if (opt_.dims.empty()) throw InputError("this command needs a dimension vector (-d)");
    std::vector<int> v;
    std::stringstream ss(opt_.dims);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InputError("bad dimension vector entry '" + item + "'");
      }
    }
    DimVector d(std::move(v));
    if (d.size() != static_cast<std::size_t>(rt_.quiver().vertex_count()) || !d.is_nonnegative())
      throw InputError("dimension vector " + opt_.dims + " does not fit the quiver");
    return d;
  }
  KostantPartition partition(const std::string& text, const char* flag) const {
    if (text.empty()) throw InputError(std::string("this command needs ") + flag);
    return parse_partition(rt_.roots(), text);
  }

 private:
  static HallOptions make_options(const Options& o) {
    HallOptions h;
    h.held_out_primes = o.primes;
    return h;
  }

  void verify_cache_file() const {
    std::ifstream in(opt_.cache);
    if (!in) return;
    json data;
    try {
      data = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError("corrupt cache file " + opt_.cache + ": " + e.what());
    }
    const auto report = verify_cache(rt_, data);
    std::cerr << "cache check: " << report.checked << " entries recomputed, " << report.mismatches.size()
              << " mismatches\n";
    if (!report.mismatches.empty()) throw VerificationError("cache entry disagrees: " + report.mismatches.front());
  }

  Options opt_;
  RepTheory rt_;
  HallEngine engine_;
  MonoidWords monoid_;
  BasisLab basis_;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

std::string uplus_text(const RootSystem& rs, const UPlusElement& u, const char* basis) {
  std::ostringstream os;
  bool first = true;
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    os << (first ? "  " : "  + ") << "(" << it->second.str() << ") " << basis << "[" << rs.label(it->first) << "]\n";
    first = false;
  }
  if (first) os << "  0\n";
  return os.str();
}

// ---------------------------------------------------------------- commands

void cmd_roots(const Session& s) {
  json j = json::array();
  std::ostringstream os;
  for (const auto& r : s.rs().roots()) {
    j.push_back({{"index", r.index + 1}, {"dim", r.dim.values()}, {"label", s.rs().root_label(r.index)}});
    os << r.index + 1 << "  " << r.dim.str() << "  " << s.rs().root_label(r.index) << '\n';
  }
  emit(s.opt(), {{"type", s.rt().quiver().diagnosis().type_string()}, {"roots", j}},
       s.rt().quiver().diagnosis().type_string() + ": " + std::to_string(j.size()) + " positive roots\n" + os.str());
}

void cmd_partitions(const Session& s) {
  const DimVector d = s.dims();
  const auto order = linear_extension(s.rt(), s.rs().partitions(d));
  json parts = json::array();
  std::ostringstream os;
  os << order.size() << " partitions of " << d.str() << " (degeneration order, smallest first)\n";
  for (const auto& p : order) {
    parts.push_back({{"partition", partition_to_json(p)}, {"label", s.rs().label(p)}});
    os << "  " << partition_to_json(p).dump() << "  " << s.rs().label(p) << '\n';
  }
  json out{{"dims", d.values()}, {"partitions", parts}};
  if (s.opt().covers) {
    json edges = json::array();
    os << "cover relations:\n";
    for (const auto& [a, b] : cover_relations(s.rt(), order)) {
      edges.push_back({partition_to_json(order[a]), partition_to_json(order[b])});
      os << "  " << s.rs().label(order[a]) << "  <  " << s.rs().label(order[b]) << '\n';
    }
    out["covers"] = edges;
  }
  emit(s.opt(), out, os.str());
}

void cmd_wp(const Session& s) {
  const Word w = s.word();
  const auto p = s.monoid().wp(w);
  emit(s.opt(), {{"word", w.str()}, {"partition", partition_to_json(p)}, {"label", s.rs().label(p)}},
       "wp(" + w.str() + ") = " + s.rs().label(p) + "  " + partition_to_json(p).dump() + "\n");
}

KostantPartition lambda_or_word(const Session& s) {
  if (!s.opt().lambda.empty()) return s.partition(s.opt().lambda, "--lambda");
  if (!s.opt().word.empty()) return s.monoid().wp(s.word());
  throw InputError("this command needs --lambda or -w");
}

void cmd_fibre(const Session& s) {
  const auto lambda = lambda_or_word(s);
  const auto words = s.monoid().fibre(lambda);
  json j = json::array();
  std::ostringstream os;
  os << "fibre of " << s.rs().label(lambda) << ": " << words.size() << " words\n";
  for (const auto& w : words) {
    j.push_back(w.str());
    os << "  " << w.compact() << '\n';
  }
  emit(s.opt(), {{"partition", partition_to_json(lambda)}, {"words", j}}, os.str());
}

void cmd_distinguished(const Session& s) {
  const Word w = s.word();
  const auto p = s.monoid().wp(w);
  const IntPoly g = s.engine().gamma_at(w, p);
  json out{{"word", w.str()}, {"partition", partition_to_json(p)}, {"gamma", intpoly_to_json(g)},
           {"distinguished", g.is_one()}};
  std::string text = w.str() + ": gamma at " + s.rs().label(p) + " = " + g.str() + " -> " +
                     (g.is_one() ? "distinguished" : "not distinguished") + "\n";
  if (is_linear_a(s.rt().quiver())) {
    const bool crit = TypeA(s.rs()).is_distinguished(w);
    out["type_a_criterion"] = crit;
    text += std::string("type A criterion: ") + (crit ? "distinguished" : "not distinguished") + "\n";
  }
  emit(s.opt(), out, text);
}

void cmd_directed_word(const Session& s) {
  const auto lambda = lambda_or_word(s);
  if (s.opt().all) {
    const auto words = s.monoid().all_directed_words(lambda, s.opt().cap);
    json j = json::array();
    std::ostringstream os;
    os << words.size() << " directed distinguished words for " << s.rs().label(lambda) << '\n';
    for (const auto& w : words) {
      j.push_back(w.str());
      os << "  " << w.compact() << '\n';
    }
    emit(s.opt(), {{"partition", partition_to_json(lambda)}, {"words", j}}, os.str());
    return;
  }
  const Word w = s.monoid().directed_word(lambda);
  emit(s.opt(), {{"partition", partition_to_json(lambda)}, {"word", w.str()}},
       "directed word for " + s.rs().label(lambda) + ": " + w.compact() + "\n");
}

void cmd_hall(const Session& s) {
  const auto mu = s.partition(s.opt().mu, "--mu");
  const auto nu = s.partition(s.opt().nu, "--nu");
  if (!s.opt().lambda.empty()) {
    const auto lambda = s.partition(s.opt().lambda, "--lambda");
    const IntPoly p = s.engine().general_hall(lambda, mu, nu);
    emit(s.opt(), {{"lambda", partition_to_json(lambda)}, {"mu", partition_to_json(mu)}, {"nu", partition_to_json(nu)},
                   {"poly", intpoly_to_json(p)}},
         "phi^{" + s.rs().label(lambda) + "}_{" + s.rs().label(mu) + ", " + s.rs().label(nu) + "} = " +
             (p.is_zero() ? "0" : p.str()) + "\n");
    return;
  }
  const auto all = s.engine().general_hall_all(mu, nu);
  std::ostringstream os;
  for (const auto& [l, p] : all) os << "  " << s.rs().label(l) << ": " << p.str() << '\n';
  emit(s.opt(), {{"mu", partition_to_json(mu)}, {"nu", partition_to_json(nu)}, {"terms", polymap_to_json(s.rs(), all)}},
       os.str());
}

void cmd_gamma(const Session& s) {
  const Word w = s.word();
  const auto g = s.engine().gamma_word(w);
  const auto phi = s.engine().phi_word(w);
  std::ostringstream os;
  os << "gamma_" << w.str() << " and phi_" << w.str() << ":\n";
  for (const auto& [l, p] : g) os << "  " << s.rs().label(l) << ": gamma = " << p.str() << ", phi = " << phi.at(l).str() << '\n';
  emit(s.opt(), {{"word", w.str()}, {"gamma", polymap_to_json(s.rs(), g)}, {"phi", polymap_to_json(s.rs(), phi)}},
       os.str());
}

void cmd_star(const Session& s) {
  const auto mu = s.partition(s.opt().mu, "--mu");
  const auto nu = s.partition(s.opt().nu, "--nu");
  const auto p = s.monoid().star(mu, nu);
  emit(s.opt(), {{"mu", partition_to_json(mu)}, {"nu", partition_to_json(nu)}, {"star", partition_to_json(p)},
                 {"label", s.rs().label(p)}},
       s.rs().label(mu) + " * " + s.rs().label(nu) + " = " + s.rs().label(p) + "\n");
}

void cmd_monomial(const Session& s) {
  const Word w = s.word();
  const auto u = s.basis().monomial(w);
  const auto ut = s.basis().to_tilde(u);
  emit(s.opt(), {{"word", w.str()}, {"u", uplus_to_json(s.rs(), u)}, {"u_tilde", uplus_to_json(s.rs(), ut)}},
       "m^(" + w.str() + ") in the u-basis:\n" + uplus_text(s.rs(), u, "u") + "in the PBW basis:\n" +
           uplus_text(s.rs(), ut, "~u"));
}

std::map<KostantPartition, Word> representatives(const Session& s, const DimVector& d) {
  auto reps = s.basis().directed_representatives(d);
  if (s.opt().reps.empty()) return reps;
  std::stringstream ss(s.opt().reps);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const Word w = parse_word(item, s.rt().quiver().vertex_count());
    if (w.content(s.rt().quiver().vertex_count()) != d) throw InputError("word " + w.str() + " has the wrong content");
    reps[s.monoid().wp(w)] = w;
  }
  return reps;
}

std::string matrix_text(const std::vector<std::vector<LaurentPoly>>& m) {
  std::ostringstream os;
  for (const auto& row : m) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << (row[j].is_zero() ? "0" : row[j].str());
    os << "]\n";
  }
  return os.str();
}

void cmd_transition(const Session& s) {
  const DimVector d = s.dims();
  const auto t = s.basis().transition_matrix(d, representatives(s, d));
  std::ostringstream os;
  os << "order:";
  for (std::size_t k = 0; k < t.order.size(); ++k) os << "  " << s.rs().label(t.order[k]) << " <- " << t.reps[k].compact();
  os << "\nF (columns m^(w), rows ~u):\n" << matrix_text(t.entries);
  json out = transition_to_json(s.rs(), t);
  bool units = true;
  for (std::size_t k = 0; k < t.order.size(); ++k) units = units && t.entries[k][k].is_unit();
  if (units) {
    const auto r = s.basis().bar_matrix(t);
    os << "bar matrix R = F bar(F^-1):\n" << matrix_text(r);
    json rows = json::array();
    for (const auto& row : r) {
      json jr = json::array();
      for (const auto& x : row) jr.push_back(laurent_to_json(x));
      rows.push_back(jr);
    }
    out["bar_matrix"] = rows;
  }
  emit(s.opt(), out, os.str());
}

void cmd_canonical(const Session& s) {
  const DimVector d = s.dims();
  const auto cb = s.basis().canonical_basis(d, representatives(s, d));
  json elems = json::array();
  std::ostringstream os;
  for (std::size_t k = 0; k < cb.order.size(); ++k) {
    elems.push_back({{"partition", partition_to_json(cb.order[k])},
                     {"label", s.rs().label(cb.order[k])},
                     {"u_tilde", uplus_to_json(s.rs(), cb.elements[k])}});
    os << "c[" << s.rs().label(cb.order[k]) << "] =\n" << uplus_text(s.rs(), cb.elements[k], "~u");
  }
  emit(s.opt(), {{"dims", d.values()}, {"elements", elems}}, os.str());
}

void cmd_lemma67(const Session& s) {
  const int n = s.rt().quiver().vertex_count();
  std::size_t scanned = 0, distinguished = 0;
  json bad = json::array();
  std::ostringstream os;
  std::vector<int> letters;
  std::function<void()> rec = [&]() {
    if (!letters.empty()) {
      const Word w(letters);
      ++scanned;
      const auto p = s.monoid().wp(w);
      if (s.engine().gamma_at(w, p).is_one()) {
        ++distinguished;
        const int lhs = delta(w) + epsilon(s.rt().quiver(), w);
        const int rhs = s.basis().tilde_exponent(p);
        if (lhs != rhs) {
          bad.push_back({{"word", w.str()}, {"lhs", lhs}, {"rhs", rhs}});
          os << "  counterexample " << w.compact() << ": delta+epsilon = " << lhs << ", -dim+dim End = " << rhs << '\n';
        }
      }
    }
    if (static_cast<int>(letters.size()) == s.opt().max_length) return;
    for (int i = 1; i <= n; ++i) {
      letters.push_back(i);
      rec();
      letters.pop_back();
    }
  };
  rec();
  emit(s.opt(),
       {{"max_length", s.opt().max_length}, {"words", scanned}, {"distinguished", distinguished}, {"counterexamples", bad}},
       "scanned " + std::to_string(scanned) + " words up to length " + std::to_string(s.opt().max_length) + ", " +
           std::to_string(distinguished) + " distinguished, " + std::to_string(bad.size()) + " counterexamples\n" +
           os.str());
}

void cmd_cache(const Session& s) {
  if (s.opt().cache.empty()) throw InputError("no cache path: pass --cache or set HALLBASE_CACHE");
  const json data = cache_to_json(s.engine());
  emit(s.opt(),
       {{"path", s.opt().cache}, {"version", kCacheFormatVersion}, {"rows", data["rows"].size()},
        {"columns", data["columns"].size()}},
       "cache " + s.opt().cache + ": format " + std::to_string(kCacheFormatVersion) + ", " +
           std::to_string(data["rows"].size()) + " layer rows, " + std::to_string(data["columns"].size()) +
           " layer columns\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hallbase: Hall polynomials, generic extensions and canonical bases for Dynkin quivers"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    void (*run)(const Session&);
    std::vector<const char*> flags;
  };
  const std::vector<Command> commands = {
      {"roots", "list the positive roots", cmd_roots, {}},
      {"partitions", "list the Kostant partitions of a dimension vector", cmd_partitions, {"d", "covers"}},
      {"wp", "the partition of a word under the generic-extension map", cmd_wp, {"w"}},
      {"fibre", "all words mapping to a partition", cmd_fibre, {"w", "lambda"}},
      {"distinguished", "test whether a word is distinguished", cmd_distinguished, {"w"}},
      {"directed-word", "directed distinguished word(s) of a partition", cmd_directed_word, {"w", "lambda", "all"}},
      {"hall", "Hall polynomials phi^lambda_{mu,nu}", cmd_hall, {"lambda", "mu", "nu"}},
      {"gamma", "gamma and phi polynomials of a word", cmd_gamma, {"w"}},
      {"star", "generic extension of two partitions", cmd_star, {"mu", "nu"}},
      {"monomial", "monomial m^(w) in the u and PBW bases", cmd_monomial, {"w"}},
      {"transition", "monomial-to-PBW transition and bar matrices", cmd_transition, {"d", "reps"}},
      {"canonical", "canonical basis of one dimension vector", cmd_canonical, {"d", "reps"}},
      {"lemma67-experiment", "test the exponent identity on all distinguished words", cmd_lemma67, {"max-length"}},
      {"cache", "show or verify the memo cache", cmd_cache, {}},
  };

  void (*selected)(const Session&) = nullptr;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-q,--quiver", o.quiver, "quiver JSON file")->required();
    sub->add_flag("--json", o.json_out, "machine-readable output");
    sub->add_option("--cache", o.cache, "memo cache path (default $HALLBASE_CACHE)");
    sub->add_flag("--verify-cache", o.verify_cache, "recompute 3 random cache entries before use");
    sub->add_option("--primes", o.primes, "held-out primes per interpolation")->check(CLI::Range(1, 8));
    sub->add_option("--cap", o.cap, "enumeration cap for fibres and directed partitions");
    for (const std::string f : c.flags) {
      if (f == "w") sub->add_option("-w,--word", o.word, "word, e.g. 1,2,3,4,4 or 12344");
      if (f == "d") sub->add_option("-d,--dims", o.dims, "dimension vector, e.g. 1,1");
      if (f == "lambda") sub->add_option("--lambda", o.lambda, "partition JSON, e.g. {\"3\":1}");
      if (f == "mu") sub->add_option("--mu", o.mu, "partition JSON");
      if (f == "nu") sub->add_option("--nu", o.nu, "partition JSON");
      if (f == "all") sub->add_flag("--all", o.all, "every directed distinguished word");
      if (f == "covers") sub->add_flag("--covers", o.covers, "also print cover relations");
      if (f == "reps") sub->add_option("--reps", o.reps, "representative words separated by ';'");
      if (f == "max-length") sub->add_option("--max-length", o.max_length, "longest word scanned");
    }
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    Session session(o);
    selected(session);
    session.save();
    return kOk;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerification;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  }
}
