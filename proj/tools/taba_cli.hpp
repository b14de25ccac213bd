// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
#pragma once

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "taba/taba.hpp"

namespace taba::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kUnknownCommand = 2, kCheckFailed = 3 };

using Value = long long;
using Values = ValueList<Value>;

class MissingInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  std::string family;
  std::string variant;
  std::optional<std::string> list;
  std::optional<std::string> list2;
  std::optional<long long> index;
  std::optional<long long> depth;
  std::optional<std::string> term;
  std::optional<std::string> tree;
  std::optional<std::string> payload;
  bool trace = false;
  bool count_calls = false;
  bool check = false;

  Values first_list() const { return parsed(list, "--list"); }
  Values second_list() const { return parsed(list2, "--list2"); }

  std::size_t index_arg() const { return non_negative(index, "--index"); }
  std::size_t depth_arg() const { return non_negative(depth, "--depth"); }

  const std::string& term_text() const { return required(term, "--term"); }
  const std::string& tree_text() const { return required(tree, "--tree"); }
  const std::string& payload_text() const { return required(payload, "--payload"); }

 private:
  static Values parsed(const std::optional<std::string>& text, const char* flag) {
    return parse_value_list(required(text, flag));
  }
  static const std::string& required(const std::optional<std::string>& v, const char* flag) {
    if (!v) throw MissingInput(std::string("missing required input ") + flag);
    return *v;
  }
  static std::size_t non_negative(const std::optional<long long>& v, const char* flag) {
    if (!v) throw MissingInput(std::string("missing required input ") + flag);
    if (*v < 0) throw MissingInput(std::string(flag) + " must be non-negative");
    return static_cast<std::size_t>(*v);
  }
};

struct Outcome {
  std::string result;
  bool agrees = true;
};

using Handler = std::function<Outcome(const Request&, trace::Probe)>;
using Table = std::map<std::string, std::map<std::string, Handler>>;

namespace detail {

inline const std::equal_to<> eq{};

template <class T>
Outcome compare(const T& got, const T& expected) {
  return Outcome{render(got), got == expected};
}

inline bool oracle_rev2(const Values& vs, const Values& ws) { return oracle_reverse(vs) == ws; }

inline std::optional<PairList<Value>> oracle_reversed_zip(const Values& xs, const Values& ys) {
  auto z = oracle_zip_same_length(xs, ys);
  if (z) *z = oracle_reverse(*z);
  return z;
}

inline PairList<Value> oracle_prefix_cnv(const Values& xs, const Values& ys) {
  std::size_t k = std::min(xs.size(), ys.size());
  return *oracle_convolution(take(xs, k), take(ys, k));
}

inline PairList<Value> oracle_suffix_cnv(const Values& xs, const Values& ys) {
  std::size_t k = std::min(xs.size(), ys.size());
  return *oracle_convolution(take_last(xs, k), take_last(ys, k));
}

template <class Rep>
Handler eta_make(std::function<Term<Rep>(const Request&)> core_of,
                 std::function<Term<Rep>(const Term<Rep>&, std::size_t)> make) {
  return [core_of, make](const Request& r, trace::Probe) {
    Term<Rep> core = core_of(r);
    std::size_t d = r.depth_arg();
    return compare(make(core, d), oracle_make_eta(core, d));
  };
}

inline Table build_table() {
  Table t;

  auto& scnv = t["self_cnv"];
  for (SelfCnvVariant v : kSelfCnvVariants) {
    scnv[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      Values vs = r.first_list();
      return compare(self_cnv(v, vs, p), oracle_convolution(vs, vs));
    };
  }

  auto& rv = t["rev2"];
  for (Rev2Variant v : kRev2Variants) {
    rv[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      Values vs = r.first_list(), ws = r.second_list();
      return compare(rev2(v, eq, vs, ws, p), oracle_rev2(vs, ws));
    };
  }
  rv["v3_defunct"] = [](const Request& r, trace::Probe p) {
    Values vs = r.first_list(), ws = r.second_list();
    return compare(rev2_v3_defunct(eq, vs, ws, p), oracle_rev2(vs, ws));
  };
  rv["v1_refunct"] = [](const Request& r, trace::Probe p) {
    Values vs = r.first_list(), ws = r.second_list();
    return compare(rev2_v1_refunct(RefunctVariant::plain, eq, vs, ws, p), oracle_rev2(vs, ws));
  };
  rv["v1_refunct_fold_left"] = [](const Request& r, trace::Probe p) {
    Values vs = r.first_list(), ws = r.second_list();
    return compare(rev2_v1_refunct(RefunctVariant::fold_left, eq, vs, ws, p), oracle_rev2(vs, ws));
  };

  auto& cv = t["cnv"];
  for (CnvVariant v : kCnvVariants) {
    cv[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      Values xs = r.first_list(), ys = r.second_list();
      return compare(cnv(v, xs, ys, p), oracle_convolution(xs, ys));
    };
  }
  cv["prefix"] = [](const Request& r, trace::Probe p) {
    Values xs = r.first_list(), ys = r.second_list();
    return compare(convolve_with_prefix(xs, ys, p), oracle_prefix_cnv(xs, ys));
  };
  cv["suffix"] = [](const Request& r, trace::Probe p) {
    Values xs = r.first_list(), ys = r.second_list();
    return compare(convolve_with_suffix(xs, ys, p), oracle_suffix_cnv(xs, ys));
  };
  cv["swapped1"] = [](const Request& r, trace::Probe p) {
    Values xs = r.first_list(), ys = r.second_list();
    return compare(cnv_fold_swapped(SwapFamily::family1, xs, ys, p), oracle_reversed_zip(xs, ys));
  };
  cv["swapped2"] = [](const Request& r, trace::Probe p) {
    Values xs = r.first_list(), ys = r.second_list();
    return compare(cnv_fold_swapped(SwapFamily::family2, xs, ys, p),
                   oracle_zip_same_length(xs, ys));
  };

  auto& cw = t["cnw"];
  for (CnwVariant v : kCnwVariants) {
    cw[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      Values xs = r.first_list(), ys = r.second_list();
      return compare(cnw(v, xs, ys, p), oracle_convolution(xs, ys));
    };
  }

  auto& en = t["eta_n"];
  for (EtaNVariant v : {EtaNVariant::dso, EtaNVariant::dse}) {
    en[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      TermN term = parse_term<NamedRep>(r.term_text());
      return compare(etapn(v, term, p), oracle_eta(term));
    };
  }
  en["make"] = eta_make<NamedRep>(
      [](const Request& r) {
        return r.term ? parse_term<NamedRep>(*r.term) : exp_n(r.payload_text());
      },
      [](const TermN& core, std::size_t d) { return make_eta_redexn(core, d); });

  auto& el = t["eta_l"];
  el["ds"] = [](const Request& r, trace::Probe p) {
    TermL term = parse_term<LevelRep>(r.term_text());
    return compare(etapl_ds(term, p), oracle_eta(term));
  };
  el["make"] = eta_make<LevelRep>(
      [](const Request& r) { return r.term ? parse_term<LevelRep>(*r.term) : exp_l(); },
      [](const TermL& core, std::size_t d) { return make_eta_redexl(core, d); });

  auto& ei = t["eta_i"];
  for (EtaIVariant v : {EtaIVariant::cb, EtaIVariant::fo}) {
    ei[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      TermI term = parse_term<IndexRep>(r.term_text());
      return compare(etapi(v, term, p), oracle_eta(term));
    };
  }
  ei["make"] = eta_make<IndexRep>(
      [](const Request& r) { return r.term ? parse_term<IndexRep>(*r.term) : exp_i(); },
      [](const TermI& core, std::size_t d) { return make_eta_redexi(core, d); });

  auto& ix = t["index_rtl"];
  for (IndexVariant v : kIndexVariants) {
    ix[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      Values vs = r.first_list();
      std::size_t n = r.index_arg();
      return compare(list_index_rtl(v, vs, n, p), oracle_nth_rtl(vs, n));
    };
  }

  auto& cs = t["common_suffix"];
  cs["longest"] = [](const Request& r, trace::Probe p) {
    Values xs = r.first_list(), ys = r.second_list();
    return compare(longest_common_suffix(eq, xs, ys, p), oracle_longest_common_suffix(xs, ys));
  };
  cs["same_length"] = [](const Request& r, trace::Probe p) {
    Values xs = r.first_list(), ys = r.second_list();
    if (xs.size() != ys.size()) throw MissingInput("same_length needs lists of equal length");
    return compare(common_suffix_same_length(eq, xs, ys, p), oracle_longest_common_suffix(xs, ys));
  };
  cs["slide"] = [](const Request& r, trace::Probe p) {
    Values full = r.first_list(), sfx = r.second_list();
    if (!is_value_suffix(view_of(sfx), view_of(full)))
      throw MissingInput("--list2 must be a suffix of --list");
    return compare(slide(full, sfx, p), take_last(full, full.size() - sfx.size()));
  };

  auto& fl = t["first_and_last"];
  for (FirstLastVariant v : kFirstLastVariants) {
    fl[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      Values vs = r.first_list();
      return compare(first_and_last(v, vs, p), oracle_first_and_last(vs));
    };
  }

  t["fac"]["cps"] = [](const Request& r, trace::Probe p) {
    std::size_t n = r.index ? r.index_arg() : r.depth_arg();
    if (n > 20) throw MissingInput("factorial argument must be at most 20");
    auto m = static_cast<unsigned>(n);
    return compare(fac_cps(m, p), oracle_factorial(m));
  };

  t["balanced"]["cb"] = [](const Request& r, trace::Probe p) {
    BinTree tree = parse_tree(r.tree_text());
    return compare(balancedp(tree, p), oracle_balanced(tree));
  };

  auto& pf = t["prefixes"];
  for (PrefixesVariant v : {PrefixesVariant::cb, PrefixesVariant::cps}) {
    pf[std::string(name_of(v))] = [v](const Request& r, trace::Probe p) {
      Values vs = r.first_list();
      return compare(prefixes(v, vs, p), oracle_prefixes(vs));
    };
  }

  return t;
}

}  // namespace detail

inline const Table& table() {
  static const Table t = detail::build_table();
  return t;
}

/// Runs one request. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Run one list or term algorithm variant and print its result.", "taba"};
  app.add_option("family", req.family, "Algorithm family")->required();
  app.add_option("variant", req.variant, "Variant within the family")->required();
  app.add_option("--list", req.list, "First list, e.g. \"[1; 2; 3]\"");
  app.add_option("--list2", req.list2, "Second list");
  app.add_option("--index", req.index, "Index (or factorial argument)");
  app.add_option("--depth", req.depth, "Redex depth");
  app.add_option("--term", req.term, "Term in surface syntax");
  app.add_option("--tree", req.tree, "Tree: (leaf N) | (node T T)");
  app.add_option("--payload", req.payload, "Payload of the named core expression");
  app.add_flag("--trace", req.trace, "Print the call trace");
  app.add_flag("--count-calls", req.count_calls, "Print call counters");
  app.add_flag("--check", req.check, "Compare against the reference oracle");

  std::vector<const char*> argv{"taba"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInputError;
  }

  auto fam = table().find(req.family);
  if (fam == table().end()) {
    err << "taba: unknown family '" << req.family << "'\n";
    return kUnknownCommand;
  }
  auto var = fam->second.find(req.variant);
  if (var == fam->second.end()) {
    err << "taba: unknown variant '" << req.variant << "' for family '" << req.family << "'\n";
    return kUnknownCommand;
  }

  trace::TraceLog log;
  Outcome outcome;
  try {
    outcome = var->second(req, trace::Probe(log));
  } catch (const ParseError& e) {
    err << "taba: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const MissingInput& e) {
    err << "taba: " << e.what() << "\n";
    return kInputError;
  } catch (const ContractError& e) {
    err << "taba: " << e.what() << "\n";
    return kInputError;
  }

  out << outcome.result << "\n";
  if (req.trace) out << trace::render_trace(log);
  if (req.count_calls) {
    const auto& c = log.counters();
    out << "calls=" << c.calls << " tail_calls=" << c.tail_calls << " returns=" << c.returns
        << "\n";
  }
  if (req.check) {
    out << (outcome.agrees ? "check=ok" : "check=FAIL") << "\n";
    if (!outcome.agrees) return kCheckFailed;
  }
  return kOk;
}

}  // namespace taba::cli
