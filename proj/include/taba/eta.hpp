// Lambda terms with named variables, de Bruijn levels, and de Bruijn indices,
// together with constructors and recognizers of eta-redexes of any depth:
//   lam x1 ... lam xd. core x1 ... xd
#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "taba/errors.hpp"
#include "taba/render.hpp"
#include "taba/trace.hpp"

namespace taba {

enum class TermTag { var, lam, app, exp };

struct NamedRep {
  using Var = std::string;
  using Binder = std::string;
  using Payload = std::string;
  static constexpr char suffix = 'n';
};

struct LevelRep {
  using Var = std::size_t;
  using Binder = std::monostate;
  using Payload = std::monostate;
  static constexpr char suffix = 'l';
};

struct IndexRep {
  using Var = std::size_t;
  using Binder = std::monostate;
  using Payload = std::monostate;
  static constexpr char suffix = 'i';
};

/// An immutable term. Subterms are shared, so copies are cheap.
template <class Rep>
class Term {
 public:
  using Var = typename Rep::Var;
  using Binder = typename Rep::Binder;
  using Payload = typename Rep::Payload;

  static Term var(Var v) {
    Term t(TermTag::var);
    t.var_ = std::move(v);
    return t;
  }
  static Term lam(Binder b, Term body) {
    Term t(TermTag::lam);
    t.binder_ = std::move(b);
    t.left_ = std::make_shared<const Term>(std::move(body));
    return t;
  }
  static Term lam(Term body)
    requires std::same_as<Binder, std::monostate>
  {
    return lam(Binder{}, std::move(body));
  }
  static Term app(Term fun, Term arg) {
    Term t(TermTag::app);
    t.left_ = std::make_shared<const Term>(std::move(fun));
    t.right_ = std::make_shared<const Term>(std::move(arg));
    return t;
  }
  static Term exp(Payload p = {}) {
    Term t(TermTag::exp);
    t.payload_ = std::move(p);
    return t;
  }

  TermTag tag() const noexcept { return tag_; }
  bool is_var() const noexcept { return tag_ == TermTag::var; }
  bool is_lam() const noexcept { return tag_ == TermTag::lam; }
  bool is_app() const noexcept { return tag_ == TermTag::app; }
  bool is_exp() const noexcept { return tag_ == TermTag::exp; }

  const Var& var_ref() const { return var_; }
  const Binder& binder() const { return binder_; }
  const Payload& payload() const { return payload_; }
  const Term& body() const { return *left_; }
  const Term& fun() const { return *left_; }
  const Term& arg() const { return *right_; }

  std::size_t size() const {
    switch (tag_) {
      case TermTag::lam: return 1 + left_->size();
      case TermTag::app: return 1 + left_->size() + right_->size();
      default: return 1;
    }
  }

  friend bool operator==(const Term& a, const Term& b) {
    if (a.tag_ != b.tag_) return false;
    switch (a.tag_) {
      case TermTag::var: return a.var_ == b.var_;
      case TermTag::exp: return a.payload_ == b.payload_;
      case TermTag::lam:
        return a.binder_ == b.binder_ && (a.left_ == b.left_ || *a.left_ == *b.left_);
      case TermTag::app:
        return (a.left_ == b.left_ || *a.left_ == *b.left_) &&
               (a.right_ == b.right_ || *a.right_ == *b.right_);
    }
    return false;
  }

 private:
  explicit Term(TermTag tag) : tag_(tag) {}

  TermTag tag_;
  Var var_{};
  Binder binder_{};
  Payload payload_{};
  std::shared_ptr<const Term> left_;
  std::shared_ptr<const Term> right_;
};

using TermN = Term<NamedRep>;
using TermL = Term<LevelRep>;
using TermI = Term<IndexRep>;

inline TermN var_n(std::string name) { return TermN::var(std::move(name)); }
inline TermN lam_n(std::string name, TermN body) { return TermN::lam(std::move(name), std::move(body)); }
inline TermN app_n(TermN f, TermN a) { return TermN::app(std::move(f), std::move(a)); }
inline TermN exp_n(std::string payload) { return TermN::exp(std::move(payload)); }

inline TermL var_l(std::size_t level) { return TermL::var(level); }
inline TermL lam_l(TermL body) { return TermL::lam(std::move(body)); }
inline TermL app_l(TermL f, TermL a) { return TermL::app(std::move(f), std::move(a)); }
inline TermL exp_l() { return TermL::exp(); }

inline TermI var_i(std::size_t index) { return TermI::var(index); }
inline TermI lam_i(TermI body) { return TermI::lam(std::move(body)); }
inline TermI app_i(TermI f, TermI a) { return TermI::app(std::move(f), std::move(a)); }
inline TermI exp_i() { return TermI::exp(); }

/// Surface syntax, e.g. (lamn "x1" (appn (expn "e") (varn "x1"))) or
/// (lami (appi expi (vari 0))).
template <class Rep>
std::string render(const Term<Rep>& t) {
  const std::string s(1, Rep::suffix);
  switch (t.tag()) {
    case TermTag::var:
      if constexpr (std::same_as<typename Rep::Var, std::string>)
        return "(var" + s + " " + render(t.var_ref()) + ")";
      else
        return "(var" + s + " " + std::to_string(t.var_ref()) + ")";
    case TermTag::lam:
      if constexpr (std::same_as<typename Rep::Binder, std::string>)
        return "(lam" + s + " " + render(t.binder()) + " " + render(t.body()) + ")";
      else
        return "(lam" + s + " " + render(t.body()) + ")";
    case TermTag::app:
      return "(app" + s + " " + render(t.fun()) + " " + render(t.arg()) + ")";
    case TermTag::exp:
      if constexpr (std::same_as<typename Rep::Payload, std::string>)
        return "(exp" + s + " " + render(t.payload()) + ")";
      else
        return "exp" + s;
  }
  return "?";
}

template <class T>
struct EtaWitness {
  T core;
  std::size_t depth;

  friend bool operator==(const EtaWitness&, const EtaWitness&) = default;
};

template <class T>
std::string render(const EtaWitness<T>& w) {
  return "(" + render(w.core) + ", " + std::to_string(w.depth) + ")";
}

enum class EtaNVariant { dso, dse };
enum class EtaIVariant { cb, fo };

inline std::string_view name_of(EtaNVariant v) { return v == EtaNVariant::dso ? "dso" : "dse"; }
inline std::string_view name_of(EtaIVariant v) { return v == EtaIVariant::cb ? "cb" : "fo"; }

// Constructors ---------------------------------------------------------------

inline TermL make_eta_redexl(const TermL& core, std::size_t depth) {
  auto visit = [depth](auto& self, std::size_t level, TermL acc) -> TermL {
    if (level == depth) return acc;
    return lam_l(self(self, level + 1, app_l(std::move(acc), var_l(level))));
  };
  return visit(visit, 0, core);
}

inline TermI make_eta_redexi(const TermI& core, std::size_t depth) {
  auto visit = [](auto& self, std::size_t remaining, TermI acc) -> TermI {
    if (remaining == 0) return acc;
    return lam_i(self(self, remaining - 1, app_i(std::move(acc), var_i(remaining - 1))));
  };
  return visit(visit, depth, core);
}

/// Fresh binders are named x1 .. xd from the outside in.
inline TermN make_eta_redexn(const TermN& core, std::size_t depth) {
  auto visit = [depth](auto& self, std::size_t i, TermN acc) -> TermN {
    if (i > depth) return acc;
    std::string x = "x" + std::to_string(i);
    return lam_n(x, self(self, i + 1, app_n(std::move(acc), var_n(x))));
  };
  return visit(visit, 1, core);
}

inline TermN make_eta_redexn(const std::string& payload, std::size_t depth) {
  return make_eta_redexn(exp_n(payload), depth);
}

// Recognizers ----------------------------------------------------------------

namespace detail::eta {

template <class T>
using Partial = std::optional<std::pair<T, std::size_t>>;

template <class T>
std::optional<EtaWitness<T>> to_witness(Partial<T> r) {
  if (!r || r->second == 0) return std::nullopt;
  return EtaWitness<T>{std::move(r->first), r->second};
}

// Lambdas are peeled on the way in; on the way out each binder must be the
// argument of the application exposed by the binder inside it.
inline Partial<TermN> etapn_dso_visit(const TermN& t, trace::Probe probe) {
  auto frame = probe.enter("visit", t);
  if (!t.is_lam()) return frame.leave(Partial<TermN>{{t, 0}});
  auto r = etapn_dso_visit(t.body(), probe);
  if (!r) return frame.leave(Partial<TermN>{});
  const TermN& e = r->first;
  if (e.is_app() && e.arg().is_var() && e.arg().var_ref() == t.binder())
    return frame.leave(Partial<TermN>{{e.fun(), r->second + 1}});
  return frame.leave(Partial<TermN>{});
}

struct NotEta {};

inline std::pair<TermN, std::size_t> etapn_dse_visit(const TermN& t, trace::Probe probe) {
  auto frame = probe.enter("visit", t);
  if (!t.is_lam()) return frame.leave(std::pair<TermN, std::size_t>{t, 0});
  auto [e, d] = etapn_dse_visit(t.body(), probe);
  if (e.is_app() && e.arg().is_var() && e.arg().var_ref() == t.binder())
    return frame.leave(std::pair<TermN, std::size_t>{e.fun(), d + 1});
  throw NotEta{};
}

inline Partial<TermL> etapl_visit(const TermL& t, std::size_t level, trace::Probe probe) {
  auto frame = probe.enter("visit", t, level);
  if (!t.is_lam()) return frame.leave(Partial<TermL>{{t, level}});
  auto r = etapl_visit(t.body(), level + 1, probe);
  if (!r) return frame.leave(Partial<TermL>{});
  const TermL& e = r->first;
  if (e.is_app() && e.arg().is_var() && e.arg().var_ref() == level)
    return frame.leave(Partial<TermL>{{e.fun(), r->second}});
  return frame.leave(Partial<TermL>{});
}

using IndexCont = std::function<std::optional<EtaWitness<TermI>>(const TermI&, std::size_t)>;

inline std::optional<EtaWitness<TermI>> etapi_cb_visit(const TermI& t, IndexCont k,
                                                       trace::Probe probe) {
  if (!t.is_lam()) {
    probe.tail_call("k", t, std::size_t{0});
    return k(t, 0);
  }
  probe.tail_call("visit", t.body());
  IndexCont k2 = [k = std::move(k), probe](const TermI& e,
                                           std::size_t i) -> std::optional<EtaWitness<TermI>> {
    if (!(e.is_app() && e.arg().is_var() && e.arg().var_ref() == i)) return std::nullopt;
    probe.tail_call("k", e.fun(), i + 1);
    return k(e.fun(), i + 1);
  };
  return etapi_cb_visit(t.body(), std::move(k2), probe);
}

// The cb continuations form a chain whose only content is its length, so
// they defunctionalize to a counter: `pending` applications still to peel.
inline std::optional<EtaWitness<TermI>> etapi_second(std::size_t pending, const TermI& e,
                                                     std::size_t i, trace::Probe probe) {
  if (pending == 0) {
    if (i == 0) return std::nullopt;
    return EtaWitness<TermI>{e, i};
  }
  if (!(e.is_app() && e.arg().is_var() && e.arg().var_ref() == i)) return std::nullopt;
  probe.tail_call("etapi''", pending - 1, e.fun(), i + 1);
  return etapi_second(pending - 1, e.fun(), i + 1, probe);
}

inline std::optional<EtaWitness<TermI>> etapi_first(const TermI& t, std::size_t pending,
                                                    trace::Probe probe) {
  if (!t.is_lam()) {
    probe.tail_call("etapi''", pending, t, std::size_t{0});
    return etapi_second(pending, t, 0, probe);
  }
  probe.tail_call("etapi'", t.body(), pending + 1);
  return etapi_first(t.body(), pending + 1, probe);
}

}  // namespace detail::eta

inline std::optional<EtaWitness<TermN>> etapn(EtaNVariant variant, const TermN& t,
                                              trace::Probe probe = {}) {
  namespace d = detail::eta;
  auto frame = probe.enter("etapn_" + std::string(name_of(variant)), t);
  if (variant == EtaNVariant::dso) return frame.leave(d::to_witness(d::etapn_dso_visit(t, probe)));
  try {
    return frame.leave(d::to_witness<TermN>(d::etapn_dse_visit(t, probe)));
  } catch (const d::NotEta&) {
    return frame.leave(std::optional<EtaWitness<TermN>>{});
  }
}

inline std::optional<EtaWitness<TermL>> etapl_ds(const TermL& t, trace::Probe probe = {}) {
  auto frame = probe.enter("etapl_ds", t);
  return frame.leave(detail::eta::to_witness(detail::eta::etapl_visit(t, 0, probe)));
}

inline std::optional<EtaWitness<TermI>> etapi(EtaIVariant variant, const TermI& t,
                                              trace::Probe probe = {}) {
  namespace d = detail::eta;
  auto frame = probe.enter("etapi_" + std::string(name_of(variant)), t);
  if (variant == EtaIVariant::cb) {
    d::IndexCont k0 = [](const TermI& e, std::size_t i) -> std::optional<EtaWitness<TermI>> {
      if (i == 0) return std::nullopt;
      return EtaWitness<TermI>{e, i};
    };
    return frame.leave(
        probe.call("visit", [&] { return d::etapi_cb_visit(t, std::move(k0), probe); }, t));
  }
  return frame.leave(probe.call(
      "etapi'", [&] { return d::etapi_first(t, 0, probe); }, t, std::size_t{0}));
}

}  // namespace taba
