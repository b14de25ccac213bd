// Smaller worked examples of the continuation transformations: a
// defunctionalized and a refunctionalized reverse check, four ways of
// computing the first and last elements, CPS factorial, balanced mobiles,
// and the prefixes of a list.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "taba/core_lists.hpp"
#include "taba/errors.hpp"
#include "taba/rev2.hpp"
#include "taba/trace.hpp"

namespace taba {

// Defunctionalized continuations --------------------------------------------

/// Either the initial continuation or one step holding an element and the
/// continuation it extends. Isomorphic to a list of the captured elements.
template <class V>
class DefCont {
 public:
  static DefCont init() { return DefCont(); }
  static DefCont step(V v, DefCont inner) {
    DefCont c;
    c.node_ = std::make_shared<const Node>(Node{std::move(v), std::move(inner)});
    return c;
  }

  bool is_init() const noexcept { return node_ == nullptr; }
  const V& value() const { return node_->value; }
  const DefCont& inner() const { return node_->inner; }

  friend bool operator==(const DefCont& a, const DefCont& b) {
    if (a.is_init() || b.is_init()) return a.is_init() && b.is_init();
    return a.value() == b.value() && a.inner() == b.inner();
  }

 private:
  struct Node {
    V value;
    DefCont inner;
  };
  std::shared_ptr<const Node> node_;
};

template <class V>
std::string render(const DefCont<V>& c) {
  if (c.is_init()) return "ContInit";
  return "ContStep(" + detail::render_any(c.value()) + ", " + render(c.inner()) + ")";
}

/// Captured elements, outermost step first.
template <class V>
ValueList<V> cont_to_list(const DefCont<V>& c) {
  ValueList<V> out;
  for (const DefCont<V>* p = &c; !p->is_init(); p = &p->inner()) out.push_back(p->value());
  return out;
}

template <List R>
DefCont<elem_t<R>> cont_from_list(const R& vs) {
  auto v = view_of(vs);
  DefCont<elem_t<R>> c = DefCont<elem_t<R>>::init();
  for (auto it = v.rbegin(); it != v.rend(); ++it) c = DefCont<elem_t<R>>::step(*it, std::move(c));
  return c;
}

template <class V, class Eq, List R>
bool apply_cont(const DefCont<V>& c, const Eq& beq, const R& ws, trace::Probe probe = {}) {
  View<V> rest = view_of(ws);
  const DefCont<V>* cur = &c;
  auto frame = probe.enter("apply_cont", *cur, rest);
  while (!cur->is_init()) {
    if (rest.empty() || !beq(cur->value(), rest.front())) return frame.leave(false);
    cur = &cur->inner();
    rest = rest.subspan(1);
    probe.tail_call("apply_cont", *cur, rest);
  }
  return frame.leave(rest.empty());
}

namespace detail::gallery {

// The stage before apply_cont: each tag is mapped back to the function it
// stands for, and that function is then applied.
template <class V, class Eq>
std::function<bool(View<V>)> dispatch_cont(const DefCont<V>& c, const Eq& beq) {
  if (c.is_init()) return [](View<V> ws) { return ws.empty(); };
  return [v = c.value(), inner = c.inner(), &beq](View<V> ws) {
    return !ws.empty() && beq(v, ws.front()) && dispatch_cont(inner, beq)(ws.subspan(1));
  };
}

template <class V, class Eq>
bool rev2_v3_dispatch(const Eq& beq, View<V> vs, View<V> ws) {
  DefCont<V> c = DefCont<V>::init();
  for (const V& v : vs) c = DefCont<V>::step(v, std::move(c));
  return dispatch_cont(c, beq)(ws);
}

}  // namespace detail::gallery

template <class Eq, List R1, List R2>
bool rev2_v3_defunct(const Eq& beq, const R1& vs, const R2& ws, trace::Probe probe = {}) {
  using V = elem_t<R1>;
  View<V> a = view_of(vs);
  View<V> b = view_of(ws);
  auto frame = probe.enter("rev2_v3_def", a, b);
  auto aux = [&](auto& self, View<V> vs_sfx, DefCont<V> c) -> bool {
    if (vs_sfx.empty()) return probe.call("apply_cont", [&] { return apply_cont(c, beq, b); }, c, b);
    DefCont<V> next = DefCont<V>::step(vs_sfx.front(), std::move(c));
    probe.tail_call("rev2'_v3_def", vs_sfx.subspan(1), next);
    return self(self, vs_sfx.subspan(1), std::move(next));
  };
  return frame.leave(probe.call(
      "rev2'_v3_def", [&] { return aux(aux, a, DefCont<V>::init()); }, a, DefCont<V>::init()));
}

enum class RefunctVariant { plain, fold_left };

inline std::string_view name_of(RefunctVariant v) {
  return v == RefunctVariant::plain ? "plain" : "fold_left";
}

/// The accumulator of the two-pass reverse check replaced by the function
/// that would have consumed it.
template <class Eq, List R1, List R2>
bool rev2_v1_refunct(RefunctVariant variant, const Eq& beq, const R1& vs, const R2& ws,
                     trace::Probe probe = {}) {
  using V = elem_t<R1>;
  using H = std::function<bool(View<V>)>;
  View<V> a = view_of(vs);
  View<V> b = view_of(ws);
  auto frame = probe.enter("rev2_v1_refunct_" + std::string(name_of(variant)), a, b);
  auto extend = [&beq](const V& v, H h) -> H {
    return [&beq, v, h = std::move(h)](View<V> rest) {
      return !rest.empty() && beq(v, rest.front()) && h(rest.subspan(1));
    };
  };
  H h0 = [](View<V> rest) { return rest.empty(); };
  H h;
  if (variant == RefunctVariant::plain) {
    auto aux = [&](auto& self, View<V> vs_sfx, H acc) -> H {
      if (vs_sfx.empty()) return acc;
      probe.tail_call("rev2'_v1_refunct", vs_sfx.subspan(1));
      return self(self, vs_sfx.subspan(1), extend(vs_sfx.front(), std::move(acc)));
    };
    h = probe.call("rev2'_v1_refunct", [&] { return aux(aux, a, h0); }, a);
  } else {
    h = fold_left(h0, [&](const V& v, H acc) { return extend(v, std::move(acc)); }, a, probe);
  }
  return frame.leave(h(b));
}

// First and last ---------------------------------------------------------------

enum class FirstLastVariant { dropped_fissioned, dropped_fused, lifted_fissioned, lifted_fused };

inline constexpr FirstLastVariant kFirstLastVariants[] = {
    FirstLastVariant::dropped_fissioned, FirstLastVariant::dropped_fused,
    FirstLastVariant::lifted_fissioned, FirstLastVariant::lifted_fused};

inline std::string_view name_of(FirstLastVariant v) {
  static constexpr std::string_view names[] = {"dropped_fissioned", "dropped_fused",
                                               "lifted_fissioned", "lifted_fused"};
  return names[static_cast<int>(v)];
}

namespace detail::gallery {

template <class V>
V last_lifted(const V& x, View<V> rest, trace::Probe probe) {
  if (rest.empty()) return x;
  probe.tail_call("last", rest.front(), rest.subspan(1));
  return last_lifted(rest.front(), rest.subspan(1), probe);
}

template <class V>
std::optional<std::pair<V, V>> first_last_lifted(const V& first, const V& x, View<V> rest,
                                                 trace::Probe probe) {
  if (rest.empty()) return std::pair{first, x};
  probe.tail_call("first_and_last_aux", first, rest.front(), rest.subspan(1));
  return first_last_lifted(first, rest.front(), rest.subspan(1), probe);
}

}  // namespace detail::gallery

template <List R>
std::optional<std::pair<elem_t<R>, elem_t<R>>> first_and_last(FirstLastVariant variant,
                                                              const R& vs,
                                                              trace::Probe probe = {}) {
  using V = elem_t<R>;
  using Out = std::optional<std::pair<V, V>>;
  namespace d = detail::gallery;
  View<V> all = view_of(vs);
  auto frame = probe.enter("first_and_last_" + std::string(name_of(variant)), all);
  if (all.empty()) return frame.leave(Out{});
  const V& first = all.front();
  View<V> tail = all.subspan(1);
  switch (variant) {
    case FirstLastVariant::dropped_fissioned: {
      auto last = [&](auto& self, const V& x, View<V> rest) -> V {
        if (rest.empty()) return x;
        probe.tail_call("last", rest.front(), rest.subspan(1));
        return self(self, rest.front(), rest.subspan(1));
      };
      V l = probe.call("last", [&] { return last(last, first, tail); }, first, tail);
      return frame.leave(Out{std::pair{first, l}});
    }
    case FirstLastVariant::dropped_fused: {
      auto visit = [&](auto& self, const V& x, View<V> rest) -> Out {
        if (rest.empty()) return std::pair{first, x};
        probe.tail_call("visit", rest.front(), rest.subspan(1));
        return self(self, rest.front(), rest.subspan(1));
      };
      return frame.leave(probe.call("visit", [&] { return visit(visit, first, tail); }, first, tail));
    }
    case FirstLastVariant::lifted_fissioned: {
      V l = probe.call("last", [&] { return d::last_lifted<V>(first, tail, probe); }, first, tail);
      return frame.leave(Out{std::pair{first, l}});
    }
    case FirstLastVariant::lifted_fused:
      return frame.leave(probe.call(
          "first_and_last_aux", [&] { return d::first_last_lifted<V>(first, first, tail, probe); },
          first, first, tail));
  }
  throw ContractError("first_and_last: unknown variant");
}

// Factorial ------------------------------------------------------------------

inline std::uint64_t fac_cps(unsigned n, trace::Probe probe = {}) {
  using K = std::function<std::uint64_t(std::uint64_t)>;
  auto fac = [probe](auto& self, unsigned m, K k) -> std::uint64_t {
    if (m == 0) {
      probe.tail_call("k", std::uint64_t{1});
      return k(1);
    }
    probe.tail_call("fac", m - 1);
    return self(self, m - 1, [m, k = std::move(k), probe](std::uint64_t v) {
      probe.tail_call("k", m * v);
      return k(m * v);
    });
  };
  return probe.call(
      "fac", [&] { return fac(fac, n, [](std::uint64_t v) { return v; }); }, n);
}

// Mobiles --------------------------------------------------------------------

/// A binary tree whose leaves carry weights and whose nodes carry nothing.
class BinTree {
 public:
  static BinTree leaf(std::uint64_t weight) {
    BinTree t;
    t.weight_ = weight;
    return t;
  }
  static BinTree node(BinTree left, BinTree right) {
    BinTree t;
    t.children_ = std::make_shared<const std::pair<BinTree, BinTree>>(std::move(left),
                                                                       std::move(right));
    return t;
  }

  bool is_leaf() const noexcept { return children_ == nullptr; }
  std::uint64_t weight() const { return weight_; }
  const BinTree& left() const { return children_->first; }
  const BinTree& right() const { return children_->second; }

  std::size_t leaves() const { return is_leaf() ? 1 : left().leaves() + right().leaves(); }

  friend bool operator==(const BinTree& a, const BinTree& b) {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf() && a.weight_ == b.weight_;
    return a.left() == b.left() && a.right() == b.right();
  }

 private:
  std::uint64_t weight_ = 0;
  std::shared_ptr<const std::pair<BinTree, BinTree>> children_;
};

inline std::string render(const BinTree& t) {
  if (t.is_leaf()) return "(leaf " + std::to_string(t.weight()) + ")";
  return "(node " + render(t.left()) + " " + render(t.right()) + ")";
}

/// Every node balances. The continuation is applied at most once, and not at
/// all past the first unbalanced node.
inline bool balancedp(const BinTree& t, trace::Probe probe = {}) {
  using K = std::function<bool(std::uint64_t)>;
  auto visit = [probe](auto& self, const BinTree& sub, K k) -> bool {
    if (sub.is_leaf()) return k(sub.weight());
    probe.tail_call("visit", sub.left());
    return self(self, sub.left(), [&self, &sub, k = std::move(k), probe](std::uint64_t w1) {
      probe.tail_call("visit", sub.right());
      return self(self, sub.right(), [w1, &k](std::uint64_t w2) {
        return w1 == w2 && k(w1 + w2);
      });
    });
  };
  return probe.call(
      "balancedp", [&] { return visit(visit, t, [](std::uint64_t) { return true; }); }, t);
}

// Prefixes -------------------------------------------------------------------

enum class PrefixesVariant { cb, cps };

inline std::string_view name_of(PrefixesVariant v) { return v == PrefixesVariant::cb ? "cb" : "cps"; }

/// All prefixes of `vs`, shortest first, from [] up to `vs` itself.
template <List R>
std::vector<ValueList<elem_t<R>>> prefixes(PrefixesVariant variant, const R& vs,
                                           trace::Probe probe = {}) {
  using V = elem_t<R>;
  using L = ValueList<V>;
  using LL = std::vector<L>;
  using K = std::function<L(L)>;
  using MK = std::function<LL(LL)>;
  View<V> all = view_of(vs);
  auto prepend = [](const V& v, const K& k) -> K {
    return [v, k](L ps) { return k(cons(v, std::move(ps))); };
  };
  auto frame = probe.enter("prefixes_" + std::string(name_of(variant)), all);
  K k0 = [](L ps) { return ps; };
  if (variant == PrefixesVariant::cb) {
    auto visit = [&](auto& self, View<V> rest, const K& k) -> LL {
      auto f = probe.enter("visit", rest);
      if (rest.empty()) return f.leave(LL{k({})});
      LL tail_result = self(self, rest.subspan(1), prepend(rest.front(), k));
      tail_result.insert(tail_result.begin(), k({}));
      return f.leave(std::move(tail_result));
    };
    return frame.leave(visit(visit, all, k0));
  }
  auto visit = [&](auto& self, View<V> rest, K k, MK mk) -> LL {
    if (rest.empty()) return mk(LL{k({})});
    MK mk2 = [k, mk = std::move(mk)](LL pss) {
      pss.insert(pss.begin(), k({}));
      return mk(std::move(pss));
    };
    probe.tail_call("visit", rest.subspan(1));
    return self(self, rest.subspan(1), prepend(rest.front(), k), std::move(mk2));
  };
  MK mk0 = [](LL pss) { return pss; };
  return frame.leave(probe.call("visit", [&] { return visit(visit, all, k0, mk0); }, all));
}

}  // namespace taba
