// Deciding whether two lists are reverses of each other.
//
// The v-family walks the first list on the way in and the second on the way
// out. The w-family walks both lists on the way in, so a length mismatch is
// detected before any element is compared.
#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "taba/core_lists.hpp"
#include "taba/trace.hpp"

namespace taba {

enum class Rev2Variant { v1, v2, v3, v4, v5, w1, w2, w3, w4, w5 };

inline constexpr Rev2Variant kRev2Variants[] = {
    Rev2Variant::v1, Rev2Variant::v2, Rev2Variant::v3, Rev2Variant::v4, Rev2Variant::v5,
    Rev2Variant::w1, Rev2Variant::w2, Rev2Variant::w3, Rev2Variant::w4, Rev2Variant::w5};

inline std::string_view name_of(Rev2Variant v) {
  static constexpr std::string_view names[] = {"v1", "v2", "v3", "v4", "v5",
                                               "w1", "w2", "w3", "w4", "w5"};
  return names[static_cast<int>(v)];
}

inline bool is_w_family(Rev2Variant v) { return static_cast<int>(v) >= 5; }

/// Label of the procedure that performs the first pass of `v`.
inline std::string first_pass_label(Rev2Variant v) { return "rev2'_" + std::string(name_of(v)); }

namespace detail::rev2 {

struct Mismatch {};

template <class V, class Eq>
bool structural_eq(const Eq& beq, View<V> xs, View<V> ys, trace::Probe probe,
                   std::string_view label) {
  if (xs.empty() || ys.empty()) return xs.empty() && ys.empty();
  if (!beq(xs.front(), ys.front())) return false;
  probe.tail_call(label, xs.subspan(1), ys.subspan(1));
  return structural_eq(beq, xs.subspan(1), ys.subspan(1), probe, label);
}

template <class V, class Eq>
bool structural_eq_entry(const Eq& beq, View<V> xs, View<V> ys, trace::Probe probe,
                         std::string_view label) {
  auto frame = probe.enter(label, xs, ys);
  return frame.leave(structural_eq(beq, xs, ys, probe, label));
}

template <class V>
ValueList<V> rev_append(View<V> vs, ValueList<V> acc, trace::Probe probe, std::string_view label) {
  if (vs.empty()) return acc;
  acc = cons(vs.front(), std::move(acc));
  probe.tail_call(label, vs.subspan(1), acc);
  return rev_append(vs.subspan(1), std::move(acc), probe, label);
}

// v2: the consumer relocated into the nil case of the accumulator loop.
template <class V, class Eq>
bool fused(const Eq& beq, View<V> vs, ValueList<V> acc, View<V> ws, trace::Probe probe) {
  if (vs.empty()) {
    probe.tail_call("rev2''_v1", acc, ws);
    return structural_eq<V>(beq, acc, ws, probe, "rev2''_v1");
  }
  acc = cons(vs.front(), std::move(acc));
  probe.tail_call("rev2'_v2", vs.subspan(1), acc, ws);
  return fused(beq, vs.subspan(1), std::move(acc), ws, probe);
}

// v3: the accumulator replaced by the function that would consume it.
template <class V>
using Checker = std::function<bool(View<V>)>;

template <class V, class Eq>
Checker<V> extend_checker(const Eq& beq, V v, Checker<V> h, trace::Probe probe) {
  return [&beq, v = std::move(v), h = std::move(h), probe](View<V> ws) {
    if (ws.empty() || !beq(v, ws.front())) return false;
    probe.tail_call("h", ws.subspan(1));
    return h(ws.subspan(1));
  };
}

template <class V, class Eq>
bool refunct(const Eq& beq, View<V> vs, Checker<V> h, View<V> ws, trace::Probe probe) {
  if (vs.empty()) {
    probe.tail_call("h", ws);
    return h(ws);
  }
  probe.tail_call("rev2'_v3", vs.subspan(1), ws);
  return refunct(beq, vs.subspan(1), extend_checker(beq, vs.front(), std::move(h), probe), ws,
                 probe);
}

// v4: lifted, the mismatch carried by the option.
template <class V, class Eq>
std::optional<View<V>> check_prefix(const Eq& beq, View<V> vs, View<V> ws_given,
                                    trace::Probe probe, std::string_view label) {
  auto frame = probe.enter(label, vs);
  if (vs.empty()) return frame.leave(std::optional<View<V>>(ws_given));
  auto r = check_prefix(beq, vs.subspan(1), ws_given, probe, label);
  if (!r || r->empty() || !beq(vs.front(), r->front())) return frame.leave(std::optional<View<V>>());
  return frame.leave(std::optional<View<V>>(r->subspan(1)));
}

// w4: lifted, ws_given threaded as a parameter.
template <class V, class Eq>
View<V> sync_lifted(const Eq& beq, View<V> vs, View<V> ws, View<V> ws_given, trace::Probe probe) {
  auto frame = probe.enter("rev2'_w4", vs, ws);
  if (vs.empty() && ws.empty()) return frame.leave(ws_given);
  if (vs.empty() || ws.empty()) throw Mismatch{};
  View<V> r = sync_lifted(beq, vs.subspan(1), ws.subspan(1), ws_given, probe);
  if (r.empty() || !beq(vs.front(), r.front())) throw Mismatch{};
  return frame.leave(r.subspan(1));
}

// w3: the second pass accumulated as a continuation by the first.
template <class V, class Eq>
bool sync_cps(const Eq& beq, View<V> vs, View<V> ws, View<V> ws_given, Checker<V> k,
              trace::Probe probe) {
  if (vs.empty() && ws.empty()) {
    probe.tail_call("k", ws_given);
    return k(ws_given);
  }
  if (vs.empty() || ws.empty()) return false;
  probe.tail_call("rev2'_w3", vs.subspan(1), ws.subspan(1));
  auto k2 = [&beq, v = vs.front(), k = std::move(k), probe](View<V> rest) {
    if (rest.empty() || !beq(v, rest.front())) return false;
    probe.tail_call("k", rest.subspan(1));
    return k(rest.subspan(1));
  };
  return sync_cps(beq, vs.subspan(1), ws.subspan(1), ws_given, Checker<V>(std::move(k2)), probe);
}

// w2: the continuation of w3 defunctionalized into the reversed prefix of vs.
template <class V, class Eq>
bool sync_defunct(const Eq& beq, View<V> vs, View<V> ws, ValueList<V> acc, View<V> ws_given,
                  trace::Probe probe) {
  if (vs.empty() && ws.empty()) {
    probe.tail_call("rev2''_w2", acc, ws_given);
    return structural_eq<V>(beq, acc, ws_given, probe, "rev2''_w2");
  }
  if (vs.empty() || ws.empty()) return false;
  acc = cons(vs.front(), std::move(acc));
  probe.tail_call("rev2'_w2", vs.subspan(1), ws.subspan(1), acc);
  return sync_defunct(beq, vs.subspan(1), ws.subspan(1), std::move(acc), ws_given, probe);
}

// w1: w2 fissioned back into a reversal that also compares lengths.
template <class V>
std::optional<ValueList<V>> sync_reverse(View<V> vs, View<V> ws, ValueList<V> acc,
                                         trace::Probe probe, std::string_view label) {
  if (vs.empty() && ws.empty()) return acc;
  if (vs.empty() || ws.empty()) return std::nullopt;
  acc = cons(vs.front(), std::move(acc));
  probe.tail_call(label, vs.subspan(1), ws.subspan(1), acc);
  return sync_reverse(vs.subspan(1), ws.subspan(1), std::move(acc), probe, label);
}

template <class V, class Eq>
bool v1(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  ValueList<V> reversed;
  {
    auto frame = probe.enter("rev2'_v1", vs, ValueList<V>{});
    reversed = frame.leave(rev_append<V>(vs, {}, probe, "rev2'_v1"));
  }
  return structural_eq_entry<V>(beq, reversed, ws, probe, "rev2''_v1");
}

template <class V, class Eq>
bool v2(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  auto frame = probe.enter("rev2'_v2", vs, ValueList<V>{}, ws);
  return frame.leave(fused<V>(beq, vs, {}, ws, probe));
}

template <class V, class Eq>
bool v3(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  auto frame = probe.enter("rev2'_v3", vs, ws);
  Checker<V> h0 = [](View<V> rest) { return rest.empty(); };
  return frame.leave(refunct<V>(beq, vs, std::move(h0), ws, probe));
}

template <class V, class Eq>
bool v4(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  auto r = check_prefix<V>(beq, vs, ws, probe, "rev2'_v4");
  return r && r->empty();
}

template <class V, class Eq>
bool v5(const Eq& beq, View<V> vs, View<V> ws_given, trace::Probe probe) {
  auto visit = [&](auto& self, View<V> vs_sfx) -> View<V> {
    auto frame = probe.enter("rev2'_v5", vs_sfx);
    if (vs_sfx.empty()) return frame.leave(ws_given);
    View<V> ws = self(self, vs_sfx.subspan(1));
    if (ws.empty() || !beq(vs_sfx.front(), ws.front())) throw Mismatch{};
    return frame.leave(ws.subspan(1));
  };
  try {
    return visit(visit, vs).empty();
  } catch (const Mismatch&) {
    return false;
  }
}

template <class V, class Eq>
bool w1(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  std::optional<ValueList<V>> reversed;
  {
    auto frame = probe.enter("rev2'_w1", vs, ws, ValueList<V>{});
    reversed = frame.leave(sync_reverse<V>(vs, ws, {}, probe, "rev2'_w1"));
  }
  if (!reversed) return false;
  return structural_eq_entry<V>(beq, *reversed, ws, probe, "rev2''_w1");
}

template <class V, class Eq>
bool w2(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  auto frame = probe.enter("rev2'_w2", vs, ws, ValueList<V>{});
  return frame.leave(sync_defunct<V>(beq, vs, ws, {}, ws, probe));
}

template <class V, class Eq>
bool w3(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  auto frame = probe.enter("rev2'_w3", vs, ws);
  Checker<V> k0 = [](View<V> rest) { return rest.empty(); };
  return frame.leave(sync_cps<V>(beq, vs, ws, ws, std::move(k0), probe));
}

template <class V, class Eq>
bool w4(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  try {
    return sync_lifted<V>(beq, vs, ws, ws, probe).empty();
  } catch (const Mismatch&) {
    return false;
  }
}

template <class V, class Eq>
bool w5(const Eq& beq, View<V> vs, View<V> ws_given, trace::Probe probe) {
  auto visit = [&](auto& self, View<V> vs_sfx, View<V> ws_sfx) -> View<V> {
    auto frame = probe.enter("rev2'_w5", vs_sfx, ws_sfx);
    if (vs_sfx.empty() && ws_sfx.empty()) return frame.leave(ws_given);
    if (vs_sfx.empty() || ws_sfx.empty()) throw Mismatch{};
    View<V> ws = self(self, vs_sfx.subspan(1), ws_sfx.subspan(1));
    if (ws.empty() || !beq(vs_sfx.front(), ws.front())) throw Mismatch{};
    return frame.leave(ws.subspan(1));
  };
  try {
    return visit(visit, vs, ws_given).empty();
  } catch (const Mismatch&) {
    return false;
  }
}

}  // namespace detail::rev2

template <class Eq, List R1, List R2>
bool rev2(Rev2Variant variant, const Eq& beq, const R1& vs, const R2& ws, trace::Probe probe = {}) {
  using V = elem_t<R1>;
  namespace d = detail::rev2;
  View<V> a = view_of(vs);
  View<V> b = view_of(ws);
  auto frame = probe.enter("rev2_" + std::string(name_of(variant)), a, b);
  bool result = false;
  switch (variant) {
    case Rev2Variant::v1: result = d::v1<V>(beq, a, b, probe); break;
    case Rev2Variant::v2: result = d::v2<V>(beq, a, b, probe); break;
    case Rev2Variant::v3: result = d::v3<V>(beq, a, b, probe); break;
    case Rev2Variant::v4: result = d::v4<V>(beq, a, b, probe); break;
    case Rev2Variant::v5: result = d::v5<V>(beq, a, b, probe); break;
    case Rev2Variant::w1: result = d::w1<V>(beq, a, b, probe); break;
    case Rev2Variant::w2: result = d::w2<V>(beq, a, b, probe); break;
    case Rev2Variant::w3: result = d::w3<V>(beq, a, b, probe); break;
    case Rev2Variant::w4: result = d::w4<V>(beq, a, b, probe); break;
    case Rev2Variant::w5: result = d::w5<V>(beq, a, b, probe); break;
  }
  return frame.leave(result);
}

template <class Eq, List R1, List R2>
bool rev2_aux_structural_eq(const Eq& beq, const R1& xs, const R2& ys, trace::Probe probe = {}) {
  return detail::rev2::structural_eq_entry<elem_t<R1>>(beq, view_of(xs), view_of(ys), probe,
                                                       "rev2''_v1");
}

template <List R1, List R2>
ValueList<elem_t<R1>> rev2_aux_rev_append(const R1& vs, const R2& acc, trace::Probe probe = {}) {
  using V = elem_t<R1>;
  auto frame = probe.enter("rev2'_v1", view_of(vs), view_of(acc));
  return frame.leave(
      detail::rev2::rev_append<V>(view_of(vs), to_list(view_of(acc)), probe, "rev2'_v1"));
}

template <class Eq, List R1, List R2>
std::optional<ValueList<elem_t<R1>>> rev2_aux_check_prefix(const Eq& beq, const R1& vs,
                                                           const R2& ws, trace::Probe probe = {}) {
  auto r = detail::rev2::check_prefix<elem_t<R1>>(beq, view_of(vs), view_of(ws), probe, "rev2'_v4");
  if (!r) return std::nullopt;
  return to_list(*r);
}

template <List R1, List R2>
std::optional<ValueList<elem_t<R1>>> rev2_aux_sync_reverse(const R1& vs, const R2& ws,
                                                           trace::Probe probe = {}) {
  using V = elem_t<R1>;
  auto frame = probe.enter("rev2'_w1", view_of(vs), view_of(ws), ValueList<V>{});
  return frame.leave(detail::rev2::sync_reverse<V>(view_of(vs), view_of(ws), {}, probe, "rev2'_w1"));
}

/// The fused accumulator loop of v2 taken on its own, with an explicit
/// starting accumulator.
template <class Eq, List R1, List R2, List R3>
bool rev2_aux_fused(const Eq& beq, const R1& vs, const R2& acc, const R3& ws,
                    trace::Probe probe = {}) {
  using V = elem_t<R1>;
  auto frame = probe.enter("rev2'_v2", view_of(vs), view_of(acc), view_of(ws));
  return frame.leave(
      detail::rev2::fused<V>(beq, view_of(vs), to_list(view_of(acc)), view_of(ws), probe));
}

}  // namespace taba
