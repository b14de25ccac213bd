// Symbolic convolution of two lists: zip the first with the reverse of the
// second, without building the reverse.
//
// Family 1 walks xs and builds the pairs while reading ys forward at the end.
// Family 2 walks ys and reads xs forward at the end. The cnv* functions let
// one list drive the first pass; the cnw* functions walk both, so unequal
// lengths are rejected before any pair is built.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "taba/core_lists.hpp"
#include "taba/errors.hpp"
#include "taba/tafa.hpp"
#include "taba/trace.hpp"

namespace taba {

enum class CnvVariant {
  cb1,
  cb2,
  fo1,
  fo2,
  cb1_lfi,
  cb2_lfi,
  cb1_lfi_foldleft,
  cb2_lfi_foldleft,
  fo1_lfi,
  fo2_lfi,
  dse1
};

enum class CnwVariant { cb1, cb2, fo1, fo2, cb1_lfi, cb2_lfi, fo1_lfi, fo2_lfi, dse1 };

enum class SwapFamily { family1, family2 };

inline constexpr CnvVariant kCnvVariants[] = {
    CnvVariant::cb1,     CnvVariant::cb2,     CnvVariant::fo1,
    CnvVariant::fo2,     CnvVariant::cb1_lfi, CnvVariant::cb2_lfi,
    CnvVariant::cb1_lfi_foldleft, CnvVariant::cb2_lfi_foldleft, CnvVariant::fo1_lfi,
    CnvVariant::fo2_lfi, CnvVariant::dse1};

inline constexpr CnwVariant kCnwVariants[] = {
    CnwVariant::cb1,     CnwVariant::cb2,     CnwVariant::fo1,     CnwVariant::fo2,
    CnwVariant::cb1_lfi, CnwVariant::cb2_lfi, CnwVariant::fo1_lfi, CnwVariant::fo2_lfi,
    CnwVariant::dse1};

inline std::string_view name_of(CnvVariant v) {
  static constexpr std::string_view names[] = {
      "cb1",     "cb2",     "fo1",     "fo2",     "cb1_lfi", "cb2_lfi", "cb1_lfi_foldleft",
      "cb2_lfi_foldleft", "fo1_lfi", "fo2_lfi", "dse1"};
  return names[static_cast<int>(v)];
}

inline std::string_view name_of(CnwVariant v) {
  static constexpr std::string_view names[] = {"cb1",     "cb2",     "fo1",
                                               "fo2",     "cb1_lfi", "cb2_lfi",
                                               "fo1_lfi", "fo2_lfi", "dse1"};
  return names[static_cast<int>(v)];
}

inline std::string_view name_of(SwapFamily f) {
  return f == SwapFamily::family1 ? "family1" : "family2";
}

/// Whether the first pass of `v` is driven by the second list.
inline bool walks_second_list(CnvVariant v) {
  switch (v) {
    case CnvVariant::cb2:
    case CnvVariant::fo2:
    case CnvVariant::cb2_lfi:
    case CnvVariant::cb2_lfi_foldleft:
    case CnvVariant::fo2_lfi:
      return true;
    default:
      return false;
  }
}

namespace detail::cnv {

template <class A, class B>
using Res = std::optional<PairList<A, B>>;

struct Short {};

[[noreturn]] inline void unreachable(const char* where) {
  throw ContractError(std::string(where) + ": reached a case excluded by the length check");
}

// Family 1 ------------------------------------------------------------------

template <class A, class B>
using K1 = std::function<Res<A, B>(View<B>, PairList<A, B>)>;

template <class A, class B>
K1<A, B> k1_init() {
  return [](View<B> ys, PairList<A, B> ps) -> Res<A, B> {
    if (!ys.empty()) return std::nullopt;
    return ps;
  };
}

template <class A, class B>
K1<A, B> k1_step(A x, K1<A, B> k, trace::Probe probe) {
  return [x = std::move(x), k = std::move(k), probe](View<B> ys, PairList<A, B> ps) -> Res<A, B> {
    if (ys.empty()) return std::nullopt;
    ps.insert(ps.begin(), {x, ys.front()});
    probe.tail_call("k", ys.subspan(1), ps);
    return k(ys.subspan(1), std::move(ps));
  };
}

template <class A, class B>
Res<A, B> apply_k1(const K1<A, B>& k, View<B> ys, trace::Probe probe) {
  probe.tail_call("k", ys, PairList<A, B>{});
  return k(ys, {});
}

template <class A, class B>
Res<A, B> cb1_walk(View<A> xs, View<B> ys, K1<A, B> k, trace::Probe probe) {
  if (xs.empty()) return apply_k1<A, B>(k, ys, probe);
  probe.tail_call("walk", xs.subspan(1));
  return cb1_walk(xs.subspan(1), ys, k1_step(xs.front(), std::move(k), probe), probe);
}

template <class A, class B>
K1<A, B> cb1_lfi_walk(View<A> xs, K1<A, B> k, trace::Probe probe) {
  if (xs.empty()) return k;
  probe.tail_call("walk", xs.subspan(1));
  return cb1_lfi_walk(xs.subspan(1), k1_step(xs.front(), std::move(k), probe), probe);
}

// xs_op is the defunctionalized K1: the elements of xs met so far, newest first.
template <class A, class B>
Res<A, B> fo1_continue(View<A> xs_op, View<B> ys, PairList<A, B> ps, trace::Probe probe) {
  if (xs_op.empty()) {
    if (!ys.empty()) return std::nullopt;
    return ps;
  }
  if (ys.empty()) return std::nullopt;
  ps.insert(ps.begin(), {xs_op.front(), ys.front()});
  probe.tail_call("continue", xs_op.subspan(1), ys.subspan(1), ps);
  return fo1_continue(xs_op.subspan(1), ys.subspan(1), std::move(ps), probe);
}

template <class A, class B>
Res<A, B> fo1_walk(View<A> xs, View<B> ys, ValueList<A> xs_op, trace::Probe probe) {
  if (xs.empty()) {
    probe.tail_call("continue", xs_op, ys, PairList<A, B>{});
    return fo1_continue<A, B>(xs_op, ys, {}, probe);
  }
  xs_op = cons(xs.front(), std::move(xs_op));
  probe.tail_call("walk", xs.subspan(1), xs_op);
  return fo1_walk(xs.subspan(1), ys, std::move(xs_op), probe);
}

template <class A>
ValueList<A> reverse_walk(View<A> xs, ValueList<A> acc, trace::Probe probe) {
  if (xs.empty()) return acc;
  acc = cons(xs.front(), std::move(acc));
  probe.tail_call("walk", xs.subspan(1), acc);
  return reverse_walk(xs.subspan(1), std::move(acc), probe);
}

// Family 2 ------------------------------------------------------------------

template <class A, class B>
using K2 = std::function<Res<A, B>(View<A>)>;

template <class A, class B>
K2<A, B> k2_init() {
  return [](View<A> xs) -> Res<A, B> {
    if (!xs.empty()) return std::nullopt;
    return PairList<A, B>{};
  };
}

template <class A, class B>
K2<A, B> k2_step(B y, K2<A, B> k, trace::Probe probe) {
  return [y = std::move(y), k = std::move(k), probe](View<A> xs) -> Res<A, B> {
    if (xs.empty()) return std::nullopt;
    auto r = probe.call("k", [&] { return k(xs.subspan(1)); }, xs.subspan(1));
    if (!r) return std::nullopt;
    r->insert(r->begin(), {xs.front(), y});
    return r;
  };
}

template <class A, class B>
Res<A, B> apply_k2(const K2<A, B>& k, View<A> xs, trace::Probe probe) {
  probe.tail_call("k", xs);
  return k(xs);
}

template <class A, class B>
Res<A, B> cb2_walk(View<A> xs, View<B> ys, K2<A, B> k, trace::Probe probe) {
  if (ys.empty()) return apply_k2<A, B>(k, xs, probe);
  probe.tail_call("walk", ys.subspan(1));
  return cb2_walk(xs, ys.subspan(1), k2_step<A, B>(ys.front(), std::move(k), probe), probe);
}

template <class A, class B>
K2<A, B> cb2_lfi_walk(View<B> ys, K2<A, B> k, trace::Probe probe) {
  if (ys.empty()) return k;
  probe.tail_call("walk", ys.subspan(1));
  return cb2_lfi_walk<A, B>(ys.subspan(1), k2_step<A, B>(ys.front(), std::move(k), probe), probe);
}

template <class A, class B>
Res<A, B> fo2_continue(View<A> xs, View<B> ys_op, trace::Probe probe) {
  auto frame = probe.enter("continue", xs, ys_op);
  if (ys_op.empty()) {
    if (!xs.empty()) return frame.leave(Res<A, B>{});
    return frame.leave(Res<A, B>{PairList<A, B>{}});
  }
  if (xs.empty()) return frame.leave(Res<A, B>{});
  auto r = fo2_continue(xs.subspan(1), ys_op.subspan(1), probe);
  if (r) r->insert(r->begin(), {xs.front(), ys_op.front()});
  return frame.leave(std::move(r));
}

template <class A, class B>
Res<A, B> fo2_walk(View<A> xs, View<B> ys, ValueList<B> ys_op, trace::Probe probe) {
  if (ys.empty()) return fo2_continue<A, B>(xs, ys_op, probe);
  ys_op = cons(ys.front(), std::move(ys_op));
  probe.tail_call("walk", ys.subspan(1), ys_op);
  return fo2_walk(xs, ys.subspan(1), std::move(ys_op), probe);
}

// Direct style, family 1: the returns carry what is left of ys.
template <class A, class B>
std::pair<View<B>, PairList<A, B>> dse1_walk(View<A> xs, View<B> ys, trace::Probe probe) {
  auto frame = probe.enter("walk", xs);
  if (xs.empty()) return frame.leave(std::pair<View<B>, PairList<A, B>>{ys, {}});
  auto [rest, ps] = dse1_walk(xs.subspan(1), ys, probe);
  if (rest.empty()) throw Short{};
  ps.insert(ps.begin(), {xs.front(), rest.front()});
  return frame.leave(std::pair<View<B>, PairList<A, B>>{rest.subspan(1), std::move(ps)});
}

// Both lists driven ---------------------------------------------------------

template <class A, class B>
Res<A, B> cnw_cb1_walk(View<A> xs, View<B> ys_sfx, View<B> ys, K1<A, B> k, trace::Probe probe) {
  if (xs.empty() && ys_sfx.empty()) return apply_k1<A, B>(k, ys, probe);
  if (xs.empty() || ys_sfx.empty()) return std::nullopt;
  probe.tail_call("walk", xs.subspan(1), ys_sfx.subspan(1));
  return cnw_cb1_walk(xs.subspan(1), ys_sfx.subspan(1), ys,
                      k1_step(xs.front(), std::move(k), probe), probe);
}

// With equal lengths established up front, the continuation cannot fail.
template <class A, class B>
using K2w = std::function<PairList<A, B>(View<A>)>;

template <class A, class B>
K2w<A, B> k2w_step(B y, K2w<A, B> k, trace::Probe probe) {
  return [y = std::move(y), k = std::move(k), probe](View<A> xs) {
    if (xs.empty()) unreachable("cnw_cb2");
    auto r = probe.call("k", [&] { return k(xs.subspan(1)); }, xs.subspan(1));
    r.insert(r.begin(), {xs.front(), y});
    return r;
  };
}

template <class A, class B>
K2w<A, B> k2w_init() {
  return [](View<A> xs) {
    if (!xs.empty()) unreachable("cnw_cb2");
    return PairList<A, B>{};
  };
}

template <class A, class B>
Res<A, B> cnw_cb2_walk(View<A> xs_sfx, View<B> ys, View<A> xs, K2w<A, B> k, trace::Probe probe) {
  if (xs_sfx.empty() && ys.empty()) {
    probe.tail_call("k", xs);
    return k(xs);
  }
  if (xs_sfx.empty() || ys.empty()) return std::nullopt;
  probe.tail_call("walk", xs_sfx.subspan(1), ys.subspan(1));
  return cnw_cb2_walk<A, B>(xs_sfx.subspan(1), ys.subspan(1), xs,
                            k2w_step<A, B>(ys.front(), std::move(k), probe), probe);
}

template <class A, class B>
std::optional<K1<A, B>> cnw_cb1_lfi_walk(View<A> xs, View<B> ys, K1<A, B> k, trace::Probe probe) {
  if (xs.empty() && ys.empty()) return k;
  if (xs.empty() || ys.empty()) return std::nullopt;
  probe.tail_call("walk", xs.subspan(1), ys.subspan(1));
  return cnw_cb1_lfi_walk(xs.subspan(1), ys.subspan(1), k1_step(xs.front(), std::move(k), probe),
                          probe);
}

template <class A, class B>
std::optional<K2w<A, B>> cnw_cb2_lfi_walk(View<A> xs, View<B> ys, K2w<A, B> k,
                                          trace::Probe probe) {
  if (xs.empty() && ys.empty()) return k;
  if (xs.empty() || ys.empty()) return std::nullopt;
  probe.tail_call("walk", xs.subspan(1), ys.subspan(1));
  return cnw_cb2_lfi_walk<A, B>(xs.subspan(1), ys.subspan(1),
                                k2w_step<A, B>(ys.front(), std::move(k), probe), probe);
}

template <class A, class B>
PairList<A, B> cnw_fo1_continue(View<A> xs_op, View<B> ys, PairList<A, B> ps, trace::Probe probe) {
  if (xs_op.empty()) return ps;
  if (ys.empty()) unreachable("cnw_fo1");
  ps.insert(ps.begin(), {xs_op.front(), ys.front()});
  probe.tail_call("continue", xs_op.subspan(1), ys.subspan(1), ps);
  return cnw_fo1_continue(xs_op.subspan(1), ys.subspan(1), std::move(ps), probe);
}

template <class A, class B>
PairList<A, B> cnw_fo2_continue(View<A> xs, View<B> ys_op, trace::Probe probe) {
  auto frame = probe.enter("continue", xs, ys_op);
  if (ys_op.empty()) return frame.leave(PairList<A, B>{});
  if (xs.empty()) unreachable("cnw_fo2");
  auto r = cnw_fo2_continue(xs.subspan(1), ys_op.subspan(1), probe);
  r.insert(r.begin(), {xs.front(), ys_op.front()});
  return frame.leave(std::move(r));
}

// Accumulates the reverse of `acc_src` while checking that xs and ys run out together.
template <class A, class B, class T>
std::optional<ValueList<T>> sync_rev(View<A> xs, View<B> ys, View<T> acc_src, ValueList<T> acc,
                                     trace::Probe probe) {
  if (xs.empty() && ys.empty()) return acc;
  if (xs.empty() || ys.empty()) return std::nullopt;
  acc = cons(acc_src.front(), std::move(acc));
  probe.tail_call("walk", xs.subspan(1), ys.subspan(1), acc);
  return sync_rev<A, B, T>(xs.subspan(1), ys.subspan(1), acc_src.subspan(1), std::move(acc), probe);
}

template <class A, class B>
std::pair<View<B>, PairList<A, B>> cnw_dse1_walk(View<A> xs, View<B> ys_sfx, View<B> ys,
                                                 trace::Probe probe) {
  auto frame = probe.enter("walk", xs, ys_sfx);
  if (xs.empty() && ys_sfx.empty()) return frame.leave(std::pair<View<B>, PairList<A, B>>{ys, {}});
  if (xs.empty() || ys_sfx.empty()) throw Short{};
  auto [rest, ps] = cnw_dse1_walk(xs.subspan(1), ys_sfx.subspan(1), ys, probe);
  if (rest.empty()) unreachable("cnw_dse1");
  ps.insert(ps.begin(), {xs.front(), rest.front()});
  return frame.leave(std::pair<View<B>, PairList<A, B>>{rest.subspan(1), std::move(ps)});
}

template <class A, class B>
Res<A, B> run_cnv(CnvVariant variant, View<A> xs, View<B> ys, trace::Probe probe) {
  switch (variant) {
    case CnvVariant::cb1:
      return probe.call("walk", [&] { return cb1_walk<A, B>(xs, ys, k1_init<A, B>(), probe); }, xs);
    case CnvVariant::cb2:
      return probe.call("walk", [&] { return cb2_walk<A, B>(xs, ys, k2_init<A, B>(), probe); }, ys);
    case CnvVariant::fo1:
      return probe.call("walk", [&] { return fo1_walk<A, B>(xs, ys, {}, probe); }, xs,
                        ValueList<A>{});
    case CnvVariant::fo2:
      return probe.call("walk", [&] { return fo2_walk<A, B>(xs, ys, {}, probe); }, ys,
                        ValueList<B>{});
    case CnvVariant::cb1_lfi: {
      K1<A, B> k = probe.call("walk", [&] { return cb1_lfi_walk<A, B>(xs, k1_init<A, B>(), probe); },
                              xs);
      return apply_k1<A, B>(k, ys, probe);
    }
    case CnvVariant::cb2_lfi: {
      K2<A, B> k = probe.call("walk", [&] { return cb2_lfi_walk<A, B>(ys, k2_init<A, B>(), probe); },
                              ys);
      return apply_k2<A, B>(k, xs, probe);
    }
    case CnvVariant::cb1_lfi_foldleft: {
      K1<A, B> k = fold_left(
          k1_init<A, B>(), [probe](const A& x, K1<A, B> acc) { return k1_step(x, std::move(acc), probe); },
          xs, probe);
      return apply_k1<A, B>(k, ys, probe);
    }
    case CnvVariant::cb2_lfi_foldleft: {
      K2<A, B> k = fold_left(
          k2_init<A, B>(),
          [probe](const B& y, K2<A, B> acc) { return k2_step<A, B>(y, std::move(acc), probe); }, ys,
          probe);
      return apply_k2<A, B>(k, xs, probe);
    }
    case CnvVariant::fo1_lfi: {
      ValueList<A> xs_op =
          probe.call("walk", [&] { return reverse_walk<A>(xs, {}, probe); }, xs, ValueList<A>{});
      probe.tail_call("continue", xs_op, ys, PairList<A, B>{});
      return fo1_continue<A, B>(xs_op, ys, {}, probe);
    }
    case CnvVariant::fo2_lfi: {
      ValueList<B> ys_op =
          probe.call("walk", [&] { return reverse_walk<B>(ys, {}, probe); }, ys, ValueList<B>{});
      return fo2_continue<A, B>(xs, ys_op, probe);
    }
    case CnvVariant::dse1: {
      try {
        auto [rest, ps] = dse1_walk<A, B>(xs, ys, probe);
        if (!rest.empty()) return std::nullopt;
        return ps;
      } catch (const Short&) {
        return std::nullopt;
      }
    }
  }
  throw ContractError("cnv: unknown variant");
}

template <class A, class B>
Res<A, B> run_cnw(CnwVariant variant, View<A> xs, View<B> ys, trace::Probe probe) {
  switch (variant) {
    case CnwVariant::cb1:
      return probe.call(
          "walk", [&] { return cnw_cb1_walk<A, B>(xs, ys, ys, k1_init<A, B>(), probe); }, xs, ys);
    case CnwVariant::cb2:
      return probe.call(
          "walk", [&] { return cnw_cb2_walk<A, B>(xs, ys, xs, k2w_init<A, B>(), probe); }, xs, ys);
    case CnwVariant::fo1: {
      auto xs_op = probe.call(
          "walk", [&] { return sync_rev<A, B, A>(xs, ys, xs, {}, probe); }, xs, ys, ValueList<A>{});
      if (!xs_op) return std::nullopt;
      probe.tail_call("continue", *xs_op, ys, PairList<A, B>{});
      return cnw_fo1_continue<A, B>(*xs_op, ys, {}, probe);
    }
    case CnwVariant::fo2: {
      auto ys_op = probe.call(
          "walk", [&] { return sync_rev<A, B, B>(xs, ys, ys, {}, probe); }, xs, ys, ValueList<B>{});
      if (!ys_op) return std::nullopt;
      return cnw_fo2_continue<A, B>(xs, *ys_op, probe);
    }
    case CnwVariant::cb1_lfi: {
      auto k = probe.call(
          "walk", [&] { return cnw_cb1_lfi_walk<A, B>(xs, ys, k1_init<A, B>(), probe); }, xs, ys);
      if (!k) return std::nullopt;
      return apply_k1<A, B>(*k, ys, probe);
    }
    case CnwVariant::cb2_lfi: {
      auto k = probe.call(
          "walk", [&] { return cnw_cb2_lfi_walk<A, B>(xs, ys, k2w_init<A, B>(), probe); }, xs, ys);
      if (!k) return std::nullopt;
      probe.tail_call("k", xs);
      return (*k)(xs);
    }
    case CnwVariant::fo1_lfi: {
      auto xs_op = probe.call(
          "walk", [&] { return sync_rev<A, B, A>(xs, ys, xs, {}, probe); }, xs, ys, ValueList<A>{});
      if (!xs_op) return std::nullopt;
      return probe.call(
          "continue", [&] { return cnw_fo1_continue<A, B>(*xs_op, ys, {}, probe); }, *xs_op, ys,
          PairList<A, B>{});
    }
    case CnwVariant::fo2_lfi: {
      auto ys_op = probe.call(
          "walk", [&] { return sync_rev<A, B, B>(xs, ys, ys, {}, probe); }, xs, ys, ValueList<B>{});
      if (!ys_op) return std::nullopt;
      return cnw_fo2_continue<A, B>(xs, *ys_op, probe);
    }
    case CnwVariant::dse1: {
      try {
        return cnw_dse1_walk<A, B>(xs, ys, ys, probe).second;
      } catch (const Short&) {
        return std::nullopt;
      }
    }
  }
  throw ContractError("cnw: unknown variant");
}

}  // namespace detail::cnv

template <List R1, List R2>
std::optional<PairList<elem_t<R1>, elem_t<R2>>> cnv(CnvVariant variant, const R1& xs,
                                                    const R2& ys, trace::Probe probe = {}) {
  using A = elem_t<R1>;
  using B = elem_t<R2>;
  View<A> a = view_of(xs);
  View<B> b = view_of(ys);
  auto frame = probe.enter("cnv_" + std::string(name_of(variant)), a, b);
  return frame.leave(detail::cnv::run_cnv<A, B>(variant, a, b, probe));
}

template <List R1, List R2>
std::optional<PairList<elem_t<R1>, elem_t<R2>>> cnw(CnwVariant variant, const R1& xs,
                                                    const R2& ys, trace::Probe probe = {}) {
  using A = elem_t<R1>;
  using B = elem_t<R2>;
  View<A> a = view_of(xs);
  View<B> b = view_of(ys);
  auto frame = probe.enter("cnw_" + std::string(name_of(variant)), a, b);
  return frame.leave(detail::cnv::run_cnw<A, B>(variant, a, b, probe));
}

/// The cons cases of the returned-continuation walks, fed to fold_right
/// instead of fold_left. Family 1 then pairs xs with ys in reverse order,
/// family 2 in order.
template <List R1, List R2>
std::optional<PairList<elem_t<R1>, elem_t<R2>>> cnv_fold_swapped(SwapFamily which, const R1& xs,
                                                                 const R2& ys,
                                                                 trace::Probe probe = {}) {
  using A = elem_t<R1>;
  using B = elem_t<R2>;
  namespace d = detail::cnv;
  View<A> a = view_of(xs);
  View<B> b = view_of(ys);
  auto frame = probe.enter("cnv_fold_swapped_" + std::string(name_of(which)), a, b);
  if (which == SwapFamily::family1) {
    d::K1<A, B> k = fold_right(
        d::k1_init<A, B>(),
        [probe](const A& x, d::K1<A, B> acc) { return d::k1_step(x, std::move(acc), probe); }, a,
        probe);
    return frame.leave(d::apply_k1<A, B>(k, b, probe));
  }
  d::K2<A, B> k = fold_right(
      d::k2_init<A, B>(),
      [probe](const B& y, d::K2<A, B> acc) { return d::k2_step<A, B>(y, std::move(acc), probe); },
      b, probe);
  return frame.leave(d::apply_k2<A, B>(k, a, probe));
}

/// Convolves the first min(|xs|, |ys|) elements of each list; the tail of the
/// longer one is ignored.
template <List R1, List R2>
PairList<elem_t<R1>, elem_t<R2>> convolve_with_prefix(const R1& xs, const R2& ys,
                                                      trace::Probe probe = {}) {
  using A = elem_t<R1>;
  using B = elem_t<R2>;
  using K = std::function<PairList<A, B>(View<B>, PairList<A, B>)>;
  View<A> a = view_of(xs);
  View<B> b = view_of(ys);
  auto frame = probe.enter("convolve_with_prefix", a, b);

  auto step = [probe](A x, K k) -> K {
    return [x = std::move(x), k = std::move(k), probe](View<B> rest, PairList<A, B> ps) {
      if (rest.empty()) detail::cnv::unreachable("convolve_with_prefix");
      ps.insert(ps.begin(), {x, rest.front()});
      probe.tail_call("k", rest.subspan(1), ps);
      return k(rest.subspan(1), std::move(ps));
    };
  };
  auto walk = [&](auto& self, View<A> xs_sfx, View<B> ys_sfx, K k) -> PairList<A, B> {
    if (xs_sfx.empty() || ys_sfx.empty()) {
      probe.tail_call("k", b, PairList<A, B>{});
      return k(b, {});
    }
    probe.tail_call("walk", xs_sfx.subspan(1), ys_sfx.subspan(1));
    return self(self, xs_sfx.subspan(1), ys_sfx.subspan(1), step(xs_sfx.front(), std::move(k)));
  };
  K k0 = [](View<B>, PairList<A, B> ps) { return ps; };
  auto result = probe.call("walk", [&] { return walk(walk, a, b, std::move(k0)); }, a, b);
  return frame.leave(std::move(result));
}

/// Convolves the last min(|xs|, |ys|) elements of each list. When ys is the
/// longer list, its excess prefix is skipped by sliding a trail through it
/// rather than by measuring it.
template <List R1, List R2>
PairList<elem_t<R1>, elem_t<R2>> convolve_with_suffix(const R1& xs, const R2& ys,
                                                      trace::Probe probe = {}) {
  using A = elem_t<R1>;
  using B = elem_t<R2>;
  using K = std::function<PairList<A, B>(View<B>, PairList<A, B>)>;
  View<A> a = view_of(xs);
  View<B> b = view_of(ys);
  auto frame = probe.enter("convolve_with_suffix", a, b);

  // Once ys is used up, the remaining (leftmost) elements of xs have no partner.
  auto step = [probe](A x, K k) -> K {
    return [x = std::move(x), k = std::move(k), probe](View<B> rest, PairList<A, B> ps) {
      if (rest.empty()) {
        probe.tail_call("k", rest, ps);
        return k(rest, std::move(ps));
      }
      ps.insert(ps.begin(), {x, rest.front()});
      probe.tail_call("k", rest.subspan(1), ps);
      return k(rest.subspan(1), std::move(ps));
    };
  };
  auto walk = [&](auto& self, View<A> xs_sfx, View<B> ys_sfx, K k) -> PairList<A, B> {
    if (xs_sfx.empty()) {
      View<B> start = ys_sfx.empty() ? b : detail::tafa::slide_entry<B>(b, ys_sfx, probe);
      probe.tail_call("k", start, PairList<A, B>{});
      return k(start, {});
    }
    View<B> ys_next = ys_sfx.empty() ? ys_sfx : ys_sfx.subspan(1);
    probe.tail_call("walk", xs_sfx.subspan(1), ys_next);
    return self(self, xs_sfx.subspan(1), ys_next, step(xs_sfx.front(), std::move(k)));
  };
  K k0 = [](View<B>, PairList<A, B> ps) { return ps; };
  auto result = probe.call("walk", [&] { return walk(walk, a, b, std::move(k0)); }, a, b);
  return frame.leave(std::move(result));
}

}  // namespace taba
