// Convolving a list with itself: the first list is walked on the way in,
// the same list again on the way back out.
#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>

#include "taba/core_lists.hpp"
#include "taba/trace.hpp"

namespace taba {

template <class V>
struct VisitResult {
  ValueList<V> remaining;
  PairList<V> pairs;

  friend bool operator==(const VisitResult&, const VisitResult&) = default;
};

template <class V>
std::string render(const VisitResult<V>& r) {
  return "(" + render(r.remaining) + ", " + render(r.pairs) + ")";
}

enum class SelfCnvVariant { direct, cps, fold_right_direct, fold_right_cps };

namespace detail::scnv {

template <class V>
using Partial = std::optional<std::pair<View<V>, PairList<V>>>;

template <class V>
using Result = std::optional<PairList<V>>;

template <class V>
using Cont = std::function<Result<V>(View<V>, PairList<V>)>;

// Pairs the head consumed at call time with the head of `ws` at return time.
template <class V>
Partial<V> step(const V& v, Partial<V> r) {
  if (!r || r->first.empty()) return std::nullopt;
  r->second.insert(r->second.begin(), {v, r->first.front()});
  r->first = r->first.subspan(1);
  return r;
}

template <class V>
Result<V> finish(Partial<V> r) {
  if (!r || !r->first.empty()) return std::nullopt;
  return std::move(r->second);
}

template <class V>
Partial<V> visit(View<V> vs_sfx, View<V> vs, trace::Probe probe) {
  auto frame = probe.enter("visit", vs_sfx);
  if (vs_sfx.empty()) return frame.leave(Partial<V>{{vs, {}}});
  return frame.leave(step(vs_sfx.front(), visit(vs_sfx.subspan(1), vs, probe)));
}

template <class V>
Cont<V> initial_cont() {
  return [](View<V> ws, PairList<V> ps) -> Result<V> {
    if (!ws.empty()) return std::nullopt;
    return ps;
  };
}

template <class V>
Cont<V> extend_cont(V v, Cont<V> k, trace::Probe probe) {
  return [v = std::move(v), k = std::move(k), probe](View<V> ws, PairList<V> ps) -> Result<V> {
    if (ws.empty()) return std::nullopt;
    ps.insert(ps.begin(), {v, ws.front()});
    auto rest = ws.subspan(1);
    probe.tail_call("k", rest, ps);
    return k(rest, std::move(ps));
  };
}

template <class V>
Result<V> visit_c(View<V> vs_sfx, View<V> vs, Cont<V> k, trace::Probe probe) {
  if (vs_sfx.empty()) {
    probe.tail_call("k", vs, PairList<V>{});
    return k(vs, {});
  }
  auto rest = vs_sfx.subspan(1);
  probe.tail_call("visit", rest);
  return visit_c(rest, vs, extend_cont(vs_sfx.front(), std::move(k), probe), probe);
}

}  // namespace detail::scnv

/// The auxiliary of the direct variant, exposed so its invariant can be tested.
/// Returns None only when `vs_sfx` is not a suffix of `vs`.
template <List R1, List R2>
std::optional<VisitResult<elem_t<R1>>> self_cnv_visit(const R1& vs_sfx, const R2& vs,
                                                      trace::Probe probe = {}) {
  using V = elem_t<R1>;
  auto full = view_of(vs);
  auto sfx = view_of(vs_sfx);
  if (!is_value_suffix(sfx, full)) return std::nullopt;
  auto r = detail::scnv::visit<V>(full.subspan(full.size() - sfx.size()), full, probe);
  if (!r) return std::nullopt;
  return VisitResult<V>{to_list(r->first), std::move(r->second)};
}

template <List R>
std::optional<PairList<elem_t<R>>> self_cnv_direct(const R& vs, trace::Probe probe = {}) {
  using V = elem_t<R>;
  auto full = view_of(vs);
  auto frame = probe.enter("self_cnv", full);
  return frame.leave(detail::scnv::finish<V>(detail::scnv::visit<V>(full, full, probe)));
}

template <List R>
std::optional<PairList<elem_t<R>>> self_cnv_cps(const R& vs, trace::Probe probe = {}) {
  using V = elem_t<R>;
  auto full = view_of(vs);
  auto frame = probe.enter("self_cnv_c", full);
  std::optional<PairList<V>> result;
  {
    auto inner = probe.enter("visit", full);
    result = inner.leave(
        detail::scnv::visit_c<V>(full, full, detail::scnv::initial_cont<V>(), probe));
  }
  return frame.leave(std::move(result));
}

template <List R>
std::optional<PairList<elem_t<R>>> self_cnv_fold_right_direct(const R& vs,
                                                              trace::Probe probe = {}) {
  using V = elem_t<R>;
  using detail::scnv::Partial;
  auto full = view_of(vs);
  auto r = fold_right(
      Partial<V>{{full, {}}},
      [](const V& v, Partial<V> acc) { return detail::scnv::step(v, std::move(acc)); }, full,
      probe);
  return detail::scnv::finish<V>(std::move(r));
}

template <List R>
std::optional<PairList<elem_t<R>>> self_cnv_fold_right_cps(const R& vs,
                                                           trace::Probe probe = {}) {
  using V = elem_t<R>;
  using K = detail::scnv::Cont<V>;
  using Walk = std::function<detail::scnv::Result<V>(K)>;
  auto full = view_of(vs);
  Walk walk = fold_right(
      Walk([full](K k) { return k(full, {}); }),
      [](const V& v, Walk inner) -> Walk {
        return [v, inner = std::move(inner)](K k) {
          return inner(detail::scnv::extend_cont(v, std::move(k), trace::Probe{}));
        };
      },
      full, probe);
  return walk(detail::scnv::initial_cont<V>());
}

template <List R>
std::optional<PairList<elem_t<R>>> self_cnv(SelfCnvVariant variant, const R& vs,
                                            trace::Probe probe = {}) {
  switch (variant) {
    case SelfCnvVariant::direct: return self_cnv_direct(vs, probe);
    case SelfCnvVariant::cps: return self_cnv_cps(vs, probe);
    case SelfCnvVariant::fold_right_direct: return self_cnv_fold_right_direct(vs, probe);
    case SelfCnvVariant::fold_right_cps: return self_cnv_fold_right_cps(vs, probe);
  }
  throw ContractError("self_cnv: unknown variant");
}

inline constexpr SelfCnvVariant kSelfCnvVariants[] = {
    SelfCnvVariant::direct, SelfCnvVariant::cps, SelfCnvVariant::fold_right_direct,
    SelfCnvVariant::fold_right_cps};

inline std::string_view name_of(SelfCnvVariant v) {
  switch (v) {
    case SelfCnvVariant::direct: return "direct";
    case SelfCnvVariant::cps: return "cps";
    case SelfCnvVariant::fold_right_direct: return "fold_right_direct";
    case SelfCnvVariant::fold_right_cps: return "fold_right_cps";
  }
  return "?";
}

}  // namespace taba
