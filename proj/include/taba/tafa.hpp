// Indexing a list from the right, and finding common suffixes by sliding a
// trailing pointer forward instead of returning.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "taba/core_lists.hpp"
#include "taba/errors.hpp"
#include "taba/trace.hpp"

namespace taba {

struct IndexTag {
  std::size_t remaining;
  friend bool operator==(const IndexTag&, const IndexTag&) = default;
};

template <class V>
struct FoundTag {
  V value;
  friend bool operator==(const FoundTag&, const FoundTag&) = default;
};

template <class V>
using IntermediateResult = std::variant<IndexTag, FoundTag<V>>;

inline std::string render(const IndexTag& t) { return "Index " + std::to_string(t.remaining); }

template <class V>
std::string render(const FoundTag<V>& t) {
  return "Found " + detail::render_any(t.value);
}

template <class V>
std::string render(const IntermediateResult<V>& r) {
  return std::visit([](const auto& t) { return render(t); }, r);
}

enum class IndexVariant { ds, cps, cps2, cb, dse, tafa, tafa_fused };

inline constexpr IndexVariant kIndexVariants[] = {
    IndexVariant::ds,  IndexVariant::cps,  IndexVariant::cps2,      IndexVariant::cb,
    IndexVariant::dse, IndexVariant::tafa, IndexVariant::tafa_fused};

inline std::string_view name_of(IndexVariant v) {
  static constexpr std::string_view names[] = {"ds", "cps", "cps2", "cb", "dse", "tafa",
                                               "tafa_fused"};
  return names[static_cast<int>(v)];
}

namespace detail::tafa {

template <class V>
using Opt = std::optional<V>;

template <class V>
IntermediateResult<V> ds_visit(View<V> vs, std::size_t n, trace::Probe probe) {
  auto frame = probe.enter("visit", vs);
  if (vs.empty()) return frame.leave(IntermediateResult<V>(IndexTag{n}));
  auto r = ds_visit(vs.subspan(1), n, probe);
  if (auto* idx = std::get_if<IndexTag>(&r)) {
    if (idx->remaining == 0) return frame.leave(IntermediateResult<V>(FoundTag<V>{vs.front()}));
    return frame.leave(IntermediateResult<V>(IndexTag{idx->remaining - 1}));
  }
  return frame.leave(std::move(r));
}

template <class V>
Opt<V> ds(View<V> vs, std::size_t n, trace::Probe probe) {
  auto r = ds_visit(vs, n, probe);
  if (auto* f = std::get_if<FoundTag<V>>(&r)) return f->value;
  return std::nullopt;
}

template <class V>
using ResultCont = std::function<Opt<V>(IntermediateResult<V>)>;

template <class V>
Opt<V> cps_visit(View<V> vs, std::size_t n, ResultCont<V> k, trace::Probe probe) {
  if (vs.empty()) {
    probe.tail_call("k", IntermediateResult<V>(IndexTag{n}));
    return k(IndexTag{n});
  }
  auto rest = vs.subspan(1);
  probe.tail_call("visit", rest);
  ResultCont<V> k2 = [v = vs.front(), k = std::move(k), probe](IntermediateResult<V> r) {
    IntermediateResult<V> next = r;
    if (auto* idx = std::get_if<IndexTag>(&r)) {
      next = idx->remaining == 0 ? IntermediateResult<V>(FoundTag<V>{v})
                                 : IntermediateResult<V>(IndexTag{idx->remaining - 1});
    }
    probe.tail_call("k", next);
    return k(std::move(next));
  };
  return cps_visit(rest, n, std::move(k2), probe);
}

template <class V>
Opt<V> cps(View<V> vs, std::size_t n, trace::Probe probe) {
  ResultCont<V> k0 = [](IntermediateResult<V> r) -> Opt<V> {
    if (auto* f = std::get_if<FoundTag<V>>(&r)) return f->value;
    return std::nullopt;
  };
  return probe.call("visit", [&] { return cps_visit<V>(vs, n, std::move(k0), probe); }, vs);
}

template <class V>
using IndexCont = std::function<Opt<V>(std::size_t)>;
template <class V>
using FoundCont = std::function<Opt<V>(V)>;

template <class V>
Opt<V> cps2_visit(View<V> vs, std::size_t n, IndexCont<V> k_index, const FoundCont<V>& k_found,
                  trace::Probe probe) {
  if (vs.empty()) {
    probe.tail_call("k_index", n);
    return k_index(n);
  }
  auto rest = vs.subspan(1);
  probe.tail_call("visit", rest);
  IndexCont<V> k2 = [v = vs.front(), k_index = std::move(k_index), &k_found,
                     probe](std::size_t i) -> Opt<V> {
    if (i == 0) {
      probe.tail_call("k_found", v);
      return k_found(v);
    }
    probe.tail_call("k_index", i - 1);
    return k_index(i - 1);
  };
  return cps2_visit(rest, n, std::move(k2), k_found, probe);
}

template <class V>
Opt<V> cps2(View<V> vs, std::size_t n, trace::Probe probe) {
  IndexCont<V> k_index = [](std::size_t) -> Opt<V> { return std::nullopt; };
  FoundCont<V> k_found = [](V v) -> Opt<V> { return v; };
  return probe.call(
      "visit", [&] { return cps2_visit<V>(vs, n, std::move(k_index), k_found, probe); }, vs);
}

// The found-continuation of cps2 is always the initial one, so it is inlined.
template <class V>
Opt<V> cb_visit(View<V> vs, std::size_t n, IndexCont<V> k, trace::Probe probe) {
  if (vs.empty()) {
    probe.tail_call("k", n);
    return k(n);
  }
  auto rest = vs.subspan(1);
  probe.tail_call("visit", rest);
  IndexCont<V> k2 = [v = vs.front(), k = std::move(k), probe](std::size_t i) -> Opt<V> {
    if (i == 0) return v;
    probe.tail_call("k", i - 1);
    return k(i - 1);
  };
  return cb_visit(rest, n, std::move(k2), probe);
}

template <class V>
Opt<V> cb(View<V> vs, std::size_t n, trace::Probe probe) {
  IndexCont<V> k0 = [](std::size_t) -> Opt<V> { return std::nullopt; };
  return probe.call("visit", [&] { return cb_visit<V>(vs, n, std::move(k0), probe); }, vs);
}

template <class V>
struct FoundIt {
  V value;
};

template <class V>
std::size_t dse_visit(View<V> vs, std::size_t n, trace::Probe probe) {
  auto frame = probe.enter("visit", vs);
  if (vs.empty()) return frame.leave(n);
  std::size_t i = dse_visit(vs.subspan(1), n, probe);
  if (i == 0) throw FoundIt<V>{vs.front()};
  return frame.leave(i - 1);
}

template <class V>
Opt<V> dse(View<V> vs, std::size_t n, trace::Probe probe) {
  try {
    dse_visit(vs, n, probe);
    return std::nullopt;
  } catch (const FoundIt<V>& found) {
    return found.value;
  }
}

// Once the index is exhausted, the trail sits exactly n positions behind the
// end, so sliding it forward in step with the suffix lands on the answer.
template <class V>
Opt<V> tafa_forth(View<V> trail, View<V> sfx, trace::Probe probe) {
  if (sfx.empty()) return trail.front();
  probe.tail_call("forth", trail.subspan(1), sfx.subspan(1));
  return tafa_forth(trail.subspan(1), sfx.subspan(1), probe);
}

template <class V>
Opt<V> tafa_there(View<V> vs_given, View<V> vs, std::size_t n, trace::Probe probe) {
  if (vs.empty()) return std::nullopt;
  auto rest = vs.subspan(1);
  if (n == 0) {
    probe.tail_call("forth", vs_given, rest);
    return tafa_forth(vs_given, rest, probe);
  }
  probe.tail_call("there", rest, n - 1);
  return tafa_there(vs_given, rest, n - 1, probe);
}

template <class V>
Opt<V> tafa(View<V> vs, std::size_t n, trace::Probe probe) {
  return probe.call("there", [&] { return tafa_there(vs, vs, n, probe); }, vs, n);
}

template <class V>
Opt<V> fused_forth(const V& v, View<V> vs_tail, View<V> vs_sfx, trace::Probe probe) {
  if (vs_sfx.empty()) return v;
  probe.tail_call("forth", vs_tail.front(), vs_tail.subspan(1), vs_sfx.subspan(1));
  return fused_forth(vs_tail.front(), vs_tail.subspan(1), vs_sfx.subspan(1), probe);
}

template <class V>
Opt<V> fused_there(const V& v, View<V> vs_tail, View<V> vs_sfx, std::size_t n,
                   trace::Probe probe) {
  if (vs_sfx.empty()) return std::nullopt;
  auto rest = vs_sfx.subspan(1);
  if (n == 0) {
    probe.tail_call("forth", v, vs_tail, rest);
    return fused_forth(v, vs_tail, rest, probe);
  }
  probe.tail_call("there", rest, n - 1);
  return fused_there(v, vs_tail, rest, n - 1, probe);
}

template <class V>
Opt<V> tafa_fused(View<V> vs, std::size_t n, trace::Probe probe) {
  if (vs.empty()) return std::nullopt;
  return probe.call(
      "there", [&] { return fused_there(vs.front(), vs.subspan(1), vs, n, probe); }, vs, n);
}

template <class V>
View<V> slide(View<V> full, View<V> sfx, trace::Probe probe) {
  if (sfx.empty()) return full;
  probe.tail_call("slide", full.subspan(1), sfx.subspan(1));
  return slide(full.subspan(1), sfx.subspan(1), probe);
}

template <class V, class Eq>
View<V> csl_inner(const Eq& beq, View<V> vs, View<V> ws, View<V> vs_sfx, View<V> ws_sfx,
                  trace::Probe probe);

template <class V, class Eq>
View<V> csl_outer(const Eq& beq, View<V> vs, View<V> ws, trace::Probe probe) {
  if (vs.empty()) return vs;
  if (beq(vs.front(), ws.front())) {
    probe.tail_call("inner_loop", vs, ws, vs.subspan(1), ws.subspan(1));
    return csl_inner(beq, vs, ws, vs.subspan(1), ws.subspan(1), probe);
  }
  probe.tail_call("common_suffix_same_length", vs.subspan(1), ws.subspan(1));
  return csl_outer(beq, vs.subspan(1), ws.subspan(1), probe);
}

template <class V, class Eq>
View<V> csl_inner(const Eq& beq, View<V> vs, View<V> ws, View<V> vs_sfx, View<V> ws_sfx,
                  trace::Probe probe) {
  if (vs_sfx.empty()) return vs;
  if (beq(vs_sfx.front(), ws_sfx.front())) {
    probe.tail_call("inner_loop", vs, ws, vs_sfx.subspan(1), ws_sfx.subspan(1));
    return csl_inner(beq, vs, ws, vs_sfx.subspan(1), ws_sfx.subspan(1), probe);
  }
  probe.tail_call("common_suffix_same_length", vs_sfx.subspan(1), ws_sfx.subspan(1));
  return csl_outer(beq, vs_sfx.subspan(1), ws_sfx.subspan(1), probe);
}

template <class V, class Eq>
View<V> csl(const Eq& beq, View<V> xs, View<V> ys, trace::Probe probe) {
  return probe.call(
      "common_suffix_same_length", [&] { return csl_outer<V>(beq, xs, ys, probe); }, xs, ys);
}

template <class V>
View<V> slide_entry(View<V> full, View<V> sfx, trace::Probe probe) {
  return probe.call("slide", [&] { return slide<V>(full, sfx, probe); }, full, sfx);
}

template <class V, class Eq>
View<V> lcs_there(const Eq& beq, View<V> xs, View<V> ys, View<V> xs_sfx, View<V> ys_sfx,
                  trace::Probe probe) {
  if (xs_sfx.empty() && ys_sfx.empty()) return csl<V>(beq, xs, ys, probe);
  if (ys_sfx.empty()) return csl<V>(beq, slide_entry<V>(xs, xs_sfx, probe), ys, probe);
  if (xs_sfx.empty()) return csl<V>(beq, xs, slide_entry<V>(ys, ys_sfx, probe), probe);
  probe.tail_call("there", xs_sfx.subspan(1), ys_sfx.subspan(1));
  return lcs_there(beq, xs, ys, xs_sfx.subspan(1), ys_sfx.subspan(1), probe);
}

}  // namespace detail::tafa

template <List R>
std::optional<elem_t<R>> list_index_rtl(IndexVariant variant, const R& vs, std::size_t n,
                                        trace::Probe probe = {}) {
  using V = elem_t<R>;
  namespace d = detail::tafa;
  View<V> v = view_of(vs);
  auto frame = probe.enter("list_index_rtl_" + std::string(name_of(variant)), v, n);
  std::optional<V> result;
  switch (variant) {
    case IndexVariant::ds: result = d::ds<V>(v, n, probe); break;
    case IndexVariant::cps: result = d::cps<V>(v, n, probe); break;
    case IndexVariant::cps2: result = d::cps2<V>(v, n, probe); break;
    case IndexVariant::cb: result = d::cb<V>(v, n, probe); break;
    case IndexVariant::dse: result = d::dse<V>(v, n, probe); break;
    case IndexVariant::tafa: result = d::tafa<V>(v, n, probe); break;
    case IndexVariant::tafa_fused: result = d::tafa_fused<V>(v, n, probe); break;
  }
  return frame.leave(std::move(result));
}

/// The `n`th suffix of `vs_tail`, if it has one.
template <List R>
std::optional<ValueList<elem_t<R>>> list_index_rtl_there(const R& vs_tail, std::size_t n,
                                                         trace::Probe probe = {}) {
  using V = elem_t<R>;
  auto there = [probe](auto& self, View<V> vs, std::size_t i) -> std::optional<View<V>> {
    if (i == 0) return vs;
    if (vs.empty()) return std::nullopt;
    probe.tail_call("there", vs.subspan(1), i - 1);
    return self(self, vs.subspan(1), i - 1);
  };
  auto r = probe.call("there", [&] { return there(there, view_of(vs_tail), n); }, view_of(vs_tail),
                      n);
  if (!r) return std::nullopt;
  return to_list(*r);
}

/// Slides `vs_tail` and `vs_sfx` forward until `vs_sfx` runs out. The result
/// is the element reached together with what follows it in `vs_tail`, which
/// is exactly `|vs_tail| - |vs_sfx|` long. None when `vs_sfx` is not a
/// suffix of `vs_tail`.
template <List R1, List R2>
std::optional<std::pair<elem_t<R1>, ValueList<elem_t<R1>>>> list_index_rtl_forth(
    const elem_t<R1>& v, const R1& vs_tail, const R2& vs_sfx, trace::Probe probe = {}) {
  using V = elem_t<R1>;
  using Out = std::optional<std::pair<V, View<V>>>;
  if (!is_value_suffix(view_of(vs_sfx), view_of(vs_tail))) return std::nullopt;
  auto forth = [probe](auto& self, const V& w, View<V> tail, View<V> sfx) -> Out {
    if (sfx.empty()) return std::pair{w, tail};
    if (tail.empty()) return std::nullopt;
    probe.tail_call("forth", tail.front(), tail.subspan(1), sfx.subspan(1));
    return self(self, tail.front(), tail.subspan(1), sfx.subspan(1));
  };
  Out r = probe.call(
      "forth", [&] { return forth(forth, v, view_of(vs_tail), view_of(vs_sfx)); }, v,
      view_of(vs_tail), view_of(vs_sfx));
  if (!r) return std::nullopt;
  return std::pair{r->first, to_list(r->second)};
}

template <class Eq, List R1, List R2>
ValueList<elem_t<R1>> common_suffix_same_length(const Eq& beq, const R1& xs, const R2& ys,
                                                trace::Probe probe = {}) {
  auto a = view_of(xs);
  auto b = view_of(ys);
  if (a.size() != b.size())
    throw ContractError("common_suffix_same_length: lists differ in length");
  return to_list(detail::tafa::csl<elem_t<R1>>(beq, a, b, probe));
}

/// The suffix of `full` whose length is `|full| - |sfx|`. `sfx` must be a
/// tail of `full`: either a view into the same storage, or equal in value
/// to the matching tail when the storage differs.
template <List R1, List R2>
ValueList<elem_t<R1>> slide(const R1& full, const R2& sfx, trace::Probe probe = {}) {
  using V = elem_t<R1>;
  View<V> f = view_of(full);
  View<V> s = view_of(sfx);
  if (!is_structural_suffix(s, f) && !is_value_suffix(s, f))
    throw ContractError("slide: second argument is not a suffix of the first");
  return to_list(detail::tafa::slide_entry<V>(f, s, probe));
}

template <class Eq, List R1, List R2>
ValueList<elem_t<R1>> longest_common_suffix(const Eq& beq, const R1& xs, const R2& ys,
                                            trace::Probe probe = {}) {
  using V = elem_t<R1>;
  View<V> a = view_of(xs);
  View<V> b = view_of(ys);
  auto frame = probe.enter("longest_common_suffix", a, b);
  View<V> r = probe.call(
      "there", [&] { return detail::tafa::lcs_there<V>(beq, a, b, a, b, probe); }, a, b);
  return frame.leave(to_list(r));
}

}  // namespace taba
