// List vocabulary, the two folds, and the reference oracles.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <ranges>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "taba/errors.hpp"
#include "taba/trace.hpp"

namespace taba {

template <class V>
using ValueList = std::vector<V>;

template <class A, class B = A>
using PairList = std::vector<std::pair<A, B>>;

/// A read-only window onto a list. Suffixes are subspans sharing the same end.
template <class V>
using View = std::span<const V>;

template <class R>
concept List = std::ranges::contiguous_range<R> && std::ranges::sized_range<R>;

template <List R>
using elem_t = std::remove_cvref_t<std::ranges::range_value_t<R>>;

template <List R>
View<elem_t<R>> view_of(const R& r) {
  return View<elem_t<R>>(std::ranges::data(r), std::ranges::size(r));
}

template <class V>
ValueList<V> to_list(View<V> v) {
  return ValueList<V>(v.begin(), v.end());
}

/// True when `sfx` is a structural tail of `full`: same storage, same end.
template <class V>
bool is_structural_suffix(View<V> sfx, View<V> full) {
  if (sfx.size() > full.size()) return false;
  if (sfx.empty()) return true;
  return sfx.data() + sfx.size() == full.data() + full.size();
}

/// Value-level suffix test, for inputs that do not share storage.
template <class V, class Eq = std::equal_to<>>
bool is_value_suffix(View<V> sfx, View<V> full, Eq beq = {}) {
  if (sfx.size() > full.size()) return false;
  auto tail = full.subspan(full.size() - sfx.size());
  return std::equal(sfx.begin(), sfx.end(), tail.begin(), tail.end(), beq);
}

template <class V>
ValueList<V> cons(V v, ValueList<V> vs) {
  vs.insert(vs.begin(), std::move(v));
  return vs;
}

namespace detail {

template <class Acc, class V, class Cons>
Acc fold_right_visit(const Acc& nil_case, Cons& cons_case, View<V> vs, trace::Probe probe) {
  auto frame = probe.enter("fold_right", vs);
  if (vs.empty()) return frame.leave(nil_case);
  return frame.leave(cons_case(vs.front(), fold_right_visit(nil_case, cons_case, vs.subspan(1), probe)));
}

}  // namespace detail

template <class Acc, class Cons, List R>
Acc fold_right(Acc nil_case, Cons cons_case, const R& vs, trace::Probe probe = {}) {
  return detail::fold_right_visit<Acc, elem_t<R>>(nil_case, cons_case, view_of(vs), probe);
}

template <class Acc, class Cons, List R>
Acc fold_left(Acc nil_case, Cons cons_case, const R& vs, trace::Probe probe = {}) {
  auto rest = view_of(vs);
  auto frame = probe.enter("fold_left", rest);
  Acc acc = std::move(nil_case);
  while (!rest.empty()) {
    acc = cons_case(rest.front(), std::move(acc));
    rest = rest.subspan(1);
    probe.tail_call("fold_left", rest);
  }
  return frame.leave(std::move(acc));
}

// Oracles ------------------------------------------------------------------

template <List R>
ValueList<elem_t<R>> oracle_reverse(const R& vs) {
  auto v = view_of(vs);
  return ValueList<elem_t<R>>(v.rbegin(), v.rend());
}

template <List R1, List R2>
std::optional<PairList<elem_t<R1>, elem_t<R2>>> oracle_zip_same_length(const R1& vs, const R2& ws) {
  auto a = view_of(vs);
  auto b = view_of(ws);
  if (a.size() != b.size()) return std::nullopt;
  PairList<elem_t<R1>, elem_t<R2>> ps;
  ps.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ps.emplace_back(a[i], b[i]);
  return ps;
}

template <List R1, List R2>
std::optional<PairList<elem_t<R1>, elem_t<R2>>> oracle_convolution(const R1& vs, const R2& ws) {
  return oracle_zip_same_length(vs, oracle_reverse(ws));
}

template <class A, class B>
std::pair<ValueList<A>, ValueList<B>> oracle_unzip(const PairList<A, B>& ps) {
  std::pair<ValueList<A>, ValueList<B>> out;
  out.first.reserve(ps.size());
  out.second.reserve(ps.size());
  for (const auto& [a, b] : ps) {
    out.first.push_back(a);
    out.second.push_back(b);
  }
  return out;
}

template <List R>
std::optional<std::pair<ValueList<elem_t<R>>, elem_t<R>>> split_last(const R& vs) {
  auto v = view_of(vs);
  if (v.empty()) return std::nullopt;
  return std::pair{to_list(v.first(v.size() - 1)), v.back()};
}

template <List R>
std::optional<elem_t<R>> oracle_nth_rtl(const R& vs, std::size_t n) {
  auto v = view_of(vs);
  if (n >= v.size()) return std::nullopt;
  return v[v.size() - 1 - n];
}

template <List R>
ValueList<elem_t<R>> take(const R& vs, std::size_t k) {
  auto v = view_of(vs);
  return to_list(v.first(std::min(k, v.size())));
}

template <List R>
ValueList<elem_t<R>> take_last(const R& vs, std::size_t k) {
  auto v = view_of(vs);
  return to_list(v.last(std::min(k, v.size())));
}

/// Brute force: tries every candidate length from the longest down.
template <List R1, List R2, class Eq = std::equal_to<>>
ValueList<elem_t<R1>> oracle_longest_common_suffix(const R1& xs, const R2& ys, Eq beq = {}) {
  auto a = view_of(xs);
  auto b = view_of(ys);
  for (std::size_t k = std::min(a.size(), b.size());; --k) {
    auto sa = a.last(k);
    auto sb = b.last(k);
    if (std::equal(sa.begin(), sa.end(), sb.begin(), sb.end(), beq)) return to_list(sa);
    if (k == 0) break;
  }
  return {};
}

}  // namespace taba
