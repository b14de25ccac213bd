// Reference implementations written without continuations or accumulated
// returns, used to cross-check the term, tree, and gallery algorithms.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taba/core_lists.hpp"
#include "taba/eta.hpp"
#include "taba/gallery.hpp"

namespace taba {

/// Counts the leading binders, then checks the application spine below them
/// from the outermost application inwards.
template <class Rep>
std::optional<EtaWitness<Term<Rep>>> oracle_eta(const Term<Rep>& t) {
  std::vector<typename Rep::Binder> binders;
  const Term<Rep>* cur = &t;
  while (cur->is_lam()) {
    binders.push_back(cur->binder());
    cur = &cur->body();
  }
  const std::size_t depth = binders.size();
  if (depth == 0) return std::nullopt;
  for (std::size_t j = depth; j >= 1; --j) {
    if (!cur->is_app() || !cur->arg().is_var()) return std::nullopt;
    const auto& ref = cur->arg().var_ref();
    bool ok;
    if constexpr (std::same_as<Rep, NamedRep>)
      ok = ref == binders[j - 1];
    else if constexpr (std::same_as<Rep, LevelRep>)
      ok = ref == j - 1;
    else
      ok = ref == depth - j;
    if (!ok) return std::nullopt;
    cur = &cur->fun();
  }
  return EtaWitness<Term<Rep>>{*cur, depth};
}

/// The redex built by a plain loop, for checking the constructors.
template <class Rep>
Term<Rep> oracle_make_eta(const Term<Rep>& core, std::size_t depth) {
  Term<Rep> body = core;
  for (std::size_t j = 1; j <= depth; ++j) {
    if constexpr (std::same_as<Rep, NamedRep>)
      body = Term<Rep>::app(body, Term<Rep>::var("x" + std::to_string(j)));
    else if constexpr (std::same_as<Rep, LevelRep>)
      body = Term<Rep>::app(body, Term<Rep>::var(j - 1));
    else
      body = Term<Rep>::app(body, Term<Rep>::var(depth - j));
  }
  for (std::size_t j = depth; j >= 1; --j) {
    if constexpr (std::same_as<Rep, NamedRep>)
      body = Term<Rep>::lam("x" + std::to_string(j), body);
    else
      body = Term<Rep>::lam(body);
  }
  return body;
}

inline std::uint64_t oracle_factorial(unsigned n) {
  std::uint64_t acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline std::uint64_t tree_weight(const BinTree& t) {
  return t.is_leaf() ? t.weight() : tree_weight(t.left()) + tree_weight(t.right());
}

inline bool oracle_balanced(const BinTree& t) {
  if (t.is_leaf()) return true;
  return oracle_balanced(t.left()) && oracle_balanced(t.right()) &&
         tree_weight(t.left()) == tree_weight(t.right());
}

template <List R>
std::vector<ValueList<elem_t<R>>> oracle_prefixes(const R& vs) {
  std::vector<ValueList<elem_t<R>>> out;
  for (std::size_t k = 0; k <= std::ranges::size(vs); ++k) out.push_back(take(vs, k));
  return out;
}

template <List R>
std::optional<std::pair<elem_t<R>, elem_t<R>>> oracle_first_and_last(const R& vs) {
  auto v = view_of(vs);
  if (v.empty()) return std::nullopt;
  return std::pair{v.front(), v.back()};
}

}  // namespace taba
