// Canonical textual rendering of values, shared by results and traces.
//
//   lists     [a; b; c]
//   pairs     (a, b)
//   optionals Some x / None
//   booleans  true / false
//   strings   "text"
#pragma once

#include <concepts>
#include <functional>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace taba {

inline std::string render(bool b) { return b ? "true" : "false"; }

template <std::integral I>
  requires(!std::same_as<I, bool>)
std::string render(I i) {
  return std::to_string(i);
}

inline std::string render(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string render(const std::string& s) { return render(std::string_view(s)); }
inline std::string render(const char* s) { return render(std::string_view(s)); }

template <class Sig>
std::string render(const std::function<Sig>&) {
  return "<fun>";
}

template <class A, class B>
std::string render(const std::pair<A, B>& p);
template <class... Ts>
std::string render(const std::tuple<Ts...>& t);
template <class T>
std::string render(const std::optional<T>& o);
template <class T>
std::string render(std::span<const T> xs);
template <class T, class Alloc>
std::string render(const std::vector<T, Alloc>& xs);

namespace detail {

// Fallback for element types that have no render overload.
template <class T>
std::string render_any(const T& v) {
  if constexpr (requires { render(v); }) {
    return render(v);
  } else if constexpr (requires(std::ostream& os) { os << v; }) {
    std::ostringstream os;
    os << v;
    return os.str();
  } else {
    return "<?>";
  }
}

}  // namespace detail

template <class T>
std::string render(std::span<const T> xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += "; ";
    out += detail::render_any(xs[i]);
  }
  out += "]";
  return out;
}

template <class T, class Alloc>
std::string render(const std::vector<T, Alloc>& xs) {
  return render(std::span<const T>(xs));
}

template <class A, class B>
std::string render(const std::pair<A, B>& p) {
  return "(" + detail::render_any(p.first) + ", " + detail::render_any(p.second) + ")";
}

template <class... Ts>
std::string render(const std::tuple<Ts...>& t) {
  std::string out = "(";
  std::apply(
      [&out](const auto&... xs) {
        std::size_t i = 0;
        ((out += (i++ == 0 ? "" : ", ") + detail::render_any(xs)), ...);
      },
      t);
  out += ")";
  return out;
}

template <class T>
std::string render(const std::optional<T>& o) {
  if (!o) return "None";
  std::string inner = detail::render_any(*o);
  if (!inner.empty() && inner.front() == '-') inner = "(" + inner + ")";
  return "Some " + inner;
}

}  // namespace taba
