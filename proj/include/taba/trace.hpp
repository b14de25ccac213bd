// Call / tail-call / return instrumentation.
//
// Instrumented algorithms take a `Probe`, a nullable handle onto a caller-owned
// `TraceLog`. A default-constructed probe records nothing, so the same code
// path serves both the plain and the traced runs.
//
// Depth discipline: a call is recorded at the current nesting depth and opens
// a frame; a tail call is recorded at the depth of the frame it replaces and
// opens nothing; a return closes the innermost frame at that frame's depth.
#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taba/errors.hpp"
#include "taba/render.hpp"

namespace taba::trace {

enum class EventKind { call, tail_call, ret };

struct Event {
  EventKind kind = EventKind::call;
  std::string label;
  std::string args;
  std::optional<std::string> result;  // present iff kind == ret
  std::size_t depth = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

struct Counters {
  std::size_t calls = 0;
  std::size_t tail_calls = 0;
  std::size_t returns = 0;

  friend bool operator==(const Counters&, const Counters&) = default;
};

/// Result text recorded for a frame that is left by an escaping exception.
inline constexpr std::string_view kRaisesResult = "raises";

class TraceLog {
 public:
  /// Appends `e`, throwing ContractError if it breaks the nesting discipline.
  void record(Event e) {
    validate(e);
    append(std::move(e));
  }

  const std::vector<Event>& events() const noexcept { return events_; }
  const Counters& counters() const noexcept { return counters_; }
  std::size_t open_frames() const noexcept { return open_.size(); }
  bool balanced() const noexcept { return open_.empty(); }
  bool empty() const noexcept { return events_.empty(); }

  std::size_t count(EventKind kind, std::string_view label) const {
    std::size_t n = 0;
    for (const auto& e : events_)
      if (e.kind == kind && e.label == label) ++n;
    return n;
  }

  /// Calls and tail calls to `label` made while `label` itself is the active
  /// procedure. The entry call into `label` is not counted.
  std::size_t recursive_calls(std::string_view label) const {
    std::size_t n = 0;
    std::vector<const std::string*> stack;
    for (const auto& e : events_) {
      switch (e.kind) {
        case EventKind::call:
          if (!stack.empty() && *stack.back() == label && e.label == label) ++n;
          stack.push_back(&e.label);
          break;
        case EventKind::tail_call:
          if (*stack.back() == label && e.label == label) ++n;
          stack.back() = &e.label;
          break;
        case EventKind::ret:
          stack.pop_back();
          break;
      }
    }
    return n;
  }

 private:
  friend class Frame;

  void validate(const Event& e) const {
    switch (e.kind) {
      case EventKind::call:
        if (e.result) throw ContractError("trace: call event carries a result");
        if (e.depth != open_.size()) throw ContractError("trace: call at wrong depth");
        break;
      case EventKind::tail_call:
        if (e.result) throw ContractError("trace: tail call carries a result");
        if (open_.empty()) throw ContractError("trace: tail call outside any frame");
        if (e.depth != open_.size() - 1) throw ContractError("trace: tail call at wrong depth");
        break;
      case EventKind::ret:
        if (!e.result) throw ContractError("trace: return without a result");
        if (open_.empty()) throw ContractError("trace: return without a matching call");
        if (e.depth != open_.size() - 1) throw ContractError("trace: return at wrong depth");
        if (events_[open_.back()].label != e.label)
          throw ContractError("trace: return label does not match its call");
        break;
    }
  }

  void append(Event e) {
    switch (e.kind) {
      case EventKind::call:
        ++counters_.calls;
        open_.push_back(events_.size());
        break;
      case EventKind::tail_call:
        ++counters_.tail_calls;
        break;
      case EventKind::ret:
        ++counters_.returns;
        open_.pop_back();
        break;
    }
    events_.push_back(std::move(e));
  }

  std::vector<Event> events_;
  Counters counters_;
  std::vector<std::size_t> open_;
};

/// Functional form of TraceLog::record.
inline TraceLog record(TraceLog log, Event e) {
  log.record(std::move(e));
  return log;
}

namespace detail {

template <class... Args>
std::string render_args(const Args&... args) {
  std::string out;
  ((out += (out.empty() ? "" : " ") + taba::detail::render_any(args)), ...);
  return out;
}

}  // namespace detail

/// An open call. Close it with `leave(result)`; if an exception escapes
/// instead, the destructor records a `raises` return so the log stays
/// balanced.
class Frame {
 public:
  Frame() = default;
  Frame(const Frame&) = delete;
  Frame& operator=(const Frame&) = delete;
  Frame(Frame&& o) noexcept
      : log_(std::exchange(o.log_, nullptr)),
        label_(std::move(o.label_)),
        args_(std::move(o.args_)),
        depth_(o.depth_),
        uncaught_(o.uncaught_) {}
  Frame& operator=(Frame&&) = delete;

  ~Frame() {
    if (log_ != nullptr && std::uncaught_exceptions() > uncaught_) {
      log_->append(Event{EventKind::ret, std::move(label_), std::move(args_),
                         std::string(kRaisesResult), depth_});
    }
  }

  template <class R>
  R leave(R result) {
    if (log_ != nullptr) {
      log_->record(Event{EventKind::ret, std::move(label_), std::move(args_),
                         taba::detail::render_any(result), depth_});
      log_ = nullptr;
    }
    return result;
  }

 private:
  friend class Probe;

  Frame(TraceLog* log, std::string label, std::string args, std::size_t depth)
      : log_(log),
        label_(std::move(label)),
        args_(std::move(args)),
        depth_(depth),
        uncaught_(std::uncaught_exceptions()) {}

  TraceLog* log_ = nullptr;
  std::string label_;
  std::string args_;
  std::size_t depth_ = 0;
  int uncaught_ = 0;
};

class Probe {
 public:
  Probe() = default;
  explicit Probe(TraceLog* log) : log_(log) {}
  explicit Probe(TraceLog& log) : log_(&log) {}

  bool active() const noexcept { return log_ != nullptr; }
  TraceLog* log() const noexcept { return log_; }

  template <class... Args>
  [[nodiscard]] Frame enter(std::string_view label, const Args&... args) const {
    if (log_ == nullptr) return Frame{};
    std::string rendered = detail::render_args(args...);
    std::size_t depth = log_->open_frames();
    log_->record(Event{EventKind::call, std::string(label), rendered, std::nullopt, depth});
    return Frame(log_, std::string(label), std::move(rendered), depth);
  }

  /// Runs `body` inside a frame labelled `label`.
  template <class F, class... Args>
  auto call(std::string_view label, F&& body, const Args&... args) const {
    auto frame = enter(label, args...);
    return frame.leave(std::forward<F>(body)());
  }

  template <class... Args>
  void tail_call(std::string_view label, const Args&... args) const {
    if (log_ == nullptr) return;
    log_->record(Event{EventKind::tail_call, std::string(label), detail::render_args(args...),
                       std::nullopt, log_->open_frames() - 1});
  }

 private:
  TraceLog* log_ = nullptr;
};

/// One line per event, indented one space per depth level, LF-terminated.
inline std::string render_trace(const TraceLog& log) {
  std::string out;
  for (const auto& e : log.events()) {
    out.append(e.depth, ' ');
    out += e.label;
    if (!e.args.empty()) out += " " + e.args;
    if (e.kind == EventKind::ret) {
      out += " <- " + *e.result;
    } else {
      out += " ->";
    }
    out += '\n';
  }
  return out;
}

struct ShapeLine {
  EventKind kind;
  std::size_t depth;

  friend bool operator==(const ShapeLine&, const ShapeLine&) = default;
};

/// Recovers event kinds and depths from rendered text. Calls and tail calls
/// render alike; they are told apart by the number of frames open at that
/// point. Throws ParseError on text that is not a well-nested trace.
inline std::vector<ShapeLine> parse_trace_shape(std::string_view text) {
  std::vector<ShapeLine> shape;
  std::size_t open = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) throw ParseError("trace: missing final newline", pos);
    std::string_view line = text.substr(pos, eol - pos);
    std::size_t depth = line.find_first_not_of(' ');
    if (depth == std::string_view::npos) throw ParseError("trace: blank line", pos);
    if (line.ends_with(" ->")) {
      if (depth == open) {
        shape.push_back({EventKind::call, depth});
        ++open;
      } else if (open > 0 && depth == open - 1) {
        shape.push_back({EventKind::tail_call, depth});
      } else {
        throw ParseError("trace: call line at unexpected depth", pos);
      }
    } else if (line.find(" <- ") != std::string_view::npos) {
      if (open == 0 || depth != open - 1)
        throw ParseError("trace: return line at unexpected depth", pos);
      shape.push_back({EventKind::ret, depth});
      --open;
    } else {
      throw ParseError("trace: line has no arrow", pos);
    }
    pos = eol + 1;
  }
  if (open != 0) throw ParseError("trace: unbalanced calls", text.size());
  return shape;
}

}  // namespace taba::trace
