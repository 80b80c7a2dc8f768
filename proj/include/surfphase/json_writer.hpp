#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string_view>
#include <vector>

#include "surfphase/format.hpp"

namespace surfphase {

// Minimal streaming JSON emitter. Keys are written in call order and doubles
// through format_number(), which is what makes reports diff-able and
// byte-stable; general-purpose JSON libraries choose their own float
// representation.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  void begin_object() {
    separate();
    os_ << '{';
    stack_.push_back(State{true, false});
  }
  void end_object() {
    pop();
    os_ << '}';
  }
  void begin_array() {
    separate();
    os_ << '[';
    stack_.push_back(State{false, false});
  }
  void end_array() {
    pop();
    os_ << ']';
  }

  void key(std::string_view name) {
    separate();
    write_string(name);
    os_ << ": ";
    pending_value_ = true;
  }

  void value(double v) {
    separate();
    if (std::isfinite(v))
      os_ << format_number(v);
    else
      os_ << "null";  // undefined-moment markers and the like
  }
  void value(std::int64_t v) {
    separate();
    os_ << v;
  }
  void value(std::uint64_t v) {
    separate();
    os_ << v;
  }
  void value(int v) { value(static_cast<std::int64_t>(v)); }
  void value(std::size_t v) { value(static_cast<std::uint64_t>(v)); }
  void value(bool v) {
    separate();
    os_ << (v ? "true" : "false");
  }
  void value(std::string_view v) {
    separate();
    write_string(v);
  }
  void value(const char* v) { value(std::string_view(v)); }
  void null() {
    separate();
    os_ << "null";
  }

  template <typename T>
  void kv(std::string_view name, const T& v) {
    key(name);
    value(v);
  }
  void kv_null(std::string_view name) {
    key(name);
    null();
  }

 private:
  struct State {
    bool is_object;
    bool has_items;
  };

  void separate() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (stack_.empty()) return;
    if (stack_.back().has_items) os_ << ", ";
    stack_.back().has_items = true;
    newline_indent();
  }

  void newline_indent() {
    os_ << '\n';
    for (std::size_t i = 0; i < stack_.size(); ++i) os_ << "  ";
  }

  void pop() {
    bool had = !stack_.empty() && stack_.back().has_items;
    if (!stack_.empty()) stack_.pop_back();
    if (had) {
      os_ << '\n';
      for (std::size_t i = 0; i < stack_.size(); ++i) os_ << "  ";
    }
  }

  void write_string(std::string_view s) {
    os_ << '"';
    for (char c : s) {
      switch (c) {
        case '"': os_ << "\\\""; break;
        case '\\': os_ << "\\\\"; break;
        case '\n': os_ << "\\n"; break;
        case '\t': os_ << "\\t"; break;
        case '\r': os_ << "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            os_ << buf;
          } else {
            os_ << c;
          }
      }
    }
    os_ << '"';
  }

  std::ostream& os_;
  std::vector<State> stack_;
  bool pending_value_ = false;
};

}  // namespace surfphase
