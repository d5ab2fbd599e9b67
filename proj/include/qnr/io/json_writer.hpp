#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qnr::io {

// Serializes a double with 12 significant digits, the precision contract for
// report determinism: equal doubles always produce equal bytes.
inline std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Structured JSON emitter with fixed 2-space indentation.  Output depends
// only on the call sequence, so identical reports serialize byte-identically.
class JsonWriter {
public:
  void begin_object() {
    open_slot();
    out_ += '{';
    frames_.push_back({true, 0});
  }

  void end_object() { close('}', true); }

  void begin_array() {
    open_slot();
    out_ += '[';
    frames_.push_back({false, 0});
  }

  void end_array() { close(']', false); }

  void key(std::string_view name) {
    if (frames_.empty() || !frames_.back().is_object)
      throw std::logic_error("JsonWriter: key outside object");
    separate();
    newline();
    write_string(name);
    out_ += ": ";
    pending_key_ = true;
  }

  void value(double v) { scalar(format_double(v)); }
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  void value(T v) {
    scalar(std::to_string(v));
  }
  void value(bool v) { scalar(v ? "true" : "false"); }
  void value(std::string_view v) {
    open_slot();
    write_string(v);
  }
  void value(const char* v) { value(std::string_view(v)); }
  void null() { scalar("null"); }

  const std::string& str() const {
    if (!frames_.empty()) throw std::logic_error("JsonWriter: unclosed container");
    return out_;
  }

private:
  struct Frame {
    bool is_object;
    std::size_t count;
  };

  void scalar(const std::string& text) {
    open_slot();
    out_ += text;
  }

  // A value either fills a pending key slot or is an array element.
  void open_slot() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (!frames_.empty()) {
      if (frames_.back().is_object) throw std::logic_error("JsonWriter: value without key");
      separate();
      newline();
    }
  }

  void separate() {
    if (frames_.back().count++ > 0) out_ += ',';
  }

  void newline() {
    out_ += '\n';
    out_.append(2 * frames_.size(), ' ');
  }

  void close(char bracket, bool object) {
    if (frames_.empty() || frames_.back().is_object != object || pending_key_)
      throw std::logic_error("JsonWriter: mismatched close");
    const bool had_items = frames_.back().count > 0;
    frames_.pop_back();
    if (had_items) {
      out_ += '\n';
      out_.append(2 * frames_.size(), ' ');
    }
    out_ += bracket;
  }

  void write_string(std::string_view s) {
    out_ += '"';
    for (char ch : s) {
      switch (ch) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(ch) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
            out_ += buf;
          } else {
            out_ += ch;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<Frame> frames_;
  bool pending_key_ = false;
};

}  // namespace qnr::io
