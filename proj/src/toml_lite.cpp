// Copyright 2026 The postfoot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toml_lite.hpp"

#include <cctype>
#include <charconv>

#include "postfoot/errors.hpp"

namespace postfoot::toml_lite {

namespace {

class Reader {
 public:
  Reader(std::string_view text, const std::string& origin) : text_(text), origin_(origin) {}

  nlohmann::json document() {
    nlohmann::json root = nlohmann::json::object();
    nlohmann::json* table = &root;
    while (true) {
      skip_blank_lines();
      if (at_end()) break;
      if (peek() == '[') {
        table = header(root);
      } else {
        key_value(*table);
      }
      end_of_line();
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(origin_ + ":" + std::to_string(line_), msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  void skip_spaces() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }
  void skip_comment() {
    if (peek() == '#') {
      while (!at_end() && peek() != '\n') ++pos_;
    }
  }
  // Whitespace, newlines and comments (used inside arrays and between statements).
  void skip_blank_lines() {
    while (true) {
      skip_spaces();
      skip_comment();
      if (peek() == '\n') {
        get();
        continue;
      }
      break;
    }
  }
  void end_of_line() {
    skip_spaces();
    skip_comment();
    if (at_end()) return;
    if (peek() != '\n') fail("unexpected '" + std::string(1, peek()) + "' after value");
    get();
  }

  std::string key() {
    skip_spaces();
    if (peek() == '"') return basic_string();
    std::string k;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '-')) {
      k += get();
    }
    if (k.empty()) fail("expected a key");
    return k;
  }

  nlohmann::json* header(nlohmann::json& root) {
    get();
    bool array = peek() == '[';
    if (array) get();
    std::string name = key();
    skip_spaces();
    if (get() != ']' || (array && (at_end() || get() != ']'))) fail("malformed table header");
    if (array) {
      auto& slot = root[name];
      if (slot.is_null()) slot = nlohmann::json::array();
      if (!slot.is_array()) fail("'" + name + "' is not an array of tables");
      slot.push_back(nlohmann::json::object());
      return &slot.back();
    }
    auto& slot = root[name];
    if (slot.is_null()) slot = nlohmann::json::object();
    if (!slot.is_object()) fail("'" + name + "' redefined");
    return &slot;
  }

  void key_value(nlohmann::json& table) {
    std::string k = key();
    skip_spaces();
    if (at_end() || get() != '=') fail("expected '=' after key '" + k + "'");
    skip_spaces();
    if (table.contains(k)) fail("duplicate key '" + k + "'");
    table[k] = value();
  }

  nlohmann::json value() {
    skip_spaces();
    char c = peek();
    if (c == '"') return basic_string();
    if (c == '{') return inline_table();
    if (c == '[') return array();
    if (text_.substr(pos_, 4) == "true") {
      pos_ += 4;
      return true;
    }
    if (text_.substr(pos_, 5) == "false") {
      pos_ += 5;
      return false;
    }
    return number();
  }

  std::string basic_string() {
    get();
    std::string s;
    while (true) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char c = get();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated string");
        char e = get();
        switch (e) {
          case 'n': s += '\n'; break;
          case 't': s += '\t'; break;
          case '"': s += '"'; break;
          case '\\': s += '\\'; break;
          default: fail(std::string("unsupported escape \\") + e);
        }
        continue;
      }
      s += c;
    }
    return s;
  }

  nlohmann::json number() {
    std::string tok;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '.' ||
                         peek() == '+' || peek() == '-' || peek() == '_')) {
      char c = get();
      if (c != '_') tok += c;
    }
    if (tok.empty()) fail("expected a value");
    bool is_float = tok.find_first_of(".eE") != std::string::npos || tok == "inf" || tok == "nan";
    const char* first = tok.data() + (tok[0] == '+' ? 1 : 0);
    const char* last = tok.data() + tok.size();
    if (!is_float) {
      long long v = 0;
      auto [p, ec] = std::from_chars(first, last, v);
      if (ec == std::errc{} && p == last) return v;
    }
    double d = 0.0;
    auto [p, ec] = std::from_chars(first, last, d);
    if (ec != std::errc{} || p != last) fail("invalid value '" + tok + "'");
    return d;
  }

  nlohmann::json inline_table() {
    get();
    nlohmann::json t = nlohmann::json::object();
    skip_spaces();
    if (peek() == '}') {
      get();
      return t;
    }
    while (true) {
      key_value(t);
      skip_spaces();
      char c = at_end() ? '\0' : get();
      if (c == '}') break;
      if (c != ',') fail("expected ',' or '}' in inline table");
    }
    return t;
  }

  nlohmann::json array() {
    get();
    nlohmann::json a = nlohmann::json::array();
    while (true) {
      skip_blank_lines();
      if (peek() == ']') {
        get();
        break;
      }
      a.push_back(value());
      skip_blank_lines();
      char c = at_end() ? '\0' : get();
      if (c == ']') break;
      if (c != ',') fail("expected ',' or ']' in array");
    }
    return a;
  }

  std::string_view text_;
  const std::string& origin_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

nlohmann::json parse(std::string_view text, const std::string& origin) {
  return Reader(text, origin).document();
}

}  // namespace postfoot::toml_lite
