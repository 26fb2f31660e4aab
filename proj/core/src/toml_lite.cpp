#include "arcsmith/toml_lite.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "arcsmith/errors.hpp"

namespace arcsmith::toml_lite {

namespace {

using nlohmann::json;

class Reader {
public:
    explicit Reader(std::string_view src) : src_(src) {}

    json parse() {
        json root = json::object();
        json* current = &root;
        skip_filler();
        while (!eof()) {
            if (peek() == '[') {
                current = header(root);
            } else {
                key_value(*current);
            }
            end_of_line();
            skip_filler();
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(line_) + ": " + what, line_);
    }

    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    char take() {
        char c = src_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }

    void skip_spaces() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++pos_;
    }

    void skip_comment() {
        if (!eof() && peek() == '#')
            while (!eof() && peek() != '\n') ++pos_;
    }

    // whitespace, comments and newlines between statements
    void skip_filler() {
        for (;;) {
            skip_spaces();
            skip_comment();
            if (!eof() && peek() == '\n') {
                take();
                continue;
            }
            if (!eof() && peek() == '\r') {
                ++pos_;
                continue;
            }
            break;
        }
    }

    void end_of_line() {
        skip_spaces();
        skip_comment();
        if (eof()) return;
        if (peek() == '\r') ++pos_;
        if (eof()) return;
        if (peek() != '\n') fail("expected end of line");
        take();
    }

    std::string bare_or_quoted_key() {
        skip_spaces();
        if (eof()) fail("expected a key");
        if (peek() == '"') return basic_string();
        std::string key;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '_' || peek() == '-'))
            key.push_back(take());
        if (key.empty()) fail("expected a key");
        return key;
    }

    std::vector<std::string> dotted_key() {
        std::vector<std::string> parts{bare_or_quoted_key()};
        skip_spaces();
        while (!eof() && peek() == '.') {
            take();
            parts.push_back(bare_or_quoted_key());
            skip_spaces();
        }
        return parts;
    }

    json* header(json& root) {
        take(); // '['
        bool array_of_tables = !eof() && peek() == '[';
        if (array_of_tables) take();
        auto parts = dotted_key();
        skip_spaces();
        if (eof() || take() != ']') fail("expected ']' in table header");
        if (array_of_tables) {
            if (eof() || take() != ']') fail("expected ']]' in table header");
        }

        json* node = &root;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const bool last = k + 1 == parts.size();
            json& slot = (*node)[parts[k]];
            if (last && array_of_tables) {
                if (slot.is_null()) slot = json::array();
                if (!slot.is_array()) fail("'" + parts[k] + "' is not an array of tables");
                slot.push_back(json::object());
                node = &slot.back();
            } else {
                if (slot.is_null()) slot = json::object();
                if (slot.is_array() && !slot.empty() && slot.back().is_object()) {
                    node = &slot.back(); // continue inside the latest table
                } else if (slot.is_object()) {
                    node = &slot;
                } else {
                    fail("'" + parts[k] + "' is not a table");
                }
            }
        }
        return node;
    }

    void key_value(json& table) {
        auto parts = dotted_key();
        skip_spaces();
        if (eof() || take() != '=') fail("expected '=' after key");
        json* node = &table;
        for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
            json& slot = (*node)[parts[k]];
            if (slot.is_null()) slot = json::object();
            if (!slot.is_object()) fail("'" + parts[k] + "' is not a table");
            node = &slot;
        }
        if (node->contains(parts.back())) fail("duplicate key '" + parts.back() + "'");
        (*node)[parts.back()] = value();
    }

    json value() {
        skip_spaces();
        if (eof()) fail("expected a value");
        char c = peek();
        if (c == '"') return basic_string();
        if (c == '[') return array();
        if (c == '{') return inline_table();
        if (c == 't' || c == 'f') return boolean();
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return number();
        fail(std::string("unsupported value starting with '") + c + "'");
    }

    std::string basic_string() {
        if (take() != '"') fail("expected '\"'");
        std::string out;
        for (;;) {
            if (eof()) fail("unterminated string");
            char c = take();
            if (c == '"') break;
            if (c == '\n') fail("newline in string");
            if (c == '\\') {
                if (eof()) fail("unterminated escape");
                char e = take();
                switch (e) {
                case '"': out.push_back('"'); break;
                case '\\': out.push_back('\\'); break;
                case 'n': out.push_back('\n'); break;
                case 't': out.push_back('\t'); break;
                default: fail(std::string("unsupported escape '\\") + e + "'");
                }
            } else {
                out.push_back(c);
            }
        }
        return out;
    }

    json boolean() {
        if (src_.substr(pos_, 4) == "true") {
            pos_ += 4;
            return true;
        }
        if (src_.substr(pos_, 5) == "false") {
            pos_ += 5;
            return false;
        }
        fail("expected a boolean");
    }

    json number() {
        std::string text;
        if (peek() == '+' || peek() == '-') text.push_back(take());
        bool is_float = false;
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                text.push_back(take());
            } else if (c == '_') {
                take();
            } else if (c == '.' || c == 'e' || c == 'E') {
                is_float = true;
                text.push_back(take());
            } else if (c == '-' || c == '+') {
                if (!is_float) break; // date-ish or end
                text.push_back(take());
            } else {
                break;
            }
        }
        if (text.empty() || text == "+" || text == "-") fail("bad number");
        if (is_float) return std::stod(text);
        return json(static_cast<std::int64_t>(std::stoll(text)));
    }

    json array() {
        take(); // '['
        json out = json::array();
        for (;;) {
            skip_filler();
            if (eof()) fail("unterminated array");
            if (peek() == ']') {
                take();
                break;
            }
            out.push_back(value());
            skip_filler();
            if (!eof() && peek() == ',') {
                take();
                continue;
            }
            if (!eof() && peek() == ']') {
                take();
                break;
            }
            fail("expected ',' or ']' in array");
        }
        return out;
    }

    json inline_table() {
        take(); // '{'
        json out = json::object();
        skip_spaces();
        if (!eof() && peek() == '}') {
            take();
            return out;
        }
        for (;;) {
            std::string key = bare_or_quoted_key();
            skip_spaces();
            if (eof() || take() != '=') fail("expected '=' in inline table");
            out[key] = value();
            skip_spaces();
            if (!eof() && peek() == ',') {
                take();
                skip_spaces();
                continue;
            }
            if (!eof() && peek() == '}') {
                take();
                break;
            }
            fail("expected ',' or '}' in inline table");
        }
        return out;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

} // namespace

nlohmann::json parse(std::string_view text) { return Reader(text).parse(); }

} // namespace arcsmith::toml_lite
