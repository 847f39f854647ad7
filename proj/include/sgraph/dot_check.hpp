#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace sgraph {

namespace detail {

// Tokenizer and recursive-descent parser for the core DOT grammar
// (graph/digraph, node and edge statements, attribute lists, ID = ID
// assignments). Kept independent of to_dot so rendered output can be
// checked against the grammar rather than against itself.

struct DotToken {
    enum class Kind {
        keyword_strict,
        keyword_graph,
        keyword_digraph,
        keyword_node,
        keyword_edge,
        identifier,
        open_brace,
        close_brace,
        open_bracket,
        close_bracket,
        equals,
        semicolon,
        comma,
        edge_undirected,
        edge_directed,
        end,
        error,
    };
    Kind kind = Kind::error;
};

class DotLexer {
public:
    explicit DotLexer(std::string_view text) : text_(text) {}

    DotToken next() {
        skip_space_and_comments();
        if (pos_ >= text_.size()) return {DotToken::Kind::end};
        const char c = text_[pos_];
        if (c == '{') return advance(DotToken::Kind::open_brace);
        if (c == '}') return advance(DotToken::Kind::close_brace);
        if (c == '[') return advance(DotToken::Kind::open_bracket);
        if (c == ']') return advance(DotToken::Kind::close_bracket);
        if (c == '=') return advance(DotToken::Kind::equals);
        if (c == ';') return advance(DotToken::Kind::semicolon);
        if (c == ',') return advance(DotToken::Kind::comma);
        if (c == '-') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                pos_ += 2;
                return {DotToken::Kind::edge_undirected};
            }
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                pos_ += 2;
                return {DotToken::Kind::edge_directed};
            }
            return lex_numeral();
        }
        if (c == '"') return lex_quoted();
        if (c == '.' || std::isdigit(static_cast<unsigned char>(c))) return lex_numeral();
        if (is_name_start(c)) return lex_name();
        return {DotToken::Kind::error};
    }

private:
    DotToken advance(DotToken::Kind kind) {
        ++pos_;
        return {kind};
    }

    static bool is_name_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
               static_cast<unsigned char>(c) >= 0x80;
    }
    static bool is_name_char(char c) {
        return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c));
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                pos_ += 2;
                while (pos_ + 1 < text_.size() &&
                       !(text_[pos_] == '*' && text_[pos_ + 1] == '/'))
                    ++pos_;
                pos_ = pos_ + 2 <= text_.size() ? pos_ + 2 : text_.size();
            } else {
                return;
            }
        }
    }

    DotToken lex_quoted() {
        ++pos_;  // opening quote
        while (pos_ < text_.size()) {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
                pos_ += 2;
                continue;
            }
            if (text_[pos_] == '"') {
                ++pos_;
                return {DotToken::Kind::identifier};
            }
            ++pos_;
        }
        return {DotToken::Kind::error};  // unterminated string
    }

    DotToken lex_numeral() {
        if (text_[pos_] == '-') ++pos_;
        bool digits = false;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            digits = true;
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                digits = true;
            }
        }
        return digits ? DotToken{DotToken::Kind::identifier} : DotToken{DotToken::Kind::error};
    }

    DotToken lex_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
        const std::string_view word = text_.substr(start, pos_ - start);
        if (word == "strict") return {DotToken::Kind::keyword_strict};
        if (word == "graph") return {DotToken::Kind::keyword_graph};
        if (word == "digraph") return {DotToken::Kind::keyword_digraph};
        if (word == "node") return {DotToken::Kind::keyword_node};
        if (word == "edge") return {DotToken::Kind::keyword_edge};
        return {DotToken::Kind::identifier};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

class DotParser {
public:
    explicit DotParser(std::string_view text) : lexer_(text) { shift(); }

    bool parse() {
        if (current_ == DotToken::Kind::keyword_strict) shift();
        if (current_ == DotToken::Kind::keyword_graph) {
            directed_ = false;
        } else if (current_ == DotToken::Kind::keyword_digraph) {
            directed_ = true;
        } else {
            return false;
        }
        shift();
        if (current_ == DotToken::Kind::identifier) shift();  // optional name
        if (!accept(DotToken::Kind::open_brace)) return false;
        if (!parse_statement_list()) return false;
        if (!accept(DotToken::Kind::close_brace)) return false;
        return current_ == DotToken::Kind::end;
    }

private:
    void shift() { current_ = lexer_.next().kind; }

    bool accept(DotToken::Kind kind) {
        if (current_ != kind) return false;
        shift();
        return true;
    }

    bool parse_statement_list() {
        while (current_ != DotToken::Kind::close_brace) {
            if (current_ == DotToken::Kind::end || current_ == DotToken::Kind::error)
                return false;
            if (!parse_statement()) return false;
            if (current_ == DotToken::Kind::semicolon) shift();
        }
        return true;
    }

    bool parse_statement() {
        if (current_ == DotToken::Kind::keyword_graph ||
            current_ == DotToken::Kind::keyword_node ||
            current_ == DotToken::Kind::keyword_edge) {
            shift();
            return parse_attr_list();
        }
        if (!accept(DotToken::Kind::identifier)) return false;
        if (current_ == DotToken::Kind::equals) {
            shift();
            return accept(DotToken::Kind::identifier);
        }
        const DotToken::Kind edge_op =
            directed_ ? DotToken::Kind::edge_directed : DotToken::Kind::edge_undirected;
        const DotToken::Kind wrong_op =
            directed_ ? DotToken::Kind::edge_undirected : DotToken::Kind::edge_directed;
        if (current_ == wrong_op) return false;
        while (current_ == edge_op) {
            shift();
            if (!accept(DotToken::Kind::identifier)) return false;
        }
        if (current_ == DotToken::Kind::open_bracket) return parse_attr_list();
        return true;
    }

    bool parse_attr_list() {
        if (current_ != DotToken::Kind::open_bracket) return false;
        while (current_ == DotToken::Kind::open_bracket) {
            shift();
            while (current_ == DotToken::Kind::identifier) {
                shift();
                if (!accept(DotToken::Kind::equals)) return false;
                if (!accept(DotToken::Kind::identifier)) return false;
                if (current_ == DotToken::Kind::comma ||
                    current_ == DotToken::Kind::semicolon)
                    shift();
            }
            if (!accept(DotToken::Kind::close_bracket)) return false;
        }
        return true;
    }

    DotLexer lexer_;
    DotToken::Kind current_ = DotToken::Kind::error;
    bool directed_ = false;
};

}  // namespace detail

/// True iff the text conforms to the core DOT grammar. Undirected graphs
/// must use "--" and directed ones "->".
inline bool is_valid_dot(std::string_view text) {
    return detail::DotParser(text).parse();
}

}  // namespace sgraph
