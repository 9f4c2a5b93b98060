#include "potnil/text_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "potnil/error.hpp"

namespace potnil {

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1, column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            ++line;
            column = 1;
            ++i;
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++column;
            ++i;
        } else {
            const std::size_t start = i, start_col = column;
            while (i < text.size() && text[i] != '#' && !std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
                ++column;
            }
            tokens.push_back({text.substr(start, i - start), line, start_col});
        }
    }
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    bool done() const { return pos_ == tokens_.size(); }

    Matrix document() {
        expect_word("field");
        const std::uint64_t p = key_uint("p");
        const std::uint64_t d = key_uint("d");
        std::optional<std::vector<std::uint64_t>> modulus;
        if (!done() && peek().text.starts_with("mod=")) {
            const Token t = next();
            modulus = uint_list(t, t.text.substr(4));
        }
        const Token& field_at = tokens_[pos_ == 0 ? 0 : pos_ - 1];
        FieldPtr field;
        try {
            if (d == 0 || d > 64) throw Error(ErrorCode::InvalidArgument, "extension degree out of range");
            if (modulus) {
                if (modulus->size() != d + 1) throw Error(ErrorCode::InvalidArgument, "modulus degree differs from d");
                field = FieldSpec::with_modulus(p, *modulus);
            } else {
                field = FieldSpec::extension(p, static_cast<unsigned>(d));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(field_at.line, field_at.column, e.what());
        }

        expect_word("matrix");
        const std::uint64_t rows = plain_uint();
        const std::uint64_t cols = plain_uint();
        if (rows == 0 || cols == 0 || rows > 4096 || cols > 4096) {
            const Token& t = tokens_[pos_ - 1];
            throw ParseError(t.line, t.column, "matrix dimensions must lie in 1..4096");
        }
        Matrix m(field, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                const Token t = next();
                try {
                    m(i, j) = field->parse(t.text);
                } catch (const Error& e) {
                    throw ParseError(t.line, t.column, e.what());
                }
            }
        }
        return m;
    }

    const Token& current() const { return tokens_[pos_]; }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token next() {
        if (done()) {
            const std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
            const std::size_t col = tokens_.empty() ? 1 : tokens_.back().column + tokens_.back().text.size();
            throw ParseError(line, col, "unexpected end of input");
        }
        return tokens_[pos_++];
    }

    void expect_word(std::string_view word) {
        const Token t = next();
        if (t.text != word) throw ParseError(t.line, t.column, "expected '" + std::string(word) + "'");
    }

    static std::uint64_t to_uint(const Token& t, std::string_view digits) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
            throw ParseError(t.line, t.column, "expected an unsigned integer, got '" + std::string(digits) + "'");
        }
        return v;
    }

    std::uint64_t key_uint(std::string_view key) {
        const Token t = next();
        const std::string prefix = std::string(key) + "=";
        if (!t.text.starts_with(prefix)) throw ParseError(t.line, t.column, "expected '" + prefix + "INT'");
        return to_uint(t, t.text.substr(prefix.size()));
    }

    std::uint64_t plain_uint() {
        const Token t = next();
        return to_uint(t, t.text);
    }

    static std::vector<std::uint64_t> uint_list(const Token& t, std::string_view list) {
        std::vector<std::uint64_t> out;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = list.find(',', start);
            out.push_back(to_uint(t, list.substr(start, comma == std::string_view::npos ? list.npos : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return out;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Matrix parse_matrix(std::string_view text) {
    Parser parser(text);
    Matrix m = parser.document();
    if (!parser.done()) {
        const Token& t = parser.current();
        throw ParseError(t.line, t.column, "trailing content after the matrix");
    }
    return m;
}

std::vector<Matrix> parse_matrices(std::string_view text) {
    Parser parser(text);
    std::vector<Matrix> out;
    do {
        out.push_back(parser.document());
    } while (!parser.done());
    return out;
}

std::string serialize_field(const FieldSpec& field) {
    std::string out = "field p=" + std::to_string(field.characteristic()) + " d=" + std::to_string(field.degree());
    if (!field.is_prime_field()) {
        out += " mod=";
        const auto& m = field.modulus();
        for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "," : "") + std::to_string(m[i]);
    }
    return out;
}

std::string serialize(const Matrix& m) {
    return serialize_field(*m.field()) + "\nmatrix " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" +
           m.to_string();
}

}  // namespace potnil
