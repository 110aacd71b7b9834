#include "nroots/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "nroots/errors.hpp"

namespace nroots {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;     // 1-based
    bool entry_boundary;    // separated from the previous token by a tab or 2+ spaces
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        const std::size_t gap_start = i;
        bool tab = false;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            tab = tab || line[i] == '\t';
            ++i;
        }
        if (i == line.size()) {
            break;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        const bool boundary = tab || start - gap_start >= 2;
        tokens.push_back({line.substr(start, i - start), start + 1, boundary});
    }
    return tokens;
}

double parse_real(const Token& token, std::size_t line) {
    std::string_view text = token.text;
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw ParseError("unparseable number '" + std::string(token.text) + "'", line, token.column);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite number '" + std::string(token.text) + "'", line, token.column);
    }
    return value;
}

std::vector<std::pair<std::size_t, std::string_view>> split_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.emplace_back(number++, line);
        if (end == std::string_view::npos) {
            break;
        }
        text.remove_prefix(end + 1);
    }
    return lines;
}

bool blank(std::string_view line) { return line.find_first_not_of(" \t") == std::string_view::npos; }

}  // namespace

ComplexMatrix parse_matrix(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty() || blank(lines.front().second)) {
        throw ParseError("missing dimension header", 1, 1);
    }

    const auto header = tokenize(lines.front().second);
    if (header.size() != 1) {
        throw ParseError("header must hold a single positive integer", 1, header.empty() ? 1 : header[1].column);
    }
    std::size_t dim = 0;
    {
        const std::string_view h = header[0].text;
        const auto [end, ec] = std::from_chars(h.data(), h.data() + h.size(), dim);
        if (ec != std::errc{} || end != h.data() + h.size() || dim == 0) {
            throw ParseError("header must hold a single positive integer, got '" + std::string(h) + "'", 1,
                             header[0].column);
        }
    }

    std::vector<std::pair<std::size_t, std::string_view>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (!blank(lines[i].second)) {
            rows.push_back(lines[i]);
        }
    }
    if (rows.size() != dim) {
        const std::size_t where = rows.size() > dim ? rows[dim].first : lines.back().first + 1;
        throw ParseError("expected " + std::to_string(dim) + " rows, found " + std::to_string(rows.size()), where, 1);
    }

    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const auto [line_no, line] = rows[r];
        const auto tokens = tokenize(line);
        std::vector<std::vector<const Token*>> entries;
        for (const Token& t : tokens) {
            if (entries.empty() || t.entry_boundary) {
                entries.emplace_back();
            }
            entries.back().push_back(&t);
        }
        for (const auto& entry : entries) {
            if (entry.size() != 2) {
                throw ParseError("entry must be 're im' (found " + std::to_string(entry.size()) +
                                     " numbers; separate entries by two spaces or a tab)",
                                 line_no, entry.front()->column);
            }
        }
        if (entries.size() != dim) {
            throw ParseError("expected " + std::to_string(dim) + " entries, found " + std::to_string(entries.size()),
                             line_no, entries.size() > dim ? entries[dim].front()->column : line.size() + 1);
        }
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = {parse_real(*entries[c][0], line_no), parse_real(*entries[c][1], line_no)};
        }
    }
    return m;
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open matrix file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_matrix(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(e.message(), e.line(), e.column(), path.string());
    }
}

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_matrix(const ComplexMatrix& m) {
    std::string out = std::to_string(m.dim()) + "\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > 0) {
                out += "  ";
            }
            out += format_real(m(i, j).real());
            out += ' ';
            out += format_real(m(i, j).imag());
        }
        out += '\n';
    }
    return out;
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write matrix file '" + path.string() + "'");
    }
    out << format_matrix(m);
    if (!out) {
        throw Error("write failed for '" + path.string() + "'");
    }
}

}  // namespace nroots
