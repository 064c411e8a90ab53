#include "ihz/mat.hpp"

#include <sstream>

namespace ihz {

MatQ to_q(const MatZ& a) {
    MatQ m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            m.at(i, j) = Rat(a.at(i, j));
    return m;
}

namespace {

// Next content line, with comments and blanks stripped.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
            continue;
        size_t end = line.find_last_not_of(" \t\r");
        line = line.substr(start, end - start + 1);
        return true;
    }
    return false;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t)
        toks.push_back(t);
    return toks;
}

template <typename T, typename ParseFn>
Mat<T> read_mat_impl(std::istream& in, ParseFn parse_entry) {
    std::string line;
    if (!next_data_line(in, line))
        throw ParseError("expected matrix header line 'ROWS COLS'");
    auto header = split_ws(line);
    if (header.size() != 2)
        throw ParseError("matrix header must be 'ROWS COLS', got '" + line + "'");
    Int r = parse_int(header[0]);
    Int c = parse_int(header[1]);
    if (r < 0 || c < 0)
        throw ParseError("negative matrix dimension in '" + line + "'");
    size_t rows = static_cast<size_t>(r);
    size_t cols = static_cast<size_t>(c);
    Mat<T> m(rows, cols);
    if (cols == 0)
        return m; // no data lines for empty rows
    for (size_t i = 0; i < rows; ++i) {
        if (!next_data_line(in, line))
            throw ParseError("matrix ends after " + std::to_string(i) + " of " +
                             std::to_string(rows) + " rows");
        auto toks = split_ws(line);
        if (toks.size() != cols)
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(toks.size()) + " entries, expected " +
                             std::to_string(cols));
        for (size_t j = 0; j < cols; ++j)
            m.at(i, j) = parse_entry(toks[j]);
    }
    return m;
}

} // namespace

MatZ read_matz(std::istream& in) {
    return read_mat_impl<Int>(in, [](const std::string& t) { return parse_int(t); });
}

MatQ read_matq(std::istream& in) {
    return read_mat_impl<Rat>(in, [](const std::string& t) { return parse_rat(t); });
}

MatZ parse_matz(const std::string& text) {
    std::istringstream ss(text);
    return read_matz(ss);
}

MatQ parse_matq(const std::string& text) {
    std::istringstream ss(text);
    return read_matq(ss);
}

namespace {

template <typename T, typename ShowFn>
void write_mat_impl(std::ostream& out, const Mat<T>& a, ShowFn show) {
    out << a.rows() << " " << a.cols() << "\n";
    if (a.cols() == 0)
        return;
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            if (j)
                out << " ";
            out << show(a.at(i, j));
        }
        out << "\n";
    }
}

} // namespace

void write_mat(std::ostream& out, const MatZ& a) {
    write_mat_impl(out, a, [](const Int& x) { return to_string(x); });
}

void write_mat(std::ostream& out, const MatQ& a) {
    write_mat_impl(out, a, [](const Rat& x) { return to_string(x); });
}

std::string to_string(const MatZ& a) {
    std::ostringstream out;
    write_mat(out, a);
    return out.str();
}

std::string to_string(const MatQ& a) {
    std::ostringstream out;
    write_mat(out, a);
    return out.str();
}

} // namespace ihz
