#include "grcodes/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "grcodes/error.hpp"

namespace grcodes {

namespace {

void write_rows(std::ostream& os, const FpMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto row = m.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << ' ';
            os << row[j];
        }
        os << '\n';
    }
}

bool next_content_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

FpMatrix read_rows(std::istream& is, std::size_t rows, std::size_t cols, std::uint32_t p, const char* what) {
    FpMatrix m(rows, cols, p);
    std::string line;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!next_content_line(is, line))
            throw ParseError(std::string(what) + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(i));
        std::istringstream ls(line);
        for (std::size_t j = 0; j < cols; ++j) {
            long long v;
            if (!(ls >> v)) throw ParseError(std::string(what) + ": row " + std::to_string(i) + " is too short");
            if (v < 0 || static_cast<unsigned long long>(v) >= p)
                throw ParseError(std::string(what) + ": entry out of range in row " + std::to_string(i));
            m(i, j) = static_cast<std::uint32_t>(v);
        }
        std::string extra;
        if (ls >> extra) throw ParseError(std::string(what) + ": row " + std::to_string(i) + " is too long");
    }
    return m;
}

std::string compact(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
}

Ring ring_of(std::uint32_t p) { return Ring::prime_field(p); }

}  // namespace

void write_matrix(std::ostream& os, const FpMatrix& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << ring_of(m.modulus()).to_string() << '\n';
    write_rows(os, m);
}

FpMatrix read_matrix(std::istream& is) {
    std::string line;
    if (!next_content_line(is, line)) throw ParseError("matrix: missing header");
    std::istringstream hs(line);
    std::size_t rows, cols;
    std::string field;
    if (!(hs >> rows >> cols >> field)) throw ParseError("matrix: header must be `rows cols field`");
    const Ring ring = parse_ring(field);
    if (!ring.is_field()) throw ParseError("matrix: field must be a prime field");
    return read_rows(is, rows, cols, ring.modulus(), "matrix");
}

void write_bundle(std::ostream& os, const LinearCode& code) {
    const auto& prov = code.provenance;
    os << code.n << ' ' << code.k << ' ' << ring_of(code.modulus()).to_string() << ' '
       << (prov.element ? prov.element->group().spec().to_string() : "-") << ' '
       << (prov.element ? compact(print_element(*prov.element)) : "-") << ' '
       << (prov.basis ? prov.basis->to_string() : "-") << '\n';
    write_rows(os, code.generator);
    os << '\n';
    write_rows(os, code.check);
}

CodeBundle read_bundle(std::istream& is) {
    std::string line;
    if (!next_content_line(is, line)) throw ParseError("bundle: missing header");
    std::istringstream hs(line);
    CodeBundle b;
    std::string field;
    if (!(hs >> b.n >> b.k >> field >> b.group >> b.element >> b.basis))
        throw ParseError("bundle: header must be `n k field group element basis`");
    if (b.k > b.n) throw ParseError("bundle: k exceeds n");
    b.field = parse_ring(field);
    if (!b.field.is_field()) throw ParseError("bundle: field must be a prime field");
    b.generator = read_rows(is, b.k, b.n, b.field.modulus(), "bundle generator");
    b.check = read_rows(is, b.n - b.k, b.n, b.field.modulus(), "bundle check");
    return b;
}

void write_alist(std::ostream& os, const FpMatrix& h) {
    if (h.modulus() != 2) throw PreconditionError("alist export requires a binary matrix");
    const std::size_t n = h.cols(), m = h.rows();
    std::vector<std::vector<std::size_t>> cols(n), rows(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h(i, j)) {
                rows[i].push_back(j + 1);
                cols[j].push_back(i + 1);
            }
    std::size_t max_col = 0, max_row = 0;
    for (const auto& c : cols) max_col = std::max(max_col, c.size());
    for (const auto& r : rows) max_row = std::max(max_row, r.size());

    auto list = [&os](const std::vector<std::size_t>& v, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i) {
            if (i) os << ' ';
            os << (i < v.size() ? v[i] : 0);
        }
        os << '\n';
    };
    os << n << ' ' << m << '\n' << max_col << ' ' << max_row << '\n';
    for (std::size_t j = 0; j < n; ++j) os << (j ? " " : "") << cols[j].size();
    os << '\n';
    for (std::size_t i = 0; i < m; ++i) os << (i ? " " : "") << rows[i].size();
    os << '\n';
    for (const auto& c : cols) list(c, max_col);
    for (const auto& r : rows) list(r, max_row);
}

FpMatrix read_alist(std::istream& is) {
    std::size_t n, m, max_col, max_row;
    if (!(is >> n >> m >> max_col >> max_row)) throw ParseError("alist: bad header");
    std::vector<std::size_t> col_w(n), row_w(m);
    for (auto& w : col_w)
        if (!(is >> w)) throw ParseError("alist: bad column weights");
    for (auto& w : row_w)
        if (!(is >> w)) throw ParseError("alist: bad row weights");
    FpMatrix h(m, n, 2);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < max_col; ++t) {
            std::size_t i;
            if (!(is >> i)) throw ParseError("alist: truncated column lists");
            if (i == 0) continue;
            if (i > m || t >= col_w[j]) throw ParseError("alist: bad column entry");
            h(i - 1, j) = 1;
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t count = 0;
        for (std::size_t t = 0; t < max_row; ++t) {
            std::size_t j;
            if (!(is >> j)) throw ParseError("alist: truncated row lists");
            if (j == 0) continue;
            if (j > n || !h(i, j - 1)) throw ParseError("alist: row lists disagree with column lists");
            ++count;
        }
        if (count != row_w[i]) throw ParseError("alist: row weight mismatch");
    }
    return h;
}

std::string json_summary(const LinearCode& code, const std::map<std::string, bool>& flags) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = code.distance ? nlohmann::ordered_json(*code.distance) : nlohmann::ordered_json(nullptr);
    j["field"] = ring_of(code.modulus()).to_string();
    j["rate"] = code.n ? static_cast<double>(code.k) / static_cast<double>(code.n) : 0.0;
    nlohmann::ordered_json f = nlohmann::ordered_json::object();
    for (const auto& [name, value] : flags) f[name] = value;
    j["flags"] = f;
    const auto& prov = code.provenance;
    nlohmann::ordered_json p;
    p["kind"] = to_string(prov.kind);
    p["side"] = prov.side == Side::right ? "right" : "left";
    p["group"] = prov.element ? nlohmann::ordered_json(prov.element->group().spec().to_string()) : nullptr;
    p["element"] = prov.element ? nlohmann::ordered_json(print_element(*prov.element)) : nullptr;
    p["basis"] = prov.basis ? nlohmann::ordered_json(prov.basis->indices()) : nullptr;
    p["note"] = prov.note;
    j["provenance"] = p;
    return j.dump(2);
}

}  // namespace grcodes
