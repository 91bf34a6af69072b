#include "cckit/ccf.hpp"

#include <algorithm>
#include <sstream>

#include "cckit/errors.hpp"

namespace cckit {

namespace {

// strict cursor over the document text; lines and columns are 1-based
class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    int line() const { return line_; }
    int col() const { return col_; }

    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void expect(char c, const char* what) {
        if (eof() || peek() != c) throw ParseError(line_, col_, std::string("expected ") + what);
        advance();
    }

    // LF, or end of input
    void expect_eol() {
        if (eof()) return;
        if (peek() == '\r') throw ParseError(line_, col_, "carriage return not allowed");
        if (peek() != '\n') throw ParseError(line_, col_, "expected end of line");
        advance();
    }

    long read_number() {
        if (eof() || peek() < '0' || peek() > '9')
            throw ParseError(line_, col_, "expected a decimal number");
        if (peek() == '0') {
            advance();
            if (!eof() && peek() >= '0' && peek() <= '9')
                throw ParseError(line_, col_, "leading zeros are not allowed");
            return 0;
        }
        long value = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > 1000000000L) throw ParseError(line_, col_, "number too large");
            advance();
        }
        return value;
    }

    void skip_comment_lines() {
        while (!eof() && peek() == '#') {
            while (!eof() && peek() != '\n') advance();
            if (!eof()) advance();
        }
    }

    void expect_literal(const char* lit) {
        for (const char* c = lit; *c; ++c) expect(*c, ("'" + std::string(1, *c) + "'").c_str());
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

} // namespace

CcfDocument parse_ccf_document(const std::string& text) {
    Scanner sc(text);
    sc.skip_comment_lines();
    sc.expect_literal("ccf");
    sc.expect(' ', "space");
    CcfDocument doc;
    long version = sc.read_number();
    if (version != 1) throw ParseError(sc.line(), sc.col(), "unsupported format version");
    doc.version = static_cast<int>(version);
    sc.expect_eol();

    long n = sc.read_number();
    sc.expect(' ', "space");
    long rank = sc.read_number();
    sc.expect_eol();
    if (n < 1 || n > 100000) throw ParseError(sc.line(), sc.col(), "degree out of range");
    if (rank < 1 || rank > n * n) throw ParseError(sc.line(), sc.col(), "rank out of range");
    doc.n = static_cast<int>(n);
    doc.rank = static_cast<int>(rank);

    doc.matrix.reserve(static_cast<std::size_t>(n) * n);
    for (long row = 0; row < n; ++row) {
        if (sc.eof())
            throw ParseError(sc.line(), sc.col(),
                             "unexpected end of input at matrix row " + std::to_string(row + 1));
        for (long colidx = 0; colidx < n; ++colidx) {
            if (colidx > 0) sc.expect(' ', "space");
            int l = sc.line(), c = sc.col();
            long v = sc.read_number();
            if (v >= rank)
                throw ParseError(l, c, "color index " + std::to_string(v) + " not below rank " +
                                           std::to_string(rank));
            doc.matrix.push_back(static_cast<int>(v));
        }
        sc.expect_eol();
    }
    if (!sc.eof()) throw ParseError(sc.line(), sc.col(), "trailing content after matrix");
    return doc;
}

CoherentConfiguration parse_ccf(const std::string& text) {
    CcfDocument doc = parse_ccf_document(text);
    CoherentConfiguration x = from_color_matrix(doc.n, std::move(doc.matrix));
    if (x.rank != doc.rank)
        throw ValidationError("rank-header", doc.rank, x.rank, -1,
                              "header declares rank " + std::to_string(doc.rank) + " but matrix has " +
                                  std::to_string(x.rank) + " colors");
    return x;
}

std::string write_ccf(const CoherentConfiguration& x) {
    std::ostringstream out;
    out << "ccf 1\n" << x.n << ' ' << x.rank << '\n';
    for (int a = 0; a < x.n; ++a) {
        for (int b = 0; b < x.n; ++b) {
            if (b) out << ' ';
            out << x.color(a, b);
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split_blocks(const std::string& text) {
    std::vector<std::string> blocks;
    std::string cur;
    std::istringstream in(text);
    std::string line;
    auto is_blank = [](const std::string& s) {
        return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    };
    while (std::getline(in, line)) {
        if (is_blank(line)) {
            if (!cur.empty()) blocks.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += line;
            cur += '\n';
        }
    }
    if (!cur.empty()) blocks.push_back(std::move(cur));
    return blocks;
}

CoherentConfiguration parse_matrix_list_block(const std::string& block) {
    std::istringstream in(block);
    long n;
    if (!(in >> n) || n < 1 || n > 100000) throw Error("block does not start with a valid degree");
    std::vector<int> matrix;
    matrix.reserve(static_cast<std::size_t>(n) * n);
    for (long i = 0; i < n * n; ++i) {
        long v;
        if (!(in >> v)) throw Error("matrix entry " + std::to_string(i + 1) + " missing");
        if (v < 0 || v >= n * n) throw Error("matrix entry out of range");
        matrix.push_back(static_cast<int>(v));
    }
    long extra;
    if (in >> extra) throw Error("trailing numbers after the matrix");
    return from_color_matrix(static_cast<int>(n), std::move(matrix));
}

} // namespace

IngestResult ingest_catalog(const std::string& text, CatalogFormat format, bool strict) {
    IngestResult result;
    auto blocks = split_blocks(text);
    if (blocks.empty()) throw Error("catalog is empty");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        try {
            if (format == CatalogFormat::ccf_multi)
                result.configs.push_back(parse_ccf(blocks[i]));
            else
                result.configs.push_back(parse_matrix_list_block(blocks[i]));
        } catch (const std::exception& e) {
            if (strict)
                throw Error("block " + std::to_string(i + 1) + ": " + e.what());
            result.issues.push_back({static_cast<int>(i + 1), e.what()});
        }
    }
    return result;
}

} // namespace cckit
