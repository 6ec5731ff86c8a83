#include "mdpcc/matrix_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "mdpcc/errors.hpp"

namespace mdpcc {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long parse_int(const std::string& tok, int line, const char* what) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected an integer for ") + what + ", got '" + tok + "'");
    }
}

// reads tokens of the next meaningful line; returns nullopt at end of stream
std::optional<std::vector<std::string>> next_line(std::istream& in, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<std::string> toks = tokenize(line);
        if (!toks.empty()) return toks;
    }
    return std::nullopt;
}

FieldElement parse_element(const Field& f, const std::string& tok, int line) {
    if (f.m() == 1) {
        long v = parse_int(tok, line, "a coefficient");
        if (v < 0 || v >= static_cast<long>(f.p()))
            throw ParseError(line, "coefficient " + tok + " outside [0, " + std::to_string(f.p()) + ")");
        return f.element(static_cast<std::uint64_t>(v));
    }
    if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
        throw ParseError(line, "expected a (c0,...,c" + std::to_string(f.m() - 1) + ") tuple, got '" + tok + "'");
    std::vector<std::uint32_t> rep;
    std::string body = tok.substr(1, tok.size() - 2);
    std::istringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
        long v = parse_int(part, line, "a tuple coefficient");
        if (v < 0 || v >= static_cast<long>(f.p()))
            throw ParseError(line, "tuple coefficient " + part + " outside [0, " + std::to_string(f.p()) + ")");
        rep.push_back(static_cast<std::uint32_t>(v));
    }
    if (rep.size() != f.m())
        throw ParseError(line, "tuple must have exactly " + std::to_string(f.m()) + " coefficients");
    return f.from_coeffs(rep);
}

Field parse_field_line(const std::vector<std::string>& toks, int line) {
    if (toks.size() < 2 || toks[0] != "field")
        throw ParseError(line, "expected a `field ...` header line");
    const std::string& spec = toks[1];
    size_t caret = spec.find('^');
    try {
        if (caret == std::string::npos) {
            if (toks.size() != 2) throw ParseError(line, "prime field header takes no modulus");
            long p = parse_int(spec, line, "the field characteristic");
            return Field::prime(static_cast<std::uint32_t>(p));
        }
        long p = parse_int(spec.substr(0, caret), line, "the field characteristic");
        long m = parse_int(spec.substr(caret + 1), line, "the extension degree");
        if (m < 1) throw ParseError(line, "extension degree must be >= 1");
        if (static_cast<long>(toks.size()) != 2 + m + 1)
            throw ParseError(line, "extension field header needs " + std::to_string(m + 1) +
                                       " modulus coefficients");
        std::vector<std::uint32_t> modulus;
        for (size_t i = 2; i < toks.size(); ++i) {
            long c = parse_int(toks[i], line, "a modulus coefficient");
            if (c < 0) throw ParseError(line, "modulus coefficients must be nonnegative");
            modulus.push_back(static_cast<std::uint32_t>(c));
        }
        return Field::with_modulus(static_cast<std::uint32_t>(p), std::move(modulus));
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(line, std::string("invalid field header: ") + e.what());
    }
}

}  // namespace

PolyMatrix read_matrix(std::istream& in) {
    int line_no = 0;
    auto field_toks = next_line(in, line_no);
    if (!field_toks) throw ParseError(line_no, "missing `field ...` header");
    Field f = parse_field_line(*field_toks, line_no);

    auto shape_toks = next_line(in, line_no);
    if (!shape_toks || shape_toks->size() != 3 || (*shape_toks)[0] != "matrix")
        throw ParseError(line_no, "expected `matrix <rows> <cols>`");
    long rows = parse_int((*shape_toks)[1], line_no, "the row count");
    long cols = parse_int((*shape_toks)[2], line_no, "the column count");
    if (rows < 1 || cols < 1) throw ParseError(line_no, "matrix dimensions must be positive");

    PolyMatrix m(f, static_cast<int>(rows), static_cast<int>(cols));
    for (long i = 0; i < rows * cols; ++i) {
        auto toks = next_line(in, line_no);
        if (!toks)
            throw ParseError(line_no, "missing entry " + std::to_string(i + 1) + " of " +
                                          std::to_string(rows * cols));
        std::vector<FieldElement> coeffs;
        if (toks->size() == 1 && (*toks)[0] == "0") {
            // zero polynomial in either field flavor
        } else {
            for (const std::string& tok : *toks) coeffs.push_back(parse_element(f, tok, line_no));
        }
        m.set(static_cast<int>(i / cols), static_cast<int>(i % cols), Poly(f, std::move(coeffs)));
    }
    if (auto extra = next_line(in, line_no))
        throw ParseError(line_no, "unexpected content after the last matrix entry");
    return m;
}

PolyMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file '" + path + "'");
    return read_matrix(in);
}

std::string field_header(const Field& f) {
    if (f.m() == 1) return "field " + std::to_string(f.p());
    std::string out = "field " + std::to_string(f.p()) + "^" + std::to_string(f.m());
    for (std::uint32_t c : f.modulus()) out += " " + std::to_string(c);
    return out;
}

std::string entry_tokens(const Poly& p) {
    if (p.is_zero()) return "0";
    const Field& f = p.field();
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += " ";
        out += f.to_string(p.coeff(i));
    }
    return out;
}

void write_matrix(std::ostream& out, const PolyMatrix& m) {
    out << field_header(m.field()) << "\n";
    out << "matrix " << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out << entry_tokens(m.at(i, j)) << "\n";
}

std::string matrix_to_string(const PolyMatrix& m) {
    std::ostringstream ss;
    write_matrix(ss, m);
    return ss.str();
}

}  // namespace mdpcc
