#include "blockset/plane_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "blockset/verify.hpp"

namespace blockset {

namespace {

// Line-oriented tokenizer tracking 1-based line/column for diagnostics.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    // Next non-comment, non-empty line split into tokens.
    bool next_line(std::vector<std::string_view>& tokens, int& line_no) {
        while (pos_ < text_.size()) {
            size_t end = text_.find('\n', pos_);
            if (end == std::string_view::npos) end = text_.size();
            std::string_view line = text_.substr(pos_, end - pos_);
            ++line_;
            line_start_ = pos_;
            pos_ = end + 1;
            if (!line.empty() && line.back() == '\r')
                line = line.substr(0, line.size() - 1);
            size_t first = line.find_first_not_of(" \t");
            if (first == std::string_view::npos) continue;
            if (line[first] == '#') continue;
            tokens.clear();
            size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
                size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
                if (i > start) tokens.push_back(line.substr(start, i - start));
            }
            line_no = line_;
            return true;
        }
        return false;
    }

    int column_of(std::string_view token) const {
        return int(token.data() - text_.data() - line_start_) + 1;
    }

    int line() const { return line_; }

private:
    std::string_view text_;
    size_t pos_ = 0;
    size_t line_start_ = 0;
    int line_ = 0;
};

long parse_number(const Reader& r, std::string_view tok, int line_no) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a number, got '" + std::string(tok) + "'",
                         line_no, r.column_of(tok));
    return value;
}

void expect_keyword(const Reader& r, const std::vector<std::string_view>& toks,
                    int line_no, std::string_view keyword, size_t arity) {
    if (toks.empty() || toks[0] != keyword)
        throw ParseError("expected '" + std::string(keyword) + "'", line_no,
                         toks.empty() ? 1 : r.column_of(toks[0]));
    if (toks.size() != arity + 1)
        throw ParseError("'" + std::string(keyword) + "' takes " +
                             std::to_string(arity) + " argument(s)",
                         line_no, r.column_of(toks[0]));
}

} // namespace

std::string serialize_plane(const IncidenceStructure& s) {
    std::ostringstream out;
    out << "plane "
        << (s.kind == PlaneKind::projective ? "projective" : "affine") << "\n";
    out << "order " << s.order << "\n";
    out << "points " << s.num_points << "\n";
    out << "lines " << s.num_lines << "\n";
    for (const auto& pts : s.line_points) {
        out << "L";
        for (int p : pts) out << " " << p;
        out << "\n";
    }
    return out.str();
}

IncidenceStructure parse_plane(std::string_view text) {
    Reader r(text);
    std::vector<std::string_view> toks;
    int line_no = 0;

    auto need_line = [&](const char* what) {
        if (!r.next_line(toks, line_no))
            throw ParseError(std::string("unexpected end of file, expected ") +
                                 what,
                             r.line() + 1, 1);
    };

    IncidenceStructure s;
    need_line("'plane'");
    expect_keyword(r, toks, line_no, "plane", 1);
    if (toks[1] == "projective") s.kind = PlaneKind::projective;
    else if (toks[1] == "affine") s.kind = PlaneKind::affine;
    else
        throw ParseError("plane kind must be 'projective' or 'affine'",
                         line_no, r.column_of(toks[1]));

    need_line("'order'");
    expect_keyword(r, toks, line_no, "order", 1);
    s.order = int(parse_number(r, toks[1], line_no));

    need_line("'points'");
    expect_keyword(r, toks, line_no, "points", 1);
    s.num_points = int(parse_number(r, toks[1], line_no));

    need_line("'lines'");
    expect_keyword(r, toks, line_no, "lines", 1);
    s.num_lines = int(parse_number(r, toks[1], line_no));

    if (s.order < 2 || s.num_points <= 0 || s.num_lines <= 0 ||
        s.num_points > 2000000 || s.num_lines > 2000000)
        throw ParseError("header values out of range", line_no, 1);

    s.line_points.reserve(s.num_lines);
    for (int l = 0; l < s.num_lines; ++l) {
        need_line("a line record");
        if (toks[0] != "L")
            throw ParseError("expected 'L'", line_no, r.column_of(toks[0]));
        std::vector<int> pts;
        pts.reserve(toks.size() - 1);
        for (size_t i = 1; i < toks.size(); ++i) {
            long v = parse_number(r, toks[i], line_no);
            if (v < 0 || v >= s.num_points)
                throw ParseError("point index out of range", line_no,
                                 r.column_of(toks[i]));
            if (!pts.empty() && v <= pts.back())
                throw ParseError("point indices must be strictly increasing",
                                 line_no, r.column_of(toks[i]));
            pts.push_back(int(v));
        }
        s.line_points.push_back(std::move(pts));
    }
    if (r.next_line(toks, line_no))
        throw ParseError("trailing content after last line record", line_no, 1);

    s.provenance = "file";
    s.derive_point_lines();

    VerifyReport rep = verify_axioms(s);
    if (!rep.pass) throw AxiomError(std::move(rep));
    return s;
}

IncidenceStructure load_plane(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return parse_plane(buf.str());
}

void save_plane(const IncidenceStructure& s, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << serialize_plane(s);
    if (!out) throw IoError("write failure on " + path);
}

} // namespace blockset
