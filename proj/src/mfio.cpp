#include "umf/mfio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "umf/error.hpp"

namespace umf {

namespace {

struct Line {
    int number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int column_of(const Line& line, std::string_view part) {
    return static_cast<int>(part.data() - line.text.data()) + 1;
}

// Value after `key:`; throws with the line's location otherwise.
std::string_view header(const Line& line, std::string_view key) {
    const auto t = trim(line.text);
    if (t.substr(0, key.size()) != key || t.size() <= key.size() || t[key.size()] != ':')
        throw ParseError("expected '" + std::string(key) + ":'", line.number, column_of(line, t));
    return trim(t.substr(key.size() + 1));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const auto end = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos)));
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

std::size_t parse_count(const Line& line, std::string_view s) {
    std::size_t n = 0;
    if (s.empty() || s.size() > 6) throw ParseError("expected a positive size", line.number, column_of(line, s));
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a positive size", line.number, column_of(line, s));
        n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    if (n == 0) throw ParseError("expected a positive size", line.number, column_of(line, s));
    return n;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

}  // namespace

MfDocument parse_mf(std::string_view text) {
    std::vector<Line> lines;
    {
        int n = 1;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            auto l = text.substr(pos, end - pos);
            if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
            const auto t = trim(l);
            if (!t.empty() && t.front() != '#') lines.push_back({n, l});
            ++n;
            pos = end + 1;
        }
    }
    auto need = [&](std::size_t i, const char* what) -> const Line& {
        if (i >= lines.size())
            throw ParseError(std::string("unexpected end of file, expected ") + what,
                             lines.empty() ? 1 : lines.back().number + 1, 1);
        return lines[i];
    };

    // field: 2^k modulus <bits>
    const Line& fl = need(0, "'field:'");
    const auto fv = header(fl, "field");
    FieldSpec spec;
    {
        const auto parts = split(fv, ' ');
        std::vector<std::string_view> words;
        for (auto p : parts)
            if (!p.empty()) words.push_back(p);
        if ((words.size() != 1 && words.size() != 3) || (words.size() == 3 && words[1] != "modulus"))
            throw ParseError("expected '2^k modulus <bits>'", fl.number, column_of(fl, fv));
        try {
            spec = FieldSpec::parse(words.size() == 1 ? std::string(words[0])
                                                       : std::string(words[0]) + ":" + std::string(words[2]));
        } catch (const Error& e) {
            throw ParseError(e.what(), fl.number, column_of(fl, fv));
        }
    }

    // ring: x,y laurent:1,1
    const Line& rl = need(1, "'ring:'");
    const auto rv = header(rl, "ring");
    const auto lpos = rv.find("laurent:");
    if (lpos == std::string_view::npos) throw ParseError("expected 'laurent:<flags>'", rl.number, column_of(rl, rv));
    std::vector<std::string> vars;
    for (auto v : split(trim(rv.substr(0, lpos)), ',')) {
        if (!is_identifier(v)) throw ParseError("bad variable name", rl.number, column_of(rl, v));
        vars.emplace_back(v);
    }
    std::vector<bool> flags;
    for (auto f : split(rv.substr(lpos + 8), ',')) {
        if (f != "0" && f != "1") throw ParseError("laurent flags must be 0 or 1", rl.number, column_of(rl, f));
        flags.push_back(f == "1");
    }
    if (flags.size() != vars.size())
        throw ParseError("one laurent flag per variable required", rl.number, column_of(rl, rv));
    if (vars.size() > static_cast<std::size_t>(kMaxVars))
        throw ParseError("too many variables", rl.number, column_of(rl, rv));
    RingPtr ring;
    try {
        ring = Ring::make(spec, vars, flags);
    } catch (const Error& e) {
        throw ParseError(e.what(), rl.number, column_of(rl, rv));
    }

    // potential: <poly>
    const Line& pl = need(2, "'potential:'");
    const auto pv = header(pl, "potential");
    Poly w(ring);
    try {
        w = Poly::parse(pv, ring);
    } catch (const ParseError& e) {
        throw ParseError(e.detail(), pl.number, column_of(pl, pv) + e.column() - 1);
    }

    // size: n  |  size: r x c
    const Line& sl = need(3, "'size:'");
    const auto sv = header(sl, "size");
    std::size_t rows = 0, cols = 0;
    if (const auto x = sv.find('x'); x != std::string_view::npos) {
        rows = parse_count(sl, trim(sv.substr(0, x)));
        cols = parse_count(sl, trim(sv.substr(x + 1)));
    } else {
        rows = cols = parse_count(sl, sv);
    }

    if (lines.size() < 4 + rows) need(lines.size(), "more matrix rows");
    std::vector<std::vector<Poly>> entries;
    for (std::size_t i = 0; i < rows; ++i) {
        const Line& ml = lines[4 + i];
        auto row = trim(ml.text);
        if (!row.empty() && row.back() == ';') row.remove_suffix(1);
        std::vector<Poly> out;
        for (auto e : split(row, ',')) {
            try {
                out.push_back(Poly::parse(e, ring));
            } catch (const ParseError& err) {
                throw ParseError(err.detail(), ml.number, column_of(ml, e) + err.column() - 1);
            }
        }
        if (out.size() != cols)
            throw ParseError("expected " + std::to_string(cols) + " entries, found " + std::to_string(out.size()),
                             ml.number, column_of(ml, row));
        entries.push_back(std::move(out));
    }
    if (lines.size() > 4 + rows) {
        const Line& extra = lines[4 + rows];
        throw ParseError("unexpected content after matrix", extra.number, column_of(extra, trim(extra.text)));
    }
    return MfDocument{spec, ring, std::move(w), RingMatrix::from_rows(ring, entries)};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MfDocument load_mf(const std::string& path) { return parse_mf(read_file(path)); }

std::string format_mf(const MfDocument& doc) {
    std::ostringstream os;
    os << "field: 2^" << doc.field.k << " modulus " << doc.field.modulus_bits() << '\n';
    os << "ring: ";
    for (int i = 0; i < doc.ring->nvars(); ++i) os << (i ? "," : "") << doc.ring->var(i);
    os << " laurent:";
    for (int i = 0; i < doc.ring->nvars(); ++i) os << (i ? "," : "") << (doc.ring->is_laurent(i) ? 1 : 0);
    os << "\npotential: " << doc.potential.to_string() << '\n';
    if (doc.matrix.is_square())
        os << "size: " << doc.matrix.rows() << '\n';
    else
        os << "size: " << doc.matrix.rows() << " x " << doc.matrix.cols() << '\n';
    os << doc.matrix.to_string();
    return os.str();
}

std::string format_mf(const UngradedMF& mf) {
    return format_mf(MfDocument{mf.ring()->field_spec(), mf.ring(), mf.potential(), mf.matrix()});
}

}  // namespace umf
