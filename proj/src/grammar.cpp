#include "zsdiv/grammar.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "zsdiv/util.hpp"

namespace zsdiv {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    const std::string t = strip(s);
    std::int64_t value = 0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || t.empty()) {
        throw validation_error("cannot parse " + what + ": '" + s + "'");
    }
    return value;
}

// Split on a separator at parenthesis depth zero.
std::vector<std::string> split_top_level(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

FiniteAbelianGroup parse_group_spec(const std::string& text) {
    const std::string t = strip(text);
    if (t.empty()) throw validation_error("empty group spec");
    std::vector<std::int64_t> moduli;
    for (const std::string& part : split_top_level(t, 'x')) {
        std::string piece = strip(part);
        if (piece.empty() || (piece[0] != 'Z' && piece[0] != 'z')) {
            throw validation_error("group spec part '" + piece + "' must look like Z<n>");
        }
        moduli.push_back(parse_int(piece.substr(1), "group modulus"));
    }
    return FiniteAbelianGroup(moduli);
}

std::string format_group(const FiniteAbelianGroup& g) {
    std::ostringstream os;
    for (std::size_t j = 0; j < g.moduli().size(); ++j) {
        if (j) os << 'x';
        os << 'Z' << g.moduli()[j];
    }
    return os.str();
}

GroupElement parse_group_element(const FiniteAbelianGroup& g, const std::string& text) {
    std::string t = strip(text);
    if (!t.empty() && t.front() == '(') {
        if (t.back() != ')') throw validation_error("unbalanced parentheses in element '" + text + "'");
        t = t.substr(1, t.size() - 2);
    }
    std::vector<std::int64_t> coords;
    for (const std::string& part : split_top_level(t, ',')) {
        coords.push_back(parse_int(part, "element coordinate"));
    }
    return g.element(std::move(coords));
}

std::string format_group_element(const GroupElement& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < x.coords.size(); ++j) {
        if (j) os << ',';
        os << x.coords[j];
    }
    os << ')';
    return os.str();
}

ZSequence parse_sequence(const FiniteAbelianGroup& g, const std::string& text) {
    const std::string t = strip(text);
    std::vector<Term> terms;
    if (t.empty()) return ZSequence(g, terms);
    for (const std::string& part : split_top_level(t, ',')) {
        const std::string piece = strip(part);
        const auto caret = piece.rfind('^');
        std::string element_text = piece;
        std::int64_t mult = 1;
        if (caret != std::string::npos && piece.find(')', caret) == std::string::npos) {
            element_text = piece.substr(0, caret);
            mult = parse_int(piece.substr(caret + 1), "term multiplicity");
        }
        terms.push_back({parse_group_element(g, element_text), mult});
    }
    return ZSequence(g, std::move(terms));
}

std::string format_sequence(const ZSequence& seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.terms().size(); ++i) {
        if (i) os << ',';
        os << format_group_element(seq.terms()[i].element) << '^' << seq.terms()[i].multiplicity;
    }
    return os.str();
}

std::string format_selector(const Selector& sel) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < sel.size(); ++i) {
        if (i) os << ',';
        os << sel[i];
    }
    os << ')';
    return os.str();
}

namespace {

struct ElementParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= s.size();
    }
    std::int64_t integer() {
        skip_space();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) {
            throw validation_error("expected integer in element '" + s + "'");
        }
        return parse_int(s.substr(start, pos - start), "element coefficient");
    }
    bool eat(char c) {
        skip_space();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const std::string& w) {
        skip_space();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
};

} // namespace

QElement parse_qelement(const QuadField& field, const std::string& text) {
    // Grammar: [int] [(+|-) [int '*'] unit] where unit is 'w', 'sqrt' or
    // 'sqrt(<d>)'.  A bare leading unit term is also accepted.
    ElementParser p{strip(text)};
    if (p.done()) throw validation_error("empty element literal");

    std::int64_t rational = 0;
    std::int64_t coeff = 0;
    bool is_sqrt = false;

    auto parse_unit = [&](std::int64_t sign) {
        std::int64_t c = sign;
        p.skip_space();
        if (p.pos < p.s.size() && (std::isdigit(static_cast<unsigned char>(p.s[p.pos])))) {
            c = sign * p.integer();
            if (!p.eat('*')) throw validation_error("expected '*' before w/sqrt in '" + p.s + "'");
        }
        if (p.eat_word("sqrt")) {
            is_sqrt = true;
            if (p.eat('(')) {
                const std::int64_t d = p.integer();
                if (d != field.d()) {
                    throw validation_error("sqrt(" + std::to_string(d) + ") does not match field d=" +
                                           std::to_string(field.d()));
                }
                if (!p.eat(')')) throw validation_error("missing ')' in '" + p.s + "'");
            }
        } else if (p.eat_word("w")) {
            is_sqrt = false;
        } else {
            throw validation_error("expected 'w' or 'sqrt' in element '" + p.s + "'");
        }
        coeff = c;
    };

    p.skip_space();
    // leading unit term without rational part, e.g. "sqrt(10)" or "2*w"
    std::size_t save = p.pos;
    bool leading_unit = false;
    {
        std::int64_t sign = 1;
        if (p.eat('-')) sign = -1;
        else if (p.eat('+')) sign = 1;
        p.skip_space();
        std::size_t probe = p.pos;
        while (probe < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[probe]))) ++probe;
        std::size_t after = probe;
        while (after < p.s.size() && std::isspace(static_cast<unsigned char>(p.s[after]))) ++after;
        const bool unit_next =
            p.s.compare(p.pos, 4, "sqrt") == 0 || p.s.compare(p.pos, 1, "w") == 0 ||
            (probe > p.pos && after < p.s.size() && p.s[after] == '*');
        if (unit_next) {
            parse_unit(sign);
            leading_unit = true;
        } else {
            p.pos = save;
        }
    }
    if (!leading_unit) {
        rational = p.integer();
        if (!p.done()) {
            std::int64_t sign;
            if (p.eat('+')) sign = 1;
            else if (p.eat('-')) sign = -1;
            else throw validation_error("expected '+' or '-' in element '" + p.s + "'");
            parse_unit(sign);
        }
    }
    if (!p.done()) throw validation_error("trailing characters in element '" + p.s + "'");

    if (!is_sqrt || !field.omega_is_half()) {
        // w == sqrt(d) when d != 1 mod 4, so both spellings coincide
        return QElement{field, rational, coeff};
    }
    // a + b*sqrt(d) = (a - b) + 2b*w when w = (1 + sqrt d)/2
    return QElement{field, narrow_i64(int128(rational) - coeff, "element"),
                    narrow_i64(int128(2) * coeff, "element")};
}

std::string format_qelement(const QElement& x) {
    std::ostringstream os;
    os << x.a;
    if (x.b >= 0) os << '+';
    os << x.b << "*w";
    return os.str();
}

std::string format_qelement_sqrt(const QElement& x) {
    std::ostringstream os;
    if (!x.field.omega_is_half()) {
        os << x.a;
        if (x.b >= 0) os << '+';
        os << x.b << "*sqrt(" << x.field.d() << ")";
        return os.str();
    }
    // a + b*w = (2a + b + b*sqrt(d)) / 2
    const std::int64_t u = 2 * x.a + x.b;
    const std::int64_t v = x.b;
    if (u % 2 == 0 && v % 2 == 0) {
        os << u / 2;
        if (v / 2 >= 0) os << '+';
        os << v / 2 << "*sqrt(" << x.field.d() << ")";
    } else {
        os << '(' << u;
        if (v >= 0) os << '+';
        os << v << "*sqrt(" << x.field.d() << "))/2";
    }
    return os.str();
}

std::string format_ideal(const QIdeal& ideal) {
    std::ostringstream os;
    os << '[' << ideal.a() << ',' << ideal.b() << ',' << ideal.c() << ']';
    return os.str();
}

} // namespace zsdiv
