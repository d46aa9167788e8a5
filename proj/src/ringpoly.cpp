#include "umf/ringpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace umf {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent overflow");
    return r;
}

std::int32_t checked_sub(std::int32_t a, std::int32_t b) {
    std::int32_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "exponent overflow");
    return r;
}

bool term_greater(const Term& a, const Term& b) noexcept { return grevlex_compare(a.mono, b.mono) > 0; }

}  // namespace

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = checked_add(a.e[i], b.e[i]);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = checked_sub(a.e[i], b.e[i]);
    return r;
}

int grevlex_compare(const Monomial& a, const Monomial& b) noexcept {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

// ---------------------------------------------------------------- Ring

Ring::Ring(const Field& field, std::vector<std::string> vars, std::vector<bool> laurent)
    : field_(&field), vars_(std::move(vars)), laurent_(std::move(laurent)) {}

RingPtr Ring::make(const FieldSpec& field, std::vector<std::string> vars, std::vector<bool> laurent) {
    if (vars.size() != laurent.size())
        throw Error(ErrorCode::InvalidArgument, "one Laurent flag per variable required");
    if (vars.size() > static_cast<std::size_t>(kMaxVars))
        throw Error(ErrorCode::InvalidArgument,
                    "at most " + std::to_string(kMaxVars) + " variables supported");
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& v = vars[i];
        if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
        if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
            throw Error(ErrorCode::InvalidArgument, "bad variable name '" + v + "'");
        for (char c : v)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw Error(ErrorCode::InvalidArgument, "bad variable name '" + v + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (vars[j] == v) throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + v + "'");
    }
    return std::make_shared<const Ring>(Field::get(field), std::move(vars), std::move(laurent));
}

RingPtr Ring::laurent(const FieldSpec& field, std::vector<std::string> vars) {
    std::vector<bool> flags(vars.size(), true);
    return make(field, std::move(vars), std::move(flags));
}

RingPtr Ring::polynomial(const FieldSpec& field, std::vector<std::string> vars) {
    std::vector<bool> flags(vars.size(), false);
    return make(field, std::move(vars), std::move(flags));
}

bool Ring::any_laurent() const noexcept {
    return std::find(laurent_.begin(), laurent_.end(), true) != laurent_.end();
}

std::optional<int> Ring::index_of(std::string_view name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[static_cast<std::size_t>(i)] == name) return i;
    return std::nullopt;
}

RingPtr Ring::polynomial_part() const { return polynomial(field_spec(), vars_); }

RingPtr Ring::with_field(const FieldSpec& field) const { return make(field, vars_, laurent_); }

bool Ring::admits(const Monomial& m) const noexcept {
    for (int i = 0; i < kMaxVars; ++i) {
        if (i >= nvars()) {
            if (m.e[i] != 0) return false;
        } else if (!laurent_[static_cast<std::size_t>(i)] && m.e[i] < 0) {
            return false;
        }
    }
    return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw Error(ErrorCode::RingMismatch, "ring mismatch");
}

// ---------------------------------------------------------------- Poly

Poly Poly::one(const RingPtr& ring) { return constant(ring, 1); }

Poly Poly::constant(const RingPtr& ring, std::uint32_t c) { return term(ring, Monomial{}, c); }

Poly Poly::term(const RingPtr& ring, const Monomial& m, std::uint32_t c) {
    if (!ring->admits(m))
        throw Error(ErrorCode::InvalidArgument, "negative exponent on a non-Laurent variable");
    if (c >= ring->field().order()) throw Error(ErrorCode::InvalidArgument, "coefficient outside field");
    Poly p(ring);
    if (c) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::var(const RingPtr& ring, int i, std::int32_t exponent) {
    if (i < 0 || i >= ring->nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    Monomial m;
    m.e[i] = exponent;
    return term(ring, m);
}

Poly Poly::var(const RingPtr& ring, std::string_view name, std::int32_t exponent) {
    auto i = ring->index_of(name);
    if (!i) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + std::string(name) + "'");
    return var(ring, *i, exponent);
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    const Field& f = ring->field();
    std::sort(terms.begin(), terms.end(), term_greater);
    Poly p(ring);
    p.terms_.reserve(terms.size());
    for (const auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(t);
        }
    }
    for (const auto& t : p.terms_)
        if (!ring->admits(t.mono))
            throw Error(ErrorCode::InvalidArgument, "negative exponent on a non-Laurent variable");
    return p;
}

bool Poly::is_one() const noexcept {
    return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].mono.is_one();
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint32_t Poly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

Monomial Poly::min_exponents() const {
    Monomial r;
    if (terms_.empty()) return r;
    r = terms_[0].mono;
    for (const auto& t : terms_)
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::min(r.e[i], t.mono.e[i]);
    return r;
}

Monomial Poly::max_exponents() const {
    Monomial r;
    if (terms_.empty()) return r;
    r = terms_[0].mono;
    for (const auto& t : terms_)
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(r.e[i], t.mono.e[i]);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    const Field& f = ring_->field();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int c = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            const auto s = f.add(terms_[i].coeff, o.terms_[j].coeff);
            if (s) r.terms_.push_back({terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
    r.terms_.insert(r.terms_.end(), o.terms_.begin() + static_cast<std::ptrdiff_t>(j), o.terms_.end());
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_ring(ring_, o.ring_);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    const Field& f = ring_->field();
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, f.mul(a.coeff, b.coeff)});
    return from_terms(ring_, std::move(prod));
}

Poly Poly::scaled(std::uint32_t c) const {
    const Field& f = ring_->field();
    if (c >= f.order()) throw Error(ErrorCode::InvalidArgument, "coefficient outside field");
    Poly r(ring_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = f.mul(t.coeff, c);
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    Poly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) {
        t.mono = t.mono * m;
        if (!ring_->admits(t.mono))
            throw Error(ErrorCode::InvalidArgument, "negative exponent on a non-Laurent variable");
    }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = one(ring_);
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::partial(int i) const {
    if (i < 0 || i >= ring_->nvars()) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.mono.e[i] % 2 == 0) continue;
        Term d = t;
        d.mono.e[i] = checked_sub(d.mono.e[i], 1);
        out.push_back(d);
    }
    return from_terms(ring_, std::move(out));
}

const Field& point_field(const Ring& ring, std::span<const FieldElem> point) {
    if (static_cast<int>(point.size()) != ring.nvars())
        throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(point.size()) +
                                                      " coordinates, ring has " +
                                                      std::to_string(ring.nvars()) + " variables");
    const Field* f = point.empty() ? &ring.field() : &point[0].field();
    for (const auto& c : point)
        if (&c.field() != f) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    if (!f->contains(ring.field())) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    for (int i = 0; i < ring.nvars(); ++i)
        if (ring.is_laurent(i) && point[static_cast<std::size_t>(i)].is_zero())
            throw Error(ErrorCode::Pole, "pole: zero coordinate for Laurent variable " + ring.var(i));
    return *f;
}

FieldElem Poly::evaluate(std::span<const FieldElem> point) const {
    const Field& f = point_field(*ring_, point);
    std::uint32_t acc = 0;
    for (const auto& t : terms_) {
        std::uint32_t v = t.coeff;
        for (int i = 0; i < ring_->nvars() && v; ++i)
            if (t.mono.e[i]) v = f.mul(v, f.pow(point[static_cast<std::size_t>(i)].value(), t.mono.e[i]));
        acc = f.add(acc, v);
    }
    return f.elem(acc);
}

std::optional<Poly> Poly::exact_divide(const Poly& p, const Poly& d) {
    require_same_ring(p.ring_, d.ring_);
    if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero polynomial");
    if (p.is_zero()) return Poly(p.ring_);
    const RingPtr& ring = p.ring_;
    const Field& f = ring->field();

    // Move both operands so that every Laurent variable has minimum exponent 0.
    // The normalized divisor then has no monomial factor in those variables, so
    // an exact Laurent quotient of the normalized operands is a polynomial.
    auto normalizer = [&](const Poly& a) {
        Monomial m;
        const Monomial lo = a.min_exponents();
        for (int i = 0; i < ring->nvars(); ++i)
            if (ring->is_laurent(i)) m.e[i] = checked_sub(0, lo.e[i]);
        return m;
    };
    const Monomial sp = normalizer(p);
    const Monomial sd = normalizer(d);
    std::vector<Term> rem = p.terms_;
    for (auto& t : rem) t.mono = t.mono * sp;
    std::vector<Term> div = d.terms_;
    for (auto& t : div) t.mono = t.mono * sd;
    // A common shift preserves grevlex order, so both vectors stay sorted.
    const Term lead = div.front();
    const std::uint32_t lead_inv = f.inv(lead.coeff);

    std::vector<Term> quot;
    Poly r = Poly(ring);
    r.terms_ = std::move(rem);
    Poly dn(ring);
    dn.terms_ = std::move(div);
    while (!r.terms_.empty()) {
        const Term& lt = r.terms_.front();
        if (!lead.mono.divides(lt.mono)) return std::nullopt;
        Term qt{lt.mono / lead.mono, f.mul(lt.coeff, lead_inv)};
        quot.push_back(qt);
        Poly sub(ring);
        sub.terms_ = dn.terms_;
        for (auto& t : sub.terms_) {
            t.mono = t.mono * qt.mono;
            t.coeff = f.mul(t.coeff, qt.coeff);
        }
        r = r + sub;
    }
    Monomial back = sd / sp;
    for (auto& t : quot) t.mono = t.mono * back;
    for (const auto& t : quot)
        if (!ring->admits(t.mono)) return std::nullopt;
    Poly q = from_terms(ring, std::move(quot));
    if (!(q * d == p)) throw Error(ErrorCode::Invariant, "exact division failed to verify");
    return q;
}

// ---------------------------------------------------------------- text

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Poly parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        std::vector<Term> terms;
        terms.push_back(parse_term());
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail(std::string("expected '+' but found '") + c + "'");
            advance();
            terms.push_back(parse_term());
        }
        std::vector<Term> nonzero;
        for (auto& t : terms)
            if (t.coeff) nonzero.push_back(t);
        return Poly::from_terms(ring_, std::move(nonzero));
    }

private:
    Term parse_term() {
        const Field& f = ring_->field();
        Term t{Monomial{}, 1};
        parse_atom(t, f);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            advance();
            parse_atom(t, f);
        }
        return t;
    }

    void parse_atom(Term& t, const Field& f) {
        skip_ws();
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (c == '{') {
            const int line = line_, col = col_;
            advance();
            skip_ws();
            const auto n = parse_uint();
            skip_ws();
            expect('}');
            if (n >= f.order())
                throw ParseError("coefficient {" + std::to_string(n) + "} outside GF(2^" +
                                     std::to_string(f.degree()) + ")",
                                 line, col);
            t.coeff = f.mul(t.coeff, static_cast<std::uint32_t>(n));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            const auto n = parse_uint();
            t.coeff = f.mul(t.coeff, static_cast<std::uint32_t>(n & 1u));
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const int line = line_, col = col_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                name.push_back(peek());
                advance();
            }
            const auto idx = ring_->index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", line, col);
            std::int64_t e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                advance();
                skip_ws();
                const int eline = line_, ecol = col_;
                e = parse_int();
                if (e < 0 && !ring_->is_laurent(*idx))
                    throw ParseError("negative exponent on non-Laurent variable '" + name + "'",
                                     eline, ecol);
            }
            const std::int64_t total = t.mono.e[*idx] + e;
            if (total > std::numeric_limits<std::int32_t>::max() ||
                total < std::numeric_limits<std::int32_t>::min())
                throw ParseError("exponent overflow", line, col);
            t.mono.e[*idx] = static_cast<std::int32_t>(total);
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::uint64_t parse_uint() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::uint64_t v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > std::numeric_limits<std::uint32_t>::max()) fail("integer too large");
            advance();
        }
        return v;
    }

    std::int64_t parse_int() {
        bool neg = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            neg = peek() == '-';
            advance();
        }
        const auto v = static_cast<std::int64_t>(parse_uint());
        return neg ? -v : v;
    }

    void expect(char c) {
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool at_end() const { return pos_ >= text_.size(); }
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
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

Poly Poly::parse(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    const bool show_braces = ring_->field().degree() > 1;
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string factors;
        for (int i = 0; i < ring_->nvars(); ++i) {
            const auto e = t.mono.e[i];
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += ring_->var(i);
            if (e != 1) factors += "^" + std::to_string(e);
        }
        if (t.coeff != 1 && show_braces) {
            os << '{' << t.coeff << '}';
            if (!factors.empty()) os << '*' << factors;
        } else {
            os << (factors.empty() ? std::string("1") : factors);
        }
    }
    return os.str();
}

}  // namespace umf
