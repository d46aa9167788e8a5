#include "umf/gf2k.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>

namespace umf {

namespace {

int degree_of(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint64_t gf2_poly_mod(std::uint64_t a, std::uint64_t m) {
    const int dm = degree_of(m);
    for (int da = degree_of(a); da >= dm; da = degree_of(a)) a ^= m << (da - dm);
    return a;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int k) {
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i)
        if (b >> i & 1u) r ^= std::uint64_t{a} << i;
    return static_cast<std::uint32_t>(gf2_poly_mod(r, modulus));
}

}  // namespace

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::FieldMismatch: return "field_mismatch";
        case ErrorCode::DivisionByZero: return "division_by_zero";
        case ErrorCode::RingMismatch: return "ring_mismatch";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::DimensionMismatch: return "dimension_mismatch";
        case ErrorCode::Pole: return "pole";
        case ErrorCode::NotClosed: return "not_closed";
        case ErrorCode::BudgetExceeded: return "budget_exceeded";
        case ErrorCode::WindowOverflow: return "window_overflow";
        case ErrorCode::CriticalDirection: return "critical_direction";
        case ErrorCode::Overflow: return "overflow";
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::Invariant: return "invariant";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

bool is_irreducible_gf2(std::uint32_t poly) {
    const int d = degree_of(poly);
    if (d < 1) return false;
    for (std::uint64_t q = 2; degree_of(q) <= d / 2; ++q)
        if (gf2_poly_mod(poly, q) == 0) return false;
    return true;
}

FieldSpec FieldSpec::standard(int k) {
    switch (k) {
        case 1: return {1, 0b11};
        case 2: return {2, 0b111};
        case 3: return {3, 0b1011};
        case 4: return {4, 0b10011};
        default: break;
    }
    if (k < 1 || k > kMaxDegree)
        throw Error(ErrorCode::InvalidArgument,
                    "extension degree must be in 1.." + std::to_string(kMaxDegree));
    for (std::uint32_t m = (1u << k) | 1u; m < (2u << k); m += 2)
        if (is_irreducible_gf2(m)) return {k, m};
    throw Error(ErrorCode::Invariant, "no irreducible polynomial found");
}

FieldSpec FieldSpec::from_bits(int k, std::string_view bits) {
    if (k < 1 || k > kMaxDegree)
        throw Error(ErrorCode::InvalidArgument,
                    "extension degree must be in 1.." + std::to_string(kMaxDegree));
    if (static_cast<int>(bits.size()) != k + 1)
        throw Error(ErrorCode::InvalidArgument, "modulus needs k+1 bits");
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw Error(ErrorCode::InvalidArgument, "modulus bits must be 0 or 1");
        if (bits[i] == '1') m |= 1u << i;
    }
    if (!(m >> k & 1u)) throw Error(ErrorCode::InvalidArgument, "modulus leading bit must be 1");
    if (!is_irreducible_gf2(m))
        throw Error(ErrorCode::InvalidArgument, "modulus " + std::string(bits) + " is reducible");
    return {k, m};
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text.substr(0, 2) != "2^")
        throw Error(ErrorCode::InvalidArgument, "field must look like 2^k[:bits]");
    text.remove_prefix(2);
    const auto colon = text.find(':');
    const auto kpart = text.substr(0, colon);
    int k = 0;
    auto [ptr, ec] = std::from_chars(kpart.data(), kpart.data() + kpart.size(), k);
    if (ec != std::errc{} || ptr != kpart.data() + kpart.size())
        throw Error(ErrorCode::InvalidArgument, "bad extension degree '" + std::string(kpart) + "'");
    if (colon == std::string_view::npos) return standard(k);
    return from_bits(k, text.substr(colon + 1));
}

std::string FieldSpec::modulus_bits() const {
    std::string s;
    for (int i = 0; i <= k; ++i) s.push_back((modulus >> i & 1u) ? '1' : '0');
    return s;
}

std::string FieldSpec::to_string() const {
    return "2^" + std::to_string(k) + ":" + modulus_bits();
}

struct FieldRegistry {
    std::mutex mu;
    std::map<std::pair<int, std::uint32_t>, std::unique_ptr<Field>> fields;

    const Field& get(const FieldSpec& spec) {
        std::lock_guard lock(mu);
        auto& slot = fields[{spec.k, spec.modulus}];
        if (!slot) slot.reset(new Field(spec));
        return *slot;
    }
};

const Field& Field::get(const FieldSpec& spec) {
    static FieldRegistry registry;
    return registry.get(spec);
}

Field::Field(const FieldSpec& spec) : spec_(spec) {
    if (spec.k < 1 || spec.k > FieldSpec::kMaxDegree)
        throw Error(ErrorCode::InvalidArgument, "unsupported extension degree");
    if (degree_of(spec.modulus) != spec.k || !is_irreducible_gf2(spec.modulus))
        throw Error(ErrorCode::InvalidArgument, "modulus is not an irreducible of degree k");
    const std::uint32_t q = order();
    exp_.assign(2 * q, 0);
    log_.assign(q, 0);
    if (q == 2) {
        exp_[0] = exp_[1] = 1;
        return;
    }
    // The modulus need not be primitive, so search for a generator of the unit group.
    for (std::uint32_t g = 2; g < q; ++g) {
        std::uint32_t x = 1;
        std::uint32_t i = 0;
        std::vector<bool> seen(q, false);
        bool ok = true;
        for (; i < q - 1; ++i) {
            if (seen[x]) {
                ok = false;
                break;
            }
            seen[x] = true;
            exp_[i] = x;
            log_[x] = i;
            x = mul_mod(x, g, spec.modulus, spec.k);
        }
        if (ok && x == 1) break;
    }
    for (std::uint32_t i = q - 1; i < 2 * q; ++i) exp_[i] = exp_[i - (q - 1)];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
    const std::uint32_t n = order() - 1;
    return exp_[(n - log_[a]) % n];
}

std::uint32_t Field::pow(std::uint32_t a, long long e) const {
    if (a == 0) {
        if (e < 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
        return e == 0 ? 1 : 0;
    }
    const long long n = order() - 1;
    long long r = (static_cast<long long>(log_[a]) * (e % n)) % n;
    if (r < 0) r += n;
    return exp_[static_cast<std::size_t>(r)];
}

FieldElem Field::elem(std::uint32_t value) const { return FieldElem(*this, value); }
FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, 1); }

std::vector<FieldElem> Field::enumerate() const {
    std::vector<FieldElem> out;
    out.reserve(order());
    for (std::uint32_t v = 0; v < order(); ++v) out.emplace_back(*this, v);
    return out;
}

FieldElem::FieldElem(const Field& field, std::uint32_t value) : field_(&field), value_(value) {
    if (value >= field.order())
        throw Error(ErrorCode::InvalidArgument,
                    "element " + std::to_string(value) + " outside GF(2^" +
                        std::to_string(field.degree()) + ")");
}

FieldElem FieldElem::inverse() const { return FieldElem(*field_, field_->inv(value_)); }

FieldElem FieldElem::pow(long long e) const { return FieldElem(*field_, field_->pow(value_, e)); }

FieldElem FieldElem::lift(const Field& target) const {
    if (!target.contains(*field_)) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    return FieldElem(target, value_);
}

std::string FieldElem::to_string() const {
    if (field_->degree() == 1) return value_ ? "1" : "0";
    return "{" + std::to_string(value_) + "}";
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    return FieldElem(*a.field_, a.value_ ^ b.value_);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "field mismatch");
    return FieldElem(*a.field_, a.field_->mul(a.value_, b.value_));
}

}  // namespace umf
