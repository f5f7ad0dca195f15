#include "rts/finite_field.hpp"

#include <charconv>

#include "rts/error.hpp"

namespace rts::field {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian over Z_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on integers; a != 0 mod p.
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t s = s0 % static_cast<std::int64_t>(p);
  if (s < 0) s += p;
  return static_cast<std::uint32_t>(s);
}

// Remainder of a by b (b nonzero after trim), coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = (a.back() * lead_inv) % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = (factor * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Quotient and remainder.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = (a.back() * lead_inv) % p;
    q[shift] = static_cast<std::uint32_t>(factor);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = (factor * b[i]) % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly out(acc.begin(), acc.end());
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  trim(out);
  return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      Poly g(d + 1, 0);
      std::uint64_t m = n;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(m % p);
        m /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint32_t size = 0;
  Poly modulus;
  // Full operation tables for small fields.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;

  Poly decode(std::uint32_t rank) const {
    Poly c(k, 0);
    for (unsigned i = 0; i < k; ++i) {
      c[i] = rank % p;
      rank /= p;
    }
    return c;
  }

  std::uint32_t encode(const Poly& c) const {
    std::uint32_t rank = 0;
    for (std::size_t i = c.size(); i-- > 0;) rank = rank * p + c[i];
    return rank;
  }

  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return (a + b) % p;
    std::uint32_t rank = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      rank += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return rank;
  }

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    Poly prod = poly_mul(decode(a), decode(b), p);
    prod = poly_mod(std::move(prod), modulus, p);
    return encode(prod);
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (k == 1) return (p - a) % p;
    std::uint32_t rank = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      rank += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return rank;
  }
};

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) noexcept {
  while (!is_prime(n)) ++n;
  return n;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) noexcept {
  if (n < 2) return {0, 0};
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {0, 0};
  return {p, k};
}

FieldSpec FieldSpec::create(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxDegree)
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(k) + " outside [1, " +
                                                 std::to_string(kMaxDegree) + "]");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= p;
    if (size > kMaxSize)
      throw Error(ErrorCode::SizeOutOfRange, std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");
  }

  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->k = k;
  data->size = static_cast<std::uint32_t>(size);

  // Lexicographically smallest monic irreducible: scan the low-order
  // coefficients as a base-p counter.
  for (std::uint64_t n = 0; n < size; ++n) {
    Poly f(k + 1, 0);
    std::uint64_t m = n;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(m % p);
      m /= p;
    }
    f[k] = 1;
    if (k == 1 || is_irreducible(f, p)) {
      data->modulus = std::move(f);
      break;
    }
  }

  if (size <= 256) {
    const std::uint32_t q = data->size;
    data->add_table.resize(std::size_t{q} * q);
    data->mul_table.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        data->add_table[a * q + b] = static_cast<std::uint16_t>(data->add_slow(a, b));
        data->mul_table[a * q + b] = static_cast<std::uint16_t>(data->mul_slow(a, b));
      }
  }
  return FieldSpec(std::move(data));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  const auto caret = text.find('^');
  const std::string_view head = text.substr(0, caret);
  std::uint32_t p = 0;
  unsigned k = 1;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), p);
  if (ec != std::errc() || ptr != head.data() + head.size() || head.empty())
    throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(text) + "'");
  if (caret != std::string_view::npos) {
    const std::string_view tail = text.substr(caret + 1);
    auto [ptr2, ec2] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
    if (ec2 != std::errc() || ptr2 != tail.data() + tail.size() || tail.empty())
      throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(text) + "'");
  }
  return create(p, k);
}

std::uint32_t FieldSpec::characteristic() const noexcept { return data_->p; }
unsigned FieldSpec::degree() const noexcept { return data_->k; }
std::uint32_t FieldSpec::size() const noexcept { return data_->size; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return data_->modulus; }

std::string FieldSpec::to_string() const {
  return std::to_string(data_->p) + "^" + std::to_string(data_->k);
}

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

FieldElement FieldSpec::element(Rank rank) const {
  if (rank >= data_->size)
    throw Error(ErrorCode::InvalidArgument,
                "element rank " + std::to_string(rank) + " out of range for " + to_string());
  return FieldElement(*this, rank);
}

FieldElement FieldSpec::from_coefficients(const std::vector<std::uint32_t>& coefficients) const {
  return FieldElement(*this, rank_of(coefficients));
}

std::vector<FieldElement> FieldSpec::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(data_->size);
  for (Rank r = 0; r < data_->size; ++r) out.emplace_back(*this, r);
  return out;
}

FieldSpec::Rank FieldSpec::add(Rank a, Rank b) const noexcept {
  if (!data_->add_table.empty()) return data_->add_table[a * data_->size + b];
  return data_->add_slow(a, b);
}

FieldSpec::Rank FieldSpec::neg(Rank a) const noexcept { return data_->neg(a); }

FieldSpec::Rank FieldSpec::sub(Rank a, Rank b) const noexcept { return add(a, neg(b)); }

FieldSpec::Rank FieldSpec::mul(Rank a, Rank b) const noexcept {
  if (!data_->mul_table.empty()) return data_->mul_table[a * data_->size + b];
  return data_->mul_slow(a, b);
}

FieldSpec::Rank FieldSpec::inv(Rank a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + to_string());
  const std::uint32_t p = data_->p;
  if (data_->k == 1) return inv_mod_prime(a, p);
  // Extended Euclid: track s with s*a == r (mod modulus).
  Poly r0 = data_->modulus, r1 = data_->decode(a);
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [q, rem] = poly_divmod(r0, r1, p);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale = inv_mod_prime(r0[0], p);
  Poly s = s0;
  for (auto& c : s) c = static_cast<std::uint32_t>((c * scale) % p);
  s = poly_mod(std::move(s), data_->modulus, p);
  s.resize(data_->k, 0);
  return data_->encode(s);
}

FieldSpec::Rank FieldSpec::pow(Rank a, std::uint64_t e) const noexcept {
  Rank result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FieldSpec::coefficients(Rank a) const { return data_->decode(a); }

FieldSpec::Rank FieldSpec::rank_of(const std::vector<std::uint32_t>& coefficients) const {
  if (coefficients.size() != data_->k)
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(data_->k) + " coefficients");
  for (auto c : coefficients)
    if (c >= data_->p) throw Error(ErrorCode::InvalidArgument, "coefficient out of range");
  return data_->encode(coefficients);
}

bool FieldSpec::operator==(const FieldSpec& other) const noexcept {
  return data_ == other.data_ || (data_->p == other.data_->p && data_->k == other.data_->k);
}

void FieldElement::require_same(const FieldElement& rhs) const {
  if (!(spec_ == rhs.spec_))
    throw Error(ErrorCode::SpecMismatch, spec_.to_string() + " vs " + rhs.spec_.to_string());
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same(rhs);
  return FieldElement(spec_, spec_.add(rank_, rhs.rank_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same(rhs);
  return FieldElement(spec_, spec_.sub(rank_, rhs.rank_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same(rhs);
  return FieldElement(spec_, spec_.mul(rank_, rhs.rank_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same(rhs);
  return FieldElement(spec_, spec_.mul(rank_, spec_.inv(rhs.rank_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(spec_, spec_.neg(rank_)); }

FieldElement FieldElement::inv() const { return FieldElement(spec_, spec_.inv(rank_)); }

FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(spec_, spec_.pow(rank_, e)); }

bool FieldElement::operator==(const FieldElement& rhs) const {
  require_same(rhs);
  return rank_ == rhs.rank_;
}

}  // namespace rts::field
