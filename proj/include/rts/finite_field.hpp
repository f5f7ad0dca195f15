#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rts::field {

class FieldElement;

namespace detail {
struct FieldData;
}

/// Handle to an immutable description of GF(p^k).
///
/// Elements are identified by their rank: the coefficient vector
/// (c_0, ..., c_{k-1}) of the polynomial-basis representation read as the
/// base-p number sum c_i p^i. Rank order is the enumeration order, zero first.
/// The reduction modulus is the lexicographically smallest monic irreducible
/// polynomial of degree k, so encodings agree across runs.
class FieldSpec {
 public:
  using Rank = std::uint32_t;

  static constexpr unsigned kMaxDegree = 6;
  static constexpr std::uint32_t kMaxSize = 1u << 20;

  /// Throws NotPrime, DegreeOutOfRange or SizeOutOfRange.
  static FieldSpec create(std::uint32_t p, unsigned k);

  /// Parses the "p^k" text form (a bare "p" means k = 1).
  static FieldSpec parse(std::string_view text);

  std::uint32_t characteristic() const noexcept;
  unsigned degree() const noexcept;
  std::uint32_t size() const noexcept;
  /// Little-endian coefficients of the monic modulus (length k + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept;
  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Throws InvalidArgument if rank >= size().
  FieldElement element(Rank rank) const;
  FieldElement from_coefficients(const std::vector<std::uint32_t>& coefficients) const;
  std::vector<FieldElement> enumerate() const;

  // Rank-level arithmetic for hot loops. Ranks must be < size().
  Rank add(Rank a, Rank b) const noexcept;
  Rank sub(Rank a, Rank b) const noexcept;
  Rank neg(Rank a) const noexcept;
  Rank mul(Rank a, Rank b) const noexcept;
  /// Throws DivisionByZero for a == 0.
  Rank inv(Rank a) const;
  Rank pow(Rank a, std::uint64_t e) const noexcept;

  std::vector<std::uint32_t> coefficients(Rank a) const;
  Rank rank_of(const std::vector<std::uint32_t>& coefficients) const;

  bool operator==(const FieldSpec& other) const noexcept;

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

/// field_new from the module contract.
inline FieldSpec field_new(std::uint32_t p, unsigned k) { return FieldSpec::create(p, k); }

/// Value-semantics element bound to its field. Mixing fields throws SpecMismatch.
class FieldElement {
 public:
  using Rank = FieldSpec::Rank;

  FieldElement(FieldSpec spec, Rank rank) : spec_(std::move(spec)), rank_(rank) {}

  const FieldSpec& spec() const noexcept { return spec_; }
  Rank rank() const noexcept { return rank_; }
  std::vector<std::uint32_t> coefficients() const { return spec_.coefficients(rank_); }
  bool is_zero() const noexcept { return rank_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  /// Throws SpecMismatch when the fields differ.
  bool operator==(const FieldElement& rhs) const;

 private:
  void require_same(const FieldElement& rhs) const;

  FieldSpec spec_;
  Rank rank_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n) noexcept;
/// If n = p^k with p prime, k >= 1, returns {p, k}; otherwise {0, 0}.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) noexcept;

}  // namespace rts::field
