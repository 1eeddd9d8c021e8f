#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>

namespace yhlink::laurent {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent triple of a monomial c * u^u * v^v * g^g, where g is the
/// framing variable (printed "g" in text output).
struct Exponents {
  int u = 0;
  int v = 0;
  int g = 0;
  auto operator<=>(const Exponents&) const = default;
};

/// Laurent polynomial in u, v, g with arbitrary-precision integer
/// coefficients. Values are always kept canonical: no zero coefficients
/// are stored, so operator== is value equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  LaurentPoly() = default;  // zero

  static LaurentPoly monomial(BigInt coeff, int eu, int ev, int eg);
  static LaurentPoly constant(BigInt c) { return monomial(std::move(c), 0, 0, 0); }
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const BigInt& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;

  /// k-fold product. For k < 0 the value must be a single term with
  /// coefficient +1 or -1; the exponents are then scaled by k.
  LaurentPoly pow(int k) const;

  bool operator==(const LaurentPoly&) const = default;

  /// Canonical text form, terms in descending lexicographic order of
  /// (e_u, e_v, e_g), e.g. "-u^4 + u^2*v^2 + 2*u^2".
  std::string str() const;

  /// JSON array of {"eu":int,"ev":int,"eg":int,"c":"<decimal>"} in the
  /// same canonical order as str().
  std::string json() const;
  static LaurentPoly parse_json(const std::string& text);

 private:
  TermMap terms_;
};

inline LaurentPoly u_pow(int k) { return LaurentPoly::monomial(1, k, 0, 0); }
inline LaurentPoly v_pow(int k) { return LaurentPoly::monomial(1, 0, k, 0); }
inline LaurentPoly g_pow(int k) { return LaurentPoly::monomial(1, 0, 0, k); }

/// (u*g)^k, the weight attached to mixed crossings; k may be negative.
inline LaurentPoly ugamma_pow(int k) { return LaurentPoly::monomial(1, k, 0, k); }

}  // namespace yhlink::laurent
