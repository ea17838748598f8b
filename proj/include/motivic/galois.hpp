#pragma once

#include <cstdint>
#include <vector>

#include "motivic/common.hpp"

namespace motivic {

/// Arithmetic in F_{p^k}. Elements are encoded as integers in [0, p^k): the
/// code sum a_i p^i stands for the residue polynomial sum a_i x^i modulo the
/// field's irreducible modulus. The modulus is the lexicographically smallest
/// monic irreducible of degree k (coefficients compared low-degree-first), so
/// construction is deterministic. For fields up to kTableLimit elements, full
/// addition and multiplication tables are precomputed; larger fields fall back
/// to per-operation polynomial arithmetic. A GaloisField is immutable after
/// construction and safe to share across threads.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint64_t kTableLimit = 1024;

  GaloisField(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t size() const { return q_; }
  /// Modulus coefficients, constant term first, including the leading 1.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  /// Embedding of the integers (reduction mod p into the prime subfield).
  Elem from_integer(long long v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Coefficients of the residue polynomial of a, constant term first,
  /// length k.
  std::vector<unsigned> poly_of(Elem a) const;

 private:
  Elem add_direct(Elem a, Elem b) const;
  Elem mul_direct(Elem a, Elem b) const;
  void check_cyclic() const;

  unsigned p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  Elem one_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  bool tabled_ = false;
};

/// Value-semantics wrapper tying an element code to its field, mainly for
/// tests and small computations.
struct FieldElement {
  const GaloisField* field = nullptr;
  GaloisField::Elem v = 0;

  FieldElement() = default;
  FieldElement(const GaloisField& f, GaloisField::Elem value) : field(&f), v(value) {}

  FieldElement operator+(FieldElement o) const { return {*field, field->add(v, o.v)}; }
  FieldElement operator-(FieldElement o) const { return {*field, field->sub(v, o.v)}; }
  FieldElement operator-() const { return {*field, field->neg(v)}; }
  FieldElement operator*(FieldElement o) const { return {*field, field->mul(v, o.v)}; }
  FieldElement operator/(FieldElement o) const {
    return {*field, field->mul(v, field->inv(o.v))};
  }
  bool operator==(FieldElement o) const { return v == o.v; }
};

bool is_prime(unsigned n);

/// Moebius function on positive integers.
int mobius(int n);

}  // namespace motivic
