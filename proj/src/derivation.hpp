#pragma once

// Equalities in a finitely presented group carried together with a
// certificate: lhs·rhs⁻¹ equals the product of the listed relator conjugates
// in the free group.

#include "fpg/errors.hpp"
#include "fpg/presentation.hpp"

#include <stdexcept>

namespace fpg::detail {

struct Equality {
  Word lhs;
  Word rhs;
  Certificate certificate;
};

inline Certificate conjugate(const Word& by, Certificate c) {
  for (auto& f : c) f.conjugator = by * f.conjugator;
  return c;
}

inline Certificate inverse(const Certificate& c) {
  Certificate out(c.rbegin(), c.rend());
  for (auto& f : out) f.sign = -f.sign;
  return out;
}

inline Equality refl(const Word& w) { return {w, w, {}}; }

/// lhs = rhs where lhs·rhs⁻¹ is a cyclic conjugate of relator `index`, or of
/// its inverse.
inline Equality relation(const Presentation& p, std::size_t index,
                         const Word& lhs, const Word& rhs) {
  const Word& r = p.relators().at(index);
  for (int sign : {1, -1}) {
    auto cr = cyclic_reduce(sign > 0 ? lhs * invert(rhs) : rhs * invert(lhs));
    const auto& core = cr.core;
    // Rotations of the stored relator.
    auto ls = letters(r);
    for (std::size_t k = 0; k < ls.size(); ++k) {
      Word head;
      for (std::size_t i = 0; i < k; ++i) {
        head = head * Word::letter(ls[i].first, ls[i].second);
      }
      Word rotated = invert(head) * r * head;
      if (rotated == core) {
        return {lhs, rhs, {{index, cr.conjugator * invert(head), sign}}};
      }
    }
  }
  throw std::logic_error("relator " + std::to_string(index) +
                         " does not give " + to_string(lhs) + " = " +
                         to_string(rhs));
}

inline Equality sym(const Equality& e) {
  // rhs·lhs⁻¹ = (lhs·rhs⁻¹)⁻¹
  return {e.rhs, e.lhs, inverse(e.certificate)};
}

inline Equality trans(const Equality& a, const Equality& b) {
  if (a.rhs != b.lhs) {
    throw std::logic_error("cannot chain " + to_string(a.rhs) + " with " +
                           to_string(b.lhs));
  }
  Certificate c = a.certificate;
  c.insert(c.end(), b.certificate.begin(), b.certificate.end());
  return {a.lhs, b.rhs, std::move(c)};
}

/// x·lhs·y = x·rhs·y
inline Equality wrap(const Word& x, const Equality& e, const Word& y) {
  return {x * e.lhs * y, x * e.rhs * y, conjugate(x, e.certificate)};
}

/// a.lhs·b.lhs = a.rhs·b.rhs
inline Equality product(const Equality& a, const Equality& b) {
  // a.l b.l b.r⁻¹ a.r⁻¹ = a.l (b.l b.r⁻¹) a.l⁻¹ · a.l a.r⁻¹
  Certificate c = conjugate(a.lhs, b.certificate);
  c.insert(c.end(), a.certificate.begin(), a.certificate.end());
  return {a.lhs * b.lhs, a.rhs * b.rhs, std::move(c)};
}

/// lhs⁻¹ = rhs⁻¹
inline Equality invert(const Equality& e) {
  // l⁻¹ r = l⁻¹ (l r⁻¹)⁻¹ l
  return {fpg::invert(e.lhs), fpg::invert(e.rhs),
          conjugate(fpg::invert(e.lhs), inverse(e.certificate))};
}

/// lhs^n = rhs^n for n ≥ 0.
inline Equality power(const Equality& e, std::size_t n) {
  Equality out = refl(Word{});
  for (std::size_t i = 0; i < n; ++i) out = product(out, e);
  return out;
}

inline bool check(const Presentation& p, const Equality& e) {
  return evaluate(p, e.certificate) == e.lhs * fpg::invert(e.rhs);
}

}  // namespace fpg::detail
