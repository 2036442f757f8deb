#pragma once

#include "lormax/measure.hpp"

namespace lormax {

/// Exponent in [1, infinity]; infinity carried as an explicit state,
/// never as a sentinel float.
class Exponent {
 public:
  Exponent(double v);  // implicit: finite exponent
  static Exponent inf();

  bool infinite() const { return infinite_; }
  double value() const;          // throws when infinite
  double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }
  double value_or(double fallback) const { return infinite_ ? fallback : value_; }

 private:
  Exponent() : value_(0), infinite_(true) {}
  double value_;
  bool infinite_;
};

/// Lorentz index pair (p, q). p is the principal exponent, q the outer
/// one; q = infinity selects the weak quasinorm.
class LorentzIndex {
 public:
  static LorentzIndex pq(double p, double q);
  static LorentzIndex weak(double p);
  /// Essential-sup norm, p = q = infinity.
  static LorentzIndex sup();
  static LorentzIndex make(Exponent p, Exponent q);

  const Exponent& p() const { return p_; }
  const Exponent& q() const { return q_; }

 private:
  LorentzIndex(Exponent p, Exponent q) : p_(p), q_(q) {}
  Exponent p_;
  Exponent q_;
};

/// Lorentz quasinorm of |f|: for finite q
///   ( (q/p) . integral of (f*(t))^q t^{q/p-1} dt )^{1/q},
/// evaluated in closed form over the plateaus of f*; for q = infinity the
/// weak value sup_t t^{1/p} f*(t), the sup taken over plateau right
/// endpoints.
double quasinorm(const RearrangementProfile& profile, const LorentzIndex& idx);
double quasinorm(const ScalarField& f, const LorentzIndex& idx);

/// Same formula with f* replaced by its maximal average
/// f**(t) = (1/t) . integral of f* over [0, t]. Requires p > 1, where it
/// is a norm equivalent to the quasinorm within the factor p/(p-1).
double norm_via_maximal_average(const RearrangementProfile& profile, const LorentzIndex& idx);
double norm_via_maximal_average(const ScalarField& f, const LorentzIndex& idx);

}  // namespace lormax
