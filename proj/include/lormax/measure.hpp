#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace lormax {

using Complex = std::complex<double>;

struct Atom {
  std::string id;
  double weight = 0.0;
};

/// Finite weighted measure space: an ordered list of atoms with positive
/// weights. Immutable after construction.
class MeasureSpace {
 public:
  explicit MeasureSpace(std::vector<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  double weight(std::size_t i) const { return atoms_[i].weight; }
  double total_measure() const { return total_; }

  /// Index of the atom with the given id; throws if absent.
  std::size_t index_of(const std::string& id) const;

 private:
  std::vector<Atom> atoms_;
  double total_ = 0.0;
};

using SpacePtr = std::shared_ptr<const MeasureSpace>;

/// Complex-valued function on a measure space, one value per atom.
class ScalarField {
 public:
  ScalarField(SpacePtr space, std::vector<Complex> values);

  const SpacePtr& space() const { return space_; }
  const std::vector<Complex>& values() const { return values_; }
  Complex value(std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  static ScalarField zero(SpacePtr space);
  /// Characteristic function of the given atom subset, scaled by c.
  static ScalarField indicator(SpacePtr space, const std::vector<std::size_t>& atoms,
                               Complex c = 1.0);

 private:
  SpacePtr space_;
  std::vector<Complex> values_;
};

struct Breakpoint {
  double t = 0.0;
  double value = 0.0;
};

/// Decreasing rearrangement as a right-continuous step function.
/// Breakpoints are (t, value) with strictly increasing t, strictly
/// decreasing value, and a final value of 0 at the support measure.
class RearrangementProfile {
 public:
  explicit RearrangementProfile(std::vector<Breakpoint> breakpoints);

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  double value_at(double t) const;
  /// Measure coordinate past which the profile is identically 0.
  double support_measure() const { return breakpoints_.back().t; }
  /// Integral of the profile over [0, infinity).
  double integral() const;
  /// Lebesgue measure of { t : profile(t) > s }.
  double measure_above(double s) const;

 private:
  std::vector<Breakpoint> breakpoints_;
};

/// mu{ x : |f(x)| > s }, computed as an exact weight sum in atom order.
double distribution_function(const ScalarField& f, double s);

/// Decreasing rearrangement of |f|. Atoms are sorted by |value|
/// descending with ties broken by atom order; equal adjacent plateaus
/// are merged into the canonical form.
RearrangementProfile rearrange(const ScalarField& f);

/// Atom indices with |f| strictly above the threshold.
std::vector<std::size_t> support(const ScalarField& f, double threshold = 0.0);

}  // namespace lormax
