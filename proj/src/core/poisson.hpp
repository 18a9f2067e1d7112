#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frame.hpp"

namespace dk {

/// Rational sample values; points are the lexicographic product, capped at 3^n.
struct SampleGrid {
  std::vector<Rational> values{-2, -1, 1, 2, 3};
  std::vector<std::vector<Rational>> points(std::size_t dimension) const;
};

class PoissonStruct {
 public:
  /// Throws DegreeError unless pi has degree 2.
  explicit PoissonStruct(Multivector pi);
  const Multivector& pi() const { return pi_; }
  const Multivector& jacobiator() const { return jac_; }
  bool is_poisson() const { return jac_.is_zero(); }

 private:
  Multivector pi_;
  Multivector jac_;
};

struct PoissonCheck {
  bool ok;
  Multivector jacobiator;
};
PoissonCheck check_poisson(const Multivector& pi);

struct DegeneracyLevel {
  int k;
  std::vector<Poly> generators;  // components of pi^k/k!
  std::optional<Poly> principal;  // a component dividing all the others
};
std::vector<DegeneracyLevel> degeneracy_ideals(const Multivector& pi);

struct DivisorTypeReport {
  int m = 0;
  DivisorIdeal ideal;
  DivisorClass cls;
  Multivector line_part;
  bool constant_line = false;  // ConstantCoefficients vs SampledNonvanishing
  std::vector<std::vector<Rational>> sample_points;
  std::vector<std::string> warnings;
};
struct NotDivisorType {
  std::string reason;
  std::vector<Rational> point;
};
std::variant<DivisorTypeReport, NotDivisorType> divisor_type(const Multivector& pi, const SampleGrid& grid = {});

struct LiftCertificate {
  AnchorFrame frame;
  FrameMultivector lifted;
  DivisorIdeal residual;
  bool nondegenerate = false;
  bool sampled = false;  // nondegeneracy only checked on samples
  std::string evidence;
  Poly pf_pi, pf_lift;   // top Pfaffians (even rank)
  bool pfaffian_identity = false;
};
struct NotLiftable {
  std::size_t i, j;  // frame indices of the offending entry
  Fraction witness;
};
std::variant<LiftCertificate, NotLiftable> lift(const Multivector& pi, const AnchorFrame& frame,
                                                const SampleGrid& grid = {});

/// Frame bivector with coefficient matrix adj * Pi * adj^T / det^2, if polynomial.
std::variant<FrameMultivector, NotLiftable> lift_bivector(const Multivector& pi, const AnchorFrame& frame);

/// pi(df, .): component j is sum_i d_i f pi^{ij}.
Multivector hamiltonian_vf(const Multivector& pi, const Poly& f);
/// {f, g} = pi(df, dg).
Poly poisson_bracket(const Multivector& pi, const Poly& f, const Poly& g);
/// V^i = sum_k d_k pi^{ki}; throws ConventionCheckFailed if the Lie
/// derivative identity fails for a coordinate function.
Multivector modular_vf(const Multivector& pi);
/// g times the modular field for the volume g * dx_1^...^dx_n.
Multivector scaled_modular_vf(const Multivector& pi, const Poly& g);
bool poisson_vf_check(const Multivector& pi, const Multivector& v);

struct FoliationItem {
  std::string name;
  Multivector field;
  std::optional<std::vector<Poly>> coefficients;
  std::optional<Fraction> witness;
};
struct ModularFoliationReport {
  bool ok = true;
  std::vector<FoliationItem> hamiltonians;
  FoliationItem modular;
  std::vector<std::pair<DivisorIdeal, PreservesResult>> ideals;
};
ModularFoliationReport modular_foliation_report(const Multivector& pi, const AnchorFrame& frame);

/// Coefficients a_ij (i<j) with pi = sum a_ij d_i ^ d_j for a rank-r
/// distribution d_1..d_r, when they exist and are polynomial.
std::optional<std::vector<std::vector<Poly>>> distribution_lift(const Multivector& pi,
                                                                const std::vector<Multivector>& distribution);

struct DarbouxModel {
  std::string name;
  Multivector pi;
  AnchorFrame frame;
  DivisorClass advertised;
};
/// Kinds: nondegenerate log bk scattering elliptic elliptic_zero elliptic_log.
/// The model uses the chart's variables in order.
DarbouxModel darboux_catalog(const Chart& chart, const std::string& kind, int k = 0, const Rational& lambda = 1);

}  // namespace dk
