#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frame.hpp"

namespace dk {

enum class ResidueFlavor { LogRes, EllipticQ, EllipticR, EllipticTheta, EllLogZ, EllLogD };
std::string flavor_name(ResidueFlavor f);
std::optional<ResidueFlavor> parse_flavor(std::string_view name);

struct ResidueSpec {
  AnchorFrame frame;
  ResidueFlavor flavor;
  std::vector<std::size_t> singular;  // frame slots extracted, in this order
  std::vector<std::size_t> excluded;  // slots whose presence sends a term to zero
  std::vector<std::size_t> locus;     // chart variables set to zero
  Chart sub_chart;
  /// residual_slots[p] is the frame slot paired with sub-chart variable p.
  std::vector<std::size_t> residual_slots;
  std::optional<AnchorFrame> residual_frame;  // absent when the locus is a point
  /// theta coefficients per residual slot, for the twisted differential.
  std::vector<Poly> twist;
};

/// Throws FlavorMismatch when the flavor does not fit the frame label.
ResidueSpec make_residue_spec(const AnchorFrame& frame, ResidueFlavor flavor,
                              std::optional<std::size_t> locus_var = std::nullopt);

/// A form on the locus, written in the residual coframe.
struct RestrictedForm {
  Chart chart;
  std::vector<std::string> basis;  // symbol per residual slot
  CoframeForm form;

  std::string to_string() const;
  bool operator==(const RestrictedForm& o) const { return form == o.form; }
};

RestrictedForm residue(const CoframeForm& w, const ResidueSpec& spec, bool force = false);
/// d_B + theta^ on residual forms.
RestrictedForm residual_d(const RestrictedForm& r, const ResidueSpec& spec);
/// sign (-1)^l with l the number of singular slots.
int residue_sign(const ResidueSpec& spec);

struct CochainResult {
  bool ok;
  RestrictedForm lhs;  // Res(d_A w)
  RestrictedForm rhs;  // (-1)^l (d_B + theta) Res(w)
};
CochainResult cochain_check(const CoframeForm& w, const ResidueSpec& spec, bool force = false);

/// omega = -Pi^{-1}; throws DegenerateSpinor unless Pf(Pi) is a nonzero constant.
CoframeForm symplectic_dual(const FrameMultivector& lifted);

struct SpinorReport {
  ResidueFlavor flavor;
  std::vector<RestrictedForm> components;  // Res(omega^k/k!), k = 1..n/2
  RestrictedForm alpha;
  std::optional<RestrictedForm> alpha2;
  RestrictedForm beta;
  bool closed = false;
  bool top_nonzero = false;
  bool identity = false;
  std::string identity_text;
};
/// `elliptic` picks the 2-cosymplectic flavor, otherwise the log one.
SpinorReport cosymplectic_spinor(const CoframeForm& omega, const AnchorFrame& frame, bool elliptic);

}  // namespace dk
