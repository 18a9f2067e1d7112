#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "divisor.hpp"
#include "linalg.hpp"

namespace dk {

/// Reduced fraction num/den, den with positive leading coefficient.
struct Fraction {
  Poly num, den;
  static Fraction reduced(const Poly& num, const Poly& den);
  std::string to_string() const;
};

/// c[i][j][k] = c^k_{ij}, with [e_i, e_j] = sum_k c^k_{ij} e_k.
using StructureTable = std::vector<std::vector<std::vector<Poly>>>;

/// Where a frame came from; used for display and by residue maps to find
/// the singular generators.
struct FrameLabel {
  std::string kind = "custom";  // tangent log bk zero scattering elliptic elliptic_log normal_crossing custom lower upper fiber
  std::vector<std::size_t> vars;
  int k = 0;
  std::string text;  // display form
};

/// A locally free rank-n subsheaf of the tangent sheaf, given by n
/// polynomial generators with nonzero anchor determinant. The generator at
/// position i is paired with chart variable i.
class AnchorFrame {
 public:
  /// Throws DegenerateFrame when det = 0, DegreeMismatch when the count is wrong.
  static AnchorFrame make(const Chart& chart, std::vector<Multivector> generators, FrameLabel label = {});

  const Chart& chart() const { return chart_; }
  std::size_t rank() const { return gens_.size(); }
  const std::vector<Multivector>& generators() const { return gens_; }
  /// rho[i][j] = component i of generator j.
  const PolyMatrix& anchor() const { return rho_; }
  const PolyMatrix& adjugate() const { return adj_; }
  const Poly& det() const { return det_; }
  const FrameLabel& label() const { return label_; }
  std::string describe() const { return label_.text; }

  bool certified() const { return structure_.has_value(); }
  const StructureTable& structure() const;  // throws NotInvolutive when uncertified

  /// Runs the involutivity check and records the structure table.
  AnchorFrame certify() const;

  bool same_generators(const AnchorFrame& o) const;

 private:
  AnchorFrame(Chart c) : chart_(std::move(c)) {}
  Chart chart_;
  std::vector<Multivector> gens_;
  PolyMatrix rho_, adj_;
  Poly det_ = Poly(chart_);
  FrameLabel label_;
  std::optional<StructureTable> structure_;
  friend AnchorFrame with_label(const AnchorFrame&, FrameLabel);
};

AnchorFrame with_label(const AnchorFrame& f, FrameLabel label);

struct CatalogSpec {
  std::string kind;
  std::vector<std::size_t> vars;
  int k = 0;
  std::vector<Multivector> custom;  // for kind == "custom"
};

/// Standard frames; certified on return. Throws BadParams.
AnchorFrame catalog(const Chart& chart, const CatalogSpec& spec);

struct NotInvolutiveWitness {
  std::size_t i, j, k;  // coefficient of e_k in [e_i, e_j]
  Fraction witness;
};
std::variant<StructureTable, NotInvolutiveWitness> check_involutive(const AnchorFrame& frame);

DivisorIdeal frame_divisor(const AnchorFrame& frame);

struct NotInModule {
  std::size_t index;
  Fraction witness;
};
/// Coefficients c_j with v = sum c_j e_j.
std::variant<std::vector<Poly>, NotInModule> expand_in_frame(const Multivector& v, const AnchorFrame& frame);

/// Coefficients of a k-vector in the frame basis e_I, when polynomial.
std::variant<FrameMultivector, NotInModule> expand_multivector(const Multivector& m, const AnchorFrame& frame);
/// rho applied to a frame multivector.
Multivector pushforward(const FrameMultivector& m, const AnchorFrame& frame);

/// Frame form in coordinates: e^i = sum_j adj[i][j]/det dx_j.
DiffForm coframe_to_form(const CoframeForm& w, const AnchorFrame& frame);
/// Inverse of coframe_to_form; nothing when a coefficient is not polynomial.
std::optional<CoframeForm> form_to_coframe(const DiffForm& w, const AnchorFrame& frame);
/// rho^* of a polynomial coordinate form: dx_i = sum_J rho_{iJ} e^J.
CoframeForm pullback_form(const DiffForm& w, const AnchorFrame& frame);

/// Algebroid differential on frame forms.
CoframeForm algebroid_d(const CoframeForm& w, const AnchorFrame& frame);

/// Keep the listed generators, multiply the rest by the ideal's generator.
AnchorFrame lower_modify(const AnchorFrame& frame, const std::vector<std::size_t>& keep, const DivisorIdeal& ideal);
/// Divide the listed generators by the ideal's generator.
AnchorFrame upper_modify(const AnchorFrame& frame, const std::vector<std::size_t>& divide, const DivisorIdeal& ideal);
/// Merge two frames acting on disjoint sets of variables.
AnchorFrame fiber_product(const AnchorFrame& a, const AnchorFrame& b);

struct IdealAlgebroidReport {
  bool ok = false;
  bool involutive = false;
  bool divisor_matches = false;
  std::vector<bool> generator_preserves;
  std::optional<NotInvolutiveWitness> failure;
};
IdealAlgebroidReport verify_ideal_algebroid(const AnchorFrame& frame, const DivisorIdeal& ideal);

}  // namespace dk
