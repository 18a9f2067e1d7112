#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exterior.hpp"

namespace dk {

struct Atom {
  /// SmoothGraph: some partial derivative is a nonzero constant, so the zero set
  /// is a smooth graph hypersurface.
  enum class Kind { LogLinear, SmoothGraph, EllipticQuadratic, Opaque };
  Kind kind;
  Poly poly;
  /// The two chart variables of an elliptic atom.
  std::size_t first = 0, second = 0;
};

struct AtomFactor {
  Atom atom;
  unsigned multiplicity = 1;
};

struct DivisorClass {
  enum class Tag { Trivial, Log, NormalCrossingLog, BPower, Elliptic, EllipticLog, Product, Unclassified };
  Tag tag = Tag::Unclassified;
  int param = 0;  // j for NormalCrossingLog(j), k for BPower(k)
  std::vector<DivisorClass> parts;

  static DivisorClass simple(Tag t, int p = 0) { return {t, p, {}}; }
  std::string to_string() const;
  bool operator==(const DivisorClass&) const = default;
};

/// Principal ideal <generator> with nonzero, normalized generator.
class DivisorIdeal {
 public:
  /// Throws ZeroGenerator for the zero polynomial.
  static DivisorIdeal make(const Poly& generator);

  const Poly& generator() const { return gen_; }
  const Chart& chart() const { return gen_.chart(); }
  bool is_unit() const { return gen_.is_constant(); }
  const std::optional<std::vector<AtomFactor>>& atoms() const { return atoms_; }
  DivisorIdeal with_atoms(std::vector<AtomFactor> atoms) const;

  bool operator==(const DivisorIdeal& o) const { return gen_ == o.gen_; }
  std::string to_string() const { return "<" + gen_.to_string() + ">"; }

 private:
  explicit DivisorIdeal(Poly g) : gen_(std::move(g)) {}
  Poly gen_;
  std::optional<std::vector<AtomFactor>> atoms_;
};

DivisorIdeal product(const DivisorIdeal& a, const DivisorIdeal& b);
/// True iff `divisor` divides `ideal`, i.e. ideal = divisor * other.
bool divides(const DivisorIdeal& divisor, const DivisorIdeal& ideal);
DivisorIdeal radical(const DivisorIdeal& ideal);
DivisorIdeal power(const DivisorIdeal& ideal, unsigned k);

struct Classification {
  DivisorClass cls;
  DivisorIdeal ideal;  // carries the atom decomposition
};

/// Pattern-matching classifier; sound but incomplete (Unclassified is a
/// legitimate answer). Candidate atoms are tried before chart variables.
Classification classify(const DivisorIdeal& ideal, std::span<const Poly> candidates = {});

bool is_positive_definite_quadratic(const Poly& q, std::size_t u, std::size_t v);

struct PreservesResult {
  bool preserved = false;
  Poly derivative;                  // L_v f
  std::optional<Poly> certificate;  // q with L_v f = q f
};

PreservesResult preserves(const Multivector& v, const DivisorIdeal& ideal);

}  // namespace dk
