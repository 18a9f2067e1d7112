#include "dsl/runner.hpp"

#include "core/calculus.hpp"
#include "core/residue.hpp"
#include "dsl/parser.hpp"

namespace dk::dsl {

using J = nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Negative: return "negative";
    case Verdict::Error: return "error";
  }
  return "error";
}

namespace {

struct Outcome {
  Verdict verdict = Verdict::Ok;
  J payload = J::object();
  std::vector<std::string> warnings;
};

template <class T>
J strings(const std::vector<T>& xs) {
  J a = J::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

J rationals(const std::vector<Rational>& xs) {
  J a = J::array();
  for (const auto& x : xs) a.push_back(rational_to_string(x));
  return a;
}

std::string slot_name(std::size_t i) { return "e" + std::to_string(i + 1); }

const Clause* clause(const Stmt& s, const std::string& kw) {
  for (const auto& c : s.clauses) {
    if (c.keyword == kw) return &c;
  }
  return nullptr;
}

J frame_summary(const AnchorFrame& f) {
  return J{{"frame", f.describe()}, {"generators", strings(f.generators())}, {"det", f.det().to_string()},
           {"divisor", frame_divisor(f).generator().to_string()}};
}

FrameMultivector as_frame_vector(const std::vector<Poly>& c, const Chart& chart) {
  FrameMultivector v(chart, 1);
  for (std::size_t k = 0; k < c.size(); ++k) v.add({static_cast<int>(k)}, c[k]);
  return v;
}

class Runner {
 public:
  Runner(const RunOptions& o) : opts_(o) {}

  std::vector<Certificate> run(const Job& job) {
    std::vector<Certificate> out;
    for (const auto& s : job.stmts) {
      switch (s.kind) {
        case Stmt::Kind::Chart:
          ev_.emplace(Chart::make(s.vars), opts_.limits);
          break;
        case Stmt::Kind::Assign:
          ev_->define_value(s.name, s.expr);
          break;
        case Stmt::Kind::Frame:
          ev_->define_frame(s.name, s.expr);
          break;
        case Stmt::Kind::Command:
          out.push_back(command(s));
          break;
      }
    }
    return out;
  }

 private:
  Certificate command(const Stmt& s) {
    Outcome o;
    try {
      o = dispatch(s);
    } catch (const Error& e) {
      o = Outcome{Verdict::Error, J{{"error", error_code_name(e.code())}, {"message", e.what()}}, {}};
    } catch (const std::exception& e) {
      o = Outcome{Verdict::Error, J{{"error", "Internal"}, {"message", e.what()}}, {}};
    }
    J j;
    j["command"] = format_stmt(s);
    j["verdict"] = verdict_name(o.verdict);
    j["payload"] = std::move(o.payload);
    j["warnings"] = o.warnings;
    return {o.verdict, std::move(j)};
  }

  void heuristic(Outcome& o, const std::string& what) {
    o.warnings.push_back(what);
    if (opts_.strict) {
      o.verdict = Verdict::Negative;
      o.warnings.push_back("strict mode rejects heuristic certificates");
    }
  }

  Evaluator& ev() { return *ev_; }
  Multivector bivector(const Expr& e) { return ev().eval_multivector(e, 2); }
  Multivector field(const Expr& e) { return ev().eval_multivector(e, 1); }
  AnchorFrame frame_clause(const Stmt& s, const std::string& kw) { return ev().eval_frame(*clause(s, kw)->values[0]); }

  Outcome dispatch(const Stmt& s) {
    const std::string& c = s.name;
    const auto& a = s.args;
    Outcome o;
    J& p = o.payload;
    if (c == "check_poisson") {
      auto r = check_poisson(bivector(*a[0]));
      p["poisson"] = r.ok;
      p["jacobiator"] = r.jacobiator.to_string();
      p["convention"] = "jacobiator is [pi,pi]; [pi,pi](df,dg,dh) = 2*({f,{g,h}} + {g,{h,f}} + {h,{f,g}})";
      if (!r.ok) o.verdict = Verdict::Negative;
    } else if (c == "schouten") {
      p["bracket"] = schouten_bracket(ev().eval_multivector(*a[0]), ev().eval_multivector(*a[1])).to_string();
    } else if (c == "pfaffian") {
      long k = ev().eval_integer(*a[1]);
      p["k"] = k;
      p["pfaffian"] = partial_pfaffian(bivector(*a[0]), static_cast<int>(k)).to_string();
    } else if (c == "divisor") {
      auto r = divisor_type(bivector(*a[0]), opts_.grid);
      if (auto* bad = std::get_if<NotDivisorType>(&r)) {
        o.verdict = Verdict::Negative;
        p["not_divisor_type"] = bad->reason;
        p["point"] = rationals(bad->point);
      } else {
        auto& d = std::get<DivisorTypeReport>(r);
        p["m"] = d.m;
        p["ideal"] = d.ideal.generator().to_string();
        p["class"] = d.cls.to_string();
        p["line_part"] = d.line_part.to_string();
        p["line_certificate"] = d.constant_line ? "ConstantCoefficients" : "SampledNonvanishing";
        if (!d.constant_line) p["sample_points"] = d.sample_points.size();
        for (const auto& w : d.warnings) {
          if (w.find("sampling") != std::string::npos) heuristic(o, w);
          else o.warnings.push_back(w);
        }
      }
    } else if (c == "degeneracy") {
      J levels = J::array();
      for (const auto& l : degeneracy_ideals(bivector(*a[0]))) {
        levels.push_back(J{{"k", l.k}, {"generators", strings(l.generators)},
                           {"principal", l.principal ? J(l.principal->to_string()) : J(nullptr)}});
      }
      p["levels"] = levels;
    } else if (c == "classify") {
      std::vector<Poly> cands;
      if (auto* w = clause(s, "with")) {
        for (const auto& e : w->values) cands.push_back(ev().eval_poly(*e));
      }
      auto r = classify(DivisorIdeal::make(ev().eval_poly(*a[0])), cands);
      p["ideal"] = r.ideal.generator().to_string();
      p["class"] = r.cls.to_string();
      J atoms = J::array();
      for (const auto& f : *r.ideal.atoms()) {
        const char* kind = f.atom.kind == Atom::Kind::LogLinear ? "linear"
                           : f.atom.kind == Atom::Kind::SmoothGraph ? "smooth"
                           : f.atom.kind == Atom::Kind::EllipticQuadratic ? "elliptic" : "opaque";
        atoms.push_back(J{{"kind", kind}, {"atom", f.atom.poly.to_string()}, {"multiplicity", f.multiplicity}});
      }
      p["atoms"] = atoms;
    } else if (c == "radical") {
      p["radical"] = radical(DivisorIdeal::make(ev().eval_poly(*a[0]))).generator().to_string();
    } else if (c == "divides") {
      DivisorIdeal i = DivisorIdeal::make(ev().eval_poly(*a[0]));
      DivisorIdeal j = DivisorIdeal::make(ev().eval_poly(*a[1]));
      bool d = divides(i, j);
      p["divides"] = d;
      if (!d) o.verdict = Verdict::Negative;
    } else if (c == "preserves") {
      auto r = preserves(field(*a[0]), DivisorIdeal::make(ev().eval_poly(*a[1])));
      p["preserved"] = r.preserved;
      p["derivative"] = r.derivative.to_string();
      p["quotient"] = r.certificate ? J(r.certificate->to_string()) : J(nullptr);
      if (!r.preserved) o.verdict = Verdict::Negative;
    } else if (c == "lift") {
      AnchorFrame f = frame_clause(s, "to").certify();
      auto r = lift(bivector(*a[0]), f, opts_.grid);
      p["frame"] = f.describe();
      if (auto* bad = std::get_if<NotLiftable>(&r)) {
        o.verdict = Verdict::Negative;
        p["liftable"] = false;
        p["entry"] = slot_name(bad->i) + "^^" + slot_name(bad->j);
        p["witness"] = bad->witness.to_string();
      } else {
        auto& l = std::get<LiftCertificate>(r);
        p["liftable"] = true;
        p["lifted"] = l.lifted.to_string();
        p["residual_ideal"] = l.residual.generator().to_string();
        p["nondegenerate"] = l.nondegenerate;
        p["evidence"] = l.evidence;
        p["pfaffian_identity"] = l.pfaffian_identity;
        if (f.rank() % 2 == 0) {
          p["pfaffian"] = l.pf_pi.to_string();
          p["lift_pfaffian"] = l.pf_lift.to_string();
        }
        if (l.sampled) heuristic(o, "nondegeneracy of the lift certified by sampling only");
      }
    } else if (c == "expand") {
      AnchorFrame f = frame_clause(s, "in");
      Multivector m = ev().eval_multivector(*a[0]);
      p["frame"] = f.describe();
      if (m.degree() <= 1) {
        auto r = expand_in_frame(m.is_zero() ? Multivector(m.chart(), 1) : m, f);
        if (auto* bad = std::get_if<NotInModule>(&r)) {
          o.verdict = Verdict::Negative;
          p["slot"] = slot_name(bad->index);
          p["witness"] = bad->witness.to_string();
        } else {
          p["coefficients"] = strings(std::get<std::vector<Poly>>(r));
        }
      } else {
        auto r = expand_multivector(m, f);
        if (auto* bad = std::get_if<NotInModule>(&r)) {
          o.verdict = Verdict::Negative;
          p["witness"] = bad->witness.to_string();
        } else {
          p["expansion"] = std::get<FrameMultivector>(r).to_string();
        }
      }
    } else if (c == "modular") {
      p["modular"] = modular_vf(bivector(*a[0])).to_string();
    } else if (c == "hamiltonian") {
      p["hamiltonian"] = hamiltonian_vf(bivector(*a[0]), ev().eval_poly(*a[1])).to_string();
    } else if (c == "poisson_bracket") {
      p["bracket"] = poisson_bracket(bivector(*a[0]), ev().eval_poly(*a[1]), ev().eval_poly(*a[2])).to_string();
    } else if (c == "poisson_vf") {
      Multivector pi = bivector(*a[0]);
      Multivector v = field(*a[1]);
      Multivector l = lie_derivative(v, pi);
      p["poisson_vf"] = l.is_zero();
      p["lie_derivative"] = l.to_string();
      if (!l.is_zero()) o.verdict = Verdict::Negative;
    } else if (c == "foliation") {
      AnchorFrame f = frame_clause(s, "over");
      auto r = modular_foliation_report(bivector(*a[0]), f);
      auto item = [](const FoliationItem& it) {
        J j{{"name", it.name}, {"field", it.field.to_string()}};
        if (it.coefficients) j["coefficients"] = strings(*it.coefficients);
        else j["witness"] = it.witness->to_string();
        return j;
      };
      p["frame"] = f.describe();
      p["ok"] = r.ok;
      J hs = J::array();
      for (const auto& h : r.hamiltonians) hs.push_back(item(h));
      p["hamiltonians"] = hs;
      p["modular"] = item(r.modular);
      J ids = J::array();
      for (const auto& [ideal, pr] : r.ideals) {
        ids.push_back(J{{"ideal", ideal.generator().to_string()}, {"preserved", pr.preserved},
                        {"quotient", pr.certificate ? J(pr.certificate->to_string()) : J(nullptr)}});
      }
      p["ideals"] = ids;
      if (!r.ok) o.verdict = Verdict::Negative;
    } else if (c == "verify_frame" || c == "involutive") {
      AnchorFrame f = ev().eval_frame(*a[0]);
      if (c == "verify_frame") p = frame_summary(f);
      auto inv = check_involutive(f);
      p["involutive"] = std::holds_alternative<StructureTable>(inv);
      if (auto* w = std::get_if<NotInvolutiveWitness>(&inv)) {
        o.verdict = Verdict::Negative;
        p["witness"] = J{{"bracket", "[" + slot_name(w->i) + "," + slot_name(w->j) + "]"}, {"slot", slot_name(w->k)},
                         {"coefficient", w->witness.to_string()}};
      } else if (c == "verify_frame") {
        const auto& t = std::get<StructureTable>(inv);
        J st = J::array();
        for (std::size_t i = 0; i < f.rank(); ++i) {
          for (std::size_t j = i + 1; j < f.rank(); ++j) {
            FrameMultivector v = as_frame_vector(t[i][j], f.chart());
            if (!v.is_zero()) st.push_back(J{{"bracket", "[" + slot_name(i) + "," + slot_name(j) + "]"}, {"value", v.to_string()}});
          }
        }
        p["structure"] = st;
        p["class"] = classify(frame_divisor(f)).cls.to_string();
      }
      if (c == "verify_frame" && a.size() > 1) {
        auto r = verify_ideal_algebroid(f, DivisorIdeal::make(ev().eval_poly(*a[1])));
        J pres = J::array();
        for (std::size_t i = 0; i < f.rank(); ++i) {
          auto pr = preserves(f.generators()[i], DivisorIdeal::make(ev().eval_poly(*a[1])));
          pres.push_back(J{{"generator", slot_name(i)}, {"preserved", pr.preserved},
                           {"quotient", pr.certificate ? J(pr.certificate->to_string()) : J(nullptr)}});
        }
        p["ideal"] = J{{"ideal", ev().eval_poly(*a[1]).to_string()}, {"divisor_matches", r.divisor_matches},
                       {"preserves", pres}, {"ok", r.ok}};
        if (!r.ok) o.verdict = Verdict::Negative;
      }
    } else if (c == "modify") {
      AnchorFrame f = ev().eval_frame(*a[0]);
      DivisorIdeal ideal = DivisorIdeal::make(ev().eval_poly(*clause(s, "by")->values[0]));
      std::vector<std::size_t> idx;
      for (const auto& m : clause(s, s.mode == "lower" ? "keep" : "divide")->values[0]->args) {
        long i = ev().eval_integer(*m);
        if (i < 1) fail(ErrorCode::BadParams, "generator indices start at 1");
        idx.push_back(static_cast<std::size_t>(i - 1));
      }
      AnchorFrame r = s.mode == "lower" ? lower_modify(f, idx, ideal) : upper_modify(f, idx, ideal);
      p = frame_summary(r);
    } else if (c == "residue" || c == "cochain") {
      AnchorFrame f = frame_clause(s, "over").certify();
      const Expr& fl = *clause(s, "via")->values[0];
      auto flavor = parse_flavor(fl.name);
      if (!flavor) fail(ErrorCode::FlavorMismatch, "unknown residue flavor '" + fl.name + "'");
      std::optional<std::size_t> at;
      if (auto* ac = clause(s, "at")) at = ev().eval_variable(*ac->values[0]);
      ResidueSpec spec = make_residue_spec(f, *flavor, at);
      bool force = clause(s, "force") != nullptr;
      CoframeForm w = ev().eval_coframe(*a[0], f);
      p["frame"] = f.describe();
      p["flavor"] = flavor_name(*flavor);
      J sub = J::array();
      for (std::size_t i = 0; i < spec.sub_chart.dimension(); ++i) sub.push_back(spec.sub_chart.name(i));
      p["locus_chart"] = sub;
      if (c == "residue") {
        p["form"] = w.to_string();
        p["residue"] = residue(w, spec, force).to_string();
      } else {
        auto r = cochain_check(w, spec, force);
        p["ok"] = r.ok;
        p["residue_of_d"] = r.lhs.to_string();
        p["d_of_residue"] = r.rhs.to_string();
        p["sign"] = residue_sign(spec);
        if (!r.ok) o.verdict = Verdict::Negative;
      }
    } else if (c == "differential") {
      AnchorFrame f = frame_clause(s, "over").certify();
      p["d"] = algebroid_d(ev().eval_coframe(*a[0], f), f).to_string();
    } else if (c == "spinor") {
      AnchorFrame f = frame_clause(s, "over").certify();
      const std::string& fl = clause(s, "via")->values[0]->name;
      if (fl != "log" && fl != "elliptic") fail(ErrorCode::FlavorMismatch, "spinor flavor must be log or elliptic");
      auto l = lift(bivector(*a[0]), f, opts_.grid);
      if (auto* bad = std::get_if<NotLiftable>(&l)) {
        o.verdict = Verdict::Negative;
        p["liftable"] = false;
        p["witness"] = bad->witness.to_string();
        return o;
      }
      CoframeForm omega = symplectic_dual(std::get<LiftCertificate>(l).lifted);
      auto r = cosymplectic_spinor(omega, f, fl == "elliptic");
      p["omega"] = omega.to_string();
      p["components"] = strings(r.components);
      p["alpha"] = r.alpha.to_string();
      if (r.alpha2) p["alpha2"] = r.alpha2->to_string();
      p["beta"] = r.beta.to_string();
      p["closed"] = r.closed;
      p["top_nonzero"] = r.top_nonzero;
      p["identity"] = r.identity;
      p["identity_statement"] = r.identity_text;
      if (!(r.closed && r.top_nonzero && r.identity)) o.verdict = Verdict::Negative;
    } else if (c == "darboux") {
      const Expr& m = *a[0];
      int k = 0;
      Rational lambda = 1;
      if (m.kind == Expr::Kind::Call && m.name == "bk") k = static_cast<int>(ev().eval_integer(*m.args[0]));
      if (m.kind == Expr::Kind::Call && m.name == "elliptic") {
        Poly l = ev().eval_poly(*m.args[0]);
        if (!l.is_constant()) fail(ErrorCode::BadParams, "lambda must be a constant");
        lambda = l.constant_term();
      }
      DarbouxModel d = darboux_catalog(ev().chart(), m.name, k, lambda);
      p["model"] = d.name;
      p["pi"] = d.pi.to_string();
      p["frame"] = d.frame.describe();
      p["advertised"] = d.advertised.to_string();
      p["poisson"] = check_poisson(d.pi).ok;
      auto dt = divisor_type(d.pi, opts_.grid);
      bool matches = false;
      if (auto* r = std::get_if<DivisorTypeReport>(&dt)) {
        p["divisor_ideal"] = r->ideal.generator().to_string();
        p["divisor_class"] = r->cls.to_string();
        matches = r->cls == d.advertised;
      }
      auto l = lift(d.pi, d.frame, opts_.grid);
      bool nd = false;
      if (auto* c2 = std::get_if<LiftCertificate>(&l)) {
        p["lifted"] = c2->lifted.to_string();
        nd = c2->nondegenerate && !c2->sampled;
      }
      p["nondegenerate_lift"] = nd;
      p["class_matches"] = matches;
      if (!(matches && nd && p["poisson"].get<bool>())) o.verdict = Verdict::Negative;
    } else {
      fail(ErrorCode::Internal, "unhandled command " + c);
    }
    return o;
  }

  RunOptions opts_;
  std::optional<Evaluator> ev_;
};

}  // namespace

std::vector<Certificate> run(const Job& job, const RunOptions& options) { return Runner(options).run(job); }

Certificate parse_error_certificate(const std::string& message, int line, int column,
                                    const std::vector<std::string>& expected) {
  J j;
  j["command"] = "parse";
  j["verdict"] = "error";
  j["payload"] = J{{"error", "ParseError"}, {"message", message}, {"line", line}, {"column", column}, {"expected", expected}};
  j["warnings"] = J::array();
  return {Verdict::Error, std::move(j)};
}

Verdict overall(const std::vector<Certificate>& certs) {
  Verdict v = Verdict::Ok;
  for (const auto& c : certs) {
    if (static_cast<int>(c.verdict) > static_cast<int>(v)) v = c.verdict;
  }
  return v;
}

std::string render_json(const std::vector<Certificate>& certs) {
  if (certs.size() == 1) return certs[0].json.dump(2) + "\n";
  J a = J::array();
  for (const auto& c : certs) a.push_back(c.json);
  return a.dump(2) + "\n";
}

std::string render_text(const std::vector<Certificate>& certs) {
  std::string out;
  for (const auto& c : certs) {
    out += c.json["command"].get<std::string>() + ": " + c.json["verdict"].get<std::string>() + "\n";
    for (const auto& [k, v] : c.json["payload"].items()) {
      out += "  " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
    for (const auto& w : c.json["warnings"]) out += "  warning: " + w.get<std::string>() + "\n";
  }
  return out;
}

}  // namespace dk::dsl
