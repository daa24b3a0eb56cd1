#include "skoda/closure.hpp"

#include <stdexcept>

namespace skoda {

namespace {

bool monomial_regime(const Poly& h, const Ideal& J) { return h.is_monomial() && is_monomial_ideal(J); }

Ideal power_of(const Ideal& J, unsigned e) {
  if (is_monomial_ideal(J)) return MonomialIdeal::from_ideal(J).power(e).to_ideal();
  return ideal_power(J, e);
}

ClosureVerdict member_with(ClosureCertificate c) {
  ClosureVerdict v;
  v.status = ClosureStatus::Member;
  v.certificate = std::move(c);
  return v;
}

ClosureVerdict undecided(unsigned bound) {
  ClosureVerdict v;
  v.bound = bound;
  return v;
}

}  // namespace

bool is_monomial_ideal(const Ideal& J) {
  if (J.ring()->has_relations()) return false;
  for (const auto& g : J.gens())
    if (!g.is_monomial()) return false;
  return !J.gens().empty();
}

ClosureVerdict power_certificate(const Poly& h, const Ideal& J, unsigned m, unsigned s) {
  if (s == 0 || m == 0) throw std::invalid_argument("power_certificate: m and s must be positive");
  const auto& R = J.ring();
  if (ideal_member(R->pow(R->reduce(h), s), power_of(J, m * s)))
    return member_with({CertificateKind::Power, s, 0, {}});
  return undecided(s);
}

ClosureVerdict search_power_certificate(const Poly& h, const Ideal& J, unsigned m, unsigned s_max) {
  for (unsigned s = 1; s <= s_max; ++s) {
    auto v = power_certificate(h, J, m, s);
    if (v.member()) return v;
  }
  return undecided(s_max);
}

ClosureVerdict power_certificate_via(const Poly& h, const Ideal& J, const Ideal& K, unsigned m, unsigned s,
                                     const ClosureCaps& caps) {
  if (!same_ring(*J.ring(), *K.ring())) throw std::invalid_argument("power_certificate_via: rings differ");
  ClosureCertificate via_data;
  for (const auto& g : K.gens()) {
    auto v = closure_member(g, J, 1, caps);
    if (!v.member()) return undecided(s);
    via_data.via.push_back(g);
    via_data.via_verdicts.push_back(std::move(v));
  }
  auto v = power_certificate(h, K, m, s);
  if (!v.member()) return v;
  v.certificate.via = std::move(via_data.via);
  v.certificate.via_verdicts = std::move(via_data.via_verdicts);
  return v;
}

ClosureVerdict reduction_member(const Poly& h, const Ideal& J, unsigned m, unsigned cap) {
  if (m == 0) throw std::invalid_argument("reduction_member: m must be positive");
  const auto& R = J.ring();
  const Poly hr = R->reduce(h);
  if (monomial_regime(hr, J)) {
    MonomialIdeal Jm = MonomialIdeal::from_ideal(J).power(m);
    auto kexps = Jm.exponents();
    kexps.push_back(exponent_of(hr));
    MonomialIdeal K(R, kexps);
    MonomialIdeal KN(R, {Exponent(R->nvars(), 0)});
    auto times = [&](const MonomialIdeal& A, const MonomialIdeal& B) {
      std::vector<Exponent> out;
      for (const auto& a : A.exponents())
        for (const auto& b : B.exponents()) {
          Exponent e = a;
          for (std::size_t i = 0; i < e.size(); ++i) e[i] += b[i];
          out.push_back(std::move(e));
        }
      return MonomialIdeal(R, std::move(out));
    };
    for (unsigned N = 0; N <= cap; ++N) {
      if (times(Jm, KN) == times(K, KN)) return member_with({CertificateKind::Reduction, 0, N, {}});
      KN = times(KN, K);
    }
    return undecided(cap);
  }
  Ideal Jm = power_of(J, m);
  Ideal K = ideal_sum(Jm, Ideal(R, std::vector<Poly>{hr}));
  Ideal KN(R, std::vector<Poly>{R->one()});
  for (unsigned N = 0; N <= cap; ++N) {
    Ideal next = ideal_product(KN, K);
    if (ideal_contains(ideal_product(Jm, KN), next)) return member_with({CertificateKind::Reduction, 0, N, {}});
    KN = std::move(next);
  }
  return undecided(cap);
}

ClosureVerdict newton_verdict(const Poly& h, const Ideal& J, unsigned m) {
  const Poly hr = J.ring()->reduce(h);
  if (!monomial_regime(hr, J)) throw std::invalid_argument("newton_verdict: needs a monomial h and a monomial ideal");
  MonomialIdeal Jm = MonomialIdeal::from_ideal(J).power(m);
  auto w = newton_hull_weights(exponent_of(hr), Jm);
  if (!w) {
    ClosureVerdict v;
    v.status = ClosureStatus::NonMemberCertified;
    return v;
  }
  return member_with({CertificateKind::Newton, 0, 0, std::move(*w)});
}

bool recheck(const ClosureVerdict& v, const Poly& h, const Ideal& J, unsigned m) {
  if (!v.member()) return false;
  const auto& c = v.certificate;
  if (!c.via.empty()) {
    if (c.via.size() != c.via_verdicts.size()) return false;
    for (std::size_t i = 0; i < c.via.size(); ++i)
      if (!recheck(c.via_verdicts[i], c.via[i], J, 1)) return false;
    ClosureVerdict inner = v;
    inner.certificate.via.clear();
    inner.certificate.via_verdicts.clear();
    return recheck(inner, h, Ideal(J.ring(), c.via), m);
  }
  const auto& R = J.ring();
  const Poly hr = R->reduce(h);
  switch (c.kind) {
    case CertificateKind::Power:
      // Plain multiset powers, independent of the monomial shortcut.
      return c.s > 0 && ideal_member(R->pow(hr, c.s), ideal_power(J, m * c.s));
    case CertificateKind::Reduction: {
      Ideal Jm = ideal_power(J, m);
      Ideal K = ideal_sum(Jm, Ideal(R, std::vector<Poly>{hr}));
      Ideal KN(R, std::vector<Poly>{R->one()});
      for (unsigned i = 0; i < c.N; ++i) KN = ideal_product(KN, K);
      return ideal_equal(ideal_product(Jm, KN), ideal_product(KN, K));
    }
    case CertificateKind::Newton: {
      if (!monomial_regime(hr, J)) return false;
      const auto gens = MonomialIdeal::from_ideal(J).power(m).exponents();
      if (c.newton_weights.size() != gens.size()) return false;
      Coeff total = 0;
      const Exponent e = exponent_of(hr);
      std::vector<Coeff> point(e.size(), Coeff(0));
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (sgn(c.newton_weights[j]) < 0) return false;
        total += c.newton_weights[j];
        for (std::size_t i = 0; i < e.size(); ++i) point[i] += c.newton_weights[j] * gens[j][i];
      }
      if (total != 1) return false;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (point[i] > e[i]) return false;
      return true;
    }
    case CertificateKind::None:
      break;
  }
  return false;
}

ClosureVerdict closure_member(const Poly& h, const Ideal& J, unsigned m, const ClosureCaps& caps) {
  const Poly hr = J.ring()->reduce(h);
  std::optional<ClosureVerdict> newton;
  if (monomial_regime(hr, J)) {
    newton = newton_verdict(hr, J, m);
    if (!newton->member()) return *newton;
  }
  auto v = search_power_certificate(hr, J, m, caps.power_s);
  if (v.member()) return v;
  v = reduction_member(hr, J, m, caps.reduction_N);
  if (v.member()) return v;
  if (newton) return *newton;
  return undecided(std::max(caps.power_s, caps.reduction_N));
}

ClosureGenerators closure_generators(const Ideal& J, unsigned m, const ClosureCaps& caps) {
  if (!is_monomial_ideal(J)) throw std::invalid_argument("closure_generators: J is not monomial; supply candidates");
  MonomialIdeal cl = monomial_integral_closure(MonomialIdeal::from_ideal(J), m);
  ClosureGenerators out;
  for (const auto& e : cl.exponents()) {
    Poly g = cl.monomial(e);
    auto v = closure_member(g, J, m, caps);
    if (v.member())
      out.accepted.push_back({g, std::move(v)});
    else
      out.rejected.push_back(g);
  }
  return out;
}

ClosureGenerators closure_generators(const Ideal& J, unsigned m, const std::vector<Poly>& candidates,
                                     const ClosureCaps& caps) {
  ClosureGenerators out;
  for (const auto& c : candidates) {
    Poly g = J.ring()->reduce(c);
    auto v = closure_member(g, J, m, caps);
    if (v.member())
      out.accepted.push_back({g, std::move(v)});
    else
      out.rejected.push_back(g);
  }
  return out;
}

std::string to_string(ClosureStatus s) {
  switch (s) {
    case ClosureStatus::Member: return "Member";
    case ClosureStatus::NonMemberCertified: return "NonMemberCertified";
    case ClosureStatus::UndecidedAtCap: return "UndecidedAtCap";
  }
  return "";
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::None: return "none";
    case CertificateKind::Power: return "power";
    case CertificateKind::Reduction: return "reduction";
    case CertificateKind::Newton: return "newton";
  }
  return "";
}

nlohmann::json to_json(const ClosureVerdict& v) {
  nlohmann::json j;
  j["status"] = to_string(v.status);
  nlohmann::json c;
  c["kind"] = to_string(v.certificate.kind);
  switch (v.certificate.kind) {
    case CertificateKind::Power: c["s"] = v.certificate.s; break;
    case CertificateKind::Reduction: c["N"] = v.certificate.N; break;
    case CertificateKind::Newton: {
      nlohmann::json w = nlohmann::json::array();
      for (const auto& x : v.certificate.newton_weights) w.push_back(x.get_str());
      c["weights"] = std::move(w);
      break;
    }
    case CertificateKind::None: break;
  }
  if (!v.certificate.via.empty()) {
    nlohmann::json via = nlohmann::json::array();
    for (std::size_t i = 0; i < v.certificate.via.size(); ++i)
      via.push_back({{"generator", v.certificate.via[i].to_string()}, {"verdict", to_json(v.certificate.via_verdicts[i])}});
    c["via"] = std::move(via);
  }
  j["certificate"] = std::move(c);
  if (v.status == ClosureStatus::UndecidedAtCap) j["bound"] = v.bound;
  return j;
}

}  // namespace skoda
